#include "cli.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

#include "momentcut/io.hpp"

namespace momentcut::cli {

namespace {

/// Integers, fractions "p/q" and decimals "a.b", all exact.
Rational parse_number(const std::string& s) {
    const auto dot = s.find('.');
    if (dot == std::string::npos) return parse_rational(s);
    const std::string frac = s.substr(dot + 1);
    std::string whole = s.substr(0, dot);
    const bool negative = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole = whole.substr(1);
    if ((whole.empty() && frac.empty()) || frac.find_first_not_of("0123456789") != std::string::npos ||
        whole.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("not a number: '" + s + "'");
    Rational q = whole.empty() ? Rational(0) : parse_rational(whole);
    if (!frac.empty()) {
        Integer den(1);
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        q += Rational(Integer(frac), den);
    }
    return negative ? Rational(-q) : q;
}

QVector parse_vector(const std::vector<std::string>& toks) {
    QVector x(static_cast<Eigen::Index>(toks.size()));
    for (std::size_t i = 0; i < toks.size(); ++i) x(static_cast<Eigen::Index>(i)) = parse_number(toks[i]);
    return x;
}

std::string rootsys_text(const RootSystem& rs) {
    std::ostringstream o;
    o << "name: " << rs.name() << "\nrank: " << rs.rank << "\n";
    o << "weyl_group_order: " << weyl_group_order(rs) << "\n";
    o << "cartan_matrix: " << rs.rank << "\n";
    for (Eigen::Index i = 0; i < rs.cartan_matrix.rows(); ++i) {
        for (Eigen::Index j = 0; j < rs.cartan_matrix.cols(); ++j) o << (j ? " " : "") << rs.cartan_matrix(i, j);
        o << "\n";
    }
    o << "inner_product: " << rs.rank << "\n";
    for (Eigen::Index i = 0; i < rs.inner_product.rows(); ++i) {
        for (Eigen::Index j = 0; j < rs.inner_product.cols(); ++j) o << (j ? " " : "") << io::format(rs.inner_product(i, j));
        o << "\n";
    }
    auto vectors = [&](const char* key, const std::vector<QVector>& vs) {
        o << key << ": " << vs.size() << "\n";
        for (const auto& v : vs) {
            for (Eigen::Index i = 0; i < v.size(); ++i) o << (i ? " " : "") << io::format(v(i));
            o << "\n";
        }
    };
    vectors("simple_roots", rs.simple_roots);
    vectors("positive_roots", rs.positive_roots);
    return o.str();
}

struct Emitter {
    std::ostream& out;
    std::string path;
    void operator()(const std::string& text) const {
        if (path.empty())
            out << text;
        else
            io::write_file(path, text);
    }
};

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact moment polytopes, symplectic cuts and Weyl chambers", "momentcut"};
    app.require_subcommand(1);
    std::string output;

    std::string rs_name, file_a, file_b, window_file;
    std::vector<std::string> numbers, files;
    std::size_t count = 10000;
    std::uint64_t seed = 0;
    double eps = ToleranceConfig{}.containment_eps;

    auto with_output = [&](CLI::App* sub) { sub->add_option("-o,--output", output, "Output file (default: standard output)"); };

    auto* rootsys = app.add_subcommand("rootsys", "Print root data");
    rootsys->add_option("name", rs_name, "Root system, e.g. A2")->required();
    with_output(rootsys);

    auto* orbit = app.add_subcommand("orbit-hull", "Kostant polytope of a dominant weight");
    orbit->add_option("name", rs_name)->required();
    orbit->add_option("lambda", numbers, "Weight coordinates")->required();
    with_output(orbit);

    auto* cut = app.add_subcommand("cut", "Symplectic cut of a labeled polytope");
    cut->add_option("polytope", file_a)->required();
    cut->add_option("cutspec", file_b)->required();
    with_output(cut);

    auto* proj = app.add_subcommand("project", "Image of a polyhedron under a rational matrix");
    proj->add_option("polytope", file_a)->required();
    proj->add_option("matrix", file_b)->required();
    with_output(proj);

    auto* cone = app.add_subcommand("local-cone", "Local moment cone from slice data");
    cone->add_option("slicedata", file_a)->required();
    with_output(cone);

    auto* wall = app.add_subcommand("principal-wall", "Smallest chamber wall containing a polyhedron");
    wall->add_option("name", rs_name)->required();
    wall->add_option("polytope", file_a)->required();
    with_output(wall);

    auto* sh = app.add_subcommand("schur-horn", "Sample Schur-Horn diagonals and check containment");
    sh->add_option("lambda", numbers, "Spectrum, weakly decreasing")->required();
    sh->add_option("--count", count, "Number of samples")->check(CLI::PositiveNumber);
    sh->add_option("--seed", seed, "Random seed");
    sh->add_option("--eps", eps, "Containment tolerance")->check(CLI::PositiveNumber);
    with_output(sh);

    auto* cert = app.add_subcommand("certify", "Certify a moment set on a bounded window");
    cert->add_option("name", rs_name)->required();
    cert->add_option("input", file_a, "Polyhedron or sample cloud file")->required();
    cert->add_option("--window", window_file, "Window polytope (default: bounding box of the input)");
    cert->add_option("--eps", eps, "Tolerance for sampled inputs")->check(CLI::PositiveNumber);
    with_output(cert);

    auto* svg = app.add_subcommand("render-svg", "Render 2-dimensional polyhedra");
    svg->add_option("polytopes", files)->required();
    with_output(svg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }

    const Emitter emit{out, output};
    try {
        if (rootsys->parsed()) {
            emit(rootsys_text(parse_root_system_name(rs_name)));
        } else if (orbit->parsed()) {
            const RootSystem rs = parse_root_system_name(rs_name);
            emit(io::write_polyhedron(kostant_polytope(rs, parse_vector(numbers))));
        } else if (cut->parsed()) {
            const LabeledPolytope m = io::read_labeled_polytope(io::read_file(file_a));
            const CutSpec c = io::read_cutspec(io::read_file(file_b));
            const CutResult r = symplectic_cut(m, c);
            emit(io::write_cut_result(r, is_compact_cut(m, c)));
        } else if (proj->parsed()) {
            const Polyhedron p = io::read_polyhedron(io::read_file(file_a));
            emit(io::write_polyhedron(project(p, io::read_matrix(io::read_file(file_b)))));
        } else if (cone->parsed()) {
            const std::string text = io::read_file(file_a);
            const SliceRepData d = io::read_slice_data(text);
            QVector x = QVector::Zero(d.ambient_dim);
            if (const io::Entry* e = io::parse_document(text).section("").find("point")) {
                std::istringstream in(e->value);
                std::vector<std::string> toks;
                for (std::string t; in >> t;) toks.push_back(t);
                x = parse_vector(toks);
            }
            emit(io::write_local_cone(local_moment_cone(x, d)));
        } else if (wall->parsed()) {
            const RootSystem rs = parse_root_system_name(rs_name);
            const ChamberWall w = principal_wall(rs, io::read_polyhedron(io::read_file(file_a)));
            emit("wall: " + wall_id(w) + "\nwall_dim: " + std::to_string(w.dim) + "\n");
        } else if (sh->parsed()) {
            const QVector lambda = parse_vector(numbers);
            Spectrum s;
            std::vector<Rational> exact;
            for (Eigen::Index i = 0; i < lambda.size(); ++i) {
                s.values.push_back(to_double(lambda(i)));
                exact.push_back(lambda(i));
            }
            const SampleCloud cloud = schur_horn_sample(s, count, seed);
            const ContainmentReport r = containment(schur_horn_polytope(exact), cloud, eps);
            if (!output.empty()) io::write_file(output, io::write_cloud(cloud));
            out << "contained: " << r.contained << "/" << r.total << "\n";
            if (r.contained != r.total) {
                err << "first sample outside the permutohedron: index " << *r.first_outside << "\n";
                return kCertificationFailure;
            }
        } else if (cert->parsed()) {
            const RootSystem rs = parse_root_system_name(rs_name);
            const std::string text = io::read_file(file_a);
            const bool sampled = io::parse_document(text).section("").find("generator_id") != nullptr;
            MomentSetCertificate c;
            if (sampled) {
                const SampleCloud cloud = io::read_cloud(text);
                Polyhedron window;
                if (!window_file.empty()) {
                    window = io::read_polyhedron(io::read_file(window_file));
                } else {
                    std::vector<QVector> pts;
                    for (const auto& x : cloud.points) {
                        QVector q(x.size());
                        for (Eigen::Index i = 0; i < x.size(); ++i) q(i) = rationalize(x(i), Rational(1, 1000000));
                        pts.push_back(q);
                    }
                    window = bounding_window(Polyhedron::from_points(rs.rank, pts));
                }
                c = certify_moment_set(rs, cloud, window, eps);
            } else {
                const Polyhedron p = io::read_polyhedron(text);
                const Polyhedron window =
                    window_file.empty() ? bounding_window(p) : io::read_polyhedron(io::read_file(window_file));
                c = certify_moment_set(rs, p, window);
            }
            emit(io::write_certificate(rs, c));
        } else if (svg->parsed()) {
            std::vector<Polyhedron> ps;
            for (const auto& f : files) ps.push_back(io::read_polyhedron(io::read_file(f)));
            try {
                emit(io::render_svg(ps));
            } catch (const UnsupportedTypeError& e) {
                err << e.name() << ": " << e.what() << "\n";
                return kUsage;
            }
        }
    } catch (const CertificationFailure& e) {
        err << e.name() << ": " << e.what() << "\nwitness:";
        for (Eigen::Index i = 0; i < e.witness().size(); ++i) err << " " << io::format(e.witness()(i));
        err << "\n";
        return kCertificationFailure;
    } catch (const Error& e) {
        err << e.name() << ": " << e.what() << "\n";
        return kDomainError;
    }
    return kSuccess;
}

} // namespace momentcut::cli
