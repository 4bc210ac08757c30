// Acceptance criteria. `acceptance` runs every criterion and prints one line
// each; `acceptance <id>` runs one (ids 1a, 1b, 2..8). Exit status is nonzero
// when any selected criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "cli.hpp"
#include "momentcut/io.hpp"
#include "oracles.hpp"

using namespace momentcut;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double x, int digits = 4) {
    std::ostringstream o;
    o.precision(digits);
    o << x;
    return o.str();
}

constexpr std::uint64_t kSeed = 20240601;

// 1. Schur-Horn containment and hull coverage for (2, 1, 0).
Outcome criterion_1a() {
    const auto t0 = Clock::now();
    const SampleCloud cloud = schur_horn_sample({{2, 1, 0}}, 10000, kSeed);
    const auto r = containment(schur_horn_polytope({Rational(2), Rational(1), Rational(0)}), cloud, 1e-9);
    const double t = seconds_since(t0);
    return {r.contained == 10000 && t < 30,
            "containment " + std::to_string(r.contained) + "/10000 within 1e-9, " + fmt(t, 3) + " s"};
}

Outcome criterion_1b() {
    const auto t0 = Clock::now();
    const SampleCloud cloud = schur_horn_sample({{2, 1, 0}}, 10000, kSeed);
    const Polyhedron perm = schur_horn_polytope({Rational(2), Rational(1), Rational(0)});
    const double cov = hull_coverage(cloud, perm, 100000, kSeed + 1);
    const double t = seconds_since(t0);
    return {cov >= 0.99 && t < 30, "hull coverage " + fmt(cov) + " (target >= 0.99, 1e5 probes), " + fmt(t, 3) + " s"};
}

// 2. Kostant vertex counts.
Outcome criterion_2() {
    struct Case {
        const char* rs;
        QVector lambda;
        std::size_t expected;
    };
    const std::vector<Case> cases = {{"A2", qvec({1, 1}), 6}, {"B2", qvec({2, 1}), 8}, {"G2", qvec({1, 1}), 12}, {"A2", qvec({1, 0}), 3}};
    Outcome o;
    for (const auto& c : cases) {
        const auto t0 = Clock::now();
        const std::size_t n = kostant_polytope(parse_root_system_name(c.rs), c.lambda).v().vertices.size();
        const double t = seconds_since(t0);
        if (n != c.expected || t >= 1) o.pass = false;
        o.detail += std::string(o.detail.empty() ? "" : ", ") + c.rs + " " + std::to_string(n) + "/" + std::to_string(c.expected);
    }
    return o;
}

// 3. Cut identity, nested cuts and compactness on 100 random generic instances.
Outcome criterion_3() {
    std::mt19937_64 rng(kSeed + 3);
    int done = 0, identity = 0, nested = 0, nested_ok = 0, compact_ok = 0;
    for (int trial = 0; done < 100 && trial < 5000; ++trial) {
        const Eigen::Index n = 1 + trial % 3;
        const auto m = oracle::random_labeled_polytope(rng, n, 2, trial % 2 == 0);
        const auto c = oracle::random_cut(rng, n);
        if (!is_generic_cut(m, c).ok) continue;
        const Polyhedron direct = intersect(m.polytope, Polyhedron::from_h(c.p));
        if (direct.is_empty()) continue;
        ++done;
        const auto r = symplectic_cut(m, c);
        if (r.cut.polytope == direct) ++identity;

        CutSpec inner = c;
        inner.p.halfspaces[0].offset += Rational(1, 3);
        if (is_generic_cut(m, inner).ok && !intersect(m.polytope, Polyhedron::from_h(inner.p)).is_empty() &&
            is_generic_cut(r.cut, inner).ok) {
            ++nested;
            const auto twice = symplectic_cut(r.cut, inner);
            const auto once = symplectic_cut(m, inner);
            if (twice.cut.polytope == once.cut.polytope && twice.cut.facet_labels == once.cut.facet_labels) ++nested_ok;
        }

        std::vector<HalfSpace> all = m.polytope.h().halfspaces;
        all.push_back(c.p.halfspaces[0]);
        if (is_compact_cut(m, c) == oracle::bounded_by_recession_cone(all, n)) ++compact_ok;
    }
    return {done == 100 && identity == 100 && nested_ok == nested && nested > 0 && compact_ok == 100,
            "identity " + std::to_string(identity) + "/" + std::to_string(done) + ", nested " + std::to_string(nested_ok) + "/" +
                std::to_string(nested) + ", compactness " + std::to_string(compact_ok) + "/" + std::to_string(done)};
}

// 4. The complex line: (-inf, 0] cut by [-1, inf).
Outcome criterion_4() {
    HPolyhedron half;
    half.dim = 1;
    half.halfspaces = {{zvec({-1}), 0}};
    const auto m = make_labeled_polytope(half);
    CutSpec c;
    c.p.dim = 1;
    c.p.halfspaces = {{zvec({1}), -1}};
    const auto r = symplectic_cut(m, c);
    const bool segment = r.cut.polytope == Polyhedron::from_points(1, {qvec({-1}), qvec({0})});
    bool labels = r.cut.facet_labels.size() == 2;
    for (const auto& [k, v] : r.cut.facet_labels) labels = labels && v == 1;
    const bool compact = is_compact_cut(m, c);

    const std::string dir = MOMENTCUT_FIXTURES;
    const std::string a1 = dir + "/halfline.poly", a2 = dir + "/ray.cutspec";
    const char* argv[] = {"momentcut", "cut", a1.c_str(), a2.c_str()};
    std::ostringstream out, err;
    const int code = cli::run(4, argv, out, err);
    const bool fixture = code == 0 && out.str() == io::read_file(dir + "/halfline_cut.expected");
    return {segment && labels && compact && fixture,
            std::string("segment [-1,0] ") + (segment ? "yes" : "no") + ", labels 1,1 " + (labels ? "yes" : "no") +
                ", compact " + (compact ? "true" : "false") + ", CLI fixture " + (fixture ? "bit-exact" : "differs")};
}

SliceRepData full_stabilizer(Eigen::Index n, const std::vector<QVector>& weights) {
    SliceRepData d;
    d.ambient_dim = n;
    for (Eigen::Index i = 0; i < n; ++i) d.stabilizer_subalgebra.push_back(QVector::Unit(n, i));
    d.weights = weights;
    d.lift = QMatrix::Identity(n, n);
    return d;
}

// 5. Local cone equals tangent cone.
Outcome criterion_5() {
    std::mt19937_64 rng(kSeed + 5);
    int vertices = 0, ok = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const Eigen::Index n = 1 + trial % 3;
        const auto m = oracle::random_labeled_polytope(rng, n, 1 + trial % 3);
        for (const auto& v : m.polytope.v().vertices) {
            std::vector<QVector> w;
            for (const auto& z : vertex_weights(m, v)) w.push_back(to_rational(z));
            ++vertices;
            if (local_moment_cone(v, full_stabilizer(n, w)).set == tangent_cone(m.polytope, v)) ++ok;
        }
    }
    const auto a2 = parse_root_system_name("A2");
    const QVector lambda = qvec({1, 2});
    const Polyhedron hex = Polyhedron::from_points(2, weyl_orbit(a2, lambda));
    int hex_ok = 0;
    for (const auto& g : weyl_group_elements(a2)) {
        const QVector wl = g.matrix * lambda;
        std::vector<QVector> gens;
        for (const auto& a : a2.simple_roots) gens.push_back(g.matrix * (reflection(a2, a) * lambda) - wl);
        if (local_moment_cone(wl, full_stabilizer(2, gens)).set == tangent_cone(hex, wl)) ++hex_ok;
    }
    return {ok == vertices && hex_ok == 6, "random polytope vertices " + std::to_string(ok) + "/" + std::to_string(vertices) +
                                               ", A2 hexagon vertices " + std::to_string(hex_ok) + "/6"};
}

// 6. Reconstruction from tangent cones at face witnesses.
Outcome criterion_6() {
    std::mt19937_64 rng(kSeed + 6);
    int done = 0, ok = 0;
    for (int trial = 0; done < 50 && trial < 1000; ++trial) {
        const Eigen::Index n = 1 + trial % 3;
        const Polyhedron x = oracle::random_polytope(rng, n, 2);
        const Polyhedron s = translate(oracle::random_polytope(rng, n, 1), oracle::random_point(rng, n, -2, 2));
        const Polyhedron expected = intersect(x, s);
        if (expected.is_empty()) continue;
        ++done;
        try {
            if (reconstruct_from_tangent_cones(face_witnesses(x, s), x, s) == expected) ++ok;
        } catch (const Error&) {
        }
    }
    return {done == 50 && ok == 50, std::to_string(ok) + "/" + std::to_string(done) + " pairs reconstructed exactly"};
}

// 7. Closure identity for chamber faces.
Outcome criterion_7() {
    std::mt19937_64 rng(kSeed + 7);
    const char* names[] = {"A2", "B2", "G2", "A3", "B3", "C3"};
    int done = 0, ok = 0;
    for (int trial = 0; done < 30 && trial < 300; ++trial) {
        const auto rs = parse_root_system_name(names[trial % 6]);
        const auto all = walls(rs);
        const ChamberWall& w = all[rng() % all.size()];
        const Polyhedron cone = Polyhedron::from_h(chamber(rs));
        const Polyhedron closure = wall_closure(rs, w);
        const FaceDescriptor* face = nullptr;
        const auto fs = faces(cone);
        for (const auto& f : fs)
            if (face_closure(cone, f) == closure) face = &f;
        if (!face) continue;
        // A polytope with the wall's relative-interior point in its interior.
        const Polyhedron p = translate(oracle::random_polytope(rng, rs.rank, 2), w.relint_point);
        ++done;
        try {
            if (closure_of_face_intersection(cone, *face, p) == intersect(closure, p)) ++ok;
        } catch (const Error&) {
        }
    }
    // Fixture violating the precondition: the open quadrant against a segment on its boundary.
    HPolyhedron q;
    q.dim = 2;
    q.halfspaces = {{zvec({1, 0}), 0}, {zvec({0, 1}), 0}};
    const Polyhedron quadrant = Polyhedron::from_h(q);
    bool raised = false;
    try {
        closure_of_face_intersection(quadrant, faces(quadrant).back(), Polyhedron::from_points(2, {qvec({0, 0}), qvec({1, 0})}));
    } catch (const PreconditionError&) {
        raised = true;
    }
    return {done == 30 && ok == 30 && raised, std::to_string(ok) + "/" + std::to_string(done) +
                                                  " pairs exact, precondition fixture " + (raised ? "raises" : "does not raise")};
}

// 8. Double-description round trip.
Outcome criterion_8() {
    std::mt19937_64 rng(kSeed + 8);
    const auto t0 = Clock::now();
    int ok = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const Eigen::Index n = 1 + trial % 4;
        const int m = 1 + static_cast<int>(rng() % 12);
        HPolyhedron h;
        h.dim = n;
        for (int i = 0; i < m; ++i) {
            const ZVector a = oracle::random_normal(rng, n);
            const Rational b = oracle::random_rational(rng, -3, 1);
            if (i > 0 && rng() % 8 == 0)
                h.equalities.push_back({a, b});
            else
                h.halfspaces.push_back({a, b});
        }
        const VPolyhedron v = h_to_v(h);
        const HPolyhedron back = v_to_h(v);
        // Exact set equality checked against the original constraints, both ways.
        bool same = true;
        const Polyhedron original = Polyhedron::from_h(h), round = Polyhedron::from_h(back);
        for (const auto& x : round.v().vertices) same = same && original.contains(x);
        for (const auto& x : original.v().vertices) same = same && round.contains(x);
        same = same && original == round && h_to_v(back).vertices == v.vertices && h_to_v(back).rays == v.rays;
        if (same) ++ok;
    }
    const double t = seconds_since(t0);
    return {ok == 200 && t < 60, std::to_string(ok) + "/200 round trips exact, " + fmt(t, 3) + " s"};
}

struct Criterion {
    std::string id;
    std::string title;
    std::function<Outcome()> run;
};

} // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {"1a", "Schur-Horn containment", criterion_1a},
        {"1b", "Schur-Horn hull coverage", criterion_1b},
        {"2", "Kostant vertex counts", criterion_2},
        {"3", "cut identity, nested cuts, compactness", criterion_3},
        {"4", "complex line cut", criterion_4},
        {"5", "local cone equals tangent cone", criterion_5},
        {"6", "reconstruction from tangent cones", criterion_6},
        {"7", "closure identity on chamber faces", criterion_7},
        {"8", "double-description round trip", criterion_8},
    };
    const std::string only = argc > 1 ? argv[1] : "";
    bool all_pass = true, matched = false;
    for (const auto& c : criteria) {
        if (!only.empty() && only != c.id) continue;
        matched = true;
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        all_pass = all_pass && o.pass;
        std::cout << "criterion " << c.id << " " << (o.pass ? "PASS" : "FAIL") << ": " << c.title << ": " << o.detail << std::endl;
    }
    if (only.empty() || only == "9") {
        matched = true;
        std::cout << "criterion 9 EXCLUDED: fiber connectedness is not observable from image data" << std::endl;
    }
    if (!matched) {
        std::cerr << "unknown criterion '" << only << "'\n";
        return 2;
    }
    return all_pass ? 0 : 1;
}
