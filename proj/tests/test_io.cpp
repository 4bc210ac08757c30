#include "doctest.h"
#include "oracles.hpp"

#include "momentcut/io.hpp"

using namespace momentcut;

namespace {

bool same_halfspaces(const Polyhedron& a, const Polyhedron& b) {
    const auto& x = a.h().halfspaces;
    const auto& y = b.h().halfspaces;
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i].normal != y[i].normal || x[i].offset != y[i].offset) return false;
    return true;
}

} // namespace

TEST_CASE("document parser") {
    const auto d = io::parse_document("# header\nname: x  # trailing\nrows: 2\n1 2\n3/4 5\n\n[other]\nk: v\n");
    CHECK(d.section("").at("name").value == "x");
    CHECK(d.section("").at("rows").rows.size() == 2);
    CHECK(d.section("").at("rows").rows[1][0] == "3/4");
    CHECK(d.section("other").at("k").value == "v");
    CHECK_THROWS_AS(d.section("missing"), ParseError);
    CHECK_THROWS_AS(io::parse_document("1 2\n"), ParseError);
    CHECK_THROWS_AS(io::parse_document("a: 1\na: 2\n"), ParseError);
    CHECK_THROWS_AS(io::parse_document("[s]\n[s]\n"), ParseError);
    CHECK_THROWS_AS(io::parse_document("[bad\n"), ParseError);
}

TEST_CASE("polyhedron round trip") {
    std::mt19937_64 rng(503);
    std::vector<Polyhedron> cases = {Polyhedron::empty(2), Polyhedron::universe(3), Polyhedron::point(qvec({Rational(1, 3), -2})),
                                     Polyhedron::from_h(oracle::box(2, Rational(-1, 2), 3))};
    HPolyhedron slab;
    slab.dim = 3;
    slab.halfspaces = {{zvec({1, 0, 0}), Rational(-7, 5)}};
    slab.equalities = {{zvec({0, 1, 1}), 2}};
    cases.push_back(Polyhedron::from_h(slab));
    for (int i = 0; i < 10; ++i) cases.push_back(oracle::random_polytope(rng, 1 + i % 4, 3));
    for (const auto& p : cases) {
        const std::string text = io::write_polyhedron(p);
        const Polyhedron q = io::read_polyhedron(text);
        CHECK(q == p);
        CHECK(same_halfspaces(q, p));
        CHECK(io::write_polyhedron(q) == text);
    }
}

TEST_CASE("polyhedron reader variants") {
    const Polyhedron sq = oracle::unit_square();
    CHECK(io::read_polyhedron("dim: 2\nvertices: 4\n0 0\n1 0\n0 1\n1 1\n") == sq);
    CHECK(io::read_polyhedron("dim: 2\nhalfspaces: 4\n1 0 0\n0 1 0\n-1 0 -1\n0 -1 -1\n") == sq);
    // Non-primitive normals are rescaled.
    CHECK(io::read_polyhedron("dim: 1\nhalfspaces: 1\n2 1\n") == io::read_polyhedron("dim: 1\nhalfspaces: 1\n1 1/2\n"));
    CHECK_THROWS_AS(io::read_polyhedron("dim: 2\nvertices: 1\n0 0\nhalfspaces: 1\n1 0 1\n"), ParseError);
    CHECK_THROWS_AS(io::read_polyhedron("dim: 2\nvertices: 2\n0 0\n"), ParseError);
    CHECK_THROWS_AS(io::read_polyhedron("dim: 2\nvertices: 1\n0 0 0\n"), ParseError);
    CHECK_THROWS_AS(io::read_polyhedron("dim: 2\nrays: 1\n1 0\n"), ParseError);
    CHECK_THROWS_AS(io::read_polyhedron("dim: 1\nrays: 1\n1/2\nvertices: 1\n0\n"), ParseError);
    CHECK_THROWS_AS(io::read_polyhedron("dim: 2\n"), ParseError);
    CHECK_THROWS_AS(io::read_polyhedron("type: cutspec\ndim: 1\nhalfspaces: 0\n"), ParseError);
}

TEST_CASE("labeled polytope, cut spec and cut result round trips") {
    std::mt19937_64 rng(509);
    for (int i = 0; i < 6; ++i) {
        const auto m = oracle::random_labeled_polytope(rng, 1 + i % 3, 2, false);
        const auto back = io::read_labeled_polytope(io::write_labeled_polytope(m));
        CHECK(back.polytope == m.polytope);
        CHECK(same_halfspaces(back.polytope, m.polytope));
        CHECK(back.facet_labels == m.facet_labels);

        const auto c = oracle::random_cut(rng, 1 + i % 3);
        const auto cb = io::read_cutspec(io::write_cutspec(c));
        CHECK(Polyhedron::from_h(cb.p) == Polyhedron::from_h(c.p));
        CHECK(io::write_cutspec(cb) == io::write_cutspec(c));

        if (!is_generic_cut(m, c).ok || intersect(m.polytope, Polyhedron::from_h(c.p)).is_empty()) continue;
        const auto r = symplectic_cut(m, c);
        const std::string text = io::write_cut_result(r, is_compact_cut(m, c));
        const io::CutOutput parsed = io::read_cut_result(text);
        CHECK(parsed == io::CutOutput{r.cut, is_compact_cut(m, c), r.labels_flagged});
    }
    // Missing labels default to 1.
    const auto plain = io::read_labeled_polytope("dim: 1\nhalfspaces: 2\n1 0\n-1 -1\n");
    CHECK(plain.facet_labels == std::map<int, int>{{0, 1}, {1, 1}});
    CHECK_THROWS_AS(io::read_labeled_polytope("dim: 1\nhalfspaces: 2\n1 0\n-1 -1\nlabels: 0=1 0=2\n"), ParseError);
    CHECK_THROWS_AS(io::read_cutspec("type: cutspec\ndim: 1\nhalfspaces: 0\nequalities: 0\n"), ParseError);
}

TEST_CASE("matrix, slice data and local cone round trips") {
    QMatrix m(2, 3);
    m << Rational(1), Rational(-2, 3), Rational(0), Rational(5), Rational(1, 7), Rational(-1);
    CHECK(io::read_matrix(io::write_matrix(m)) == m);
    CHECK_THROWS_AS(io::read_matrix("matrix: 2 2\n1 2\n"), ParseError);

    SliceRepData d;
    d.ambient_dim = 2;
    d.stabilizer_subalgebra = {qvec({1, 0})};
    d.weights = {qvec({1}), qvec({Rational(-1, 2)})};
    d.lift = QMatrix(2, 1);
    d.lift << Rational(1), Rational(3);
    d.structure_group_order = 2;
    const SliceRepData back = io::read_slice_data(io::write_slice_data(d));
    CHECK(back.ambient_dim == 2);
    CHECK(back.stabilizer_subalgebra == d.stabilizer_subalgebra);
    CHECK(back.weights == d.weights);
    CHECK(back.lift == d.lift);
    CHECK(back.structure_group_order == 2);

    SliceRepData free_orbit;
    free_orbit.ambient_dim = 3;
    free_orbit.weights = {QVector(0)};
    const SliceRepData fb = io::read_slice_data(io::write_slice_data(free_orbit));
    CHECK(fb.ambient_dim == 3);
    CHECK(fb.stabilizer_subalgebra.empty());
    CHECK(fb.weights.size() == 1);

    const LocalMomentCone c = local_moment_cone(qvec({1, 2}), d);
    const LocalMomentCone cb = io::read_local_cone(io::write_local_cone(c));
    CHECK(cb.vertex == c.vertex);
    CHECK(cb.lineality == c.lineality);
    CHECK(cb.generators == c.generators);
    CHECK(cb.set == c.set);
}

TEST_CASE("cloud round trip is bit exact") {
    const SampleCloud c = schur_horn_sample({{2.5, 1, -0.25}}, 300, 99);
    const SampleCloud back = io::read_cloud(io::write_cloud(c));
    CHECK(back.points == c.points);
    CHECK(back.seed == 99);
    CHECK(back.generator_id == kSchurHornGenerator);
    CHECK(io::write_cloud(back) == io::write_cloud(c));
    CHECK_THROWS_AS(io::read_cloud("generator_id: x\nseed: 1\ncount: 2\ndim: 1\n0.5\n"), ParseError);
    CHECK_THROWS_AS(io::read_cloud("generator_id: x\nseed: 1\ncount: 1\ndim: 1\nnan\n"), ParseError);
}

TEST_CASE("certificate round trip") {
    const auto a2 = parse_root_system_name("A2");
    const Polyhedron hex_plus = intersect(kostant_polytope(a2, qvec({1, 1})), Polyhedron::from_h(chamber(a2)));
    for (const Polyhedron& p : {hex_plus, Polyhedron::point(qvec({2, 0}))}) {
        const auto c = certify_moment_set(a2, p, bounding_window(p));
        const std::string text = io::write_certificate(a2, c);
        const auto f = io::read_certificate(text);
        CHECK(f.root_system == "A2");
        CHECK(f.certificate.chamber_wall == c.chamber_wall);
        CHECK(f.certificate.window == c.window);
        CHECK(f.certificate.local_part == c.local_part);
        CHECK(f.certificate.assembled == c.assembled);
        CHECK(io::write_certificate(a2, f.certificate) == text);
    }
    CHECK_THROWS_AS(io::read_certificate("type: certificate\nrootsys: A2\nwall: {0}\n"), ParseError);
}

TEST_CASE("svg rendering") {
    const auto a2 = parse_root_system_name("A2");
    const Polyhedron hex = kostant_polytope(a2, qvec({1, 1}));
    const std::string svg = io::render_svg({hex, Polyhedron::point(qvec({0, 0})), Polyhedron::from_h(chamber(a2))});
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("<polygon") != std::string::npos);
    CHECK(svg.find("<circle") != std::string::npos);
    CHECK(svg == io::render_svg({hex, Polyhedron::point(qvec({0, 0})), Polyhedron::from_h(chamber(a2))}));
    CHECK_THROWS_AS(io::render_svg({Polyhedron::point(qvec({1, 2, 3}))}), UnsupportedTypeError);
}
