#include "doctest.h"
#include "oracles.hpp"

#include "momentcut/lie_weyl.hpp"
#include "momentcut/local_cones.hpp"
#include "momentcut/toric_cuts.hpp"

using namespace momentcut;

namespace {

SliceRepData full_stabilizer(Eigen::Index n, const std::vector<QVector>& weights) {
    SliceRepData d;
    d.ambient_dim = n;
    for (Eigen::Index i = 0; i < n; ++i) d.stabilizer_subalgebra.push_back(QVector::Unit(n, i));
    d.weights = weights;
    d.lift = QMatrix::Identity(n, n);
    return d;
}

Polyhedron quadrant() {
    HPolyhedron h;
    h.dim = 2;
    h.halfspaces = {{zvec({1, 0}), 0}, {zvec({0, 1}), 0}};
    return Polyhedron::from_h(h);
}

} // namespace

TEST_CASE("local moment cone examples") {
    const auto c = local_moment_cone(qvec({0, 0}), full_stabilizer(2, {qvec({1, 0}), qvec({0, 1})}));
    CHECK(c.set == quadrant());
    CHECK(c.lineality.empty());

    SliceRepData free_orbit;
    free_orbit.ambient_dim = 2;
    const auto u = local_moment_cone(qvec({3, 4}), free_orbit);
    CHECK(u.set == Polyhedron::universe(2));

    const auto sq = make_labeled_polytope(oracle::box(2, 0, 1));
    std::vector<QVector> w;
    for (const auto& z : vertex_weights(sq, qvec({0, 0}))) w.push_back(to_rational(z));
    CHECK(local_moment_cone(qvec({0, 0}), full_stabilizer(2, w)).set == tangent_cone(sq.polytope, qvec({0, 0})));

    CHECK_THROWS_AS(local_moment_cone(qvec({0}), full_stabilizer(2, {})), InputShapeError);
    SliceRepData bad = full_stabilizer(2, {});
    bad.lift = QMatrix::Identity(2, 2) * Rational(2);
    CHECK_THROWS_AS(local_moment_cone(qvec({0, 0}), bad), InputShapeError);
}

TEST_CASE("partial stabilizer and lift independence") {
    // h = span(e1) in t = R^2; annihilator is span(e2).
    SliceRepData d;
    d.ambient_dim = 2;
    d.stabilizer_subalgebra = {qvec({1, 0})};
    d.weights = {qvec({1}), qvec({2})};
    d.lift = QMatrix(2, 1);
    d.lift << Rational(1), Rational(0);
    const auto c = local_moment_cone(qvec({0, 0}), d);
    HPolyhedron half;
    half.dim = 2;
    half.halfspaces = {{zvec({1, 0}), 0}};
    CHECK(c.set == Polyhedron::from_h(half));

    SliceRepData sheared = d;
    sheared.lift << Rational(1), Rational(5, 3);
    CHECK(local_moment_cone(qvec({0, 0}), sheared).set == c.set);
}

TEST_CASE("local cone closure and monotonicity") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 10; ++trial) {
        const Eigen::Index n = 2 + trial % 2;
        std::vector<QVector> w;
        for (int i = 0; i < 2; ++i) w.push_back(oracle::random_point(rng, n));
        const QVector x = oracle::random_point(rng, n);
        const auto c = local_moment_cone(x, full_stabilizer(n, w));
        for (int probe = 0; probe < 10; ++probe) {
            QVector y = x;
            for (const auto& g : c.generators) y += oracle::random_rational(rng, 0, 3) * g;
            CHECK(c.set.contains(y));
            for (const auto& l : c.lineality) CHECK(c.set.contains(QVector(y + oracle::random_rational(rng, -3, 3) * l)));
        }
        auto more = w;
        more.push_back(oracle::random_point(rng, n));
        CHECK(local_moment_cone(x, full_stabilizer(n, more)).set.includes(c.set));
    }
}

TEST_CASE("local cone theorem") {
    const Polyhedron sq = Polyhedron::from_h(oracle::box(2, 0, 1));
    const auto quad = local_moment_cone(qvec({0, 0}), full_stabilizer(2, {qvec({1, 0}), qvec({0, 1})}));
    CHECK(check_local_cone_theorem(sq, qvec({0, 0}), quad));
    SliceRepData hp;
    hp.ambient_dim = 2;
    hp.stabilizer_subalgebra = {qvec({1, 0})};
    hp.weights = {qvec({1})};
    hp.lift = QMatrix(2, 1);
    hp.lift << Rational(1), Rational(0);
    CHECK_FALSE(check_local_cone_theorem(sq, qvec({0, 0}), local_moment_cone(qvec({0, 0}), hp)));
    CHECK_THROWS_AS(check_local_cone_theorem(sq, qvec({2, 2}), quad), PointNotInSetError);

    const auto a2 = parse_root_system_name("A2");
    const QVector lambda = qvec({1, 2});
    const Polyhedron hex = Polyhedron::from_points(2, weyl_orbit(a2, lambda));
    for (const auto& g : weyl_group_elements(a2)) {
        const QVector wl = g.matrix * lambda;
        std::vector<QVector> gens;
        for (const auto& a : a2.simple_roots) gens.push_back(g.matrix * (reflection(a2, a) * lambda) - wl);
        CHECK(check_local_cone_theorem(hex, wl, local_moment_cone(wl, full_stabilizer(2, gens))));
    }
}

TEST_CASE("local cones of random labeled polytopes equal tangent cones") {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 6; ++trial) {
        const Eigen::Index n = 1 + trial % 3;
        const auto m = oracle::random_labeled_polytope(rng, n);
        for (const auto& v : m.polytope.v().vertices) {
            std::vector<QVector> w;
            for (const auto& z : vertex_weights(m, v)) w.push_back(to_rational(z));
            CHECK(local_moment_cone(v, full_stabilizer(n, w)).set == tangent_cone(m.polytope, v));
        }
    }
}

TEST_CASE("project hat cones") {
    HPolyhedron quadrant_chamber;
    quadrant_chamber.dim = 2;
    quadrant_chamber.halfspaces = {{zvec({1, 0}), 0}, {zvec({0, 1}), 0}};

    // {(t, x) : x >= 0, t >= x1 + x2}
    HPolyhedron hat;
    hat.dim = 3;
    hat.halfspaces = {{zvec({0, 1, 0}), 0}, {zvec({0, 0, 1}), 0}, {zvec({1, -1, -1}), 0}};
    const Polyhedron hp = Polyhedron::from_h(hat);
    CHECK(project_hat_cone(hp, quadrant_chamber) == quadrant());

    // Scaling the hat does not change the projection.
    const Polyhedron scaled = linear_image(hp, QMatrix(QMatrix::Identity(3, 3) * Rational(7, 2)));
    CHECK(project_hat_cone(scaled, quadrant_chamber) == quadrant());

    // {0} x C with C inside the chamber.
    const Polyhedron c = Polyhedron::from_v({3, {qvec({0, 0, 0})}, {zvec({0, 1, 1}), zvec({0, 1, 2})}, {}});
    CHECK(project_hat_cone(c, quadrant_chamber) == Polyhedron::from_v({2, {qvec({0, 0})}, {zvec({1, 1}), zvec({1, 2})}, {}}));

    const Polyhedron t_ray = Polyhedron::from_v({3, {qvec({0, 0, 0})}, {zvec({1, 0, 0})}, {}});
    CHECK(project_hat_cone(t_ray, quadrant_chamber) == Polyhedron::point(qvec({0, 0})));

    const Polyhedron shifted = Polyhedron::from_v({3, {qvec({1, 0, 0})}, {zvec({1, 0, 0})}, {}});
    CHECK_THROWS_AS(project_hat_cone(shifted, quadrant_chamber), NotAConeError);
}

TEST_CASE("scale invariance") {
    const auto quad = local_moment_cone(qvec({1, 1}), full_stabilizer(2, {qvec({1, 0}), qvec({0, 1})}));
    CHECK(scale_invariance_check(quad, 2));
    CHECK(scale_invariance_check(quad, Rational(1, 3)));
    CHECK_THROWS_AS(scale_invariance_check(quad, 0), DomainError);
    CHECK_THROWS_AS(scale_invariance_check(quad, -1), DomainError);
    LocalMomentCone corrupted = quad;
    corrupted.set = translate(quad.set, qvec({1, 0}));
    CHECK_FALSE(scale_invariance_check(corrupted, 2));
}
