#pragma once

// Brute-force reference computations used only by the tests.

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "momentcut/polyhedra.hpp"

namespace oracle {

using namespace momentcut;

inline Rational random_rational(std::mt19937_64& rng, long lo, long hi, long max_den = 4) {
    const long d = std::uniform_int_distribution<long>(1, max_den)(rng);
    return Rational(std::uniform_int_distribution<long>(lo * d, hi * d)(rng), d);
}

inline QVector random_point(std::mt19937_64& rng, Eigen::Index n, long lo = -3, long hi = 3) {
    QVector x(n);
    for (Eigen::Index i = 0; i < n; ++i) x(i) = random_rational(rng, lo, hi);
    return x;
}

inline ZVector random_normal(std::mt19937_64& rng, Eigen::Index n, long bound = 3) {
    std::uniform_int_distribution<long> d(-bound, bound);
    ZVector v(n);
    do {
        for (Eigen::Index i = 0; i < n; ++i) v(i) = d(rng);
    } while (is_zero<Integer>(v));
    return primitive(v);
}

/// Vertices of {x : A x >= b} by solving every n-subset of constraints.
inline std::vector<QVector> vertices_by_active_sets(const HPolyhedron& h) {
    const auto n = h.dim;
    const auto m = h.halfspaces.size();
    std::vector<QVector> out;
    std::vector<int> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (static_cast<Eigen::Index>(pick.size()) == n) {
            QMatrix a(n, n);
            QVector b(n);
            for (Eigen::Index i = 0; i < n; ++i) {
                a.row(i) = to_rational(h.halfspaces[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])].normal).transpose();
                b(i) = h.halfspaces[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])].offset;
            }
            if (rank<Rational>(a) < n) return;
            const auto x = solve<Rational>(a, b);
            for (const auto& hs : h.halfspaces)
                if (pair(*x, hs.normal) < hs.offset) return;
            out.push_back(*x);
            return;
        }
        for (std::size_t i = start; i < m; ++i) {
            pick.push_back(static_cast<int>(i));
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(), [](const QVector& a, const QVector& b) { return lex_less<Rational>(a, b); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::vector<QVector> sorted(std::vector<QVector> v) {
    std::sort(v.begin(), v.end(), [](const QVector& a, const QVector& b) { return lex_less<Rational>(a, b); });
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

inline HPolyhedron box(Eigen::Index n, const Rational& lo, const Rational& hi) {
    HPolyhedron h;
    h.dim = n;
    for (Eigen::Index i = 0; i < n; ++i) {
        h.halfspaces.push_back({ZVector::Unit(n, i), lo});
        h.halfspaces.push_back({ZVector(-ZVector::Unit(n, i)), -hi});
    }
    return h;
}

inline Polyhedron unit_square() { return Polyhedron::from_h(box(2, 0, 1)); }

/// A random full-dimensional polytope: a box cut by extra random halfspaces through its interior.
inline Polyhedron random_polytope(std::mt19937_64& rng, Eigen::Index n, int extra) {
    HPolyhedron h = box(n, -2, 2);
    for (int i = 0; i < extra; ++i) {
        const ZVector a = random_normal(rng, n);
        h.halfspaces.push_back({a, Rational(-1) - random_rational(rng, 0, 1)});
    }
    return Polyhedron::from_h(h).minimized();
}

} // namespace oracle

#include "momentcut/toric_cuts.hpp"

namespace oracle {

/// Random simple full-dimensional polytope with random labels in {1, 2}; retried until valid.
inline LabeledPolytope random_labeled_polytope(std::mt19937_64& rng, Eigen::Index n, int extra = 2, bool unit_labels = true) {
    for (;;) {
        HPolyhedron h;
        h.dim = n;
        for (Eigen::Index i = 0; i < n; ++i) {
            h.halfspaces.push_back({ZVector::Unit(n, i), random_rational(rng, -3, -2, 5)});
            h.halfspaces.push_back({ZVector(-ZVector::Unit(n, i)), random_rational(rng, -3, -2, 5)});
        }
        for (int i = 0; i < extra; ++i)
            h.halfspaces.push_back({random_normal(rng, n, 4), Rational(-2) - random_rational(rng, 0, 1, 7)});
        const Polyhedron p = Polyhedron::from_h(h).minimized();
        if (!is_simple_at_vertices(p)) continue;
        std::map<int, int> labels;
        for (std::size_t i = 0; i < p.h().halfspaces.size(); ++i)
            labels[static_cast<int>(i)] = unit_labels ? 1 : static_cast<int>(1 + rng() % 2);
        return make_labeled_polytope(p, labels);
    }
}

/// A random halfspace whose boundary passes near the middle of the box [-2, 2]^n.
inline CutSpec random_cut(std::mt19937_64& rng, Eigen::Index n) {
    CutSpec c;
    c.p.dim = n;
    c.p.halfspaces.push_back({random_normal(rng, n, 5), random_rational(rng, -1, 1, 11)});
    return c;
}

/// Boundedness of {x : A x >= b} from its recession cone {d : A d >= 0}.
inline bool bounded_by_recession_cone(const std::vector<HalfSpace>& hs, Eigen::Index n) {
    HPolyhedron rec;
    rec.dim = n;
    for (const auto& h : hs) rec.halfspaces.push_back({h.normal, Rational(0)});
    const auto v = h_to_v(rec);
    return v.rays.empty() && v.lineality.empty();
}

} // namespace oracle
