#include "momentcut/lie_weyl.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace momentcut {

namespace {

struct VectorLess {
    bool operator()(const QVector& a, const QVector& b) const { return lex_less<Rational>(a, b); }
};

struct MatrixLess {
    bool operator()(const QMatrix& a, const QMatrix& b) const {
        for (Eigen::Index i = 0; i < a.size(); ++i) {
            if (a(i) < b(i)) return true;
            if (b(i) < a(i)) return false;
        }
        return false;
    }
};

constexpr std::size_t kOrbitCap = 1000000;
constexpr long kGroupCap = 100000;

// Gram matrix in fundamental-weight coordinates from the Gram matrix of the simple roots.
QMatrix weight_gram(const QMatrix& root_gram) {
    const Eigen::Index n = root_gram.rows();
    QMatrix r(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) r(i, j) = Rational(2) * root_gram(i, j) / root_gram(j, j);
    const QMatrix rinv = r.inverse();
    return rinv * root_gram * rinv.transpose();
}

// Coroot covector: <x, alpha^vee> = x . c.
QVector coroot_covector(const RootSystem& rs, const QVector& alpha) {
    const QVector g = rs.inner_product * alpha;
    return Rational(2) * g / dot<Rational>(alpha, g);
}

QMatrix simple_coroot_matrix(const RootSystem& rs) {
    QMatrix n(rs.rank, rs.rank);
    for (int i = 0; i < rs.rank; ++i) n.row(i) = coroot_covector(rs, rs.simple_roots[static_cast<std::size_t>(i)]).transpose();
    return n;
}

} // namespace

std::string RootSystem::name() const {
    const char letter = family == Family::A ? 'A' : family == Family::B ? 'B' : family == Family::C ? 'C'
                                                  : family == Family::D ? 'D' : 'G';
    return std::string(1, letter) + std::to_string(rank);
}

Rational RootSystem::coroot_pairing(const QVector& x, const QVector& alpha) const {
    if (x.size() != rank) throw InputShapeError("coroot pairing: point has the wrong dimension");
    return dot<Rational>(x, coroot_covector(*this, alpha));
}

ZVector RootSystem::chamber_normal(int i) const {
    return primitive(coroot_covector(*this, simple_roots.at(static_cast<std::size_t>(i))));
}

std::vector<QVector> RootSystem::roots() const {
    std::vector<QVector> all = positive_roots;
    for (const auto& a : positive_roots) all.push_back(-a);
    return all;
}

RootSystem parse_root_system_name(const std::string& name) {
    if (name.size() < 2) throw UnsupportedTypeError("unknown root system '" + name + "'");
    Family f;
    switch (name[0]) {
        case 'A': f = Family::A; break;
        case 'B': f = Family::B; break;
        case 'C': f = Family::C; break;
        case 'D': f = Family::D; break;
        case 'G': f = Family::G; break;
        default: throw UnsupportedTypeError("unknown root system '" + name + "'");
    }
    const std::string digits = name.substr(1);
    if (digits.size() != 1 || digits[0] < '0' || digits[0] > '9')
        throw UnsupportedTypeError("unknown root system '" + name + "'");
    return build_root_system(f, digits[0] - '0');
}

RootSystem build_root_system(Family family, int rank) {
    RootSystem rs;
    rs.family = family;
    rs.rank = rank;
    const bool ok = rank <= 8 && ((family == Family::A && rank >= 1) || (family == Family::B && rank >= 2) ||
                                  (family == Family::C && rank >= 2) || (family == Family::D && rank >= 3) ||
                                  (family == Family::G && rank == 2));
    if (!ok) throw UnsupportedTypeError("unsupported root system " + rs.name());
    const Eigen::Index n = rank;

    if (family == Family::A || family == Family::G) {
        QMatrix s = QMatrix::Zero(n, n);
        if (family == Family::A) {
            for (Eigen::Index i = 0; i < n; ++i) {
                s(i, i) = 2;
                if (i + 1 < n) s(i, i + 1) = s(i + 1, i) = -1;
            }
        } else {
            s << Rational(2), Rational(-3), Rational(-3), Rational(6);
        }
        rs.inner_product = weight_gram(s);
        for (Eigen::Index i = 0; i < n; ++i) {
            QVector a(n);
            for (Eigen::Index j = 0; j < n; ++j) a(j) = Rational(2) * s(i, j) / s(j, j);
            rs.simple_roots.push_back(a);
        }
    } else {
        rs.inner_product = QMatrix::Identity(n, n) * Rational(family == Family::B ? 2 : 1);
        for (Eigen::Index i = 0; i + 1 < n; ++i) {
            QVector a = QVector::Zero(n);
            a(i) = 1;
            a(i + 1) = -1;
            rs.simple_roots.push_back(a);
        }
        QVector last = QVector::Zero(n);
        if (family == Family::B) last(n - 1) = 1;
        if (family == Family::C) last(n - 1) = 2;
        if (family == Family::D) last(n - 2) = last(n - 1) = 1;
        rs.simple_roots.push_back(last);
    }

    rs.cartan_matrix.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            const Rational a = rs.coroot_pairing(rs.simple_roots[static_cast<std::size_t>(i)], rs.simple_roots[static_cast<std::size_t>(j)]);
            rs.cartan_matrix(i, j) = numerator(a);
        }
    rs.lattice = IntegerLattice::standard(n);

    // Roots: W-orbits of the simple roots. Positive: nonnegative in the simple-root basis.
    QMatrix basis(n, n);
    for (Eigen::Index i = 0; i < n; ++i) basis.col(i) = rs.simple_roots[static_cast<std::size_t>(i)];
    const QMatrix to_simple = basis.inverse();
    std::set<QVector, VectorLess> all;
    for (const auto& a : rs.simple_roots)
        for (const auto& b : weyl_orbit(rs, a)) all.insert(b);
    std::vector<std::pair<Rational, QVector>> positive;
    for (const auto& a : all) {
        const QVector c = to_simple * a;
        if (c.minCoeff() >= 0) positive.emplace_back(c.sum(), a);
    }
    std::sort(positive.begin(), positive.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return lex_less<Rational>(x.second, y.second);
    });
    for (auto& [h, a] : positive) rs.positive_roots.push_back(a);
    return rs;
}

HPolyhedron chamber(const RootSystem& rs) {
    HPolyhedron h;
    h.dim = rs.rank;
    for (int i = 0; i < rs.rank; ++i) h.halfspaces.push_back({rs.chamber_normal(i), Rational(0)});
    return h;
}

QMatrix reflection(const RootSystem& rs, const QVector& alpha) {
    if (alpha.size() != rs.rank) throw InputShapeError("reflection: root has the wrong dimension");
    return QMatrix(QMatrix::Identity(rs.rank, rs.rank) - alpha * coroot_covector(rs, alpha).transpose());
}

std::vector<QVector> weyl_orbit(const RootSystem& rs, const QVector& x) {
    if (x.size() != rs.rank) throw InputShapeError("weyl_orbit: point has the wrong dimension");
    std::vector<QMatrix> s;
    for (const auto& a : rs.simple_roots) s.push_back(reflection(rs, a));
    std::set<QVector, VectorLess> seen{x};
    std::vector<QVector> frontier{x};
    while (!frontier.empty()) {
        std::vector<QVector> next;
        for (const auto& y : frontier)
            for (const auto& r : s) {
                QVector z = r * y;
                if (seen.insert(z).second) {
                    if (seen.size() > kOrbitCap) throw DomainError("weyl_orbit: orbit exceeds one million points");
                    next.push_back(std::move(z));
                }
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

long weyl_group_order(const RootSystem& rs) {
    long fact = 1;
    for (int i = 2; i <= rs.rank; ++i) fact *= i;
    switch (rs.family) {
        case Family::A: return fact * (rs.rank + 1);
        case Family::B:
        case Family::C: return fact << rs.rank;
        case Family::D: return fact << (rs.rank - 1);
        case Family::G: return 12;
    }
    return 0;
}

std::vector<WeylElement> weyl_group_elements(const RootSystem& rs) {
    if (weyl_group_order(rs) > kGroupCap)
        throw DomainError("Weyl group of " + rs.name() + " has more than 100000 elements");
    std::vector<QMatrix> s;
    for (const auto& a : rs.simple_roots) s.push_back(reflection(rs, a));
    std::map<QMatrix, std::size_t, MatrixLess> index;
    std::vector<WeylElement> out{{QMatrix::Identity(rs.rank, rs.rank), {}}};
    index.emplace(out[0].matrix, 0);
    for (std::size_t k = 0; k < out.size(); ++k)
        for (int i = 0; i < rs.rank; ++i) {
            QMatrix m = out[k].matrix * s[static_cast<std::size_t>(i)];
            if (index.count(m)) continue;
            std::vector<int> word = out[k].word;
            word.push_back(i);
            index.emplace(m, out.size());
            out.push_back({std::move(m), std::move(word)});
        }
    return out;
}

DominantProjection dominant_projection(const RootSystem& rs, const QVector& x) {
    if (x.size() != rs.rank) throw InputShapeError("dominant_projection: point has the wrong dimension");
    const QMatrix n = simple_coroot_matrix(rs);
    DominantProjection out{x, {QMatrix::Identity(rs.rank, rs.rank), {}}};
    std::vector<int> applied;
    for (;;) {
        const QVector p = n * out.x_plus;
        int i = 0;
        while (i < rs.rank && p(i) >= 0) ++i;
        if (i == rs.rank) break;
        const QMatrix r = reflection(rs, rs.simple_roots[static_cast<std::size_t>(i)]);
        out.x_plus = r * out.x_plus;
        out.w.matrix = r * out.w.matrix;
        applied.push_back(i);
    }
    out.w.word.assign(applied.rbegin(), applied.rend());
    return out;
}

// ---------------------------------------------------------------------------

std::string wall_id(const ChamberWall& wall) {
    std::string s = "{";
    for (std::size_t i = 0; i < wall.zero_set.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(wall.zero_set[i] + 1);
    }
    return s + "}";
}

bool operator==(const ChamberWall& a, const ChamberWall& b) { return a.zero_set == b.zero_set && a.dim == b.dim; }

ChamberWall make_wall(const RootSystem& rs, std::vector<int> zero_set) {
    std::sort(zero_set.begin(), zero_set.end());
    zero_set.erase(std::unique(zero_set.begin(), zero_set.end()), zero_set.end());
    for (int i : zero_set)
        if (i < 0 || i >= rs.rank) throw InputShapeError("wall: simple root index out of range");
    const Eigen::Index n = rs.rank;
    const QMatrix cov = simple_coroot_matrix(rs);

    ChamberWall w;
    w.zero_set = zero_set;
    w.dim = n - static_cast<Eigen::Index>(zero_set.size());

    QVector target = QVector::Ones(n);
    for (int i : zero_set) target(i) = 0;
    w.relint_point = cov.inverse() * target;

    if (zero_set.empty()) {
        for (Eigen::Index i = 0; i < n; ++i) w.center_span.push_back(QVector::Unit(n, i));
    } else {
        QMatrix rows(static_cast<Eigen::Index>(zero_set.size()), n);
        for (std::size_t k = 0; k < zero_set.size(); ++k) rows.row(static_cast<Eigen::Index>(k)) = cov.row(zero_set[k]);
        const QMatrix ns = nullspace<Rational>(rows);
        for (Eigen::Index j = 0; j < ns.cols(); ++j) w.center_span.push_back(ns.col(j));
    }
    for (const auto& a : rs.roots())
        if (dot<Rational>(w.relint_point, QVector(rs.inner_product * a)) == 0) w.centralizer_roots.push_back(a);
    w.complement_lattice = annihilator_lattice(w.center_span, rs.lattice);
    return w;
}

std::vector<ChamberWall> walls(const RootSystem& rs) {
    std::vector<std::vector<int>> subsets;
    for (unsigned long mask = 0; mask < (1ul << rs.rank); ++mask) {
        std::vector<int> z;
        for (int i = 0; i < rs.rank; ++i)
            if ((mask >> i) & 1ul) z.push_back(i);
        subsets.push_back(z);
    }
    std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::vector<ChamberWall> out;
    for (auto& z : subsets) out.push_back(make_wall(rs, z));
    return out;
}

std::vector<ChamberWall> natural_slice_walls(const RootSystem& rs, const ChamberWall& tau) {
    std::vector<ChamberWall> out;
    for (auto& w : walls(rs))
        if (std::includes(tau.zero_set.begin(), tau.zero_set.end(), w.zero_set.begin(), w.zero_set.end()))
            out.push_back(std::move(w));
    return out;
}

Polyhedron wall_closure(const RootSystem& rs, const ChamberWall& wall) {
    HPolyhedron h = chamber(rs);
    for (int i : wall.zero_set) h.equalities.push_back({rs.chamber_normal(i), Rational(0)});
    return Polyhedron::from_h(std::move(h)).minimized();
}

ChamberWall principal_wall(const RootSystem& rs, const Polyhedron& delta) {
    if (delta.ambient_dim() != rs.rank) throw InputShapeError("principal_wall: dimension mismatch");
    if (delta.is_empty()) throw PreconditionError("principal_wall: delta is empty");
    if (!Polyhedron::from_h(chamber(rs)).includes(delta))
        throw NotInChamberError("delta is not contained in the positive chamber");
    std::vector<int> zero_set;
    for (int i = 0; i < rs.rank; ++i) {
        const ZVector n = rs.chamber_normal(i);
        bool vanishes = true;
        for (const auto& x : delta.v().vertices)
            if (pair(x, n) != 0) vanishes = false;
        for (const auto& r : delta.v().rays)
            if (pair(r, n) != 0) vanishes = false;
        for (const auto& l : delta.v().lineality)
            if (pair(l, n) != 0) vanishes = false;
        if (vanishes) zero_set.push_back(i);
    }
    return make_wall(rs, zero_set);
}

QVector a_weight_to_epsilon(const QVector& omega) {
    const Eigen::Index n = omega.size() + 1;
    QVector eps = QVector::Zero(n);
    for (Eigen::Index i = 0; i < omega.size(); ++i) {
        for (Eigen::Index j = 0; j <= i; ++j) eps(j) += omega(i);
        const Rational shift = omega(i) * Rational(i + 1, n);
        for (Eigen::Index j = 0; j < n; ++j) eps(j) -= shift;
    }
    return eps;
}

QVector a_epsilon_to_weight(const QVector& eps) {
    QVector omega(eps.size() - 1);
    for (Eigen::Index i = 0; i + 1 < eps.size(); ++i) omega(i) = eps(i) - eps(i + 1);
    return omega;
}

} // namespace momentcut
