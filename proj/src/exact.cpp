#include "momentcut/exact.hpp"

#include <cmath>
#include <limits>

namespace momentcut {

std::string to_string(const Rational& q) { return q.str(); }
std::string to_string(const Integer& z) { return z.str(); }

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

Integer parse_integer(std::string_view s) {
    if (s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s));
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer_literal(text)) throw ParseError("not a rational number: '" + std::string(text) + "'");
        return Rational(parse_integer(text));
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
        throw ParseError("not a rational number: '" + std::string(text) + "'");
    const Integer d = parse_integer(den);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(num), d);
}

Rational rationalize(double x, const Rational& resolution) {
    if (!std::isfinite(x)) throw DomainError("cannot rationalize a non-finite value");
    const double steps = std::round(x / to_double(resolution));
    if (std::abs(steps) < 9.0e15) return Rational(static_cast<long long>(steps)) * resolution;
    return Rational(steps) * resolution;
}

QVector to_rational(const ZVector& v) {
    QVector q(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) q(i) = Rational(v(i));
    return q;
}

Eigen::VectorXd to_double(const QVector& v) {
    Eigen::VectorXd d(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) d(i) = to_double(v(i));
    return d;
}

Rational pair(const QVector& x, const ZVector& normal) {
    Rational s(0);
    for (Eigen::Index i = 0; i < x.size(); ++i)
        if (normal(i) != 0) s += x(i) * normal(i);
    return s;
}

Integer pair(const ZVector& a, const ZVector& b) { return dot<Integer>(a, b); }

Integer gcd_of(const ZVector& v) {
    Integer g = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, abs(v(i)));
    return g;
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if (q * b != a && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

ZVector clear_denominators(const QVector& v) {
    Integer l = 1;
    for (Eigen::Index i = 0; i < v.size(); ++i) l = lcm(l, Integer(denominator(v(i))));
    ZVector z(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) z(i) = numerator(v(i)) * (l / denominator(v(i)));
    return z;
}

ZVector primitive(const ZVector& v) {
    const Integer g = gcd_of(v);
    if (g == 0) throw ZeroVectorError("primitive vector of the zero vector is undefined");
    ZVector out = v;
    if (g != 1)
        for (Eigen::Index i = 0; i < out.size(); ++i) out(i) /= g;
    return out;
}

ZVector primitive(const QVector& v) { return primitive(clear_denominators(v)); }

Eigen::Index span_dim(const std::vector<QVector>& vectors, Eigen::Index ambient_dim) {
    if (vectors.empty()) return 0;
    return rank<Rational>(stack_rows<Rational>(vectors, ambient_dim));
}

// ---------------------------------------------------------------------------

HermiteTransform hermite_normal_form_with_transform(const ZMatrix& input) {
    ZMatrix a = input;
    const Eigen::Index m = a.rows(), n = a.cols();
    ZMatrix u = ZMatrix::Identity(m, m);

    auto swap_rows = [&](Eigen::Index i, Eigen::Index j) {
        if (i == j) return;
        a.row(i).swap(a.row(j));
        u.row(i).swap(u.row(j));
    };
    auto sub_rows = [&](Eigen::Index target, Eigen::Index src, const Integer& q) {
        if (q == 0) return;
        for (Eigen::Index k = 0; k < n; ++k) a(target, k) -= q * a(src, k);
        for (Eigen::Index k = 0; k < m; ++k) u(target, k) -= q * u(src, k);
    };

    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < n && r < m; ++c) {
        for (;;) {
            Eigen::Index best = -1;
            for (Eigen::Index i = r; i < m; ++i)
                if (a(i, c) != 0 && (best < 0 || abs(a(i, c)) < abs(a(best, c)))) best = i;
            if (best < 0) break;
            swap_rows(r, best);
            bool done = true;
            for (Eigen::Index i = r + 1; i < m; ++i) {
                if (a(i, c) == 0) continue;
                sub_rows(i, r, floor_div(a(i, c), a(r, c)));
                if (a(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (a(r, c) == 0) continue;
        if (a(r, c) < 0) {
            a.row(r) *= Integer(-1);
            u.row(r) *= Integer(-1);
        }
        for (Eigen::Index i = 0; i < r; ++i) sub_rows(i, r, floor_div(a(i, c), a(r, c)));
        ++r;
    }
    return {a.topRows(r), u, static_cast<int>(r)};
}

HermiteForm hermite_normal_form(const std::vector<ZVector>& rows, Eigen::Index dim) {
    for (const auto& row : rows)
        if (row.size() != dim)
            throw InputShapeError("hermite_normal_form: row of length " + std::to_string(row.size()) +
                                  " in dimension " + std::to_string(dim));
    HermiteForm out;
    if (rows.empty()) return out;
    ZMatrix m(static_cast<Eigen::Index>(rows.size()), dim);
    for (std::size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
    const auto h = hermite_normal_form_with_transform(m);
    out.rank = h.rank;
    for (Eigen::Index i = 0; i < h.hnf.rows(); ++i) out.basis.push_back(h.hnf.row(i).transpose());
    return out;
}

std::vector<ZVector> integer_kernel(const ZMatrix& a) {
    const Eigen::Index n = a.cols();
    if (a.rows() == 0) {
        std::vector<ZVector> id;
        for (Eigen::Index i = 0; i < n; ++i) id.push_back(ZVector::Unit(n, i));
        return id;
    }
    const ZMatrix at = a.transpose();
    const auto h = hermite_normal_form_with_transform(at);
    std::vector<ZVector> kernel;
    for (Eigen::Index i = h.rank; i < n; ++i) kernel.push_back(h.transform.row(i).transpose());
    return hermite_normal_form(kernel, n).basis;
}

// ---------------------------------------------------------------------------

IntegerLattice::IntegerLattice(Eigen::Index ambient_dim, const std::vector<ZVector>& generators)
    : ambient_dim_(ambient_dim), basis_(hermite_normal_form(generators, ambient_dim).basis) {}

IntegerLattice IntegerLattice::standard(Eigen::Index n) {
    std::vector<ZVector> gens;
    for (Eigen::Index i = 0; i < n; ++i) gens.push_back(ZVector::Unit(n, i));
    return IntegerLattice(n, gens);
}

IntegerLattice IntegerLattice::zero(Eigen::Index n) { return IntegerLattice(n, {}); }

ZMatrix IntegerLattice::basis_matrix() const {
    ZMatrix b(static_cast<Eigen::Index>(basis_.size()), ambient_dim_);
    for (std::size_t i = 0; i < basis_.size(); ++i) b.row(static_cast<Eigen::Index>(i)) = basis_[i].transpose();
    return b;
}

bool IntegerLattice::contains(const ZVector& v) const {
    if (v.size() != ambient_dim_) throw InputShapeError("lattice membership: dimension mismatch");
    if (basis_.empty()) return is_zero<Integer>(v);
    const QMatrix bt = basis_matrix().cast<Rational>().transpose();
    const auto c = solve<Rational>(bt, to_rational(v));
    if (!c) return false;
    for (Eigen::Index i = 0; i < c->size(); ++i)
        if (denominator((*c)(i)) != 1) return false;
    return true;
}

IntegerLattice IntegerLattice::saturation() const {
    if (basis_.empty()) return *this;
    // Integral vectors of the span are the integral vectors orthogonal to the
    // span's orthogonal complement.
    const QMatrix b = basis_matrix().cast<Rational>();
    const QMatrix complement = nullspace<Rational>(b);
    std::vector<ZVector> rows;
    for (Eigen::Index j = 0; j < complement.cols(); ++j) rows.push_back(clear_denominators(complement.col(j)));
    if (rows.empty()) return standard(ambient_dim_);
    ZMatrix c(static_cast<Eigen::Index>(rows.size()), ambient_dim_);
    for (std::size_t i = 0; i < rows.size(); ++i) c.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
    return IntegerLattice(ambient_dim_, integer_kernel(c));
}

bool operator==(const IntegerLattice& a, const IntegerLattice& b) {
    if (a.ambient_dim_ != b.ambient_dim_ || a.basis_.size() != b.basis_.size()) return false;
    for (std::size_t i = 0; i < a.basis_.size(); ++i)
        if (a.basis_[i] != b.basis_[i]) return false;
    return true;
}

IntegerLattice annihilator_lattice(const std::vector<QVector>& span, const IntegerLattice& lattice) {
    const Eigen::Index n = lattice.ambient_dim();
    for (const auto& s : span)
        if (s.size() != n)
            throw InputShapeError("annihilator_lattice: span vector of length " + std::to_string(s.size()) +
                                  " in dimension " + std::to_string(n));
    if (span.empty() || lattice.rank() == 0) return lattice;

    // v = c^T B with c integral; <v, s> = c^T (B s). Clear denominators per span
    // vector, which leaves the kernel unchanged.
    const ZMatrix b = lattice.basis_matrix();
    const QMatrix bq = b.cast<Rational>();
    ZMatrix constraints(static_cast<Eigen::Index>(span.size()), b.rows());
    for (std::size_t j = 0; j < span.size(); ++j) {
        const QVector col = bq * span[j];
        constraints.row(static_cast<Eigen::Index>(j)) = clear_denominators(col).transpose();
    }
    std::vector<ZVector> result;
    for (const auto& c : integer_kernel(constraints)) result.push_back((c.transpose() * b).transpose());
    return IntegerLattice(n, result);
}

} // namespace momentcut
