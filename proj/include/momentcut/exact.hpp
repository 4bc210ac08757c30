#pragma once

// Exact scalars, dense vectors and matrices, and integer lattices.
//
// Every exact computation in the library runs over GMP-backed rationals
// wrapped in Eigen dense types. The field algorithms below are templated on
// the scalar and assume exact arithmetic (pivots are tested against zero).

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "momentcut/errors.hpp"

namespace momentcut {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using QVector = Vector<Rational>;
using QMatrix = Matrix<Rational>;
using ZVector = Vector<Integer>;
using ZMatrix = Matrix<Integer>;

// ---------------------------------------------------------------------------
// Scalars and small vector helpers

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p", "-p" or "p/q". Throws ParseError on malformed input or q = 0.
Rational parse_rational(std::string_view text);

/// Rounds `x` to the nearest multiple of `resolution` and returns it exactly.
Rational rationalize(double x, const Rational& resolution);

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

QVector to_rational(const ZVector& v);
Eigen::VectorXd to_double(const QVector& v);

template <typename Scalar>
Vector<Scalar> make_vector(std::initializer_list<Scalar> values) {
    Vector<Scalar> v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (const auto& x : values) v(i++) = x;
    return v;
}

inline QVector qvec(std::initializer_list<Rational> values) { return make_vector<Rational>(values); }
inline ZVector zvec(std::initializer_list<Integer> values) { return make_vector<Integer>(values); }

/// Lexicographic order on equal-length vectors.
template <typename Scalar>
bool lex_less(const Vector<Scalar>& a, const Vector<Scalar>& b) {
    for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
        if (a(i) < b(i)) return true;
        if (b(i) < a(i)) return false;
    }
    return a.size() < b.size();
}

template <typename Scalar>
bool is_zero(const Vector<Scalar>& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v(i) != Scalar(0)) return false;
    return true;
}

template <typename Scalar>
Scalar dot(const Vector<Scalar>& a, const Vector<Scalar>& b) {
    Scalar s(0);
    for (Eigen::Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
    return s;
}

/// Pairing of a rational point with an integral covector.
Rational pair(const QVector& x, const ZVector& normal);
/// Pairing of two integral vectors.
Integer pair(const ZVector& a, const ZVector& b);

Integer gcd_of(const ZVector& v);
/// Integer division rounding toward negative infinity.
Integer floor_div(const Integer& a, const Integer& b);

/// The unique positive multiple of `v` that is integral with coprime entries.
/// Throws ZeroVectorError on the zero vector.
ZVector primitive(const QVector& v);
ZVector primitive(const ZVector& v);

/// Scales a rational vector by the lcm of its denominators.
ZVector clear_denominators(const QVector& v);

// ---------------------------------------------------------------------------
// Linear algebra over an exact field

template <typename Scalar>
struct RowEchelon {
    Matrix<Scalar> reduced;   ///< reduced row echelon form, zero rows dropped
    std::vector<Eigen::Index> pivots;
};

template <typename Scalar>
RowEchelon<Scalar> reduced_row_echelon(Matrix<Scalar> m) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    std::vector<Eigen::Index> pivots;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index p = r;
        while (p < rows && m(p, c) == Scalar(0)) ++p;
        if (p == rows) continue;
        if (p != r) m.row(p).swap(m.row(r));
        const Scalar inv = Scalar(1) / m(r, c);
        for (Eigen::Index j = c; j < cols; ++j) m(r, j) *= inv;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == Scalar(0)) continue;
            const Scalar f = m(i, c);
            for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {m.topRows(r), std::move(pivots)};
}

template <typename Scalar>
Eigen::Index rank(const Matrix<Scalar>& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return static_cast<Eigen::Index>(reduced_row_echelon<Scalar>(m).pivots.size());
}

/// Columns form a basis of {x : m x = 0}.
template <typename Scalar>
Matrix<Scalar> nullspace(const Matrix<Scalar>& m) {
    const Eigen::Index n = m.cols();
    if (m.rows() == 0) return Matrix<Scalar>::Identity(n, n);
    const auto ech = reduced_row_echelon<Scalar>(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (auto p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    Matrix<Scalar> basis(n, n - static_cast<Eigen::Index>(ech.pivots.size()));
    Eigen::Index k = 0;
    for (Eigen::Index free = 0; free < n; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        Vector<Scalar> x = Vector<Scalar>::Zero(n);
        x(free) = Scalar(1);
        for (std::size_t i = 0; i < ech.pivots.size(); ++i)
            x(ech.pivots[i]) = -ech.reduced(static_cast<Eigen::Index>(i), free);
        basis.col(k++) = x;
    }
    return basis;
}

/// Some solution of a x = b, or nullopt when the system is inconsistent.
template <typename Scalar>
std::optional<Vector<Scalar>> solve(const Matrix<Scalar>& a, const Vector<Scalar>& b) {
    Matrix<Scalar> aug(a.rows(), a.cols() + 1);
    aug << a, b;
    const auto ech = reduced_row_echelon<Scalar>(aug);
    Vector<Scalar> x = Vector<Scalar>::Zero(a.cols());
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
        if (ech.pivots[i] == a.cols()) return std::nullopt;
        x(ech.pivots[i]) = ech.reduced(static_cast<Eigen::Index>(i), a.cols());
    }
    return x;
}

/// Stacks vectors as the rows of a matrix with `cols` columns.
template <typename Scalar>
Matrix<Scalar> stack_rows(const std::vector<Vector<Scalar>>& rows, Eigen::Index cols) {
    Matrix<Scalar> m(static_cast<Eigen::Index>(rows.size()), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
    return m;
}

/// Dimension of the linear span of the given vectors.
Eigen::Index span_dim(const std::vector<QVector>& vectors, Eigen::Index ambient_dim);

// ---------------------------------------------------------------------------
// Integer lattices

struct HermiteForm {
    std::vector<ZVector> basis;  ///< nonzero rows of the row-style Hermite normal form
    int rank = 0;
};

/// Row-style Hermite normal form: echelon rows with positive pivots and the
/// entries above each pivot reduced into [0, pivot). Unique for a given row span.
/// Throws InputShapeError if some row does not have `dim` entries.
HermiteForm hermite_normal_form(const std::vector<ZVector>& rows, Eigen::Index dim);

struct HermiteTransform {
    ZMatrix hnf;        ///< rank x cols
    ZMatrix transform;  ///< unimodular, transform * input = [hnf; 0]
    int rank = 0;
};

HermiteTransform hermite_normal_form_with_transform(const ZMatrix& rows);

/// A basis of {x in Z^n : a x = 0}, in Hermite normal form.
std::vector<ZVector> integer_kernel(const ZMatrix& a);

/// A full-rank-in-its-span sublattice of Z^n, stored by its canonical HNF basis.
class IntegerLattice {
public:
    IntegerLattice() = default;
    IntegerLattice(Eigen::Index ambient_dim, const std::vector<ZVector>& generators);

    static IntegerLattice standard(Eigen::Index n);
    static IntegerLattice zero(Eigen::Index n);

    Eigen::Index ambient_dim() const { return ambient_dim_; }
    int rank() const { return static_cast<int>(basis_.size()); }
    const std::vector<ZVector>& basis() const { return basis_; }
    ZMatrix basis_matrix() const;

    bool contains(const ZVector& v) const;
    /// All integral points of the rational span of this lattice.
    IntegerLattice saturation() const;
    bool is_saturated() const { return saturation() == *this; }

    friend bool operator==(const IntegerLattice& a, const IntegerLattice& b);
    friend bool operator!=(const IntegerLattice& a, const IntegerLattice& b) { return !(a == b); }

private:
    Eigen::Index ambient_dim_ = 0;
    std::vector<ZVector> basis_;
};

/// {v in lattice : <v, s> = 0 for every s in span}. Always saturated in `lattice`.
IntegerLattice annihilator_lattice(const std::vector<QVector>& span, const IntegerLattice& lattice);

} // namespace momentcut
