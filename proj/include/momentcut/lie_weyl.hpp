#pragma once

// Root systems of types A-D and G2, Weyl groups, the positive chamber and its walls.
//
// Coordinates: A_n and G2 use fundamental-weight coordinates, so the chamber
// is the nonnegative orthant and Z^n is the weight lattice. B_n, C_n, D_n use
// the usual epsilon coordinates in R^n. The invariant form is scaled so that
// short roots have squared length 2.

#include <string>
#include <vector>

#include "momentcut/polyhedra.hpp"

namespace momentcut {

enum class Family { A, B, C, D, G };

struct RootSystem {
    Family family = Family::A;
    int rank = 0;
    std::vector<QVector> simple_roots;
    std::vector<QVector> positive_roots;  ///< sorted by height, then lexicographically
    ZMatrix cartan_matrix;                ///< a_ij = <alpha_i, alpha_j^vee>
    QMatrix inner_product;                ///< Gram matrix of the invariant form
    IntegerLattice lattice;

    std::string name() const;
    Eigen::Index dim() const { return rank; }
    /// <x, alpha^vee> for a root alpha.
    Rational coroot_pairing(const QVector& x, const QVector& alpha) const;
    /// Integral covector n with <x, n> proportional (positively) to <x, alpha_i^vee>.
    ZVector chamber_normal(int i) const;
    /// All roots, positive first then their negatives.
    std::vector<QVector> roots() const;
};

/// "A1".."A8", "B2".."B8", "C2".."C8", "D3".."D8", "G2". Throws UnsupportedTypeError.
RootSystem parse_root_system_name(const std::string& name);
RootSystem build_root_system(Family family, int rank);

/// {x : <x, alpha_i^vee> >= 0 for all simple alpha_i}.
HPolyhedron chamber(const RootSystem& rs);

/// Matrix of the reflection s_alpha in the given coordinates.
QMatrix reflection(const RootSystem& rs, const QVector& alpha);

/// Orbit of x under W by closure under simple reflections, sorted. Throws
/// DomainError past one million points.
std::vector<QVector> weyl_orbit(const RootSystem& rs, const QVector& x);

struct WeylElement {
    QMatrix matrix;
    /// Simple-reflection indices (0-based); matrix = s_word[0] * s_word[1] * ...
    std::vector<int> word;
};

/// Classical order of W.
long weyl_group_order(const RootSystem& rs);
/// All elements with minimal words, breadth-first. Throws DomainError when |W| > 100000.
std::vector<WeylElement> weyl_group_elements(const RootSystem& rs);

struct DominantProjection {
    QVector x_plus;
    WeylElement w;  ///< w.matrix * x == x_plus, with a reduced word
};
DominantProjection dominant_projection(const RootSystem& rs, const QVector& x);

struct ChamberWall {
    std::vector<int> zero_set;            ///< simple roots vanishing on the wall (0-based)
    Eigen::Index dim = 0;
    std::vector<QVector> centralizer_roots;
    std::vector<QVector> center_span;     ///< basis of the wall's linear span
    IntegerLattice complement_lattice;    ///< integral covectors vanishing on the wall
    QVector relint_point;                 ///< 1 on the nonvanishing coroots, 0 on the rest
};

/// Text id with 1-based indices, e.g. "{}" for the interior and "{1,2}".
std::string wall_id(const ChamberWall& wall);
bool operator==(const ChamberWall& a, const ChamberWall& b);

ChamberWall make_wall(const RootSystem& rs, std::vector<int> zero_set);
/// All 2^rank walls, ordered by zero-set size then lexicographically.
std::vector<ChamberWall> walls(const RootSystem& rs);
/// Walls tau' with tau contained in closure(tau').
std::vector<ChamberWall> natural_slice_walls(const RootSystem& rs, const ChamberWall& tau);
/// Closure of the wall as a polyhedral cone.
Polyhedron wall_closure(const RootSystem& rs, const ChamberWall& wall);
/// The smallest wall whose closure contains delta. Throws NotInChamberError.
ChamberWall principal_wall(const RootSystem& rs, const Polyhedron& delta);

/// Epsilon coordinates of an A_{n-1} weight given in fundamental-weight coordinates
/// (sum-zero representative in R^n).
QVector a_weight_to_epsilon(const QVector& omega_coords);
/// Inverse of a_weight_to_epsilon on the sum-zero hyperplane.
QVector a_epsilon_to_weight(const QVector& eps);

} // namespace momentcut
