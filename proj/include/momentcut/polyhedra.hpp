#pragma once

// Exact rational polyhedral sets in double description.
//
// A Polyhedron always carries both an H-representation (the one it was built
// from, or an irredundant canonical one) and a minimal V-representation
// computed by the double-description method. The empty set is an ordinary
// value, not an error.

#include <optional>
#include <vector>

#include "momentcut/exact.hpp"

namespace momentcut {

/// {x : <x, normal> >= offset}, with `normal` primitive and nonzero.
struct HalfSpace {
    ZVector normal;
    Rational offset;
};

/// {x : <x, normal> == offset}, with `normal` primitive and nonzero.
struct Equality {
    ZVector normal;
    Rational offset;
};

/// Rescales a rational constraint by a positive factor so that its normal is
/// primitive. Throws ZeroVectorError for a zero normal.
HalfSpace make_halfspace(const QVector& normal, const Rational& offset);
Equality make_equality(const QVector& normal, const Rational& offset);

struct HPolyhedron {
    Eigen::Index dim = 0;
    std::vector<HalfSpace> halfspaces;
    std::vector<Equality> equalities;
};

struct VPolyhedron {
    Eigen::Index dim = 0;
    std::vector<QVector> vertices;
    std::vector<ZVector> rays;
    std::vector<ZVector> lineality;

    bool is_empty() const { return vertices.empty(); }
};

/// Minimal generators of the set described by `h`. Vertices and rays are
/// taken orthogonal to the lineality space and sorted, so the result depends
/// only on the point set.
VPolyhedron h_to_v(const HPolyhedron& h);

/// Irredundant, canonical halfspaces and equalities of the set generated by `v`.
HPolyhedron v_to_h(const VPolyhedron& v);

class Polyhedron {
public:
    Polyhedron() = default;

    /// Keeps the given constraint list (indices stay meaningful) and computes generators.
    static Polyhedron from_h(HPolyhedron h);
    /// Computes canonical constraints and minimal generators.
    static Polyhedron from_v(VPolyhedron v);
    static Polyhedron from_points(Eigen::Index dim, const std::vector<QVector>& points);
    static Polyhedron empty(Eigen::Index dim);
    static Polyhedron universe(Eigen::Index dim);
    static Polyhedron point(const QVector& x);

    const HPolyhedron& h() const { return h_; }
    const VPolyhedron& v() const { return v_; }

    Eigen::Index ambient_dim() const { return h_.dim; }
    /// Affine dimension; -1 for the empty set.
    Eigen::Index dim() const { return affine_dim_; }
    bool is_empty() const { return v_.is_empty(); }
    bool is_bounded() const { return v_.rays.empty() && v_.lineality.empty(); }
    bool is_pointed() const { return v_.lineality.empty(); }

    bool contains(const QVector& x) const;
    /// Membership in the relative interior.
    bool relint_contains(const QVector& x) const;
    /// True when `other` is a subset of this set.
    bool includes(const Polyhedron& other) const;
    /// A point in the relative interior: mean of vertices plus sum of rays.
    QVector relint_point() const;

    /// Same set with irredundant canonical constraints.
    Polyhedron minimized() const;

    /// Halfspace indices tight on the whole set.
    const std::vector<bool>& implicit_equalities() const { return implicit_; }

    friend bool operator==(const Polyhedron& a, const Polyhedron& b);
    friend bool operator!=(const Polyhedron& a, const Polyhedron& b) { return !(a == b); }

private:
    Polyhedron(HPolyhedron h, VPolyhedron v);

    HPolyhedron h_;
    VPolyhedron v_;
    std::vector<bool> implicit_;
    Eigen::Index affine_dim_ = -1;
};

/// A nonempty face, named by the constraints of its polyhedron that are tight on it.
struct FaceDescriptor {
    std::vector<int> active_set;  ///< halfspace indices into the polyhedron's H list
    Eigen::Index dim = 0;
    QVector relint_point;
    std::vector<int> vertex_ids;  ///< generators of the face, indices into v()
    std::vector<int> ray_ids;
};

/// All nonempty faces, sorted by dimension then active set. Relative
/// interiors partition the polyhedron.
std::vector<FaceDescriptor> faces(const Polyhedron& p);
std::vector<FaceDescriptor> facets(const Polyhedron& p);
/// The closed face as a polyhedron (active constraints become equalities).
Polyhedron face_closure(const Polyhedron& p, const FaceDescriptor& face);
/// Face spanned by the given generators of `p`.
FaceDescriptor describe_face(const Polyhedron& p, std::vector<int> vertex_ids, std::vector<int> ray_ids);
/// Direction space of a face: differences of its vertices, its rays and the lineality.
std::vector<QVector> face_directions(const Polyhedron& p, const FaceDescriptor& face);

Polyhedron intersect(const Polyhedron& a, const Polyhedron& b);
Polyhedron translate(const Polyhedron& p, const QVector& offset);
/// Image under a linear map, computed from generators.
Polyhedron linear_image(const Polyhedron& p, const QMatrix& map);
/// Image under a linear map, computed by Fourier-Motzkin elimination.
Polyhedron project(const Polyhedron& p, const QMatrix& map);

/// Closed cone with vertex x generated by p - x. Throws PointNotInSetError.
Polyhedron tangent_cone(const Polyhedron& p, const QVector& x);

/// Relative-interior points of closure(F) n s for every face F of p meeting s.
std::vector<QVector> face_witnesses(const Polyhedron& p, const Polyhedron& s);

/// (intersection of tangent_cone(p, x) over x_set) n s, checked against p n s.
/// Throws PointNotInSetError for a witness outside p n s and
/// InsufficientWitnessError when the witnesses do not determine p n s.
Polyhedron reconstruct_from_tangent_cones(const std::vector<QVector>& x_set, const Polyhedron& p,
                                          const Polyhedron& s);

/// Every vertex lies on exactly dim(p) facets. Throws UnboundedInputError.
bool is_simple(const Polyhedron& p);
/// The same vertex-facet count, allowed on unbounded polyhedra.
bool is_simple_at_vertices(const Polyhedron& p);

/// A simple rational polytope P with k in int(P) and P in the open set
/// {x : <x, n_i> > b_i}. Throws NoRoomError when k touches the boundary.
Polyhedron fit_generic_polytope(const Polyhedron& k, const HPolyhedron& sigma);

/// closure(relint(face) n p) for a face of `cone`; equals closure(face) n p.
/// Throws PreconditionError when relint(face) misses relint(p).
Polyhedron closure_of_face_intersection(const Polyhedron& cone, const FaceDescriptor& face, const Polyhedron& p);

struct LinearMinimum {
    bool unbounded = false;            ///< the infimum is minus infinity
    Rational value;                    ///< meaningful when !unbounded
    std::optional<FaceDescriptor> argmin;
};

/// Exact minimum of <., xi> over p together with its argmin face.
LinearMinimum minimize_linear(const Polyhedron& p, const QVector& xi);

} // namespace momentcut
