#pragma once

// Symplectic cuts at the level of labeled moment polytopes.

#include <map>
#include <optional>
#include <vector>

#include "momentcut/polyhedra.hpp"

namespace momentcut {

/// A full-dimensional polyhedron, simple at its vertices, whose listed
/// halfspaces are exactly its facets, each with a positive integer label.
struct LabeledPolytope {
    Polyhedron polytope;
    std::map<int, int> facet_labels;  ///< halfspace index -> label
};

/// Validates and builds. Missing labels default to 1. Throws InputShapeError
/// (equalities, redundant or repeated halfspaces, wrong dimension),
/// PreconditionError (not simple at a vertex) and DomainError (label < 1).
LabeledPolytope make_labeled_polytope(HPolyhedron h, std::map<int, int> labels = {});
LabeledPolytope make_labeled_polytope(const Polyhedron& p, std::map<int, int> labels = {});

/// The cutting set {x : <x, v_j> >= b_j}; equalities are not allowed.
struct CutSpec {
    HPolyhedron p;
};

struct FacePair {
    FaceDescriptor polytope_face;  ///< face of the labeled polytope
    FaceDescriptor cut_face;       ///< face of the cutting set
};

struct GenericityReport {
    bool ok = true;
    /// First pair of meeting faces whose spans do not add up to the whole space.
    std::optional<FacePair> witness;
};

/// Closed faces that meet must be transversal, and the intersection must be simple.
GenericityReport is_generic_cut(const LabeledPolytope& m, const CutSpec& p);

class NonGenericCutError : public Error {
public:
    NonGenericCutError(const std::string& what, std::optional<FacePair> witness)
        : Error("NonGenericCutError", what), witness_(std::move(witness)) {}
    const std::optional<FacePair>& witness() const { return witness_; }

private:
    std::optional<FacePair> witness_;
};

struct Stratum {
    FaceDescriptor face;
    IntegerLattice perpendicular_lattice;
};

struct CutResult {
    LabeledPolytope cut;
    std::vector<Stratum> strata;
    /// Set when the input carries labels above 1; the new facets still get label 1.
    bool labels_flagged = false;
};

/// Cut polytope m n p. Surviving old facets keep their labels and come first;
/// new facets get label 1. Throws NonGenericCutError or PreconditionError (empty cut).
CutResult symplectic_cut(const LabeledPolytope& m, const CutSpec& p);

bool is_compact_cut(const LabeledPolytope& m, const CutSpec& p);

/// Primitive edge directions at a vertex, sorted. Throws PointNotVertexError.
std::vector<ZVector> vertex_weights(const LabeledPolytope& m, const QVector& v);

} // namespace momentcut
