#pragma once

// End-to-end checks: the moment set as the closure of its principal wall
// intersected with a locally assembled polyhedron, and cut-then-certify.

#include "momentcut/coadjoint.hpp"
#include "momentcut/toric_cuts.hpp"

namespace momentcut {

struct MomentSetCertificate {
    ChamberWall chamber_wall;  ///< the principal wall sigma
    Polyhedron local_part;     ///< tangent cones at face witnesses, cut to the window
    Polyhedron window;
    Polyhedron assembled;      ///< closure(sigma) n local_part
};

class CertificationFailure : public Error {
public:
    CertificationFailure(const std::string& what, QVector witness)
        : Error("CertificationFailure", what), witness_(std::move(witness)) {}
    /// A point in exactly one of the assembled set and the expected set.
    const QVector& witness() const { return witness_; }

private:
    QVector witness_;
};

/// Certificate for delta n window. Throws NotInChamberError when delta leaves
/// the chamber and PreconditionError unless the window is a nonempty polytope.
MomentSetCertificate certify_moment_set(const RootSystem& rs, const Polyhedron& delta, const Polyhedron& window);

/// Sampled input: points are rationalized at 1e-12; points outside the chamber
/// by at most eps are replaced by their dominant representative, others raise
/// NotInChamberError. The certificate is for the exact hull of the result.
MomentSetCertificate certify_moment_set(const RootSystem& rs, const SampleCloud& cloud, const Polyhedron& window,
                                        double eps = ToleranceConfig{}.containment_eps);

/// Box window around the vertices of p and the tips of its rays, padded by `pad`.
Polyhedron bounding_window(const Polyhedron& p, const Rational& pad = Rational(1));

/// Certificate of the cut polytope on bounding_window(cut). Also certifies m on
/// the same window and checks that intersecting with the cut set commutes with
/// certification; a mismatch raises CertificationFailure.
MomentSetCertificate cut_then_certify(const LabeledPolytope& m, const CutSpec& p, const RootSystem& rs);

} // namespace momentcut
