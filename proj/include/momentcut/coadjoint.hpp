#pragma once

// Numerical checks on coadjoint orbits: Kostant and Schur-Horn polytopes,
// sampled diagonals of Hermitian matrices, and sampled convexity probes.
// Floating point is confined to this module; hulls of clouds are computed by
// the exact engine after rationalizing coordinates.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "momentcut/lie_weyl.hpp"

namespace momentcut {

struct Spectrum {
    std::vector<double> values;  ///< weakly decreasing
};

struct SampleCloud {
    std::vector<Eigen::VectorXd> points;
    std::uint64_t seed = 0;
    std::string generator_id;

    Eigen::Index dim() const { return points.empty() ? 0 : points.front().size(); }
};

struct ToleranceConfig {
    double containment_eps = 1e-9;
    double hull_coverage_target = 0.99;
};

inline constexpr const char* kSchurHornGenerator = "schur-horn-qr";
/// Samples are generated in blocks of this size, each from its own substream.
inline constexpr std::size_t kSampleBlock = 256;

/// Hull of the Weyl orbit of a dominant lambda. Throws NotDominantError.
Polyhedron kostant_polytope(const RootSystem& rs, const QVector& lambda);

/// Hull of all permutations of lambda in R^n, built from the A_{n-1} Kostant
/// polytope plus the trace shift. Throws DomainError unless lambda is decreasing.
Polyhedron schur_horn_polytope(const std::vector<Rational>& lambda);

/// Diagonals of U diag(lambda) U* for QR-orthogonalized complex Gaussian U.
/// Worker count is capped by MOMENTCUT_THREADS; output does not depend on it.
SampleCloud schur_horn_sample(const Spectrum& spectrum, std::size_t count, std::uint64_t seed);

/// Worker threads used by the sampler: hardware concurrency capped by MOMENTCUT_THREADS.
unsigned sampling_threads();

struct ContainmentReport {
    std::size_t contained = 0;
    std::size_t total = 0;
    std::optional<std::size_t> first_outside;
};

/// Points satisfying every constraint of p up to eps (scaled by the normal's length).
ContainmentReport containment(const Polyhedron& p, const SampleCloud& cloud, double eps);

/// The cloud's affine span (from an SVD) and the exact hull of the cloud in span coordinates.
struct FloatingHull {
    Eigen::VectorXd center;
    Eigen::MatrixXd basis;  ///< n x r, orthonormal columns
    Polyhedron hull;        ///< in the r span coordinates

    Eigen::VectorXd to_span(const Eigen::VectorXd& x) const { return basis.transpose() * (x - center); }
};

/// Coordinates are rationalized at 1e-12 before the exact hull is taken.
FloatingHull floating_hull(const SampleCloud& cloud);

/// Fraction of p (measured in the cloud's affine span) covered by the cloud's hull,
/// by rejection sampling `probes` uniform points of p.
double hull_coverage(const SampleCloud& cloud, const Polyhedron& p, std::size_t probes, std::uint64_t seed);

struct ConvexityViolation {
    std::size_t a = 0, b = 0;
    Eigen::VectorXd midpoint;
    double distance = 0;  ///< from the midpoint to the nearest cloud point
    double allowed = 0;
};

struct ConvexityReport {
    std::size_t pairs_tested = 0;
    std::vector<ConvexityViolation> violations;
    bool passed() const { return violations.empty(); }
};

/// For random pairs, the midpoint must lie within the sample resolution of the
/// cloud (largest k-nearest-neighbour distance over all points, k = dim + 1)
/// plus containment_eps. Needs at least 2 points.
ConvexityReport convexity_check(const SampleCloud& cloud, const ToleranceConfig& tol, std::size_t pairs = 1000);

/// Image of p under the transpose of `inclusion` (t_H -> t). Throws RankError.
Polyhedron heckman_restriction(const Polyhedron& p, const QMatrix& inclusion);

struct LocalMinReport {
    double min_value = 0;
    std::size_t minimizers = 0;   ///< cloud points within eps of the minimum
    Eigen::Index face_dim = 0;    ///< dimension of the hull face minimizing xi
    std::string face_id;          ///< active set of that face, e.g. "{0,3}"
    bool single_face = true;      ///< all minimizers lie on that face up to eps
};

LocalMinReport local_min_probe(const SampleCloud& cloud, const Eigen::VectorXd& xi, const ToleranceConfig& tol);

} // namespace momentcut
