#pragma once

// Local moment cones built from slice-representation data, and projections of
// homogeneous cones in R x t*.

#include <vector>

#include "momentcut/polyhedra.hpp"

namespace momentcut {

struct SliceRepData {
    Eigen::Index ambient_dim = 0;
    std::vector<QVector> stabilizer_subalgebra;  ///< basis of h inside t
    std::vector<QVector> weights;                ///< in h*, coordinates dual to the basis above
    QMatrix lift;                                ///< ambient_dim x dim h; restriction(lift w) = w
    long structure_group_order = 1;              ///< metadata only
};

/// Throws InputShapeError unless the basis is independent and the lift splits restriction.
void validate(const SliceRepData& data);

struct LocalMomentCone {
    QVector vertex;
    std::vector<QVector> lineality;   ///< basis of the annihilator of h
    std::vector<QVector> generators;  ///< lifted weights
    Polyhedron set;                   ///< vertex + span(lineality) + cone(generators)
};

/// x + annihilator(h) + cone(lift(weights)).
LocalMomentCone local_moment_cone(const QVector& x, const SliceRepData& data);

/// tangent_cone(delta, x) == c.set. Throws PointNotInSetError.
bool check_local_cone_theorem(const Polyhedron& delta, const QVector& x, const LocalMomentCone& c);

/// Drops the first coordinate of hat n (R_{>=0} x chamber). Throws NotAConeError.
Polyhedron project_hat_cone(const Polyhedron& hat, const HPolyhedron& chamber);

/// Scaling by t about the vertex maps c.set onto itself. Throws DomainError for t <= 0.
bool scale_invariance_check(const LocalMomentCone& c, const Rational& t);

} // namespace momentcut
