#include "momentcut/local_cones.hpp"

namespace momentcut {

namespace {

QMatrix basis_matrix(const SliceRepData& data) {
    return stack_rows<Rational>(data.stabilizer_subalgebra, data.ambient_dim).transpose();
}

} // namespace

void validate(const SliceRepData& data) {
    const Eigen::Index n = data.ambient_dim;
    const Eigen::Index k = static_cast<Eigen::Index>(data.stabilizer_subalgebra.size());
    if (n < 1) throw InputShapeError("slice data: ambient dimension must be positive");
    for (const auto& b : data.stabilizer_subalgebra)
        if (b.size() != n) throw InputShapeError("slice data: subalgebra vector of the wrong length");
    for (const auto& w : data.weights)
        if (w.size() != k) throw InputShapeError("slice data: weight of the wrong length");
    if (data.structure_group_order < 1) throw InputShapeError("slice data: group order must be positive");
    if (k == 0) return;
    const QMatrix h = basis_matrix(data);
    if (rank<Rational>(h) != k) throw InputShapeError("slice data: subalgebra basis is dependent");
    if (data.lift.rows() != n || data.lift.cols() != k) throw InputShapeError("slice data: lift has the wrong shape");
    if (QMatrix(h.transpose() * data.lift) != QMatrix::Identity(k, k))
        throw InputShapeError("slice data: lift does not split the restriction map");
}

LocalMomentCone local_moment_cone(const QVector& x, const SliceRepData& data) {
    validate(data);
    const Eigen::Index n = data.ambient_dim;
    if (x.size() != n) throw InputShapeError("local_moment_cone: point of the wrong dimension");

    LocalMomentCone c;
    c.vertex = x;
    if (data.stabilizer_subalgebra.empty()) {
        for (Eigen::Index i = 0; i < n; ++i) c.lineality.push_back(QVector::Unit(n, i));
    } else {
        const QMatrix ann = nullspace<Rational>(QMatrix(basis_matrix(data).transpose()));
        for (Eigen::Index j = 0; j < ann.cols(); ++j) c.lineality.push_back(ann.col(j));
    }
    for (const auto& w : data.weights) c.generators.push_back(data.lift * w);

    VPolyhedron v;
    v.dim = n;
    v.vertices = {x};
    for (const auto& g : c.generators)
        if (!is_zero<Rational>(g)) v.rays.push_back(primitive(g));
    for (const auto& l : c.lineality) v.lineality.push_back(primitive(l));
    c.set = Polyhedron::from_v(std::move(v));
    return c;
}

bool check_local_cone_theorem(const Polyhedron& delta, const QVector& x, const LocalMomentCone& c) {
    if (!delta.contains(x)) throw PointNotInSetError("check_local_cone_theorem: x is not in delta");
    if (c.set.ambient_dim() != delta.ambient_dim()) throw InputShapeError("check_local_cone_theorem: dimension mismatch");
    return tangent_cone(delta, x) == c.set;
}

Polyhedron project_hat_cone(const Polyhedron& hat, const HPolyhedron& chamber) {
    const Eigen::Index n = chamber.dim;
    if (hat.ambient_dim() != n + 1) throw InputShapeError("project_hat_cone: hat must live in R x t*");
    const QVector origin = QVector::Zero(n + 1);
    if (hat.is_empty() || hat.v().vertices.size() != 1 || hat.v().vertices[0] != origin)
        throw NotAConeError("hat is not a cone with vertex 0");

    HPolyhedron h = hat.h();
    h.halfspaces.push_back({ZVector::Unit(n + 1, 0), Rational(0)});
    auto lift = [&](const ZVector& a) {
        ZVector out = ZVector::Zero(n + 1);
        out.tail(n) = a;
        return out;
    };
    for (const auto& hs : chamber.halfspaces) h.halfspaces.push_back({lift(hs.normal), hs.offset});
    for (const auto& e : chamber.equalities) h.equalities.push_back({lift(e.normal), e.offset});

    QMatrix drop = QMatrix::Zero(n, n + 1);
    drop.rightCols(n) = QMatrix::Identity(n, n);
    return project(Polyhedron::from_h(std::move(h)), drop);
}

bool scale_invariance_check(const LocalMomentCone& c, const Rational& t) {
    if (t <= 0) throw DomainError("scale factor must be positive");
    if (c.set.is_empty()) return false;
    VPolyhedron v = c.set.v();
    for (auto& y : v.vertices) y = c.vertex + t * (y - c.vertex);
    return Polyhedron::from_v(std::move(v)) == c.set;
}

} // namespace momentcut
