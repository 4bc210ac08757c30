#include "momentcut/pipeline.hpp"

namespace momentcut {

namespace {

const Rational kResolution(1, 1000000000000LL);

/// A point in exactly one of a and b, which must be polytopes.
std::optional<QVector> separating_point(const Polyhedron& a, const Polyhedron& b) {
    for (const auto& v : a.v().vertices)
        if (!b.contains(v)) return v;
    for (const auto& v : b.v().vertices)
        if (!a.contains(v)) return v;
    if (a.is_empty() != b.is_empty()) return a.is_empty() ? b.relint_point() : a.relint_point();
    return std::nullopt;
}

void require_match(const Polyhedron& got, const Polyhedron& expected, const char* what) {
    if (got == expected) return;
    auto w = separating_point(got, expected);
    throw CertificationFailure(what, w ? *w : QVector::Zero(got.ambient_dim()));
}

} // namespace

MomentSetCertificate certify_moment_set(const RootSystem& rs, const Polyhedron& delta, const Polyhedron& window) {
    if (delta.ambient_dim() != rs.rank || window.ambient_dim() != rs.rank)
        throw InputShapeError("certify_moment_set: dimension does not match the root system");
    if (window.is_empty() || !window.is_bounded()) throw PreconditionError("window must be a nonempty polytope");

    MomentSetCertificate c;
    c.chamber_wall = principal_wall(rs, delta);
    c.window = window;

    const auto witnesses = face_witnesses(delta, window);
    HPolyhedron h = window.h();
    for (const auto& x : witnesses) {
        const Polyhedron cone = tangent_cone(delta, x);
        h.halfspaces.insert(h.halfspaces.end(), cone.h().halfspaces.begin(), cone.h().halfspaces.end());
        h.equalities.insert(h.equalities.end(), cone.h().equalities.begin(), cone.h().equalities.end());
    }
    // No witness means delta misses the window entirely.
    c.local_part = witnesses.empty() ? Polyhedron::empty(rs.rank) : Polyhedron::from_h(std::move(h)).minimized();
    c.assembled = intersect(wall_closure(rs, c.chamber_wall), c.local_part);
    require_match(c.assembled, intersect(delta, window), "assembled set differs from the input on the window");
    return c;
}

MomentSetCertificate certify_moment_set(const RootSystem& rs, const SampleCloud& cloud, const Polyhedron& window,
                                        double eps) {
    if (cloud.points.empty()) throw PreconditionError("certify_moment_set: empty cloud");
    if (cloud.dim() != rs.rank) throw InputShapeError("certify_moment_set: cloud dimension does not match the root system");
    const Polyhedron ch = Polyhedron::from_h(chamber(rs));
    std::vector<QVector> pts;
    pts.reserve(cloud.points.size());
    for (const auto& x : cloud.points) {
        QVector q(x.size());
        for (Eigen::Index i = 0; i < x.size(); ++i) q(i) = rationalize(x(i), kResolution);
        if (!ch.contains(q)) {
            for (const auto& hs : ch.h().halfspaces)
                if (to_double(pair(q, hs.normal) - hs.offset) < -eps * to_double(to_rational(hs.normal)).norm())
                    throw NotInChamberError("sample lies outside the chamber beyond eps");
            q = dominant_projection(rs, q).x_plus;
        }
        pts.push_back(std::move(q));
    }
    const Polyhedron hull = Polyhedron::from_points(rs.rank, pts);
    MomentSetCertificate c = certify_moment_set(rs, hull, window);

    SampleCloud inside;
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < cloud.points.size(); ++i)
        if (window.contains(pts[i])) {
            inside.points.push_back(to_double(pts[i]));
            ids.push_back(i);
        }
    const auto report = containment(c.assembled, inside, eps);
    if (report.first_outside)
        throw CertificationFailure("sample in the window lies outside the assembled set", pts[ids[*report.first_outside]]);
    return c;
}

Polyhedron bounding_window(const Polyhedron& p, const Rational& pad) {
    if (p.is_empty()) throw PreconditionError("bounding_window: empty input");
    const Eigen::Index n = p.ambient_dim();
    const VPolyhedron& v = p.v();
    std::vector<QVector> pts = v.vertices;
    for (const auto& x : v.vertices) {
        for (const auto& r : v.rays) pts.push_back(x + to_rational(r));
        for (const auto& l : v.lineality) {
            pts.push_back(x + to_rational(l));
            pts.push_back(x - to_rational(l));
        }
    }
    QVector lo = pts.front(), hi = pts.front();
    for (const auto& x : pts)
        for (Eigen::Index i = 0; i < n; ++i) {
            if (x(i) < lo(i)) lo(i) = x(i);
            if (x(i) > hi(i)) hi(i) = x(i);
        }
    HPolyhedron box;
    box.dim = n;
    for (Eigen::Index i = 0; i < n; ++i) {
        box.halfspaces.push_back({ZVector::Unit(n, i), lo(i) - pad});
        box.halfspaces.push_back({ZVector(-ZVector::Unit(n, i)), -(hi(i) + pad)});
    }
    return Polyhedron::from_h(std::move(box));
}

MomentSetCertificate cut_then_certify(const LabeledPolytope& m, const CutSpec& p, const RootSystem& rs) {
    const CutResult cut = symplectic_cut(m, p);
    const Polyhedron window = bounding_window(cut.cut.polytope);
    MomentSetCertificate after = certify_moment_set(rs, cut.cut.polytope, window);
    const MomentSetCertificate before = certify_moment_set(rs, m.polytope, window);
    require_match(after.assembled, intersect(before.assembled, Polyhedron::from_h(p.p)),
                  "cutting does not commute with certification");
    return after;
}

} // namespace momentcut
