#include "momentcut/toric_cuts.hpp"

#include <algorithm>

namespace momentcut {

namespace {

// True for halfspaces whose tight set is a facet.
std::vector<bool> facet_defining(const Polyhedron& p) {
    const auto& hs = p.h().halfspaces;
    const auto& v = p.v();
    std::vector<bool> out(hs.size(), false);
    for (std::size_t i = 0; i < hs.size(); ++i) {
        std::vector<int> vids, rids;
        for (std::size_t j = 0; j < v.vertices.size(); ++j)
            if (pair(v.vertices[j], hs[i].normal) == hs[i].offset) vids.push_back(static_cast<int>(j));
        if (vids.empty()) continue;
        for (std::size_t j = 0; j < v.rays.size(); ++j)
            if (pair(v.rays[j], hs[i].normal) == 0) rids.push_back(static_cast<int>(j));
        out[i] = describe_face(p, vids, rids).dim == p.dim() - 1;
    }
    return out;
}

Polyhedron cut_set(const CutSpec& p, Eigen::Index dim) {
    if (p.p.dim != dim) throw InputShapeError("cut: dimension mismatch");
    if (!p.p.equalities.empty()) throw InputShapeError("cut: cut specifications contain halfspaces only");
    for (const auto& hs : p.p.halfspaces)
        if (hs.normal.size() != dim || is_zero<Integer>(hs.normal) || gcd_of(hs.normal) != 1)
            throw InputShapeError("cut: normals must be primitive integral vectors");
    return Polyhedron::from_h(p.p);
}

} // namespace

LabeledPolytope make_labeled_polytope(const Polyhedron& p, std::map<int, int> labels) {
    const Eigen::Index n = p.ambient_dim();
    if (!p.h().equalities.empty() || p.dim() != n)
        throw InputShapeError("labeled polytope must be full-dimensional and given by halfspaces only");
    if (!p.is_pointed()) throw InputShapeError("labeled polytope must have a vertex");
    const auto& hs = p.h().halfspaces;
    const auto defining = facet_defining(p);
    for (std::size_t i = 0; i < hs.size(); ++i) {
        if (!defining[i]) throw InputShapeError("halfspace " + std::to_string(i) + " is not a facet");
        for (std::size_t j = 0; j < i; ++j)
            if (hs[i].normal == hs[j].normal) throw InputShapeError("halfspace " + std::to_string(i) + " repeats a facet");
    }
    if (!is_simple_at_vertices(p)) throw PreconditionError("labeled polytope is not simple");
    for (const auto& [k, label] : labels) {
        if (k < 0 || static_cast<std::size_t>(k) >= hs.size()) throw InputShapeError("label for unknown facet " + std::to_string(k));
        if (label < 1) throw DomainError("facet labels must be positive");
    }
    for (std::size_t i = 0; i < hs.size(); ++i) labels.emplace(static_cast<int>(i), 1);
    return {p, std::move(labels)};
}

LabeledPolytope make_labeled_polytope(HPolyhedron h, std::map<int, int> labels) {
    return make_labeled_polytope(Polyhedron::from_h(std::move(h)), std::move(labels));
}

GenericityReport is_generic_cut(const LabeledPolytope& m, const CutSpec& p) {
    const Eigen::Index n = m.polytope.ambient_dim();
    const Polyhedron cut = cut_set(p, n);
    GenericityReport report;
    if (cut.is_empty()) return report;

    const auto mf = faces(m.polytope), pf = faces(cut);
    std::vector<Polyhedron> mc, pc;
    for (const auto& f : mf) mc.push_back(face_closure(m.polytope, f));
    for (const auto& g : pf) pc.push_back(face_closure(cut, g));

    for (std::size_t i = 0; i < mf.size(); ++i)
        for (std::size_t j = 0; j < pf.size(); ++j) {
            auto dirs = face_directions(m.polytope, mf[i]);
            const auto gd = face_directions(cut, pf[j]);
            dirs.insert(dirs.end(), gd.begin(), gd.end());
            if (span_dim(dirs, n) == n) continue;
            if (intersect(mc[i], pc[j]).is_empty()) continue;
            report.ok = false;
            report.witness = FacePair{mf[i], pf[j]};
            return report;
        }

    if (!is_simple_at_vertices(intersect(m.polytope, cut))) report.ok = false;
    return report;
}

CutResult symplectic_cut(const LabeledPolytope& m, const CutSpec& p) {
    const Eigen::Index n = m.polytope.ambient_dim();
    const Polyhedron cut = cut_set(p, n);
    const auto report = is_generic_cut(m, p);
    if (!report.ok) throw NonGenericCutError("the cut is not generic", report.witness);
    if (intersect(m.polytope, cut).is_empty()) throw PreconditionError("the cut is empty");

    // Candidate facets: old ones first, then the cutting halfspaces.
    HPolyhedron all;
    all.dim = n;
    std::vector<int> label_of;
    for (std::size_t i = 0; i < m.polytope.h().halfspaces.size(); ++i) {
        all.halfspaces.push_back(m.polytope.h().halfspaces[i]);
        label_of.push_back(m.facet_labels.at(static_cast<int>(i)));
    }
    for (const auto& hs : p.p.halfspaces) {
        all.halfspaces.push_back(hs);
        label_of.push_back(1);
    }
    const Polyhedron candidate = Polyhedron::from_h(all);
    const auto defining = facet_defining(candidate);

    HPolyhedron kept;
    kept.dim = n;
    std::map<int, int> labels;
    for (std::size_t i = 0; i < all.halfspaces.size(); ++i) {
        if (!defining[i]) continue;
        bool repeated = false;
        for (const auto& k : kept.halfspaces)
            if (k.normal == all.halfspaces[i].normal && k.offset == all.halfspaces[i].offset) repeated = true;
        if (repeated) continue;
        labels[static_cast<int>(kept.halfspaces.size())] = label_of[i];
        kept.halfspaces.push_back(all.halfspaces[i]);
    }

    CutResult result;
    result.cut = make_labeled_polytope(std::move(kept), std::move(labels));
    for (const auto& [k, label] : m.facet_labels)
        if (label > 1) result.labels_flagged = true;
    const auto zn = IntegerLattice::standard(n);
    for (auto& f : faces(result.cut.polytope)) {
        IntegerLattice lattice = annihilator_lattice(face_directions(result.cut.polytope, f), zn);
        result.strata.push_back({std::move(f), std::move(lattice)});
    }
    return result;
}

bool is_compact_cut(const LabeledPolytope& m, const CutSpec& p) {
    return intersect(m.polytope, cut_set(p, m.polytope.ambient_dim())).is_bounded();
}

std::vector<ZVector> vertex_weights(const LabeledPolytope& m, const QVector& v) {
    const auto& vs = m.polytope.v();
    if (v.size() != m.polytope.ambient_dim()) throw InputShapeError("vertex_weights: dimension mismatch");
    const auto it = std::find(vs.vertices.begin(), vs.vertices.end(), v);
    if (it == vs.vertices.end()) throw PointNotVertexError("point is not a vertex of the polytope");
    const int vid = static_cast<int>(it - vs.vertices.begin());
    std::vector<ZVector> out;
    for (const auto& f : faces(m.polytope)) {
        if (f.dim != 1 || std::find(f.vertex_ids.begin(), f.vertex_ids.end(), vid) == f.vertex_ids.end()) continue;
        if (f.vertex_ids.size() == 2) {
            const int other = f.vertex_ids[0] == vid ? f.vertex_ids[1] : f.vertex_ids[0];
            out.push_back(primitive(QVector(vs.vertices[static_cast<std::size_t>(other)] - v)));
        } else {
            out.push_back(vs.rays[static_cast<std::size_t>(f.ray_ids.at(0))]);
        }
    }
    std::sort(out.begin(), out.end(), [](const ZVector& a, const ZVector& b) { return lex_less<Integer>(a, b); });
    return out;
}

} // namespace momentcut
