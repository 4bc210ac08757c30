#include "momentcut/polyhedra.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <map>
#include <random>
#include <set>

namespace momentcut {

namespace {

void check_dim(Eigen::Index got, Eigen::Index want, const char* what) {
    if (got != want)
        throw InputShapeError(std::string(what) + ": dimension " + std::to_string(got) + " where " +
                              std::to_string(want) + " was expected");
}

// ---------------------------------------------------------------------------
// Double description for homogeneous cones {y : <a, y> >= 0, <e, y> == 0}.

struct ConeGenerators {
    std::vector<ZVector> lineality;
    std::vector<ZVector> rays;
};

// r <- s*r - t*l for the combination that zeroes one constraint value.
ZVector combine(const Integer& s, const ZVector& r, const Integer& t, const ZVector& l) {
    ZVector out = s * r - t * l;
    return primitive(out);
}

ConeGenerators double_description(const std::vector<ZVector>& equalities, std::vector<ZVector> inequalities,
                                  Eigen::Index d) {
    std::vector<ZVector> lin;
    for (Eigen::Index i = 0; i < d; ++i) lin.push_back(ZVector::Unit(d, i));

    // Equalities shrink the lineality space only: no rays exist yet.
    for (const auto& e : equalities) {
        auto it = std::find_if(lin.begin(), lin.end(), [&](const ZVector& l) { return pair(e, l) != 0; });
        if (it == lin.end()) continue;
        ZVector pivot = *it;
        lin.erase(it);
        const Integer ep = pair(e, pivot);
        for (auto& l : lin) {
            const Integer el = pair(e, l);
            if (el != 0) l = combine(ep, l, el, pivot);
        }
    }

    std::sort(inequalities.begin(), inequalities.end(),
              [](const ZVector& a, const ZVector& b) { return lex_less<Integer>(a, b); });
    inequalities.erase(std::unique(inequalities.begin(), inequalities.end()), inequalities.end());

    const std::size_t m = inequalities.size();
    std::vector<ZVector> rays;
    std::vector<boost::dynamic_bitset<>> zeros;  // tight inequalities per ray

    for (std::size_t k = 0; k < m; ++k) {
        const ZVector& a = inequalities[k];
        if (is_zero<Integer>(a)) {
            for (auto& z : zeros) z.set(k);
            continue;
        }
        auto it = std::find_if(lin.begin(), lin.end(), [&](const ZVector& l) { return pair(a, l) != 0; });
        if (it != lin.end()) {
            ZVector pivot = *it;
            lin.erase(it);
            Integer ap = pair(a, pivot);
            if (ap < 0) {
                pivot = -pivot;
                ap = -ap;
            }
            for (auto& l : lin) {
                const Integer al = pair(a, l);
                if (al != 0) l = combine(ap, l, al, pivot);
            }
            for (std::size_t i = 0; i < rays.size(); ++i) {
                const Integer ar = pair(a, rays[i]);
                if (ar != 0) rays[i] = combine(ap, rays[i], ar, pivot);
                zeros[i].set(k);
            }
            boost::dynamic_bitset<> z(m);
            for (std::size_t j = 0; j < k; ++j) z.set(j);
            rays.push_back(pivot);
            zeros.push_back(z);
            continue;
        }

        std::vector<Integer> value(rays.size());
        bool any_negative = false;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            value[i] = pair(a, rays[i]);
            if (value[i] < 0) any_negative = true;
            if (value[i] == 0) zeros[i].set(k);
        }
        if (!any_negative) continue;

        std::vector<ZVector> next_rays;
        std::vector<boost::dynamic_bitset<>> next_zeros;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (value[i] >= 0) {
                next_rays.push_back(rays[i]);
                next_zeros.push_back(zeros[i]);
            }
        }
        for (std::size_t p = 0; p < rays.size(); ++p) {
            if (value[p] <= 0) continue;
            for (std::size_t n = 0; n < rays.size(); ++n) {
                if (value[n] >= 0) continue;
                const boost::dynamic_bitset<> common = zeros[p] & zeros[n];
                // Adjacent iff no third extreme ray is tight on everything p and n share.
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
                    if (r == p || r == n) continue;
                    if (common.is_subset_of(zeros[r])) adjacent = false;
                }
                if (!adjacent) continue;
                next_rays.push_back(combine(value[p], rays[n], value[n], rays[p]));
                boost::dynamic_bitset<> z = common;
                z.set(k);
                next_zeros.push_back(z);
            }
        }
        rays = std::move(next_rays);
        zeros = std::move(next_zeros);
    }
    return {lin, rays};
}

// Canonical basis of a linear span: reduced row echelon rows with denominators cleared.
std::vector<ZVector> canonical_span(const std::vector<ZVector>& vectors, Eigen::Index d) {
    if (vectors.empty()) return {};
    QMatrix m(static_cast<Eigen::Index>(vectors.size()), d);
    for (std::size_t i = 0; i < vectors.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = to_rational(vectors[i]).transpose();
    const auto ech = reduced_row_echelon<Rational>(m);
    std::vector<ZVector> out;
    for (Eigen::Index i = 0; i < ech.reduced.rows(); ++i) out.push_back(primitive(QVector(ech.reduced.row(i).transpose())));
    return out;
}

// Orthogonal projection onto the complement of span(basis), exact.
struct ComplementProjector {
    QMatrix basis;  // columns
    QMatrix gram_inv;

    explicit ComplementProjector(const std::vector<ZVector>& lineality, Eigen::Index d) {
        basis.resize(d, static_cast<Eigen::Index>(lineality.size()));
        for (std::size_t i = 0; i < lineality.size(); ++i) basis.col(static_cast<Eigen::Index>(i)) = to_rational(lineality[i]);
        if (!lineality.empty()) {
            const QMatrix g = basis.transpose() * basis;
            gram_inv = g.inverse();
        }
    }

    QVector operator()(const QVector& x) const {
        if (basis.cols() == 0) return x;
        const QVector coeffs = gram_inv * (basis.transpose() * x);
        return x - basis * coeffs;
    }
};

template <typename T>
void sort_unique(std::vector<Vector<T>>& vs) {
    std::sort(vs.begin(), vs.end(), [](const Vector<T>& a, const Vector<T>& b) { return lex_less<T>(a, b); });
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

HPolyhedron canonical_empty(Eigen::Index dim) {
    HPolyhedron h;
    h.dim = dim;
    h.halfspaces.push_back({ZVector::Unit(dim, 0), Rational(1)});
    h.halfspaces.push_back({-ZVector::Unit(dim, 0), Rational(0)});
    return h;
}

} // namespace

// ---------------------------------------------------------------------------

HalfSpace make_halfspace(const QVector& normal, const Rational& offset) {
    const ZVector cleared = clear_denominators(normal);
    const ZVector prim = primitive(cleared);
    // normal = s * prim with s > 0; the constraint <x, normal> >= b becomes <x, prim> >= b / s.
    Eigen::Index i = 0;
    while (prim(i) == 0) ++i;
    const Rational s = normal(i) / Rational(prim(i));
    return {prim, offset / s};
}

Equality make_equality(const QVector& normal, const Rational& offset) {
    const HalfSpace h = make_halfspace(normal, offset);
    return {h.normal, h.offset};
}

VPolyhedron h_to_v(const HPolyhedron& h) {
    const Eigen::Index n = h.dim;
    if (n < 1) throw InputShapeError("polyhedra need ambient dimension >= 1");
    auto homogenize = [&](const ZVector& normal, const Rational& offset) {
        ZVector row(n + 1);
        const Integer q = denominator(offset);
        row(0) = -numerator(offset);
        for (Eigen::Index i = 0; i < n; ++i) row(i + 1) = normal(i) * q;
        return row;
    };
    std::vector<ZVector> ineqs, eqs;
    for (const auto& hs : h.halfspaces) {
        check_dim(hs.normal.size(), n, "halfspace");
        ineqs.push_back(homogenize(hs.normal, hs.offset));
    }
    for (const auto& e : h.equalities) {
        check_dim(e.normal.size(), n, "equality");
        eqs.push_back(homogenize(e.normal, e.offset));
    }
    ineqs.push_back(ZVector::Unit(n + 1, 0));

    const ConeGenerators cone = double_description(eqs, ineqs, n + 1);

    VPolyhedron v;
    v.dim = n;
    std::vector<ZVector> lin;
    for (const auto& l : cone.lineality) lin.push_back(l.tail(n));
    v.lineality = canonical_span(lin, n);
    const ComplementProjector proj(v.lineality, n);

    for (const auto& r : cone.rays) {
        const ZVector x = r.tail(n);
        if (r(0) > 0) {
            v.vertices.push_back(proj(to_rational(x) / Rational(r(0))));
        } else if (!is_zero<Integer>(x)) {
            const QVector pr = proj(to_rational(x));
            if (!is_zero<Rational>(pr)) v.rays.push_back(primitive(pr));
        }
    }
    if (v.vertices.empty()) {
        v.rays.clear();
        v.lineality.clear();
        return v;
    }
    sort_unique(v.vertices);
    sort_unique(v.rays);
    return v;
}

HPolyhedron v_to_h(const VPolyhedron& v) {
    const Eigen::Index n = v.dim;
    if (n < 1) throw InputShapeError("polyhedra need ambient dimension >= 1");
    if (v.vertices.empty()) return canonical_empty(n);

    std::vector<ZVector> gens, lin;
    for (const auto& x : v.vertices) {
        check_dim(x.size(), n, "vertex");
        QVector hom(n + 1);
        hom(0) = 1;
        hom.tail(n) = x;
        gens.push_back(clear_denominators(hom));
    }
    for (const auto& r : v.rays) {
        check_dim(r.size(), n, "ray");
        if (is_zero<Integer>(r)) continue;
        ZVector hom = ZVector::Zero(n + 1);
        hom.tail(n) = r;
        gens.push_back(hom);
    }
    for (const auto& l : v.lineality) {
        check_dim(l.size(), n, "lineality vector");
        if (is_zero<Integer>(l)) continue;
        ZVector hom = ZVector::Zero(n + 1);
        hom.tail(n) = l;
        lin.push_back(hom);
    }

    // The dual cone's lineality gives equalities, its extreme rays the facets.
    const ConeGenerators dual = double_description(lin, gens, n + 1);

    HPolyhedron h;
    h.dim = n;

    // Equalities as reduced row echelon rows of [normal | offset]: <x, a> = -a0.
    QMatrix eq(static_cast<Eigen::Index>(dual.lineality.size()), n + 1);
    for (std::size_t i = 0; i < dual.lineality.size(); ++i) {
        const ZVector& l = dual.lineality[i];
        for (Eigen::Index j = 0; j < n; ++j) eq(static_cast<Eigen::Index>(i), j) = Rational(l(j + 1));
        eq(static_cast<Eigen::Index>(i), n) = Rational(-l(0));
    }
    RowEchelon<Rational> ech;
    if (eq.rows() > 0) ech = reduced_row_echelon<Rational>(eq);
    for (Eigen::Index i = 0; i < ech.reduced.rows(); ++i)
        h.equalities.push_back(make_equality(ech.reduced.row(i).head(n).transpose(), ech.reduced(i, n)));

    for (const auto& r : dual.rays) {
        QVector normal = to_rational(ZVector(r.tail(n)));
        Rational offset = Rational(-r(0));
        if (is_zero<Rational>(normal)) continue;
        // Reduce modulo the equalities so the halfspace is canonical.
        for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
            const Eigen::Index c = ech.pivots[i];
            const Rational f = normal(c);
            if (f == 0) continue;
            normal -= f * ech.reduced.row(static_cast<Eigen::Index>(i)).head(n).transpose();
            offset -= f * ech.reduced(static_cast<Eigen::Index>(i), n);
        }
        if (is_zero<Rational>(normal)) continue;
        h.halfspaces.push_back(make_halfspace(normal, offset));
    }
    std::sort(h.halfspaces.begin(), h.halfspaces.end(), [](const HalfSpace& a, const HalfSpace& b) {
        if (a.normal != b.normal) return lex_less<Integer>(a.normal, b.normal);
        return a.offset < b.offset;
    });
    return h;
}

// ---------------------------------------------------------------------------

Polyhedron::Polyhedron(HPolyhedron h, VPolyhedron v) : h_(std::move(h)), v_(std::move(v)) {
    implicit_.assign(h_.halfspaces.size(), false);
    if (v_.is_empty()) {
        affine_dim_ = -1;
        return;
    }
    for (std::size_t i = 0; i < h_.halfspaces.size(); ++i) {
        const auto& hs = h_.halfspaces[i];
        bool tight = true;
        for (const auto& x : v_.vertices)
            if (pair(x, hs.normal) != hs.offset) tight = false;
        for (const auto& r : v_.rays)
            if (pair(r, hs.normal) != 0) tight = false;
        implicit_[i] = tight;
    }
    std::vector<QVector> dirs;
    for (std::size_t i = 1; i < v_.vertices.size(); ++i) dirs.push_back(v_.vertices[i] - v_.vertices[0]);
    for (const auto& r : v_.rays) dirs.push_back(to_rational(r));
    for (const auto& l : v_.lineality) dirs.push_back(to_rational(l));
    affine_dim_ = span_dim(dirs, h_.dim);
}

Polyhedron Polyhedron::from_h(HPolyhedron h) {
    VPolyhedron v = h_to_v(h);
    return Polyhedron(std::move(h), std::move(v));
}

Polyhedron Polyhedron::from_v(VPolyhedron v) {
    HPolyhedron h = v_to_h(v);
    if (v.vertices.empty()) {
        VPolyhedron e;
        e.dim = v.dim;
        return Polyhedron(std::move(h), std::move(e));
    }
    VPolyhedron minimal = h_to_v(h);
    return Polyhedron(std::move(h), std::move(minimal));
}

Polyhedron Polyhedron::from_points(Eigen::Index dim, const std::vector<QVector>& points) {
    VPolyhedron v;
    v.dim = dim;
    v.vertices = points;
    return from_v(std::move(v));
}

Polyhedron Polyhedron::empty(Eigen::Index dim) {
    VPolyhedron v;
    v.dim = dim;
    return Polyhedron(canonical_empty(dim), v);
}

Polyhedron Polyhedron::universe(Eigen::Index dim) {
    HPolyhedron h;
    h.dim = dim;
    return from_h(h);
}

Polyhedron Polyhedron::point(const QVector& x) { return from_points(x.size(), {x}); }

bool Polyhedron::contains(const QVector& x) const {
    check_dim(x.size(), h_.dim, "point");
    for (const auto& hs : h_.halfspaces)
        if (pair(x, hs.normal) < hs.offset) return false;
    for (const auto& e : h_.equalities)
        if (pair(x, e.normal) != e.offset) return false;
    return true;
}

bool Polyhedron::relint_contains(const QVector& x) const {
    if (is_empty() || !contains(x)) return false;
    for (std::size_t i = 0; i < h_.halfspaces.size(); ++i)
        if (!implicit_[i] && pair(x, h_.halfspaces[i].normal) == h_.halfspaces[i].offset) return false;
    return true;
}

bool Polyhedron::includes(const Polyhedron& other) const {
    check_dim(other.ambient_dim(), ambient_dim(), "polyhedron");
    if (other.is_empty()) return true;
    if (is_empty()) return false;
    for (const auto& x : other.v_.vertices)
        if (!contains(x)) return false;
    for (const auto& r : other.v_.rays) {
        for (const auto& hs : h_.halfspaces)
            if (pair(r, hs.normal) < 0) return false;
        for (const auto& e : h_.equalities)
            if (pair(r, e.normal) != 0) return false;
    }
    for (const auto& l : other.v_.lineality) {
        for (const auto& hs : h_.halfspaces)
            if (pair(l, hs.normal) != 0) return false;
        for (const auto& e : h_.equalities)
            if (pair(l, e.normal) != 0) return false;
    }
    return true;
}

QVector Polyhedron::relint_point() const {
    if (is_empty()) throw PreconditionError("relative interior of the empty set");
    QVector x = QVector::Zero(h_.dim);
    for (const auto& v : v_.vertices) x += v;
    x /= Rational(static_cast<long>(v_.vertices.size()));
    for (const auto& r : v_.rays) x += to_rational(r);
    return x;
}

Polyhedron Polyhedron::minimized() const {
    if (is_empty()) return empty(h_.dim);
    return Polyhedron(v_to_h(v_), v_);
}

bool operator==(const Polyhedron& a, const Polyhedron& b) {
    if (a.ambient_dim() != b.ambient_dim()) return false;
    return a.includes(b) && b.includes(a);
}

// ---------------------------------------------------------------------------
// Faces

FaceDescriptor describe_face(const Polyhedron& p, std::vector<int> vertex_ids, std::vector<int> ray_ids) {
    const auto& v = p.v();
    const auto& hs = p.h().halfspaces;
    FaceDescriptor f;
    for (std::size_t i = 0; i < hs.size(); ++i) {
        bool tight = true;
        for (int id : vertex_ids)
            if (pair(v.vertices[static_cast<std::size_t>(id)], hs[i].normal) != hs[i].offset) tight = false;
        for (int id : ray_ids)
            if (pair(v.rays[static_cast<std::size_t>(id)], hs[i].normal) != 0) tight = false;
        if (tight) f.active_set.push_back(static_cast<int>(i));
    }
    f.vertex_ids = std::move(vertex_ids);
    f.ray_ids = std::move(ray_ids);
    f.dim = span_dim(face_directions(p, f), p.ambient_dim());
    QVector x = QVector::Zero(p.ambient_dim());
    for (int id : f.vertex_ids) x += v.vertices[static_cast<std::size_t>(id)];
    x /= Rational(static_cast<long>(f.vertex_ids.size()));
    for (int id : f.ray_ids) x += to_rational(v.rays[static_cast<std::size_t>(id)]);
    f.relint_point = x;
    return f;
}

std::vector<QVector> face_directions(const Polyhedron& p, const FaceDescriptor& face) {
    const auto& v = p.v();
    std::vector<QVector> dirs;
    for (std::size_t i = 1; i < face.vertex_ids.size(); ++i)
        dirs.push_back(v.vertices[static_cast<std::size_t>(face.vertex_ids[i])] -
                       v.vertices[static_cast<std::size_t>(face.vertex_ids[0])]);
    for (int id : face.ray_ids) dirs.push_back(to_rational(v.rays[static_cast<std::size_t>(id)]));
    for (const auto& l : v.lineality) dirs.push_back(to_rational(l));
    return dirs;
}

std::vector<FaceDescriptor> faces(const Polyhedron& p) {
    if (p.is_empty()) return {};
    const auto& v = p.v();
    const auto& hs = p.h().halfspaces;
    const std::size_t nv = v.vertices.size(), nr = v.rays.size();

    std::vector<std::vector<bool>> tight_vertex(hs.size(), std::vector<bool>(nv));
    std::vector<std::vector<bool>> tight_ray(hs.size(), std::vector<bool>(nr));
    for (std::size_t i = 0; i < hs.size(); ++i) {
        for (std::size_t j = 0; j < nv; ++j) tight_vertex[i][j] = pair(v.vertices[j], hs[i].normal) == hs[i].offset;
        for (std::size_t j = 0; j < nr; ++j) tight_ray[i][j] = pair(v.rays[j], hs[i].normal) == 0;
    }

    using Key = std::pair<std::vector<int>, std::vector<int>>;
    std::map<Key, FaceDescriptor> found;
    std::vector<Key> queue;

    Key top;
    for (std::size_t j = 0; j < nv; ++j) top.first.push_back(static_cast<int>(j));
    for (std::size_t j = 0; j < nr; ++j) top.second.push_back(static_cast<int>(j));
    found.emplace(top, describe_face(p, top.first, top.second));
    queue.push_back(top);

    for (std::size_t q = 0; q < queue.size(); ++q) {
        const Key current = queue[q];
        const FaceDescriptor& face = found.at(current);
        std::vector<bool> active(hs.size(), false);
        for (int a : face.active_set) active[static_cast<std::size_t>(a)] = true;
        for (std::size_t i = 0; i < hs.size(); ++i) {
            if (active[i]) continue;
            Key sub;
            for (int id : current.first)
                if (tight_vertex[i][static_cast<std::size_t>(id)]) sub.first.push_back(id);
            if (sub.first.empty()) continue;
            for (int id : current.second)
                if (tight_ray[i][static_cast<std::size_t>(id)]) sub.second.push_back(id);
            if (found.count(sub)) continue;
            found.emplace(sub, describe_face(p, sub.first, sub.second));
            queue.push_back(sub);
        }
    }

    std::vector<FaceDescriptor> out;
    for (auto& [key, f] : found) out.push_back(std::move(f));
    std::sort(out.begin(), out.end(), [](const FaceDescriptor& a, const FaceDescriptor& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.active_set > b.active_set;
    });
    return out;
}

std::vector<FaceDescriptor> facets(const Polyhedron& p) {
    std::vector<FaceDescriptor> out;
    for (auto& f : faces(p))
        if (f.dim == p.dim() - 1) out.push_back(std::move(f));
    return out;
}

Polyhedron face_closure(const Polyhedron& p, const FaceDescriptor& face) {
    HPolyhedron h = p.h();
    std::vector<bool> active(h.halfspaces.size(), false);
    for (int a : face.active_set) active.at(static_cast<std::size_t>(a)) = true;
    HPolyhedron out;
    out.dim = h.dim;
    out.equalities = h.equalities;
    for (std::size_t i = 0; i < h.halfspaces.size(); ++i) {
        if (active[i])
            out.equalities.push_back({h.halfspaces[i].normal, h.halfspaces[i].offset});
        else
            out.halfspaces.push_back(h.halfspaces[i]);
    }
    return Polyhedron::from_h(std::move(out));
}

// ---------------------------------------------------------------------------
// Set operations

Polyhedron intersect(const Polyhedron& a, const Polyhedron& b) {
    check_dim(b.ambient_dim(), a.ambient_dim(), "intersect");
    HPolyhedron h = a.h();
    h.halfspaces.insert(h.halfspaces.end(), b.h().halfspaces.begin(), b.h().halfspaces.end());
    h.equalities.insert(h.equalities.end(), b.h().equalities.begin(), b.h().equalities.end());
    return Polyhedron::from_h(std::move(h)).minimized();
}

Polyhedron translate(const Polyhedron& p, const QVector& offset) {
    check_dim(offset.size(), p.ambient_dim(), "translate");
    if (p.is_empty()) return p;
    VPolyhedron v = p.v();
    for (auto& x : v.vertices) x += offset;
    return Polyhedron::from_v(std::move(v));
}

Polyhedron linear_image(const Polyhedron& p, const QMatrix& map) {
    check_dim(map.cols(), p.ambient_dim(), "linear_image");
    if (p.is_empty()) return Polyhedron::empty(map.rows());
    VPolyhedron v;
    v.dim = map.rows();
    for (const auto& x : p.v().vertices) v.vertices.push_back(map * x);
    for (const auto& r : p.v().rays) {
        const QVector image = map * to_rational(r);
        if (!is_zero<Rational>(image)) v.rays.push_back(primitive(image));
    }
    for (const auto& l : p.v().lineality) {
        const QVector image = map * to_rational(l);
        if (!is_zero<Rational>(image)) v.lineality.push_back(primitive(image));
    }
    return Polyhedron::from_v(std::move(v));
}

namespace {

struct Row {
    QVector coeffs;
    Rational rhs;
};

} // namespace

Polyhedron project(const Polyhedron& p, const QMatrix& map) {
    const Eigen::Index n = p.ambient_dim(), m = map.rows();
    check_dim(map.cols(), n, "project");
    if (m < 1) throw InputShapeError("project: the target space needs dimension >= 1");
    if (p.is_empty()) return Polyhedron::empty(m);

    // Variables (x, y); constraints of p on x and y - map x = 0.
    std::vector<Row> ineqs, eqs;
    for (const auto& hs : p.h().halfspaces) {
        QVector c = QVector::Zero(n + m);
        c.head(n) = to_rational(hs.normal);
        ineqs.push_back({c, hs.offset});
    }
    for (const auto& e : p.h().equalities) {
        QVector c = QVector::Zero(n + m);
        c.head(n) = to_rational(e.normal);
        eqs.push_back({c, e.offset});
    }
    for (Eigen::Index i = 0; i < m; ++i) {
        QVector c = QVector::Zero(n + m);
        c.head(n) = -map.row(i).transpose();
        c(n + i) = 1;
        eqs.push_back({c, Rational(0)});
    }

    Eigen::Index vars = n + m;
    for (Eigen::Index step = 0; step < n; ++step) {
        auto pivot = std::find_if(eqs.begin(), eqs.end(), [](const Row& r) { return r.coeffs(0) != 0; });
        if (pivot != eqs.end()) {
            const Row e = *pivot;
            eqs.erase(pivot);
            auto eliminate = [&](Row& r) {
                if (r.coeffs(0) == 0) return;
                const Rational f = r.coeffs(0) / e.coeffs(0);
                r.coeffs -= f * e.coeffs;
                r.rhs -= f * e.rhs;
            };
            for (auto& r : eqs) eliminate(r);
            for (auto& r : ineqs) eliminate(r);
        } else {
            std::vector<Row> pos, neg, next;
            for (auto& r : ineqs) {
                if (r.coeffs(0) > 0)
                    pos.push_back(r);
                else if (r.coeffs(0) < 0)
                    neg.push_back(r);
                else
                    next.push_back(r);
            }
            for (const auto& a : pos)
                for (const auto& b : neg) {
                    const Rational wa = -b.coeffs(0), wb = a.coeffs(0);
                    next.push_back({wa * a.coeffs + wb * b.coeffs, wa * a.rhs + wb * b.rhs});
                }
            ineqs = std::move(next);
        }

        // Drop the eliminated column, then remove redundancy exactly.
        --vars;
        HPolyhedron h;
        h.dim = vars;
        for (const auto& r : ineqs) {
            const QVector c = r.coeffs.tail(vars);
            if (is_zero<Rational>(c)) {
                if (r.rhs > 0) return Polyhedron::empty(m);
                continue;
            }
            h.halfspaces.push_back(make_halfspace(c, r.rhs));
        }
        for (const auto& r : eqs) {
            const QVector c = r.coeffs.tail(vars);
            if (is_zero<Rational>(c)) {
                if (r.rhs != 0) return Polyhedron::empty(m);
                continue;
            }
            h.equalities.push_back(make_equality(c, r.rhs));
        }
        const Polyhedron reduced = Polyhedron::from_h(h).minimized();
        if (reduced.is_empty()) return Polyhedron::empty(m);
        ineqs.clear();
        eqs.clear();
        for (const auto& hs : reduced.h().halfspaces) ineqs.push_back({to_rational(hs.normal), hs.offset});
        for (const auto& e : reduced.h().equalities) eqs.push_back({to_rational(e.normal), e.offset});
    }

    HPolyhedron out;
    out.dim = m;
    for (const auto& r : ineqs) out.halfspaces.push_back(make_halfspace(r.coeffs, r.rhs));
    for (const auto& r : eqs) out.equalities.push_back(make_equality(r.coeffs, r.rhs));
    return Polyhedron::from_h(std::move(out)).minimized();
}

// ---------------------------------------------------------------------------
// Tangent cones and the convex-set reconstruction

Polyhedron tangent_cone(const Polyhedron& p, const QVector& x) {
    if (!p.contains(x)) throw PointNotInSetError("tangent_cone: point is not in the polyhedron");
    HPolyhedron h;
    h.dim = p.ambient_dim();
    h.equalities = p.h().equalities;
    for (const auto& hs : p.h().halfspaces)
        if (pair(x, hs.normal) == hs.offset) h.halfspaces.push_back(hs);
    return Polyhedron::from_h(std::move(h));
}

std::vector<QVector> face_witnesses(const Polyhedron& p, const Polyhedron& s) {
    check_dim(s.ambient_dim(), p.ambient_dim(), "face_witnesses");
    std::vector<QVector> out;
    for (const auto& f : faces(p)) {
        const Polyhedron q = intersect(face_closure(p, f), s);
        if (!q.is_empty()) out.push_back(q.relint_point());
    }
    sort_unique(out);
    return out;
}

Polyhedron reconstruct_from_tangent_cones(const std::vector<QVector>& x_set, const Polyhedron& p,
                                          const Polyhedron& s) {
    check_dim(s.ambient_dim(), p.ambient_dim(), "reconstruct_from_tangent_cones");
    HPolyhedron h = s.h();
    for (const auto& x : x_set) {
        if (!s.contains(x)) throw PointNotInSetError("witness point lies outside s");
        const Polyhedron cone = tangent_cone(p, x);
        h.halfspaces.insert(h.halfspaces.end(), cone.h().halfspaces.begin(), cone.h().halfspaces.end());
        h.equalities.insert(h.equalities.end(), cone.h().equalities.begin(), cone.h().equalities.end());
    }
    Polyhedron result = Polyhedron::from_h(std::move(h)).minimized();
    if (result != intersect(p, s))
        throw InsufficientWitnessError("tangent cones at the given witnesses do not cut out p n s");
    return result;
}

// ---------------------------------------------------------------------------

bool is_simple_at_vertices(const Polyhedron& p) {
    if (p.is_empty()) return true;
    const auto all = faces(p);
    std::vector<const FaceDescriptor*> facet_list;
    for (const auto& f : all)
        if (f.dim == p.dim() - 1) facet_list.push_back(&f);
    for (const auto& f : all) {
        if (f.dim != 0) continue;
        const int vid = f.vertex_ids.front();
        Eigen::Index count = 0;
        for (const auto* fa : facet_list)
            if (std::find(fa->vertex_ids.begin(), fa->vertex_ids.end(), vid) != fa->vertex_ids.end()) ++count;
        if (count != p.dim()) return false;
    }
    return true;
}

bool is_simple(const Polyhedron& p) {
    if (!p.is_bounded()) throw UnboundedInputError("is_simple expects a polytope");
    return is_simple_at_vertices(p);
}

Polyhedron fit_generic_polytope(const Polyhedron& k, const HPolyhedron& sigma) {
    const Eigen::Index n = k.ambient_dim();
    check_dim(sigma.dim, n, "fit_generic_polytope");
    if (k.is_empty()) throw PreconditionError("fit_generic_polytope: k is empty");
    if (!k.is_bounded()) throw UnboundedInputError("fit_generic_polytope: k must be bounded");
    if (!sigma.equalities.empty()) throw InputShapeError("fit_generic_polytope: sigma must be open in the ambient space");

    // A cube neighbourhood of k that stays inside sigma.
    Rational radius(1);
    for (const auto& hs : sigma.halfspaces) {
        Rational slack;
        bool first = true;
        for (const auto& x : k.v().vertices) {
            const Rational s = pair(x, hs.normal) - hs.offset;
            if (first || s < slack) slack = s;
            first = false;
        }
        if (slack <= 0) throw NoRoomError("k touches the boundary of sigma");
        Integer l1 = 0;
        for (Eigen::Index i = 0; i < n; ++i) l1 += abs(hs.normal(i));
        radius = std::min(radius, slack / Rational(2 * l1));
    }

    std::vector<QVector> points;
    for (const auto& x : k.v().vertices)
        for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
            QVector y = x;
            for (Eigen::Index i = 0; i < n; ++i) y(i) += ((mask >> i) & 1ul) ? radius : Rational(-radius);
            points.push_back(y);
        }
    const Polyhedron hull = Polyhedron::from_points(n, points);
    if (is_simple(hull)) return hull;

    // Push facets inward by small distinct rationals until the result is simple.
    std::vector<Rational> margin;
    for (const auto& hs : hull.h().halfspaces) {
        Rational m;
        bool first = true;
        for (const auto& x : k.v().vertices) {
            const Rational s = pair(x, hs.normal) - hs.offset;
            if (first || s < m) m = s;
            first = false;
        }
        margin.push_back(m);
    }
    std::mt19937_64 rng(0x5eed);
    for (int attempt = 1; attempt <= 64; ++attempt) {
        const long denom = 16l * attempt + 1;
        std::uniform_int_distribution<long> pick(1, denom - 1);
        HPolyhedron h = hull.h();
        for (std::size_t i = 0; i < h.halfspaces.size(); ++i)
            h.halfspaces[i].offset += margin[i] * Rational(pick(rng), 2 * denom);
        const Polyhedron candidate = Polyhedron::from_h(std::move(h)).minimized();
        if (candidate.is_bounded() && is_simple(candidate)) return candidate;
    }
    throw DomainError("fit_generic_polytope: no simple perturbation found");
}

Polyhedron closure_of_face_intersection(const Polyhedron& cone, const FaceDescriptor& face, const Polyhedron& p) {
    check_dim(p.ambient_dim(), cone.ambient_dim(), "closure_of_face_intersection");
    const Polyhedron closed_face = face_closure(cone, face);
    const Polyhedron q = intersect(closed_face, p);
    if (q.is_empty()) throw PreconditionError("the face and p do not meet");
    // relint(face) n relint(p) is nonempty iff it contains the relint point of their intersection.
    const QVector x = q.relint_point();
    if (!closed_face.relint_contains(x) || !p.relint_contains(x))
        throw PreconditionError("relint(face) does not meet relint(p)");
    return q;
}

LinearMinimum minimize_linear(const Polyhedron& p, const QVector& xi) {
    check_dim(xi.size(), p.ambient_dim(), "minimize_linear");
    if (p.is_empty()) throw PreconditionError("minimize_linear over the empty set");
    const auto& v = p.v();
    LinearMinimum out;
    for (const auto& l : v.lineality)
        if (pair(xi, l) != 0) out.unbounded = true;
    for (const auto& r : v.rays)
        if (pair(xi, r) < 0) out.unbounded = true;
    if (out.unbounded) return out;

    std::vector<int> vids, rids;
    for (std::size_t i = 0; i < v.vertices.size(); ++i) {
        const Rational val = dot<Rational>(v.vertices[i], xi);
        if (vids.empty() || val < out.value) {
            out.value = val;
            vids.assign(1, static_cast<int>(i));
        } else if (val == out.value) {
            vids.push_back(static_cast<int>(i));
        }
    }
    for (std::size_t i = 0; i < v.rays.size(); ++i)
        if (pair(xi, v.rays[i]) == 0) rids.push_back(static_cast<int>(i));
    out.argmin = describe_face(p, std::move(vids), std::move(rids));
    return out;
}

} // namespace momentcut
