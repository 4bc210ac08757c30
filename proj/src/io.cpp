#include "momentcut/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace momentcut::io {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

long parse_count(const std::string& s, const std::string& what) {
    const auto toks = split(s);
    if (toks.size() != 1) throw ParseError(what + ": expected one integer, got '" + s + "'");
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(toks[0], &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != toks[0].size() || v < 0) throw ParseError(what + ": expected a nonnegative integer, got '" + s + "'");
    return v;
}

QVector parse_qrow(const std::vector<std::string>& row, Eigen::Index n, const std::string& what) {
    if (static_cast<Eigen::Index>(row.size()) != n)
        throw ParseError(what + ": expected " + std::to_string(n) + " entries, got " + std::to_string(row.size()));
    QVector x(n);
    for (Eigen::Index i = 0; i < n; ++i) x(i) = parse_rational(row[static_cast<std::size_t>(i)]);
    return x;
}

ZVector parse_zrow(const std::vector<std::string>& row, Eigen::Index n, const std::string& what) {
    const QVector q = parse_qrow(row, n, what);
    ZVector z(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (denominator(q(i)) != 1) throw ParseError(what + ": expected integer entries");
        z(i) = numerator(q(i));
    }
    return z;
}

/// Rows of a counted block, e.g. "vertices: 3" followed by three rows.
const std::vector<std::vector<std::string>>& block(const Entry& e) {
    const long count = parse_count(e.value, e.key);
    if (static_cast<long>(e.rows.size()) != count)
        throw ParseError(e.key + ": expected " + std::to_string(count) + " rows, got " + std::to_string(e.rows.size()));
    return e.rows;
}

std::string row(const QVector& x) {
    std::string s;
    for (Eigen::Index i = 0; i < x.size(); ++i) s += (i ? " " : "") + format(x(i));
    return s;
}

std::string row(const ZVector& x) { return row(to_rational(x)); }

bool parse_bool(const std::string& s, const std::string& what) {
    if (s == "true") return true;
    if (s == "false") return false;
    throw ParseError(what + ": expected true or false, got '" + s + "'");
}

void expect_type(const Section& s, const std::string& type) {
    const Entry* e = s.find("type");
    if (e && e->value != type) throw ParseError("expected type '" + type + "', got '" + e->value + "'");
}

std::string polyhedron_body(const Polyhedron& p) {
    std::ostringstream out;
    const HPolyhedron& h = p.h();
    const VPolyhedron& v = p.v();
    out << "dim: " << p.ambient_dim() << "\n";
    out << "halfspaces: " << h.halfspaces.size() << "\n";
    for (const auto& hs : h.halfspaces) out << row(hs.normal) << " " << format(hs.offset) << "\n";
    out << "equalities: " << h.equalities.size() << "\n";
    for (const auto& e : h.equalities) out << row(e.normal) << " " << format(e.offset) << "\n";
    out << "vertices: " << v.vertices.size() << "\n";
    for (const auto& x : v.vertices) out << row(x) << "\n";
    out << "rays: " << v.rays.size() << "\n";
    for (const auto& r : v.rays) out << row(r) << "\n";
    out << "lineality: " << v.lineality.size() << "\n";
    for (const auto& l : v.lineality) out << row(l) << "\n";
    return out.str();
}

std::string cloud_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

double parse_double(const std::string& s) {
    char* end = nullptr;
    const double x = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(x)) throw ParseError("not a finite number: '" + s + "'");
    return x;
}

std::vector<int> parse_wall_id(const std::string& id) {
    if (id.size() < 2 || id.front() != '{' || id.back() != '}') throw ParseError("malformed wall id '" + id + "'");
    std::vector<int> out;
    std::string inner = id.substr(1, id.size() - 2);
    std::replace(inner.begin(), inner.end(), ',', ' ');
    for (const auto& t : split(inner)) {
        const long k = parse_count(t, "wall id");
        if (k < 1) throw ParseError("wall ids are 1-based");
        out.push_back(static_cast<int>(k - 1));
    }
    return out;
}

} // namespace

const Entry* Section::find(const std::string& key) const {
    for (const auto& e : entries)
        if (e.key == key) return &e;
    return nullptr;
}

const Entry& Section::at(const std::string& key) const {
    if (const Entry* e = find(key)) return *e;
    throw ParseError("missing key '" + key + "'" + (name.empty() ? "" : " in section [" + name + "]"));
}

const Section& Document::section(const std::string& name) const {
    for (const auto& s : sections)
        if (s.name == name) return s;
    throw ParseError("missing section [" + name + "]");
}

bool Document::has_section(const std::string& name) const {
    return std::any_of(sections.begin(), sections.end(), [&](const Section& s) { return s.name == name; });
}

Document parse_document(const std::string& text) {
    Document doc;
    doc.sections.push_back({"", {}});
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        Section& cur = doc.sections.back();
        if (line.front() == '[') {
            if (line.back() != ']' || line.size() < 3) throw ParseError("line " + std::to_string(lineno) + ": malformed section header");
            const std::string name = trim(line.substr(1, line.size() - 2));
            if (doc.has_section(name)) throw ParseError("line " + std::to_string(lineno) + ": repeated section [" + name + "]");
            doc.sections.push_back({name, {}});
            continue;
        }
        const auto colon = line.find(':');
        if (colon != std::string::npos) {
            const std::string key = trim(line.substr(0, colon));
            if (key.empty()) throw ParseError("line " + std::to_string(lineno) + ": empty key");
            if (cur.find(key)) throw ParseError("line " + std::to_string(lineno) + ": repeated key '" + key + "'");
            cur.entries.push_back({key, trim(line.substr(colon + 1)), {}});
            continue;
        }
        if (cur.entries.empty()) throw ParseError("line " + std::to_string(lineno) + ": row before any key");
        cur.entries.back().rows.push_back(split(line));
    }
    return doc;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << text;
    if (!out) throw ParseError("write to '" + path + "' failed");
}

std::string format(const Rational& q) { return q.str(); }

// ---------------------------------------------------------------------------
// Polyhedra

Polyhedron polyhedron_from(const Section& s) {
    const long dim = parse_count(s.at("dim").value, "dim");
    const Eigen::Index n = dim;
    const Entry* hs = s.find("halfspaces");
    const Entry* eq = s.find("equalities");
    const Entry* vs = s.find("vertices");
    const Entry* rs = s.find("rays");
    const Entry* ls = s.find("lineality");
    if (!hs && !eq && !vs && !rs && !ls) throw ParseError("polyhedron has neither halfspaces nor vertices");

    std::optional<Polyhedron> from_h, from_v;
    if (hs || eq) {
        HPolyhedron h;
        h.dim = n;
        if (hs)
            for (const auto& r : block(*hs)) {
                const QVector a = parse_qrow(r, n + 1, "halfspaces");
                h.halfspaces.push_back(make_halfspace(a.head(n), a(n)));
            }
        if (eq)
            for (const auto& r : block(*eq)) {
                const QVector a = parse_qrow(r, n + 1, "equalities");
                h.equalities.push_back(make_equality(a.head(n), a(n)));
            }
        from_h = Polyhedron::from_h(std::move(h));
    }
    if (vs || rs || ls) {
        VPolyhedron v;
        v.dim = n;
        if (vs)
            for (const auto& r : block(*vs)) v.vertices.push_back(parse_qrow(r, n, "vertices"));
        if (rs)
            for (const auto& r : block(*rs)) v.rays.push_back(parse_zrow(r, n, "rays"));
        if (ls)
            for (const auto& r : block(*ls)) v.lineality.push_back(parse_zrow(r, n, "lineality"));
        if (v.vertices.empty() && !(v.rays.empty() && v.lineality.empty()))
            throw ParseError("rays or lineality given without a vertex");
        from_v = Polyhedron::from_v(std::move(v));
    }
    if (from_h && from_v && !(*from_h == *from_v)) throw ParseError("H- and V-representations describe different sets");
    return from_h ? *from_h : *from_v;
}

std::string write_polyhedron(const Polyhedron& p) { return "type: polyhedron\n" + polyhedron_body(p); }

Polyhedron read_polyhedron(const std::string& text) {
    const Document d = parse_document(text);
    const Section& s = d.section("");
    const Entry* t = s.find("type");
    if (t && t->value != "polyhedron" && t->value != "labeled-polytope")
        throw ParseError("expected a polyhedron, got type '" + t->value + "'");
    return polyhedron_from(s);
}

std::string write_labeled_polytope(const LabeledPolytope& m) {
    std::string labels;
    for (const auto& [k, v] : m.facet_labels) labels += " " + std::to_string(k) + "=" + std::to_string(v);
    return "type: labeled-polytope\n" + polyhedron_body(m.polytope) + "labels:" + labels + "\n";
}

namespace {

LabeledPolytope labeled_from(const Section& s) {
    const Polyhedron p = polyhedron_from(s);
    if (!s.find("halfspaces")) throw ParseError("a labeled polytope needs its halfspaces");
    std::map<int, int> labels;
    if (const Entry* e = s.find("labels"))
        for (const auto& tok : split(e->value)) {
            const auto eqp = tok.find('=');
            if (eqp == std::string::npos) throw ParseError("labels: expected index=label, got '" + tok + "'");
            const long k = parse_count(tok.substr(0, eqp), "labels");
            const long v = parse_count(tok.substr(eqp + 1), "labels");
            if (labels.count(static_cast<int>(k))) throw ParseError("labels: repeated index");
            labels[static_cast<int>(k)] = static_cast<int>(v);
        }
    return make_labeled_polytope(p.h(), labels);
}

} // namespace

LabeledPolytope read_labeled_polytope(const std::string& text) {
    const Document d = parse_document(text);
    const Section& s = d.section("");
    const Entry* t = s.find("type");
    if (t && t->value != "polyhedron" && t->value != "labeled-polytope")
        throw ParseError("expected a labeled polytope, got type '" + t->value + "'");
    return labeled_from(s);
}

std::string write_cutspec(const CutSpec& c) {
    std::ostringstream out;
    out << "type: cutspec\ndim: " << c.p.dim << "\nhalfspaces: " << c.p.halfspaces.size() << "\n";
    for (const auto& hs : c.p.halfspaces) out << row(hs.normal) << " " << format(hs.offset) << "\n";
    return out.str();
}

CutSpec read_cutspec(const std::string& text) {
    const Document d = parse_document(text);
    const Section& s = d.section("");
    expect_type(s, "cutspec");
    CutSpec c;
    c.p.dim = parse_count(s.at("dim").value, "dim");
    for (const auto& r : block(s.at("halfspaces"))) {
        const QVector a = parse_qrow(r, c.p.dim + 1, "halfspaces");
        c.p.halfspaces.push_back(make_halfspace(a.head(c.p.dim), a(c.p.dim)));
    }
    if (s.find("equalities")) throw ParseError("cut specs take halfspaces only");
    return c;
}

bool CutOutput::operator==(const CutOutput& o) const {
    if (!(polytope.polytope == o.polytope.polytope) || polytope.facet_labels != o.polytope.facet_labels) return false;
    const auto& a = polytope.polytope.h().halfspaces;
    const auto& b = o.polytope.polytope.h().halfspaces;
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].normal != b[i].normal || a[i].offset != b[i].offset) return false;
    return compact == o.compact && labels_flagged == o.labels_flagged;
}

std::string write_cut_result(const CutResult& r, bool compact) {
    std::string out = "type: cut-result\n";
    out += std::string("compact: ") + (compact ? "true" : "false") + "\n";
    out += std::string("labels_flagged: ") + (r.labels_flagged ? "true" : "false") + "\n";
    out += "strata: " + std::to_string(r.strata.size()) + "\n";
    for (const auto& st : r.strata) {
        std::string ids;
        for (int i : st.face.active_set) ids += (ids.empty() ? "" : ",") + std::to_string(i);
        out += "dim=" + std::to_string(st.face.dim) + " active={" + ids + "}\n";
    }
    out += "[polytope]\n" + write_labeled_polytope(r.cut);
    return out;
}

CutOutput read_cut_result(const std::string& text) {
    const Document d = parse_document(text);
    const Section& top = d.section("");
    expect_type(top, "cut-result");
    CutOutput c;
    c.compact = parse_bool(top.at("compact").value, "compact");
    c.labels_flagged = parse_bool(top.at("labels_flagged").value, "labels_flagged");
    c.polytope = labeled_from(d.section("polytope"));
    return c;
}

// ---------------------------------------------------------------------------
// Matrices, slice data, local cones

std::string write_matrix(const QMatrix& m) {
    std::ostringstream out;
    out << "matrix: " << m.rows() << " " << m.cols() << "\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i) out << row(QVector(m.row(i).transpose())) << "\n";
    return out.str();
}

QMatrix read_matrix(const std::string& text) {
    const Document d = parse_document(text);
    const Entry& e = d.section("").at("matrix");
    const auto dims = split(e.value);
    if (dims.size() != 2) throw ParseError("matrix: expected 'R C'");
    const long r = parse_count(dims[0], "matrix rows");
    const long c = parse_count(dims[1], "matrix columns");
    if (static_cast<long>(e.rows.size()) != r) throw ParseError("matrix: expected " + std::to_string(r) + " rows");
    QMatrix m(r, c);
    for (long i = 0; i < r; ++i) m.row(i) = parse_qrow(e.rows[static_cast<std::size_t>(i)], c, "matrix").transpose();
    return m;
}

std::string write_slice_data(const SliceRepData& d) {
    std::ostringstream out;
    out << "type: slice-data\ndim: " << d.ambient_dim << "\ngroup_order: " << d.structure_group_order << "\n";
    out << "subalgebra: " << d.stabilizer_subalgebra.size() << "\n";
    for (const auto& b : d.stabilizer_subalgebra) out << row(b) << "\n";
    const bool trivial = d.stabilizer_subalgebra.empty();
    out << "weights: " << d.weights.size() << "\n";
    if (!trivial)
        for (const auto& w : d.weights) out << row(w) << "\n";
    if (!trivial) {
        out << "lift: " << d.lift.rows() << "\n";
        for (Eigen::Index i = 0; i < d.lift.rows(); ++i) out << row(QVector(d.lift.row(i).transpose())) << "\n";
    }
    return out.str();
}

SliceRepData read_slice_data(const std::string& text) {
    const Document doc = parse_document(text);
    const Section& s = doc.section("");
    expect_type(s, "slice-data");
    SliceRepData d;
    d.ambient_dim = parse_count(s.at("dim").value, "dim");
    if (const Entry* g = s.find("group_order")) d.structure_group_order = parse_count(g->value, "group_order");
    for (const auto& r : block(s.at("subalgebra"))) d.stabilizer_subalgebra.push_back(parse_qrow(r, d.ambient_dim, "subalgebra"));
    const Eigen::Index k = static_cast<Eigen::Index>(d.stabilizer_subalgebra.size());
    const Entry& w = s.at("weights");
    if (k == 0) {
        if (!w.rows.empty()) throw ParseError("weights: no rows expected for a trivial stabilizer");
        d.weights.assign(static_cast<std::size_t>(parse_count(w.value, "weights")), QVector(0));
    } else {
        for (const auto& r : block(w)) d.weights.push_back(parse_qrow(r, k, "weights"));
        const auto& lift = block(s.at("lift"));
        if (static_cast<Eigen::Index>(lift.size()) != d.ambient_dim) throw ParseError("lift: expected one row per ambient coordinate");
        d.lift = QMatrix(d.ambient_dim, k);
        for (Eigen::Index i = 0; i < d.ambient_dim; ++i)
            d.lift.row(i) = parse_qrow(lift[static_cast<std::size_t>(i)], k, "lift").transpose();
    }
    validate(d);
    return d;
}

std::string write_local_cone(const LocalMomentCone& c) {
    std::ostringstream out;
    out << "type: local-cone\ndim: " << c.vertex.size() << "\nvertex: " << row(c.vertex) << "\n";
    out << "lineality: " << c.lineality.size() << "\n";
    for (const auto& l : c.lineality) out << row(l) << "\n";
    out << "generators: " << c.generators.size() << "\n";
    for (const auto& g : c.generators) out << row(g) << "\n";
    out << "[set]\n" << write_polyhedron(c.set);
    return out.str();
}

LocalMomentCone read_local_cone(const std::string& text) {
    const Document d = parse_document(text);
    const Section& s = d.section("");
    expect_type(s, "local-cone");
    const Eigen::Index n = parse_count(s.at("dim").value, "dim");
    LocalMomentCone c;
    c.vertex = parse_qrow(split(s.at("vertex").value), n, "vertex");
    for (const auto& r : block(s.at("lineality"))) c.lineality.push_back(parse_qrow(r, n, "lineality"));
    for (const auto& r : block(s.at("generators"))) c.generators.push_back(parse_qrow(r, n, "generators"));
    c.set = polyhedron_from(d.section("set"));
    return c;
}

// ---------------------------------------------------------------------------
// Clouds and certificates

std::string write_cloud(const SampleCloud& c) {
    std::string out = "generator_id: " + c.generator_id + "\nseed: " + std::to_string(c.seed) +
                      "\ncount: " + std::to_string(c.points.size()) + "\ndim: " + std::to_string(c.dim()) + "\n";
    for (const auto& x : c.points) {
        for (Eigen::Index i = 0; i < x.size(); ++i) out += (i ? " " : "") + cloud_number(x(i));
        out += "\n";
    }
    return out;
}

SampleCloud read_cloud(const std::string& text) {
    const Document d = parse_document(text);
    const Section& s = d.section("");
    SampleCloud c;
    c.generator_id = s.at("generator_id").value;
    const auto seed = split(s.at("seed").value);
    if (seed.size() != 1) throw ParseError("seed: expected one integer");
    try {
        std::size_t used = 0;
        c.seed = std::stoull(seed[0], &used);
        if (used != seed[0].size()) throw ParseError("seed: expected an integer");
    } catch (const std::logic_error&) {
        throw ParseError("seed: expected an unsigned 64-bit integer");
    }
    const long count = parse_count(s.at("count").value, "count");
    const Entry& dim = s.at("dim");
    const long n = parse_count(dim.value, "dim");
    if (static_cast<long>(dim.rows.size()) != count) throw ParseError("cloud: expected " + std::to_string(count) + " points");
    for (const auto& r : dim.rows) {
        if (static_cast<long>(r.size()) != n) throw ParseError("cloud: point of the wrong dimension");
        Eigen::VectorXd x(n);
        for (long i = 0; i < n; ++i) x(i) = parse_double(r[static_cast<std::size_t>(i)]);
        c.points.push_back(std::move(x));
    }
    return c;
}

std::string write_certificate(const RootSystem& rs, const MomentSetCertificate& c) {
    std::string out = "type: certificate\nrootsys: " + rs.name() + "\nwall: " + wall_id(c.chamber_wall) +
                      "\nwall_dim: " + std::to_string(c.chamber_wall.dim) + "\n";
    out += "[window]\n" + write_polyhedron(c.window);
    out += "[local_part]\n" + write_polyhedron(c.local_part);
    out += "[assembled]\n" + write_polyhedron(c.assembled);
    return out;
}

CertificateFile read_certificate(const std::string& text) {
    const Document d = parse_document(text);
    const Section& s = d.section("");
    expect_type(s, "certificate");
    CertificateFile f;
    f.root_system = s.at("rootsys").value;
    const RootSystem rs = parse_root_system_name(f.root_system);
    f.certificate.chamber_wall = make_wall(rs, parse_wall_id(s.at("wall").value));
    if (const Entry* wd = s.find("wall_dim"))
        if (parse_count(wd->value, "wall_dim") != f.certificate.chamber_wall.dim) throw ParseError("wall_dim does not match the wall");
    f.certificate.window = polyhedron_from(d.section("window"));
    f.certificate.local_part = polyhedron_from(d.section("local_part"));
    f.certificate.assembled = polyhedron_from(d.section("assembled"));
    return f;
}

// ---------------------------------------------------------------------------
// SVG

std::string render_svg(const std::vector<Polyhedron>& ps) {
    for (const auto& p : ps)
        if (p.ambient_dim() != 2)
            throw UnsupportedTypeError("SVG output supports 2-dimensional polyhedra only, got dimension " +
                                       std::to_string(p.ambient_dim()));
    std::vector<Polyhedron> shown;
    std::vector<QVector> all;
    for (const auto& p : ps) {
        if (p.is_empty()) continue;
        for (const auto& x : p.v().vertices) {
            all.push_back(x);
            for (const auto& r : p.v().rays) all.push_back(x + to_rational(r));
            for (const auto& l : p.v().lineality) {
                all.push_back(x + to_rational(l));
                all.push_back(x - to_rational(l));
            }
        }
    }
    Polyhedron window = Polyhedron::universe(2);
    if (!all.empty()) window = bounding_window(Polyhedron::from_points(2, all));
    for (const auto& p : ps) shown.push_back(p.is_bounded() ? p : intersect(p, window));

    double lo[2] = {0, 0}, hi[2] = {1, 1};
    bool first = true;
    for (const auto& p : shown)
        for (const auto& x : p.v().vertices)
            for (int i = 0; i < 2; ++i) {
                const double c = to_double(x(i));
                if (first || c < lo[i]) lo[i] = c;
                if (first || c > hi[i]) hi[i] = c;
                if (i == 1) first = false;
            }
    const double size = 400, margin = 20;
    const double span = std::max({hi[0] - lo[0], hi[1] - lo[1], 1e-9});
    const double scale = (size - 2 * margin) / span;
    auto px = [&](const QVector& x) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3f,%.3f", margin + (to_double(x(0)) - lo[0]) * scale,
                      size - margin - (to_double(x(1)) - lo[1]) * scale);
        return std::string(buf);
    };
    static const char* palette[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2", "#b07aa1"};

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n";
    for (std::size_t k = 0; k < shown.size(); ++k) {
        const Polyhedron& p = shown[k];
        const char* color = palette[k % 6];
        if (p.is_empty()) continue;
        std::vector<QVector> vs = p.v().vertices;
        if (p.dim() == 0) {
            const std::string c = px(vs[0]);
            const auto comma = c.find(',');
            out << "  <circle cx=\"" << c.substr(0, comma) << "\" cy=\"" << c.substr(comma + 1) << "\" r=\"3\" fill=\"" << color
                << "\"/>\n";
        } else if (p.dim() == 1) {
            out << "  <polyline points=\"" << px(vs[0]) << " " << px(vs[1]) << "\" stroke=\"" << color
                << "\" stroke-width=\"2\" fill=\"none\"/>\n";
        } else {
            QVector c = QVector::Zero(2);
            for (const auto& v : vs) c += v;
            c /= Rational(static_cast<long>(vs.size()));
            std::sort(vs.begin(), vs.end(), [&](const QVector& a, const QVector& b) {
                return std::atan2(to_double(a(1) - c(1)), to_double(a(0) - c(0))) <
                       std::atan2(to_double(b(1) - c(1)), to_double(b(0) - c(0)));
            });
            out << "  <polygon points=\"";
            for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << px(vs[i]);
            out << "\" fill=\"" << color << "\" fill-opacity=\"0.4\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace momentcut::io
