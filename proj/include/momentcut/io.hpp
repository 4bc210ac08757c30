#pragma once

// Text file formats: `key: value` lines, row blocks attached to the preceding
// key, `[section]` headers and `#` comments. Rationals are written as "p/q".

#include <iosfwd>
#include <string>
#include <vector>

#include "momentcut/local_cones.hpp"
#include "momentcut/pipeline.hpp"

namespace momentcut::io {

struct Entry {
    std::string key;
    std::string value;
    std::vector<std::vector<std::string>> rows;
};

struct Section {
    std::string name;  ///< "" for the part before the first header
    std::vector<Entry> entries;

    const Entry* find(const std::string& key) const;
    const Entry& at(const std::string& key) const;  ///< throws ParseError
};

struct Document {
    std::vector<Section> sections;

    const Section& section(const std::string& name) const;  ///< throws ParseError
    bool has_section(const std::string& name) const;
};

/// Throws ParseError with the offending line number.
Document parse_document(const std::string& text);
std::string read_file(const std::string& path);  ///< throws ParseError when unreadable
void write_file(const std::string& path, const std::string& text);

std::string format(const Rational& q);

// Each writer emits a complete file; each reader accepts what the writer emits.
// Polyhedron bodies carry the H-representation and the V-representation; a
// reader needs one of them and checks agreement when both are present.

std::string write_polyhedron(const Polyhedron& p);
Polyhedron read_polyhedron(const std::string& text);
Polyhedron polyhedron_from(const Section& s);

std::string write_labeled_polytope(const LabeledPolytope& m);
/// Labels default to 1 when the file has no `labels:` line.
LabeledPolytope read_labeled_polytope(const std::string& text);

std::string write_cutspec(const CutSpec& c);
CutSpec read_cutspec(const std::string& text);

struct CutOutput {
    LabeledPolytope polytope;
    bool compact = false;
    bool labels_flagged = false;
    bool operator==(const CutOutput& o) const;
};
std::string write_cut_result(const CutResult& r, bool compact);
CutOutput read_cut_result(const std::string& text);

std::string write_matrix(const QMatrix& m);
QMatrix read_matrix(const std::string& text);

std::string write_slice_data(const SliceRepData& d);
SliceRepData read_slice_data(const std::string& text);

std::string write_local_cone(const LocalMomentCone& c);
LocalMomentCone read_local_cone(const std::string& text);

std::string write_cloud(const SampleCloud& c);
SampleCloud read_cloud(const std::string& text);

std::string write_certificate(const RootSystem& rs, const MomentSetCertificate& c);
struct CertificateFile {
    std::string root_system;
    MomentSetCertificate certificate;
};
CertificateFile read_certificate(const std::string& text);

/// Flat SVG of 2-dimensional polyhedra; unbounded ones are clipped to a common
/// bounding window. Throws UnsupportedTypeError for other dimensions.
std::string render_svg(const std::vector<Polyhedron>& ps);

} // namespace momentcut::io
