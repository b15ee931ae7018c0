#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "gentle/classify.hpp"
#include "gentle/invariant.hpp"
#include "gentle/quiver.hpp"

namespace gentle {

using Json = nlohmann::ordered_json;

/// Unvalidated arrow declaration, by label.
struct ArrowDecl {
    std::string label;
    std::string source;
    std::string target;

    friend bool operator==(const ArrowDecl&, const ArrowDecl&) = default;
};

/// Unvalidated zero relation, by arrow label: `first` then `second`.
struct RelationDecl {
    std::string second;
    std::string first;

    friend bool operator==(const RelationDecl&, const RelationDecl&) = default;
};

/// Parsed form of the quiver text format, before gentleness validation.
struct QuiverFile {
    std::string name = "quiver";
    std::vector<std::string> vertices;
    std::vector<ArrowDecl> arrows;
    std::vector<RelationDecl> relations;

    friend bool operator==(const QuiverFile&, const QuiverFile&) = default;
};

/// Reads the quiver text format. One declaration per line; '#' starts a
/// comment; labels match [A-Za-z0-9_]+. Grammar:
///   quiver NAME            (optional, at most once)
///   vertices: v1 v2 ...    (repeatable)
///   arrow label: src -> dst
///   rel second * first     (the path "first then second" is zero)
/// Vertices must be declared before an arrow uses them, arrows before a
/// relation names them. Throws SyntaxError, UndeclaredLabelError or
/// DuplicateDeclarationError carrying 1-based line and column.
QuiverFile parse_quiver_file(const std::string& text);

/// Canonical text form. parse_quiver_file(render_quiver_file(f)) == f.
std::string render_quiver_file(const QuiverFile& f);

QuiverFile to_quiver_file(const GentlePresentation& p);

/// Quiver and relation list a file describes, labels resolved but
/// gentleness not checked; feed the pieces to validate_gentle to get the
/// issue list instead of an exception.
std::pair<Quiver, std::vector<Relation>> raw_from_quiver_file(const QuiverFile& f);

/// Builds the presentation a file describes, running full validation.
GentlePresentation presentation_from_quiver_file(const QuiverFile& f);
GentlePresentation presentation_from_text(const std::string& text);

/// Loads a presentation from a path, dispatching on the ".json" suffix.
GentlePresentation presentation_from_file(const std::string& path);

Json to_json(const GentlePresentation& p);
Json to_json(const PhiInvariant& phi);

/// Invariant plus the full run protocol, threads rendered in product form.
Json to_json(const PhiResult& result, const GentlePresentation& p);

Json to_json(const NormalForm& form);
Json to_json(const EquivalenceResult& res);

/// Accepts the object layout produced by to_json(presentation); unknown
/// keys are ignored.
QuiverFile quiver_file_from_json(const Json& j);
GentlePresentation presentation_from_json(const Json& j);

/// Reads a path into a QuiverFile, dispatching on the ".json" suffix, with
/// no validation beyond syntax.
QuiverFile quiver_file_from_path(const std::string& path);

/// Graphviz digraph: solid labelled edges for arrows, plus one dotted
/// undirected edge per relation spanning its two-arrow path.
std::string render_dot(const GentlePresentation& p);

}  // namespace gentle
