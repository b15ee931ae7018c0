#include "gentle/io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "gentle/threads.hpp"

namespace gentle {

namespace {

bool valid_label(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
}

struct Token {
    std::string text;
    std::size_t col = 0;
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        out.push_back(Token{line.substr(start, i - start), start + 1});
    }
    return out;
}

void require_label(const Token& t, std::size_t lineno) {
    if (!valid_label(t.text)) {
        throw SyntaxError("'" + t.text + "' is not a valid label (want [A-Za-z0-9_]+)",
                          lineno, t.col);
    }
}

}  // namespace

QuiverFile parse_quiver_file(const std::string& text) {
    QuiverFile f;
    bool saw_name = false;
    std::unordered_set<std::string> vertex_seen;
    std::unordered_set<std::string> arrow_seen;
    std::set<std::pair<std::string, std::string>> relation_seen;

    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        const auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& head = toks[0].text;

        if (head == "quiver") {
            if (saw_name) {
                throw DuplicateDeclarationError("repeated quiver header", lineno,
                                                toks[0].col);
            }
            if (toks.size() != 2) {
                throw SyntaxError("expected 'quiver NAME'", lineno, toks[0].col);
            }
            require_label(toks[1], lineno);
            f.name = toks[1].text;
            saw_name = true;
        } else if (head == "vertices:") {
            if (toks.size() < 2) {
                throw SyntaxError("expected at least one vertex label", lineno,
                                  toks[0].col);
            }
            for (std::size_t i = 1; i < toks.size(); ++i) {
                require_label(toks[i], lineno);
                if (!vertex_seen.insert(toks[i].text).second) {
                    throw DuplicateDeclarationError(
                        "vertex '" + toks[i].text + "' declared twice", lineno,
                        toks[i].col);
                }
                f.vertices.push_back(toks[i].text);
            }
        } else if (head == "arrow") {
            if (toks.size() != 5 || toks[3].text != "->") {
                throw SyntaxError("expected 'arrow LABEL: SOURCE -> TARGET'", lineno,
                                  toks[0].col);
            }
            std::string label = toks[1].text;
            if (label.size() < 2 || label.back() != ':') {
                throw SyntaxError("arrow label must end with ':'", lineno, toks[1].col);
            }
            label.pop_back();
            if (!valid_label(label)) {
                throw SyntaxError("'" + label + "' is not a valid label", lineno,
                                  toks[1].col);
            }
            for (std::size_t i : {std::size_t{2}, std::size_t{4}}) {
                require_label(toks[i], lineno);
                if (vertex_seen.count(toks[i].text) == 0) {
                    throw UndeclaredLabelError("unknown vertex '" + toks[i].text + "'",
                                               lineno, toks[i].col);
                }
            }
            if (!arrow_seen.insert(label).second) {
                throw DuplicateDeclarationError("arrow '" + label + "' declared twice",
                                                lineno, toks[1].col);
            }
            f.arrows.push_back(ArrowDecl{label, toks[2].text, toks[4].text});
        } else if (head == "rel") {
            if (toks.size() != 4 || toks[2].text != "*") {
                throw SyntaxError("expected 'rel SECOND * FIRST'", lineno, toks[0].col);
            }
            for (std::size_t i : {std::size_t{1}, std::size_t{3}}) {
                require_label(toks[i], lineno);
                if (arrow_seen.count(toks[i].text) == 0) {
                    throw UndeclaredLabelError("unknown arrow '" + toks[i].text + "'",
                                               lineno, toks[i].col);
                }
            }
            if (!relation_seen.insert({toks[1].text, toks[3].text}).second) {
                throw DuplicateDeclarationError("relation '" + toks[1].text + " * " +
                                                    toks[3].text + "' declared twice",
                                                lineno, toks[1].col);
            }
            f.relations.push_back(RelationDecl{toks[1].text, toks[3].text});
        } else {
            throw SyntaxError("unknown directive '" + head + "'", lineno, toks[0].col);
        }
    }
    return f;
}

std::string render_quiver_file(const QuiverFile& f) {
    std::string out = "quiver " + f.name + "\n";
    if (!f.vertices.empty()) {
        out += "vertices:";
        for (const std::string& v : f.vertices) out += " " + v;
        out += "\n";
    }
    for (const ArrowDecl& a : f.arrows) {
        out += "arrow " + a.label + ": " + a.source + " -> " + a.target + "\n";
    }
    for (const RelationDecl& r : f.relations) {
        out += "rel " + r.second + " * " + r.first + "\n";
    }
    return out;
}

QuiverFile to_quiver_file(const GentlePresentation& p) {
    const Quiver& q = p.quiver();
    QuiverFile f;
    f.name = q.name();
    for (VertexId v = 0; v < q.vertex_count(); ++v) f.vertices.push_back(q.vertex_label(v));
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        f.arrows.push_back(ArrowDecl{ar.label, q.vertex_label(ar.source),
                                     q.vertex_label(ar.target)});
    }
    for (const Relation& r : p.relations()) {
        f.relations.push_back(
            RelationDecl{q.arrow(r.second).label, q.arrow(r.first).label});
    }
    return f;
}

std::pair<Quiver, std::vector<Relation>> raw_from_quiver_file(const QuiverFile& f) {
    for (const std::string& v : f.vertices) {
        if (!valid_label(v)) throw Error("vertex label '" + v + "' is not [A-Za-z0-9_]+");
    }
    for (const ArrowDecl& a : f.arrows) {
        if (!valid_label(a.label)) {
            throw Error("arrow label '" + a.label + "' is not [A-Za-z0-9_]+");
        }
    }
    if (!valid_label(f.name)) throw Error("quiver name '" + f.name + "' is not [A-Za-z0-9_]+");

    Quiver q(f.name);
    for (const std::string& v : f.vertices) q.add_vertex(v);
    std::unordered_map<std::string, ArrowId> arrow_ids;
    for (const ArrowDecl& a : f.arrows) {
        arrow_ids[a.label] = q.add_arrow(a.label, a.source, a.target);
    }
    std::vector<Relation> rels;
    rels.reserve(f.relations.size());
    for (const RelationDecl& r : f.relations) {
        auto second = arrow_ids.find(r.second);
        auto first = arrow_ids.find(r.first);
        if (second == arrow_ids.end()) {
            throw UndeclaredLabelError("relation references unknown arrow '" + r.second + "'",
                                       0, 0);
        }
        if (first == arrow_ids.end()) {
            throw UndeclaredLabelError("relation references unknown arrow '" + r.first + "'",
                                       0, 0);
        }
        rels.push_back(Relation{second->second, first->second});
    }
    return {std::move(q), std::move(rels)};
}

GentlePresentation presentation_from_quiver_file(const QuiverFile& f) {
    auto [q, rels] = raw_from_quiver_file(f);
    return build_presentation(std::move(q), std::move(rels));
}

GentlePresentation presentation_from_text(const std::string& text) {
    return presentation_from_quiver_file(parse_quiver_file(text));
}

QuiverFile quiver_file_from_path(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
        Json j;
        try {
            j = Json::parse(buf.str());
        } catch (const nlohmann::json::exception& e) {
            throw Error("cannot parse '" + path + "' as json: " + e.what());
        }
        return quiver_file_from_json(j);
    }
    return parse_quiver_file(buf.str());
}

GentlePresentation presentation_from_file(const std::string& path) {
    return presentation_from_quiver_file(quiver_file_from_path(path));
}

Json to_json(const GentlePresentation& p) {
    const Quiver& q = p.quiver();
    Json j;
    j["format"] = "gentle-quiver";
    j["version"] = "0.1.0";
    j["name"] = q.name();
    j["vertices"] = Json::array();
    for (VertexId v = 0; v < q.vertex_count(); ++v) j["vertices"].push_back(q.vertex_label(v));
    j["arrows"] = Json::array();
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        j["arrows"].push_back({{"label", ar.label},
                               {"source", q.vertex_label(ar.source)},
                               {"target", q.vertex_label(ar.target)}});
    }
    j["relations"] = Json::array();
    for (const Relation& r : p.relations()) {
        j["relations"].push_back({{"second", q.arrow(r.second).label},
                                  {"first", q.arrow(r.first).label}});
    }
    return j;
}

Json to_json(const PhiInvariant& phi) {
    Json j = Json::array();
    for (const auto& [n, m] : phi.pairs) j.push_back({n, m});
    return j;
}

Json to_json(const PhiResult& result, const GentlePresentation& p) {
    const Quiver& q = p.quiver();
    Json j;
    j["phi"] = to_json(result.phi);
    j["text"] = phi_canonical_text(result.phi);
    j["runs"] = Json::array();
    for (const TraceRun& run : result.trace.runs) {
        Json r;
        r["pair"] = {run.pair.first, run.pair.second};
        r["permitted"] = Json::array();
        for (const Thread& t : run.permitted) r["permitted"].push_back(render_thread(q, t));
        r["forbidden"] = Json::array();
        for (const Thread& t : run.forbidden) r["forbidden"].push_back(render_thread(q, t));
        j["runs"].push_back(std::move(r));
    }
    j["cycles"] = Json::array();
    for (const auto& [arrows, pair] : result.trace.cycles) {
        Json c;
        c["arrows"] = Json::array();
        for (ArrowId a : arrows) c["arrows"].push_back(q.arrow(a).label);
        c["pair"] = {pair.first, pair.second};
        j["cycles"].push_back(std::move(c));
    }
    return j;
}

Json to_json(const NormalForm& form) {
    struct Converter {
        Json operator()(const An& f) const {
            return Json{{"type", "A_n"}, {"n", f.n}};
        }
        Json operator()(const ATilde& f) const {
            return Json{{"type", "A_tilde"}, {"p", f.p}, {"q", f.q}};
        }
        Json operator()(const Lambda& f) const {
            return Json{{"type", "Lambda"}, {"r", f.r}, {"n", f.n}, {"m", f.m}};
        }
        Json operator()(const BeyondOneCycle& f) const {
            return Json{{"type", "beyond_one_cycle"}, {"cycles", f.cycles}};
        }
    };
    return std::visit(Converter{}, form);
}

Json to_json(const EquivalenceResult& res) {
    auto verdict_text = [](Verdict v) {
        switch (v) {
            case Verdict::Equivalent: return "equivalent";
            case Verdict::NotEquivalent: return "not_equivalent";
            case Verdict::Indeterminate: return "indeterminate";
        }
        return "indeterminate";
    };
    auto witness_text = [](Witness w) {
        switch (w) {
            case Witness::None: return "none";
            case Witness::VertexCount: return "vertex_count";
            case Witness::ArrowCount: return "arrow_count";
            case Witness::Phi: return "phi";
        }
        return "none";
    };
    Json j;
    j["verdict"] = verdict_text(res.verdict);
    if (res.verdict == Verdict::NotEquivalent) {
        j["witness"] = witness_text(res.witness);
        j["phi_a"] = to_json(res.phi_a);
        j["phi_b"] = to_json(res.phi_b);
        j["cycles_a"] = res.cycles_a;
        j["cycles_b"] = res.cycles_b;
    } else {
        // Both sides agree on every compared quantity, so one copy suffices.
        j["phi"] = to_json(res.phi_a);
        j["cycles"] = res.cycles_a;
    }
    return j;
}

QuiverFile quiver_file_from_json(const Json& j) {
    if (!j.is_object()) throw Error("json presentation must be an object");
    if (j.contains("format") && j["format"] != "gentle-quiver") {
        throw Error("unsupported format '" + j["format"].dump() + "'");
    }
    for (const char* key : {"vertices", "arrows"}) {
        if (!j.contains(key) || !j[key].is_array()) {
            throw Error(std::string("json presentation needs an array '") + key + "'");
        }
    }
    QuiverFile f;
    if (j.contains("name")) f.name = j["name"].get<std::string>();
    for (const Json& v : j["vertices"]) f.vertices.push_back(v.get<std::string>());
    for (const Json& a : j["arrows"]) {
        if (!a.is_object() || !a.contains("label") || !a.contains("source") ||
            !a.contains("target")) {
            throw Error("each arrow needs 'label', 'source' and 'target'");
        }
        f.arrows.push_back(ArrowDecl{a["label"].get<std::string>(),
                                     a["source"].get<std::string>(),
                                     a["target"].get<std::string>()});
    }
    if (j.contains("relations")) {
        for (const Json& r : j["relations"]) {
            if (!r.is_object() || !r.contains("second") || !r.contains("first")) {
                throw Error("each relation needs 'second' and 'first'");
            }
            f.relations.push_back(RelationDecl{r["second"].get<std::string>(),
                                               r["first"].get<std::string>()});
        }
    }
    return f;
}

GentlePresentation presentation_from_json(const Json& j) {
    return presentation_from_quiver_file(quiver_file_from_json(j));
}

std::string render_dot(const GentlePresentation& p) {
    const Quiver& q = p.quiver();
    std::string out = "digraph \"" + q.name() + "\" {\n";
    out += "  rankdir=LR;\n";
    out += "  node [shape=circle];\n";
    for (VertexId v = 0; v < q.vertex_count(); ++v) {
        out += "  \"" + q.vertex_label(v) + "\";\n";
    }
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        out += "  \"" + q.vertex_label(ar.source) + "\" -> \"" + q.vertex_label(ar.target) +
               "\" [label=\"" + ar.label + "\"];\n";
    }
    for (const Relation& r : p.relations()) {
        out += "  \"" + q.vertex_label(q.arrow(r.first).source) + "\" -> \"" +
               q.vertex_label(q.arrow(r.second).target) +
               "\" [style=dotted, dir=none, constraint=false];\n";
    }
    out += "}\n";
    return out;
}

}  // namespace gentle
