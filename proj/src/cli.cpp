#include "gentle/cli.hpp"

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "gentle/classify.hpp"
#include "gentle/generate.hpp"
#include "gentle/invariant.hpp"
#include "gentle/io.hpp"
#include "gentle/repetitive.hpp"
#include "gentle/threads.hpp"

namespace gentle {

namespace {

std::string pm(int v) { return v >= 0 ? "+1" : "-1"; }

bool is_internal_kind(const Error& e) {
    return dynamic_cast<const InternalError*>(&e) != nullptr ||
           dynamic_cast<const MatchFailureError*>(&e) != nullptr ||
           dynamic_cast<const InconsistentSignsError*>(&e) != nullptr ||
           dynamic_cast<const InconsistentInvariantError*>(&e) != nullptr ||
           dynamic_cast<const WindowExhaustedError*>(&e) != nullptr ||
           dynamic_cast<const DepthTooSmallError*>(&e) != nullptr ||
           dynamic_cast<const IsolatedVertexError*>(&e) != nullptr;
}

int run_validate(const std::string& path, std::ostream& out, std::ostream& err) {
    QuiverFile f = quiver_file_from_path(path);
    auto [q, rels] = raw_from_quiver_file(f);
    auto issues = validate_gentle(q, rels);
    if (issues.empty()) {
        out << "ok: '" << q.name() << "' is a gentle presentation (" << q.vertex_count()
            << " vertices, " << q.arrow_count() << " arrows, " << rels.size()
            << " relations)\n";
        return 0;
    }
    err << "invalid: '" << q.name() << "' fails " << issues.size() << " check(s)\n";
    for (const ValidationIssue& issue : issues) {
        err << "  [" << issue.code << "] " << issue.message << "\n";
    }
    return 2;
}

int run_phi(const std::string& path, bool as_json, bool with_trace, std::ostream& out) {
    GentlePresentation p = presentation_from_file(path);
    PhiResult r = compute_phi(p);
    if (as_json) {
        if (with_trace) {
            out << to_json(r, p).dump(2) << "\n";
        } else {
            Json j;
            j["phi"] = to_json(r.phi);
            out << j.dump() << "\n";
        }
    } else {
        out << phi_canonical_text(r.phi) << "\n";
        if (with_trace) out << render_trace(p.quiver(), r.trace);
    }
    return 0;
}

int run_threads(const std::string& path, std::ostream& out) {
    GentlePresentation p = presentation_from_file(path);
    const Quiver& q = p.quiver();
    ThreadTable table(p);
    SignAssignment sa = assign_signs(p);
    auto sign_suffix = [&](const Thread& t) -> std::string {
        try {
            auto [sigma, eps] = thread_signs(p, sa, t);
            return "   sigma=" + pm(sigma) + " eps=" + pm(eps);
        } catch (const IsolatedVertexError&) {
            return "";
        }
    };
    out << "permitted threads (" << table.permitted().size() << "):\n";
    for (const Thread& t : table.permitted()) {
        out << "  " << render_thread(q, t) << sign_suffix(t) << "\n";
    }
    out << "forbidden threads (" << table.forbidden().size() << "):\n";
    for (const Thread& t : table.forbidden()) {
        out << "  " << render_thread(q, t) << sign_suffix(t) << "\n";
    }
    out << "relation cycles (" << table.relation_cycles().size() << "):\n";
    for (const auto& cycle : table.relation_cycles()) {
        out << "  (";
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i > 0) out << " ";
            out << q.arrow(cycle[i]).label;
        }
        out << ")\n";
    }
    return 0;
}

int run_classify(const std::string& path, bool as_json, std::ostream& out) {
    GentlePresentation p = presentation_from_file(path);
    NormalForm form = classify(p);
    if (as_json) {
        out << to_json(form).dump(2) << "\n";
    } else {
        out << render_normal_form(form) << "\n";
    }
    return 0;
}

int run_equiv(const std::string& path_a, const std::string& path_b, bool as_json,
              std::ostream& out) {
    GentlePresentation a = presentation_from_file(path_a);
    GentlePresentation b = presentation_from_file(path_b);
    EquivalenceResult res = derived_equivalent(a, b);
    if (as_json) {
        out << to_json(res).dump(2) << "\n";
    } else {
        switch (res.verdict) {
            case Verdict::Equivalent:
                out << "equivalent (phi = " << phi_canonical_text(res.phi_a) << ")\n";
                break;
            case Verdict::NotEquivalent:
                switch (res.witness) {
                    case Witness::VertexCount:
                        out << "not equivalent: vertex counts differ ("
                            << a.quiver().vertex_count() << " vs "
                            << b.quiver().vertex_count() << ")\n";
                        break;
                    case Witness::ArrowCount:
                        out << "not equivalent: arrow counts differ ("
                            << a.quiver().arrow_count() << " vs "
                            << b.quiver().arrow_count() << ")\n";
                        break;
                    default:
                        out << "not equivalent: invariants differ ("
                            << phi_canonical_text(res.phi_a) << " vs "
                            << phi_canonical_text(res.phi_b) << ")\n";
                        break;
                }
                break;
            case Verdict::Indeterminate:
                out << "indeterminate: invariants agree ("
                    << phi_canonical_text(res.phi_a)
                    << ") but the invariant is only complete up to one cycle "
                       "(cycle numbers "
                    << res.cycles_a << " and " << res.cycles_b << ")\n";
                break;
        }
    }
    switch (res.verdict) {
        case Verdict::Equivalent: return 0;
        case Verdict::NotEquivalent: return 3;
        case Verdict::Indeterminate: return 4;
    }
    return 5;
}

int run_oracle_check(const std::string& path, std::ostream& out, std::ostream& err) {
    GentlePresentation p = presentation_from_file(path);
    PhiInvariant phi = compute_phi(p).phi;
    PhiInvariant oracle = compute_N(p);
    out << "phi    = " << phi_canonical_text(phi) << "\n";
    out << "oracle = " << phi_canonical_text(oracle) << "\n";
    if (!(phi == oracle)) {
        err << "mismatch: the matching walk and the cosyzygy orbits disagree\n";
        return 5;
    }
    if (!check_sums(phi, p)) {
        err << "mismatch: component sums disagree with the thread and arrow counts\n";
        return 5;
    }
    std::string witness;
    if (!tau_check(p, &witness)) {
        err << "mismatch: the squared cosyzygy does not realize the translate (" << witness
            << ")\n";
        return 5;
    }
    out << "agreement: invariant, sum identities and translate check all pass\n";
    return 0;
}

int run_gen(const GeneratorParams& params, bool as_json, std::ostream& out) {
    GentlePresentation p = random_gentle(params);
    if (as_json) {
        out << to_json(p).dump(2) << "\n";
    } else {
        out << render_quiver_file(to_quiver_file(p));
    }
    return 0;
}

int run_export_dot(const std::string& path, std::ostream& out) {
    GentlePresentation p = presentation_from_file(path);
    out << render_dot(p);
    return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Derived-equivalence invariants of gentle algebras"};
    app.name("gentle");
    app.require_subcommand(1);

    std::string path_a;
    std::string path_b;
    bool as_json = false;
    bool with_trace = false;
    GeneratorParams params;
    int rc = 0;

    auto* validate = app.add_subcommand("validate", "Check a file against the gentle axioms");
    validate->add_option("file", path_a, "presentation file (text or .json)")->required();
    validate->callback([&] { rc = run_validate(path_a, out, err); });

    auto* phi = app.add_subcommand("phi", "Compute the derived invariant");
    phi->add_option("file", path_a, "presentation file (text or .json)")->required();
    phi->add_flag("--json", as_json, "emit json instead of plain text");
    phi->add_flag("--trace", with_trace, "also print the full run protocol");
    phi->callback([&] { rc = run_phi(path_a, as_json, with_trace, out); });

    auto* threads = app.add_subcommand(
        "threads", "List permitted and forbidden threads with their signs");
    threads->add_option("file", path_a, "presentation file (text or .json)")->required();
    threads->callback([&] { rc = run_threads(path_a, out); });

    auto* cls = app.add_subcommand(
        "classify", "Name the derived-equivalence class (quivers with at most one cycle)");
    cls->add_option("file", path_a, "presentation file (text or .json)")->required();
    cls->add_flag("--json", as_json, "emit json instead of plain text");
    cls->callback([&] { rc = run_classify(path_a, as_json, out); });

    auto* equiv =
        app.add_subcommand("equiv", "Decide derived equivalence of two presentations");
    equiv->add_option("file_a", path_a, "first presentation file")->required();
    equiv->add_option("file_b", path_b, "second presentation file")->required();
    equiv->add_flag("--json", as_json, "emit json instead of plain text");
    equiv->callback([&] { rc = run_equiv(path_a, path_b, as_json, out); });

    auto* oracle = app.add_subcommand(
        "oracle-check", "Cross-check the invariant against the repetitive-algebra oracle");
    oracle->add_option("file", path_a, "presentation file (text or .json)")->required();
    oracle->callback([&] { rc = run_oracle_check(path_a, out, err); });

    auto* gen = app.add_subcommand("gen", "Sample a random gentle presentation");
    gen->add_option("--vertices", params.vertex_count, "number of vertices")->required();
    gen->add_option("--cycles", params.cycle_target,
                    "cycle number of the underlying graph (default 1)");
    gen->add_option("--seed", params.seed, "rng seed (default 1)");
    gen->add_option("--density", params.relation_density,
                    "probability of declaring a free composition zero (default 0.5)");
    gen->add_flag("--json", as_json, "emit json instead of the text format");
    gen->callback([&] { rc = run_gen(params, as_json, out); });

    auto* dot = app.add_subcommand("export-dot", "Render a presentation as graphviz");
    dot->add_option("file", path_a, "presentation file (text or .json)")->required();
    dot->callback([&] { rc = run_export_dot(path_a, out); });

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
        return rc;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    } catch (const Error& e) {
        if (is_internal_kind(e)) {
            err << "internal error: " << e.what() << "\n";
            return 5;
        }
        if (const auto* pe = dynamic_cast<const ParseError*>(&e);
            pe != nullptr && pe->line() > 0) {
            err << "error: line " << pe->line() << ", column " << pe->col() << ": "
                << e.what() << "\n";
        } else {
            err << "error: " << e.what() << "\n";
        }
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 5;
    }
}

}  // namespace gentle
