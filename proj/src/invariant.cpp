#include "gentle/invariant.hpp"

#include <algorithm>
#include <numeric>

namespace gentle {

std::vector<std::vector<ArrowId>> relation_cycles(const GentlePresentation& p) {
    return ThreadTable(p).relation_cycles();
}

PhiResult compute_phi(const ThreadTable& table, std::span<const std::size_t> seed_order) {
    const auto& permitted = table.permitted();
    std::vector<char> used(permitted.size(), 0);
    PhiResult out;

    for (std::size_t seed : seed_order) {
        if (seed >= permitted.size()) {
            throw InternalError("seed order references a permitted thread index out of range");
        }
        if (used[seed]) continue;
        TraceRun run;
        std::uint32_t n = 0;
        std::uint32_t m = 0;
        std::size_t cur = seed;
        while (true) {
            if (used[cur]) {
                throw InternalError("matching revisited a permitted thread before its run closed");
            }
            used[cur] = 1;
            const Thread& h = permitted[cur];
            const Thread& pi = table.match_end(h);
            run.permitted.push_back(h);
            run.forbidden.push_back(pi);
            n += 1;
            m += static_cast<std::uint32_t>(pi.body.size());
            const Thread& next = table.match_start(pi);
            // match_start returns a reference into the table's own storage,
            // so the index falls out of pointer arithmetic.
            auto nxt = static_cast<std::size_t>(&next - permitted.data());
            if (nxt >= permitted.size()) {
                throw InternalError("match_start returned a thread outside the table");
            }
            if (nxt == seed) break;
            cur = nxt;
        }
        run.pair = {n, m};
        out.phi.pairs.push_back(run.pair);
        out.trace.runs.push_back(std::move(run));
    }

    if (std::find(used.begin(), used.end(), 0) != used.end()) {
        throw InternalError("seed order left permitted threads unused");
    }

    for (const auto& cycle : table.relation_cycles()) {
        auto pair = std::make_pair(std::uint32_t{0}, static_cast<std::uint32_t>(cycle.size()));
        out.trace.cycles.emplace_back(cycle, pair);
        out.phi.pairs.push_back(pair);
    }

    std::sort(out.phi.pairs.begin(), out.phi.pairs.end());
    return out;
}

PhiResult compute_phi(const GentlePresentation& p, std::span<const std::size_t> seed_order) {
    ThreadTable table(p);
    return compute_phi(table, seed_order);
}

PhiResult compute_phi(const GentlePresentation& p) {
    ThreadTable table(p);
    std::vector<std::size_t> order(table.permitted().size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    return compute_phi(table, order);
}

bool check_sums(const PhiInvariant& phi, const GentlePresentation& p) {
    std::uint64_t total_n = 0;
    std::uint64_t total_m = 0;
    for (const auto& [n, m] : phi.pairs) {
        total_n += n;
        total_m += m;
    }
    return total_n == ThreadTable(p).permitted().size() &&
           total_m == p.quiver().arrow_count();
}

std::string phi_canonical_text(const PhiInvariant& phi) {
    std::string s = "[";
    for (std::size_t i = 0; i < phi.pairs.size(); ++i) {
        if (i > 0) s += ',';
        s += '(' + std::to_string(phi.pairs[i].first) + ',' +
             std::to_string(phi.pairs[i].second) + ')';
    }
    s += ']';
    return s;
}

std::string render_trace(const Quiver& q, const AlgorithmTrace& trace) {
    std::string out;
    for (std::size_t r = 0; r < trace.runs.size(); ++r) {
        const TraceRun& run = trace.runs[r];
        out += "run " + std::to_string(r + 1) + ":\n";
        std::vector<std::string> left;
        left.reserve(run.permitted.size());
        std::size_t width = 0;
        for (std::size_t i = 0; i < run.permitted.size(); ++i) {
            left.push_back("H_" + std::to_string(i) + " = " +
                           render_thread(q, run.permitted[i]));
            width = std::max(width, left.back().size());
        }
        for (std::size_t i = 0; i < run.permitted.size(); ++i) {
            out += "  " + left[i] + std::string(width - left[i].size() + 3, ' ') + "Pi_" +
                   std::to_string(i) + "^-1 = " + render_thread_inverse(q, run.forbidden[i]) +
                   "\n";
        }
        out += "  H_" + std::to_string(run.permitted.size()) + " = H_0  -> (" +
               std::to_string(run.pair.first) + "," + std::to_string(run.pair.second) + ")\n";
    }
    for (std::size_t c = 0; c < trace.cycles.size(); ++c) {
        const auto& [arrows, pair] = trace.cycles[c];
        std::string labels;
        for (ArrowId a : arrows) {
            if (!labels.empty()) labels += ' ';
            labels += q.arrow(a).label;
        }
        out += "cycle " + std::to_string(c + 1) + ": (" + labels + ") -> (" +
               std::to_string(pair.first) + "," + std::to_string(pair.second) + ")\n";
    }
    return out;
}

}  // namespace gentle
