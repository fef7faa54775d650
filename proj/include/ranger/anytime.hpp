#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "ranger/clock.hpp"
#include "ranger/index.hpp"
#include "ranger/policy.hpp"
#include "ranger/topk.hpp"
#include "ranger/traversal.hpp"

namespace ranger {

enum class query_outcome { exhausted, safe_terminated, budget_terminated };

inline const char* outcome_name(query_outcome o) {
    switch (o) {
        case query_outcome::exhausted: return "exhausted";
        case query_outcome::safe_terminated: return "safe-terminated";
        case query_outcome::budget_terminated: return "budget-terminated";
    }
    return "exhausted";
}

struct range_order_entry {
    range_id range = 0;
    double bound_sum = 0.0;
};

// Per-query record of the range ordering and what happened to it.
struct query_timeline {
    std::vector<range_order_entry> order;  // descending bound sum
    std::vector<double> range_ms;          // one entry per processed range
    uint32_t processed = 0;
    double elapsed_ms = 0.0;
    query_outcome outcome = query_outcome::exhausted;
};

// The range ordering heuristic: per-range sums of the query terms' range
// score bounds, descending, ties to the smaller range id. Only ranges where
// at least one query term appears are listed. Per-range sums accumulate in
// query-term order so that a sum over a range equals the score of a
// document that attains every term bound in it.
inline std::vector<range_order_entry> bound_sum(const inverted_index& idx,
                                                std::span<const term_id> terms) {
    std::vector<double> sums(idx.ranges.num_ranges(), 0.0);
    std::vector<bool> present(idx.ranges.num_ranges(), false);
    for (term_id t : terms) {
        for (const range_bound_entry& e : idx.term_range_bounds(t)) {
            sums[e.range] += e.bound;
            present[e.range] = true;
        }
    }
    std::vector<range_order_entry> order;
    for (range_id r = 0; r < sums.size(); ++r) {
        if (present[r]) order.push_back({r, sums[r]});
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const range_order_entry& a, const range_order_entry& b) {
                         if (a.bound_sum != b.bound_sum) return a.bound_sum > b.bound_sum;
                         return a.range < b.range;
                     });
    return order;
}

enum class skip_decision { process, bypass_all_remaining };

// Rank-safe bypass test, applied in descending bound-sum order: once no
// document of the next range could displace a heap entry, neither can any
// document of the ranges after it. `first_doc` is the smallest docid the
// range can contain, which settles exact bound/threshold ties.
inline skip_decision safe_skip(double range_bound_sum, const top_k& heap,
                               doc_id first_doc) {
    return heap.could_enter(range_bound_sum, first_doc)
               ? skip_decision::process
               : skip_decision::bypass_all_remaining;
}

struct anytime_result {
    std::vector<scored_doc> topk;
    query_timeline timeline;
};

// Range-by-range anytime execution: ranges are visited in bound-sum order;
// before each one the safe bypass test runs first, then the termination
// policy. Per-range elapsed time comes from two reads of the injected
// clock. The heap is shared across ranges, so partial executions still
// return the best documents seen so far.
template <typename Clock>
anytime_result execute_anytime(const inverted_index& idx,
                               std::span<const term_id> terms, algo_kind algo,
                               uint32_t k, const policy_state& policy, Clock& clock,
                               traversal_counters* counters = nullptr) {
    traversal_counters local;
    traversal_counters& stats = counters ? *counters : local;

    anytime_result out;
    out.timeline.order = bound_sum(idx, terms);
    if (out.timeline.order.empty()) {
        return out;
    }

    top_k heap(k);
    std::vector<term_stream> streams;
    streams.reserve(terms.size());
    for (term_id t : terms) streams.emplace_back(idx, t, &stats);

    bool terminated = false;
    for (const range_order_entry& e : out.timeline.order) {
        doc_id first = idx.ranges.first_doc(e.range);
        if (safe_skip(e.bound_sum, heap, first) == skip_decision::bypass_all_remaining) {
            out.timeline.outcome = query_outcome::safe_terminated;
            terminated = true;
            break;
        }
        if (!decide(policy, out.timeline.processed, out.timeline.elapsed_ms)) {
            out.timeline.outcome = query_outcome::budget_terminated;
            terminated = true;
            break;
        }
        double t0 = clock.now_ms();
        for (size_t i = 0; i < streams.size(); ++i) {
            streams[i].window_bound = idx.range_bound(terms[i], e.range);
        }
        range_window window{first, idx.ranges.last_doc(e.range)};
        run_algo(algo, idx, streams, window, heap, stats);
        clock.on_range(e.range);
        double t1 = clock.now_ms();
        out.timeline.range_ms.push_back(t1 - t0);
        out.timeline.elapsed_ms += t1 - t0;
        ++out.timeline.processed;
        ++stats.ranges_visited;
    }
    if (!terminated) out.timeline.outcome = query_outcome::exhausted;
    out.topk = heap.sorted();
    return out;
}

}  // namespace ranger
