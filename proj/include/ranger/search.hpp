#pragma once

#include <span>
#include <string>
#include <vector>

#include "ranger/anytime.hpp"
#include "ranger/clock.hpp"
#include "ranger/index.hpp"
#include "ranger/tokenizer.hpp"
#include "ranger/topk.hpp"
#include "ranger/traversal.hpp"

namespace ranger {

enum class query_mode { full, range_safe, anytime };

inline query_mode parse_query_mode(const std::string& s) {
    if (s == "full") return query_mode::full;
    if (s == "range-safe") return query_mode::range_safe;
    if (s == "anytime") return query_mode::anytime;
    throw std::invalid_argument("unknown mode: " + s);
}

// Tokenizes with the collection's configuration, keeps known terms, and
// merges duplicates keeping first occurrence. The resulting order is the
// canonical accumulation order for this query's score arithmetic.
inline std::vector<term_id> resolve_terms(const inverted_index& idx,
                                          const std::string& text,
                                          const tokenizer_config& cfg = {}) {
    std::vector<term_id> terms;
    for (const std::string& tok : tokenize(text, cfg)) {
        term_id t = idx.lookup(tok);
        if (t == kInvalidTerm) continue;
        if (std::find(terms.begin(), terms.end(), t) == terms.end()) {
            terms.push_back(t);
        }
    }
    return terms;
}

struct query_result {
    std::vector<scored_doc> topk;
    query_timeline timeline;
    traversal_counters counters;
};

// One query against one index, in one of the three modes:
//   full        one pass over the whole id space, no range machinery
//   range-safe  bound-sum order + safe bypass, never budget-terminated
//   anytime     range-safe plus the termination policy
// A reactive policy is adjusted in place after the query completes.
template <typename Clock>
query_result execute_query(const inverted_index& idx, std::span<const term_id> terms,
                           query_mode mode, algo_kind algo, uint32_t k,
                           policy_state& policy, Clock& clock) {
    query_result out;
    if (idx.num_docs == 0 || terms.empty()) {
        return out;
    }
    switch (mode) {
        case query_mode::full: {
            double t0 = clock.now_ms();
            top_k heap(k);
            std::vector<term_stream> streams;
            streams.reserve(terms.size());
            for (term_id t : terms) streams.emplace_back(idx, t, &out.counters);
            range_window window{0, idx.num_docs - 1};
            run_algo(algo, idx, streams, window, heap, out.counters);
            out.topk = heap.sorted();
            out.timeline.processed = idx.ranges.num_ranges();
            out.timeline.elapsed_ms = clock.now_ms() - t0;
            break;
        }
        case query_mode::range_safe: {
            policy_state unbounded;  // fixed, no limit: only safe bypass stops it
            auto res = execute_anytime(idx, terms, algo, k, unbounded, clock,
                                       &out.counters);
            out.topk = std::move(res.topk);
            out.timeline = std::move(res.timeline);
            break;
        }
        case query_mode::anytime: {
            auto res =
                execute_anytime(idx, terms, algo, k, policy, clock, &out.counters);
            out.topk = std::move(res.topk);
            out.timeline = std::move(res.timeline);
            if (policy.kind == policy_kind::reactive) {
                policy.alpha =
                    reactive_update(policy.alpha, policy.beta, policy.q_tolerance,
                                    out.timeline.elapsed_ms, policy.budget_ms);
            }
            break;
        }
    }
    return out;
}

}  // namespace ranger
