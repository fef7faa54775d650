#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "ranger/index.hpp"
#include "ranger/scoring.hpp"
#include "ranger/topk.hpp"

namespace ranger {

// Inclusive internal-id window: one document range, or the whole collection.
struct range_window {
    doc_id lo = 0;
    doc_id hi = 0;
};

enum class algo_kind { ranked_or, maxscore, wand, bmw };

inline algo_kind parse_algo(const std::string& s) {
    if (s == "or") return algo_kind::ranked_or;
    if (s == "maxscore") return algo_kind::maxscore;
    if (s == "wand") return algo_kind::wand;
    if (s == "bmw") return algo_kind::bmw;
    throw std::invalid_argument("unknown algorithm: " + s);
}

// One deduped query term: postings cursor, scorer, and the score upper
// bound that applies to the window being traversed (global U_t, or the
// range-local bound when a single range is processed).
struct term_stream {
    cursor cur;
    term_scorer scorer;
    double window_bound = 0.0;

    term_stream(const inverted_index& idx, term_id t, traversal_counters* counters)
        : cur(idx, t, counters),
          scorer(idx.scorer_for(t)),
          window_bound(idx.metas[t].max_score) {}
};

namespace detail {

// Sums the contributions of every stream positioned on d, in stream
// (query) order. All traversal algorithms score through here, so a given
// document's score is bit-identical no matter which algorithm found it.
inline double score_aligned(const inverted_index& idx, std::span<term_stream> streams,
                            doc_id d, traversal_counters& counters) {
    double score = 0.0;
    uint32_t len = idx.doc_lens[d];
    for (term_stream& s : streams) {
        if (s.cur.docid() == d) score += s.scorer(s.cur.freq(), len);
    }
    ++counters.docs_scored;
    return score;
}

inline void seek_window(std::span<term_stream> streams, const range_window& w) {
    for (term_stream& s : streams) s.cur.seek_geq(w.lo);
}

}  // namespace detail

// Exhaustive disjunctive traversal: every document in the window holding
// at least one query term is scored and offered to the heap.
inline void ranked_or(const inverted_index& idx, std::span<term_stream> streams,
                      const range_window& window, top_k& heap,
                      traversal_counters& counters) {
    detail::seek_window(streams, window);
    while (true) {
        doc_id d = kEndDoc;
        for (term_stream& s : streams) d = std::min(d, s.cur.docid());
        if (d == kEndDoc || d > window.hi) break;
        heap.insert(detail::score_aligned(idx, streams, d, counters), d);
        for (term_stream& s : streams) {
            if (s.cur.docid() == d) s.cur.next();
        }
    }
}

// MaxScore: terms are split into essential and non-essential lists by the
// cumulative window bounds; candidates are drawn from essential lists only
// and scoring of the non-essential tail stops as soon as the remaining
// bounds cannot lift the document over the threshold.
inline void maxscore(const inverted_index& idx, std::span<term_stream> streams,
                     const range_window& window, top_k& heap,
                     traversal_counters& counters) {
    detail::seek_window(streams, window);
    size_t n = streams.size();
    std::vector<uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
        return streams[a].window_bound < streams[b].window_bound;
    });
    std::vector<double> prefix_ub(n);
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) {
        acc += streams[order[i]].window_bound;
        prefix_ub[i] = acc;
    }

    std::vector<double> contrib(n);
    size_t first_essential = 0;
    while (first_essential < n &&
           !heap.could_enter_relaxed(prefix_ub[first_essential])) {
        ++first_essential;
    }

    while (first_essential < n) {
        doc_id d = kEndDoc;
        for (size_t i = first_essential; i < n; ++i) {
            d = std::min(d, streams[order[i]].cur.docid());
        }
        if (d == kEndDoc || d > window.hi) break;

        std::fill(contrib.begin(), contrib.end(), 0.0);
        uint32_t len = idx.doc_lens[d];
        double partial = 0.0;
        for (size_t i = first_essential; i < n; ++i) {
            term_stream& s = streams[order[i]];
            if (s.cur.docid() == d) {
                contrib[order[i]] = s.scorer(s.cur.freq(), len);
                partial += contrib[order[i]];
            }
        }
        bool viable = true;
        for (size_t i = first_essential; i-- > 0;) {
            if (heap.full() && partial + prefix_ub[i] + kPruneSlack < heap.threshold()) {
                viable = false;
                break;
            }
            term_stream& s = streams[order[i]];
            if (s.cur.docid() < d) s.cur.next_geq(d);
            if (s.cur.docid() == d) {
                contrib[order[i]] = s.scorer(s.cur.freq(), len);
                partial += contrib[order[i]];
            }
        }
        if (viable) {
            double score = 0.0;
            for (size_t i = 0; i < n; ++i) score += contrib[i];
            ++counters.docs_scored;
            heap.insert(score, d);
        }
        for (size_t i = first_essential; i < n; ++i) {
            term_stream& s = streams[order[i]];
            if (s.cur.docid() == d) s.cur.next();
        }
        while (first_essential < n &&
               !heap.could_enter_relaxed(prefix_ub[first_essential])) {
            ++first_essential;
        }
    }
}

namespace detail {

// Shared WAND/BMW skeleton; `BlockCheck` decides whether the pivot is
// scored once the term-bound test has passed.
template <bool UseBlockMax>
inline void wand_like(const inverted_index& idx, std::span<term_stream> streams,
                      const range_window& window, top_k& heap,
                      traversal_counters& counters) {
    seek_window(streams, window);
    size_t n = streams.size();
    std::vector<uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0);

    while (true) {
        std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
            doc_id da = streams[a].cur.docid();
            doc_id db = streams[b].cur.docid();
            return da != db ? da < db : a < b;
        });
        doc_id first = streams[order[0]].cur.docid();
        if (first == kEndDoc || first > window.hi) break;

        double acc = 0.0;
        size_t pivot = n;
        for (size_t i = 0; i < n; ++i) {
            if (streams[order[i]].cur.docid() == kEndDoc) break;
            acc += streams[order[i]].window_bound;
            if (heap.could_enter_relaxed(acc)) {
                pivot = i;
                break;
            }
        }
        if (pivot == n) break;
        doc_id pivot_doc = streams[order[pivot]].cur.docid();
        if (pivot_doc > window.hi) break;
        while (pivot + 1 < n && streams[order[pivot + 1]].cur.docid() == pivot_doc) {
            ++pivot;
        }

        if constexpr (UseBlockMax) {
            double block_sum = 0.0;
            for (size_t i = 0; i <= pivot; ++i) {
                block_sum += streams[order[i]].cur.block_max_at(pivot_doc);
            }
            if (!heap.could_enter_relaxed(block_sum)) {
                // everything up to the tightest block boundary shares these
                // block maxima and can be bypassed wholesale
                doc_id boundary = kEndDoc;
                for (size_t i = 0; i <= pivot; ++i) {
                    doc_id last = streams[order[i]].cur.block_last_at(pivot_doc);
                    boundary = std::min(boundary, last);
                }
                doc_id next_candidate = boundary == kEndDoc ? kEndDoc : boundary + 1;
                if (pivot + 1 < n) {
                    next_candidate =
                        std::min(next_candidate, streams[order[pivot + 1]].cur.docid());
                }
                if (next_candidate > window.hi) break;
                for (size_t i = 0; i <= pivot; ++i) {
                    term_stream& s = streams[order[i]];
                    if (s.cur.docid() < next_candidate) s.cur.next_geq(next_candidate);
                }
                continue;
            }
        }

        if (streams[order[0]].cur.docid() == pivot_doc) {
            heap.insert(score_aligned(idx, streams, pivot_doc, counters), pivot_doc);
            for (size_t i = 0; i <= pivot; ++i) {
                term_stream& s = streams[order[i]];
                if (s.cur.docid() == pivot_doc) s.cur.next();
            }
        } else {
            // advance the highest-bound list that still trails the pivot
            size_t chosen = 0;
            double best_bound = -1.0;
            for (size_t i = 0; i < pivot; ++i) {
                term_stream& s = streams[order[i]];
                if (s.cur.docid() < pivot_doc && s.window_bound > best_bound) {
                    best_bound = s.window_bound;
                    chosen = i;
                }
            }
            streams[order[chosen]].cur.next_geq(pivot_doc);
        }
    }
}

}  // namespace detail

inline void wand(const inverted_index& idx, std::span<term_stream> streams,
                 const range_window& window, top_k& heap,
                 traversal_counters& counters) {
    detail::wand_like<false>(idx, streams, window, heap, counters);
}

inline void bmw(const inverted_index& idx, std::span<term_stream> streams,
                const range_window& window, top_k& heap,
                traversal_counters& counters) {
    detail::wand_like<true>(idx, streams, window, heap, counters);
}

inline void run_algo(algo_kind algo, const inverted_index& idx,
                     std::span<term_stream> streams, const range_window& window,
                     top_k& heap, traversal_counters& counters) {
    switch (algo) {
        case algo_kind::ranked_or:
            ranked_or(idx, streams, window, heap, counters);
            break;
        case algo_kind::maxscore:
            maxscore(idx, streams, window, heap, counters);
            break;
        case algo_kind::wand:
            wand(idx, streams, window, heap, counters);
            break;
        case algo_kind::bmw:
            bmw(idx, streams, window, heap, counters);
            break;
    }
}

}  // namespace ranger
