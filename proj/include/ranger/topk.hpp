#pragma once

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <vector>

#include "ranger/common.hpp"

namespace ranger {

struct scored_doc {
    double score = 0.0;
    doc_id doc = 0;

    // Candidate ordering used everywhere: higher score wins, equal scores
    // go to the smaller internal docid. Making the heap, the run output and
    // every bypass decision agree on this one total order is what keeps
    // results identical across traversal orders.
    friend bool better(const scored_doc& a, const scored_doc& b) {
        return a.score > b.score || (a.score == b.score && a.doc < b.doc);
    }

    bool operator==(const scored_doc&) const = default;
};

// Bounded selection of the k best candidates. The entry threshold θ is the
// lowest retained score once k candidates are held, and never decreases.
class top_k {
public:
    explicit top_k(uint32_t k) : k_(k) {
        if (k < 1) throw std::invalid_argument("k must be >= 1");
        heap_.reserve(k);
    }

    uint32_t k() const { return k_; }
    size_t size() const { return heap_.size(); }
    bool full() const { return heap_.size() == k_; }
    double threshold() const { return full() ? heap_.front().score : 0.0; }

    // Worst retained entry; only meaningful when full.
    const scored_doc& worst() const { return heap_.front(); }

    bool would_enter(double score, doc_id d) const {
        return !full() || better({score, d}, heap_.front());
    }

    // Could any candidate with upper bound `ub` and docid >= `lowest_doc`
    // still enter? Exact form of the bypass test: a bound equal to θ only
    // matters if a smaller docid than the current worst entry is possible.
    bool could_enter(double ub, doc_id lowest_doc) const {
        if (!full()) return true;
        return ub > threshold() || (ub == threshold() && lowest_doc < heap_.front().doc);
    }

    // Slackened form for interior pruning decisions whose upper bounds are
    // accumulated in a different order than document scores.
    bool could_enter_relaxed(double ub) const {
        return !full() || ub + kPruneSlack > threshold();
    }

    bool insert(double score, doc_id d) {
        if (!full()) {
            heap_.push_back({score, d});
            std::push_heap(heap_.begin(), heap_.end(), cmp);
            return true;
        }
        if (!better({score, d}, heap_.front())) return false;
        assert(score >= threshold());
        std::pop_heap(heap_.begin(), heap_.end(), cmp);
        heap_.back() = {score, d};
        std::push_heap(heap_.begin(), heap_.end(), cmp);
        return true;
    }

    // Best-first contents.
    std::vector<scored_doc> sorted() const {
        std::vector<scored_doc> out(heap_);
        std::sort(out.begin(), out.end(),
                  [](const scored_doc& a, const scored_doc& b) { return better(a, b); });
        return out;
    }

private:
    // std heap with "better == less" keeps the worst entry at the front
    static bool cmp(const scored_doc& a, const scored_doc& b) { return better(a, b); }

    uint32_t k_;
    std::vector<scored_doc> heap_;
};

}  // namespace ranger
