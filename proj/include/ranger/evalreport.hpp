#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "ranger/anytime.hpp"
#include "ranger/arrangement.hpp"
#include "ranger/common.hpp"

namespace ranger {

struct latency_report {
    double p50 = 0.0;
    double p95 = 0.0;
    double p99 = 0.0;
    uint64_t miss_count = 0;
    double miss_pct = 0.0;
    double mean_overshoot_ms = 0.0;  // over violating queries only
    double max_overshoot_ms = 0.0;
};

// Nearest-rank percentile: the ceil(p*n)-th order statistic. Integer
// arithmetic so 0.95 * n never rounds the wrong way.
inline double percentile_nearest_rank(std::span<const double> sorted, uint32_t pct) {
    size_t n = sorted.size();
    size_t rank = (static_cast<size_t>(pct) * n + 99) / 100;
    if (rank < 1) rank = 1;
    return sorted[rank - 1];
}

inline latency_report make_latency_report(std::span<const double> samples_ms,
                                          double sla_ms) {
    if (samples_ms.empty()) {
        throw std::invalid_argument("latency report needs at least one sample");
    }
    std::vector<double> sorted(samples_ms.begin(), samples_ms.end());
    std::sort(sorted.begin(), sorted.end());
    latency_report r;
    r.p50 = percentile_nearest_rank(sorted, 50);
    r.p95 = percentile_nearest_rank(sorted, 95);
    r.p99 = percentile_nearest_rank(sorted, 99);
    double sum_over = 0.0;
    for (double s : samples_ms) {
        if (s > sla_ms) {
            ++r.miss_count;
            sum_over += s - sla_ms;
            r.max_overshoot_ms = std::max(r.max_overshoot_ms, s - sla_ms);
        }
    }
    r.miss_pct = 100.0 * static_cast<double>(r.miss_count) /
                 static_cast<double>(samples_ms.size());
    if (r.miss_count > 0) {
        r.mean_overshoot_ms = sum_over / static_cast<double>(r.miss_count);
    }
    return r;
}

struct range_weight {
    range_id range = 0;
    double weight = 0.0;
};

// Hindsight range ordering from a gold ranking: each rank i contributes
// the geometric weight (1-phi) * phi^(i-1) to the range holding that
// document; ranges are sorted by accumulated weight, ties to the smaller
// range id.
inline std::vector<range_weight> oracle_range_order(std::span<const doc_id> gold,
                                                    const cluster_map& ranges,
                                                    double phi) {
    if (!(phi > 0.0 && phi < 1.0)) {
        throw std::invalid_argument("persistence must be in (0, 1)");
    }
    std::vector<double> weight(ranges.num_ranges(), 0.0);
    std::vector<bool> present(ranges.num_ranges(), false);
    double w = 1.0 - phi;  // (1-phi) * phi^(i-1) at i=1
    for (doc_id d : gold) {
        range_id r = ranges.range_of(d);
        weight[r] += w;
        present[r] = true;
        w *= phi;
    }
    std::vector<range_weight> out;
    for (range_id r = 0; r < weight.size(); ++r) {
        if (present[r]) out.push_back({r, weight[r]});
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const range_weight& a, const range_weight& b) {
                         if (a.weight != b.weight) return a.weight > b.weight;
                         return a.range < b.range;
                     });
    return out;
}

// One diagnostic row comparing an anytime execution against the exhaustive
// answer set: how many answer-bearing ranges were reached, and how deep
// they sat in the bound-sum ordering.
struct failure_row {
    uint32_t answer_ranges_hit = 0;
    uint32_t answer_ranges_total = 0;
    uint32_t ranges_processed = 0;
    uint32_t deepest_answer_pos = 0;  // 1-based position in the ordering
    double mean_answer_pos = 0.0;
};

inline failure_row make_failure_row(std::span<const doc_id> exhaustive_topk,
                                    const cluster_map& ranges,
                                    const query_timeline& timeline) {
    failure_row row;
    row.ranges_processed = timeline.processed;
    std::vector<range_id> answer;
    for (doc_id d : exhaustive_topk) answer.push_back(ranges.range_of(d));
    std::sort(answer.begin(), answer.end());
    answer.erase(std::unique(answer.begin(), answer.end()), answer.end());
    row.answer_ranges_total = static_cast<uint32_t>(answer.size());

    double pos_sum = 0.0;
    for (range_id r : answer) {
        uint32_t pos = static_cast<uint32_t>(timeline.order.size()) + 1;
        for (uint32_t i = 0; i < timeline.order.size(); ++i) {
            if (timeline.order[i].range == r) {
                pos = i + 1;
                break;
            }
        }
        if (pos <= timeline.processed) ++row.answer_ranges_hit;
        row.deepest_answer_pos = std::max(row.deepest_answer_pos, pos);
        pos_sum += pos;
    }
    if (!answer.empty()) {
        row.mean_answer_pos = pos_sum / static_cast<double>(answer.size());
    }
    return row;
}

}  // namespace ranger
