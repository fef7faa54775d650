#pragma once

#include <algorithm>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "ranger/clock.hpp"
#include "ranger/evalreport.hpp"
#include "ranger/search.hpp"

namespace ranger {

struct bench_config {
    uint32_t threads = 1;
    uint64_t seed = 0;
    uint32_t warmup = 0;  // leading queries per worker excluded from stats
    query_mode mode = query_mode::range_safe;
    algo_kind algo = algo_kind::maxscore;
    uint32_t k = 10;
    policy_state policy;
    bool reactive_shared = false;  // share alpha across workers
    std::optional<cost_model> sim;
    double sla_ms = std::numeric_limits<double>::infinity();
};

struct bench_query_row {
    uint32_t query_index = 0;  // into the input log
    double elapsed_ms = 0.0;
    uint32_t ranges_processed = 0;
    query_outcome outcome = query_outcome::exhausted;
    double top_score = 0.0;
    doc_id top_doc = kEndDoc;
};

struct worker_report {
    std::vector<bench_query_row> rows;  // permuted order, warmup included
    latency_report latency;             // warmup excluded
};

struct bench_result {
    double wall_s = 0.0;
    double throughput_qps = 0.0;
    latency_report aggregate;
    std::vector<worker_report> workers;
    uint64_t total_queries = 0;
};

namespace detail {

inline std::vector<uint32_t> seeded_permutation(size_t n, uint64_t seed) {
    std::vector<uint32_t> p(n);
    for (size_t i = 0; i < n; ++i) p[i] = static_cast<uint32_t>(i);
    std::mt19937_64 rng(seed);
    for (size_t i = n; i > 1; --i) {
        size_t j = static_cast<size_t>(rng() % i);
        std::swap(p[i - 1], p[j]);
    }
    return p;
}

}  // namespace detail

// Closed-loop throughput harness: each worker owns a seeded permutation of
// the query log and issues its next query as soon as the previous one
// completes. The index is the only shared object; a reactive policy's alpha
// is per-worker unless `reactive_shared` is set.
inline bench_result run_bench(const inverted_index& idx,
                              const std::vector<std::vector<term_id>>& queries,
                              const bench_config& cfg) {
    if (cfg.threads < 1) throw std::invalid_argument("worker count must be >= 1");
    bench_result result;
    result.workers.resize(cfg.threads);

    std::mutex shared_mu;
    double shared_alpha = cfg.policy.alpha;

    std::vector<double> worker_wall_ms(cfg.threads, 0.0);
    auto worker_fn = [&](uint32_t w) {
        auto perm = detail::seeded_permutation(queries.size(), cfg.seed + w);
        policy_state policy = cfg.policy;
        auto& report = result.workers[w];
        report.rows.reserve(queries.size());

        auto run_one = [&](auto& clock, uint32_t qi) {
            if (cfg.reactive_shared && policy.kind == policy_kind::reactive) {
                std::lock_guard lock(shared_mu);
                policy.alpha = shared_alpha;
            }
            auto res = execute_query(idx, queries[qi], cfg.mode, cfg.algo, cfg.k,
                                     policy, clock);
            if (cfg.reactive_shared && policy.kind == policy_kind::reactive) {
                std::lock_guard lock(shared_mu);
                shared_alpha = policy.alpha;
            }
            bench_query_row row;
            row.query_index = qi;
            row.elapsed_ms = res.timeline.elapsed_ms;
            row.ranges_processed = res.timeline.processed;
            row.outcome = res.timeline.outcome;
            if (!res.topk.empty()) {
                row.top_score = res.topk.front().score;
                row.top_doc = res.topk.front().doc;
            }
            report.rows.push_back(row);
        };

        if (cfg.sim) {
            simulated_clock clock{*cfg.sim};
            for (uint32_t qi : perm) run_one(clock, qi);
            worker_wall_ms[w] = clock.now_ms();
        } else {
            steady_clock_source clock;
            double t0 = clock.now_ms();
            for (uint32_t qi : perm) run_one(clock, qi);
            worker_wall_ms[w] = clock.now_ms() - t0;
        }
    };

    if (cfg.threads == 1) {
        worker_fn(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(cfg.threads);
        for (uint32_t w = 0; w < cfg.threads; ++w) pool.emplace_back(worker_fn, w);
        for (auto& t : pool) t.join();
    }

    double wall_ms = *std::max_element(worker_wall_ms.begin(), worker_wall_ms.end());
    result.wall_s = wall_ms / 1000.0;

    std::vector<double> all_samples;
    for (auto& report : result.workers) {
        std::vector<double> samples;
        for (size_t i = cfg.warmup; i < report.rows.size(); ++i) {
            samples.push_back(report.rows[i].elapsed_ms);
        }
        if (!samples.empty()) {
            report.latency = make_latency_report(samples, cfg.sla_ms);
            all_samples.insert(all_samples.end(), samples.begin(), samples.end());
        }
        result.total_queries += report.rows.size();
    }
    if (!all_samples.empty()) {
        result.aggregate = make_latency_report(all_samples, cfg.sla_ms);
    }
    result.throughput_qps = result.wall_s > 0.0
                                ? static_cast<double>(result.total_queries) / result.wall_s
                                : 0.0;
    return result;
}

}  // namespace ranger
