#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "ranger/bench.hpp"
#include "support/test_corpora.hpp"

using namespace ranger;

namespace {

std::vector<std::vector<term_id>> sample_queries(const inverted_index& idx,
                                                 uint32_t count, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<term_id>> out;
    for (uint32_t i = 0; i < count; ++i) {
        std::vector<term_id> q;
        uint32_t n = 1 + rng() % 3;
        for (uint32_t j = 0; j < n; ++j) {
            term_id t = static_cast<term_id>(rng() % idx.num_terms());
            if (std::find(q.begin(), q.end(), t) == q.end()) q.push_back(t);
        }
        out.push_back(q);
    }
    return out;
}

}  // namespace

TEST_CASE("single-worker throughput is queries over wall time", "[bench]") {
    auto built = testing::build_pipeline(
        testing::random_corpus_jsonl({200, 25, 3, 20, 60}), 4, 2);
    auto queries = sample_queries(built.idx, 50, 9);
    bench_config cfg;
    cfg.threads = 1;
    cfg.mode = query_mode::range_safe;
    auto res = run_bench(built.idx, queries, cfg);
    REQUIRE(res.total_queries == 50);
    REQUIRE(res.wall_s > 0.0);
    REQUIRE(res.throughput_qps ==
            Catch::Approx(50.0 / res.wall_s).epsilon(1e-9));
    REQUIRE(res.workers.size() == 1);
    REQUIRE(res.workers[0].rows.size() == 50);
}

TEST_CASE("two workers double throughput under a simulated clock", "[bench]") {
    auto built = testing::build_pipeline(
        testing::random_corpus_jsonl({150, 20, 3, 15, 61}), 5, 2);
    auto queries = sample_queries(built.idx, 40, 10);

    bench_config cfg;
    cfg.mode = query_mode::range_safe;
    cfg.sim = cost_model{{}, 2.0};

    cfg.threads = 1;
    auto one = run_bench(built.idx, queries, cfg);
    cfg.threads = 2;
    auto two = run_bench(built.idx, queries, cfg);

    REQUIRE(one.throughput_qps > 0.0);
    REQUIRE(two.throughput_qps == Catch::Approx(2.0 * one.throughput_qps).epsilon(1e-12));
    REQUIRE(two.wall_s == Catch::Approx(one.wall_s).epsilon(1e-12));
}

TEST_CASE("per-query results are interleaving-independent for non-reactive policies",
          "[bench]") {
    auto built = testing::build_pipeline(
        testing::random_corpus_jsonl({180, 22, 3, 18, 62}), 4, 2);
    auto queries = sample_queries(built.idx, 30, 11);

    bench_config cfg;
    cfg.mode = query_mode::range_safe;
    cfg.threads = 4;
    auto res = run_bench(built.idx, queries, cfg);

    // reference: sequential execution of each distinct query
    steady_clock_source clock;
    for (const auto& report : res.workers) {
        for (const auto& row : report.rows) {
            policy_state p;
            auto ref = execute_query(built.idx, queries[row.query_index],
                                     query_mode::range_safe, algo_kind::maxscore, 10,
                                     p, clock);
            if (ref.topk.empty()) {
                REQUIRE(row.top_doc == kEndDoc);
            } else {
                REQUIRE(row.top_doc == ref.topk.front().doc);
                REQUIRE(row.top_score == ref.topk.front().score);
            }
            REQUIRE(row.ranges_processed == ref.timeline.processed);
        }
    }
}

TEST_CASE("warmup queries are excluded from latency stats", "[bench]") {
    auto built = testing::build_pipeline(
        testing::random_corpus_jsonl({100, 15, 3, 12, 63}), 3, 2);
    auto queries = sample_queries(built.idx, 20, 12);
    bench_config cfg;
    cfg.threads = 1;
    cfg.warmup = 5;
    cfg.sim = cost_model{{}, 1.0};
    cfg.mode = query_mode::range_safe;
    auto res = run_bench(built.idx, queries, cfg);
    REQUIRE(res.workers[0].rows.size() == 20);
    REQUIRE(res.total_queries == 20);
    // aggregate covers only the non-warmup samples
    std::vector<double> expect;
    for (size_t i = 5; i < res.workers[0].rows.size(); ++i) {
        expect.push_back(res.workers[0].rows[i].elapsed_ms);
    }
    auto oracle = make_latency_report(expect, cfg.sla_ms);
    REQUIRE(res.aggregate.p50 == oracle.p50);
    REQUIRE(res.aggregate.p99 == oracle.p99);
}

TEST_CASE("reactive alpha can be shared or per-worker", "[bench]") {
    auto built = testing::build_pipeline(
        testing::random_corpus_jsonl({120, 15, 3, 12, 64}), 4, 2);
    auto queries = sample_queries(built.idx, 25, 13);
    bench_config cfg;
    cfg.threads = 2;
    cfg.mode = query_mode::anytime;
    cfg.policy.kind = policy_kind::reactive;
    cfg.policy.budget_ms = 4.0;
    cfg.sim = cost_model{{}, 1.5};

    cfg.reactive_shared = false;
    auto per_worker = run_bench(built.idx, queries, cfg);
    REQUIRE(per_worker.total_queries == 50);

    cfg.reactive_shared = true;
    auto shared = run_bench(built.idx, queries, cfg);
    REQUIRE(shared.total_queries == 50);
}
