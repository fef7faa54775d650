// Acceptance suite: each numbered criterion runs end to end and prints one
// [PASS]/[FAIL] line. With no arguments all criteria run; arguments select
// individual criteria (as wired into ctest).

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "ranger/ranger.hpp"
#include "support/oracles.hpp"
#include "support/synth.hpp"
#include "support/test_corpora.hpp"

namespace fs = std::filesystem;
using namespace ranger;

namespace {

int g_checks_failed = 0;

bool expect(bool ok, const std::string& what) {
    if (!ok) {
        std::cout << "    check failed: " << what << "\n";
        ++g_checks_failed;
    }
    return ok;
}

std::vector<term_id> to_terms(const inverted_index& idx,
                              const std::vector<std::string>& words) {
    std::vector<term_id> terms;
    for (const auto& w : words) {
        term_id t = idx.lookup(w);
        if (t != kInvalidTerm &&
            std::find(terms.begin(), terms.end(), t) == terms.end()) {
            terms.push_back(t);
        }
    }
    return terms;
}

bool same_results(const std::vector<scored_doc>& a, const std::vector<scored_doc>& b,
                  double score_tol) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].doc != b[i].doc) return false;
        if (std::abs(a[i].score - b[i].score) > score_tol) return false;
    }
    return true;
}

// ---------------------------------------------------------------- 1 ------

bool criterion_pruning_safety() {
    std::mt19937_64 rng(101);
    bool ok = true;
    for (int trial = 0; trial < 200; ++trial) {
        testing::corpus_options opt;
        opt.docs = 50 + static_cast<uint32_t>(rng() % 451);
        opt.vocab = 10 + static_cast<uint32_t>(rng() % 41);
        opt.min_len = 1;
        opt.max_len = 30;
        opt.seed = 7000 + trial;
        auto built = testing::build_pipeline(testing::random_corpus_jsonl(opt),
                                             1 + trial % 7, trial,
                                             1 + trial % 200);
        auto words = testing::random_query(rng, opt.vocab, 5);
        auto terms = to_terms(built.idx, words);
        if (terms.empty()) continue;

        steady_clock_source clock;
        policy_state none;
        for (uint32_t k : {1u, 3u, 10u}) {
            auto base = execute_query(built.idx, terms, query_mode::full,
                                      algo_kind::ranked_or, k, none, clock);
            for (auto algo : {algo_kind::maxscore, algo_kind::wand, algo_kind::bmw}) {
                auto got = execute_query(built.idx, terms, query_mode::full, algo, k,
                                         none, clock);
                ok &= expect(same_results(got.topk, base.topk, 1e-6),
                             "trial " + std::to_string(trial) + " k=" +
                                 std::to_string(k) + " algo mismatch vs ranked_or");
            }
        }
    }
    return ok;
}

// ---------------------------------------------------------------- 2 ------

bool criterion_range_safe_equivalence() {
    std::mt19937_64 rng(202);
    bool ok = true;
    for (int trial = 0; trial < 200; ++trial) {
        testing::corpus_options opt;
        opt.docs = 50 + static_cast<uint32_t>(rng() % 451);
        opt.vocab = 10 + static_cast<uint32_t>(rng() % 41);
        opt.min_len = 1;
        opt.max_len = 30;
        opt.seed = 8000 + trial;
        auto jsonl = testing::random_corpus_jsonl(opt);
        auto words = testing::random_query(rng, opt.vocab, 5);
        uint32_t k = std::array{1u, 3u, 10u}[trial % 3];

        for (uint32_t r : {1u, 3u, 7u}) {
            auto built = testing::build_pipeline(jsonl, r, trial, 64);
            auto terms = to_terms(built.idx, words);
            if (terms.empty()) continue;
            steady_clock_source clock;
            policy_state none;
            auto base = execute_query(built.idx, terms, query_mode::full,
                                      algo_kind::ranked_or, k, none, clock);
            for (auto algo : {algo_kind::maxscore, algo_kind::wand, algo_kind::bmw}) {
                auto got = execute_query(built.idx, terms, query_mode::range_safe,
                                         algo, k, none, clock);
                bool same = got.topk.size() == base.topk.size();
                for (size_t i = 0; same && i < got.topk.size(); ++i) {
                    same = got.topk[i] == base.topk[i];  // exact
                }
                ok &= expect(same, "trial " + std::to_string(trial) + " r=" +
                                       std::to_string(r) + " range-safe mismatch");
            }
        }
    }

    // worked bypass fixture: bounds low < mid < high, threshold passes the
    // low range after two ranges, so exactly one range is bypassed
    std::ostringstream corpus;
    auto doc = [&](const std::string& id, int tf, int pad) {
        corpus << R"({"id":")" << id << R"(","text":")";
        for (int i = 0; i < tf; ++i) corpus << "q ";
        for (int i = 0; i < pad; ++i) corpus << "pad" << id << i << ' ';
        corpus << "\"}\n";
    };
    doc("weak", 1, 9);
    doc("strong", 8, 2);
    doc("med", 2, 8);
    doc("mid", 3, 7);
    auto fwd = testing::parse_jsonl(corpus.str());
    cluster_assignment clusters{3, {0, 1, 1, 2}};
    auto arranged = concatenate(
        order_within_clusters(fwd, clusters, ordering_mode::none), fwd.num_docs());
    auto idx = build_index(fwd, arranged.old_to_new, arranged.ranges);

    steady_clock_source clock;
    policy_state none;
    std::vector<term_id> terms{idx.lookup("q")};
    auto res = execute_query(idx, terms, query_mode::range_safe,
                             algo_kind::ranked_or, 2, none, clock);
    auto full = execute_query(idx, terms, query_mode::full, algo_kind::ranked_or, 2,
                              none, clock);
    ok &= expect(res.timeline.order.size() == 3, "fixture should order 3 ranges");
    ok &= expect(res.timeline.processed == 2, "fixture should process 2 ranges");
    ok &= expect(res.timeline.outcome == query_outcome::safe_terminated,
                 "fixture should terminate safely");
    ok &= expect(res.topk == full.topk, "fixture results should be safe");
    return ok;
}

// ---------------------------------------------------------------- 3 ------

bool criterion_reactive_arithmetic() {
    bool ok = true;
    double mult = reactive_update(1.0, 1.5, 0.01, 1.0, 2.0);
    ok &= expect(std::abs(mult - 0.995953558) <= 1e-9,
                 "per-success multiplier should be 0.995953558");
    double alpha = 1.0;
    for (int i = 0; i < 100; ++i) alpha = reactive_update(alpha, 1.5, 0.01, 1.0, 2.0);
    ok &= expect(std::abs(alpha - 2.0 / 3.0) <= 1e-6,
                 "100-success compound factor should be 2/3");
    return ok;
}

// ---------------------------------------------------------------- 4 ------

struct policy_sim {
    uint32_t processed = 0;
    double elapsed = 0.0;
    double last_cost = 0.0;
};

policy_sim simulate(const policy_state& p, const std::vector<double>& costs) {
    policy_sim s;
    for (double c : costs) {
        if (!decide(p, s.processed, s.elapsed)) break;
        s.elapsed += c;
        s.last_cost = c;
        ++s.processed;
    }
    return s;
}

bool criterion_policy_compliance() {
    std::mt19937_64 rng(404);
    bool ok = true;
    const double t_max = 5.0;
    for (int trial = 0; trial < 1000; ++trial) {
        uint32_t r = 5 + static_cast<uint32_t>(rng() % 60);
        std::vector<double> costs(r);
        for (double& c : costs) c = 0.05 + (t_max - 0.05) * (rng() % 1000) / 999.0;
        double budget = 1.0 + (rng() % 590) / 10.0;

        policy_state p;
        p.budget_ms = budget;
        p.t_max_ms = t_max;

        p.kind = policy_kind::undershoot;
        auto under = simulate(p, costs);
        ok &= expect(under.elapsed <= budget, "undershoot exceeded the budget");

        p.kind = policy_kind::overshoot;
        auto over = simulate(p, costs);
        ok &= expect(over.elapsed <= budget + over.last_cost,
                     "overshoot exceeded the budget by more than one range");

        // predictive with alpha=1 and constant cost: exactly floor(B/c)
        // ranges (first range unconditional), capped by the range count
        double c = 0.2 + (rng() % 470) / 100.0;
        uint32_t m = 1 + static_cast<uint32_t>(rng() % 20);
        double frac = 0.1 + (rng() % 81) / 100.0;
        double b2
            = c * (m + frac);
        std::vector<double> constant(m + 3, c);
        p.kind = policy_kind::predictive;
        p.alpha = 1.0;
        p.budget_ms = b2;
        auto pred = simulate(p, constant);
        ok &= expect(static_cast<uint32_t>(b2 / c) == m, "floor(B/c) guard");
        ok &= expect(pred.processed == m,
                     "predictive should visit exactly floor(B/c) ranges, got " +
                         std::to_string(pred.processed) + " want " + std::to_string(m));
    }

    // the engine's loop honours the same recurrence
    std::ostringstream corpus;
    for (int i = 0; i < 120; ++i) corpus << R"({"id":"d)" << i << R"(","text":"x y)" << i % 5 << "\"}\n";
    auto fwd = testing::parse_jsonl(corpus.str());
    cluster_assignment assign{40, {}};
    assign.member_of.resize(120);
    for (uint32_t d = 0; d < 120; ++d) assign.member_of[d] = d % 40;
    auto arranged = concatenate(
        order_within_clusters(fwd, assign, ordering_mode::none), fwd.num_docs());
    auto idx = build_index(fwd, arranged.old_to_new, arranged.ranges);
    std::vector<term_id> terms{idx.lookup("x")};
    for (int trial = 0; trial < 50; ++trial) {
        double c = 0.5 + (rng() % 300) / 100.0;
        uint32_t m = 1 + static_cast<uint32_t>(rng() % 30);
        double frac = 0.1 + (rng() % 81) / 100.0;
        simulated_clock clock;
        clock.model.default_ms = c;
        policy_state p;
        p.kind = policy_kind::predictive;
        p.alpha = 1.0;
        p.budget_ms = c * (m + frac);
        auto res = execute_anytime(idx, terms, algo_kind::maxscore, 1000, p, clock);
        uint32_t want = std::min<uint32_t>(m, 40);
        ok &= expect(res.timeline.processed == want,
                     "engine predictive visit count mismatch: got " +
                         std::to_string(res.timeline.processed) + " want " +
                         std::to_string(want));
    }
    return ok;
}

// ------------------------------------------------------------- desk ------

constexpr const char* kDeskCacheTag = "desk-v2 docs=120000 topics=6 r=50 seed=2024";

const std::string& desk_index_dir() {
    static std::string dir = [] {
        fs::path root = fs::temp_directory_path() / "ranger_acceptance_desk";
        fs::path marker = root / "tag.txt";
        fs::path idx_dir = root / "idx";
        if (fs::exists(marker)) {
            std::ifstream in(marker);
            std::string tag((std::istreambuf_iterator<char>(in)),
                            std::istreambuf_iterator<char>());
            if (tag == kDeskCacheTag && fs::exists(idx_dir / "manifest.bin")) {
                return idx_dir.string();
            }
        }
        std::cout << "    building desk corpus (120k docs, r=50)...\n";
        testing::synth_options opt;
        auto fwd = testing::parse_jsonl(testing::synth_corpus_jsonl(opt));
        auto assignment = cluster_documents(fwd, 50, opt.seed);
        auto arranged = concatenate(
            order_within_clusters(fwd, assignment, ordering_mode::none),
            fwd.num_docs());
        auto idx = build_index(fwd, arranged.old_to_new, arranged.ranges, 128);

        index_manifest manifest;
        manifest.num_docs = idx.num_docs;
        manifest.avg_doc_len = idx.avg_doc_len;
        manifest.block_size = idx.block_size;
        manifest.num_ranges = idx.ranges.num_ranges();
        manifest.params = idx.params;
        manifest.seed = opt.seed;
        fs::remove_all(root);
        save_index(idx, manifest, idx_dir.string());
        std::ofstream out(marker);
        out << kDeskCacheTag;
        return idx_dir.string();
    }();
    return dir;
}

// ---------------------------------------------------------------- 5 ------

bool criterion_effectiveness_monotonicity() {
    inverted_index idx = load_index(desk_index_dir());
    testing::synth_options opt;
    auto queries = testing::synth_queries(200, opt, 51);

    std::vector<std::vector<term_id>> resolved;
    for (const auto& q : queries) resolved.push_back(resolve_terms(idx, q.text));

    steady_clock_source clock;
    policy_state none;
    std::vector<std::vector<doc_id>> gold;
    for (const auto& terms : resolved) {
        auto res = execute_query(idx, terms, query_mode::full, algo_kind::ranked_or,
                                 10, none, clock);
        std::vector<doc_id> ids;
        for (const auto& e : res.topk) ids.push_back(e.doc);
        gold.push_back(ids);
    }

    bool ok = true;
    double prev_mean = -1.0;
    std::cout << "    mean RBO(phi=0.99) by processed ranges:";
    for (uint32_t n : {1u, 5u, 10u, 20u, 50u}) {
        policy_state fixed;
        fixed.kind = policy_kind::fixed;
        fixed.fixed_n = n;
        double sum = 0.0;
        uint32_t counted = 0;
        bool all_exact_one = true;
        for (size_t q = 0; q < queries.size(); ++q) {
            auto res = execute_query(idx, resolved[q], query_mode::anytime,
                                     algo_kind::maxscore, 10, fixed, clock);
            std::vector<doc_id> ids;
            for (const auto& e : res.topk) ids.push_back(e.doc);
            double score = rbo_ext(ids, gold[q], 0.99, 10);
            sum += score;
            all_exact_one = all_exact_one && score == 1.0;
            ++counted;
        }
        double mean = sum / counted;
        std::printf(" n=%u:%.4f", n, mean);
        ok &= expect(mean >= prev_mean - 0.01,
                     "mean RBO decreased beyond tolerance at n=" + std::to_string(n));
        prev_mean = mean;
        if (n == 50) {
            ok &= expect(all_exact_one, "fixed-r must reproduce the exhaustive run");
        }
    }
    std::cout << "\n";
    return ok;
}

// ---------------------------------------------------------------- 6 ------

bool criterion_sla_compliance() {
    inverted_index idx = load_index(desk_index_dir());
    testing::synth_options opt;
    auto queries = testing::synth_queries(2000, opt, 52);
    std::vector<std::vector<term_id>> resolved;
    for (const auto& q : queries) resolved.push_back(resolve_terms(idx, q.text));

    steady_clock_source clock;
    policy_state none;

    // measured median full-query latency over a 300-query sample
    std::vector<double> sample;
    for (size_t q = 0; q < 300; ++q) {
        auto res = execute_query(idx, resolved[q], query_mode::full,
                                 algo_kind::maxscore, 1000, none, clock);
        sample.push_back(res.timeline.elapsed_ms);
    }
    std::sort(sample.begin(), sample.end());
    double median = sample[sample.size() / 2];
    double budget = 4.0 * median;
    std::printf("    median full latency %.3f ms, budget %.3f ms\n", median, budget);

    auto run_policy = [&](policy_state policy) {
        std::vector<double> elapsed;
        for (const auto& terms : resolved) {
            auto res = execute_query(idx, terms, query_mode::anytime,
                                     algo_kind::maxscore, 1000, policy, clock);
            elapsed.push_back(res.timeline.elapsed_ms);
        }
        return make_latency_report(elapsed, budget);
    };

    policy_state predictive;
    predictive.kind = policy_kind::predictive;
    predictive.alpha = 2.0;
    predictive.budget_ms = budget;
    auto pred = run_policy(predictive);
    std::printf("    predictive a=2: P50 %.3f P95 %.3f P99 %.3f miss %llu (%.3f%%)\n",
                pred.p50, pred.p95, pred.p99,
                static_cast<unsigned long long>(pred.miss_count), pred.miss_pct);

    policy_state overshoot;
    overshoot.kind = policy_kind::overshoot;
    overshoot.budget_ms = budget;
    auto over = run_policy(overshoot);
    std::printf("    overshoot:      P50 %.3f P95 %.3f P99 %.3f miss %llu (%.3f%%)\n",
                over.p50, over.p95, over.p99,
                static_cast<unsigned long long>(over.miss_count), over.miss_pct);

    bool ok = true;
    ok &= expect(pred.p99 <= budget, "predictive P99 must stay within the budget");
    ok &= expect(pred.miss_pct <= 1.0, "predictive miss rate must stay within 1%");
    ok &= expect(over.miss_count > 0, "overshoot must record misses by design");
    return ok;
}

// ---------------------------------------------------------------- 7 ------

bool criterion_eval_correctness() {
    bool ok = true;
    using ids = std::vector<int>;
    ids a{1, 2, 3, 4, 5};
    ok &= expect(rbo_ext(a, a, 0.99, 10) == 1.0, "identity rbo must be 1.0");
    ok &= expect(rbo_ext(ids{1, 2, 3}, ids{4, 5, 6}, 0.99, 10) == 0.0,
                 "disjoint rbo must be 0.0");

    std::mt19937_64 rng(707);
    for (int trial = 0; trial < 100; ++trial) {
        ids x, y;
        std::vector<int> pool(40);
        std::iota(pool.begin(), pool.end(), 0);
        std::shuffle(pool.begin(), pool.end(), rng);
        x.assign(pool.begin(), pool.begin() + 1 + rng() % 15);
        std::shuffle(pool.begin(), pool.end(), rng);
        y.assign(pool.begin(), pool.begin() + 1 + rng() % 15);
        ok &= expect(std::abs(rbo_ext(x, y, 0.9, 20) - rbo_ext(y, x, 0.9, 20)) <=
                         1e-12,
                     "rbo must be symmetric");
    }

    auto close_to_oracle = [&](const ids& x, const ids& y, double phi, size_t d) {
        double direct = testing::rbo_ext_direct(x, y, phi, d);
        return std::abs(rbo_ext(x, y, phi, d) - direct) <= 1e-9;
    };
    ok &= expect(close_to_oracle({1, 2, 3}, {2, 1, 3}, 0.9, 3), "hand case 1");
    ok &= expect(close_to_oracle({1, 2, 3, 4}, {3, 1, 7, 5}, 0.8, 4), "hand case 2");
    ok &= expect(close_to_oracle({1, 2, 3, 4, 9, 8}, {2, 1, 5}, 0.95, 6),
                 "hand case 3");

    std::uniform_real_distribution<double> dist(0.0, 500.0);
    std::vector<double> samples;
    for (int i = 0; i < 5000; ++i) samples.push_back(dist(rng));
    auto rep = make_latency_report(samples, 400.0);
    std::vector<double> sorted(samples);
    std::sort(sorted.begin(), sorted.end());
    auto nearest = [&](uint32_t pct) {
        return sorted[(static_cast<size_t>(pct) * sorted.size() + 99) / 100 - 1];
    };
    ok &= expect(rep.p50 == nearest(50), "P50 equals the sort oracle");
    ok &= expect(rep.p95 == nearest(95), "P95 equals the sort oracle");
    ok &= expect(rep.p99 == nearest(99), "P99 equals the sort oracle");
    return ok;
}

// ---------------------------------------------------------------- 8 ------

bool criterion_codec_and_bounds() {
    bool ok = true;
    std::mt19937_64 rng(808);
    std::uniform_int_distribution<uint32_t> count(1, 128);
    std::uniform_int_distribution<uint32_t> gap(1, 1000);
    std::uniform_int_distribution<uint32_t> tf(1, 50);
    std::uniform_real_distribution<double> score(0.0, 30.0);
    for (int trial = 0; trial < 10000; ++trial) {
        postings_block b;
        uint32_t n = count(rng);
        doc_id d = gap(rng) - 1;
        for (uint32_t i = 0; i < n; ++i) {
            b.docids.push_back(d);
            b.tfs.push_back(tf(rng));
            d += gap(rng);
        }
        b.block_max_score = score(rng);
        std::vector<uint8_t> bytes;
        encode_block(b, bytes);
        size_t pos = 0;
        postings_block back = decode_block(bytes.data(), bytes.size(), pos);
        if (!(back == b && pos == bytes.size())) {
            ok &= expect(false, "block round-trip failed at trial " +
                                    std::to_string(trial));
            break;
        }
    }

    auto jsonl = testing::random_corpus_jsonl({200, 40, 2, 30, 881});
    auto built = testing::build_pipeline(jsonl, 5, 13, 8);
    const auto& idx = built.idx;
    const auto& fwd = built.fwd;
    for (term_id t = 0; t < idx.num_terms() && ok; ++t) {
        term_scorer score_term = idx.scorer_for(t);
        double u_t = 0.0;
        std::vector<double> range_max(idx.ranges.num_ranges(), 0.0);
        for (doc_id old = 0; old < fwd.num_docs(); ++old) {
            // recount from raw tokens
            uint32_t tf_count = 0;
            for (term_id w : fwd.docs[old]) tf_count += w == t;
            if (tf_count == 0) continue;
            doc_id d = built.arranged.old_to_new[old];
            double c = score_term(tf_count, idx.doc_lens[d]);
            u_t = std::max(u_t, c);
            range_max[idx.ranges.range_of(d)] =
                std::max(range_max[idx.ranges.range_of(d)], c);
        }
        ok &= expect(idx.metas[t].max_score == u_t, "U_t mismatch");
        for (const auto& e : idx.term_range_bounds(t)) {
            ok &= expect(e.bound == range_max[e.range], "U_{t,i} mismatch");
        }
        // block maxima: exact max over each decoded block
        cursor c(idx, t);
        std::vector<std::pair<doc_id, uint32_t>> postings;
        for (doc_id d = c.docid(); d != kEndDoc; c.next(), d = c.docid()) {
            postings.emplace_back(d, c.freq());
        }
        auto skips = idx.term_skips(t);
        size_t at = 0;
        for (const block_skip& skip : skips) {
            double expect_max = 0.0;
            doc_id last = 0;
            for (; at < postings.size() && postings[at].first <= skip.last_docid;
                 ++at) {
                expect_max = std::max(
                    expect_max,
                    score_term(postings[at].second, idx.doc_lens[postings[at].first]));
                last = postings[at].first;
            }
            ok &= expect(skip.max_score == expect_max, "block max mismatch");
            ok &= expect(skip.last_docid == last, "block last docid mismatch");
        }
    }
    return ok;
}

// ---------------------------------------------------------------- 9 ------

bool criterion_bench_scaling() {
    inverted_index idx = load_index(desk_index_dir());
    testing::synth_options opt;
    auto queries = testing::synth_queries(800, opt, 53);
    std::vector<std::vector<term_id>> resolved;
    for (const auto& q : queries) resolved.push_back(resolve_terms(idx, q.text));

    bool ok = true;
    {
        bench_config cfg;
        cfg.mode = query_mode::range_safe;
        cfg.k = 1000;
        cfg.sim = cost_model{{}, 1.0};
        cfg.threads = 1;
        auto one = run_bench(idx, resolved, cfg);
        cfg.threads = 2;
        auto two = run_bench(idx, resolved, cfg);
        std::printf("    simulated: 1w %.1f q/s, 2w %.1f q/s\n",
                    one.throughput_qps, two.throughput_qps);
        ok &= expect(two.throughput_qps == 2.0 * one.throughput_qps,
                     "simulated 2-worker throughput must be exactly 2x");
    }
    {
        bench_config cfg;
        cfg.mode = query_mode::range_safe;
        cfg.k = 1000;
        cfg.threads = 1;
        auto one = run_bench(idx, resolved, cfg);
        cfg.threads = 2;
        auto two = run_bench(idx, resolved, cfg);
        double speedup = two.throughput_qps / one.throughput_qps;
        std::printf("    real clock: 1w %.1f q/s, 2w %.1f q/s, speedup %.2fx\n",
                    one.throughput_qps, two.throughput_qps, speedup);
        ok &= expect(speedup >= 1.3, "real 2-worker speedup must reach 1.3x");
        ok &= expect(speedup <= 2.05, "two workers cannot beat perfect scaling");
    }
    return ok;
}

struct criterion {
    int id;
    const char* name;
    bool (*fn)();
};

const criterion kCriteria[] = {
    {1, "pruning safety (oracle equivalence)", criterion_pruning_safety},
    {2, "range-safe equivalence", criterion_range_safe_equivalence},
    {3, "reactive arithmetic", criterion_reactive_arithmetic},
    {4, "policy compliance under simulated clock", criterion_policy_compliance},
    {5, "effectiveness monotonicity", criterion_effectiveness_monotonicity},
    {6, "real-clock SLA compliance", criterion_sla_compliance},
    {7, "rbo/eval correctness", criterion_eval_correctness},
    {8, "codec and index integrity", criterion_codec_and_bounds},
    {9, "bench scaling sanity", criterion_bench_scaling},
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

    int failures = 0;
    for (const criterion& c : kCriteria) {
        if (!selected.empty() &&
            std::find(selected.begin(), selected.end(), c.id) == selected.end()) {
            continue;
        }
        bool ok = false;
        try {
            ok = c.fn();
        } catch (const std::exception& e) {
            std::cout << "    exception: " << e.what() << "\n";
        }
        std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", c.id, c.name);
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
