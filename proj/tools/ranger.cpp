// ranger: anytime top-k search over a cluster-skipping document-ordered
// index. Subcommands: build, query, bench, eval.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <unordered_map>

#include <CLI11.hpp>

#include "ranger/ranger.hpp"

namespace {

using namespace ranger;

struct build_args {
    std::string input;
    std::string output;
    uint32_t ranges = 16;
    uint32_t block_size = 128;
    std::string ordering = "none";
    std::string cluster_file;
    uint64_t seed = 42;
    double k1 = 0.4;
    double b = 0.9;
    bool stem = false;
    std::string stopword_file;
};

int cmd_build(const build_args& args) {
    tokenizer_config tok;
    tok.stemming = args.stem;
    if (!args.stopword_file.empty()) {
        tok.stopping = true;
        tok.stopwords = load_stopwords(args.stopword_file);
    }
    std::ifstream in(args.input);
    if (!in) throw io_error("cannot open input: " + args.input);
    forward_index fwd = parse_collection(in, tok);

    ordering_mode mode = parse_ordering_mode(args.ordering);
    cluster_assignment assignment =
        args.cluster_file.empty()
            ? cluster_documents(fwd, args.ranges, args.seed)
            : cluster_from_tsv(fwd, args.cluster_file);
    if (assignment.num_clusters != args.ranges && args.cluster_file.empty()) {
        std::cerr << "note: " << args.ranges - assignment.num_clusters
                  << " empty cluster(s) dropped, " << assignment.num_clusters
                  << " remain\n";
    }
    auto ordered = order_within_clusters(fwd, assignment, mode);
    auto arranged = concatenate(ordered, fwd.num_docs());

    score_params params{args.k1, args.b};
    inverted_index idx =
        build_index(fwd, arranged.old_to_new, arranged.ranges, args.block_size, params);

    index_manifest manifest;
    manifest.num_docs = idx.num_docs;
    manifest.avg_doc_len = idx.avg_doc_len;
    manifest.block_size = idx.block_size;
    manifest.num_ranges = idx.ranges.num_ranges();
    manifest.params = params;
    manifest.ordering = ordering_mode_name(mode);
    manifest.seed = args.seed;
    manifest.stemming = tok.stemming;
    manifest.stopping = tok.stopping;
    save_index(idx, manifest, args.output);
    if (tok.stopping) {
        std::ofstream stop(args.output + "/stopwords.txt");
        std::vector<std::string> words(tok.stopwords.begin(), tok.stopwords.end());
        std::sort(words.begin(), words.end());
        for (const auto& w : words) stop << w << '\n';
    }

    space_report space = idx.space();
    std::cout << "documents      " << idx.num_docs << "\n"
              << "terms          " << idx.num_terms() << "\n"
              << "ranges         " << idx.ranges.num_ranges() << "\n"
              << "avg doc len    " << idx.avg_doc_len << "\n"
              << "bytes postings     " << space.postings << "\n"
              << "bytes score bounds " << space.score_bounds << "\n"
              << "bytes range bounds " << space.range_bounds << "\n"
              << "bytes lexicon      " << space.lexicon << "\n"
              << "bytes doc map      " << space.doc_map << "\n"
              << "bytes cluster map  " << space.cluster_map << "\n";
    return 0;
}

struct query_args {
    std::string index_dir;
    std::string queries;
    uint32_t k = 10;
    std::string algo = "maxscore";
    std::string mode = "full";
    std::string policy = "fixed";
    double budget_ms = std::numeric_limits<double>::infinity();
    double alpha = 1.0;
    double beta = 1.5;
    double q_tolerance = 0.01;
    double tmax_ms = 5.0;
    std::string sim_clock_file;
    std::string run_file;
    std::string latency_log;
    std::string alpha_trace;
    std::string tag = "ranger";
    std::optional<double> k1;
    std::optional<double> b;
};

tokenizer_config query_tokenizer(const index_manifest& manifest,
                                 const std::string& index_dir) {
    tokenizer_config tok;
    tok.stemming = manifest.stemming;
    if (manifest.stopping) {
        tok.stopping = true;
        tok.stopwords = load_stopwords(index_dir + "/stopwords.txt");
    }
    return tok;
}

policy_state make_policy(const query_args& args) {
    policy_state p;
    p.kind = parse_policy_kind(args.policy, &p.fixed_n);
    p.budget_ms = args.budget_ms;
    p.alpha = args.alpha;
    p.beta = args.beta;
    p.q_tolerance = args.q_tolerance;
    p.t_max_ms = args.tmax_ms;
    return p;
}

// The stored pruning bounds are only valid for the scoring parameters the
// index was built with; overriding them requires a rebuild.
void check_score_params(const index_manifest& manifest, const query_args& args) {
    if ((args.k1 && *args.k1 != manifest.params.k1) ||
        (args.b && *args.b != manifest.params.b)) {
        throw std::invalid_argument(
            "scoring parameters differ from the index manifest (k1=" +
            std::to_string(manifest.params.k1) +
            ", b=" + std::to_string(manifest.params.b) +
            "); rebuild the index to change them");
    }
}

int cmd_query(const query_args& args) {
    index_manifest manifest;
    inverted_index idx = load_index(args.index_dir, &manifest);
    check_score_params(manifest, args);
    tokenizer_config tok = query_tokenizer(manifest, args.index_dir);

    std::ifstream qin(args.queries);
    if (!qin) throw io_error("cannot open queries: " + args.queries);
    auto queries = read_queries(qin);

    query_mode mode = parse_query_mode(args.mode);
    algo_kind algo = parse_algo(args.algo);
    policy_state policy = make_policy(args);

    std::ofstream run_out;
    std::ostream* run = &std::cout;
    if (!args.run_file.empty()) {
        run_out.open(args.run_file);
        if (!run_out) throw io_error("cannot write run file: " + args.run_file);
        run = &run_out;
    }
    std::ofstream latency_out;
    if (!args.latency_log.empty()) {
        latency_out.open(args.latency_log);
        if (!latency_out) throw io_error("cannot write latency log: " + args.latency_log);
    }
    std::ofstream trace_out;
    if (!args.alpha_trace.empty()) {
        trace_out.open(args.alpha_trace);
        if (!trace_out) throw io_error("cannot write alpha trace: " + args.alpha_trace);
    }

    std::optional<simulated_clock> sim;
    if (!args.sim_clock_file.empty()) {
        sim.emplace(simulated_clock{cost_model::from_file(args.sim_clock_file)});
    }
    steady_clock_source real;

    for (const query_record& q : queries) {
        auto terms = resolve_terms(idx, q.text, tok);
        query_result res = sim ? execute_query(idx, terms, mode, algo, args.k, policy, *sim)
                               : execute_query(idx, terms, mode, algo, args.k, policy, real);
        write_run_block(*run, q.qid, res.topk, idx.doc_keys, args.tag);
        if (latency_out.is_open()) {
            write_latency_row(latency_out,
                              {q.qid, res.timeline.elapsed_ms, res.timeline.processed,
                               outcome_name(res.timeline.outcome)});
        }
        if (trace_out.is_open()) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.9f", policy.alpha);
            trace_out << q.qid << '\t' << buf << '\n';
        }
    }
    return 0;
}

struct bench_args {
    query_args query;
    uint32_t threads = 1;
    uint64_t seed = 1;
    uint32_t warmup = 0;
    bool reactive_shared = false;
    double sla_ms = std::numeric_limits<double>::infinity();
    std::string report_file;
};

int cmd_bench(const bench_args& args) {
    index_manifest manifest;
    inverted_index idx = load_index(args.query.index_dir, &manifest);
    check_score_params(manifest, args.query);
    tokenizer_config tok = query_tokenizer(manifest, args.query.index_dir);

    std::ifstream qin(args.query.queries);
    if (!qin) throw io_error("cannot open queries: " + args.query.queries);
    auto queries = read_queries(qin);
    std::vector<std::vector<term_id>> resolved;
    resolved.reserve(queries.size());
    for (const auto& q : queries) resolved.push_back(resolve_terms(idx, q.text, tok));

    bench_config cfg;
    cfg.threads = args.threads;
    cfg.seed = args.seed;
    cfg.warmup = args.warmup;
    cfg.mode = parse_query_mode(args.query.mode);
    cfg.algo = parse_algo(args.query.algo);
    cfg.k = args.query.k;
    cfg.policy = make_policy(args.query);
    cfg.reactive_shared = args.reactive_shared;
    cfg.sla_ms = args.sla_ms;
    if (!args.query.sim_clock_file.empty()) {
        cfg.sim = cost_model::from_file(args.query.sim_clock_file);
    }

    bench_result res = run_bench(idx, resolved, cfg);

    auto print_report = [](std::ostream& out, const std::string& label,
                           const latency_report& r) {
        char buf[256];
        std::snprintf(buf, sizeof(buf),
                      "%s\tP50 %.3f\tP95 %.3f\tP99 %.3f\tmiss %llu (%.4f%%)\t"
                      "mean-over %.3f\tmax-over %.3f",
                      label.c_str(), r.p50, r.p95, r.p99,
                      static_cast<unsigned long long>(r.miss_count), r.miss_pct,
                      r.mean_overshoot_ms, r.max_overshoot_ms);
        out << buf << '\n';
    };

    std::cout << "workers     " << args.threads << "\n"
              << "queries     " << res.total_queries << "\n"
              << "wall (s)    " << res.wall_s << "\n"
              << "throughput  " << res.throughput_qps << " queries/s\n";
    print_report(std::cout, "aggregate", res.aggregate);
    for (uint32_t w = 0; w < res.workers.size(); ++w) {
        print_report(std::cout, "worker " + std::to_string(w),
                     res.workers[w].latency);
    }

    if (!args.report_file.empty()) {
        std::ofstream rep(args.report_file);
        if (!rep) throw io_error("cannot write report: " + args.report_file);
        rep << "worker\tquery_index\telapsed_ms\tranges_processed\toutcome\n";
        for (uint32_t w = 0; w < res.workers.size(); ++w) {
            for (const auto& row : res.workers[w].rows) {
                char buf[64];
                std::snprintf(buf, sizeof(buf), "%.6f", row.elapsed_ms);
                rep << w << '\t' << row.query_index << '\t' << buf << '\t'
                    << row.ranges_processed << '\t' << outcome_name(row.outcome)
                    << '\n';
            }
        }
    }
    return 0;
}

std::unordered_map<std::string, run_ranking> load_run_by_qid(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open run file: " + path);
    std::unordered_map<std::string, run_ranking> out;
    for (auto& r : read_run(in)) out.emplace(r.qid, std::move(r));
    return out;
}

int cmd_eval_rbo(const std::string& run_path, const std::string& gold_path,
                 double phi, size_t depth) {
    std::ifstream rin(run_path);
    if (!rin) throw io_error("cannot open run file: " + run_path);
    auto runs = read_run(rin);
    auto gold = load_run_by_qid(gold_path);
    double sum = 0.0;
    size_t n = 0;
    for (const auto& r : runs) {
        auto it = gold.find(r.qid);
        if (it == gold.end()) continue;
        double score = rbo_ext(std::span<const std::string>(r.keys),
                               std::span<const std::string>(it->second.keys), phi,
                               depth);
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.6f", score);
        std::cout << r.qid << '\t' << buf << '\n';
        sum += score;
        ++n;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", n > 0 ? sum / static_cast<double>(n) : 0.0);
    std::cout << "mean\t" << buf << '\n';
    return 0;
}

int cmd_eval_latency(const std::string& log_path, double sla_ms) {
    std::ifstream in(log_path);
    if (!in) throw io_error("cannot open latency log: " + log_path);
    auto rows = read_latency_log(in);
    std::vector<double> samples;
    samples.reserve(rows.size());
    for (const auto& r : rows) samples.push_back(r.elapsed_ms);
    latency_report rep = make_latency_report(samples, sla_ms);
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "queries\t%zu\nP50\t%.3f\nP95\t%.3f\nP99\t%.3f\nmiss\t%llu\n"
                  "miss_pct\t%.4f\nmean_overshoot\t%.3f\nmax_overshoot\t%.3f\n",
                  samples.size(), rep.p50, rep.p95, rep.p99,
                  static_cast<unsigned long long>(rep.miss_count), rep.miss_pct,
                  rep.mean_overshoot_ms, rep.max_overshoot_ms);
    std::cout << buf;
    return 0;
}

int cmd_eval_failures(const std::string& index_dir, const std::string& queries_path,
                      const std::string& gold_path, const std::string& log_path) {
    index_manifest manifest;
    inverted_index idx = load_index(index_dir, &manifest);
    tokenizer_config tok = query_tokenizer(manifest, index_dir);

    std::ifstream qin(queries_path);
    if (!qin) throw io_error("cannot open queries: " + queries_path);
    auto queries = read_queries(qin);
    auto gold = load_run_by_qid(gold_path);
    std::ifstream lin(log_path);
    if (!lin) throw io_error("cannot open latency log: " + log_path);
    std::unordered_map<std::string, latency_row> log;
    for (auto& row : read_latency_log(lin)) log.emplace(row.qid, std::move(row));

    std::unordered_map<std::string, doc_id> key_to_doc;
    key_to_doc.reserve(idx.doc_keys.size());
    for (doc_id d = 0; d < idx.doc_keys.size(); ++d) key_to_doc.emplace(idx.doc_keys[d], d);

    std::cout << "qid\tans\tprocessed\tdeepest\tmean_depth\n";
    for (const auto& q : queries) {
        auto git = gold.find(q.qid);
        auto lit = log.find(q.qid);
        if (git == gold.end() || lit == log.end()) continue;
        std::vector<doc_id> gold_docs;
        for (const auto& key : git->second.keys) {
            auto kit = key_to_doc.find(key);
            if (kit == key_to_doc.end()) {
                throw parse_error("gold run references unknown document: " + key);
            }
            gold_docs.push_back(kit->second);
        }
        query_timeline timeline;
        timeline.order = bound_sum(idx, resolve_terms(idx, q.text, tok));
        timeline.processed = lit->second.ranges_processed;
        failure_row row = make_failure_row(gold_docs, idx.ranges, timeline);
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.1f", row.mean_answer_pos);
        std::cout << q.qid << '\t' << row.answer_ranges_hit << '/'
                  << row.answer_ranges_total << '\t' << row.ranges_processed << '\t'
                  << row.deepest_answer_pos << '\t' << buf << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"anytime top-k search on a cluster-skipping inverted index"};
    app.require_subcommand(1);

    build_args bargs;
    CLI::App* build = app.add_subcommand("build", "build an index from JSONL records");
    build->add_option("--input", bargs.input, "line-delimited records with id/text")
        ->required();
    build->add_option("--output", bargs.output, "index directory")->required();
    build->add_option("--ranges", bargs.ranges, "number of topical ranges");
    build->add_option("--block-size", bargs.block_size, "postings per block");
    build->add_option("--ordering", bargs.ordering,
                      "within-cluster order: none|key-order|url-order")
        ->check(CLI::IsMember({"none", "key-order", "url-order"}));
    build->add_option("--cluster-file", bargs.cluster_file,
                      "external key<TAB>cluster assignment");
    build->add_option("--seed", bargs.seed, "clustering seed");
    build->add_option("--k1", bargs.k1, "BM25 k1");
    build->add_option("--b", bargs.b, "BM25 b");
    build->add_flag("--stem", bargs.stem, "Porter stemming");
    build->add_option("--stopwords", bargs.stopword_file, "stopword file");

    query_args qargs;
    CLI::App* query = app.add_subcommand("query", "run a query file against an index");
    auto add_query_flags = [](CLI::App* cmd, query_args& a) {
        cmd->add_option("--index", a.index_dir, "index directory")->required();
        cmd->add_option("--queries", a.queries, "qid<TAB>text query file")->required();
        cmd->add_option("--k", a.k, "results per query");
        cmd->add_option("--algo", a.algo, "or|maxscore|wand|bmw")
            ->check(CLI::IsMember({"or", "maxscore", "wand", "bmw"}));
        cmd->add_option("--mode", a.mode, "full|range-safe|anytime")
            ->check(CLI::IsMember({"full", "range-safe", "anytime"}));
        cmd->add_option("--policy", a.policy,
                        "fixed:N|overshoot|undershoot|predictive|reactive")
            ->check([](const std::string& s) -> std::string {
                try {
                    uint32_t n = 0;
                    parse_policy_kind(s, &n);
                    return {};
                } catch (const std::exception& e) {
                    return e.what();
                }
            });
        cmd->add_option("--budget-ms", a.budget_ms, "latency budget B");
        cmd->add_option("--alpha", a.alpha, "predictive safety multiplier");
        cmd->add_option("--beta", a.beta, "reactive feedback factor");
        cmd->add_option("--q-tolerance", a.q_tolerance, "SLA tolerance Q");
        cmd->add_option("--tmax-ms", a.tmax_ms, "per-range cost cap");
        cmd->add_option("--simulated-clock", a.sim_clock_file,
                        "per-range cost model file (deterministic clock)");
        cmd->add_option("--k1", a.k1, "BM25 k1 (must match the index)");
        cmd->add_option("--b", a.b, "BM25 b (must match the index)");
    };
    add_query_flags(query, qargs);
    query->add_option("--run", qargs.run_file, "run file output (default stdout)");
    query->add_option("--latency-log", qargs.latency_log, "per-query latency TSV");
    query->add_option("--alpha-trace", qargs.alpha_trace, "reactive alpha trace TSV");
    query->add_option("--tag", qargs.tag, "run tag");

    bench_args wargs;
    CLI::App* bench = app.add_subcommand("bench", "multi-worker throughput harness");
    add_query_flags(bench, wargs.query);
    bench->add_option("--threads", wargs.threads, "worker count");
    bench->add_option("--seed", wargs.seed, "permutation seed");
    bench->add_option("--warmup", wargs.warmup, "per-worker warmup queries");
    bench->add_flag("--reactive-shared", wargs.reactive_shared,
                    "share reactive alpha across workers");
    bench->add_option("--sla-ms", wargs.sla_ms, "SLA for the miss report");
    bench->add_option("--report", wargs.report_file, "per-query TSV report");

    CLI::App* eval = app.add_subcommand("eval", "evaluation reports");
    eval->require_subcommand(1);

    std::string rbo_run, rbo_gold;
    double rbo_phi = 0.99;
    size_t rbo_depth = 1000;
    CLI::App* eval_rbo = eval->add_subcommand("rbo", "rank-biased overlap vs a reference run");
    eval_rbo->add_option("--run", rbo_run, "system run file")->required();
    eval_rbo->add_option("--gold", rbo_gold, "reference run file")->required();
    eval_rbo->add_option("--phi", rbo_phi, "persistence");
    eval_rbo->add_option("--depth", rbo_depth, "evaluation depth");

    std::string lat_log;
    double lat_sla = std::numeric_limits<double>::infinity();
    CLI::App* eval_lat = eval->add_subcommand("latency", "percentiles and SLA misses");
    eval_lat->add_option("--log", lat_log, "latency log")->required();
    eval_lat->add_option("--sla", lat_sla, "SLA bound in ms");

    std::string f_index, f_queries, f_gold, f_log;
    CLI::App* eval_fail = eval->add_subcommand("failures", "answer-range diagnostics");
    eval_fail->add_option("--index", f_index, "index directory")->required();
    eval_fail->add_option("--queries", f_queries, "query file")->required();
    eval_fail->add_option("--gold", f_gold, "exhaustive run file")->required();
    eval_fail->add_option("--log", f_log, "anytime latency log")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (build->parsed()) return cmd_build(bargs);
        if (query->parsed()) return cmd_query(qargs);
        if (bench->parsed()) return cmd_bench(wargs);
        if (eval->parsed()) {
            if (eval_rbo->parsed()) return cmd_eval_rbo(rbo_run, rbo_gold, rbo_phi, rbo_depth);
            if (eval_lat->parsed()) return cmd_eval_latency(lat_log, lat_sla);
            if (eval_fail->parsed()) return cmd_eval_failures(f_index, f_queries, f_gold, f_log);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
