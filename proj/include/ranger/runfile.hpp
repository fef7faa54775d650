#pragma once

#include <cstdio>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "ranger/common.hpp"
#include "ranger/topk.hpp"

namespace ranger {

struct query_record {
    std::string qid;
    std::string text;
};

// Query file: `qid<TAB>text`, one query per line.
inline std::vector<query_record> read_queries(std::istream& in) {
    std::vector<query_record> out;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        size_t tab = line.find('\t');
        if (tab == std::string::npos) {
            throw parse_error("query file line " + std::to_string(line_no) +
                              ": expected qid<TAB>text");
        }
        out.push_back({line.substr(0, tab), line.substr(tab + 1)});
    }
    return out;
}

inline std::string format_score(double score) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", score);
    return buf;
}

// Six-column run format: qid Q0 dockey rank score tag.
inline void write_run_block(std::ostream& out, const std::string& qid,
                            std::span<const scored_doc> results,
                            std::span<const std::string> doc_keys,
                            const std::string& tag) {
    for (size_t i = 0; i < results.size(); ++i) {
        out << qid << " Q0 " << doc_keys[results[i].doc] << ' ' << i + 1 << ' '
            << format_score(results[i].score) << ' ' << tag << '\n';
    }
}

struct run_ranking {
    std::string qid;
    std::vector<std::string> keys;   // rank order
    std::vector<double> scores;
};

inline std::vector<run_ranking> read_run(std::istream& in) {
    std::vector<run_ranking> out;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string qid, q0, key, rank, score, tag;
        if (!(ss >> qid >> q0 >> key >> rank >> score >> tag)) {
            throw parse_error("run file line " + std::to_string(line_no) +
                              ": expected 6 columns");
        }
        if (out.empty() || out.back().qid != qid) {
            out.push_back({qid, {}, {}});
        }
        out.back().keys.push_back(key);
        try {
            out.back().scores.push_back(std::stod(score));
        } catch (const std::exception&) {
            throw parse_error("run file line " + std::to_string(line_no) +
                              ": bad score");
        }
    }
    return out;
}

// Latency log: `qid<TAB>elapsed_ms<TAB>ranges_processed<TAB>outcome`.
struct latency_row {
    std::string qid;
    double elapsed_ms = 0.0;
    uint32_t ranges_processed = 0;
    std::string outcome;
};

inline void write_latency_row(std::ostream& out, const latency_row& row) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", row.elapsed_ms);
    out << row.qid << '\t' << buf << '\t' << row.ranges_processed << '\t'
        << row.outcome << '\n';
}

inline std::vector<latency_row> read_latency_log(std::istream& in) {
    std::vector<latency_row> out;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream ss(line);
        latency_row row;
        std::string elapsed, processed;
        if (!(std::getline(ss, row.qid, '\t') && std::getline(ss, elapsed, '\t') &&
              std::getline(ss, processed, '\t') && std::getline(ss, row.outcome))) {
            throw parse_error("latency log line " + std::to_string(line_no) +
                              ": expected 4 columns");
        }
        try {
            row.elapsed_ms = std::stod(elapsed);
            row.ranges_processed = static_cast<uint32_t>(std::stoul(processed));
        } catch (const std::exception&) {
            throw parse_error("latency log line " + std::to_string(line_no) +
                              ": bad value");
        }
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace ranger
