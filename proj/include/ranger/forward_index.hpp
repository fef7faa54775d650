#pragma once

#include <istream>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "ranger/common.hpp"
#include "ranger/tokenizer.hpp"

namespace ranger {

// Tokenized collection in ingest order. Term ids are dense and assigned
// first-come; doc ids are positions in `docs`. External keys are kept for
// run-file output, urls (when present) for url-ordered arrangement.
struct forward_index {
    std::vector<std::vector<term_id>> docs;
    std::vector<std::string> keys;
    std::vector<std::string> urls;
    std::vector<uint32_t> doc_lens;
    std::vector<std::string> term_text;
    std::unordered_map<std::string, term_id> term_ids;

    uint32_t num_docs() const { return static_cast<uint32_t>(docs.size()); }
    uint32_t num_terms() const { return static_cast<uint32_t>(term_text.size()); }

    double avg_doc_len() const {
        if (docs.empty()) return 0.0;
        uint64_t total = 0;
        for (uint32_t len : doc_lens) total += len;
        return static_cast<double>(total) / static_cast<double>(docs.size());
    }

    term_id term_or_invalid(const std::string& t) const {
        auto it = term_ids.find(t);
        return it == term_ids.end() ? kInvalidTerm : it->second;
    }

    bool operator==(const forward_index& other) const {
        return docs == other.docs && keys == other.keys && urls == other.urls &&
               doc_lens == other.doc_lens && term_text == other.term_text;
    }
};

// Reads line-delimited JSON records with string fields `id` and `text`
// (optional `url`). Rejects duplicate keys by name and malformed records
// by line number.
inline forward_index parse_collection(std::istream& in,
                                      const tokenizer_config& cfg = {}) {
    forward_index fwd;
    std::unordered_map<std::string, uint32_t> seen;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        nlohmann::json rec = nlohmann::json::parse(line, nullptr, false);
        if (rec.is_discarded() || !rec.is_object() || !rec.contains("id") ||
            !rec.contains("text") || !rec["id"].is_string() ||
            !rec["text"].is_string()) {
            throw parse_error("malformed record at line " + std::to_string(line_no));
        }
        std::string key = rec["id"].get<std::string>();
        if (key.empty()) {
            throw parse_error("empty document id at line " + std::to_string(line_no));
        }
        if (!seen.emplace(key, 0).second) {
            throw parse_error("duplicate document id: " + key);
        }
        std::vector<term_id> tokens;
        for (const std::string& tok : tokenize(rec["text"].get<std::string>(), cfg)) {
            auto [it, inserted] =
                fwd.term_ids.emplace(tok, static_cast<term_id>(fwd.term_text.size()));
            if (inserted) fwd.term_text.push_back(tok);
            tokens.push_back(it->second);
        }
        fwd.doc_lens.push_back(static_cast<uint32_t>(tokens.size()));
        fwd.docs.push_back(std::move(tokens));
        fwd.keys.push_back(std::move(key));
        fwd.urls.push_back(rec.contains("url") && rec["url"].is_string()
                               ? rec["url"].get<std::string>()
                               : std::string());
    }
    return fwd;
}

}  // namespace ranger
