#pragma once

#include <cctype>
#include <fstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "ranger/common.hpp"
#include "ranger/porter.hpp"

namespace ranger {

// Lowercasing + alphanumeric-run splitting, with optional stopping and
// Porter stemming. Both are off by default; collections and queries must
// be tokenized with the same configuration.
struct tokenizer_config {
    bool stemming = false;
    bool stopping = false;
    std::unordered_set<std::string> stopwords;
};

inline std::vector<std::string> tokenize(std::string_view text,
                                         const tokenizer_config& cfg = {}) {
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        if (!cfg.stopping || !cfg.stopwords.contains(cur)) {
            out.push_back(cfg.stemming ? porter_stem(cur) : cur);
        }
        cur.clear();
    };
    for (unsigned char c : text) {
        if (std::isalnum(c) && c < 0x80) {
            cur.push_back(static_cast<char>(std::tolower(c)));
        } else {
            flush();
        }
    }
    flush();
    return out;
}

inline std::unordered_set<std::string> load_stopwords(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw io_error("cannot open stopword file: " + path);
    }
    std::unordered_set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) words.insert(line);
    }
    return words;
}

}  // namespace ranger
