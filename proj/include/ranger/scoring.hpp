#pragma once

#include <cmath>
#include <stdexcept>

#include "ranger/common.hpp"

namespace ranger {

struct score_params {
    double k1 = 0.4;
    double b = 0.9;
};

// BM25 with a shifted-log idf, so every contribution is strictly positive
// and per-term maxima are valid pruning bounds.
//
//   idf(t) = ln(1 + (N - df + 0.5) / (df + 0.5))
//   C(t,d) = idf * tf * (k1 + 1) / (tf + k1 * (1 - b + b * dl / avgdl))
namespace bm25 {

inline double idf(uint32_t df, uint32_t num_docs) {
    return std::log(1.0 + (static_cast<double>(num_docs) - df + 0.5) / (df + 0.5));
}

inline double tf_factor(uint32_t tf, uint32_t doc_len, double avg_doc_len,
                        const score_params& p) {
    double norm = 1.0 - p.b + p.b * (static_cast<double>(doc_len) / avg_doc_len);
    return static_cast<double>(tf) * (p.k1 + 1.0) / (static_cast<double>(tf) + p.k1 * norm);
}

}  // namespace bm25

// One query term, with the document-independent part precomputed. Every
// score in the system (index bounds included) flows through this single
// arithmetic path, keeping results bit-reproducible across traversal modes.
struct term_scorer {
    double idf;
    score_params params;
    double avg_doc_len;

    term_scorer(uint32_t df, uint32_t num_docs, double avg_doc_len,
                const score_params& p)
        : idf(bm25::idf(df, num_docs)), params(p), avg_doc_len(avg_doc_len) {}

    double operator()(uint32_t tf, uint32_t doc_len) const {
        return idf * bm25::tf_factor(tf, doc_len, avg_doc_len, params);
    }
};

// Checked single-call form.
inline double contribution(uint32_t tf, uint32_t df, uint32_t doc_len,
                           double avg_doc_len, uint32_t num_docs,
                           const score_params& p = {}) {
    if (tf < 1) throw std::invalid_argument("tf must be >= 1");
    if (df < 1 || df > num_docs) throw std::invalid_argument("df must be in [1, N]");
    if (doc_len < 1) throw std::invalid_argument("doc_len must be >= 1");
    if (!(avg_doc_len > 0.0)) throw std::invalid_argument("avg_doc_len must be positive");
    if (p.k1 < 0.0) throw std::invalid_argument("k1 must be >= 0");
    if (p.b < 0.0 || p.b > 1.0) throw std::invalid_argument("b must be in [0, 1]");
    return term_scorer(df, num_docs, avg_doc_len, p)(tf, doc_len);
}

}  // namespace ranger
