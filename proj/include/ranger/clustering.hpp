#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "ranger/common.hpp"
#include "ranger/forward_index.hpp"

namespace ranger {

struct cluster_assignment {
    uint32_t num_clusters = 0;
    std::vector<uint32_t> member_of;  // per document, in [0, num_clusters)
};

namespace detail {

struct sparse_vec {
    std::vector<std::pair<term_id, float>> entries;  // term-sorted, l2-normalized
};

inline std::vector<sparse_vec> tfidf_vectors(const forward_index& fwd) {
    uint32_t n = fwd.num_docs();
    std::vector<uint32_t> df(fwd.num_terms(), 0);
    std::vector<std::pair<term_id, uint32_t>> counts;
    std::vector<sparse_vec> vecs(n);
    for (uint32_t d = 0; d < n; ++d) {
        counts.clear();
        for (term_id t : fwd.docs[d]) counts.emplace_back(t, 1);
        std::sort(counts.begin(), counts.end());
        size_t w = 0;
        for (size_t i = 0; i < counts.size(); ++i) {
            if (w > 0 && counts[w - 1].first == counts[i].first) {
                counts[w - 1].second += 1;
            } else {
                counts[w++] = counts[i];
            }
        }
        counts.resize(w);
        for (auto& [t, c] : counts) ++df[t];
        vecs[d].entries.reserve(w);
        for (auto& [t, c] : counts) vecs[d].entries.emplace_back(t, static_cast<float>(c));
    }
    for (uint32_t d = 0; d < n; ++d) {
        double norm = 0.0;
        for (auto& [t, wgt] : vecs[d].entries) {
            double v = (1.0 + std::log(wgt)) * std::log(1.0 + static_cast<double>(n) / df[t]);
            wgt = static_cast<float>(v);
            norm += v * v;
        }
        if (norm > 0.0) {
            float inv = static_cast<float>(1.0 / std::sqrt(norm));
            for (auto& [t, wgt] : vecs[d].entries) wgt *= inv;
        }
    }
    return vecs;
}

// Fully pinned uniform [0,1) so clustering is reproducible from the seed
// alone, independent of library distribution internals.
inline double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace detail

// Spherical k-means over l2-normalized tf-idf vectors: seeded greedy
// (k-means++-style) initialization, capped at 20 iterations. Identical
// documents always co-locate; ties go to the lowest cluster index.
inline cluster_assignment cluster_documents(const forward_index& fwd, uint32_t r,
                                            uint64_t seed) {
    uint32_t n = fwd.num_docs();
    if (r < 1) throw std::invalid_argument("cluster count must be >= 1");
    if (r > n) throw std::invalid_argument("cluster count exceeds document count");

    cluster_assignment out;
    out.member_of.assign(n, 0);
    if (r == 1) {
        out.num_clusters = 1;
        return out;
    }

    auto vecs = detail::tfidf_vectors(fwd);
    uint32_t v = fwd.num_terms();
    std::mt19937_64 rng(seed);

    // centroid matrix, term-major so per-term accumulation over all
    // clusters is contiguous
    std::vector<float> centroids(static_cast<size_t>(v) * r, 0.0f);
    auto set_centroid = [&](uint32_t c, const detail::sparse_vec& docvec) {
        for (auto& [t, wgt] : docvec.entries) {
            centroids[static_cast<size_t>(t) * r + c] = wgt;
        }
    };

    // greedy init: first center sampled uniformly, the rest proportional to
    // cosine distance from the nearest chosen center
    std::vector<double> dist(n, 1.0);
    uint32_t first = static_cast<uint32_t>(detail::next_unit(rng) * n);
    if (first >= n) first = n - 1;
    set_centroid(0, vecs[first]);
    std::vector<double> dots(r);
    for (uint32_t c = 1; c < r; ++c) {
        double total = 0.0;
        for (uint32_t d = 0; d < n; ++d) {
            double dot = 0.0;
            for (auto& [t, wgt] : vecs[d].entries) {
                dot += static_cast<double>(wgt) *
                       centroids[static_cast<size_t>(t) * r + (c - 1)];
            }
            dist[d] = std::min(dist[d], 1.0 - dot);
            if (dist[d] < 0.0) dist[d] = 0.0;
            total += dist[d];
        }
        uint32_t pick = 0;
        if (total > 0.0) {
            double target = detail::next_unit(rng) * total;
            double acc = 0.0;
            pick = n - 1;
            for (uint32_t d = 0; d < n; ++d) {
                acc += dist[d];
                if (acc >= target) {
                    pick = d;
                    break;
                }
            }
        } else {
            pick = static_cast<uint32_t>(detail::next_unit(rng) * n);
            if (pick >= n) pick = n - 1;
        }
        set_centroid(c, vecs[pick]);
    }

    std::vector<uint32_t> assign(n, 0);
    for (int iter = 0; iter < 20; ++iter) {
        bool changed = false;
        for (uint32_t d = 0; d < n; ++d) {
            std::fill(dots.begin(), dots.end(), 0.0);
            for (auto& [t, wgt] : vecs[d].entries) {
                const float* row = &centroids[static_cast<size_t>(t) * r];
                for (uint32_t c = 0; c < r; ++c) {
                    dots[c] += static_cast<double>(wgt) * row[c];
                }
            }
            uint32_t best = 0;
            for (uint32_t c = 1; c < r; ++c) {
                if (dots[c] > dots[best]) best = c;
            }
            if (assign[d] != best) {
                assign[d] = best;
                changed = true;
            }
        }
        if (!changed && iter > 0) break;

        std::fill(centroids.begin(), centroids.end(), 0.0f);
        std::vector<double> norms(r, 0.0);
        for (uint32_t d = 0; d < n; ++d) {
            uint32_t c = assign[d];
            for (auto& [t, wgt] : vecs[d].entries) {
                centroids[static_cast<size_t>(t) * r + c] += wgt;
            }
        }
        for (uint32_t t = 0; t < v; ++t) {
            const float* row = &centroids[static_cast<size_t>(t) * r];
            for (uint32_t c = 0; c < r; ++c) {
                norms[c] += static_cast<double>(row[c]) * row[c];
            }
        }
        for (uint32_t t = 0; t < v; ++t) {
            float* row = &centroids[static_cast<size_t>(t) * r];
            for (uint32_t c = 0; c < r; ++c) {
                if (norms[c] > 0.0) {
                    row[c] = static_cast<float>(row[c] / std::sqrt(norms[c]));
                }
            }
        }
    }

    // compact away empty clusters
    std::vector<uint32_t> size(r, 0);
    for (uint32_t a : assign) ++size[a];
    std::vector<uint32_t> relabel(r, 0);
    uint32_t kept = 0;
    for (uint32_t c = 0; c < r; ++c) {
        if (size[c] > 0) relabel[c] = kept++;
    }
    out.num_clusters = kept;
    for (uint32_t d = 0; d < n; ++d) out.member_of[d] = relabel[assign[d]];
    return out;
}

// Assignment injection: TSV of `doc-key<TAB>cluster-id`, one line per
// document. Cluster ids are compacted but keep their relative order.
inline cluster_assignment cluster_from_tsv(const forward_index& fwd,
                                           const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open cluster file: " + path);
    std::unordered_map<std::string, uint32_t> by_key;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        size_t tab = line.find('\t');
        if (tab == std::string::npos) {
            throw parse_error("cluster file line " + std::to_string(line_no) +
                              ": expected key<TAB>cluster");
        }
        uint32_t cid = 0;
        try {
            cid = static_cast<uint32_t>(std::stoul(line.substr(tab + 1)));
        } catch (const std::exception&) {
            throw parse_error("cluster file line " + std::to_string(line_no) +
                              ": bad cluster id");
        }
        if (!by_key.emplace(line.substr(0, tab), cid).second) {
            throw parse_error("cluster file line " + std::to_string(line_no) +
                              ": duplicate key");
        }
    }
    cluster_assignment out;
    out.member_of.resize(fwd.num_docs());
    std::vector<uint32_t> raw(fwd.num_docs());
    for (uint32_t d = 0; d < fwd.num_docs(); ++d) {
        auto it = by_key.find(fwd.keys[d]);
        if (it == by_key.end()) {
            throw parse_error("cluster file missing document: " + fwd.keys[d]);
        }
        raw[d] = it->second;
    }
    std::vector<uint32_t> ids(raw);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::unordered_map<uint32_t, uint32_t> compact;
    for (uint32_t i = 0; i < ids.size(); ++i) compact[ids[i]] = i;
    for (uint32_t d = 0; d < fwd.num_docs(); ++d) out.member_of[d] = compact[raw[d]];
    out.num_clusters = static_cast<uint32_t>(ids.size());
    return out;
}

}  // namespace ranger
