#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "ranger/clustering.hpp"
#include "ranger/common.hpp"
#include "ranger/forward_index.hpp"

namespace ranger {

// Last internal doc id of each contiguous range; range i spans
// [last[i-1]+1, last[i]] with an implicit -1 before range 0.
struct cluster_map {
    std::vector<doc_id> last;

    uint32_t num_ranges() const { return static_cast<uint32_t>(last.size()); }
    doc_id first_doc(range_id i) const { return i == 0 ? 0 : last[i - 1] + 1; }
    doc_id last_doc(range_id i) const { return last[i]; }

    range_id range_of(doc_id d) const {
        auto it = std::lower_bound(last.begin(), last.end(), d);
        return static_cast<range_id>(it - last.begin());
    }

    bool operator==(const cluster_map&) const = default;
};

enum class ordering_mode { none, key_order, url_order };

inline ordering_mode parse_ordering_mode(const std::string& s) {
    if (s == "none") return ordering_mode::none;
    if (s == "key-order") return ordering_mode::key_order;
    if (s == "url-order") return ordering_mode::url_order;
    throw std::invalid_argument("unknown ordering mode: " + s);
}

inline std::string ordering_mode_name(ordering_mode m) {
    switch (m) {
        case ordering_mode::none: return "none";
        case ordering_mode::key_order: return "key-order";
        case ordering_mode::url_order: return "url-order";
    }
    return "none";
}

// Per-cluster document lists (old ids), permuted by the requested mode.
// Mode none keeps ingest order; the sort keys are unique so every mode is
// deterministic.
inline std::vector<std::vector<doc_id>> order_within_clusters(
    const forward_index& fwd, const cluster_assignment& assignment,
    ordering_mode mode) {
    if (assignment.member_of.size() != fwd.num_docs()) {
        throw std::invalid_argument("assignment does not cover the collection");
    }
    std::vector<std::vector<doc_id>> clusters(assignment.num_clusters);
    for (uint32_t d = 0; d < fwd.num_docs(); ++d) {
        uint32_t c = assignment.member_of[d];
        if (c >= assignment.num_clusters) {
            throw std::invalid_argument("cluster id out of range");
        }
        clusters[c].push_back(d);
    }
    for (auto& members : clusters) {
        switch (mode) {
            case ordering_mode::none:
                break;
            case ordering_mode::key_order:
                std::sort(members.begin(), members.end(),
                          [&](doc_id a, doc_id b) { return fwd.keys[a] < fwd.keys[b]; });
                break;
            case ordering_mode::url_order:
                std::sort(members.begin(), members.end(), [&](doc_id a, doc_id b) {
                    if (fwd.urls[a] != fwd.urls[b]) return fwd.urls[a] < fwd.urls[b];
                    return fwd.keys[a] < fwd.keys[b];
                });
                break;
        }
    }
    return clusters;
}

struct arrangement_result {
    std::vector<doc_id> old_to_new;
    cluster_map ranges;
};

// Concatenates the ordered clusters (ascending cluster id) into one doc-id
// space and records each range's final id.
inline arrangement_result concatenate(
    const std::vector<std::vector<doc_id>>& ordered_clusters, uint32_t num_docs) {
    arrangement_result out;
    out.old_to_new.assign(num_docs, kEndDoc);
    doc_id next = 0;
    for (const auto& members : ordered_clusters) {
        if (members.empty()) continue;
        for (doc_id old : members) {
            if (old >= num_docs || out.old_to_new[old] != kEndDoc) {
                throw std::invalid_argument("cluster orders are not a permutation");
            }
            out.old_to_new[old] = next++;
        }
        out.ranges.last.push_back(next - 1);
    }
    if (next != num_docs) {
        throw std::invalid_argument("cluster orders do not cover the collection");
    }
    return out;
}

}  // namespace ranger
