#pragma once

#include <algorithm>
#include <cassert>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ranger/arrangement.hpp"
#include "ranger/codec.hpp"
#include "ranger/common.hpp"
#include "ranger/forward_index.hpp"
#include "ranger/scoring.hpp"

namespace ranger {

struct term_meta {
    uint32_t df = 0;
    double max_score = 0.0;  // largest contribution anywhere (U_t)
    uint64_t postings_begin = 0;
    uint64_t postings_end = 0;
    uint64_t skip_begin = 0;
    uint32_t block_count = 0;
    uint64_t bounds_begin = 0;
    uint64_t bounds_end = 0;
};

// Skip entry per block: enough to bypass or locate a block without
// decoding it. `end_offset` is relative to the owning term's postings slice.
struct block_skip {
    doc_id last_docid = 0;
    double max_score = 0.0;
    uint64_t end_offset = 0;
};

struct range_bound_entry {
    range_id range = 0;
    double bound = 0.0;  // largest contribution of the term inside the range
};

struct space_report {
    uint64_t postings = 0;      // encoded blocks + skip navigation
    uint64_t score_bounds = 0;  // per-term and per-block maxima
    uint64_t range_bounds = 0;  // sparse per-range maxima
    uint64_t lexicon = 0;
    uint64_t doc_map = 0;
    uint64_t cluster_map = 0;
};

struct traversal_counters {
    uint64_t postings_decoded = 0;
    uint64_t docs_scored = 0;
    uint64_t blocks_skipped = 0;
    uint64_t ranges_visited = 0;

    void add(const traversal_counters& o) {
        postings_decoded += o.postings_decoded;
        docs_scored += o.docs_scored;
        blocks_skipped += o.blocks_skipped;
        ranges_visited += o.ranges_visited;
    }
};

// Immutable searchable artifact: lexicon, blocked postings with skip data,
// document map, cluster map, and three tiers of score bounds (global,
// per-block, per-range). Safe to share across threads once built.
struct inverted_index {
    uint32_t num_docs = 0;
    double avg_doc_len = 0.0;
    uint32_t block_size = 128;
    score_params params;

    cluster_map ranges;
    std::vector<std::string> doc_keys;
    std::vector<uint32_t> doc_lens;

    std::vector<std::string> term_text;
    std::unordered_map<std::string, term_id> term_lookup;
    std::vector<term_meta> metas;
    std::vector<block_skip> skips;
    std::vector<range_bound_entry> range_bounds;
    std::vector<uint8_t> postings;

    uint32_t num_terms() const { return static_cast<uint32_t>(metas.size()); }

    term_id lookup(const std::string& t) const {
        auto it = term_lookup.find(t);
        return it == term_lookup.end() ? kInvalidTerm : it->second;
    }

    std::span<const block_skip> term_skips(term_id t) const {
        return {skips.data() + metas[t].skip_begin, metas[t].block_count};
    }

    std::span<const range_bound_entry> term_range_bounds(term_id t) const {
        return {range_bounds.data() + metas[t].bounds_begin,
                metas[t].bounds_end - metas[t].bounds_begin};
    }

    double range_bound(term_id t, range_id r) const {
        auto span = term_range_bounds(t);
        auto it = std::partition_point(
            span.begin(), span.end(),
            [r](const range_bound_entry& e) { return e.range < r; });
        return (it != span.end() && it->range == r) ? it->bound : 0.0;
    }

    term_scorer scorer_for(term_id t) const {
        return term_scorer(metas[t].df, num_docs, avg_doc_len, params);
    }

    space_report space() const {
        space_report s;
        s.postings = postings.size() + skips.size() * sizeof(uint32_t) +
                     skips.size() * sizeof(uint64_t);
        s.score_bounds = metas.size() * sizeof(double) + skips.size() * sizeof(double);
        s.range_bounds = range_bounds.size() * (sizeof(uint32_t) + sizeof(double));
        for (const auto& t : term_text) s.lexicon += t.size() + 2 * sizeof(uint32_t);
        for (const auto& k : doc_keys) s.doc_map += k.size() + 2 * sizeof(uint32_t);
        s.cluster_map = ranges.last.size() * sizeof(uint32_t);
        return s;
    }
};

// Builds the index from a tokenized collection and an id rearrangement.
// All three bound tiers are computed from the exact scoring contributions,
// so pruning against them is conservative by construction.
inline inverted_index build_index(const forward_index& fwd,
                                  const std::vector<doc_id>& old_to_new,
                                  const cluster_map& ranges,
                                  uint32_t block_size = 128,
                                  const score_params& params = {}) {
    if (block_size < 1) throw std::invalid_argument("block size must be >= 1");
    uint32_t n = fwd.num_docs();
    if (old_to_new.size() != n) {
        throw std::invalid_argument("remap does not cover the collection");
    }

    inverted_index idx;
    idx.num_docs = n;
    idx.avg_doc_len = fwd.avg_doc_len();
    idx.block_size = block_size;
    idx.params = params;
    idx.ranges = ranges;
    idx.term_text = fwd.term_text;
    idx.term_lookup = fwd.term_ids;

    idx.doc_keys.resize(n);
    idx.doc_lens.resize(n);
    std::vector<doc_id> new_to_old(n, kEndDoc);
    for (doc_id old = 0; old < n; ++old) {
        doc_id nw = old_to_new[old];
        if (nw >= n || new_to_old[nw] != kEndDoc) {
            throw std::invalid_argument("remap is not a bijection");
        }
        new_to_old[nw] = old;
        idx.doc_keys[nw] = fwd.keys[old];
        idx.doc_lens[nw] = fwd.doc_lens[old];
    }

    // postings per term, in ascending new-id order
    std::vector<std::vector<std::pair<doc_id, uint32_t>>> lists(fwd.num_terms());
    std::vector<std::pair<term_id, uint32_t>> counts;
    for (doc_id nw = 0; nw < n; ++nw) {
        counts.clear();
        for (term_id t : fwd.docs[new_to_old[nw]]) counts.emplace_back(t, 1);
        std::sort(counts.begin(), counts.end());
        size_t w = 0;
        for (size_t i = 0; i < counts.size(); ++i) {
            if (w > 0 && counts[w - 1].first == counts[i].first) {
                counts[w - 1].second += 1;
            } else {
                counts[w++] = counts[i];
            }
        }
        for (size_t i = 0; i < w; ++i) {
            lists[counts[i].first].emplace_back(nw, counts[i].second);
        }
    }

    idx.metas.resize(fwd.num_terms());
    postings_block block;
    for (term_id t = 0; t < fwd.num_terms(); ++t) {
        const auto& list = lists[t];
        term_meta& meta = idx.metas[t];
        meta.df = static_cast<uint32_t>(list.size());
        meta.postings_begin = idx.postings.size();
        meta.skip_begin = idx.skips.size();
        meta.bounds_begin = idx.range_bounds.size();

        term_scorer score = idx.scorer_for(t);
        for (size_t i = 0; i < list.size(); i += block_size) {
            size_t end = std::min(list.size(), i + block_size);
            block.docids.clear();
            block.tfs.clear();
            block.block_max_score = 0.0;
            for (size_t j = i; j < end; ++j) {
                auto [d, tf] = list[j];
                block.docids.push_back(d);
                block.tfs.push_back(tf);
                block.block_max_score =
                    std::max(block.block_max_score, score(tf, idx.doc_lens[d]));
            }
            encode_block(block, idx.postings);
            idx.skips.push_back({block.last_docid(), block.block_max_score,
                                 idx.postings.size() - meta.postings_begin});
            meta.max_score = std::max(meta.max_score, block.block_max_score);
        }
        meta.postings_end = idx.postings.size();
        meta.block_count = static_cast<uint32_t>(idx.skips.size() - meta.skip_begin);

        // sparse per-range maxima; postings are range-sorted already
        range_id cur = 0;
        double bound = 0.0;
        bool open = false;
        for (auto [d, tf] : list) {
            range_id r = ranges.range_of(d);
            if (open && r != cur) {
                idx.range_bounds.push_back({cur, bound});
                bound = 0.0;
            }
            cur = r;
            open = true;
            bound = std::max(bound, score(tf, idx.doc_lens[d]));
        }
        if (open) idx.range_bounds.push_back({cur, bound});
        meta.bounds_end = idx.range_bounds.size();
    }
    return idx;
}

// Read cursor over one term's blocked postings. NextGEQ is the usual
// forward-only skip-based advance; SeekGEQ may reposition anywhere via a
// binary search of the block skip list.
class cursor {
public:
    cursor(const inverted_index& idx, term_id t, traversal_counters* counters = nullptr)
        : idx_(&idx),
          term_(t),
          skips_(idx.term_skips(t)),
          data_(idx.postings.data() + idx.metas[t].postings_begin),
          counters_(counters) {
        if (!skips_.empty()) decode(0);
    }

    term_id term() const { return term_; }
    uint32_t df() const { return idx_->metas[term_].df; }
    double max_score() const { return idx_->metas[term_].max_score; }
    doc_id docid() const { return cur_doc_; }

    uint32_t freq() const {
        assert(cur_doc_ != kEndDoc);
        return tfs_[pos_];
    }

    void next() {
        if (cur_doc_ == kEndDoc) return;
        if (++pos_ == docs_.size()) {
            if (block_ + 1 == skips_.size()) {
                cur_doc_ = kEndDoc;
                return;
            }
            decode(block_ + 1);
        }
        cur_doc_ = docs_[pos_];
    }

    void next_geq(doc_id d) {
        if (cur_doc_ == kEndDoc) return;
        assert(d >= cur_doc_ && "next_geq is forward-only; use seek_geq");
        if (d <= cur_doc_) return;
        if (d > skips_[block_].last_docid) {
            size_t b = block_ + 1;
            while (b < skips_.size() && skips_[b].last_docid < d) ++b;
            if (counters_) counters_->blocks_skipped += b - block_ - 1;
            if (b == skips_.size()) {
                cur_doc_ = kEndDoc;
                return;
            }
            decode(b);
        }
        while (docs_[pos_] < d) ++pos_;
        cur_doc_ = docs_[pos_];
    }

    void seek_geq(doc_id d) {
        auto it = std::partition_point(
            skips_.begin(), skips_.end(),
            [d](const block_skip& s) { return s.last_docid < d; });
        if (it == skips_.end()) {
            cur_doc_ = kEndDoc;
            return;
        }
        size_t b = static_cast<size_t>(it - skips_.begin());
        if (b != block_ || cur_doc_ == kEndDoc) {
            decode(b);
        } else if (d < cur_doc_) {
            pos_ = 0;
        }
        while (docs_[pos_] < d) ++pos_;
        cur_doc_ = docs_[pos_];
    }

    // Skip-list lookups for shallow (no-decode) reasoning about the block
    // that would hold the first posting >= d. Cursor state is untouched.
    double block_max_at(doc_id d) const {
        auto it = std::partition_point(
            skips_.begin() + block_, skips_.end(),
            [d](const block_skip& s) { return s.last_docid < d; });
        return it == skips_.end() ? 0.0 : it->max_score;
    }

    doc_id block_last_at(doc_id d) const {
        auto it = std::partition_point(
            skips_.begin() + block_, skips_.end(),
            [d](const block_skip& s) { return s.last_docid < d; });
        return it == skips_.end() ? kEndDoc : it->last_docid;
    }

private:
    void decode(size_t b) {
        size_t begin = b == 0 ? 0 : skips_[b - 1].end_offset;
        size_t pos = begin;
        postings_block blk =
            decode_block(data_, skips_[b].end_offset, pos);
        docs_ = std::move(blk.docids);
        tfs_ = std::move(blk.tfs);
        block_ = b;
        pos_ = 0;
        cur_doc_ = docs_[0];
        if (counters_) counters_->postings_decoded += docs_.size();
    }

    const inverted_index* idx_;
    term_id term_;
    std::span<const block_skip> skips_;
    const uint8_t* data_;
    size_t block_ = 0;
    size_t pos_ = 0;
    doc_id cur_doc_ = kEndDoc;
    std::vector<doc_id> docs_;
    std::vector<uint32_t> tfs_;
    traversal_counters* counters_;
};

}  // namespace ranger
