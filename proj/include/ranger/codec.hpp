#pragma once

#include <cstring>
#include <vector>

#include "ranger/common.hpp"
#include "ranger/varint.hpp"

namespace ranger {

// One fixed-capacity chunk of a postings list. Document ids are strictly
// increasing; tfs run parallel to them. `block_max_score` is an upper bound
// on the scoring contribution of every posting in the block.
struct postings_block {
    std::vector<doc_id> docids;
    std::vector<uint32_t> tfs;
    double block_max_score = 0.0;

    doc_id last_docid() const { return docids.back(); }

    bool operator==(const postings_block&) const = default;
};

// Wire format, all varint unless noted:
//   count
//   block_max_score     (8 bytes, IEEE-754 little-endian)
//   docids as deltas    (first id stored as-is, gaps thereafter)
//   tfs                 (stored as-is)
inline void encode_block(const postings_block& b, std::vector<uint8_t>& out) {
    varint_put(out, static_cast<uint32_t>(b.docids.size()));
    uint64_t bits;
    std::memcpy(&bits, &b.block_max_score, sizeof(bits));
    for (int i = 0; i < 8; ++i) {
        out.push_back(static_cast<uint8_t>(bits >> (8 * i)));
    }
    doc_id prev = 0;
    for (size_t i = 0; i < b.docids.size(); ++i) {
        varint_put(out, i == 0 ? b.docids[0] : b.docids[i] - prev);
        prev = b.docids[i];
    }
    for (uint32_t tf : b.tfs) {
        varint_put(out, tf);
    }
}

// Decodes the block starting at data[pos], leaving `pos` one past its last
// byte. Validates structure and monotonicity; failures carry the offending
// byte offset.
inline postings_block decode_block(const uint8_t* data, size_t size, size_t& pos) {
    postings_block b;
    size_t start = pos;
    uint32_t count = varint_get(data, size, pos);
    if (count == 0) {
        throw codec_error("empty block", start);
    }
    if (pos + 8 > size) {
        throw codec_error("truncated block max score", pos);
    }
    uint64_t bits = 0;
    for (int i = 0; i < 8; ++i) {
        bits |= static_cast<uint64_t>(data[pos + i]) << (8 * i);
    }
    std::memcpy(&b.block_max_score, &bits, sizeof(bits));
    pos += 8;

    b.docids.resize(count);
    doc_id prev = 0;
    for (uint32_t i = 0; i < count; ++i) {
        size_t at = pos;
        uint32_t delta = varint_get(data, size, pos);
        if (i == 0) {
            prev = delta;
        } else {
            if (delta == 0) {
                throw codec_error("non-increasing docid delta", at);
            }
            uint64_t next = static_cast<uint64_t>(prev) + delta;
            if (next >= kEndDoc) {
                throw codec_error("docid overflow", at);
            }
            prev = static_cast<doc_id>(next);
        }
        b.docids[i] = prev;
    }
    b.tfs.resize(count);
    for (uint32_t i = 0; i < count; ++i) {
        size_t at = pos;
        b.tfs[i] = varint_get(data, size, pos);
        if (b.tfs[i] == 0) {
            throw codec_error("zero term frequency", at);
        }
    }
    return b;
}

}  // namespace ranger
