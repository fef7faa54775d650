#pragma once

#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ranger/index.hpp"

namespace ranger {

inline constexpr char kIndexMagic[4] = {'A', 'N', 'Y', 'T'};
inline constexpr uint32_t kIndexFormatVersion = 1;

namespace detail {

class byte_writer {
public:
    explicit byte_writer(const std::string& path) : out_(path, std::ios::binary) {
        if (!out_) throw io_error("cannot write " + path);
        path_ = path;
    }
    void u32(uint32_t v) {
        uint8_t b[4];
        for (int i = 0; i < 4; ++i) b[i] = static_cast<uint8_t>(v >> (8 * i));
        raw(b, 4);
    }
    void u64(uint64_t v) {
        uint8_t b[8];
        for (int i = 0; i < 8; ++i) b[i] = static_cast<uint8_t>(v >> (8 * i));
        raw(b, 8);
    }
    void f64(double v) {
        uint64_t bits;
        std::memcpy(&bits, &v, sizeof(bits));
        u64(bits);
    }
    void str(const std::string& s) {
        u32(static_cast<uint32_t>(s.size()));
        raw(reinterpret_cast<const uint8_t*>(s.data()), s.size());
    }
    void raw(const uint8_t* data, size_t n) {
        out_.write(reinterpret_cast<const char*>(data), static_cast<std::streamsize>(n));
        if (!out_) throw io_error("write failed: " + path_);
    }

private:
    std::ofstream out_;
    std::string path_;
};

class byte_reader {
public:
    explicit byte_reader(const std::string& path) : in_(path, std::ios::binary) {
        if (!in_) throw io_error("cannot open " + path);
        path_ = path;
    }
    uint32_t u32() {
        uint8_t b[4];
        raw(b, 4);
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(b[i]) << (8 * i);
        return v;
    }
    uint64_t u64() {
        uint8_t b[8];
        raw(b, 8);
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(b[i]) << (8 * i);
        return v;
    }
    double f64() {
        uint64_t bits = u64();
        double v;
        std::memcpy(&v, &bits, sizeof(v));
        return v;
    }
    std::string str() {
        uint32_t len = u32();
        std::string s(len, '\0');
        raw(reinterpret_cast<uint8_t*>(s.data()), len);
        return s;
    }
    void raw(uint8_t* data, size_t n) {
        in_.read(reinterpret_cast<char*>(data), static_cast<std::streamsize>(n));
        if (static_cast<size_t>(in_.gcount()) != n) {
            throw io_error("unexpected end of file: " + path_);
        }
    }

private:
    std::ifstream in_;
    std::string path_;
};

}  // namespace detail

// Build-time parameters recorded with the index. Query-time settings must
// agree with these: the stored bounds are only valid for the scoring
// configuration they were computed with.
struct index_manifest {
    uint32_t format_version = kIndexFormatVersion;
    uint32_t num_docs = 0;
    double avg_doc_len = 0.0;
    uint32_t block_size = 128;
    uint32_t num_ranges = 0;
    score_params params;
    std::string ordering = "none";
    uint64_t seed = 0;
    bool stemming = false;
    bool stopping = false;

    nlohmann::json to_json() const {
        return {{"format_version", format_version},
                {"num_docs", num_docs},
                {"avg_doc_len", avg_doc_len},
                {"block_size", block_size},
                {"num_ranges", num_ranges},
                {"k1", params.k1},
                {"b", params.b},
                {"ordering", ordering},
                {"seed", seed},
                {"stemming", stemming},
                {"stopping", stopping}};
    }

    static index_manifest from_json(const nlohmann::json& j) {
        index_manifest m;
        m.format_version = j.at("format_version").get<uint32_t>();
        m.num_docs = j.at("num_docs").get<uint32_t>();
        m.avg_doc_len = j.at("avg_doc_len").get<double>();
        m.block_size = j.at("block_size").get<uint32_t>();
        m.num_ranges = j.at("num_ranges").get<uint32_t>();
        m.params.k1 = j.at("k1").get<double>();
        m.params.b = j.at("b").get<double>();
        m.ordering = j.at("ordering").get<std::string>();
        m.seed = j.at("seed").get<uint64_t>();
        m.stemming = j.at("stemming").get<bool>();
        m.stopping = j.at("stopping").get<bool>();
        return m;
    }
};

// Versioned index directory:
//   manifest.bin    magic, version, JSON parameter blob
//   lexicon.bin     term strings, df, U_t, per-term postings/block extents
//   postings.bin    encoded blocks, all terms concatenated
//   skips.bin       per-block last docid, block max score, end offset
//   bounds.bin      per-term sparse (range, bound) lists
//   docmap.bin      external keys and lengths, internal-id order
//   clustermap.bin  last docid per range
// Integers are little-endian throughout.
inline void save_index(const inverted_index& idx, const index_manifest& manifest,
                       const std::string& dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw io_error("cannot create index directory: " + dir);

    {
        detail::byte_writer w(dir + "/manifest.bin");
        w.raw(reinterpret_cast<const uint8_t*>(kIndexMagic), 4);
        w.u32(manifest.format_version);
        std::string blob = manifest.to_json().dump();
        w.str(blob);
    }
    {
        detail::byte_writer w(dir + "/lexicon.bin");
        w.u32(idx.num_terms());
        for (term_id t = 0; t < idx.num_terms(); ++t) {
            const term_meta& m = idx.metas[t];
            w.str(idx.term_text[t]);
            w.u32(m.df);
            w.f64(m.max_score);
            w.u64(m.postings_end - m.postings_begin);
            w.u32(m.block_count);
            w.u32(static_cast<uint32_t>(m.bounds_end - m.bounds_begin));
        }
    }
    {
        detail::byte_writer w(dir + "/postings.bin");
        w.u64(idx.postings.size());
        w.raw(idx.postings.data(), idx.postings.size());
    }
    {
        detail::byte_writer w(dir + "/skips.bin");
        w.u64(idx.skips.size());
        for (const block_skip& s : idx.skips) {
            w.u32(s.last_docid);
            w.f64(s.max_score);
            w.u64(s.end_offset);
        }
    }
    {
        detail::byte_writer w(dir + "/bounds.bin");
        w.u64(idx.range_bounds.size());
        for (const range_bound_entry& e : idx.range_bounds) {
            w.u32(e.range);
            w.f64(e.bound);
        }
    }
    {
        detail::byte_writer w(dir + "/docmap.bin");
        w.u32(idx.num_docs);
        for (doc_id d = 0; d < idx.num_docs; ++d) {
            w.str(idx.doc_keys[d]);
            w.u32(idx.doc_lens[d]);
        }
    }
    {
        detail::byte_writer w(dir + "/clustermap.bin");
        w.u32(idx.ranges.num_ranges());
        for (doc_id last : idx.ranges.last) w.u32(last);
    }
}

inline index_manifest load_manifest(const std::string& dir) {
    detail::byte_reader r(dir + "/manifest.bin");
    char magic[4];
    r.raw(reinterpret_cast<uint8_t*>(magic), 4);
    if (std::memcmp(magic, kIndexMagic, 4) != 0) {
        throw io_error("not an index manifest: " + dir);
    }
    uint32_t version = r.u32();
    if (version != kIndexFormatVersion) {
        throw io_error("unsupported index format version " + std::to_string(version));
    }
    return index_manifest::from_json(nlohmann::json::parse(r.str()));
}

inline inverted_index load_index(const std::string& dir,
                                 index_manifest* manifest_out = nullptr) {
    index_manifest manifest = load_manifest(dir);
    inverted_index idx;
    idx.num_docs = manifest.num_docs;
    idx.avg_doc_len = manifest.avg_doc_len;
    idx.block_size = manifest.block_size;
    idx.params = manifest.params;

    {
        detail::byte_reader r(dir + "/lexicon.bin");
        uint32_t terms = r.u32();
        idx.term_text.resize(terms);
        idx.metas.resize(terms);
        uint64_t postings_at = 0;
        uint64_t skips_at = 0;
        uint64_t bounds_at = 0;
        for (term_id t = 0; t < terms; ++t) {
            idx.term_text[t] = r.str();
            term_meta& m = idx.metas[t];
            m.df = r.u32();
            m.max_score = r.f64();
            uint64_t len = r.u64();
            m.block_count = r.u32();
            uint32_t bounds = r.u32();
            m.postings_begin = postings_at;
            m.postings_end = postings_at + len;
            m.skip_begin = skips_at;
            m.bounds_begin = bounds_at;
            m.bounds_end = bounds_at + bounds;
            postings_at += len;
            skips_at += m.block_count;
            bounds_at += bounds;
            idx.term_lookup.emplace(idx.term_text[t], t);
        }
    }
    {
        detail::byte_reader r(dir + "/postings.bin");
        idx.postings.resize(r.u64());
        r.raw(idx.postings.data(), idx.postings.size());
    }
    {
        detail::byte_reader r(dir + "/skips.bin");
        idx.skips.resize(r.u64());
        for (block_skip& s : idx.skips) {
            s.last_docid = r.u32();
            s.max_score = r.f64();
            s.end_offset = r.u64();
        }
    }
    {
        detail::byte_reader r(dir + "/bounds.bin");
        idx.range_bounds.resize(r.u64());
        for (range_bound_entry& e : idx.range_bounds) {
            e.range = r.u32();
            e.bound = r.f64();
        }
    }
    {
        detail::byte_reader r(dir + "/docmap.bin");
        uint32_t n = r.u32();
        if (n != idx.num_docs) throw io_error("docmap does not match manifest");
        idx.doc_keys.resize(n);
        idx.doc_lens.resize(n);
        for (doc_id d = 0; d < n; ++d) {
            idx.doc_keys[d] = r.str();
            idx.doc_lens[d] = r.u32();
        }
    }
    {
        detail::byte_reader r(dir + "/clustermap.bin");
        uint32_t ranges = r.u32();
        if (ranges != manifest.num_ranges) {
            throw io_error("cluster map does not match manifest");
        }
        idx.ranges.last.resize(ranges);
        for (doc_id& last : idx.ranges.last) last = r.u32();
    }
    if (manifest_out) *manifest_out = manifest;
    return idx;
}

}  // namespace ranger
