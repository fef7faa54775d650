#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace ranger {

using doc_id = uint32_t;
using term_id = uint32_t;
using range_id = uint32_t;

// Sentinel returned by cursors positioned past the end of a postings list.
inline constexpr doc_id kEndDoc = std::numeric_limits<doc_id>::max();
inline constexpr term_id kInvalidTerm = std::numeric_limits<term_id>::max();

// Slack used in interior pruning comparisons so that floating-point
// re-association can never drop a candidate whose exact score ties the
// heap threshold. Entry into the heap itself is always exact.
inline constexpr double kPruneSlack = 1e-9;

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct codec_error : std::runtime_error {
    codec_error(const std::string& what, size_t offset)
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
          offset(offset) {}
    size_t offset;
};

}  // namespace ranger
