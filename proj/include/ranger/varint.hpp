#pragma once

#include <cstdint>
#include <vector>

#include "ranger/common.hpp"

namespace ranger {

// LEB128-style variable-length encoding for unsigned 32-bit values:
// 7 payload bits per byte, high bit set on continuation bytes.

inline void varint_put(std::vector<uint8_t>& out, uint32_t v) {
    while (v >= 0x80) {
        out.push_back(static_cast<uint8_t>(v) | 0x80);
        v >>= 7;
    }
    out.push_back(static_cast<uint8_t>(v));
}

// Decodes one value starting at `pos`, advancing `pos` past it.
// Throws codec_error on truncation or overlong input.
inline uint32_t varint_get(const uint8_t* data, size_t size, size_t& pos) {
    uint32_t v = 0;
    int shift = 0;
    while (true) {
        if (pos >= size) {
            throw codec_error("truncated varint", pos);
        }
        uint8_t byte = data[pos++];
        if (shift == 28 && (byte & 0xF0) != 0) {
            throw codec_error("varint exceeds 32 bits", pos - 1);
        }
        v |= static_cast<uint32_t>(byte & 0x7F) << shift;
        if ((byte & 0x80) == 0) {
            return v;
        }
        shift += 7;
        if (shift > 28) {
            throw codec_error("varint exceeds 32 bits", pos - 1);
        }
    }
}

}  // namespace ranger
