#pragma once

#include <cstdint>
#include <string>

namespace qci {

/// FNV-1a over the bytes of a string, rendered as 16 hex digits. Used to
/// fingerprint serialized objects in reports.
inline uint64_t fnv1a64(const std::string& s) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hex64(uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

} // namespace qci
