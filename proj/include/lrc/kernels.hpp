#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace lrc::kern {

/// Byte-lane kernels behind the distance scans. Codewords are held as s
/// digit planes of n bytes each (plane d, coordinate j at planes[d*n + j],
/// digits in [0, p)); both kernels are pure byte maps, so a single call
/// covers all planes at once.
///
/// The fast path requires p <= 128 so a + b never wraps a byte. Larger
/// characteristics take a generic word-wide scalar route in the callers.
struct Ops {
    /// dst[i] = (dst[i] + src[i]) mod p for i < len.
    void (*add_mod_p)(std::uint8_t* dst, const std::uint8_t* src, std::size_t len, std::uint8_t p);
    /// Number of coordinates j in [0, n) with any of the s plane bytes nonzero.
    std::size_t (*weight)(const std::uint8_t* planes, std::size_t n, std::size_t s);
    const char* name;
};

constexpr std::uint32_t kMaxBytePathP = 128;

/// Portable reference implementation.
const Ops& scalar_ops();

/// All implementations usable on this machine (scalar first). Equivalence
/// tests run every entry against the reference.
const std::vector<const Ops*>& available_ops();

/// The implementation selected at startup: the widest available variant, or
/// the one named by the LRC_KERNEL environment variable (scalar|avx2|neon).
const Ops& active_ops();

}  // namespace lrc::kern
