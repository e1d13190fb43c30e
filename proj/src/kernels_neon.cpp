// NEON variants of the digit-plane kernels (aarch64 baseline).
#if defined(LRC_HAVE_NEON)

#include <arm_neon.h>

#include "lrc/kernels.hpp"

namespace lrc::kern {

namespace {

void add_mod_p_neon(std::uint8_t* dst, const std::uint8_t* src, std::size_t len, std::uint8_t p) {
    const uint8x16_t vp = vdupq_n_u8(p);
    std::size_t i = 0;
    for (; i + 16 <= len; i += 16) {
        uint8x16_t a = vld1q_u8(dst + i);
        uint8x16_t b = vld1q_u8(src + i);
        uint8x16_t s = vaddq_u8(a, b);     // p <= 128, no wrap
        uint8x16_t t = vsubq_u8(s, vp);
        vst1q_u8(dst + i, vminq_u8(s, t)); // t underflows when s < p
    }
    for (; i < len; ++i) {
        std::uint8_t s = static_cast<std::uint8_t>(dst[i] + src[i]);
        dst[i] = s >= p ? static_cast<std::uint8_t>(s - p) : s;
    }
}

std::size_t weight_neon(const std::uint8_t* planes, std::size_t n, std::size_t s) {
    std::size_t nonzero = 0;
    std::size_t j = 0;
    for (; j + 16 <= n; j += 16) {
        uint8x16_t acc = vld1q_u8(planes + j);
        for (std::size_t d = 1; d < s; ++d) acc = vorrq_u8(acc, vld1q_u8(planes + d * n + j));
        // 0x01 per nonzero lane, then horizontal sum
        uint8x16_t ones = vminq_u8(acc, vdupq_n_u8(1));
        nonzero += vaddvq_u8(ones);
    }
    for (; j < n; ++j) {
        std::uint8_t acc = 0;
        for (std::size_t d = 0; d < s; ++d) acc |= planes[d * n + j];
        nonzero += acc != 0;
    }
    return nonzero;
}

}  // namespace

const Ops& neon_ops() {
    static const Ops ops{add_mod_p_neon, weight_neon, "neon"};
    return ops;
}

}  // namespace lrc::kern

#endif  // LRC_HAVE_NEON
