// AVX2 variants of the digit-plane kernels. Compiled with -mavx2 in its own
// translation unit; callers reach it only through the runtime dispatcher.
#if defined(LRC_HAVE_AVX2)

#include <immintrin.h>

#include "lrc/kernels.hpp"

namespace lrc::kern {

namespace {

void add_mod_p_avx2(std::uint8_t* dst, const std::uint8_t* src, std::size_t len, std::uint8_t p) {
    const __m256i vp = _mm256_set1_epi8(static_cast<char>(p));
    std::size_t i = 0;
    for (; i + 32 <= len; i += 32) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i s = _mm256_add_epi8(a, b);           // p <= 128, no wrap
        __m256i t = _mm256_sub_epi8(s, vp);
        __m256i r = _mm256_min_epu8(s, t);           // t underflows when s < p
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), r);
    }
    for (; i < len; ++i) {
        std::uint8_t s = static_cast<std::uint8_t>(dst[i] + src[i]);
        dst[i] = s >= p ? static_cast<std::uint8_t>(s - p) : s;
    }
}

std::size_t weight_avx2(const std::uint8_t* planes, std::size_t n, std::size_t s) {
    const __m256i zero = _mm256_setzero_si256();
    std::size_t zeros = 0;
    std::size_t j = 0;
    for (; j + 32 <= n; j += 32) {
        __m256i acc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(planes + j));
        for (std::size_t d = 1; d < s; ++d)
            acc = _mm256_or_si256(acc,
                                  _mm256_loadu_si256(reinterpret_cast<const __m256i*>(planes + d * n + j)));
        std::uint32_t mask = static_cast<std::uint32_t>(
            _mm256_movemask_epi8(_mm256_cmpeq_epi8(acc, zero)));
        zeros += static_cast<std::size_t>(__builtin_popcount(mask));
    }
    for (; j < n; ++j) {
        std::uint8_t acc = 0;
        for (std::size_t d = 0; d < s; ++d) acc |= planes[d * n + j];
        zeros += acc == 0;
    }
    return n - zeros;
}

}  // namespace

const Ops& avx2_ops() {
    static const Ops ops{add_mod_p_avx2, weight_avx2, "avx2"};
    return ops;
}

bool avx2_supported() { return __builtin_cpu_supports("avx2"); }

}  // namespace lrc::kern

#endif  // LRC_HAVE_AVX2
