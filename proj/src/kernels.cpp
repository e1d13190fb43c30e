#include "lrc/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace lrc::kern {

namespace {

void add_mod_p_scalar(std::uint8_t* dst, const std::uint8_t* src, std::size_t len, std::uint8_t p) {
    for (std::size_t i = 0; i < len; ++i) {
        std::uint8_t s = static_cast<std::uint8_t>(dst[i] + src[i]);
        dst[i] = s >= p ? static_cast<std::uint8_t>(s - p) : s;
    }
}

std::size_t weight_scalar(const std::uint8_t* planes, std::size_t n, std::size_t s) {
    std::size_t w = 0;
    for (std::size_t j = 0; j < n; ++j) {
        std::uint8_t acc = 0;
        for (std::size_t d = 0; d < s; ++d) acc |= planes[d * n + j];
        w += acc != 0;
    }
    return w;
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops{add_mod_p_scalar, weight_scalar, "scalar"};
    return ops;
}

#if defined(LRC_HAVE_AVX2)
const Ops& avx2_ops();
bool avx2_supported();
#endif
#if defined(LRC_HAVE_NEON)
const Ops& neon_ops();
#endif

const std::vector<const Ops*>& available_ops() {
    static const std::vector<const Ops*> list = [] {
        std::vector<const Ops*> v{&scalar_ops()};
#if defined(LRC_HAVE_AVX2)
        if (avx2_supported()) v.push_back(&avx2_ops());
#endif
#if defined(LRC_HAVE_NEON)
        v.push_back(&neon_ops());
#endif
        return v;
    }();
    return list;
}

const Ops& active_ops() {
    static const Ops* chosen = [] {
        const auto& avail = available_ops();
        if (const char* want = std::getenv("LRC_KERNEL")) {
            for (const Ops* o : avail)
                if (std::strcmp(o->name, want) == 0) return o;
        }
        return avail.back();  // widest variant last
    }();
    return *chosen;
}

}  // namespace lrc::kern
