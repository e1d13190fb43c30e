#include <doctest.h>

#include <random>
#include <string>

#include "lrc/kernels.hpp"

using namespace lrc;

TEST_CASE("every available kernel matches the scalar reference") {
    std::mt19937_64 rng(555);
    const auto& avail = kern::available_ops();
    REQUIRE(!avail.empty());
    CHECK(std::string(avail.front()->name) == "scalar");

    for (std::uint32_t p : {2u, 3u, 5u, 7u, 17u, 31u, 101u, 127u}) {
        std::uniform_int_distribution<std::uint32_t> digit(0, p - 1);
        for (std::size_t len : {1u, 5u, 19u, 32u, 33u, 67u, 200u, 1024u}) {
            std::vector<std::uint8_t> a(len), b(len);
            for (auto& x : a) x = static_cast<std::uint8_t>(digit(rng));
            for (auto& x : b) x = static_cast<std::uint8_t>(digit(rng));

            std::vector<std::uint8_t> want(a);
            kern::scalar_ops().add_mod_p(want.data(), b.data(), len, static_cast<std::uint8_t>(p));
            for (std::size_t i = 0; i < len; ++i)
                CHECK(want[i] == (a[i] + b[i]) % p);  // reference vs plain formula

            for (const kern::Ops* ops : avail) {
                std::vector<std::uint8_t> got(a);
                ops->add_mod_p(got.data(), b.data(), len, static_cast<std::uint8_t>(p));
                CHECK(got == want);
            }
        }
    }
}

TEST_CASE("weight kernels agree across implementations") {
    std::mt19937_64 rng(556);
    const auto& avail = kern::available_ops();
    for (std::size_t s : {1u, 2u, 3u, 5u}) {
        for (std::size_t n : {1u, 7u, 19u, 32u, 40u, 128u, 257u}) {
            std::vector<std::uint8_t> planes(n * s);
            std::uniform_int_distribution<std::uint32_t> v(0, 2);  // plenty of zeros
            for (auto& x : planes) x = static_cast<std::uint8_t>(v(rng));

            std::size_t want = 0;
            for (std::size_t j = 0; j < n; ++j) {
                std::uint8_t acc = 0;
                for (std::size_t d = 0; d < s; ++d) acc |= planes[d * n + j];
                want += acc != 0;
            }
            for (const kern::Ops* ops : avail) CHECK(ops->weight(planes.data(), n, s) == want);
        }
    }
}

TEST_CASE("active kernel is one of the available ones") {
    const auto& act = kern::active_ops();
    bool found = false;
    for (const kern::Ops* ops : kern::available_ops()) found |= ops == &act;
    CHECK(found);
    std::string note = std::string("active kernel: ") + act.name;
    MESSAGE(note);
}
