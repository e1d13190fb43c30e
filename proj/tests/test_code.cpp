#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "lrc/code.hpp"

using namespace lrc;

TEST_CASE("xi") {
    CHECK(xi(7, 1, 2, 0) == 3);
    CHECK(xi(7, 1, 2, 1) == 3);
    for (std::uint32_t i = 0; i < 5; ++i) CHECK(xi(12, 3, 5, i) == 2);
    CHECK(xi(3, 2, 3, 0) == 1);
    CHECK(xi(3, 2, 3, 1) == 1);
    CHECK(xi(3, 2, 3, 2) == 0);
    CHECK_THROWS_AS(xi(7, 1, 2, 2), Error);
}

TEST_CASE("layout") {
    auto lay = layout(7, 1, 2);
    REQUIRE(lay.size() == 7);
    CHECK(lay[0].head);
    // body is j-major: (0,1),(1,1),(0,2),(1,2),(0,3),(1,3)
    CHECK((!lay[1].head && lay[1].i == 0 && lay[1].j == 1));
    CHECK((!lay[2].head && lay[2].i == 1 && lay[2].j == 1));
    CHECK((!lay[3].head && lay[3].i == 0 && lay[3].j == 2));

    auto lay27 = layout(12, 3, 5);
    CHECK(lay27.size() == 12);
    CHECK(lay27[0].head);
    CHECK(lay27[1].head);
    CHECK(!lay27[2].head);

    // head + sum xi(i) = k over a parameter sweep
    for (std::uint32_t r = 2; r <= 6; ++r)
        for (std::uint32_t v = 0; v < r; ++v)
            for (std::uint32_t k = r; k <= 30; ++k) CHECK(layout(k, v, r).size() == k);
}

namespace {

GoodPolyCert mult_split_cert(const FieldPtr& f, std::uint32_t m, std::uint32_t g1deg) {
    return with_split(construct_multiplicative(f, m), Poly::monomial(f, g1deg),
                      Poly::monomial(f, m - g1deg));
}

}  // namespace

TEST_CASE("validate") {
    auto f17 = Field::create(17, 1);
    auto P = validate(f17, Variant::B, 2, 3, 7, mult_split_cert(f17, 4, 1));
    CHECK(P.n == 19);
    CHECK(P.v == 1);
    CHECK(P.s == 3);
    CHECK(P.k_prime == 8);

    auto f49 = Field::create(7, 2);
    auto P49 = validate(f49, Variant::B, 6, 19, 7, mult_split_cert(f49, 24, 5));
    CHECK(P49.n == 67);
    CHECK(P49.v == 5);

    try {
        validate(f17, Variant::B, 2, 3, 10, mult_split_cert(f17, 4, 1));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::KTooLarge);
        CHECK(std::string(e.what()).find("9") != std::string::npos);  // bound L*r+1 echoed
    }
    // variant A needs roots; x^4 has only one
    CHECK_THROWS_AS(validate(f17, Variant::A, 2, 3, 7, construct_multiplicative(f17, 4)), Error);
    // B needs the split
    CHECK_THROWS_AS(validate(f17, Variant::B, 2, 3, 7, construct_multiplicative(f17, 4)), Error);
    // TB cap k <= L*r
    CHECK_THROWS_AS(validate(f17, Variant::TB, 2, 3, 9, construct_multiplicative(f17, 4)), Error);
    CHECK(validate(f17, Variant::TB, 2, 3, 8, construct_multiplicative(f17, 4)).n == 16);
}

TEST_CASE("encode examples") {
    auto f7 = Field::create(7, 1);
    auto P = validate(f7, Variant::B, 2, 2, 3, mult_split_cert(f7, 3, 1));
    CHECK(P.n == 8);
    std::vector<Elem> e1{1, 0, 0};
    CHECK(encode(P, e1) == std::vector<Elem>{1, 1, 1, 2, 4, 3, 5, 6});
    CHECK(encode(P, {0, 0, 0}) == std::vector<Elem>(8, 0));
    CHECK_THROWS_AS(encode(P, {1, 0}), Error);
}

TEST_CASE("encode linearity") {
    std::mt19937_64 rng(31);
    auto f13 = Field::create(13, 1);
    auto f27 = Field::create(3, 3);
    Elem u = 3;
    Poly g27(f27, {0, 0, f27->pow(u, 4), 0, f27->pow(u, 2), 0, 1});
    std::vector<CodeParams> instances{
        validate(f13, Variant::B, 2, 3, 5, mult_split_cert(f13, 4, 1)),
        validate(f27, Variant::A, 5, 2, 12, cert_from_poly(g27)),
        validate(f13, Variant::TB, 2, 3, 5, construct_multiplicative(f13, 4)),
    };
    for (const auto& P : instances) {
        std::uniform_int_distribution<std::uint64_t> d(0, P.field->q() - 1);
        for (int t = 0; t < 1000; ++t) {
            std::vector<Elem> x(P.k), y(P.k);
            for (auto& c : x) c = static_cast<Elem>(d(rng));
            for (auto& c : y) c = static_cast<Elem>(d(rng));
            Elem alpha = static_cast<Elem>(d(rng)), beta = static_cast<Elem>(d(rng));
            std::vector<Elem> combo(P.k);
            for (std::uint32_t i = 0; i < P.k; ++i)
                combo[i] = P.field->add(P.field->mul(alpha, x[i]), P.field->mul(beta, y[i]));
            auto cx = encode(P, x), cy = encode(P, y), cc = encode(P, combo);
            REQUIRE(cc.size() == P.n);
            for (std::uint32_t j = 0; j < P.n; ++j)
                CHECK(cc[j] == P.field->add(P.field->mul(alpha, cx[j]), P.field->mul(beta, cy[j])));
        }
    }
}

TEST_CASE("generator matrix") {
    auto f17 = Field::create(17, 1);
    auto inst = generator_matrix(validate(f17, Variant::B, 2, 3, 7, mult_split_cert(f17, 4, 1)));
    CHECK(inst.genmatrix.size() == 7);
    CHECK(inst.genmatrix[0] ==
          std::vector<Elem>{1, 1, 1, 1, 4, 13, 16, 6, 7, 10, 11, 3, 5, 12, 14, 2, 8, 9, 15});
    CHECK(inst.claimed_d == 7);
    REQUIRE(inst.groups.size() == 5);
    CHECK(inst.groups[4] == std::vector<std::uint32_t>{0, 1, 2});
    // groups partition [n]
    std::set<std::uint32_t> all;
    for (const auto& g : inst.groups) all.insert(g.begin(), g.end());
    CHECK(all.size() == inst.params.n);

    auto f49 = Field::create(7, 2);
    auto i49 = generator_matrix(validate(f49, Variant::B, 6, 19, 7, mult_split_cert(f49, 24, 5)));
    CHECK(i49.claimed_d == 43);

    auto f27 = Field::create(3, 3);
    Elem u = 3;
    Poly g(f27, {0, 0, f27->pow(u, 4), 0, f27->pow(u, 2), 0, 1});
    auto i27 = generator_matrix(validate(f27, Variant::A, 5, 2, 12, cert_from_poly(g)));
    CHECK(i27.genmatrix.size() == 12);
    CHECK(i27.genmatrix[0].size() == 27);
    CHECK(i27.claimed_d == 14);
    CHECK(i27.groups.back().size() == 3);
}

TEST_CASE("bounds") {
    CHECK(singleton_bound(19, 7, 2, 3) == 7);
    CHECK(singleton_bound(67, 7, 6, 19) == 43);
    CHECK(singleton_bound(20, 4, 4, 3) == 17);  // k = r: classical Singleton n-k+1
    CHECK(improved_bound(27, 12, 5, 2, 3) == 14);
    CHECK(improved_bound(19, 7, 2, 3, 1) == 7);
    CHECK(improved_bound(67, 7, 6, 19, 5) == 43);
    CHECK_THROWS_AS(improved_bound(19, 7, 2, 3, 2), Error);  // v >= r

    // improved <= singleton always
    for (std::uint32_t r = 2; r <= 5; ++r)
        for (std::uint32_t delta = 2; delta <= 5; ++delta)
            for (std::uint32_t k = r; k <= 3 * r; ++k)
                for (std::uint32_t v = 0; v < r; ++v) {
                    std::uint32_t n = 4 * (r + delta - 1) + (r + delta - 1 - v);
                    CHECK(improved_bound(n, k, r, delta, v) <= singleton_bound(n, k, r, delta));
                }
}

TEST_CASE("optimality classification") {
    auto f17 = Field::create(17, 1);
    auto P17 = validate(f17, Variant::B, 2, 3, 7, mult_split_cert(f17, 4, 1));
    CHECK(optimality_class(P17) == Optimality::SingletonOptimal);
    CHECK(singleton_congruence(19, 7, 2, 3));

    auto f27 = Field::create(3, 3);
    Elem u = 3;
    Poly g(f27, {0, 0, f27->pow(u, 4), 0, f27->pow(u, 2), 0, 1});
    auto P27 = validate(f27, Variant::A, 5, 2, 12, cert_from_poly(g));
    CHECK(optimality_class(P27) == Optimality::SingletonOptimal);
    CHECK(singleton_congruence(27, 12, 5, 2));

    // n=8, k=4, r=2, delta=2, v=1: improved 3 < singleton 4, congruence fails
    auto f7 = Field::create(7, 1);
    auto P7 = validate(f7, Variant::B, 2, 2, 4, mult_split_cert(f7, 3, 1));
    CHECK(P7.n == 8);
    CHECK(improved_bound(8, 4, 2, 2, 1) == 3);
    CHECK(singleton_bound(8, 4, 2, 2) == 4);
    CHECK(optimality_class(P7) == Optimality::DistanceOptimalOnly);
    CHECK(!singleton_congruence(8, 4, 2, 2));
}

TEST_CASE("short block carries S_I values (A) or replicas (B)") {
    std::mt19937_64 rng(88);
    auto f27 = Field::create(3, 3);
    Elem u = 3;
    Poly g27(f27, {0, 0, f27->pow(u, 4), 0, f27->pow(u, 2), 0, 1});
    auto PA = validate(f27, Variant::A, 5, 2, 12, cert_from_poly(g27));
    auto f17 = Field::create(17, 1);
    auto PB = validate(f17, Variant::B, 2, 3, 7, mult_split_cert(f17, 4, 1));
    for (int t = 0; t < 200; ++t) {
        std::uniform_int_distribution<std::uint64_t> dA(0, 26), dB(0, 16);
        std::vector<Elem> mA(PA.k), mB(PB.k);
        for (auto& c : mA) c = static_cast<Elem>(dA(rng));
        for (auto& c : mB) c = static_cast<Elem>(dB(rng));
        auto cwA = encode(PA, mA);
        auto [SA, FA] = evaluation_polynomials(PA, mA);
        for (std::uint32_t j = 0; j < PA.s; ++j) CHECK(cwA[j] == SA.eval(PA.cert.roots[j]));
        auto cwB = encode(PB, mB);
        for (std::uint32_t j = 0; j < PB.delta; ++j) CHECK(cwB[j] == mB[0]);
    }
}

TEST_CASE("rank verified over a small sweep") {
    std::mt19937_64 rng(5);
    for (auto [p, s] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{
             {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}, {17, 1}}) {
        auto f = Field::create(p, s);
        for (std::uint64_t m = 3; m < f->q(); ++m) {
            if ((f->q() - 1) % m != 0) continue;
            for (std::uint32_t r = 2; r < m; ++r) {
                std::uint32_t delta = static_cast<std::uint32_t>(m) + 1 - r;
                auto cert = mult_split_cert(f, static_cast<std::uint32_t>(m), r - 1);
                std::uint32_t L = static_cast<std::uint32_t>(cert.L());
                for (std::uint32_t k = r; k <= L * r + 1; ++k) {
                    if (k > 24) break;
                    auto inst = generator_matrix(validate(f, Variant::B, r, delta, k, cert));
                    CHECK(inst.genmatrix.size() == k);  // rank check ran inside
                }
            }
        }
    }
}
