#include <doctest.h>

#include <random>

#include "lrc/poly.hpp"

using namespace lrc;

namespace {
Poly rand_poly(const FieldPtr& f, int deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> d(0, f->q() - 1);
    std::vector<Elem> c(deg + 1);
    for (auto& x : c) x = static_cast<Elem>(d(rng));
    if (c.back() == 0) c.back() = 1;
    return Poly(f, c);
}
}  // namespace

TEST_CASE("evaluation") {
    auto f17 = Field::create(17, 1);
    CHECK(Poly::monomial(f17, 4).eval(2) == 16);
    CHECK(Poly::zero(f17).eval(5) == 0);
    CHECK(Poly::zero(f17).degree() == Poly::kNegInfDegree);

    // g(u^2) = u^6 for g = x^2 (x-u)^2 (x+u)^2 over GF(27)
    auto f27 = Field::create(3, 3);
    Elem u = 3;
    Poly g(f27, {0, 0, f27->pow(u, 4), 0, f27->pow(u, 2), 0, 1});
    CHECK(g.eval(f27->pow(u, 2)) == f27->pow(u, 6));
}

TEST_CASE("ring operations") {
    auto f17 = Field::create(17, 1);
    auto [q, r] = Poly::divmod(Poly::monomial(f17, 4), Poly::monomial(f17, 1));
    CHECK(q == Poly::monomial(f17, 3));
    CHECK(r.is_zero());
    CHECK_THROWS_AS(Poly::divmod(q, Poly::zero(f17)), Error);

    // freshman's dream in characteristic 3
    auto f3 = Field::create(3, 1);
    Poly xp2(f3, {2, 1});
    CHECK(xp2.pow(3) == Poly(f3, {2, 0, 0, 1}));

    CHECK(Poly::gcd(Poly(f17, {16, 0, 1}), Poly(f17, {16, 1})) == Poly(f17, {16, 1}));
}

TEST_CASE("distinct roots") {
    auto f7 = Field::create(7, 1);
    CHECK(Poly::monomial(f7, 3).distinct_roots() == std::vector<Elem>{0});
    CHECK(Poly(f7, {1, 0, 1}).distinct_roots().empty());  // -1 is a non-square mod 7
    CHECK_THROWS_AS(Poly::zero(f7).distinct_roots(), Error);

    auto f27 = Field::create(3, 3);
    Elem u = 3;
    Poly g(f27, {0, 0, f27->pow(u, 4), 0, f27->pow(u, 2), 0, 1});
    CHECK(g.distinct_roots() == std::vector<Elem>{0, u, f27->pow(u, 14)});
}

TEST_CASE("interpolation") {
    auto f17 = Field::create(17, 1);
    CHECK(Poly::interpolate(f17, {{0, 5}}) == Poly(f17, {5}));
    CHECK(Poly::interpolate(f17, {{1, 1}, {4, 4}, {13, 13}}) == Poly::monomial(f17, 1));
    CHECK_THROWS_AS(Poly::interpolate(f17, {{1, 1}, {1, 2}}), Error);

    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        Poly p = rand_poly(f17, 3, rng);
        std::vector<std::pair<Elem, Elem>> pts;
        for (Elem x : {0, 1, 2, 3}) pts.emplace_back(x, p.eval(x));
        CHECK(Poly::interpolate(f17, pts) == p);
    }
}

TEST_CASE("dickson polynomials") {
    auto f17 = Field::create(17, 1);
    CHECK(Poly::dickson(f17, 0, 5) == Poly(f17, {2}));
    CHECK(Poly::dickson(f17, 1, 5) == Poly::monomial(f17, 1));
    // D_3(x, a) = x^3 - 3a x
    for (Elem a = 1; a < 5; ++a)
        CHECK(Poly::dickson(f17, 3, a) == Poly(f17, {0, f17->neg(f17->mul(3, a)), 0, 1}));

    // functional equation D_m(y + a/y, a) = y^m + (a/y)^m
    std::mt19937_64 rng(99);
    for (auto f : {Field::create(3, 3), Field::create(17, 1)}) {
        std::uniform_int_distribution<std::uint64_t> d(1, f->q() - 1);
        std::uniform_int_distribution<std::uint32_t> dm(0, 9);
        for (int t = 0; t < 100; ++t) {
            Elem a = static_cast<Elem>(d(rng)), y = static_cast<Elem>(d(rng));
            std::uint32_t m = dm(rng);
            Elem ay = f->mul(a, f->inv(y));
            Elem lhs = Poly::dickson(f, m, a).eval(f->add(y, ay));
            Elem rhs = f->add(m ? f->pow(y, m) : 1, m ? f->pow(ay, m) : 1);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("algebra properties on random polynomials") {
    std::mt19937_64 rng(2024);
    auto f = Field::create(3, 2);
    std::uniform_int_distribution<std::uint64_t> d(0, f->q() - 1);
    for (int t = 0; t < 200; ++t) {
        Poly a = rand_poly(f, 4, rng), b = rand_poly(f, 3, rng);
        Elem x = static_cast<Elem>(d(rng));
        CHECK((a * b).eval(x) == f->mul(a.eval(x), b.eval(x)));
        CHECK((a + b).eval(x) == f->add(a.eval(x), b.eval(x)));
        auto [q, r] = Poly::divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
        CHECK(a.distinct_roots().size() <= static_cast<std::size_t>(a.degree()));
    }
}
