#include <doctest.h>

#include <map>
#include <set>

#include "lrc/goodpoly.hpp"

using namespace lrc;

namespace {

// literal shift-by-shift oracle for N_f, independent of the fiber-histogram path
std::map<std::uint32_t, std::uint64_t> naive_Nf(const Poly& f) {
    const auto& F = f.field();
    std::map<std::uint32_t, std::uint64_t> hist;
    hist[0] = 0;
    for (std::uint64_t t = 0; t < F->q(); ++t) {
        Poly shifted = f + Poly::constant(F, static_cast<Elem>(t));
        ++hist[static_cast<std::uint32_t>(shifted.distinct_roots().size())];
    }
    return hist;
}

std::set<Elem> set_union_all(const GoodPolyCert& c) {
    std::set<Elem> out;
    for (const auto& s : c.sets) out.insert(s.begin(), s.end());
    return out;
}

}  // namespace

TEST_CASE("N_f histogram") {
    auto f7 = Field::create(7, 1);
    auto hist = compute_Nf(Poly::monomial(f7, 3));
    CHECK(hist == std::map<std::uint32_t, std::uint64_t>{{0, 4}, {1, 1}, {3, 2}});
    CHECK(hist == naive_Nf(Poly::monomial(f7, 3)));
    CHECK(compute_G(Poly::monomial(f7, 3)) == 2);

    auto f17 = Field::create(17, 1);
    CHECK(compute_Nf(Poly::monomial(f17, 4)).at(4) == 4);

    auto f11 = Field::create(11, 1);
    CHECK(compute_G(Poly(f11, {0, 1, 0, 1})) == 2);  // (11+1)/6 with a1 = 1 a square

    CHECK_THROWS_AS(compute_Nf(Poly::monomial(f7, 1)), Error);
}

TEST_CASE("N_f histogram sums to q and matches the naive oracle") {
    auto f9 = Field::create(3, 2);
    for (auto f : {Poly(f9, {1, 2, 3, 1}), Poly(f9, {0, 0, 1, 0, 1}), Poly::monomial(f9, 4)}) {
        auto hist = compute_Nf(f);
        std::uint64_t total = 0;
        for (auto& [i, c] : hist) {
            total += c;
            CHECK(i <= static_cast<std::uint32_t>(f.degree()));
        }
        CHECK(total == f9->q());
        CHECK(hist == naive_Nf(f));
    }
}

TEST_CASE("fibers and good sets") {
    auto f17 = Field::create(17, 1);
    auto gs = good_sets(Poly::monomial(f17, 4));
    REQUIRE(gs.size() == 4);
    CHECK(gs[0].first == 1);
    CHECK(gs[0].second == std::vector<Elem>{1, 4, 13, 16});  // the 4th roots of unity
    for (Elem r : f17->roots_of_unity(4))
        CHECK(std::find(gs[0].second.begin(), gs[0].second.end(), r) != gs[0].second.end());

    auto f5 = Field::create(5, 1);
    auto gs5 = good_sets(Poly::monomial(f5, 2));
    REQUIRE(gs5.size() == 2);
    CHECK(gs5[0].second == std::vector<Elem>{1, 4});
    CHECK(gs5[1].second == std::vector<Elem>{2, 3});

    // fiber over 0 of x^4 is {0}: too small, excluded from good sets
    auto fb = fibers(Poly::monomial(f17, 4));
    CHECK(fb.front().first == 0);
    CHECK(fb.front().second == std::vector<Elem>{0});
}

TEST_CASE("cert_from_poly on the GF(27) instance") {
    auto f = Field::create(3, 3);
    Elem u = 3;
    Poly g(f, {0, 0, f->pow(u, 4), 0, f->pow(u, 2), 0, 1});
    auto cert = cert_from_poly(g);
    CHECK(cert.L() == 4);
    std::set<Elem> consts(cert.constants.begin(), cert.constants.end());
    CHECK(consts == std::set<Elem>{f->pow(u, 6), f->pow(u, 8), f->pow(u, 12), f->pow(u, 24)});
    CHECK(cert.roots == std::vector<Elem>{0, u, f->pow(u, 14)});
    CHECK(verify_cert(cert).pass);
}

TEST_CASE("cert splits") {
    auto f17 = Field::create(17, 1);
    Poly g = Poly::monomial(f17, 4);
    auto cert = cert_from_poly(g, std::make_pair(Poly::monomial(f17, 1), Poly::monomial(f17, 3)));
    CHECK(cert.split);
    CHECK(cert.roots == std::vector<Elem>{0});
    CHECK_THROWS_AS(
        cert_from_poly(g, std::make_pair(Poly::monomial(f17, 1), Poly::monomial(f17, 2))), Error);
}

TEST_CASE("construct_multiplicative") {
    auto f17 = Field::create(17, 1);
    auto cert = construct_multiplicative(f17, 4);
    CHECK(cert.L() == 4);
    // union of the sets is all of F_q minus 0
    auto un = set_union_all(cert);
    CHECK(un.size() == 16);
    CHECK(!un.count(0));

    auto f49 = Field::create(7, 2);
    CHECK(construct_multiplicative(f49, 24).L() == 2);

    auto f7 = Field::create(7, 1);
    CHECK_THROWS_AS(construct_multiplicative(f7, 4), Error);
}

TEST_CASE("construct_additive") {
    auto f4 = Field::create(2, 2);
    auto c4 = construct_additive(f4, {1});
    CHECK(c4.g == Poly(f4, {0, 1, 1}));  // x^2 + x in characteristic 2
    CHECK(c4.L() == 1);

    auto f9 = Field::create(3, 2);
    auto c9 = construct_additive(f9, {1});
    CHECK(c9.g == Poly(f9, {0, 2, 0, 1}));  // x^3 - x
    CHECK(c9.L() == 2);
    CHECK(c9.roots == std::vector<Elem>{0, 1, 2});

    // the L sets plus the root fiber cover F_q
    auto un = set_union_all(c9);
    un.insert(c9.roots.begin(), c9.roots.end());
    CHECK(un.size() == f9->q());

    CHECK_THROWS_AS(construct_additive(f9, {1, 2}), Error);  // dependent over GF(3)
}

TEST_CASE("construct_union_cosets") {
    auto f27 = Field::create(3, 3);
    auto cert = construct_union_cosets(f27, 1, {1}, 2);
    CHECK(cert.g.degree() == 6);
    CHECK(cert.L() == 4);  // (27 - 3) / 6
    CHECK(cert.roots == std::vector<Elem>{0, 1, 2});
    auto hist = compute_Nf(cert.g);
    CHECK(hist.at(3) == 1);
    CHECK(compute_G(cert.g) == 4);
    CHECK(verify_cert(cert).pass);

    // closure failure: GF(3) inside GF(81) is not closed under GF(9) scaling
    auto f81 = Field::create(3, 4);
    try {
        construct_union_cosets(f81, 2, {1}, 2);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotSubspace);
    }
    // a GF(9)-line inside GF(81) works: span{1, w} with w of order 8
    Elem w = f81->pow(f81->generator(), 10);
    auto c81 = construct_union_cosets(f81, 2, {1, w}, 2);
    CHECK(c81.L() == (81 - 9) / (2 * 9));
    CHECK(compute_G(c81.g) == c81.L());

    CHECK_THROWS_AS(construct_union_cosets(f81, 3, {1}, 2), Error);  // 3 does not divide 4
}

TEST_CASE("construct_dickson") {
    auto f8 = Field::create(2, 3);
    auto cert = construct_dickson(f8, 3, 1);
    CHECK(cert.L() == 1);  // floor(8/6)
    CHECK(cert.roots.size() == 2);
    CHECK(verify_cert(cert).pass);

    // (m+1)/2 roots for every valid input within reach
    auto f32 = Field::create(2, 5);
    for (Elem a = 1; a < 8; ++a) {
        auto c = construct_dickson(f32, 3, a);
        CHECK(c.roots.size() == 2);
        CHECK(c.L() == 5);  // floor(32/6)
    }
    auto c11 = construct_dickson(f32, 11, 1);
    CHECK(c11.roots.size() == 6);
    CHECK(c11.L() == 1);  // floor(32/22)

    auto f16 = Field::create(2, 4);
    try {
        construct_dickson(f16, 3, 1);  // 16 = 1 mod 3
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::PreconditionFailed);
    }
}

TEST_CASE("construct_cubic_shifted") {
    auto f11 = Field::create(11, 1);
    auto cert = construct_cubic_shifted(f11, 1);
    CHECK(cert.L() == 2);  // (11+1)/6
    REQUIRE(cert.split);
    CHECK(cert.split->first.degree() == 1);
    CHECK(cert.split->second.degree() == 2);
    // x0 is a root of g and g1 divides g exactly
    Elem x0 = cert.split->first.field()->neg(cert.split->first.coeff(0));
    CHECK(cert.g.eval(x0) == 0);
    auto [q, r] = Poly::divmod(cert.g, cert.split->first);
    CHECK(r.is_zero());
    CHECK(verify_cert(cert).pass);

    auto f13 = Field::create(13, 1);
    CHECK_THROWS_AS(construct_cubic_shifted(f13, 1), Error);  // 13 = 1 mod 6
    CHECK_THROWS_AS(construct_cubic_shifted(f11, 2), Error);  // 2 is a non-square mod 11
}

TEST_CASE("verify_cert catches tampering; constructor invariants") {
    auto f17 = Field::create(17, 1);
    auto cert = construct_multiplicative(f17, 4);
    CHECK(verify_cert(cert).pass);

    auto bad = cert;
    std::swap(bad.sets[0][0], bad.sets[1][0]);  // moves elements across fibers
    auto rep = verify_cert(bad);
    CHECK(!rep.pass);
    CHECK(rep.first_violation.find("SetsNotFibers") != std::string::npos);

    // every constructor output: G >= L and sets/roots disjoint
    auto f8 = Field::create(2, 3);
    auto f11 = Field::create(11, 1);
    auto f9 = Field::create(3, 2);
    std::vector<GoodPolyCert> all = {
        construct_multiplicative(f17, 4), construct_additive(f9, {1}),
        construct_union_cosets(Field::create(3, 3), 1, {1}, 2), construct_dickson(f8, 3, 1),
        construct_cubic_shifted(f11, 1)};
    for (const auto& c : all) {
        CHECK(verify_cert(c).pass);
        CHECK(compute_G(c.g) >= c.L());
        auto un = set_union_all(c);
        for (Elem b : c.roots) CHECK(!un.count(b));
    }
}
