#include <doctest.h>

#include <random>

#include "lrc/analysis.hpp"

using namespace lrc;

namespace {

GoodPolyCert mult_split_cert(const FieldPtr& f, std::uint32_t m, std::uint32_t g1deg) {
    return with_split(construct_multiplicative(f, m), Poly::monomial(f, g1deg),
                      Poly::monomial(f, m - g1deg));
}

// independent oracle: full matrix-vector product for every nonzero message
std::uint32_t naive_min_distance(const CodeInstance& inst) {
    const auto& P = inst.params;
    const auto& F = P.field;
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < P.k; ++i) total *= F->q();
    std::uint32_t best = UINT32_MAX;
    std::vector<Elem> msg(P.k);
    for (std::uint64_t m = 1; m < total; ++m) {
        std::uint64_t x = m;
        for (std::uint32_t t = 0; t < P.k; ++t) {
            msg[t] = static_cast<Elem>(x % F->q());
            x /= F->q();
        }
        std::uint32_t w = 0;
        for (std::uint32_t j = 0; j < P.n; ++j) {
            Elem acc = 0;
            for (std::uint32_t t = 0; t < P.k; ++t)
                acc = F->add(acc, F->mul(msg[t], inst.genmatrix[t][j]));
            w += acc != 0;
        }
        best = std::min(best, w);
    }
    return best;
}

CodeInstance gf7_instance() {
    auto f7 = Field::create(7, 1);
    return generator_matrix(validate(f7, Variant::B, 2, 2, 3, mult_split_cert(f7, 3, 1)));
}

CodeInstance gf27_instance() {
    auto f = Field::create(3, 3);
    Elem u = 3;
    Poly g(f, {0, 0, f->pow(u, 4), 0, f->pow(u, 2), 0, 1});
    return generator_matrix(validate(f, Variant::A, 5, 2, 12, cert_from_poly(g)));
}

}  // namespace

TEST_CASE("exhaustive distance matches the naive oracle") {
    auto inst = gf7_instance();
    auto rep = min_distance_exhaustive(inst, 1000, 1);
    CHECK(rep.value == 5);  // 8 - 3 - (ceil(4/2)-1)*1 + 1
    CHECK(rep.value == naive_min_distance(inst));
    CHECK(rep.value == inst.claimed_d);
    CHECK(rep.codewords_checked == 342);
    REQUIRE(rep.witness);
    CHECK(hamming_weight(*rep.witness) == 5);
    CHECK(solve_membership(inst, *rep.witness));

    // sharding does not change the result, including the tie-broken witness
    auto rep4 = min_distance_exhaustive(inst, 1000, 4);
    CHECK(rep4.value == rep.value);
    // note: small totals fall back to one shard; force comparison on a larger code
    auto f13 = Field::create(13, 1);
    auto i13 = generator_matrix(validate(f13, Variant::B, 2, 3, 4, mult_split_cert(f13, 4, 1)));
    auto a = min_distance_exhaustive(i13, 30000, 1);
    auto b = min_distance_exhaustive(i13, 30000, 5);
    CHECK(a.value == b.value);
    CHECK(*a.witness == *b.witness);
}

TEST_CASE("exhaustive distance over extension fields matches the naive oracle") {
    // the incremental scan must agree with full re-encoding when s > 1
    auto f8 = Field::create(2, 3);
    auto i8 = generator_matrix(validate(f8, Variant::TB, 2, 6, 2, construct_multiplicative(f8, 7)));
    auto r8 = min_distance_exhaustive(i8, 100, 1);
    CHECK(r8.value == 6);
    CHECK(r8.value == naive_min_distance(i8));
    CHECK(r8.value == i8.claimed_d);

    auto f9 = Field::create(3, 2);
    auto i9 = generator_matrix(validate(f9, Variant::B, 2, 3, 3, mult_split_cert(f9, 4, 1)));
    auto r9 = min_distance_exhaustive(i9, 1000, 1);
    CHECK(r9.value == naive_min_distance(i9));
    CHECK(r9.value == i9.claimed_d);

    auto dk = construct_dickson(f8, 3, 1);
    auto id = generator_matrix(validate(f8, Variant::A, 2, 2, 3, dk));
    auto rd = min_distance_exhaustive(id, 1000, 1);
    CHECK(rd.value == naive_min_distance(id));
    CHECK(rd.value == id.claimed_d);
    CHECK(witness_low_weight(id).value == rd.value);
}

TEST_CASE("exhaustive distance beyond the byte kernel path (p > 128)") {
    auto f257 = Field::create(257, 1);
    auto inst =
        generator_matrix(validate(f257, Variant::B, 2, 3, 2, mult_split_cert(f257, 4, 1)));
    auto rep = min_distance_exhaustive(inst, 70000, 2);
    CHECK(rep.value == inst.claimed_d);
    CHECK(rep.value == witness_low_weight(inst).value);
    REQUIRE(rep.witness);
    CHECK(hamming_weight(*rep.witness) == rep.value);
    CHECK(solve_membership(inst, *rep.witness));
}

TEST_CASE("exhaustive budget is enforced") {
    auto inst = gf27_instance();
    try {
        min_distance_exhaustive(inst, 1'000'000, 1);  // 27^12 messages needed
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::BudgetExceeded);
        CHECK(std::string(e.what()).find("budget") != std::string::npos);
    }
}

TEST_CASE("poly_to_message basis membership") {
    auto inst = gf7_instance();
    const auto& P = inst.params;
    // F = g1 is the first unit message
    auto m1 = poly_to_message(P, P.g1);
    REQUIRE(m1);
    CHECK((*m1)[0] == 1);
    CHECK(hamming_weight(*m1) == 1);
    // F = x*g -> I_{1,1} only
    auto m2 = poly_to_message(P, Poly::monomial(P.field, 1) * P.cert.g);
    REQUIRE(m2);
    CHECK(hamming_weight(*m2) == 1);
    // F = x^r * g is outside the basis
    CHECK(!poly_to_message(P, Poly::monomial(P.field, P.r) * P.cert.g));
}

TEST_CASE("poly_to_message round trip on random messages") {
    std::mt19937_64 rng(404);
    auto inst27 = gf27_instance();
    auto f13 = Field::create(13, 1);
    auto i13 = generator_matrix(validate(f13, Variant::B, 2, 3, 6, mult_split_cert(f13, 4, 1)));
    for (const CodeInstance* ip : {&inst27, &i13}) {
        const auto& P = ip->params;
        std::uniform_int_distribution<std::uint64_t> d(0, P.field->q() - 1);
        for (int t = 0; t < 1000; ++t) {
            std::vector<Elem> msg(P.k);
            for (auto& c : msg) c = static_cast<Elem>(d(rng));
            auto [S, FI] = evaluation_polynomials(P, msg);
            auto back = poly_to_message(P, FI);
            REQUIRE(back);
            CHECK(*back == msg);
        }
    }
}

TEST_CASE("witness search hits the claimed distance") {
    auto inst = gf7_instance();
    auto wit = witness_low_weight(inst);
    CHECK(wit.value == 5);
    REQUIRE(wit.witness);
    CHECK(hamming_weight(*wit.witness) == wit.value);
    CHECK(solve_membership(inst, *wit.witness));

    // the S_I = 0 family is required here: k' = 5, r = 2, v = 1 >= (k' mod r)
    auto f13 = Field::create(13, 1);
    auto i13 = generator_matrix(validate(f13, Variant::B, 2, 3, 4, mult_split_cert(f13, 4, 1)));
    CHECK(i13.claimed_d == 8);
    auto w13 = witness_low_weight(i13);
    CHECK(w13.value == 8);
    CHECK(min_distance_exhaustive(i13, 30000, 2).value == 8);
}

TEST_CASE("sampled distance is deterministic and witness-backed") {
    auto inst = gf27_instance();
    auto a = min_distance_sampled(inst, 5000, 42, 1);
    auto b = min_distance_sampled(inst, 5000, 42, 1);
    CHECK(a.value == b.value);
    CHECK(*a.witness == *b.witness);
    CHECK(a.codewords_checked == 5000);
    REQUIRE(a.witness);
    CHECK(hamming_weight(*a.witness) == a.value);
    CHECK(solve_membership(inst, *a.witness));
    CHECK(a.value >= inst.claimed_d);  // nothing below the claimed distance

    auto c = min_distance_sampled(inst, 5000, 42, 4);
    CHECK(c.value == a.value);
    CHECK(*c.witness == *a.witness);

    auto d2 = min_distance_sampled(inst, 5000, 43, 1);
    CHECK(d2.codewords_checked == 5000);  // different seed still valid
}

TEST_CASE("locality check passes on constructed instances and catches perturbations") {
    for (auto inst : {gf7_instance(), gf27_instance()}) {
        auto rep = locality_check(inst);
        CHECK(rep.pass);
        REQUIRE(rep.groups.size() == inst.groups.size());

        auto bad = inst;
        std::uint32_t col = bad.groups[0][1];
        bad.genmatrix[0][col] = bad.params.field->add(bad.genmatrix[0][col], 1);
        auto brep = locality_check(bad);
        CHECK(!brep.pass);
        CHECK(!brep.groups[0].pass);
    }
}

TEST_CASE("repair round trips") {
    std::mt19937_64 rng(777);
    for (auto inst : {gf7_instance(), gf27_instance()}) {
        const auto& P = inst.params;
        std::uniform_int_distribution<std::uint64_t> d(0, P.field->q() - 1);
        for (int t = 0; t < 1000; ++t) {
            std::vector<Elem> msg(P.k);
            for (auto& c : msg) c = static_cast<Elem>(d(rng));
            auto cw = encode(P, msg);
            // erase delta-1 positions in one random group
            std::uniform_int_distribution<std::size_t> dg(0, inst.groups.size() - 1);
            const auto& grp = inst.groups[dg(rng)];
            std::vector<std::optional<Elem>> received(cw.begin(), cw.end());
            std::vector<std::uint32_t> idx(grp);
            std::shuffle(idx.begin(), idx.end(), rng);
            for (std::uint32_t e = 0; e < P.delta - 1 && e < idx.size(); ++e)
                received[idx[e]] = std::nullopt;
            CHECK(repair(inst, received) == cw);
        }

        // zero erasures: identity
        auto cw = encode(P, std::vector<Elem>(P.k, 1));
        std::vector<std::optional<Elem>> received(cw.begin(), cw.end());
        CHECK(repair(inst, received) == cw);

        // delta erasures in a full group: refused
        for (std::uint32_t e = 0; e < P.delta; ++e) received[inst.groups[0][e]] = std::nullopt;
        try {
            repair(inst, received);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::TooManyErasures);
        }
    }
}

TEST_CASE("repair detects corrupted survivors") {
    // delta = 3: one erasure leaves 3 survivors for a degree <= 1 fit, so the
    // third survivor is cross-checked
    auto f13 = Field::create(13, 1);
    auto inst = generator_matrix(validate(f13, Variant::B, 2, 3, 4, mult_split_cert(f13, 4, 1)));
    const auto& P = inst.params;
    auto cw = encode(P, {1, 2, 3, 4});
    std::vector<std::optional<Elem>> received(cw.begin(), cw.end());
    received[inst.groups[0][0]] = std::nullopt;
    *received[inst.groups[0][1]] = P.field->add(*received[inst.groups[0][1]], 1);
    try {
        repair(inst, received);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::InconsistentSurvivors);
    }

    // replica block: erase one copy, corrupt another
    auto cw2 = encode(P, {5, 6, 7, 8});
    std::vector<std::optional<Elem>> rec2(cw2.begin(), cw2.end());
    rec2[inst.groups.back()[0]] = std::nullopt;
    *rec2[inst.groups.back()[1]] = P.field->add(*rec2[inst.groups.back()[1]], 1);
    try {
        repair(inst, rec2);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::InconsistentSurvivors);
    }
}

TEST_CASE("solve_membership") {
    auto inst = gf27_instance();
    const auto& P = inst.params;
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::uint64_t> d(0, P.field->q() - 1);
    std::vector<Elem> msg(P.k);
    for (auto& c : msg) c = static_cast<Elem>(d(rng));
    auto cw = encode(P, msg);
    auto back = solve_membership(inst, cw);
    REQUIRE(back);
    CHECK(*back == msg);

    cw[5] = P.field->add(cw[5], 1);
    CHECK(!solve_membership(inst, cw));
}
