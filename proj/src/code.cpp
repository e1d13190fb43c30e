#include "lrc/code.hpp"

#include <algorithm>
#include <sstream>

namespace lrc {

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::A: return "A";
        case Variant::B: return "B";
        case Variant::TB: return "TB";
    }
    return "?";
}

Variant variant_from_name(const std::string& s) {
    if (s == "A" || s == "a") return Variant::A;
    if (s == "B" || s == "b") return Variant::B;
    if (s == "TB" || s == "tb") return Variant::TB;
    fail(Errc::PreconditionFailed, "unknown variant '" + s + "' (expected A, B or TB)");
}

std::uint32_t xi(std::uint32_t k, std::uint32_t v, std::uint32_t r, std::uint32_t i) {
    if (i >= r) fail(Errc::IndexOutOfRange, "xi index must satisfy 0 <= i < r");
    std::uint32_t kp = k + v;
    if (kp < r) fail(Errc::PreconditionFailed, "xi needs k + v >= r");
    return i < kp % r ? kp / r : kp / r - 1;
}

std::vector<LayoutEntry> layout(std::uint32_t k, std::uint32_t v, std::uint32_t r) {
    if (v >= r) fail(Errc::VOutOfRange, "layout needs v < r");
    std::vector<LayoutEntry> out;
    for (std::uint32_t t = 0; t < r - v; ++t) out.push_back({true, t, 0});
    std::uint32_t maxj = xi(k, v, r, 0);
    for (std::uint32_t j = 1; j <= maxj; ++j)
        for (std::uint32_t i = 0; i < r; ++i)
            if (xi(k, v, r, i) >= j) out.push_back({false, i, j});
    if (out.size() != k) fail(Errc::ShapeMismatch, "layout does not sum to k");
    return out;
}

namespace {

[[noreturn]] void bound_error(Errc code, const std::string& what, std::uint64_t bound) {
    std::ostringstream os;
    os << what << " (bound " << bound << ")";
    fail(code, os.str());
}

}  // namespace

CodeParams validate(const FieldPtr& field, Variant variant, std::uint32_t r, std::uint32_t delta,
                    std::uint32_t k, GoodPolyCert cert, std::optional<std::uint32_t> L_opt) {
    if (!field) fail(Errc::PreconditionFailed, "null field");
    Field::require_same(field, cert.g.field());
    if (r < 2) fail(Errc::PreconditionFailed, "locality r must be >= 2");
    if (delta < 2) fail(Errc::PreconditionFailed, "delta must be >= 2");

    CodeParams P;
    P.field = field;
    P.variant = variant;
    P.r = r;
    P.delta = delta;
    P.k = k;

    const std::uint32_t m = r + delta - 1;
    if (cert.g.degree() != static_cast<int>(m))
        bound_error(Errc::DegreeMismatch, "deg(g) must equal r + delta - 1", m);

    std::uint32_t L = L_opt.value_or(static_cast<std::uint32_t>(cert.L()));
    if (L < 1 || L > cert.L())
        bound_error(Errc::NotEnoughSets, "L must be in [1, number of certificate sets]", cert.L());
    P.L = L;

    switch (variant) {
        case Variant::A: {
            std::uint32_t s = static_cast<std::uint32_t>(cert.roots.size());
            if (s < delta)
                bound_error(Errc::NotEnoughRoots, "variant A needs at least delta distinct roots", delta);
            if (s + 1 > m)  // v = m - s >= 1
                bound_error(Errc::VOutOfRange, "variant A needs s <= r + delta - 2", m - 1);
            P.s = s;
            P.v = m - s;
            if (P.v > r - 1) bound_error(Errc::VOutOfRange, "variant A needs v <= r - 1", r - 1);
            // g1 = g / prod (x - b); exact by construction of the root list
            Poly g1 = cert.g;
            for (Elem b : cert.roots) {
                auto [q, rem] = Poly::divmod(g1, Poly::linear_root(field, b));
                if (!rem.is_zero()) fail(Errc::PreconditionFailed, "recorded root is not a root of g");
                g1 = std::move(q);
            }
            P.g1 = std::move(g1);
            if (k < r) bound_error(Errc::KTooSmall, "need k >= r", r);
            std::uint64_t kmax = static_cast<std::uint64_t>(L) * r + s - delta + 1;
            if (k > kmax) bound_error(Errc::KTooLarge, "need k <= L*r + s - delta + 1", kmax);
            P.n = L * m + s;
            break;
        }
        case Variant::B: {
            if (!cert.split) fail(Errc::MissingSplit, "variant B needs a factor split g = g2 * g1");
            const Poly& g1 = cert.split->first;
            const Poly& g2 = cert.split->second;
            if (g1.degree() != static_cast<int>(r - 1))
                bound_error(Errc::DegreeMismatch, "variant B needs deg(g1) = r - 1", r - 1);
            if (g2.degree() != static_cast<int>(delta))
                bound_error(Errc::DegreeMismatch, "variant B needs deg(g2) = delta", delta);
            P.s = delta;
            P.v = r - 1;
            P.g1 = g1;
            if (k < r) bound_error(Errc::KTooSmall, "need k >= r", r);
            std::uint64_t kmax = static_cast<std::uint64_t>(L) * r + 1;
            if (k > kmax) bound_error(Errc::KTooLarge, "need k <= L*r + 1", kmax);
            P.n = L * m + delta;
            break;
        }
        case Variant::TB: {
            P.s = 0;
            P.v = 0;
            P.g1 = Poly::one(field);
            if (k < r) bound_error(Errc::KTooSmall, "need k >= r", r);
            std::uint64_t kmax = static_cast<std::uint64_t>(L) * r;
            if (k > kmax) bound_error(Errc::KTooLarge, "need k <= L*r", kmax);
            P.n = L * m;
            break;
        }
    }
    P.k_prime = P.k + P.v;
    P.cert = std::move(cert);
    return P;
}

std::pair<Poly, Poly> evaluation_polynomials(const CodeParams& P, const std::vector<Elem>& message) {
    if (message.size() != P.k) fail(Errc::LengthMismatch, "message length must be k");
    const auto& F = P.field;
    auto lay = layout(P.k, P.v, P.r);

    std::vector<Elem> head(P.r - P.v, 0);
    for (std::size_t t = 0; t < lay.size(); ++t)
        if (lay[t].head) head[lay[t].i] = message[t];
    Poly S(F, head);
    Poly FI = S * P.g1;

    std::uint32_t maxj = xi(P.k, P.v, P.r, 0);
    std::vector<Poly> gpow;  // gpow[j] = g^(j+1)
    gpow.reserve(maxj);
    if (maxj >= 1) gpow.push_back(P.cert.g);
    for (std::uint32_t j = 2; j <= maxj; ++j) gpow.push_back(gpow.back() * P.cert.g);

    for (std::size_t t = 0; t < lay.size(); ++t) {
        if (lay[t].head || message[t] == 0) continue;
        Poly term = Poly::monomial(F, lay[t].i, message[t]) * gpow[lay[t].j - 1];
        FI = FI + term;
    }
    return {std::move(S), std::move(FI)};
}

std::vector<Elem> encode(const CodeParams& P, const std::vector<Elem>& message) {
    auto [S, FI] = evaluation_polynomials(P, message);
    std::vector<Elem> cw;
    cw.reserve(P.n);
    if (P.variant == Variant::A) {
        for (Elem b : P.cert.roots) cw.push_back(S.eval(b));
    } else if (P.variant == Variant::B) {
        for (std::uint32_t i = 0; i < P.delta; ++i) cw.push_back(message[0]);
    }
    for (std::uint32_t t = 0; t < P.L; ++t)
        for (Elem a : P.cert.sets[t]) cw.push_back(FI.eval(a));
    return cw;
}

namespace {

std::uint32_t matrix_rank(const FieldPtr& F, std::vector<std::vector<Elem>> M) {
    std::uint32_t rank = 0;
    std::size_t rows = M.size(), cols = rows ? M[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && M[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(M[pivot], M[rank]);
        Elem inv = F->inv(M[rank][c]);
        for (std::size_t j = c; j < cols; ++j) M[rank][j] = F->mul(M[rank][j], inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || M[i][c] == 0) continue;
            Elem f = M[i][c];
            for (std::size_t j = c; j < cols; ++j)
                M[i][j] = F->sub(M[i][j], F->mul(f, M[rank][j]));
        }
        ++rank;
    }
    return rank;
}

}  // namespace

CodeInstance generator_matrix(const CodeParams& P) {
    CodeInstance inst;
    inst.params = P;
    inst.genmatrix.reserve(P.k);
    std::vector<Elem> unit(P.k, 0);
    for (std::uint32_t t = 0; t < P.k; ++t) {
        unit[t] = 1;
        inst.genmatrix.push_back(encode(P, unit));
        unit[t] = 0;
    }

    const std::uint32_t m = P.group_size();
    const std::uint32_t sb = P.short_block_size();
    for (std::uint32_t t = 0; t < P.L; ++t) {
        std::vector<std::uint32_t> idx(m);
        for (std::uint32_t j = 0; j < m; ++j) idx[j] = sb + t * m + j;
        inst.groups.push_back(std::move(idx));
    }
    if (P.has_short_block()) {
        std::vector<std::uint32_t> idx(sb);
        for (std::uint32_t j = 0; j < sb; ++j) idx[j] = j;
        inst.groups.push_back(std::move(idx));
    }

    if (matrix_rank(P.field, inst.genmatrix) != P.k)
        fail(Errc::RankDeficient, "generator matrix rank < k; certificate or parameters invalid");

    inst.claimed_d = improved_bound(P.n, P.k, P.r, P.delta, P.v);
    std::ostringstream os;
    os << "d = n - k - (ceil((k+v)/r) - 1)(delta - 1) + 1 with v = " << P.v
       << "; construction guarantees equality";
    inst.d_provenance = os.str();
    return inst;
}

std::uint32_t singleton_bound(std::uint32_t n, std::uint32_t k, std::uint32_t r, std::uint32_t delta) {
    if (k < 1 || r < 1 || r > k) fail(Errc::PreconditionFailed, "need 1 <= r <= k");
    std::uint32_t ceil_kr = (k + r - 1) / r;
    return n - k - (ceil_kr - 1) * (delta - 1) + 1;
}

std::uint32_t improved_bound(std::uint32_t n, std::uint32_t k, std::uint32_t r, std::uint32_t delta,
                             std::uint32_t v) {
    if (k < 1 || r < 1 || r > k) fail(Errc::PreconditionFailed, "need 1 <= r <= k");
    if (v >= r) fail(Errc::VOutOfRange, "need 0 <= v <= r - 1");
    std::uint32_t ceil_kpr = (k + v + r - 1) / r;
    return n - k - (ceil_kpr - 1) * (delta - 1) + 1;
}

const char* optimality_name(Optimality o) {
    return o == Optimality::SingletonOptimal ? "SingletonOptimal" : "DistanceOptimalOnly";
}

bool singleton_congruence(std::uint32_t n, std::uint32_t k, std::uint32_t r, std::uint32_t delta) {
    std::uint32_t kr = k % r;
    return kr >= 1 && kr <= (n + r) % (r + delta - 1);
}

Optimality optimality_class(const CodeParams& P) {
    std::uint32_t sing = singleton_bound(P.n, P.k, P.r, P.delta);
    std::uint32_t impr = improved_bound(P.n, P.k, P.r, P.delta, P.v);
    return impr == sing ? Optimality::SingletonOptimal : Optimality::DistanceOptimalOnly;
}

}  // namespace lrc
