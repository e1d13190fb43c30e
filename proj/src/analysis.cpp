#include "lrc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <thread>

#include "lrc/kernels.hpp"

namespace lrc {

const char* distance_mode_name(DistanceMode m) {
    switch (m) {
        case DistanceMode::Exhaustive: return "exhaustive";
        case DistanceMode::Witness: return "witness";
        case DistanceMode::Sampled: return "sampled";
    }
    return "?";
}

std::uint32_t hamming_weight(const std::vector<Elem>& v) {
    std::uint32_t w = 0;
    for (Elem c : v) w += c != 0;
    return w;
}

namespace {

// ---------------------------------------------------------------- planar --

// Digit planes: plane d of coordinate j at buf[d*n + j]. The byte
// instantiation runs on the dispatched SIMD kernels; the word instantiation
// is the generic fallback for characteristics beyond the byte path.
template <typename D>
struct PlaneOps;

template <>
struct PlaneOps<std::uint8_t> {
    static void add(std::uint8_t* dst, const std::uint8_t* src, std::size_t len, std::uint32_t p) {
        kern::active_ops().add_mod_p(dst, src, len, static_cast<std::uint8_t>(p));
    }
    static std::size_t weight(const std::uint8_t* planes, std::size_t n, std::size_t s) {
        return kern::active_ops().weight(planes, n, s);
    }
};

template <>
struct PlaneOps<std::uint32_t> {
    static void add(std::uint32_t* dst, const std::uint32_t* src, std::size_t len, std::uint32_t p) {
        for (std::size_t i = 0; i < len; ++i) {
            std::uint32_t v = dst[i] + src[i];
            dst[i] = v >= p ? v - p : v;
        }
    }
    static std::size_t weight(const std::uint32_t* planes, std::size_t n, std::size_t s) {
        std::size_t w = 0;
        for (std::size_t j = 0; j < n; ++j) {
            std::uint32_t acc = 0;
            for (std::size_t d = 0; d < s; ++d) acc |= planes[d * n + j];
            w += acc != 0;
        }
        return w;
    }
};

template <typename D>
std::vector<D> to_planes(const Field& F, const std::vector<Elem>& codes) {
    const std::size_t n = codes.size(), s = F.s();
    std::vector<D> out(n * s);
    for (std::size_t j = 0; j < n; ++j) {
        Elem a = codes[j];
        for (std::size_t d = 0; d < s; ++d) {
            out[d * n + j] = static_cast<D>(a % F.p());
            a /= static_cast<Elem>(F.p());
        }
    }
    return out;
}

template <typename D>
std::vector<Elem> from_planes(const Field& F, const std::vector<D>& planes, std::size_t n) {
    const std::size_t s = F.s();
    std::vector<Elem> out(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        Elem a = 0;
        for (std::size_t d = s; d-- > 0;)
            a = static_cast<Elem>(a * F.p() + planes[d * n + j]);
        out[j] = a;
    }
    return out;
}

// checked q^k; 0 means overflow past 2^63
std::uint64_t checked_pow(std::uint64_t q, std::uint32_t k) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        if (r > (std::uint64_t(1) << 63) / q) return 0;
        r *= q;
    }
    return r;
}

struct Best {
    std::uint32_t w = UINT32_MAX;
    std::vector<Elem> codeword;

    void offer(std::uint32_t cand_w, const std::vector<Elem>& cand) {
        if (cand_w < w || (cand_w == w && cand < codeword)) {
            w = cand_w;
            codeword = cand;
        }
    }
};

template <typename D>
Best exhaustive_shard(const CodeInstance& inst, std::uint64_t begin, std::uint64_t end) {
    const auto& P = inst.params;
    const Field& F = *P.field;
    const std::uint32_t p = static_cast<std::uint32_t>(F.p());
    const std::uint32_t q = static_cast<std::uint32_t>(F.q());
    const std::size_t n = P.n, s = F.s(), len = n * s;

    // The message is a base-p odometer over k*s coefficient subdigits
    // (canonical codes are base-p integers, so this is ascending mixed-radix
    // base-q order too). Incrementing subdigit (t, d) adds x^d * row_t to
    // the codeword; a wrap from p-1 to 0 is the same addition plus a carry,
    // since p * x^d = 0.
    std::vector<std::vector<D>> basis_rows(static_cast<std::size_t>(P.k) * s);
    {
        std::vector<Elem> scaled(n);
        for (std::uint32_t t = 0; t < P.k; ++t) {
            Elem xd = 1;
            for (std::uint32_t d = 0; d < s; ++d) {
                for (std::uint32_t j = 0; j < P.n; ++j)
                    scaled[j] = F.mul(xd, inst.genmatrix[t][j]);
                basis_rows[static_cast<std::size_t>(t) * s + d] = to_planes<D>(F, scaled);
                xd = static_cast<Elem>(xd * p);  // code of x^(d+1)
            }
        }
    }

    // subdigits of `begin`, codeword assembled once with field ops
    std::vector<std::uint32_t> sub(static_cast<std::size_t>(P.k) * s, 0);
    std::vector<Elem> cw_codes(n, 0);
    {
        std::uint64_t m = begin;
        for (std::uint32_t t = 0; t < P.k; ++t) {
            Elem digit = static_cast<Elem>(m % q);
            m /= q;
            Elem rest = digit;
            for (std::uint32_t d = 0; d < s; ++d) {
                sub[static_cast<std::size_t>(t) * s + d] = rest % p;
                rest /= static_cast<Elem>(p);
            }
            for (std::size_t j = 0; j < n; ++j)
                cw_codes[j] = F.add(cw_codes[j], F.mul(digit, inst.genmatrix[t][j]));
        }
    }
    std::vector<D> cw = to_planes<D>(F, cw_codes);

    Best best;
    auto consider = [&](std::uint32_t w) {
        if (w < best.w) {
            best.w = w;
            best.codeword = from_planes<D>(F, cw, n);
        } else if (w == best.w) {
            auto codes = from_planes<D>(F, cw, n);
            if (codes < best.codeword) best.codeword = std::move(codes);
        }
    };

    consider(static_cast<std::uint32_t>(PlaneOps<D>::weight(cw.data(), n, s)));
    for (std::uint64_t m = begin + 1; m < end; ++m) {
        std::size_t t = 0;
        while (true) {
            PlaneOps<D>::add(cw.data(), basis_rows[t].data(), len, p);
            if (++sub[t] == p) {
                sub[t] = 0;
                ++t;
            } else {
                break;
            }
        }
        consider(static_cast<std::uint32_t>(PlaneOps<D>::weight(cw.data(), n, s)));
    }
    return best;
}

template <typename D>
DistanceReport exhaustive_run(const CodeInstance& inst, std::uint64_t total, unsigned jobs) {
    std::vector<Best> results;
    if (jobs <= 1 || total < 4096) {
        results.push_back(exhaustive_shard<D>(inst, 1, total));
    } else {
        std::vector<std::thread> threads;
        results.resize(jobs);
        std::uint64_t span = (total - 1) / jobs + 1;
        for (unsigned w = 0; w < jobs; ++w) {
            std::uint64_t b = 1 + w * span;
            std::uint64_t e = std::min<std::uint64_t>(total, b + span);
            if (b >= e) continue;
            threads.emplace_back([&, w, b, e] { results[w] = exhaustive_shard<D>(inst, b, e); });
        }
        for (auto& th : threads) th.join();
    }
    Best merged;
    for (auto& r : results)
        if (r.w != UINT32_MAX) merged.offer(r.w, r.codeword);

    DistanceReport rep;
    rep.mode = DistanceMode::Exhaustive;
    rep.value = merged.w;
    rep.codewords_checked = total - 1;
    rep.witness = merged.codeword;
    rep.provenance = "exact: all nonzero messages enumerated";
    return rep;
}

}  // namespace

DistanceReport min_distance_exhaustive(const CodeInstance& inst, std::uint64_t budget,
                                       unsigned jobs) {
    const auto& P = inst.params;
    std::uint64_t total = checked_pow(P.field->q(), P.k);
    if (total == 0 || total > budget) {
        std::ostringstream os;
        os << "exhaustive scan requires ";
        if (total)
            os << total;
        else
            os << P.field->q() << "^" << P.k << " (> 2^63)";
        os << " codeword enumerations, budget " << budget;
        fail(Errc::BudgetExceeded, os.str());
    }
    if (P.field->p() <= kern::kMaxBytePathP) return exhaustive_run<std::uint8_t>(inst, total, jobs);
    return exhaustive_run<std::uint32_t>(inst, total, jobs);
}

// ------------------------------------------------------------ membership --

std::optional<std::vector<Elem>> poly_to_message(const CodeParams& P, const Poly& F) {
    const auto& field = P.field;
    auto lay = layout(P.k, P.v, P.r);

    // basis polynomial per layout slot; degrees are pairwise distinct
    std::vector<Poly> basis;
    basis.reserve(P.k);
    std::map<int, std::size_t> by_degree;
    std::uint32_t maxj = xi(P.k, P.v, P.r, 0);
    std::vector<Poly> gpow;
    if (maxj >= 1) gpow.push_back(P.cert.g);
    for (std::uint32_t j = 2; j <= maxj; ++j) gpow.push_back(gpow.back() * P.cert.g);

    for (std::size_t t = 0; t < lay.size(); ++t) {
        Poly b = lay[t].head ? Poly::monomial(field, lay[t].i) * P.g1
                             : Poly::monomial(field, lay[t].i) * gpow[lay[t].j - 1];
        by_degree.emplace(b.degree(), t);
        basis.push_back(std::move(b));
    }

    std::vector<Elem> msg(P.k, 0);
    Poly rem = F;
    while (!rem.is_zero()) {
        auto it = by_degree.find(rem.degree());
        if (it == by_degree.end()) return std::nullopt;
        std::size_t t = it->second;
        Elem c = field->mul(rem.leading(), field->inv(basis[t].leading()));
        msg[t] = c;
        rem = rem - basis[t].scaled(c);
        if (!rem.is_zero() && rem.degree() >= basis[t].degree()) return std::nullopt;  // no progress
    }
    return msg;
}

// --------------------------------------------------------------- witness --

namespace {

constexpr std::uint64_t kWitnessCandidateCap = 5'000'000;

// all subsets of pool with size <= wmax, smallest first; fn(poly of the
// subset product). Returns false when the candidate budget runs out.
template <typename Fn>
bool for_each_subset_product(const FieldPtr& f, const std::vector<Elem>& pool, std::uint32_t wmax,
                             std::uint64_t& remaining, Fn&& fn) {
    const std::size_t np = pool.size();
    std::vector<std::size_t> idx;
    for (std::uint32_t w = 0; w <= std::min<std::uint32_t>(wmax, static_cast<std::uint32_t>(np)); ++w) {
        idx.assign(w, 0);
        for (std::size_t i = 0; i < w; ++i) idx[i] = i;
        while (true) {
            if (remaining == 0) return false;
            --remaining;
            Poly W = Poly::one(f);
            for (std::size_t i : idx) W = W * Poly::linear_root(f, pool[i]);
            fn(W);
            if (w == 0) break;
            // next combination
            std::size_t i = w;
            while (i-- > 0) {
                if (idx[i] + 1 <= np - (w - i)) {
                    ++idx[i];
                    for (std::size_t j = i + 1; j < w; ++j) idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (i == 0) goto next_size;
            }
        }
    next_size:;
    }
    return true;
}

}  // namespace

DistanceReport witness_low_weight(const CodeInstance& inst) {
    const auto& P = inst.params;
    const auto& f = P.field;
    const std::uint32_t jmax = (P.k_prime + P.r - 1) / P.r - 1;

    Best best;
    std::uint64_t checked = 0;
    std::uint64_t remaining = kWitnessCandidateCap;

    auto try_candidate = [&](const Poly& F) {
        auto msg = poly_to_message(P, F);
        if (!msg) return;
        auto cw = encode(P, *msg);
        ++checked;
        best.offer(hamming_weight(cw), cw);
    };

    Poly killed = Poly::one(f);  // prod_{t<=j} (g - g(A_t))
    for (std::uint32_t j = 0; j <= jmax; ++j) {
        if (j > 0) {
            if (j - 1 >= P.L) break;  // cannot kill more groups than exist
            killed = killed * (P.cert.g - Poly::constant(f, P.cert.constants[j - 1]));
        }
        std::vector<Elem> pool_head;
        if (j < P.L) pool_head = P.cert.sets[j];
        pool_head.insert(pool_head.end(), P.cert.roots.begin(), P.cert.roots.end());
        std::uint32_t wmax_head = P.r - 1 - P.v;

        Poly g1k = P.g1 * killed;
        bool ok = for_each_subset_product(f, pool_head, wmax_head, remaining,
                                          [&](const Poly& W) { try_candidate(g1k * W); });
        if (!ok) fail(Errc::NoWitnessFound, "witness search cap exceeded");

        // all-head-zero branch: g | F
        std::vector<Elem> pool_body;
        if (j < P.L) pool_body = P.cert.sets[j];
        Poly gk = P.cert.g * killed;
        ok = for_each_subset_product(f, pool_body, P.r - 1, remaining,
                                     [&](const Poly& X) { try_candidate(gk * X); });
        if (!ok) fail(Errc::NoWitnessFound, "witness search cap exceeded");
    }

    if (best.w == UINT32_MAX)
        fail(Errc::NoWitnessFound, "no structured candidate is a code member (invalid instance)");

    DistanceReport rep;
    rep.mode = DistanceMode::Witness;
    rep.value = best.w;
    rep.codewords_checked = checked;
    rep.witness = best.codeword;
    rep.provenance =
        "upper bound: membership-verified witness; matching lower bound cited from the "
        "construction guarantee";
    return rep;
}

// --------------------------------------------------------------- sampled --

namespace {

inline std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

struct SampledShard {
    Best best;
};

void sampled_shard(const CodeInstance& inst, std::uint64_t t0, std::uint64_t t1, std::uint64_t seed,
                   const std::vector<std::vector<std::uint8_t>>* scaled_rows, Best& out) {
    const auto& P = inst.params;
    const Field& F = *P.field;
    const std::uint32_t q = static_cast<std::uint32_t>(F.q());
    const std::size_t n = P.n, s = F.s(), len = n * s;

    std::vector<std::uint32_t> dig(P.k);
    std::vector<std::uint8_t> cw(len);
    std::vector<Elem> cw_codes(n);
    Best best;

    for (std::uint64_t trial = t0; trial < t1; ++trial) {
        // per-trial stream keyed by (seed, trial): order/shard independent
        std::uint64_t st = seed ^ (0xBF58476D1CE4E5B9ULL * (trial + 1));
        bool nonzero = false;
        while (!nonzero) {
            for (std::uint32_t t = 0; t < P.k; ++t) {
                dig[t] = static_cast<std::uint32_t>(splitmix64(st) % q);
                nonzero |= dig[t] != 0;
            }
        }
        std::uint32_t w;
        if (scaled_rows) {
            std::fill(cw.begin(), cw.end(), 0);
            for (std::uint32_t t = 0; t < P.k; ++t)
                if (dig[t])
                    kern::active_ops().add_mod_p(cw.data(), (*scaled_rows)[t * q + dig[t]].data(),
                                                 len, static_cast<std::uint8_t>(F.p()));
            w = static_cast<std::uint32_t>(kern::active_ops().weight(cw.data(), n, s));
            if (w < best.w || w == best.w) {
                auto codes = from_planes<std::uint8_t>(F, cw, n);
                best.offer(w, codes);
            }
        } else {
            for (std::size_t j = 0; j < n; ++j) {
                Elem acc = 0;
                for (std::uint32_t t = 0; t < P.k; ++t)
                    acc = F.add(acc, F.mul(static_cast<Elem>(dig[t]), inst.genmatrix[t][j]));
                cw_codes[j] = acc;
            }
            best.offer(hamming_weight(cw_codes), cw_codes);
        }
    }
    out = std::move(best);
}

}  // namespace

DistanceReport min_distance_sampled(const CodeInstance& inst, std::uint64_t trials,
                                    std::uint64_t seed, unsigned jobs) {
    if (trials < 1) fail(Errc::PreconditionFailed, "need trials >= 1");
    const auto& P = inst.params;
    const Field& F = *P.field;
    const std::uint32_t q = static_cast<std::uint32_t>(F.q());
    const std::size_t len = static_cast<std::size_t>(P.n) * F.s();

    // q multiples of every row, in planes: sampling becomes k kernel adds
    std::vector<std::vector<std::uint8_t>> scaled;
    const std::vector<std::vector<std::uint8_t>>* scaled_ptr = nullptr;
    if (F.p() <= kern::kMaxBytePathP &&
        static_cast<std::uint64_t>(P.k) * q * len <= (std::uint64_t(64) << 20)) {
        scaled.resize(static_cast<std::size_t>(P.k) * q);
        std::vector<Elem> row(P.n);
        for (std::uint32_t t = 0; t < P.k; ++t) {
            for (std::uint32_t d = 0; d < q; ++d) {
                for (std::uint32_t j = 0; j < P.n; ++j)
                    row[j] = F.mul(static_cast<Elem>(d), inst.genmatrix[t][j]);
                scaled[static_cast<std::size_t>(t) * q + d] = to_planes<std::uint8_t>(F, row);
            }
        }
        scaled_ptr = &scaled;
    }

    std::vector<Best> results;
    if (jobs <= 1 || trials < 4096) {
        results.resize(1);
        sampled_shard(inst, 0, trials, seed, scaled_ptr, results[0]);
    } else {
        results.resize(jobs);
        std::vector<std::thread> threads;
        std::uint64_t span = (trials + jobs - 1) / jobs;
        for (unsigned w = 0; w < jobs; ++w) {
            std::uint64_t b = w * span, e = std::min<std::uint64_t>(trials, b + span);
            if (b >= e) continue;
            threads.emplace_back(
                [&, w, b, e] { sampled_shard(inst, b, e, seed, scaled_ptr, results[w]); });
        }
        for (auto& th : threads) th.join();
    }
    Best merged;
    for (auto& r : results)
        if (r.w != UINT32_MAX) merged.offer(r.w, r.codeword);

    DistanceReport rep;
    rep.mode = DistanceMode::Sampled;
    rep.value = merged.w;
    rep.codewords_checked = trials;
    rep.witness = merged.codeword;
    rep.provenance = "upper bound: minimum over seeded random nonzero messages";
    return rep;
}

// -------------------------------------------------------------- locality --

namespace {

// interpolate through the first (deg+1) points, require the rest to agree
bool fits_degree(const FieldPtr& f, const std::vector<std::pair<Elem, Elem>>& pts,
                 std::uint32_t deg) {
    std::vector<std::pair<Elem, Elem>> fit(pts.begin(), pts.begin() + deg + 1);
    Poly loc = Poly::interpolate(f, fit);
    for (std::size_t i = deg + 1; i < pts.size(); ++i)
        if (loc.eval(pts[i].first) != pts[i].second) return false;
    return true;
}

}  // namespace

LocalityReport locality_check(const CodeInstance& inst) {
    const auto& P = inst.params;
    LocalityReport rep;
    for (std::uint32_t gi = 0; gi < inst.groups.size(); ++gi) {
        const auto& idx = inst.groups[gi];
        bool is_short = P.has_short_block() && gi == P.L;
        GroupCheck gc{gi, true, ""};
        for (std::uint32_t row = 0; row < P.k && gc.pass; ++row) {
            const auto& cw = inst.genmatrix[row];
            if (!is_short) {
                std::vector<std::pair<Elem, Elem>> pts;
                pts.reserve(idx.size());
                for (std::size_t t = 0; t < idx.size(); ++t)
                    pts.emplace_back(P.cert.sets[gi][t], cw[idx[t]]);
                if (!fits_degree(P.field, pts, P.r - 1)) {
                    gc.pass = false;
                    gc.note = "restriction of row " + std::to_string(row) +
                              " is not a degree <= r-1 evaluation";
                }
            } else if (P.variant == Variant::A) {
                std::vector<std::pair<Elem, Elem>> pts;
                for (std::size_t t = 0; t < idx.size(); ++t)
                    pts.emplace_back(P.cert.roots[t], cw[idx[t]]);
                if (!fits_degree(P.field, pts, P.s - P.delta)) {
                    gc.pass = false;
                    gc.note = "short block of row " + std::to_string(row) +
                              " is not a degree <= s-delta evaluation";
                }
            } else {  // variant B: replicas
                for (std::size_t t = 1; t < idx.size(); ++t)
                    if (cw[idx[t]] != cw[idx[0]]) {
                        gc.pass = false;
                        gc.note = "replica block of row " + std::to_string(row) + " not constant";
                        break;
                    }
            }
        }
        if (!gc.pass && rep.pass) {
            rep.pass = false;
            rep.first_violation = "group " + std::to_string(gi) + ": " + gc.note;
        }
        rep.groups.push_back(std::move(gc));
    }
    return rep;
}

// ---------------------------------------------------------------- repair --

std::vector<Elem> repair(const CodeInstance& inst,
                         const std::vector<std::optional<Elem>>& received) {
    const auto& P = inst.params;
    if (received.size() != P.n) fail(Errc::LengthMismatch, "received word length must be n");
    std::vector<Elem> out(P.n, 0);
    for (std::uint32_t j = 0; j < P.n; ++j)
        if (received[j]) out[j] = *received[j];

    for (std::uint32_t gi = 0; gi < inst.groups.size(); ++gi) {
        const auto& idx = inst.groups[gi];
        std::vector<std::size_t> erased;
        for (std::size_t t = 0; t < idx.size(); ++t)
            if (!received[idx[t]]) erased.push_back(t);
        if (erased.empty()) continue;
        if (erased.size() > P.delta - 1)
            fail(Errc::TooManyErasures, "group " + std::to_string(gi) + " has " +
                                            std::to_string(erased.size()) +
                                            " erasures, max delta-1 = " + std::to_string(P.delta - 1));

        bool is_short = P.has_short_block() && gi == P.L;
        if (is_short && P.variant == Variant::B) {
            Elem val = 0;
            bool have = false;
            for (std::size_t t = 0; t < idx.size(); ++t) {
                if (!received[idx[t]]) continue;
                if (!have) {
                    val = *received[idx[t]];
                    have = true;
                } else if (*received[idx[t]] != val) {
                    fail(Errc::InconsistentSurvivors, "replica block disagrees");
                }
            }
            for (std::size_t t : erased) out[idx[t]] = val;
            continue;
        }

        const std::vector<Elem>& abscissae =
            is_short ? P.cert.roots : P.cert.sets[gi];
        std::uint32_t deg = is_short ? P.s - P.delta : P.r - 1;

        std::vector<std::pair<Elem, Elem>> survivors;
        for (std::size_t t = 0; t < idx.size(); ++t)
            if (received[idx[t]]) survivors.emplace_back(abscissae[t], *received[idx[t]]);
        // erased <= delta-1 leaves at least deg+1 survivors in both layouts
        std::vector<std::pair<Elem, Elem>> fit(survivors.begin(), survivors.begin() + deg + 1);
        Poly loc = Poly::interpolate(P.field, fit);
        for (std::size_t i = deg + 1; i < survivors.size(); ++i)
            if (loc.eval(survivors[i].first) != survivors[i].second)
                fail(Errc::InconsistentSurvivors,
                     "survivors of group " + std::to_string(gi) + " fit no local polynomial");
        for (std::size_t t : erased) out[idx[t]] = loc.eval(abscissae[t]);
    }
    return out;
}

// ------------------------------------------------------------ membership --

std::optional<std::vector<Elem>> solve_membership(const CodeInstance& inst,
                                                  const std::vector<Elem>& codeword) {
    const auto& P = inst.params;
    const auto& F = P.field;
    if (codeword.size() != P.n) fail(Errc::LengthMismatch, "codeword length must be n");
    // solve x * G = c by eliminating on G^T | c
    std::size_t rows = P.n, cols = P.k;
    std::vector<std::vector<Elem>> M(rows, std::vector<Elem>(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) M[i][j] = inst.genmatrix[j][i];
        M[i][cols] = codeword[i];
    }
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && M[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(M[piv], M[rank]);
        Elem inv = F->inv(M[rank][c]);
        for (std::size_t j = c; j <= cols; ++j) M[rank][j] = F->mul(M[rank][j], inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || M[i][c] == 0) continue;
            Elem fmul = M[i][c];
            for (std::size_t j = c; j <= cols; ++j)
                M[i][j] = F->sub(M[i][j], F->mul(fmul, M[rank][j]));
        }
        pivot_col.push_back(c);
        ++rank;
    }
    for (std::size_t i = rank; i < rows; ++i)
        if (M[i][cols] != 0) return std::nullopt;  // inconsistent: not in the code
    std::vector<Elem> msg(P.k, 0);
    for (std::size_t i = 0; i < rank; ++i) msg[pivot_col[i]] = M[i][cols];
    return msg;
}

}  // namespace lrc
