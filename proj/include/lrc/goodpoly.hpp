#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lrc/poly.hpp"

namespace lrc {

/// A good polynomial g of degree m together with the evidence that makes it
/// usable as a construction input: L pairwise disjoint m-sets on which g takes
/// the recorded nonzero constants (full nonzero fibers of g), the distinct
/// roots of g in F_q, and optionally a factor split g = g2 * g1.
///
/// Canonical ordering, relied on for deterministic generator matrices:
/// sets ascend by constant code, elements within a set ascend by code,
/// roots ascend by code.
struct GoodPolyCert {
    Poly g;
    std::vector<std::vector<Elem>> sets;
    std::vector<Elem> constants;
    std::vector<Elem> roots;
    std::optional<std::pair<Poly, Poly>> split;  // (g1, g2) with g == g2 * g1

    std::size_t L() const noexcept { return sets.size(); }
};

/// N_f histogram: for each i, the number of shifts t in F_q such that f + t
/// has exactly i distinct roots. Entries with count 0 are omitted except that
/// i = 0 is always present. Requires deg f >= 2.
std::map<std::uint32_t, std::uint64_t> compute_Nf(const Poly& f);

/// G(f) = N_f(deg f): the number of full-size fibers.
std::uint64_t compute_G(const Poly& f);

/// Partition of F_q by g-value: (value, preimage) pairs, values ascending,
/// preimages ascending. Nonconstant g only.
std::vector<std::pair<Elem, std::vector<Elem>>> fibers(const Poly& g);

/// The full nonzero fibers: |fiber| = deg g and value != 0, ordered by value.
std::vector<std::pair<Elem, std::vector<Elem>>> good_sets(const Poly& g);

/// Assemble a certificate from a polynomial: sets = good_sets(g),
/// roots = distinct_roots(g), split validated if supplied.
GoodPolyCert cert_from_poly(const Poly& g,
                            std::optional<std::pair<Poly, Poly>> split = std::nullopt);

/// Copy of `cert` carrying the validated split (g1, g2).
GoodPolyCert with_split(const GoodPolyCert& cert, Poly g1, Poly g2);

/// g = x^m for m | q-1, m >= 2: L = (q-1)/m multiplicative cosets, root {0}.
GoodPolyCert construct_multiplicative(const FieldPtr& f, std::uint64_t m);

/// g = prod_{h in H}(x - h) for the GF(p)-span H of the basis: the q/|H| - 1
/// nontrivial additive cosets are the sets, roots = H.
GoodPolyCert construct_additive(const FieldPtr& f, const std::vector<Elem>& basis);

/// g = prod_{i<=m} prod_{h in H} (x + h + alpha_i) over the m-th roots of
/// unity, H the GF(p)-span of the basis, closed under GF(p^l)-multiplication,
/// l | s, m | p^l - 1. The returned polynomial is shifted by its constant on
/// H so that the roots are exactly H; the size-m|H| coset unions become the
/// (q - |H|) / (m|H|) sets.
GoodPolyCert construct_union_cosets(const FieldPtr& f, std::uint32_t l,
                                    const std::vector<Elem>& basis, std::uint64_t m);

/// f = D_m(x, a) - D_m(0, a) for even q, odd m > 2, q = -1 mod m, a != 0:
/// floor(q/2m) sets and exactly (m+1)/2 distinct roots.
GoodPolyCert construct_dickson(const FieldPtr& f, std::uint32_t m, Elem a);

/// f = x^3 + a1*x for q = 5 mod 6 and a1 a nonzero square: (q+1)/6 size-3
/// fibers; returns g = f - f(x0) for the least x0 outside their union, with
/// split (x - x0, g / (x - x0)).
GoodPolyCert construct_cubic_shifted(const FieldPtr& f, Elem a1);

struct CertReport {
    bool pass = true;
    std::string first_violation;  // empty when pass
};

/// Re-checks every certificate invariant by direct evaluation.
CertReport verify_cert(const GoodPolyCert& cert);

}  // namespace lrc
