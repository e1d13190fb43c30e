#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrc/goodpoly.hpp"

namespace lrc {

enum class Variant { A, B, TB };

const char* variant_name(Variant v);
Variant variant_from_name(const std::string& s);

/// A validated code instance description. Derived fields:
///   variant A:  s = #roots used, v = r+delta-1-s, n = L(r+delta-1)+s
///   variant B:  s = delta, v = r-1,               n = L(r+delta-1)+delta
///   variant TB: s = 0, v = 0 (plain evaluation-code baseline), n = L(r+delta-1)
/// k_prime = k + v drives the information-vector shape.
struct CodeParams {
    FieldPtr field;
    Variant variant = Variant::TB;
    std::uint32_t r = 0, delta = 0, k = 0, L = 0;
    GoodPolyCert cert;

    std::uint32_t s = 0, v = 0, n = 0, k_prime = 0;
    Poly g1;  // degree v; the constant 1 for variant TB

    std::uint32_t group_size() const noexcept { return r + delta - 1; }
    bool has_short_block() const noexcept { return variant != Variant::TB; }
    std::uint32_t short_block_size() const noexcept {
        return variant == Variant::A ? s : (variant == Variant::B ? delta : 0);
    }
};

/// Number of degree levels available at body position i, for k' = k + v:
/// floor(k'/r) when i < (k' mod r), else floor(k'/r) - 1.
std::uint32_t xi(std::uint32_t k, std::uint32_t v, std::uint32_t r, std::uint32_t i);

/// Flat message layout: head coefficients I_0..I_{r-v-1} of S_I first, then
/// body entries I_{i,j} ordered j-major (all level-1 coefficients before
/// level 2, i ascending within a level).
struct LayoutEntry {
    bool head;          // true: S_I coefficient index i; false: body (i, j)
    std::uint32_t i;
    std::uint32_t j;    // 0 for head entries
};
std::vector<LayoutEntry> layout(std::uint32_t k, std::uint32_t v, std::uint32_t r);

/// Checks every parameter invariant; throws a named error per violated
/// inequality with the bound echoed. L defaults to all of the cert's sets.
CodeParams validate(const FieldPtr& field, Variant variant, std::uint32_t r, std::uint32_t delta,
                    std::uint32_t k, GoodPolyCert cert,
                    std::optional<std::uint32_t> L = std::nullopt);

/// Builds the evaluation polynomial F_I = S_I*g1 + sum I_{i,j} x^i g^j from
/// the flat message and evaluates. Codeword layout: short block first
/// (S_I at the roots for A, delta copies of I_0 for B, absent for TB),
/// then F_I on the sets in certificate order.
std::vector<Elem> encode(const CodeParams& params, const std::vector<Elem>& message);

/// The S_I / F_I pair of a message (F_I includes the S_I*g1 term).
std::pair<Poly, Poly> evaluation_polynomials(const CodeParams& params,
                                             const std::vector<Elem>& message);

struct CodeInstance {
    CodeParams params;
    std::vector<std::vector<Elem>> genmatrix;        // k rows of length n
    std::vector<std::vector<std::uint32_t>> groups;  // L full groups, then the short block if any
    std::uint32_t claimed_d = 0;
    std::string d_provenance;
};

/// Rows = encodings of the unit messages in layout order; rank k verified.
CodeInstance generator_matrix(const CodeParams& params);

/// d <= n - k - (ceil(k/r) - 1)(delta - 1) + 1
std::uint32_t singleton_bound(std::uint32_t n, std::uint32_t k, std::uint32_t r, std::uint32_t delta);

/// d <= n - k - (ceil((k+v)/r) - 1)(delta - 1) + 1, for 0 <= v <= r-1.
/// v = 0 reduces to the Singleton-type bound.
std::uint32_t improved_bound(std::uint32_t n, std::uint32_t k, std::uint32_t r, std::uint32_t delta,
                             std::uint32_t v);

enum class Optimality { SingletonOptimal, DistanceOptimalOnly };
const char* optimality_name(Optimality o);

/// True iff 1 <= (k mod r) <= ((n + r) mod (r + delta - 1)). Sufficient for
/// Singleton optimality; the classification itself is decided by bound
/// equality.
bool singleton_congruence(std::uint32_t n, std::uint32_t k, std::uint32_t r, std::uint32_t delta);

Optimality optimality_class(const CodeParams& params);

}  // namespace lrc
