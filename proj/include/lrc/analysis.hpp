#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrc/code.hpp"

namespace lrc {

enum class DistanceMode { Exhaustive, Witness, Sampled };
const char* distance_mode_name(DistanceMode m);

struct DistanceReport {
    DistanceMode mode = DistanceMode::Exhaustive;
    std::uint32_t value = 0;          // exact d for Exhaustive, an upper bound otherwise
    std::uint64_t codewords_checked = 0;
    std::optional<std::vector<Elem>> witness;  // weight == value, member of the code
    std::string provenance;
};

/// Exact minimum distance over all q^k - 1 nonzero messages. The message
/// space is walked in ascending mixed-radix order with the running codeword
/// updated one generator row per changed digit, so each step costs O(n) byte
/// operations. May shard across `jobs` threads; the minimum and the
/// lexicographically least witness are shard-independent.
DistanceReport min_distance_exhaustive(const CodeInstance& inst, std::uint64_t budget,
                                       unsigned jobs = 1);

/// Inverse of the evaluation map: expresses F in the basis
/// {x^t g1 : t <= r-1-v} u {x^i g^j : i < r, j in [xi(i)]} and returns the
/// flat message, or nullopt when F is not in the span. The basis polynomials
/// have pairwise distinct degrees, so greedy peeling of the leading term
/// decides membership exactly.
std::optional<std::vector<Elem>> poly_to_message(const CodeParams& params, const Poly& F);

/// Structured low-weight search. Candidates follow the two vanishing
/// patterns of minimum-weight codewords: for j killed groups,
///   head family:  F = g1 * W * prod_{t<=j} (g - g(A_t)),  W a square-free
///                 product over A_{j+1} u roots with deg(g1*W) <= r-1;
///   body family:  F = g  * X * prod_{t<=j} (g - g(A_t)),  X over A_{j+1}
///                 with deg X <= r-1 (the all-head-zero case).
/// Candidates are membership-filtered, encoded, and the minimum weight
/// returned with its witness. Equals claimed_d for every valid instance.
DistanceReport witness_low_weight(const CodeInstance& inst);

/// Minimum weight over `trials` seeded pseudorandom nonzero messages; an
/// upper bound on d only. Reproducible: trial i draws from a splitmix64
/// stream keyed by seed and i, so the result is independent of sharding.
DistanceReport min_distance_sampled(const CodeInstance& inst, std::uint64_t trials,
                                    std::uint64_t seed, unsigned jobs = 1);

struct GroupCheck {
    std::uint32_t group = 0;
    bool pass = true;
    std::string note;
};

struct LocalityReport {
    bool pass = true;
    std::vector<GroupCheck> groups;
    std::string first_violation;
};

/// Verifies the locality structure of every repair group against the
/// generator rows: each full group must lie on a polynomial of degree
/// <= r-1 in the evaluation point (interpolate r points, check the other
/// delta-1), the short block on one of degree <= s-delta (variant A) or be
/// constant (variant B).
LocalityReport locality_check(const CodeInstance& inst);

/// Recovers erased coordinates (nullopt entries), at most delta-1 per
/// repair group, by local interpolation / replica copy. Surviving symbols
/// in a touched group are cross-checked against the local fit.
std::vector<Elem> repair(const CodeInstance& inst,
                         const std::vector<std::optional<Elem>>& received);

/// Solves message * genmatrix = codeword; nullopt when the codeword is not
/// in the row space.
std::optional<std::vector<Elem>> solve_membership(const CodeInstance& inst,
                                                  const std::vector<Elem>& codeword);

std::uint32_t hamming_weight(const std::vector<Elem>& v);

}  // namespace lrc
