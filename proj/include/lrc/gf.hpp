#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lrc/errors.hpp"

namespace lrc {

/// Canonical element code in [0, q): the base-p integer of the coefficient
/// vector (c_0, ..., c_{s-1}) modulo the field's modulus polynomial.
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Exact arithmetic in GF(p^s), deterministic and reproducible: the default
/// modulus is the lexicographically least monic irreducible of degree s over
/// GF(p), the generator is the least element (by code) of order q-1.
/// Multiplication runs on exp/log tables built once at creation; fields are
/// immutable afterwards and safe to share across threads.
class Field {
  public:
    /// Largest supported field order. Exhaustive verifiers stay exact below it.
    static constexpr std::uint64_t kMaxOrder = 1u << 20;

    static FieldPtr create(std::uint64_t p, std::uint32_t s,
                           std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    std::uint64_t p() const noexcept { return p_; }
    std::uint32_t s() const noexcept { return s_; }
    std::uint64_t q() const noexcept { return q_; }
    /// Modulus coefficients low-to-high including the leading 1 (size s+1).
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    Elem generator() const noexcept { return generator_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    /// a^e with negative exponents via the inverse; pow(0, e) = 0 for e > 0.
    Elem pow(Elem a, std::int64_t e) const;

    /// All q elements in ascending code order, 0 first.
    std::vector<Elem> enumerate() const;

    /// k in [0, q-1) with generator^k = a.
    std::uint64_t discrete_log(Elem a) const;

    /// Quadratic character: 0, +1 (nonzero square), -1 (non-square).
    /// Odd characteristic only.
    int quadratic_character(Elem c) const;

    /// The m solutions of x^m = 1, listed as powers of generator^((q-1)/m).
    std::vector<Elem> roots_of_unity(std::uint64_t m) const;

    /// Coefficient vector (c_0, ..., c_{s-1}) of an element code.
    std::vector<std::uint32_t> decode(Elem a) const;
    Elem encode(const std::vector<std::uint32_t>& digits) const;

    std::uint64_t element_order(Elem a) const;

    /// Structural identity: same (p, s, modulus).
    static bool same(const Field& a, const Field& b) noexcept;
    static void require_same(const FieldPtr& a, const FieldPtr& b);

    /// Display form: "0", "1", or "u^k" with k the discrete log.
    std::string to_text(Elem a) const;

  private:
    Field() = default;

    std::uint64_t p_ = 0;
    std::uint32_t s_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    Elem generator_ = 0;
    std::vector<Elem> exp_;           // exp_[i] = generator^i, i in [0, q-1)
    std::vector<std::uint32_t> log_;  // log_[a] for a != 0
};

}  // namespace lrc
