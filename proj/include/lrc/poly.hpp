#pragma once

#include <limits>
#include <utility>
#include <vector>

#include "lrc/gf.hpp"

namespace lrc {

/// Dense univariate polynomial over a Field. Coefficients are stored
/// low-to-high with trailing zeros stripped; the zero polynomial has an empty
/// coefficient list and degree kNegInfDegree. Pure value semantics.
class Poly {
  public:
    /// Stand-in for the -infinity degree of the zero polynomial.
    static constexpr int kNegInfDegree = std::numeric_limits<int>::min();

    /// Empty placeholder; unusable until assigned from a real polynomial.
    Poly() = default;

    explicit Poly(FieldPtr field) : field_(std::move(field)) {}
    Poly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
        normalize();
    }

    static Poly zero(FieldPtr f) { return Poly(std::move(f)); }
    static Poly one(FieldPtr f) { return Poly(std::move(f), {1}); }
    static Poly constant(FieldPtr f, Elem c) { return Poly(std::move(f), {c}); }
    static Poly monomial(FieldPtr f, std::uint32_t deg, Elem coeff = 1);
    /// x - a
    static Poly linear_root(const FieldPtr& f, Elem a) { return Poly(f, {f->neg(a), 1}); }

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<Elem>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return c_.empty() ? kNegInfDegree : static_cast<int>(c_.size()) - 1; }
    Elem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    Elem leading() const noexcept { return c_.empty() ? 0 : c_.back(); }

    Elem eval(Elem x) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(Elem c) const;
    Poly negated() const;
    bool operator==(const Poly& o) const;

    /// (quotient, remainder) with *this = q*d + r, deg r < deg d.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& d);
    /// Monic gcd; gcd(0, 0) = 0.
    static Poly gcd(Poly a, Poly b);
    Poly pow(std::uint64_t e) const;

    /// Exact root set {a in F_q : f(a) = 0} by exhaustive evaluation.
    std::vector<Elem> distinct_roots() const;

    /// Unique polynomial of degree < #points through the given points.
    static Poly interpolate(const FieldPtr& f, const std::vector<std::pair<Elem, Elem>>& points);

    /// Dickson polynomial of the first kind: D_0 = 2, D_1 = x,
    /// D_m = x*D_{m-1} - a*D_{m-2}.
    static Poly dickson(const FieldPtr& f, std::uint32_t m, Elem a);

    std::string to_text() const;

  private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    FieldPtr field_;
    std::vector<Elem> c_;
};

}  // namespace lrc
