#include "lrc/poly.hpp"

#include <sstream>

namespace lrc {

Poly Poly::monomial(FieldPtr f, std::uint32_t deg, Elem coeff) {
    std::vector<Elem> c(deg + 1, 0);
    c[deg] = coeff;
    return Poly(std::move(f), std::move(c));
}

Elem Poly::eval(Elem x) const {
    Elem r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = field_->add(field_->mul(r, x), c_[i]);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Field::require_same(field_, o.field_);
    std::vector<Elem> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_->add(coeff(i), o.coeff(i));
    return Poly(field_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + o.negated(); }

Poly Poly::negated() const {
    std::vector<Elem> r(c_);
    for (auto& x : r) x = field_->neg(x);
    return Poly(field_, std::move(r));
}

Poly Poly::scaled(Elem c) const {
    std::vector<Elem> r(c_);
    for (auto& x : r) x = field_->mul(x, c);
    return Poly(field_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    Field::require_same(field_, o.field_);
    if (is_zero() || o.is_zero()) return zero(field_);
    std::vector<Elem> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = field_->add(r[i + j], field_->mul(c_[i], o.c_[j]));
    }
    return Poly(field_, std::move(r));
}

bool Poly::operator==(const Poly& o) const {
    return Field::same(*field_, *o.field_) && c_ == o.c_;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& d) {
    Field::require_same(a.field_, d.field_);
    if (d.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
    const auto& F = a.field_;
    std::vector<Elem> rem(a.c_);
    std::vector<Elem> quot(a.c_.size() > d.c_.size() ? a.c_.size() - d.c_.size() + 1 : 1, 0);
    Elem inv_lc = F->inv(d.leading());
    while (rem.size() >= d.c_.size()) {
        if (rem.back() == 0) {
            rem.pop_back();
            continue;
        }
        Elem c = F->mul(rem.back(), inv_lc);
        std::size_t off = rem.size() - d.c_.size();
        quot[off] = c;
        for (std::size_t j = 0; j < d.c_.size(); ++j)
            rem[off + j] = F->sub(rem[off + j], F->mul(c, d.c_[j]));
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
    }
    return {Poly(F, std::move(quot)), Poly(F, std::move(rem))};
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = a.scaled(a.field_->inv(a.leading()));
    return a;
}

Poly Poly::pow(std::uint64_t e) const {
    Poly r = one(field_);
    Poly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

std::vector<Elem> Poly::distinct_roots() const {
    if (is_zero()) fail(Errc::ZeroPolynomial, "roots of the zero polynomial");
    std::vector<Elem> out;
    for (std::uint64_t a = 0; a < field_->q(); ++a)
        if (eval(static_cast<Elem>(a)) == 0) out.push_back(static_cast<Elem>(a));
    return out;
}

Poly Poly::interpolate(const FieldPtr& f, const std::vector<std::pair<Elem, Elem>>& points) {
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                fail(Errc::DuplicateAbscissa, "repeated x-value in interpolation");
    Poly acc = zero(f);
    for (std::size_t i = 0; i < points.size(); ++i) {
        Poly basis = one(f);
        Elem denom = 1;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis = basis * linear_root(f, points[j].first);
            denom = f->mul(denom, f->sub(points[i].first, points[j].first));
        }
        acc = acc + basis.scaled(f->mul(points[i].second, f->inv(denom)));
    }
    return acc;
}

Poly Poly::dickson(const FieldPtr& f, std::uint32_t m, Elem a) {
    Poly d0 = constant(f, static_cast<Elem>(2 % f->p()));
    Poly d1 = monomial(f, 1);
    if (m == 0) return d0;
    if (m == 1) return d1;
    Poly x = monomial(f, 1);
    for (std::uint32_t i = 2; i <= m; ++i) {
        Poly next = x * d1 - d0.scaled(a);
        d0 = std::move(d1);
        d1 = std::move(next);
    }
    return d1;
}

std::string Poly::to_text() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c_[i] != 1) os << field_->to_text(c_[i]);
        if (i > 0) {
            if (c_[i] != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace lrc
