#include "lrc/goodpoly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lrc {

namespace {

void require_scan_budget(const FieldPtr& f) {
    if (f->q() > Field::kMaxOrder)
        fail(Errc::FieldTooLarge, "exhaustive field scan refuses q > 2^20");
}

}  // namespace

std::map<std::uint32_t, std::uint64_t> compute_Nf(const Poly& f) {
    if (f.degree() < 2) fail(Errc::DegreeTooSmall, "N_f needs deg f >= 2");
    const auto& F = f.field();
    require_scan_budget(F);
    // |roots of f + t| = |f^-1(-t)|, so the histogram of fiber sizes is the
    // histogram of root counts over all shifts.
    std::vector<std::uint32_t> fiber_size(F->q(), 0);
    for (std::uint64_t a = 0; a < F->q(); ++a) ++fiber_size[f.eval(static_cast<Elem>(a))];
    std::map<std::uint32_t, std::uint64_t> hist;
    hist[0] = 0;
    for (std::uint64_t v = 0; v < F->q(); ++v) ++hist[fiber_size[v]];
    return hist;
}

std::uint64_t compute_G(const Poly& f) {
    auto hist = compute_Nf(f);
    auto it = hist.find(static_cast<std::uint32_t>(f.degree()));
    return it == hist.end() ? 0 : it->second;
}

std::vector<std::pair<Elem, std::vector<Elem>>> fibers(const Poly& g) {
    if (g.degree() < 1) fail(Errc::DegreeTooSmall, "fibers of a constant polynomial");
    const auto& F = g.field();
    require_scan_budget(F);
    std::map<Elem, std::vector<Elem>> by_value;
    for (std::uint64_t a = 0; a < F->q(); ++a)
        by_value[g.eval(static_cast<Elem>(a))].push_back(static_cast<Elem>(a));
    return {by_value.begin(), by_value.end()};
}

std::vector<std::pair<Elem, std::vector<Elem>>> good_sets(const Poly& g) {
    auto fb = fibers(g);
    std::vector<std::pair<Elem, std::vector<Elem>>> out;
    for (auto& [v, pre] : fb)
        if (v != 0 && pre.size() == static_cast<std::size_t>(g.degree())) out.emplace_back(v, pre);
    return out;
}

GoodPolyCert cert_from_poly(const Poly& g, std::optional<std::pair<Poly, Poly>> split) {
    if (g.degree() < 1) fail(Errc::DegreeTooSmall, "certificate needs a nonconstant polynomial");
    auto gs = good_sets(g);
    if (gs.empty()) fail(Errc::NoGoodSets, "polynomial has no full nonzero fibers");
    GoodPolyCert cert{g, {}, {}, g.distinct_roots(), std::nullopt};
    for (auto& [v, pre] : gs) {
        cert.constants.push_back(v);
        cert.sets.push_back(pre);
    }
    if (split) {
        if (!(split->second * split->first == g))
            fail(Errc::BadSplit, "g2 * g1 != g");
        cert.split = std::move(split);
    }
    return cert;
}

GoodPolyCert with_split(const GoodPolyCert& cert, Poly g1, Poly g2) {
    if (!(g2 * g1 == cert.g)) fail(Errc::BadSplit, "g2 * g1 != g");
    GoodPolyCert out = cert;
    out.split = std::make_pair(std::move(g1), std::move(g2));
    return out;
}

GoodPolyCert construct_multiplicative(const FieldPtr& f, std::uint64_t m) {
    if (m < 2 || (f->q() - 1) % m != 0)
        fail(Errc::OrderNotDividing, "need m >= 2 and m | q-1 (m = " + std::to_string(m) + ")");
    return cert_from_poly(Poly::monomial(f, static_cast<std::uint32_t>(m)));
}

namespace {

// GF(p)-additive span of the given elements; error if they are dependent.
std::vector<Elem> additive_span(const FieldPtr& f, const std::vector<Elem>& basis) {
    std::set<Elem> span{0};
    for (Elem b : basis) {
        if (span.count(b)) fail(Errc::DependentBasis, "basis element already in the span");
        std::set<Elem> next;
        for (Elem h : span) {
            Elem acc = h;
            next.insert(acc);
            for (std::uint64_t c = 1; c < f->p(); ++c) {
                acc = f->add(acc, b);
                next.insert(acc);
            }
        }
        span = std::move(next);
    }
    std::uint64_t expect = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) expect *= f->p();
    if (span.size() != expect) fail(Errc::DependentBasis, "basis is GF(p)-linearly dependent");
    return {span.begin(), span.end()};
}

Poly subset_product(const FieldPtr& f, const std::vector<Elem>& pts) {
    Poly g = Poly::one(f);
    for (Elem h : pts) g = g * Poly::linear_root(f, h);
    return g;
}

}  // namespace

GoodPolyCert construct_additive(const FieldPtr& f, const std::vector<Elem>& basis) {
    if (basis.empty()) fail(Errc::DependentBasis, "empty basis");
    auto H = additive_span(f, basis);
    if (H.size() >= f->q()) fail(Errc::PreconditionFailed, "need |H| < q");
    return cert_from_poly(subset_product(f, H));
}

GoodPolyCert construct_union_cosets(const FieldPtr& f, std::uint32_t l,
                                    const std::vector<Elem>& basis, std::uint64_t m) {
    if (l == 0 || f->s() % l != 0)
        fail(Errc::BadTowerDegree, "need l | s (l = " + std::to_string(l) + ", s = " + std::to_string(f->s()) + ")");
    std::uint64_t pl = 1;
    for (std::uint32_t i = 0; i < l; ++i) pl *= f->p();
    if (m < 2 || (pl - 1) % m != 0)
        fail(Errc::OrderNotDividing, "need m >= 2 and m | p^l - 1");

    auto H = additive_span(f, basis);
    if (H.size() < 2 || H.size() >= f->q()) fail(Errc::PreconditionFailed, "need 2 <= |H| < q");

    // closure of H under multiplication by GF(p^l): one primitive scalar of
    // the subfield suffices
    Elem omega = f->pow(f->generator(), static_cast<std::int64_t>((f->q() - 1) / (pl - 1)));
    std::set<Elem> Hset(H.begin(), H.end());
    for (Elem h : H)
        if (!Hset.count(f->mul(omega, h)))
            fail(Errc::NotSubspace, "span is not closed under GF(p^l)-multiplication");

    auto alphas = f->roots_of_unity(m);
    Poly g = Poly::one(f);
    for (Elem a : alphas)
        for (Elem h : H) g = g * Poly(f, {f->add(h, a), 1});

    // shift by the constant on H so the roots become exactly H
    Elem c0 = g.eval(H.front());
    Poly shifted = g - Poly::constant(f, c0);
    auto cert = cert_from_poly(shifted);

    std::uint64_t expect_L = (f->q() - H.size()) / (m * H.size());
    if (cert.L() != expect_L || cert.roots != H)
        fail(Errc::PreconditionFailed, "coset-union structure not realized (internal)");
    return cert;
}

GoodPolyCert construct_dickson(const FieldPtr& f, std::uint32_t m, Elem a) {
    if (f->p() != 2) fail(Errc::PreconditionFailed, "dickson family needs even q");
    if (m <= 2 || m % 2 == 0) fail(Errc::PreconditionFailed, "need odd m > 2");
    if (f->q() % m != m - 1) fail(Errc::PreconditionFailed, "need q = -1 mod m");
    if (a == 0) fail(Errc::PreconditionFailed, "need a != 0");

    Poly dm = Poly::dickson(f, m, a);
    Poly g = dm - Poly::constant(f, dm.eval(0));
    auto cert = cert_from_poly(g);

    std::uint64_t expect_L = f->q() / (2 * m);
    if (cert.L() != expect_L || cert.roots.size() != (m + 1) / 2)
        fail(Errc::PreconditionFailed, "dickson structure not realized (internal)");
    return cert;
}

GoodPolyCert construct_cubic_shifted(const FieldPtr& f, Elem a1) {
    if (f->q() % 6 != 5) fail(Errc::PreconditionFailed, "need q = 5 mod 6");
    if (f->quadratic_character(a1) != 1)
        fail(Errc::PreconditionFailed, "need a1 a nonzero square");

    Poly cubic(f, {0, a1, 0, 1});
    auto fb = fibers(cubic);
    std::vector<bool> covered(f->q(), false);
    std::uint64_t full = 0;
    for (auto& [v, pre] : fb)
        if (pre.size() == 3) {
            ++full;
            for (Elem e : pre) covered[e] = true;
        }
    if (full != (f->q() + 1) / 6)
        fail(Errc::PreconditionFailed, "full-fiber count differs from (q+1)/6 (internal)");

    Elem x0 = 0;
    while (covered[x0]) ++x0;
    Poly g = cubic - Poly::constant(f, cubic.eval(x0));
    auto [g2, rem] = Poly::divmod(g, Poly::linear_root(f, x0));
    if (!rem.is_zero()) fail(Errc::PreconditionFailed, "x0 is not a root of g (internal)");
    return cert_from_poly(g, std::make_pair(Poly::linear_root(f, x0), g2));
}

CertReport verify_cert(const GoodPolyCert& cert) {
    auto violation = [](const std::string& s) { return CertReport{false, s}; };
    std::ostringstream os;
    const auto& g = cert.g;
    if (g.degree() < 1) return violation("g is constant");
    const std::size_t m = static_cast<std::size_t>(g.degree());
    if (cert.sets.size() != cert.constants.size()) return violation("sets/constants length mismatch");
    if (cert.sets.empty()) return violation("no sets");

    std::set<Elem> seen;
    for (std::size_t i = 0; i < cert.sets.size(); ++i) {
        const auto& A = cert.sets[i];
        if (A.size() != m) {
            os << "SetWrongSize: set " << i << " has " << A.size() << " elements, deg g = " << m;
            return violation(os.str());
        }
        if (cert.constants[i] == 0) {
            os << "ZeroConstant: set " << i;
            return violation(os.str());
        }
        for (Elem a : A) {
            if (!seen.insert(a).second) {
                os << "SetsNotDisjoint: element " << a << " repeated (set " << i << ")";
                return violation(os.str());
            }
            if (g.eval(a) != cert.constants[i]) {
                os << "SetsNotFibers: g(" << a << ") != recorded constant of set " << i;
                return violation(os.str());
            }
        }
    }
    // a size-deg(g) set with constant value is automatically the full fiber
    std::set<Elem> rset;
    for (Elem b : cert.roots) {
        if (!rset.insert(b).second) return violation("RootsNotDistinct");
        if (g.eval(b) != 0) {
            os << "NotARoot: g(" << b << ") != 0";
            return violation(os.str());
        }
        if (seen.count(b)) {
            os << "RootInsideSet: " << b;
            return violation(os.str());
        }
    }
    if (cert.split) {
        if (!(cert.split->second * cert.split->first == g)) return violation("BadSplit: g2*g1 != g");
    }
    return CertReport{};
}

}  // namespace lrc
