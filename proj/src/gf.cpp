#include "lrc/gf.hpp"

#include <numeric>
#include <sstream>

namespace lrc {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
        case Errc::ReducibleModulus: return "ReducibleModulus";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::DlogOfZero: return "DlogOfZero";
        case Errc::EvenCharacteristic: return "EvenCharacteristic";
        case Errc::OrderNotDividing: return "OrderNotDividing";
        case Errc::FieldTooLarge: return "FieldTooLarge";
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::DuplicateAbscissa: return "DuplicateAbscissa";
        case Errc::DegreeTooSmall: return "DegreeTooSmall";
        case Errc::NoGoodSets: return "NoGoodSets";
        case Errc::BadSplit: return "BadSplit";
        case Errc::DependentBasis: return "DependentBasis";
        case Errc::NotSubspace: return "NotSubspace";
        case Errc::BadTowerDegree: return "BadTowerDegree";
        case Errc::PreconditionFailed: return "PreconditionFailed";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::ShapeMismatch: return "ShapeMismatch";
        case Errc::DegreeMismatch: return "DegreeMismatch";
        case Errc::NotEnoughRoots: return "NotEnoughRoots";
        case Errc::NotEnoughSets: return "NotEnoughSets";
        case Errc::MissingSplit: return "MissingSplit";
        case Errc::KTooSmall: return "KTooSmall";
        case Errc::KTooLarge: return "KTooLarge";
        case Errc::VOutOfRange: return "VOutOfRange";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::RankDeficient: return "RankDeficient";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::NoWitnessFound: return "NoWitnessFound";
        case Errc::TooManyErasures: return "TooManyErasures";
        case Errc::InconsistentSurvivors: return "InconsistentSurvivors";
        case Errc::NotInCode: return "NotInCode";
        case Errc::IoError: return "IoError";
    }
    return "UnknownError";
}

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// GF(p) coefficient-vector polynomials, used only during field construction.
using PVec = std::vector<std::uint32_t>;

void pnorm(PVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod d, d monic. In-place remainder.
PVec pmod(PVec a, const PVec& d, std::uint64_t p) {
    pnorm(a);
    while (a.size() >= d.size()) {
        std::uint64_t c = a.back();
        std::size_t off = a.size() - d.size();
        for (std::size_t j = 0; j < d.size(); ++j) {
            std::uint64_t sub = (c * d[j]) % p;
            a[off + j] = static_cast<std::uint32_t>((a[off + j] + p - sub) % p);
        }
        pnorm(a);
    }
    return a;
}

bool divides(const PVec& d, const PVec& a, std::uint64_t p) { return pmod(a, d, p).empty(); }

// Irreducible over GF(p) iff no monic factor of degree <= deg/2. Trial
// division is cheap here: p^(deg/2) <= sqrt(q) <= 1024 under the order cap.
bool is_irreducible(const PVec& m, std::uint64_t p) {
    std::uint32_t deg = static_cast<std::uint32_t>(m.size() - 1);
    for (std::uint32_t d = 1; d <= deg / 2; ++d) {
        PVec cand(d + 1, 0);
        cand[d] = 1;
        while (true) {
            if (divides(cand, m, p)) return false;
            // next candidate: increment the low d coefficients base p
            std::uint32_t t = 0;
            while (t < d && ++cand[t] == p) cand[t++] = 0;
            if (t == d) break;
        }
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

FieldPtr Field::create(std::uint64_t p, std::uint32_t s,
                       std::optional<std::vector<std::uint32_t>> modulus) {
    if (!is_prime(p)) fail(Errc::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
    if (s < 1) fail(Errc::PreconditionFailed, "extension degree must be >= 1");

    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < s; ++i) {
        q *= p;
        if (q > kMaxOrder)
            fail(Errc::FieldTooLarge, "q = p^s exceeds the supported order 2^20");
    }

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->s_ = s;
    f->q_ = q;

    if (modulus) {
        auto& m = *modulus;
        if (m.size() != s + 1 || m.back() != 1)
            fail(Errc::ReducibleModulus, "modulus must be monic of degree s");
        for (auto& c : m) c %= static_cast<std::uint32_t>(p);
        if (m.back() != 1) fail(Errc::ReducibleModulus, "modulus must be monic of degree s");
        if (s > 1 && !is_irreducible(m, p))
            fail(Errc::ReducibleModulus, "supplied modulus factors over GF(p)");
        f->modulus_ = (s == 1) ? std::vector<std::uint32_t>{0, 1} : m;
    } else if (s == 1) {
        f->modulus_ = {0, 1};
    } else {
        // lexicographically least monic irreducible: scan (c_{s-1},...,c_1,c_0)
        // ascending
        PVec m(s + 1, 0);
        m[s] = 1;
        bool found = false;
        // odometer over the tuple (c_{s-1},...,c_0), most significant first
        std::vector<std::uint32_t> tup(s, 0);
        while (true) {
            for (std::uint32_t i = 0; i < s; ++i) m[s - 1 - i] = tup[i];
            if (is_irreducible(m, p)) {
                found = true;
                break;
            }
            std::int32_t t = static_cast<std::int32_t>(s) - 1;
            while (t >= 0 && ++tup[t] == p) tup[t--] = 0;
            if (t < 0) break;
        }
        if (!found) fail(Errc::PreconditionFailed, "no irreducible modulus found");
        f->modulus_ = m;
    }

    // table-free multiply, for bootstrap only
    auto mul_slow = [&](Elem a, Elem b) -> Elem {
        std::vector<std::uint64_t> da(s, 0), db(s, 0), prod(2 * s - 1, 0);
        for (std::uint32_t i = 0; i < s; ++i, a /= p) da[i] = a % p;
        for (std::uint32_t i = 0; i < s; ++i, b /= p) db[i] = b % p;
        for (std::uint32_t i = 0; i < s; ++i)
            for (std::uint32_t j = 0; j < s; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        for (std::size_t d = prod.size(); d-- > s;) {
            std::uint64_t c = prod[d];
            if (!c) continue;
            prod[d] = 0;
            for (std::uint32_t j = 0; j <= s; ++j) {
                std::uint64_t sub = (c * f->modulus_[j]) % p;
                prod[d - s + j] = (prod[d - s + j] + p - sub) % p;
            }
        }
        Elem out = 0;
        for (std::uint32_t i = s; i-- > 0;)
            out = static_cast<Elem>(out * p + prod[i]);
        return out;
    };
    auto pow_slow = [&](Elem a, std::uint64_t e) -> Elem {
        Elem r = 1;
        while (e) {
            if (e & 1) r = mul_slow(r, a);
            a = mul_slow(a, a);
            e >>= 1;
        }
        return r;
    };

    // least element of multiplicative order q-1
    if (q == 2) {
        f->generator_ = 1;
    } else {
        auto fac = prime_factors(q - 1);
        Elem gen = 0;
        for (Elem a = 1; a < q; ++a) {
            bool ok = true;
            for (auto ell : fac)
                if (pow_slow(a, (q - 1) / ell) == 1) {
                    ok = false;
                    break;
                }
            if (ok) {
                gen = a;
                break;
            }
        }
        f->generator_ = gen;
    }

    f->exp_.assign(q - 1, 1);
    f->log_.assign(q, 0);
    for (std::uint64_t i = 1; i < q - 1; ++i) {
        f->exp_[i] = mul_slow(f->exp_[i - 1], f->generator_);
        f->log_[f->exp_[i]] = static_cast<std::uint32_t>(i);
    }
    return f;
}

Elem Field::add(Elem a, Elem b) const {
    if (s_ == 1) {
        std::uint64_t r = static_cast<std::uint64_t>(a) + b;
        return static_cast<Elem>(r >= q_ ? r - q_ : r);
    }
    if (p_ == 2) return a ^ b;
    Elem out = 0, mult = 1;
    for (std::uint32_t i = 0; i < s_; ++i) {
        std::uint64_t d = (a % p_ + b % p_) % p_;
        out += static_cast<Elem>(d * mult);
        mult = static_cast<Elem>(mult * p_);
        a /= static_cast<Elem>(p_);
        b /= static_cast<Elem>(p_);
    }
    return out;
}

Elem Field::neg(Elem a) const {
    if (s_ == 1) return a ? static_cast<Elem>(q_ - a) : 0;
    if (p_ == 2) return a;
    Elem out = 0, mult = 1;
    for (std::uint32_t i = 0; i < s_; ++i) {
        std::uint64_t d = (p_ - a % p_) % p_;
        out += static_cast<Elem>(d * mult);
        mult = static_cast<Elem>(mult * p_);
        a /= static_cast<Elem>(p_);
    }
    return out;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint64_t e = static_cast<std::uint64_t>(log_[a]) + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
}

Elem Field::inv(Elem a) const {
    if (a == 0) fail(Errc::DivisionByZero, "inv(0)");
    std::uint64_t e = log_[a];
    return e == 0 ? 1 : exp_[q_ - 1 - e];
}

Elem Field::pow(Elem a, std::int64_t e) const {
    if (a == 0) {
        if (e <= 0) fail(Errc::DivisionByZero, "pow(0, e) with e <= 0");
        return 0;
    }
    std::int64_t ord = static_cast<std::int64_t>(q_ - 1);
    std::int64_t r = e % ord;
    if (r < 0) r += ord;
    std::uint64_t idx = (static_cast<std::uint64_t>(log_[a]) * static_cast<std::uint64_t>(r)) % (q_ - 1);
    return exp_[idx];
}

std::vector<Elem> Field::enumerate() const {
    std::vector<Elem> out(q_);
    for (std::uint64_t i = 0; i < q_; ++i) out[i] = static_cast<Elem>(i);
    return out;
}

std::uint64_t Field::discrete_log(Elem a) const {
    if (a == 0) fail(Errc::DlogOfZero, "discrete_log(0)");
    return log_[a];
}

int Field::quadratic_character(Elem c) const {
    if (p_ == 2) fail(Errc::EvenCharacteristic, "quadratic character needs odd characteristic");
    if (c == 0) return 0;
    return log_[c] % 2 == 0 ? 1 : -1;
}

std::vector<Elem> Field::roots_of_unity(std::uint64_t m) const {
    if (m == 0 || (q_ - 1) % m != 0)
        fail(Errc::OrderNotDividing, std::to_string(m) + " does not divide q-1 = " + std::to_string(q_ - 1));
    std::vector<Elem> out;
    out.reserve(m);
    std::uint64_t step = (q_ - 1) / m;
    for (std::uint64_t j = 0; j < m; ++j) out.push_back(exp_[(j * step) % (q_ - 1)]);
    return out;
}

std::vector<std::uint32_t> Field::decode(Elem a) const {
    std::vector<std::uint32_t> d(s_);
    for (std::uint32_t i = 0; i < s_; ++i) {
        d[i] = static_cast<std::uint32_t>(a % p_);
        a /= static_cast<Elem>(p_);
    }
    return d;
}

Elem Field::encode(const std::vector<std::uint32_t>& digits) const {
    if (digits.size() != s_) fail(Errc::ShapeMismatch, "coefficient vector has wrong length");
    Elem out = 0;
    for (std::uint32_t i = s_; i-- > 0;) {
        if (digits[i] >= p_) fail(Errc::IndexOutOfRange, "digit out of range");
        out = static_cast<Elem>(out * p_ + digits[i]);
    }
    return out;
}

std::uint64_t Field::element_order(Elem a) const {
    if (a == 0) fail(Errc::DlogOfZero, "order of 0");
    std::uint64_t k = log_[a];
    if (k == 0) return 1;
    return (q_ - 1) / std::gcd(k, q_ - 1);
}

bool Field::same(const Field& a, const Field& b) noexcept {
    return a.p_ == b.p_ && a.s_ == b.s_ && a.modulus_ == b.modulus_;
}

void Field::require_same(const FieldPtr& a, const FieldPtr& b) {
    if (!a || !b || !same(*a, *b)) fail(Errc::FieldMismatch, "operands from different fields");
}

std::string Field::to_text(Elem a) const {
    if (a == 0) return "0";
    if (a == 1) return "1";
    std::ostringstream os;
    os << "u^" << log_[a];
    return os.str();
}

}  // namespace lrc
