#include "ffp/ring.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "ffp/numth.hpp"

namespace ffp {
namespace {

constexpr std::uint64_t kSizeCap = 1ull << 20;

// Dense polynomials over F_p, ascending coefficients, for modulus selection.
using Fp = std::vector<std::uint64_t>;

void trim(Fp& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Fp mul_mod(const Fp& a, const Fp& b, const Fp& mod, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Fp c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    // mod is monic
    std::size_t d = mod.size() - 1;
    for (std::size_t i = c.size(); i-- > d;) {
        std::uint64_t t = c[i];
        if (t == 0) continue;
        c[i] = 0;
        for (std::size_t j = 0; j < d; ++j)
            c[i - d + j] = (c[i - d + j] + (p - mod[j] % p) % p * t) % p;
    }
    c.resize(d);
    trim(c);
    return c;
}

Fp pow_mod(Fp base, std::uint64_t e, const Fp& mod, std::uint64_t p) {
    Fp acc{1};
    while (e) {
        if (e & 1) acc = mul_mod(acc, base, mod, p);
        base = mul_mod(base, base, mod, p);
        e >>= 1;
    }
    return acc;
}

Fp poly_gcd(Fp a, Fp b, std::uint64_t p) {
    auto mod_of = [p](Fp f, Fp g) {
        trim(g);
        if (g.empty()) return f;
        std::uint64_t lead_inv = 1;
        {  // inverse of g's leading coefficient mod p
            std::uint64_t g0 = g.back() % p, e = p - 2, acc = 1;
            while (e) { if (e & 1) acc = acc * g0 % p; g0 = g0 * g0 % p; e >>= 1; }
            lead_inv = acc;
        }
        trim(f);
        while (f.size() >= g.size()) {
            std::uint64_t c = f.back() * lead_inv % p;
            std::size_t shift = f.size() - g.size();
            for (std::size_t i = 0; i < g.size(); ++i)
                f[shift + i] = (f[shift + i] + (p - g[i] * c % p)) % p;
            trim(f);
            if (f.empty()) break;
        }
        return f;
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        Fp r = mod_of(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool is_irreducible(const Fp& f, std::uint64_t p) {
    unsigned r = static_cast<unsigned>(f.size() - 1);
    if (r == 1) return true;
    // x^(p^r) == x mod f, and gcd(x^(p^(r/l)) - x, f) == 1 for prime l | r.
    Fp x{0, 1};
    Fp xp = x;
    std::vector<Fp> frob(r + 1);  // frob[i] = x^(p^i) mod f
    frob[0] = x;
    for (unsigned i = 1; i <= r; ++i) frob[i] = pow_mod(frob[i - 1], p, f, p);
    if (frob[r] != x) return false;
    for (std::uint64_t l : prime_divisors(r)) {
        Fp d = frob[r / l];
        // d - x
        if (d.size() < 2) d.resize(2, 0);
        d[1] = (d[1] + p - 1) % p;
        trim(d);
        Fp g = poly_gcd(f, d, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace

Ring Ring::field(std::uint64_t p, unsigned r) {
    if (!is_prime(p)) throw NonPrime("make_field: p is not prime");
    if (r == 0) throw DegreeZero("make_field: degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < r; ++i) {
        q *= p;
        if (q > kSizeCap) throw Overflow("make_field: p^r exceeds 2^20");
    }
    Ring R;
    R.kind_ = Kind::Field;
    R.p_ = p;
    R.r_ = r;
    R.q_ = q;
    if (r == 1) {
        R.modulus_ = {0, 1};  // x; irrelevant for prime fields
    } else {
        // Lexicographically smallest monic irreducible, by ascending code of
        // the low coefficients.
        std::uint64_t low_count = q;  // p^r combinations of c_0..c_{r-1}
        bool found = false;
        for (std::uint64_t code = 0; code < low_count; ++code) {
            Fp f(r + 1, 0);
            std::uint64_t t = code;
            for (unsigned i = 0; i < r; ++i) { f[i] = t % p; t /= p; }
            f[r] = 1;
            if (is_irreducible(f, p)) {
                R.modulus_ = f;
                found = true;
                break;
            }
        }
        assert(found);
        (void)found;
        // Reduction table: red_[i] = coefficients of x^(r+i) mod f.
        R.red_.resize(r - 1);
        Fp xr(r, 0);  // x^r mod f = -(low part of f)
        for (unsigned i = 0; i < r; ++i) xr[i] = (p - R.modulus_[i] % p) % p;
        Fp cur = xr;
        for (unsigned i = 0; i + 1 < r; ++i) {
            R.red_[i] = cur;
            Fp nxt(r, 0);  // cur * x mod f
            std::uint64_t carry = cur[r - 1];
            for (unsigned j = r - 1; j > 0; --j) nxt[j] = cur[j - 1];
            nxt[0] = 0;
            if (carry != 0)
                for (unsigned j = 0; j < r; ++j)
                    nxt[j] = (nxt[j] + xr[j] * carry) % p;
            cur = nxt;
        }
    }
    return R;
}

Ring Ring::zmod(std::uint64_t m) {
    if (m < 2) throw Error("zmod: modulus must be >= 2");
    if (m > kSizeCap) throw Overflow("zmod: modulus exceeds 2^20");
    Ring R;
    R.kind_ = Kind::Zmod;
    R.p_ = m;
    R.r_ = 1;
    R.q_ = m;
    return R;
}

Elem Ring::add(Elem a, Elem b) const {
    if (kind_ == Kind::Zmod || r_ == 1) return (a + b) % q_;
    Elem out = 0, mult = 1;
    for (unsigned i = 0; i < r_; ++i) {
        std::uint64_t ca = a % p_, cb = b % p_;
        out += (ca + cb) % p_ * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return out;
}

Elem Ring::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Ring::neg(Elem a) const {
    if (kind_ == Kind::Zmod || r_ == 1) return (q_ - a) % q_;
    Elem out = 0, mult = 1;
    for (unsigned i = 0; i < r_; ++i) {
        out += (p_ - a % p_) % p_ * mult;
        a /= p_;
        mult *= p_;
    }
    return out;
}

Elem Ring::mul(Elem a, Elem b) const {
    if (kind_ == Kind::Zmod || r_ == 1) return a * b % q_;
    std::uint64_t ca[32], cb[32], cc[64] = {0};
    for (unsigned i = 0; i < r_; ++i) { ca[i] = a % p_; a /= p_; }
    for (unsigned i = 0; i < r_; ++i) { cb[i] = b % p_; b /= p_; }
    for (unsigned i = 0; i < r_; ++i) {
        if (ca[i] == 0) continue;
        for (unsigned j = 0; j < r_; ++j) cc[i + j] += ca[i] * cb[j];
    }
    // fold x^(r+i) via precomputed tables
    std::uint64_t res[32];
    for (unsigned i = 0; i < r_; ++i) res[i] = cc[i] % p_;
    for (unsigned i = r_; i <= 2 * r_ - 2; ++i) {
        std::uint64_t t = cc[i] % p_;
        if (t == 0) continue;
        const auto& row = red_[i - r_];
        for (unsigned j = 0; j < r_; ++j) res[j] = (res[j] + row[j] * t) % p_;
    }
    Elem out = 0, mult = 1;
    for (unsigned i = 0; i < r_; ++i) {
        out += res[i] % p_ * mult;
        mult *= p_;
    }
    return out;
}

Elem Ring::pow(Elem a, std::uint64_t e) const {
    Elem acc = one();
    while (e) {
        if (e & 1) acc = mul(acc, a);
        a = mul(a, a);
        e >>= 1;
    }
    return acc;
}

bool Ring::is_unit(Elem a) const {
    if (kind_ == Kind::Field) return a != 0;
    return std::gcd(a, q_) == 1;
}

Elem Ring::inv(Elem a) const {
    if (!is_unit(a)) throw NotAUnit("inv of a non-unit");
    if (kind_ == Kind::Field) return pow(a, q_ - 2);
    // extended Euclid over Z/m
    std::int64_t m = static_cast<std::int64_t>(q_);
    std::int64_t t = 0, newt = 1, r = m, newr = static_cast<std::int64_t>(a);
    while (newr != 0) {
        std::int64_t qq = r / newr;
        std::int64_t tmp = t - qq * newt;
        t = newt;
        newt = tmp;
        tmp = r - qq * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += m;
    return static_cast<Elem>(t);
}

Elem Ring::from_int(std::int64_t v) const {
    std::int64_t m = static_cast<std::int64_t>(kind_ == Kind::Field ? p_ : q_);
    std::int64_t c = v % m;
    if (c < 0) c += m;
    if (kind_ == Kind::Zmod || r_ == 1) return static_cast<Elem>(c);
    return static_cast<Elem>(c);  // constant polynomial
}

std::vector<std::uint64_t> Ring::decode(Elem a) const {
    if (kind_ == Kind::Zmod) return {a};
    std::vector<std::uint64_t> c(r_);
    for (unsigned i = 0; i < r_; ++i) { c[i] = a % p_; a /= p_; }
    return c;
}

Elem Ring::encode(const std::vector<std::uint64_t>& coeffs) const {
    if (kind_ == Kind::Zmod) return coeffs.at(0) % q_;
    Elem out = 0, mult = 1;
    for (unsigned i = 0; i < r_; ++i) {
        out += (i < coeffs.size() ? coeffs[i] % p_ : 0) * mult;
        mult *= p_;
    }
    return out;
}

std::uint64_t Ring::order(Elem a) const {
    if (!is_unit(a)) throw NotAUnit("order of a non-unit");
    std::uint64_t group = kind_ == Kind::Field ? q_ - 1 : totient(q_);
    std::uint64_t ord = group;
    for (std::uint64_t l : prime_divisors(group))
        while (ord % l == 0 && pow(a, ord / l) == one()) ord /= l;
    return ord;
}

Elem Ring::primitive_element() const {
    if (kind_ != Kind::Field) throw NotAField("primitive_element over Z/m");
    if (q_ == 2) return 1;
    auto primes = prime_divisors(q_ - 1);
    for (Elem a = 2; a < q_; ++a) {
        bool ok = true;
        for (std::uint64_t l : primes)
            if (pow(a, (q_ - 1) / l) == one()) { ok = false; break; }
        if (ok) return a;
    }
    throw Error("no primitive element found");  // unreachable
}

bool Ring::is_square(Elem a) const {
    if (kind_ != Kind::Field) throw NotAField("is_square over Z/m");
    if (a == 0) return true;
    if (p_ == 2) return true;  // Frobenius is a bijection
    return pow(a, (q_ - 1) / 2) == one();
}

std::string Ring::name() const {
    if (kind_ == Kind::Zmod) return "Z/" + std::to_string(q_);
    if (r_ == 1) return std::to_string(p_);
    return std::to_string(p_) + "^" + std::to_string(r_);
}

Ring parse_field(const std::string& s) {
    auto caret = s.find('^');
    std::uint64_t p = std::stoull(s.substr(0, caret));
    unsigned r = caret == std::string::npos
                     ? 1u
                     : static_cast<unsigned>(std::stoul(s.substr(caret + 1)));
    return Ring::field(p, r);
}

}  // namespace ffp
