#include "ffp/numth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ffp {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            unsigned e = 0;
            while (n % d == 0) { n /= d; ++e; }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (auto& [p, e] : factorize(n)) out.push_back(p);
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out{1};
    for (auto& [p, e] : factorize(n)) {
        std::size_t sz = out.size();
        std::uint64_t pe = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < sz; ++j) out.push_back(out[j] * pe);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t totient(std::uint64_t n) {
    std::uint64_t t = n;
    for (auto& [p, e] : factorize(n)) t -= t / p;
    return t;
}

std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    auto f = factorize(q);
    if (f.size() != 1) return std::nullopt;
    return std::make_pair(f[0].first, f[0].second);
}

std::uint64_t isqrt(std::uint64_t n) {
    std::uint64_t s = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (s > 0 && s * s > n) --s;
    while ((s + 1) * (s + 1) <= n) ++s;
    return s;
}

bool is_perfect_square(std::uint64_t n) {
    std::uint64_t s = isqrt(n);
    return s * s == n;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

std::vector<std::uint64_t> prime_powers_upto(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q <= bound; ++q)
        if (prime_power(q)) out.push_back(q);
    return out;
}

std::vector<std::uint64_t> odd_prime_powers_upto(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 3; q <= bound; q += 2)
        if (prime_power(q)) out.push_back(q);
    return out;
}

}  // namespace ffp
