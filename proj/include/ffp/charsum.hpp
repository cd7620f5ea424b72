#ifndef FFP_CHARSUM_HPP
#define FFP_CHARSUM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ffp/ring.hpp"

namespace ffp {

// Quadratic character: +1 on nonzero squares, -1 on non-squares, 0 at 0.
// Odd-order fields only.
int lambda(const Ring& F, Elem a);

// lambda over the whole field, indexed by element code.
std::vector<std::int8_t> lambda_table(const Ring& F);

// Sum of lambda(a^2 + b*a + c) over the field.
long long quad_poly_sum(const Ring& F, Elem b, Elem c);

// Jacobsthal sum J(a) = sum of lambda(x(x^2+a)).
long long jacobsthal(const Ring& F, Elem a);

// For Q = p^r == 1 (mod 4): the unique s with Q = s^2 + t^2, p does not
// divide s, s == 1 (mod 4) (p == 1 mod 4), or s = (-1)^(r/2) sqrt(Q)
// (p == 3 mod 4).
long long kr_parameter(std::uint64_t Q);

// Number of gamma with gamma-1, gamma, gamma+1 all non-squares, by direct
// enumeration.
long long nq_bruteforce(const Ring& F);

struct NqRecord {
    std::uint64_t q = 0;
    std::uint64_t p = 0;
    unsigned r = 0;
    int case_id = 0;           // 1..5 per the q mod 8 / p mod 4 split
    long long s = 0;           // defined for cases 3,4,5
    bool has_s = false;
    long long closed_form = 0;
    long long brute_force = -1;
    bool match = false;
    // The case-5 closed form is implemented with the factor-2 coefficient on
    // sqrt(q); this tag makes the variant visible in output.
    std::string formula_variant = "case5-factor2";
};

// Closed-form count only (brute_force left unset).
NqRecord nq_closed_form(std::uint64_t Q);

// Closed form + brute force + match flag.
NqRecord nq_record(std::uint64_t Q);

struct Sdc1Result {
    long long nq = 0;
    bool bound_holds = false;  // N >= (Q - 2 sqrt(Q) - 3)/8, or N = 0 if Q <= 9
    bool equality = false;     // exact equality in the bound (Q > 9 only)
    bool equality_condition = false;  // p == 3 (mod 4) and r = 2 * odd
    bool positive = false;     // N > 0
};

Sdc1Result sdc1_check(std::uint64_t Q);

}  // namespace ffp

#endif
