#ifndef FFP_DECOMP_HPP
#define FFP_DECOMP_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ffp/matrix.hpp"
#include "ffp/ring.hpp"

namespace ffp {

// What the two summands are claimed to satisfy.  E is idempotent in every
// mode except Involution (E^2 = I); Tripotent mode relaxes U to U^3 = U.
enum class DecompMode {
    IdempotentPlusDpotent,   // E^2 = E, U^(exponent-1) = I when unit, else U^exponent = U
    TripotentPlusQpotent,    // E^2 = E, U^exponent = U (exponent 3 for tripotent U)
    InvolutionPlusQpotent,   // E^2 = I, U^(exponent-1) = I
    TorsionClean,            // E^2 = E, U^exponent = I, sign +
    WeaklyTorsionClean,      // E^2 = E, U^exponent = I, sign free
};

struct Decomposition {
    Matrix target;
    Matrix E;
    Matrix U;
    int sign = +1;  // target = U + sign * E
    DecompMode mode = DecompMode::IdempotentPlusDpotent;
    std::uint64_t exponent = 0;
    bool unit = false;      // U claimed invertible
    bool commutes = false;  // strong property claimed
    bool verified = false;
};

// Independent re-verification: plain entrywise arithmetic and repeated
// multiplication, sharing nothing with the constructors.
bool verify_decomposition(const Decomposition& d);

// A = E + U with E idempotent and U an invertible d-potent,
// d = LCM(Q-1,2)+1, over any field with Q >= 4 elements.
Decomposition decompose_idempotent_plus_invertible_dpotent(const Matrix& A);

// A = (2e - I) + 2u from the idempotent decomposition of (A+I)/2; requires
// odd Q >= 5.
Decomposition decompose_involution_plus_invertible_dpotent(const Matrix& A);

// First idempotent e (lex order over the cached enumeration) such that
// f = block - e satisfies f^expo = f and every F_Q-root of f's minimal
// polynomial lies in `spectrum` (skipped when the polynomial has an
// irreducible factor of degree > 1).  If no candidate matches, the scan is
// retried on the potency condition alone; only then SearchExhausted.
Decomposition bounded_structured_search(const Matrix& block,
                                        const std::vector<Elem>& spectrum,
                                        std::uint64_t expo);

struct SearchCertificate {
    bool found = false;  // false = exhausted-none over the declared space
    std::uint64_t search_space_size = 0;
    std::optional<Decomposition> witness;
};

// Does A = f + e or f - e for a tripotent f and idempotent e?  Exhaustive
// over all idempotents of the ambient matrix ring.
SearchCertificate verify_no_tripotent_pm_idempotent(const Matrix& A,
                                                    std::uint64_t guard = 1ull << 32);

// k-fold direct sum of the 3x3 matrix over F_3 with minimal polynomial
// x^3 - x - 1; for k = 1 it admits no tripotent +/- idempotent presentation.
Matrix f3_direct_sum_counterexample(unsigned k);

// The same 3x3 companion pattern over an arbitrary field.
Matrix counterexample_matrix(const Ring& F);

// --- element-level torsion-clean decompositions -------------------------

struct ElemDecomposition {
    Elem target = 0;
    Elem e = 0;  // idempotent
    Elem u = 0;  // torsion unit, u^n = 1
    int sign = +1;  // target = u + sign * e
    std::uint64_t n = 0;
};

struct ElementCoverage {
    bool all_covered = false;
    std::optional<Elem> witness;  // least-code uncovered element
    std::vector<ElemDecomposition> decomps;  // one per covered element
};

// Every r in R equals u + e (plain) or u +/- e (weak) with u^n = 1, e^2 = e?
ElementCoverage element_torsion_clean(const Ring& R, std::uint64_t n);
ElementCoverage element_weakly_torsion_clean(const Ring& R, std::uint64_t n);

// Exponent of the unit group of R, by enumeration.
std::uint64_t unit_group_exponent(const Ring& R);

// Least n making every element (weakly) n-torsion clean; throws NoSuchN if
// nothing up to the unit-group exponent works.
std::uint64_t minimal_torsion_clean_n(const Ring& R);
std::uint64_t minimal_weakly_torsion_clean_n(const Ring& R);

// Lemma on commuting weak decompositions: (a^n-1)((a -sign- 1)^n-1) = 0.
// Throws NonCommutingParts unless the parts commute (always, in a
// commutative ring) and the decomposition is valid.
bool strong_identity_check(const Ring& R, Elem a, const ElemDecomposition& d);

// --- Z/p^2 ----------------------------------------------------------------

// Every element of Z/p^2 a sum of an idempotent and a q-potent?  Pure
// enumeration; must agree with p(p-1) | q-1.
bool zp2_element_coverage(std::uint64_t p, std::uint64_t q);

// Constructive case split for 2x2 matrices over Z/p^2 when p(p-1) | q-1;
// throws HypothesisViolated otherwise.  Certificate: E^2 = E, P^q = P,
// A = E + P.
Decomposition zp2_matrix2_decompose(const Matrix& A, std::uint64_t p,
                                    std::uint64_t q);

// --- matrix-ring torsion-clean exponents ----------------------------------

// Closed form LCM(q-1, q^2-1, ..., q^n-1) * p^t with p^t the least power of
// the characteristic >= n.
std::uint64_t unit_group_exponent_matrix_ring(const Ring& F, unsigned n);

// Oracle: lcm of the orders of all invertible matrices in M_n(R).
std::uint64_t unit_group_exponent_matrix_exhaustive(const Ring& R, unsigned n,
                                                    std::uint64_t guard = 1ull << 32);

// Does the closed-form exponent divide q-1?  (The commuting-decomposition
// criterion for M_n(F).)
bool th_id_q_check(const Ring& F, unsigned n, std::uint64_t q);

// Is every A in M_n(F) a sum of an idempotent and a unit u with u^d = 1?
// Enumerates matrices up to similarity (invariant-factor signature memo).
bool matrix_ring_torsion_clean(const Ring& F, unsigned n, std::uint64_t d,
                               std::uint64_t guard = 1ull << 32);

// Least such d (up to the unit-group exponent of M_n(F)).
std::uint64_t matrix_ring_minimal_torsion_clean(const Ring& F, unsigned n,
                                                std::uint64_t guard = 1ull << 32);

struct F2kRange {
    std::uint64_t d = 0;        // minimal torsion-clean exponent of M_n(F_2^k)
    bool lower_divides = false; // (2^k - 1) | d
    bool upper_ok = false;      // d <= 2^(k+1) - 2
};
F2kRange f2k_torsion_clean_range_check(unsigned k, unsigned n);

// For commutative R of even characteristic <= 4: weakly 2^n-torsion clean
// iff 2^n-torsion clean, plus the rewrite u - e = (u - 2e) + e with
// (u-2e)^(2^n) = u^(2^n) checked elementwise.  Throws WrongCharacteristic.
bool weakly_vs_plain_2n_torsion(const Ring& R, unsigned n);

}  // namespace ffp

#endif
