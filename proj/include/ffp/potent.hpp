#ifndef FFP_POTENT_HPP
#define FFP_POTENT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ffp/ring.hpp"

namespace ffp {

struct PotentSet {
    std::uint64_t q = 0;
    std::uint64_t n = 0;            // 0 in all-potents mode
    std::vector<Elem> members;      // sorted ascending by code
};

// {x : x^n = x}, by enumeration.  If (n-1) | (q-1) the set has exactly n
// elements.
PotentSet potent_set(const Ring& F, std::uint64_t n);

// Union of C_n over n < q with (n-1) | (q-1): the non-primitive elements
// together with 0.  Cardinality q - phi(q-1).
PotentSet proper_potents(const Ring& F);

struct ClassificationRecord {
    std::uint64_t q = 0;
    std::uint64_t n = 0;            // 0 in all-potents mode
    bool all_potents_mode = false;
    bool covers = false;
    std::optional<Elem> witness;    // least-code uncovered element
};

// C_n + C_3 = F_q?  Requires 1 < n <= q and (n-1) | (q-1).
ClassificationRecord covers_npotent_plus_tripotent(const Ring& F, std::uint64_t n);

// C + C_3 = F_q with C the proper potents (two-translate form over even q).
ClassificationRecord covers_potent_plus_tripotent(const Ring& F);

// Least-code gamma with gamma-1, gamma, gamma+1 all primitive, if any.
std::optional<Elem> consecutive_primitive_triple(const Ring& F);

// Membership mask of primitive elements, indexed by code.
std::vector<bool> primitive_mask(const Ring& F);

}  // namespace ffp

#endif
