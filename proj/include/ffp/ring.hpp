#ifndef FFP_RING_HPP
#define FFP_RING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffp/errors.hpp"

namespace ffp {

// Residues are encoded as integers in 0..|R|-1.  For F_{p^r} the code is
// sum c_i p^i over the coefficients of the residue polynomial; for Z/m it is
// the residue itself.
using Elem = std::uint64_t;

// A finite field F_{p^r} or a residue ring Z/m.  Immutable after
// construction; safe for any number of concurrent readers.
class Ring {
public:
    enum class Kind { Field, Zmod };

    // Canonical field: modulus is the lexicographically smallest monic
    // irreducible polynomial of degree r over F_p (ascending-coefficient
    // integer order).  Requires p prime, r >= 1, p^r <= 2^20.
    static Ring field(std::uint64_t p, unsigned r);
    static Ring zmod(std::uint64_t m);

    Kind kind() const { return kind_; }
    bool is_field() const { return kind_ == Kind::Field; }
    std::uint64_t size() const { return q_; }
    std::uint64_t characteristic() const { return p_; }
    unsigned degree() const { return r_; }
    // Ascending coefficients, length r+1, monic.  Fields only.
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }

    Elem zero() const { return 0; }
    Elem one() const { return q_ == 1 ? 0 : 1; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem mul(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem inv(Elem a) const;  // throws NotAUnit
    Elem pow(Elem a, std::uint64_t e) const;
    bool is_unit(Elem a) const;

    // Embeds an integer (possibly negative) into the ring.
    Elem from_int(std::int64_t v) const;

    // Coefficient view of a field element (length r, base-p digits of the
    // code).  For Z/m returns the single residue.
    std::vector<std::uint64_t> decode(Elem a) const;
    Elem encode(const std::vector<std::uint64_t>& coeffs) const;

    // Least-code element of multiplicative order q-1.  Fields only.
    Elem primitive_element() const;

    // a = b^2 for some b.  Defined for every ring element; over even
    // characteristic squaring is a bijection, so the answer is always true.
    bool is_square(Elem a) const;

    // Multiplicative order of a unit.
    std::uint64_t order(Elem a) const;

    std::string name() const;  // "5", "3^2", "Z/9"

    bool operator==(const Ring& other) const {
        return kind_ == other.kind_ && q_ == other.q_ && p_ == other.p_ &&
               modulus_ == other.modulus_;
    }

private:
    Ring() = default;

    Kind kind_ = Kind::Zmod;
    std::uint64_t p_ = 0;  // characteristic (= m for Z/m)
    unsigned r_ = 1;
    std::uint64_t q_ = 0;  // cardinality
    std::vector<std::uint64_t> modulus_;
    // x^(r+i) mod modulus for i = 0..r-2, used in reduction.
    std::vector<std::vector<std::uint64_t>> red_;
};

// Parses "p" or "p^r" into the canonical field.
Ring parse_field(const std::string& s);

}  // namespace ffp

#endif
