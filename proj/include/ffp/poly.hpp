#ifndef FFP_POLY_HPP
#define FFP_POLY_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "ffp/ring.hpp"

namespace ffp {

// Dense polynomial over a ring, ascending coefficients.
class Poly {
public:
    explicit Poly(const Ring& R) : R_(&R) {}
    Poly(const Ring& R, std::vector<Elem> coeffs);
    // Coefficients given as integers (handles negatives), ascending.
    static Poly from_ints(const Ring& R, std::initializer_list<std::int64_t> coeffs);
    static Poly x(const Ring& R) { return Poly(R, {0, 1}); }

    const Ring& ring() const { return *R_; }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == R_->one(); }
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<Elem>& coeffs() const { return c_; }

    // Companion-matrix trace of a monic degree-n polynomial: a_{n-1} where
    // the polynomial is x^n - sum a_i x^i.
    Elem trace() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    Elem eval(Elem a) const;

    std::string str() const;  // "x^3 + 4x + 4" style

private:
    const Ring* R_;
    std::vector<Elem> c_;
    void trim();
};

// Field-only polynomial arithmetic.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& b);
Poly poly_gcd(Poly a, Poly b);          // monic
Poly poly_lcm(const Poly& a, const Poly& b);
Poly poly_make_monic(const Poly& a);
bool poly_divides(const Poly& a, const Poly& b);  // a | b

// Roots in the base field, with multiplicity stripped; also reports whether
// the polynomial splits into linear factors over the base field.
struct RootReport {
    std::vector<Elem> roots;
    bool splits = false;
};
RootReport field_roots(const Poly& f);

}  // namespace ffp

#endif
