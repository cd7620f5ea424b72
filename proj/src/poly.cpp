#include "ffp/poly.hpp"

namespace ffp {

Poly::Poly(const Ring& R, std::vector<Elem> coeffs) : R_(&R), c_(std::move(coeffs)) {
    trim();
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::from_ints(const Ring& R, std::initializer_list<std::int64_t> coeffs) {
    std::vector<Elem> c;
    c.reserve(coeffs.size());
    for (std::int64_t v : coeffs) c.push_back(R.from_int(v));
    return Poly(R, std::move(c));
}

Elem Poly::trace() const {
    if (!is_monic()) throw NotMonic("trace of a non-monic polynomial");
    if (degree() < 1) throw Error("trace needs degree >= 1");
    return R_->neg(coeff(static_cast<std::size_t>(degree()) - 1));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Elem> c(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = R_->add(coeff(i), o.coeff(i));
    return Poly(*R_, std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Elem> c(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = R_->sub(coeff(i), o.coeff(i));
    return Poly(*R_, std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(*R_);
    std::vector<Elem> c(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            c[i + j] = R_->add(c[i + j], R_->mul(c_[i], o.c_[j]));
    return Poly(*R_, std::move(c));
}

Elem Poly::eval(Elem a) const {
    Elem acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = R_->add(R_->mul(acc, a), c_[i]);
    return acc;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!s.empty()) s += " + ";
        if (i == 0 || c_[i] != 1) s += std::to_string(c_[i]);
        if (i >= 1) {
            s += "x";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    const Ring& R = a.ring();
    if (!R.is_field()) throw NotAField("poly_divmod over a non-field");
    if (b.is_zero()) throw Error("poly division by zero");
    std::vector<Elem> rem = a.coeffs();
    int db = b.degree();
    Elem lead_inv = R.inv(b.coeff(static_cast<std::size_t>(db)));
    std::vector<Elem> quo(a.degree() >= db ? a.degree() - db + 1 : 0, 0);
    for (int i = a.degree(); i >= db; --i) {
        Elem c = R.mul(rem[static_cast<std::size_t>(i)], lead_inv);
        if (c == 0) continue;
        quo[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j) {
            auto idx = static_cast<std::size_t>(i - db + j);
            rem[idx] = R.sub(rem[idx], R.mul(c, b.coeff(static_cast<std::size_t>(j))));
        }
    }
    return {Poly(R, std::move(quo)), Poly(R, std::move(rem))};
}

Poly poly_mod(const Poly& a, const Poly& b) { return poly_divmod(a, b).second; }

Poly poly_make_monic(const Poly& a) {
    if (a.is_zero()) return a;
    const Ring& R = a.ring();
    Elem inv = R.inv(a.coeff(static_cast<std::size_t>(a.degree())));
    std::vector<Elem> c = a.coeffs();
    for (auto& v : c) v = R.mul(v, inv);
    return Poly(R, std::move(c));
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_mod(a, b);
        a = b;
        b = r;
    }
    return poly_make_monic(a);
}

Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.ring());
    Poly g = poly_gcd(a, b);
    return poly_make_monic(poly_divmod(a * b, g).first);
}

bool poly_divides(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.is_zero();
    return poly_mod(b, a).is_zero();
}

RootReport field_roots(const Poly& f) {
    const Ring& R = f.ring();
    if (!R.is_field()) throw NotAField("field_roots over a non-field");
    RootReport out;
    Poly rest = f;
    for (Elem a = 0; a < R.size() && rest.degree() > 0; ++a) {
        if (rest.eval(a) != 0) continue;
        out.roots.push_back(a);
        Poly lin = Poly(R, {R.neg(a), R.one()});
        while (rest.degree() > 0 && rest.eval(a) == 0)
            rest = poly_divmod(rest, lin).first;
    }
    out.splits = rest.degree() <= 0;
    return out;
}

}  // namespace ffp
