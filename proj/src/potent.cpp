#include "ffp/potent.hpp"

#include <algorithm>

#include "ffp/numth.hpp"

namespace ffp {

PotentSet potent_set(const Ring& F, std::uint64_t n) {
    if (n < 2) throw Error("potent_set: n must be >= 2");
    PotentSet out;
    out.q = F.size();
    out.n = n;
    for (Elem x = 0; x < F.size(); ++x)
        if (F.pow(x, n) == x) out.members.push_back(x);
    return out;
}

std::vector<bool> primitive_mask(const Ring& F) {
    std::uint64_t q = F.size();
    std::vector<bool> prim(q, false);
    if (q == 2) {
        prim[1] = true;  // order q-1 = 1
        return prim;
    }
    // g^j is primitive iff gcd(j, q-1) = 1.
    Elem g = F.primitive_element();
    Elem x = F.one();
    for (std::uint64_t j = 0; j < q - 1; ++j) {
        if (gcd_u64(j, q - 1) == 1) prim[x] = true;
        x = F.mul(x, g);
    }
    return prim;
}

PotentSet proper_potents(const Ring& F) {
    if (F.size() <= 2) throw Error("proper_potents requires q > 2");
    PotentSet out;
    out.q = F.size();
    out.n = 0;
    auto prim = primitive_mask(F);
    for (Elem x = 0; x < F.size(); ++x)
        if (!prim[x]) out.members.push_back(x);
    return out;
}

namespace {

ClassificationRecord coverage(const Ring& F, const std::vector<Elem>& base,
                              const std::vector<Elem>& shifts) {
    ClassificationRecord rec;
    rec.q = F.size();
    std::vector<bool> hit(F.size(), false);
    for (Elem b : base)
        for (Elem s : shifts) hit[F.add(b, s)] = true;
    for (Elem x = 0; x < F.size(); ++x)
        if (!hit[x]) {
            rec.covers = false;
            rec.witness = x;
            return rec;
        }
    rec.covers = true;
    return rec;
}

}  // namespace

ClassificationRecord covers_npotent_plus_tripotent(const Ring& F, std::uint64_t n) {
    std::uint64_t q = F.size();
    if (n <= 1 || n > q || (q - 1) % (n - 1) != 0)
        throw DivisibilityViolation("covers_npotent_plus_tripotent: need 1 < n <= q, (n-1)|(q-1)");
    auto cn = potent_set(F, n);
    auto c3 = potent_set(F, 3);
    auto rec = coverage(F, cn.members, c3.members);
    rec.n = n;
    return rec;
}

ClassificationRecord covers_potent_plus_tripotent(const Ring& F) {
    auto c = proper_potents(F);
    std::vector<Elem> shifts;
    if (F.characteristic() == 2) {
        shifts = {F.zero(), F.one()};  // C_3 = C_2 over even q
    } else {
        shifts = {F.zero(), F.one(), F.neg(F.one())};
    }
    auto rec = coverage(F, c.members, shifts);
    rec.all_potents_mode = true;
    return rec;
}

std::optional<Elem> consecutive_primitive_triple(const Ring& F) {
    if (F.characteristic() == 2) throw EvenCharacteristic("consecutive_primitive_triple: odd q only");
    auto prim = primitive_mask(F);
    Elem one = F.one();
    for (Elem g = 0; g < F.size(); ++g)
        if (prim[g] && prim[F.sub(g, one)] && prim[F.add(g, one)]) return g;
    return std::nullopt;
}

}  // namespace ffp
