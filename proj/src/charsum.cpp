#include "ffp/charsum.hpp"

#include <cstdlib>

#include "ffp/numth.hpp"

namespace ffp {

static void require_odd(const Ring& F, const char* what) {
    if (!F.is_field() || F.characteristic() == 2)
        throw EvenCharacteristic(std::string(what) + " requires an odd-order field");
}

int lambda(const Ring& F, Elem a) {
    require_odd(F, "lambda");
    if (a == 0) return 0;
    return F.is_square(a) ? 1 : -1;
}

std::vector<std::int8_t> lambda_table(const Ring& F) {
    require_odd(F, "lambda_table");
    std::uint64_t q = F.size();
    std::vector<std::int8_t> t(q, -1);
    t[0] = 0;
    for (Elem b = 1; b < q; ++b) t[F.mul(b, b)] = 1;
    return t;
}

long long quad_poly_sum(const Ring& F, Elem b, Elem c) {
    auto lam = lambda_table(F);
    long long s = 0;
    for (Elem a = 0; a < F.size(); ++a)
        s += lam[F.add(F.mul(a, a), F.add(F.mul(b, a), c))];
    return s;
}

long long jacobsthal(const Ring& F, Elem a) {
    auto lam = lambda_table(F);
    long long s = 0;
    for (Elem x = 0; x < F.size(); ++x)
        s += static_cast<long long>(lam[x]) *
             lam[F.add(F.mul(x, x), a)];
    return s;
}

long long kr_parameter(std::uint64_t Q) {
    auto pr = prime_power(Q);
    if (!pr || Q % 4 != 1 || pr->first == 2)
        throw NotOneMod4("kr_parameter requires an odd prime power == 1 mod 4");
    auto [p, r] = *pr;
    if (p % 4 == 3) {
        // r is even; s = (-1)^(r/2) sqrt(Q)
        long long root = static_cast<long long>(isqrt(Q));
        return (r / 2) % 2 == 1 ? -root : root;
    }
    // p == 1 mod 4: exhaustive sweep over |s| < sqrt(Q), s == 1 mod 4, p !| s
    long long bound = static_cast<long long>(isqrt(Q));
    for (long long abs_s = 1; abs_s <= bound; ++abs_s) {
        for (long long s : {abs_s, -abs_s}) {
            if (((s % 4) + 4) % 4 != 1) continue;
            if (abs_s % static_cast<long long>(p) == 0) continue;
            std::uint64_t rest = Q - static_cast<std::uint64_t>(abs_s * abs_s);
            if (is_perfect_square(rest)) return s;
        }
    }
    throw Error("kr_parameter: no two-square representation found");
}

long long nq_bruteforce(const Ring& F) {
    require_odd(F, "nq_bruteforce");
    auto lam = lambda_table(F);
    long long count = 0;
    Elem one = F.one();
    for (Elem g = 0; g < F.size(); ++g)
        if (lam[g] == -1 && lam[F.sub(g, one)] == -1 && lam[F.add(g, one)] == -1)
            ++count;
    return count;
}

NqRecord nq_closed_form(std::uint64_t Q) {
    auto pr = prime_power(Q);
    if (!pr || pr->first == 2)
        throw EvenPrimePower("nq_closed_form requires an odd prime power");
    auto [p, r] = *pr;
    NqRecord rec;
    rec.q = Q;
    rec.p = p;
    rec.r = r;
    switch (Q % 8) {
        case 7:
            rec.case_id = 1;
            rec.closed_form = static_cast<long long>(Q - 7) / 8;
            break;
        case 3:
            rec.case_id = 2;
            rec.closed_form = static_cast<long long>(Q - 3) / 8;
            break;
        case 5:
            rec.case_id = 3;
            rec.s = kr_parameter(Q);
            rec.has_s = true;
            rec.closed_form = (static_cast<long long>(Q) - 2 * rec.s - 3) / 8;
            break;
        case 1:
            rec.s = kr_parameter(Q);
            rec.has_s = true;
            if (p % 4 == 1) {
                rec.case_id = 4;
                rec.closed_form = (static_cast<long long>(Q) + 2 * rec.s - 3) / 8;
            } else {
                rec.case_id = 5;
                // s = (-1)^(r/2) sqrt(q); N = (q + 2s - 3)/8 with the factor-2
                // coefficient (matches the proof and the worked values).
                rec.closed_form = (static_cast<long long>(Q) + 2 * rec.s - 3) / 8;
            }
            break;
        default:
            throw EvenPrimePower("nq_closed_form: even prime power");
    }
    return rec;
}

NqRecord nq_record(std::uint64_t Q) {
    NqRecord rec = nq_closed_form(Q);
    Ring F = Ring::field(rec.p, rec.r);
    rec.brute_force = nq_bruteforce(F);
    rec.match = rec.brute_force == rec.closed_form;
    return rec;
}

Sdc1Result sdc1_check(std::uint64_t Q) {
    NqRecord rec = nq_closed_form(Q);
    Sdc1Result out;
    out.nq = rec.closed_form;
    out.positive = rec.closed_form > 0;
    out.equality_condition =
        rec.p % 4 == 3 && rec.r % 2 == 0 && (rec.r / 2) % 2 == 1;
    if (Q <= 9) {
        out.bound_holds = rec.closed_form == 0;
        out.equality = false;
        return out;
    }
    // 8N >= Q - 2 sqrt(Q) - 3, exact: compare (Q - 3 - 8N)^2 against 4Q when
    // the left side is positive.
    long long lhs = static_cast<long long>(Q) - 3 - 8 * rec.closed_form;
    if (lhs <= 0) {
        out.bound_holds = true;
        out.equality = false;
    } else {
        out.bound_holds = lhs * lhs <= 4 * static_cast<long long>(Q);
        out.equality = lhs * lhs == 4 * static_cast<long long>(Q);
    }
    return out;
}

}  // namespace ffp
