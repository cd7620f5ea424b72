#include "ffp/decomp.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ffp/numth.hpp"

namespace ffp {

// ---------------------------------------------------------------------------
// Independent verifier: nothing below reuses Matrix::pow or the constructors'
// algebra beyond the elementary ring operations.

namespace {

Matrix naive_mul(const Matrix& A, const Matrix& B) {
    const Ring& R = A.ring();
    unsigned n = A.dim();
    Matrix out(R, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            Elem s = 0;
            for (unsigned k = 0; k < n; ++k)
                s = R.add(s, R.mul(A.at(i, k), B.at(k, j)));
            out.at(i, j) = s;
        }
    return out;
}

Matrix naive_power(const Matrix& A, std::uint64_t e) {
    Matrix acc = Matrix::identity(A.ring(), A.dim());
    for (std::uint64_t i = 0; i < e; ++i) acc = naive_mul(acc, A);
    return acc;
}

}  // namespace

bool verify_decomposition(const Decomposition& d) {
    const Ring& R = d.target.ring();
    unsigned n = d.target.dim();
    // target = U + sign * E, entry by entry
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            Elem rhs = d.sign > 0 ? R.add(d.U.at(i, j), d.E.at(i, j))
                                  : R.sub(d.U.at(i, j), d.E.at(i, j));
            if (d.target.at(i, j) != rhs) return false;
        }
    Matrix I = Matrix::identity(R, n);
    // E predicate
    Matrix EE = naive_mul(d.E, d.E);
    if (d.mode == DecompMode::InvolutionPlusQpotent) {
        if (EE != I) return false;
    } else if (d.mode == DecompMode::TripotentPlusQpotent) {
        if (naive_mul(EE, d.E) != d.E) return false;
    } else {
        if (EE != d.E) return false;
    }
    // U predicate
    if (d.exponent == 0) return false;
    switch (d.mode) {
        case DecompMode::TorsionClean:
        case DecompMode::WeaklyTorsionClean:
            if (naive_power(d.U, d.exponent) != I) return false;
            break;
        case DecompMode::InvolutionPlusQpotent:
            if (naive_power(d.U, d.exponent - 1) != I) return false;
            break;
        default:
            if (d.unit) {
                if (naive_power(d.U, d.exponent - 1) != I) return false;
            } else {
                if (naive_power(d.U, d.exponent) != d.U) return false;
            }
    }
    if (d.commutes && naive_mul(d.E, d.U) != naive_mul(d.U, d.E)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Structured search over cached idempotents.

Decomposition bounded_structured_search(const Matrix& block,
                                        const std::vector<Elem>& spectrum,
                                        std::uint64_t expo) {
    const Ring& R = block.ring();
    unsigned n = block.dim();
    const auto& candidates = idempotents_cached(R, n);
    auto attempt = [&](bool check_spectrum) -> std::optional<Decomposition> {
        for (const Matrix& e : candidates) {
            Matrix f = block - e;
            if (f.pow(expo) != f) continue;
            if (check_spectrum && !spectrum.empty()) {
                Poly m = minimal_polynomial(f);
                RootReport rr = field_roots(m);
                if (rr.splits) {
                    bool ok = true;
                    for (Elem root : rr.roots)
                        if (std::find(spectrum.begin(), spectrum.end(), root) ==
                            spectrum.end()) {
                            ok = false;
                            break;
                        }
                    if (!ok) continue;
                }
                // non-split minimal polynomial: potency alone suffices
            }
            Decomposition d{block, e, f, +1, DecompMode::IdempotentPlusDpotent,
                            expo, false, false, false};
            d.verified = verify_decomposition(d);
            return d;
        }
        return std::nullopt;
    };
    if (auto d = attempt(true)) return *d;
    if (auto d = attempt(false)) return *d;  // relaxed retry
    std::ostringstream os;
    os << "structured search exhausted " << candidates.size()
       << " idempotents over " << R.name() << ", block size " << n;
    throw SearchExhausted(os.str());
}

// ---------------------------------------------------------------------------
// Theorem: every A over F_Q (Q >= 4) is idempotent + invertible d-potent,
// d = LCM(Q-1,2)+1.  Per-block pipeline below; E/U returned in block
// coordinates.

namespace {

struct BlockSummands {
    Matrix E;
    Matrix U;
};

// Q >= 5, block size >= 2.
BlockSummands split_block_generic(const Matrix& block, std::uint64_t d) {
    const Ring& R = block.ring();
    std::uint64_t Q = R.size();
    unsigned n = block.dim();
    Matrix I = Matrix::identity(R, n);

    // primitive xi with xi != 1 - xi (hardwired to 3 when Q = 5)
    Elem xi;
    if (Q == 5) {
        xi = R.from_int(3);
    } else {
        xi = R.primitive_element();
        if (R.sub(R.one(), xi) == xi) {
            for (Elem c = xi + 1; c < Q; ++c)
                if (R.order(c) + 1 == Q && R.sub(R.one(), c) != c) {
                    xi = c;
                    break;
                }
        }
    }
    // least-code k with k not in {1, 0, -1, -2, xi, 1-xi}
    std::vector<Elem> forbidden = {R.one(),          R.zero(),
                                   R.neg(R.one()),   R.neg(R.from_int(2)),
                                   xi,               R.sub(R.one(), xi)};
    Elem k = 0;
    while (std::find(forbidden.begin(), forbidden.end(), k) != forbidden.end()) ++k;

    Matrix M = block.plus_scalar(R.neg(k));
    Rcf rc = rational_canonical_form(M);
    if (rc.invariant_factors.size() != 1)
        throw Error("shifted companion block is not cyclic");
    const Poly& p1 = rc.invariant_factors[0];
    Matrix C1 = companion(p1);
    Matrix Vp = *inverse(rc.V);  // M = Vp C1 Vp^{-1}
    const Matrix& VpInv = rc.V;
    Elem t = p1.trace();

    if (t != R.sub(R.one(), k)) {
        Matrix e(R, n), f(R, n);
        if (t == R.one()) {
            auto dd = bounded_structured_search(
                C1, {R.neg(R.one()), R.zero(), R.one()}, 3);
            e = dd.E;
            f = dd.U;
        } else if (t == R.zero()) {
            bool done = false;
            if (n == 2) {
                // explicit 2x2 splitting for trace-zero blocks
                Elem om = R.sub(R.one(), xi);  // 1 - xi
                e = Matrix(R, 2);
                e.at(0, 0) = om;
                e.at(0, 1) = R.mul(xi, om);
                e.at(1, 0) = R.one();
                e.at(1, 1) = xi;
                f = C1 - e;
                done = is_idempotent(e) && f.pow(Q) == f;
            }
            if (!done) {
                auto dd = bounded_structured_search(
                    C1, {R.neg(R.one()), R.zero(), R.neg(xi), R.sub(xi, R.one())}, Q);
                e = dd.E;
                f = dd.U;
            }
        } else {
            auto dd = bounded_structured_search(
                C1, {R.neg(R.one()), R.zero(), R.sub(t, R.one())}, d);
            e = dd.E;
            f = dd.U;
        }
        Matrix Eb = Vp * e * VpInv;
        Matrix Ub = Vp * (f.plus_scalar(k)) * VpInv;
        return {Eb, Ub};
    }

    // trace = 1 - k: pass through the negated block
    Matrix N = -C1;
    Rcf rc2 = rational_canonical_form(N);
    if (rc2.invariant_factors.size() != 1)
        throw Error("negated block is not cyclic");
    Matrix C2 = companion(rc2.invariant_factors[0]);
    Matrix W = *inverse(rc2.V);
    const Matrix& WInv = rc2.V;
    auto dd = bounded_structured_search(
        C2, {R.neg(R.one()), R.zero(), R.sub(k, R.from_int(2))}, d);
    // C1 + kI = W(I - e)W^{-1} + W(-f + (k-1)I)W^{-1}
    Matrix ePrime = W * (I - dd.E) * WInv;
    Matrix uPrime = W * ((-dd.U).plus_scalar(R.sub(k, R.one()))) * WInv;
    Matrix Eb = Vp * ePrime * VpInv;
    Matrix Ub = Vp * uPrime * VpInv;
    return {Eb, Ub};
}

// Q = 4, block size >= 2.
BlockSummands split_block_f4(const Matrix& block) {
    const Ring& R = block.ring();
    unsigned n = block.dim();
    Elem xi = R.primitive_element();
    Elem xi1 = R.add(xi, R.one());
    Elem t = companion_poly(block).trace();

    auto two_by_two = [&](std::int64_t a00, std::int64_t a01, std::int64_t a10,
                          std::int64_t a11) {
        return Matrix::from_ints(R, 2, {a00, a01, a10, a11});
    };
    Matrix Alow = two_by_two(0, 0, 1, 1);   // the repeating idempotent cell
    Matrix Ahook = two_by_two(1, 0, 1, 0);  // the odd-trace final cell

    Elem shift;
    std::vector<Matrix> cells;
    if (n % 2 == 1) {
        unsigned kk = (n - 1) / 2;
        Matrix one1(R, 1);
        one1.at(0, 0) = R.one();
        cells.push_back(one1);
        if (t == R.zero()) {
            shift = xi;
            for (unsigned i = 0; i < kk; ++i) cells.push_back(Alow);
        } else if (t == R.one()) {
            shift = xi1;
            for (unsigned i = 0; i + 1 < kk; ++i) cells.push_back(Alow);
            cells.push_back(Ahook);
        } else {
            shift = t;
            for (unsigned i = 0; i < kk; ++i) cells.push_back(Alow);
        }
    } else {
        shift = (t == xi1) ? xi1 : xi;
        for (unsigned i = 0; i < n / 2; ++i) cells.push_back(Alow);
    }
    Matrix e = direct_sum(cells);

    Matrix M = block.plus_scalar(R.neg(shift));
    Rcf rc = rational_canonical_form(M);
    if (rc.invariant_factors.size() != 1)
        throw Error("shifted companion block is not cyclic");
    Matrix C1 = companion(rc.invariant_factors[0]);
    Matrix Vp = *inverse(rc.V);
    const Matrix& VpInv = rc.V;
    Matrix f = C1 - e;
    Matrix Eb = Vp * e * VpInv;
    Matrix Ub = Vp * (f.plus_scalar(shift)) * VpInv;
    return {Eb, Ub};
}

BlockSummands split_block(const Matrix& block, std::uint64_t d) {
    const Ring& R = block.ring();
    unsigned n = block.dim();
    if (n == 1) {
        Elem a = block.at(0, 0);
        Matrix E(R, 1), U(R, 1);
        if (a != R.zero()) {
            U.at(0, 0) = a;
        } else {
            E.at(0, 0) = R.one();
            U.at(0, 0) = R.neg(R.one());
        }
        return {E, U};
    }
    BlockSummands bs = R.size() == 4 ? split_block_f4(block)
                                     : split_block_generic(block, d);
    // block-level sanity; fall back to a direct scan for an invertible
    // d-potent complement when a structured case does not apply cleanly
    Matrix I = Matrix::identity(R, n);
    if (!is_idempotent(bs.E) || bs.U.pow(d - 1) != I || bs.E + bs.U != block) {
        const auto& idems = idempotents_cached(R, n);
        for (const Matrix& e : idems) {
            Matrix f = block - e;
            if (f.pow(d - 1) == I) return {e, f};
        }
        throw SearchExhausted("no invertible d-potent summand");
    }
    return bs;
}

}  // namespace

Decomposition decompose_idempotent_plus_invertible_dpotent(const Matrix& A) {
    const Ring& R = A.ring();
    if (!R.is_field() || R.size() <= 3)
        throw FieldTooSmall("idempotent + invertible d-potent needs a field with Q >= 4");
    std::uint64_t Q = R.size();
    std::uint64_t d = lcm_u64(Q - 1, 2) + 1;
    unsigned n = A.dim();

    Rcf rc = rational_canonical_form(A);
    std::vector<Matrix> Es, Us;
    for (const Poly& g : rc.invariant_factors) {
        BlockSummands bs = split_block(companion(g), d);
        Es.push_back(bs.E);
        Us.push_back(bs.U);
    }
    Matrix Vinv = *inverse(rc.V);
    Matrix E = Vinv * direct_sum(Es) * rc.V;
    Matrix U = Vinv * direct_sum(Us) * rc.V;
    (void)n;
    Decomposition out{A, E, U, +1, DecompMode::IdempotentPlusDpotent,
                      d, true, false, false};
    out.verified = verify_decomposition(out);
    if (!out.verified) throw Error("decomposition failed verification");
    return out;
}

Decomposition decompose_involution_plus_invertible_dpotent(const Matrix& A) {
    const Ring& R = A.ring();
    if (!R.is_field() || R.characteristic() == 2 || R.size() < 5)
        throw FieldTooSmall("involution rewrite needs an odd field with Q >= 5");
    Elem half = R.inv(R.from_int(2));
    Matrix B = (A + Matrix::identity(R, A.dim())).scaled(half);
    Decomposition inner = decompose_idempotent_plus_invertible_dpotent(B);
    Elem two = R.from_int(2);
    Matrix E = inner.E.scaled(two) - Matrix::identity(R, A.dim());
    Matrix U = inner.U.scaled(two);
    Decomposition out{A, E, U, +1, DecompMode::InvolutionPlusQpotent,
                      inner.exponent, true, false, false};
    out.verified = verify_decomposition(out);
    if (!out.verified) throw Error("involution decomposition failed verification");
    return out;
}

// ---------------------------------------------------------------------------
// Counterexamples.

SearchCertificate verify_no_tripotent_pm_idempotent(const Matrix& A,
                                                    std::uint64_t guard) {
    const Ring& R = A.ring();
    auto idems = enumerate_idempotents(R, A.dim(), IdemMode::Auto, guard);
    SearchCertificate cert;
    cert.search_space_size = static_cast<std::uint64_t>(idems.size()) * 2;
    for (const Matrix& e : idems) {
        for (int sign : {+1, -1}) {
            Matrix f = sign > 0 ? A - e : A + e;
            if (is_tripotent(f)) {
                Decomposition w{A, e, f, sign, DecompMode::TripotentPlusQpotent,
                                3, false, false, false};
                // verifier expects E tripotent / U q-potent; here both hold
                // with the roles E = e (idempotent is tripotent too), U = f
                w.verified = verify_decomposition(w);
                cert.found = true;
                cert.witness = w;
                return cert;
            }
        }
    }
    cert.found = false;
    return cert;
}

Matrix counterexample_matrix(const Ring& F) {
    return Matrix::from_ints(F, 3, {0, 0, 1, 1, 0, 1, 0, 1, 0});
}

Matrix f3_direct_sum_counterexample(unsigned k) {
    static const Ring F3 = Ring::field(3, 1);
    Matrix A = counterexample_matrix(F3);
    std::vector<Matrix> copies(k, A);
    return direct_sum(copies);
}

// ---------------------------------------------------------------------------
// Element-level torsion-clean machinery.

namespace {

std::vector<Elem> torsion_units(const Ring& R, std::uint64_t n) {
    std::vector<Elem> out;
    for (Elem u = 0; u < R.size(); ++u)
        if (R.is_unit(u) && R.pow(u, n) == R.one()) out.push_back(u);
    return out;
}

std::vector<Elem> ring_idempotents(const Ring& R) {
    std::vector<Elem> out;
    for (Elem e = 0; e < R.size(); ++e)
        if (R.mul(e, e) == e) out.push_back(e);
    return out;
}

ElementCoverage element_coverage(const Ring& R, std::uint64_t n, bool weak) {
    auto units = torsion_units(R, n);
    auto idems = ring_idempotents(R);
    ElementCoverage out;
    out.all_covered = true;
    for (Elem r = 0; r < R.size(); ++r) {
        bool covered = false;
        for (Elem u : units) {
            for (Elem e : idems) {
                if (R.add(u, e) == r) {
                    out.decomps.push_back({r, e, u, +1, n});
                    covered = true;
                } else if (weak && R.sub(u, e) == r) {
                    out.decomps.push_back({r, e, u, -1, n});
                    covered = true;
                }
                if (covered) break;
            }
            if (covered) break;
        }
        if (!covered) {
            out.all_covered = false;
            if (!out.witness) out.witness = r;
        }
    }
    return out;
}

}  // namespace

ElementCoverage element_torsion_clean(const Ring& R, std::uint64_t n) {
    return element_coverage(R, n, false);
}

ElementCoverage element_weakly_torsion_clean(const Ring& R, std::uint64_t n) {
    return element_coverage(R, n, true);
}

std::uint64_t unit_group_exponent(const Ring& R) {
    std::uint64_t e = 1;
    for (Elem u = 0; u < R.size(); ++u)
        if (R.is_unit(u)) e = lcm_u64(e, R.order(u));
    return e;
}

namespace {

std::uint64_t minimal_coverage_n(const Ring& R, bool weak) {
    std::uint64_t cap = unit_group_exponent(R);
    for (std::uint64_t n = 1; n <= cap; ++n) {
        auto cov = element_coverage(R, n, weak);
        if (cov.all_covered) return n;
    }
    throw NoSuchN("no torsion-clean exponent up to the unit-group exponent");
}

}  // namespace

std::uint64_t minimal_torsion_clean_n(const Ring& R) {
    return minimal_coverage_n(R, false);
}

std::uint64_t minimal_weakly_torsion_clean_n(const Ring& R) {
    return minimal_coverage_n(R, true);
}

bool strong_identity_check(const Ring& R, Elem a, const ElemDecomposition& d) {
    if (R.mul(d.u, d.e) != R.mul(d.e, d.u))
        throw NonCommutingParts("decomposition parts do not commute");
    Elem rhs = d.sign > 0 ? R.add(d.u, d.e) : R.sub(d.u, d.e);
    if (rhs != a || R.mul(d.e, d.e) != d.e || R.pow(d.u, d.n) != R.one())
        throw PreconditionViolated("not a valid weakly torsion clean decomposition");
    // (a^n - 1)((a - sign*1)^n - 1) = 0
    Elem lhs1 = R.sub(R.pow(a, d.n), R.one());
    Elem shifted = d.sign > 0 ? R.sub(a, R.one()) : R.add(a, R.one());
    Elem lhs2 = R.sub(R.pow(shifted, d.n), R.one());
    return R.mul(lhs1, lhs2) == R.zero();
}

// ---------------------------------------------------------------------------
// Z/p^2.

bool zp2_element_coverage(std::uint64_t p, std::uint64_t q) {
    Ring R = Ring::zmod(p * p);
    std::vector<Elem> qpotents;
    for (Elem t = 0; t < R.size(); ++t)
        if (R.pow(t, q) == t) qpotents.push_back(t);
    std::vector<bool> hit(R.size(), false);
    for (Elem e : {R.zero(), R.one()})
        for (Elem t : qpotents) hit[R.add(e, t)] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

namespace {

// similarity A -> T A T^{-1} tracked as T; starts at identity
struct Conjugator {
    Matrix T;
    Matrix Tinv;
    Matrix apply(const Matrix& A) const { return T * A * Tinv; }
    Matrix pull_back(const Matrix& X) const { return Tinv * X * T; }
    void compose(const Matrix& S, const Matrix& Sinv) {
        T = S * T;
        Tinv = Tinv * Sinv;
    }
};

}  // namespace

Decomposition zp2_matrix2_decompose(const Matrix& A, std::uint64_t p,
                                    std::uint64_t q) {
    const Ring& R = A.ring();
    if (R.size() != p * p || R.is_field())
        throw PreconditionViolated("matrix must live over Z/p^2");
    if (q < 2 || (q - 1) % (p * (p - 1)) != 0)
        throw HypothesisViolated("need p(p-1) | q-1");

    Ring Fp = Ring::field(p, 1);
    Matrix Abar(Fp, 2);
    for (unsigned i = 0; i < 2; ++i)
        for (unsigned j = 0; j < 2; ++j) Abar.at(i, j) = A.at(i, j) % p;
    Rcf rc = rational_canonical_form(Abar);

    // lift the mod-p similarity: same integer codes, unit determinant
    Matrix V(R, 2);
    for (unsigned i = 0; i < 2; ++i)
        for (unsigned j = 0; j < 2; ++j) V.at(i, j) = rc.V.at(i, j);
    auto Vinv = inverse(V);
    if (!Vinv) throw Error("similarity lift is not invertible");
    Conjugator conj{V, *Vinv};
    Matrix B = conj.apply(A);

    Matrix E(R, 2), P(R, 2);
    bool built = false;

    if (rc.invariant_factors.size() == 1) {
        // companion-like: B = [[p k, a], [1 + p m, b]]
        // scale row/column so the lower-left entry becomes exactly 1
        Elem u = R.inv(B.at(1, 0));
        Matrix D = Matrix::identity(R, 2);
        D.at(1, 1) = u;
        Matrix Dinv = Matrix::identity(R, 2);
        Dinv.at(1, 1) = R.inv(u);
        conj.compose(D, Dinv);
        B = D * B * Dinv;
        // shear away the top-left entry
        Matrix S = Matrix::identity(R, 2);
        S.at(0, 1) = R.neg(B.at(0, 0));
        Matrix Sinv = Matrix::identity(R, 2);
        Sinv.at(0, 1) = B.at(0, 0);
        conj.compose(S, Sinv);
        B = S * B * Sinv;
        // now B = [[0, a'], [1, b']]
        Elem a = B.at(0, 1), b = B.at(1, 1);
        Matrix Eb(R, 2), Pb(R, 2);
        if (R.is_unit(R.sub(b, R.one()))) {
            Eb = Matrix::from_ints(R, 2, {0, 0, 1, 1});
            Pb.at(0, 1) = a;
            Pb.at(1, 1) = R.sub(b, R.one());
        } else {
            // b = 1 (mod p), so b + 1 is a unit and the hook idempotent works
            Eb = Matrix::from_ints(R, 2, {1, 0, 1, 0});
            Pb.at(0, 0) = R.neg(R.one());
            Pb.at(0, 1) = a;
            Pb.at(1, 1) = b;
        }
        E = conj.pull_back(Eb);
        P = conj.pull_back(Pb);
        built = true;
    } else {
        // diagonal-like: B = [[a, p k], [p m, b]]
        Elem a = B.at(0, 0), b = B.at(1, 1);
        Matrix Eb(R, 2), Pb(R, 2);
        if (R.is_unit(a) && R.is_unit(b)) {
            Pb = B;
        } else if (!R.is_unit(a) && !R.is_unit(b)) {
            Eb = Matrix::identity(R, 2);
            Pb = B - Eb;
        } else if (R.is_unit(b) && R.is_unit(R.sub(a, R.one()))) {
            Eb.at(0, 0) = R.one();
            Eb.at(0, 1) = B.at(0, 1);
            Eb.at(1, 0) = B.at(1, 0);
            Pb.at(0, 0) = R.sub(a, R.one());
            Pb.at(1, 1) = b;
        } else {
            Eb.at(1, 1) = R.one();
            Eb.at(0, 1) = B.at(0, 1);
            Eb.at(1, 0) = B.at(1, 0);
            Pb.at(0, 0) = a;
            Pb.at(1, 1) = R.sub(b, R.one());
        }
        E = conj.pull_back(Eb);
        P = conj.pull_back(Pb);
        built = true;
    }

    Decomposition out{A, E, P, +1, DecompMode::IdempotentPlusDpotent,
                      q, false, false, false};
    out.verified = built && verify_decomposition(out);
    if (!out.verified) {
        // guarded brute fallback over all idempotents of M_2(Z/p^2)
        auto idems = enumerate_idempotents(R, 2, IdemMode::Brute);
        for (const Matrix& e : idems) {
            Matrix f = A - e;
            if (f.pow(q) == f) {
                out.E = e;
                out.U = f;
                out.verified = verify_decomposition(out);
                if (out.verified) return out;
            }
        }
        throw SearchExhausted("no idempotent + q-potent splitting found");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Matrix-ring torsion-clean exponents.

std::uint64_t unit_group_exponent_matrix_ring(const Ring& F, unsigned n) {
    std::uint64_t p = F.characteristic();
    std::uint64_t pt = 1;
    while (pt < n) pt *= p;
    std::uint64_t N = pt;
    std::uint64_t qi = 1;
    for (unsigned i = 1; i <= n; ++i) {
        qi *= F.size();
        N = lcm_u64(N, qi - 1);
    }
    return N;
}

std::uint64_t unit_group_exponent_matrix_exhaustive(const Ring& R, unsigned n,
                                                    std::uint64_t guard) {
    long double space = 1;
    for (unsigned i = 0; i < n * n; ++i) space *= static_cast<long double>(R.size());
    if (space > static_cast<long double>(guard))
        throw SearchSpaceTooLarge("matrix-ring unit sweep exceeds guard");
    std::uint64_t total = 1;
    for (unsigned i = 0; i < n * n; ++i) total *= R.size();
    Matrix I = Matrix::identity(R, n);
    std::uint64_t e = 1;
    for (std::uint64_t code = 0; code < total; ++code) {
        Matrix A(R, n);
        std::uint64_t t = code;
        for (unsigned idx = 0; idx < n * n; ++idx) {
            A.at(idx / n, idx % n) = t % R.size();
            t /= R.size();
        }
        if (!is_invertible(A)) continue;
        std::uint64_t ord = 1;
        Matrix Ak = A;
        while (Ak != I) {
            Ak = Ak * A;
            ++ord;
        }
        e = lcm_u64(e, ord);
    }
    return e;
}

bool th_id_q_check(const Ring& F, unsigned n, std::uint64_t q) {
    std::uint64_t N = unit_group_exponent_matrix_ring(F, n);
    return (q - 1) % N == 0;
}

bool matrix_ring_torsion_clean(const Ring& F, unsigned n, std::uint64_t d,
                               std::uint64_t guard) {
    long double space = 1;
    for (unsigned i = 0; i < n * n; ++i) space *= static_cast<long double>(F.size());
    if (space > static_cast<long double>(guard))
        throw SearchSpaceTooLarge("matrix-ring torsion sweep exceeds guard");
    std::uint64_t total = 1;
    for (unsigned i = 0; i < n * n; ++i) total *= F.size();
    const auto& idems = idempotents_cached(F, n);
    Matrix I = Matrix::identity(F, n);
    // coverage is a similarity invariant; memoize per invariant-factor list
    std::map<std::vector<std::vector<Elem>>, bool> seen;
    for (std::uint64_t code = 0; code < total; ++code) {
        Matrix A(F, n);
        std::uint64_t t = code;
        for (unsigned idx = 0; idx < n * n; ++idx) {
            A.at(idx / n, idx % n) = t % F.size();
            t /= F.size();
        }
        Rcf rc = rational_canonical_form(A);
        std::vector<std::vector<Elem>> sig;
        for (const Poly& g : rc.invariant_factors) sig.push_back(g.coeffs());
        auto it = seen.find(sig);
        if (it != seen.end()) {
            if (!it->second) return false;
            continue;
        }
        Matrix B = rc.blocks();
        bool covered = false;
        for (const Matrix& e : idems) {
            if ((B - e).pow(d) == I) {
                covered = true;
                break;
            }
        }
        seen.emplace(std::move(sig), covered);
        if (!covered) return false;
    }
    return true;
}

std::uint64_t matrix_ring_minimal_torsion_clean(const Ring& F, unsigned n,
                                                std::uint64_t guard) {
    std::uint64_t cap = unit_group_exponent_matrix_ring(F, n);
    for (std::uint64_t d = 1; d <= cap; ++d)
        if (matrix_ring_torsion_clean(F, n, d, guard)) return d;
    throw NoSuchN("no torsion-clean exponent up to the unit-group exponent");
}

F2kRange f2k_torsion_clean_range_check(unsigned k, unsigned n) {
    Ring F = Ring::field(2, k);
    F2kRange out;
    out.d = matrix_ring_minimal_torsion_clean(F, n);
    std::uint64_t lo = (1ull << k) - 1, hi = (1ull << (k + 1)) - 2;
    out.lower_divides = out.d % lo == 0;
    out.upper_ok = out.d <= hi;
    return out;
}

bool weakly_vs_plain_2n_torsion(const Ring& R, unsigned n) {
    std::uint64_t ch = R.characteristic();
    if (ch != 2 && ch != 4)
        throw WrongCharacteristic("needs even characteristic at most 4");
    std::uint64_t N = 1ull << n;
    auto weak = element_weakly_torsion_clean(R, N);
    auto plain = element_torsion_clean(R, N);
    bool rewrites_ok = true;
    for (const auto& d : weak.decomps) {
        if (d.sign >= 0) continue;
        // u - e = (u - 2e) + e with (u - 2e)^(2^n) = u^(2^n)
        Elem u2 = R.sub(d.u, R.mul(R.from_int(2), d.e));
        if (R.pow(u2, N) != R.pow(d.u, N)) rewrites_ok = false;
        if (R.add(u2, d.e) != d.target) rewrites_ok = false;
    }
    return weak.all_covered == plain.all_covered && rewrites_ok;
}

}  // namespace ffp
