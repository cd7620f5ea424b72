#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ffp/decomp.hpp"
#include "ffp/numth.hpp"
#include "ffp/potent.hpp"

using namespace ffp;

namespace {

Ring field_of(std::uint64_t q) {
    auto pr = prime_power(q);
    REQUIRE(pr.has_value());
    return Ring::field(pr->first, pr->second);
}

}  // namespace

TEST_CASE("idempotent plus invertible d-potent: exhaustive 2x2 sweeps") {
    for (std::uint64_t q : {4ull, 5ull, 7ull}) {
        Ring F = field_of(q);
        std::uint64_t d = lcm_u64(q - 1, 2) + 1;
        std::uint64_t total = q * q * q * q;
        for (std::uint64_t code = 0; code < total; ++code) {
            Matrix A(F, 2);
            std::uint64_t t = code;
            for (unsigned idx = 0; idx < 4; ++idx) {
                A.at(idx / 2, idx % 2) = t % q;
                t /= q;
            }
            Decomposition dec = decompose_idempotent_plus_invertible_dpotent(A);
            CHECK(dec.verified);
            CHECK(dec.exponent == d);
            CHECK(dec.unit);
            CHECK(is_idempotent(dec.E));
            CHECK(dec.U.pow(d - 1) == Matrix::identity(F, 2));
            CHECK(dec.E + dec.U == A);
        }
    }
}

TEST_CASE("3x3 companion matrices decompose over each small field") {
    for (std::uint64_t q : {4ull, 5ull, 7ull, 8ull, 9ull}) {
        Ring F = field_of(q);
        std::uint64_t d = lcm_u64(q - 1, 2) + 1;
        for (std::uint64_t c0 = 0; c0 < q; ++c0)
            for (std::uint64_t c1 = 0; c1 < q; ++c1)
                for (std::uint64_t c2 = 0; c2 < q; ++c2) {
                    Matrix A = companion(Poly(F, {c0, c1, c2, 1}));
                    Decomposition dec = decompose_idempotent_plus_invertible_dpotent(A);
                    CHECK_MESSAGE(dec.verified, "q=", q, " c=", c0, ",", c1, ",", c2);
                    CHECK(dec.exponent == d);
                }
    }
}

TEST_CASE("1x1 decompositions follow the scalar rule") {
    Ring F7 = Ring::field(7, 1);
    Matrix A(F7, 1);
    A.at(0, 0) = 3;
    Decomposition dec = decompose_idempotent_plus_invertible_dpotent(A);
    CHECK(dec.verified);
    CHECK(dec.E + dec.U == A);
    CHECK_THROWS_AS(
        decompose_idempotent_plus_invertible_dpotent(Matrix::identity(Ring::field(3, 1), 2)),
        FieldTooSmall);
}

TEST_CASE("trace-zero 2x2 splitting: the explicit summands over F5 with xi = 3") {
    Ring F5 = Ring::field(5, 1);
    // e = [[1-xi, xi(1-xi)],[1, xi]] is idempotent for xi = 3
    Matrix e = Matrix::from_ints(F5, 2, {3, 4, 1, 3});
    CHECK(is_idempotent(e));
    Matrix A = companion(Poly::from_ints(F5, {-2, 0, 1}));  // trace 0
    Decomposition dec = decompose_idempotent_plus_invertible_dpotent(A);
    CHECK(dec.verified);
    CHECK(dec.exponent == 5);
    CHECK(dec.U.pow(4) == Matrix::identity(F5, 2));
}

TEST_CASE("bounded structured search returns verified certificates") {
    Ring F7 = Ring::field(7, 1);
    Matrix B = companion(Poly::from_ints(F7, {-3, 0, 1}));  // x^2 - 3, irreducible
    Decomposition dec = bounded_structured_search(B, {}, 7);
    CHECK(dec.verified);
    CHECK(is_idempotent(dec.E));
    CHECK(is_kpotent(dec.U, 7));
    CHECK(dec.E + dec.U == B);

    // 1x1 block (a) with a^d = a: e = 0 and f = (a)
    Ring F5 = Ring::field(5, 1);
    Matrix a(F5, 1);
    a.at(0, 0) = 2;
    Decomposition d1 = bounded_structured_search(a, {2}, 5);
    CHECK(d1.verified);
    CHECK(d1.E == Matrix(F5, 1));
    CHECK(d1.U == a);

    // F5 blocks with trace outside {0,1}: spectrum {-1, 0, tr-1}
    for (std::uint64_t c0 = 0; c0 < 5; ++c0)
        for (std::uint64_t tr : {2ull, 3ull}) {
            Matrix blk = companion(Poly(F5, {c0, F5.neg(tr), 1}));
            std::vector<Elem> spectrum = {F5.from_int(-1), 0, F5.sub(tr, 1)};
            Decomposition ds = bounded_structured_search(blk, spectrum, 5);
            CHECK(ds.verified);
        }
}

TEST_CASE("no tripotent plus/minus idempotent for the two counterexamples") {
    Matrix B3 = f3_direct_sum_counterexample(1);
    SearchCertificate c3 = verify_no_tripotent_pm_idempotent(B3);
    CHECK_FALSE(c3.found);
    CHECK(c3.search_space_size == 472);  // 236 idempotents x 2 signs

    Ring F5 = Ring::field(5, 1);
    Matrix B5 = counterexample_matrix(F5);
    SearchCertificate c5 = verify_no_tripotent_pm_idempotent(B5);
    CHECK_FALSE(c5.found);
    CHECK(c5.search_space_size == 3104);  // 1552 idempotents x 2 signs

    Ring F3 = Ring::field(3, 1);
    SearchCertificate z = verify_no_tripotent_pm_idempotent(Matrix(F3, 2));
    CHECK(z.found);
    REQUIRE(z.witness.has_value());
    CHECK(z.witness->verified);
}

TEST_CASE("direct-sum counterexample family") {
    Ring F3 = Ring::field(3, 1);
    Matrix B1 = f3_direct_sum_counterexample(1);
    CHECK(B1.dim() == 3);
    CHECK(minimal_polynomial(B1) == Poly::from_ints(F3, {-1, -1, 0, 1}));
    CHECK(minimal_polynomial(-B1) == Poly::from_ints(F3, {1, -1, 0, 1}));
    Matrix B2 = f3_direct_sum_counterexample(2);
    CHECK(B2.dim() == 6);
    CHECK(minimal_polynomial(B2) == Poly::from_ints(F3, {-1, -1, 0, 1}));
    for (unsigned k = 1; k <= 4; ++k)
        CHECK(f3_direct_sum_counterexample(k).trace() == 0);
}

TEST_CASE("weak and plain torsion-clean coverage of small fields") {
    Ring F3 = Ring::field(3, 1);
    Ring F7 = Ring::field(7, 1);
    Ring F9 = Ring::field(3, 2);
    CHECK(element_weakly_torsion_clean(F3, 1).all_covered);
    ElementCoverage c7 = element_weakly_torsion_clean(F7, 3);
    CHECK_FALSE(c7.all_covered);
    CHECK(c7.witness.value() == 6);
    CHECK(element_weakly_torsion_clean(F9, 4).all_covered);
    // the 4-torsion units of F9 are {1, -1, w, -w} with w^2 = -1
    std::set<Elem> tor4;
    for (Elem a = 1; a < 9; ++a)
        if (F9.pow(a, 4) == F9.one()) tor4.insert(a);
    CHECK(tor4.size() == 4);
    Elem w = 3;  // the generator adjoined by the modulus x^2 + 1
    CHECK(F9.mul(w, w) == F9.from_int(-1));
    CHECK(tor4 == std::set<Elem>{F9.one(), F9.from_int(-1), w, F9.neg(w)});
}

TEST_CASE("minimal torsion-clean exponents of small fields") {
    struct Row { std::uint64_t q; std::uint64_t weak; std::uint64_t plain; };
    for (Row row : {Row{3, 1, 2}, Row{5, 2, 4}, Row{7, 6, 6}, Row{9, 4, 8}}) {
        Ring F = field_of(row.q);
        CHECK(minimal_weakly_torsion_clean_n(F) == row.weak);
        CHECK(minimal_torsion_clean_n(F) == row.plain);
    }
    // plain minimal exponent of a field is always q - 1
    for (std::uint64_t q : prime_powers_upto(49)) {
        if (q == 2) continue;
        CHECK(minimal_torsion_clean_n(field_of(q)) == q - 1);
    }
}

TEST_CASE("commuting-decomposition polynomial identity") {
    Ring F5 = Ring::field(5, 1);
    ElemDecomposition d5{3, 1, 2, +1, 4};  // 3 = 2 + 1 with 2^4 = 1
    CHECK(strong_identity_check(F5, 3, d5));
    Ring F9 = Ring::field(3, 2);
    for (Elem u = 1; u < 9; ++u) {
        Elem a = F9.add(u, F9.one());
        ElemDecomposition d{a, F9.one(), u, +1, 8};
        CHECK(strong_identity_check(F9, a, d));
    }
    Ring Z9 = Ring::zmod(9);
    ElemDecomposition dz{1, 0, 1, +1, 6};  // 1 = 1 + 0
    CHECK(strong_identity_check(Z9, 1, dz));
}

TEST_CASE("Z/p^2 element coverage matches the divisibility criterion") {
    CHECK(zp2_element_coverage(3, 7));
    CHECK_FALSE(zp2_element_coverage(3, 5));
    CHECK(zp2_element_coverage(5, 21));
    for (std::uint64_t p : {3ull, 5ull, 7ull})
        for (std::uint64_t q = 2; q <= p * (p - 1) + 1; ++q)
            CHECK(zp2_element_coverage(p, q) == ((q - 1) % (p * (p - 1)) == 0));
}

TEST_CASE("2x2 over Z/9: the worked certificate and random sweeps") {
    Ring Z9 = Ring::zmod(9);
    Matrix A = Matrix::from_ints(Z9, 2, {0, 2, 1, 5});
    Decomposition d = zp2_matrix2_decompose(A, 3, 7);
    CHECK(d.verified);
    CHECK(d.E == Matrix::from_ints(Z9, 2, {0, 0, 1, 1}));
    CHECK(d.U == Matrix::from_ints(Z9, 2, {0, 2, 0, 4}));

    Decomposition di = zp2_matrix2_decompose(Matrix::identity(Z9, 2), 3, 7);
    CHECK(di.verified);
    CHECK(di.E == Matrix(Z9, 2));
    CHECK(di.U == Matrix::identity(Z9, 2));

    CHECK_THROWS_AS(zp2_matrix2_decompose(A, 3, 5), HypothesisViolated);

    std::uint64_t state = 0xbead;
    for (int trial = 0; trial < 200; ++trial) {
        Matrix M = random_matrix(Z9, 2, state);
        Decomposition dm = zp2_matrix2_decompose(M, 3, 7);
        CHECK(dm.verified);
        CHECK(is_idempotent(dm.E));
        CHECK(is_kpotent(dm.U, 7));
        CHECK(dm.E + dm.U == M);
    }
    Ring Z25 = Ring::zmod(25);
    state = 0xfade;
    for (int trial = 0; trial < 200; ++trial) {
        Matrix M = random_matrix(Z25, 2, state);
        Decomposition dm = zp2_matrix2_decompose(M, 5, 21);
        CHECK(dm.verified);
    }
}

TEST_CASE("unit-group exponents of matrix rings: closed form vs enumeration") {
    struct Row { std::uint64_t q; unsigned n; std::uint64_t N; };
    for (Row row : {Row{2, 2, 6}, Row{3, 2, 24}, Row{2, 3, 84}, Row{4, 2, 30}}) {
        Ring F = field_of(row.q);
        CHECK(unit_group_exponent_matrix_ring(F, row.n) == row.N);
        CHECK(unit_group_exponent_matrix_exhaustive(F, row.n) == row.N);
    }
    CHECK(unit_group_exponent_matrix_ring(Ring::field(3, 1), 1) == 2);
    CHECK(th_id_q_check(Ring::field(2, 1), 2, 7));
    CHECK_FALSE(th_id_q_check(Ring::field(2, 1), 2, 4));
}

TEST_CASE("torsion-clean exponent range for 2x2 matrices over F4") {
    F2kRange r = f2k_torsion_clean_range_check(2, 2);
    CHECK(r.d == 6);
    CHECK(r.lower_divides);
    CHECK(r.upper_ok);
    CHECK((r.d == 3 || r.d == 6));
}

TEST_CASE("weakly vs plain 2^n-torsion clean in even characteristic") {
    CHECK(weakly_vs_plain_2n_torsion(Ring::zmod(4), 1));
    CHECK(weakly_vs_plain_2n_torsion(Ring::field(2, 1), 1));
    CHECK(weakly_vs_plain_2n_torsion(Ring::field(2, 2), 1));
    CHECK(weakly_vs_plain_2n_torsion(Ring::field(2, 2), 2));
    CHECK_THROWS_AS(weakly_vs_plain_2n_torsion(Ring::field(3, 1), 1),
                    WrongCharacteristic);
}

TEST_CASE("involution plus invertible potent for odd fields") {
    for (std::uint64_t q : {5ull, 7ull, 9ull, 11ull, 13ull}) {
        Ring F = field_of(q);
        std::uint64_t state = 0xabba + q;
        for (int trial = 0; trial < 200; ++trial) {
            Matrix A = random_matrix(F, 2, state);
            Decomposition d = decompose_involution_plus_invertible_dpotent(A);
            CHECK(d.verified);
            CHECK(is_involution(d.E));
            CHECK(is_invertible(d.U));
        }
    }
}

TEST_CASE("tripotent plus t-potent element coverage tracks the exponent divisibility") {
    // odd t with (t-1) | (q-1): coverage holds exactly when t = q, except the
    // even-exponent exceptional pair over F7 handled below
    for (std::uint64_t q : odd_prime_powers_upto(243)) {
        if (q == 3 || q == 5 || q == 9) continue;
        Ring F = field_of(q);
        for (std::uint64_t dd : divisors(q - 1)) {
            std::uint64_t t = dd + 1;
            if (t % 2 == 0 || t <= 1) continue;
            ClassificationRecord rec = covers_npotent_plus_tripotent(F, t);
            CHECK_MESSAGE(rec.covers == ((q - 1) % (t - 1) == 0 && (t - 1) % (q - 1) == 0),
                          "q=", q, " t=", t);
        }
    }
    // F7 coverage survives for the even exponent 4 even though 6 does not
    // divide 3; the odd exponent 3 fails as predicted
    Ring F7 = Ring::field(7, 1);
    CHECK(covers_npotent_plus_tripotent(F7, 4).covers);
    CHECK_FALSE(covers_npotent_plus_tripotent(F7, 3).covers);
    CHECK(covers_npotent_plus_tripotent(F7, 7).covers);
}

TEST_CASE("decomposition certificates survive independent re-verification") {
    Ring F7 = Ring::field(7, 1);
    std::uint64_t state = 0xdead;
    for (int trial = 0; trial < 100; ++trial) {
        Matrix A = random_matrix(F7, 3, state);
        Decomposition d = decompose_idempotent_plus_invertible_dpotent(A);
        CHECK(verify_decomposition(d));
        // tampering with a summand must be caught
        Decomposition bad = d;
        bad.E.at(0, 0) = bad.E.ring().add(bad.E.at(0, 0), 1);
        CHECK_FALSE(verify_decomposition(bad));
    }
}
