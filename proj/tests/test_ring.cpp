#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffp/numth.hpp"
#include "ffp/ring.hpp"

using namespace ffp;

TEST_CASE("prime and prime-power predicates") {
    CHECK(is_prime(2));
    CHECK(is_prime(9973));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9991));  // 97 * 103
    auto pp = prime_power(243);
    REQUIRE(pp.has_value());
    CHECK(pp->first == 3);
    CHECK(pp->second == 5);
    CHECK_FALSE(prime_power(12).has_value());
    CHECK(totient(288) == 96);
    CHECK(isqrt(288) == 16);
    CHECK(is_perfect_square(289));
}

TEST_CASE("prime-power sweeps are ascending and complete") {
    auto odd = odd_prime_powers_upto(30);
    CHECK(odd == std::vector<std::uint64_t>{3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29});
    auto all = prime_powers_upto(17);
    CHECK(all == std::vector<std::uint64_t>{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17});
}

TEST_CASE("canonical moduli are the smallest irreducibles") {
    Ring f4 = Ring::field(2, 2);
    CHECK(f4.modulus() == std::vector<std::uint64_t>{1, 1, 1});  // x^2+x+1
    Ring f9 = Ring::field(3, 2);
    CHECK(f9.modulus() == std::vector<std::uint64_t>{1, 0, 1});  // x^2+1
    Ring f8 = Ring::field(2, 3);
    CHECK(f8.modulus() == std::vector<std::uint64_t>{1, 1, 0, 1});  // x^3+x+1
    CHECK(f4.name() == "2^2");
    CHECK(Ring::field(7, 1).name() == "7");
    CHECK(Ring::zmod(9).name() == "Z/9");
}

TEST_CASE("field arithmetic satisfies the ring axioms on samples") {
    for (auto [p, r] : {std::pair<std::uint64_t, unsigned>{5, 1}, {3, 2}, {2, 4}, {7, 2}}) {
        Ring F = Ring::field(p, r);
        std::uint64_t q = F.size();
        for (Elem a = 0; a < q; ++a)
            for (Elem b = 0; b < q; ++b) {
                CHECK(F.add(a, b) == F.add(b, a));
                CHECK(F.mul(a, b) == F.mul(b, a));
                CHECK(F.sub(F.add(a, b), b) == a);
                // distributivity against a fixed third element
                Elem c = (a * 31 + b * 17 + 3) % q;
                CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            }
        for (Elem a = 1; a < q; ++a) {
            CHECK(F.is_unit(a));
            CHECK(F.mul(a, F.inv(a)) == F.one());
            CHECK(F.pow(a, q - 1) == F.one());
        }
    }
}

TEST_CASE("zmod units and inverses") {
    Ring Z9 = Ring::zmod(9);
    CHECK_FALSE(Z9.is_unit(3));
    CHECK(Z9.is_unit(2));
    CHECK(Z9.mul(2, Z9.inv(2)) == 1);
    CHECK_THROWS_AS(Z9.inv(6), NotAUnit);
    CHECK(Z9.from_int(-1) == 8);
    CHECK(Z9.characteristic() == 9);
}

TEST_CASE("primitive elements generate the multiplicative group") {
    for (auto [p, r] : {std::pair<std::uint64_t, unsigned>{5, 1}, {7, 1}, {3, 2}, {2, 3},
                        {13, 1}, {3, 4}}) {
        Ring F = Ring::field(p, r);
        Elem g = F.primitive_element();
        CHECK(F.order(g) == F.size() - 1);
        // least-code property
        for (Elem c = 1; c < g; ++c) CHECK(F.order(c) != F.size() - 1);
    }
}

TEST_CASE("square detection matches direct enumeration") {
    for (auto [p, r] : {std::pair<std::uint64_t, unsigned>{7, 1}, {3, 2}, {5, 2}}) {
        Ring F = Ring::field(p, r);
        std::vector<bool> sq(F.size(), false);
        for (Elem b = 0; b < F.size(); ++b) sq[F.mul(b, b)] = true;
        for (Elem a = 0; a < F.size(); ++a) CHECK(F.is_square(a) == sq[a]);
    }
    Ring F8 = Ring::field(2, 3);
    for (Elem a = 0; a < 8; ++a) CHECK(F8.is_square(a));
}

TEST_CASE("element codes round-trip through coefficients") {
    Ring F27 = Ring::field(3, 3);
    for (Elem a = 0; a < 27; ++a) CHECK(F27.encode(F27.decode(a)) == a);
    CHECK(F27.decode(14) == std::vector<std::uint64_t>{2, 1, 1});
}

TEST_CASE("field parsing and constructor errors") {
    CHECK(parse_field("5").size() == 5);
    CHECK(parse_field("3^4").size() == 81);
    CHECK_THROWS_AS(Ring::field(6, 1), NonPrime);
    CHECK_THROWS_AS(Ring::field(2, 21), Overflow);  // 2^21 over the size cap
    CHECK_THROWS_AS(Ring::field(5, 0), DegreeZero);
}
