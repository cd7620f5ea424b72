#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

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

TEST_CASE("n-potent sets have exactly n members when (n-1) | (q-1)") {
    for (std::uint64_t q : {7ull, 9ull, 13ull, 25ull, 81ull}) {
        Ring F = field_of(q);
        for (std::uint64_t n : divisors(q - 1)) {
            PotentSet ps = potent_set(F, n + 1);
            CHECK(ps.members.size() == n + 1);
            for (Elem x : ps.members) CHECK(F.pow(x, n + 1) == x);
        }
    }
}

TEST_CASE("5-potents of F13 are the fourth roots of unity plus zero") {
    Ring F13 = Ring::field(13, 1);
    PotentSet ps = potent_set(F13, 5);
    CHECK(ps.members == std::vector<Elem>{0, 1, 5, 8, 12});
}

TEST_CASE("proper potents are the non-primitive elements with zero") {
    Ring F13 = Ring::field(13, 1);
    PotentSet pp = proper_potents(F13);
    CHECK(pp.members == std::vector<Elem>{0, 1, 3, 4, 5, 8, 9, 10, 12});
    for (std::uint64_t q : {9ull, 25ull, 27ull, 49ull, 64ull, 128ull}) {
        Ring F = field_of(q);
        CHECK(proper_potents(F).members.size() == q - totient(q - 1));
        // cross-check against the primitive-element mask
        auto mask = primitive_mask(F);
        std::set<Elem> nonprim;
        for (Elem a = 0; a < q; ++a)
            if (!mask[a]) nonprim.insert(a);
        PotentSet pp2 = proper_potents(F);
        CHECK(std::set<Elem>(pp2.members.begin(), pp2.members.end()) == nonprim);
    }
}

TEST_CASE("q-potent plus tripotent coverage holds everywhere") {
    for (std::uint64_t q : prime_powers_upto(243)) {
        Ring F = field_of(q);
        ClassificationRecord rec = covers_npotent_plus_tripotent(F, q);
        CHECK_MESSAGE(rec.covers, "q = ", q);
        CHECK_FALSE(rec.witness.has_value());
    }
}

TEST_CASE("smaller potency classes cover only in four exceptional fields") {
    std::set<std::pair<std::uint64_t, std::uint64_t>> expected = {
        {3, 2}, {5, 3}, {7, 4}, {9, 5}};
    for (std::uint64_t q : odd_prime_powers_upto(243)) {
        Ring F = field_of(q);
        for (std::uint64_t d : divisors(q - 1)) {
            std::uint64_t n = d + 1;
            if (n >= q || n <= 1) continue;
            ClassificationRecord rec = covers_npotent_plus_tripotent(F, n);
            bool want = expected.count({q, n}) > 0;
            CHECK_MESSAGE(rec.covers == want, "q = ", q, " n = ", n);
            if (!rec.covers) REQUIRE(rec.witness.has_value());
        }
    }
}

TEST_CASE("uncovered witness is the least uncovered code") {
    Ring F13 = Ring::field(13, 1);
    ClassificationRecord rec = covers_npotent_plus_tripotent(F13, 5);
    CHECK_FALSE(rec.covers);
    REQUIRE(rec.witness.has_value());
    CHECK(*rec.witness == 3);
}

TEST_CASE("proper potents plus tripotents: coverage only on the exceptional set") {
    // coverage fails exactly when some gamma has gamma-1, gamma, gamma+1 all
    // primitive, i.e. off the exceptional set
    std::set<std::uint64_t> S = {3, 5, 7, 9, 13, 25, 29, 61, 81, 121, 169};
    for (std::uint64_t q : prime_powers_upto(289)) {
        if (q == 2) continue;
        Ring F = field_of(q);
        ClassificationRecord rec = covers_potent_plus_tripotent(F);
        bool exceptional = S.count(q) > 0;
        CHECK_MESSAGE(rec.covers == exceptional, "q = ", q);
    }
}

TEST_CASE("consecutive primitive triples exist exactly off the exceptional set") {
    std::set<std::uint64_t> S = {3, 5, 7, 9, 13, 25, 29, 61, 81, 121, 169};
    for (std::uint64_t q : odd_prime_powers_upto(289)) {
        Ring F = field_of(q);
        auto t = consecutive_primitive_triple(F);
        CHECK_MESSAGE(t.has_value() == (S.count(q) == 0), "q = ", q);
        if (t.has_value()) {
            auto mask = primitive_mask(F);
            CHECK(mask[F.sub(*t, F.one())]);
            CHECK(mask[*t]);
            CHECK(mask[F.add(*t, F.one())]);
        }
    }
    CHECK(consecutive_primitive_triple(field_of(289)).value() == 76);
}
