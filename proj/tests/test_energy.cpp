#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "energylab/energy.hpp"
#include "energylab/generators.hpp"
#include "energylab/rng.hpp"
#include "oracles.hpp"

using namespace energylab;

namespace {

const GroundField Q = GroundField::rationals();

FiniteSet qset(std::initializer_list<long> xs) {
    std::vector<FieldElem> v;
    for (long x : xs) v.push_back(FieldElem::of_int(Q, x));
    return FiniteSet::make(Q, std::move(v));
}

FiniteSet random_qset(Rng& rng, std::size_t max_n, bool zero_free) {
    std::size_t n = 2 + rng.below(max_n - 1);
    std::vector<FieldElem> v;
    while (v.size() < n) {
        long x = static_cast<long>(rng.below(4000)) - 2000;
        if (zero_free && x == 0) continue;
        if (rng.below(8) == 0) {
            long d = 2 + static_cast<long>(rng.below(9));
            v.push_back(FieldElem::rational(x, d));
        } else {
            v.push_back(FieldElem::of_int(Q, x));
        }
    }
    return FiniteSet::make(Q, std::move(v));
}

}  // namespace

TEST_CASE("rep_function examples") {
    RepFunction rf = rep_function(qset({1, 2, 3}), qset({1, 2, 3}), Law::add);
    REQUIRE(rf.table.size() == 5);
    CHECK(rf.count_of(FieldElem::of_int(Q, 2)) == 1);
    CHECK(rf.count_of(FieldElem::of_int(Q, 3)) == 2);
    CHECK(rf.count_of(FieldElem::of_int(Q, 4)) == 3);
    CHECK(rf.count_of(FieldElem::of_int(Q, 5)) == 2);
    CHECK(rf.count_of(FieldElem::of_int(Q, 6)) == 1);
    CHECK(rf.total_mass() == 9);

    RepFunction single = rep_function(qset({5}), qset({5}), Law::add);
    REQUIRE(single.table.size() == 1);
    CHECK(single.count_of(FieldElem::of_int(Q, 10)) == 1);

    GroundField f7 = GroundField::prime(7);
    FiniteSet g = gen_mult_subgroup(7, 3);
    RepFunction rg = rep_function(g, g, Law::mul);
    REQUIRE(rg.table.size() == 3);
    for (const auto& [v, c] : rg.table) CHECK(c == 3);

    // support equals the pointwise combination
    std::vector<FieldElem> keys;
    for (const auto& [v, c] : rf.table) keys.push_back(v);
    CHECK(FiniteSet::make(Q, keys) == pointwise_combine(qset({1, 2, 3}), qset({1, 2, 3}), Law::add));
}

TEST_CASE("energy known values") {
    CHECK(energy(qset({1, 2, 3}), Law::add) == 19);
    CHECK(oracle::quadruple_energy(qset({1, 2, 3}), Law::add) == 19);

    CHECK(energy(qset({1, 2, 4}), Law::mul) == 19);
    CHECK(oracle::quadruple_energy(qset({1, 2, 4}), Law::mul) == 19);

    FiniteSet g7 = gen_mult_subgroup(7, 3);
    CHECK(energy(g7, Law::mul) == 27);   // |A|^3: subgroup saturates the upper bound
    CHECK(oracle::quadruple_energy(g7, Law::mul) == 27);

    CHECK(energy_bruteforce(qset({1, 2}), qset({10, 20}), Law::add) == 4);
    CHECK(energy_bruteforce(qset({1, 2, 5, 11}), Law::add) == 28);   // Sidon: 2|A|^2 - |A|
    CHECK(energy_bruteforce(qset({5}), Law::add) == 1);

    CHECK_THROWS_AS(energy(qset({0, 1}), Law::mul), input_error);
    CHECK_THROWS_AS(energy_bruteforce(gen_range(Q, 1, 40), Law::add), input_error);   // cap
}

TEST_CASE("closed form for AP additive energy") {
    for (unsigned long n : {3ul, 8ul, 16ul}) {
        FiniteSet ap = gen_ap(Q, FieldElem::of_int(Q, 1), FieldElem::of_int(Q, 1), n);
        mpz_class formula = (2 * mpz_class(n) * n * n + n) / 3;
        CHECK(energy(ap, Law::add) == formula);
        CHECK(energy_bruteforce(ap, Law::add) == formula);
    }
}

TEST_CASE("oracle equivalence on random sets, both fields and laws") {
    Rng rng(99);
    GroundField f101 = GroundField::prime(101);
    for (int trial = 0; trial < 40; ++trial) {
        FiniteSet a = random_qset(rng, 12, true);
        FiniteSet b = random_qset(rng, 12, true);
        for (Law law : {Law::add, Law::mul}) {
            CHECK(energy(a, b, law) == energy_bruteforce(a, b, law));
        }
        std::vector<FieldElem> v;
        std::size_t n = 2 + rng.below(12);
        while (v.size() < n) {
            std::int64_t r = 1 + static_cast<std::int64_t>(rng.below(100));
            v.push_back(FieldElem::residue(f101, r));
        }
        FiniteSet c = FiniteSet::make(f101, std::move(v));
        for (Law law : {Law::add, Law::mul}) {
            CHECK(energy(c, law) == energy_bruteforce(c, law));
        }
    }
}

TEST_CASE("energy invariances") {
    Rng rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        FiniteSet a = random_qset(rng, 14, true);
        FiniteSet b = random_qset(rng, 14, true);
        // symmetry
        CHECK(energy(a, b, Law::add) == energy(b, a, Law::add));
        CHECK(energy(a, b, Law::mul) == energy(b, a, Law::mul));
        // dilation invariance, lambda != 0
        FieldElem lambda = FieldElem::rational(3, 2);
        CHECK(energy(dilate_set(a, lambda), Law::add) == energy(a, Law::add));
        CHECK(energy(dilate_set(a, lambda), Law::mul) == energy(a, Law::mul));
        // translation invariance of the additive energy
        FieldElem t = FieldElem::of_int(Q, 17);
        CHECK(energy(translate_set(a, t), Law::add) == energy(a, Law::add));
        // plus-minus symmetry: sum and difference convolutions match in L2
        CHECK(detail::table_energy(a, a, Law::add) == detail::table_energy(a, negate_set(a), Law::add));
    }
}

TEST_CASE("self-energy bounds") {
    Rng rng(123);
    for (int trial = 0; trial < 25; ++trial) {
        FiniteSet a = random_qset(rng, 14, true);
        mpz_class n(static_cast<unsigned long>(a.size()));
        for (Law law : {Law::add, Law::mul}) {
            mpz_class e = energy(a, law);
            CHECK(e >= n * n);
            CHECK(e <= n * n * n);
        }
    }
}

TEST_CASE("cauchy_schwarz_check examples") {
    CauchySchwarzReport r = cauchy_schwarz_check(qset({1, 2, 3}));
    CHECK(r.add_side == 95);   // 19 * 5
    CHECK(r.fourth_power == 81);
    CHECK(r.pass);

    CauchySchwarzReport s = cauchy_schwarz_check(qset({5}));
    CHECK(s.add_side == 1);
    CHECK(s.fourth_power == 1);
    CHECK(s.pass);

    CauchySchwarzReport t = cauchy_schwarz_check(qset({1, 2, 4}));
    CHECK(t.mul_side == 95);   // 19 * |{1,2,4,8,16}|
    CHECK(t.pass);
}

TEST_CASE("quarter power inequality") {
    QuarterPowerReport one = quarter_power_check({qset({1, 2, 3})}, Law::add);
    CHECK(one.pass);
    CHECK(one.lhs <= one.rhs);

    QuarterPowerReport two = quarter_power_check({qset({1, 2, 3}), qset({10, 20, 30})}, Law::add);
    CHECK(two.pass);
    CHECK(two.union_energy == oracle::quadruple_energy(qset({1, 2, 3, 10, 20, 30}), Law::add));

    QuarterPowerReport three = quarter_power_check({qset({1, 2}), qset({4, 8}), qset({16, 32})}, Law::mul);
    CHECK(three.pass);

    CHECK_THROWS_AS(quarter_power_check({qset({1, 2}), qset({2, 3})}, Law::add), input_error);

    // seeded random partitions
    Rng rng(31337);
    for (int trial = 0; trial < 60; ++trial) {
        FiniteSet a = random_qset(rng, 16, true);
        std::size_t parts_n = 1 + rng.below(5);
        std::vector<std::vector<FieldElem>> buckets(parts_n);
        for (const auto& e : a.elems()) buckets[rng.below(parts_n)].push_back(e);
        std::vector<FiniteSet> parts;
        for (auto& b : buckets)
            if (!b.empty()) parts.push_back(FiniteSet::make(Q, std::move(b)));
        if (parts.empty()) continue;
        for (Law law : {Law::add, Law::mul}) {
            CHECK(quarter_power_check(parts, law).pass);
        }
    }
}

TEST_CASE("partition-merge equals direct count") {
    // Splitting the pair enumeration and merging tables must not change the
    // result; emulate a two-worker split by set halves.
    Rng rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        FiniteSet a = random_qset(rng, 16, true);
        auto [h1, h2] = a.alternating_split();
        // r_{A+A} = r_{h1+A} + r_{h2+A} pointwise; compare energies via the
        // merged table.
        auto t1 = detail::pair_table(h1, a, Law::add);
        auto t2 = detail::pair_table(h2, a, Law::add);
        for (const auto& [k, c] : t2) t1[k] += c;
        CHECK(detail::sum_of_squares(t1) == energy(a, Law::add));
    }
}
