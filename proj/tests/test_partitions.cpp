#include <catch2/catch_amalgamated.hpp>

#include "sym2gw/partitions.hpp"

#include "support/set_partitions.hpp"

#include <map>
#include <random>

using namespace sym2gw;

namespace {

OddPartitionType type_of_sizes(const std::vector<int>& sizes) {
    OddPartitionType t;
    for (int s : sizes) {
        std::size_t i = static_cast<std::size_t>((s - 1) / 2);
        if (t.counts.size() <= i) t.counts.resize(i + 1, 0);
        ++t.counts[i];
    }
    return t;
}

bool all_odd(const std::vector<int>& sizes) {
    for (int s : sizes)
        if (s % 2 == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("partitions: closed-form type counts") {
    CHECK(partition_type_count(4, OddPartitionType{{4}}) == 1);       // 1^4
    CHECK(partition_type_count(4, OddPartitionType{{1, 1}}) == 4);    // 1^1 3^1
    CHECK(partition_type_count(6, OddPartitionType{{0, 2}}) == 10);   // 3^2
    CHECK_THROWS_AS(partition_type_count(5, OddPartitionType{{4}}), TypeMismatch);
}

TEST_CASE("partitions: closed form matches brute-force enumeration up to n = 10") {
    for (int n = 2; n <= 10; n += 2) {
        std::map<std::vector<long>, long> observed;
        long odd_total = 0;
        testsupport::for_each_set_partition(n, [&](const std::vector<int>& sizes) {
            if (!all_odd(sizes)) return;
            ++odd_total;
            ++observed[type_of_sizes(sizes).counts];
        });
        Integer closed_total = 0;
        for (const auto& [counts, count] : observed) {
            OddPartitionType t{counts};
            CHECK(partition_type_count(n, t) == Integer(count));
            closed_total += partition_type_count(n, t);
        }
        CHECK(closed_total == Integer(odd_total));
    }
}

TEST_CASE("partitions: type enumeration satisfies the index constraints") {
    for (long g = 0; g <= 5; ++g)
        for (long gp = 0; gp <= g; ++gp)
            for (const auto& t : odd_types(2 * gp + 2, g - gp)) {
                CHECK(t.num_parts() == 2 * gp + 2);
                CHECK(t.weighted_index_sum() == g - gp);
                CHECK(t.total_elements() == 2 * g + 2);
            }
}

TEST_CASE("partitions: conversion matrix entries") {
    ConversionMatrix m(6);
    CHECK(m.at(0, 0) == Rational(2));
    CHECK(m.at(1, 1) == Rational(24));
    CHECK(m.at(1, 0) == Rational(-2));
    for (int g = 0; g <= 6; ++g) {
        CHECK(m.at(g, g) == Rational(factorial(2 * static_cast<unsigned long>(g) + 2)));
        for (int gp = g + 1; gp <= 6; ++gp) CHECK(m.at(gp, g) == m.at(gp, g));  // shape sanity
    }
}

TEST_CASE("partitions: matrix rows match direct summation over set partitions") {
    // Direct route: enumerate partitions of [2g+2], keep the all-odd ones,
    // and accumulate (-1/4)^(g-g') (2g'+2)! by the number of parts.
    ConversionMatrix m(5);
    for (int g = 0; g <= 5; ++g) {
        std::vector<Rational> direct(static_cast<std::size_t>(g) + 1);
        testsupport::for_each_set_partition(2 * g + 2, [&](const std::vector<int>& sizes) {
            if (!all_odd(sizes)) return;
            long parts = static_cast<long>(sizes.size());
            if (parts % 2 != 0) return;  // parts = 2g' + 2 is automatically even
            long gp = parts / 2 - 1;
            if (gp < 0 || gp > g) return;
            direct[static_cast<std::size_t>(gp)] +=
                pow_rat(Rational(-1, 4), g - gp) *
                Rational(factorial(static_cast<unsigned long>(parts)));
        });
        for (int gp = 0; gp <= g; ++gp) {
            INFO("row g=" << g << " column g'=" << gp);
            CHECK(m.at(g, gp) == direct[static_cast<std::size_t>(gp)]);
        }
    }
}

TEST_CASE("partitions: J/E conversion round trips exactly") {
    std::mt19937 rng(987654321);
    std::uniform_int_distribution<long> num(-2000, 2000), den(1, 97);
    for (int max_g = 0; max_g <= 6; ++max_g) {
        ConversionMatrix m(max_g);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Rational> e(static_cast<std::size_t>(max_g) + 1);
            for (auto& x : e) x = Rational(num(rng), den(rng));
            CHECK(m.e_from_j(m.j_from_e(e)) == e);
        }
    }

    // The two lowest rows by hand: J0 = 2 E0, J1 = 24 E1 - 2 E0.
    ConversionMatrix m1(1);
    auto j = m1.j_from_e({Rational(5), Rational(7)});
    CHECK(j[0] == Rational(10));
    CHECK(j[1] == Rational(24 * 7 - 2 * 5));
}
