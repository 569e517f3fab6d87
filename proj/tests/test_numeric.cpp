#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hyperdiv/numeric.hpp"

using namespace hyperdiv;

TEST_CASE("compensated sum recovers terms lost to cancellation") {
    CompensatedSum s;
    s.add(1e16);
    s.add(1.0);  // naive double addition would drop this term
    s.add(-1e16);
    CHECK(s.value() == 1.0);

    CompensatedSum alt;
    for (int i = 0; i < 10000; ++i) alt.add(0.1);
    CHECK(alt.value() == doctest::Approx(1000.0).epsilon(1e-14));
}

TEST_CASE("compensated complex sum matches componentwise") {
    CompensatedComplexSum s;
    s.add({1e16, 1.0});
    s.add({1.0, 1e16});
    s.add({-1e16, -1e16});
    CHECK(s.value().real() == 1.0);
    CHECK(s.value().imag() == 1.0);
}

TEST_CASE("unit_phase basic values and periodicity") {
    CHECK(unit_phase(0.0) == std::complex<double>(1.0, 0.0));
    CHECK(std::abs(unit_phase(0.25) - std::complex<double>(0.0, 1.0)) < 1e-15);
    CHECK(std::abs(unit_phase(0.5) - std::complex<double>(-1.0, 0.0)) < 1e-15);
    // integer arguments (including large ones) give exactly 1 after reduction
    CHECK(std::abs(unit_phase(1234567.0) - std::complex<double>(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(unit_phase(-3.0) - std::complex<double>(1.0, 0.0)) < 1e-15);
    // reduction mod 1: t and t+k agree when both are exactly representable
    CHECK(std::abs(unit_phase(1048576.25) - unit_phase(0.25)) < 1e-12);
    // modulus 1 for arbitrary arguments
    for (double t : {0.1, -0.7, 3.9, 1e7 + 0.3}) {
        CHECK(std::abs(std::abs(unit_phase(t)) - 1.0) < 1e-15);
    }
    // tiny negative arguments reduce to phase 0, not phase 1 - epsilon overflow
    CHECK(std::abs(unit_phase(-1e-18) - std::complex<double>(1.0, 0.0)) < 1e-12);
}

TEST_CASE("mix_seed is deterministic and spreads indices") {
    CHECK(mix_seed(42, 0) == mix_seed(42, 0));
    CHECK(mix_seed(42, 0) != mix_seed(42, 1));
    CHECK(mix_seed(42, 0) != mix_seed(43, 0));
    // low bits vary across consecutive indices
    int distinct_low = 0;
    std::vector<int> seen(16, 0);
    for (std::uint64_t i = 0; i < 16; ++i) {
        int low = static_cast<int>(mix_seed(7, i) & 15u);
        if (!seen[low]) ++distinct_low;
        seen[low] = 1;
    }
    CHECK(distinct_low >= 8);
}

TEST_CASE("integer_sqrt exact on edges") {
    CHECK(integer_sqrt(0) == 0);
    CHECK(integer_sqrt(1) == 1);
    CHECK(integer_sqrt(3) == 1);
    CHECK(integer_sqrt(4) == 2);
    CHECK(integer_sqrt(15) == 3);
    CHECK(integer_sqrt(16) == 4);
    const std::uint64_t big = (std::uint64_t(1) << 28) - 1;
    CHECK(integer_sqrt(big * big) == big);
    CHECK(integer_sqrt(big * big - 1) == big - 1);
    CHECK(integer_sqrt(big * big + 1) == big);
    CHECK(integer_sqrt((std::uint64_t(1) << 56)) == (std::uint64_t(1) << 28));
}

TEST_CASE("parallel_for covers every index exactly once") {
    const std::size_t count = 1000;
    for (unsigned threads : {1u, 2u, 4u}) {
        std::vector<int> hits(count, 0);
        parallel_for(count, threads, [&](std::size_t i) { hits[i] += 1; });
        CHECK(std::accumulate(hits.begin(), hits.end(), 0) == static_cast<int>(count));
        CHECK(*std::min_element(hits.begin(), hits.end()) == 1);
        CHECK(*std::max_element(hits.begin(), hits.end()) == 1);
    }
    // zero work items is a no-op
    parallel_for(0, 4, [&](std::size_t) { CHECK(false); });
}

TEST_CASE("parallel_for propagates the first exception") {
    auto run = [](unsigned threads) {
        parallel_for(100, threads, [](std::size_t i) {
            if (i == 37) throw std::runtime_error("boom");
        });
    };
    CHECK_THROWS_AS(run(1), std::runtime_error);
    CHECK_THROWS_AS(run(4), std::runtime_error);
}

TEST_CASE("resolve_threads") {
    CHECK(resolve_threads(3) == 3);
    CHECK(resolve_threads(0) >= 1);
}
