// Copyright 2026 The decohere Authors

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <vector>

#include "catch2/catch_amalgamated.hpp"

#include "decohere/collision.hpp"
#include "decohere/entanglement.hpp"
#include "decohere/random.hpp"

using namespace decohere;
using Catch::Matchers::WithinAbs;

namespace {

DensityMatrix dephased(FamilyKind kind, int n, const AggregateDephasing &agg) {
    return apply_dephasing(to_density(make_state({kind, n})), agg);
}

// Real root of γ³ + γ² + 3γ − 1 by Cardano's formula.
double cubic_root_cardano() {
    const double p = 8.0 / 3.0;
    const double q = -52.0 / 27.0;
    const double disc = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
    return std::cbrt(-q / 2.0 + disc) + std::cbrt(-q / 2.0 - disc) - 1.0 / 3.0;
}

} // namespace

TEST_CASE("enumerate_cuts", "[entanglement]") {
    CHECK(enumerate_cuts(2).size() == 1);
    const auto c3 = enumerate_cuts(3);
    REQUIRE(c3.size() == 3);
    CHECK(c3[0].human() == "1|2,3");
    CHECK(c3[1].human() == "1,2|3");
    CHECK(c3[2].human() == "1,3|2");
    CHECK(enumerate_cuts(10).size() == 511);
    CHECK_THROWS_AS(enumerate_cuts(1), InvalidSizeError);

    SECTION("canonical form keeps qubit 1 on the first side") {
        CHECK(BipartiteCut(3, 0b110) == BipartiteCut(3, 0b001));
        CHECK(BipartiteCut(4, 0b0100).bitmask() == 0b1011);
        CHECK_THROWS_AS(BipartiteCut(3, 0b111), InvalidPartitionError);
        CHECK_THROWS_AS(BipartiteCut(3, 0), InvalidPartitionError);
    }
}

TEST_CASE("negativity_oracle", "[entanglement]") {
    SECTION("homogeneous GHZ4: -1/2 lambda^(4K) on every cut") {
        for (int k : {1, 2}) {
            const double lambda = 0.8;
            const auto rho = apply_schedule(to_density(make_ghz(4)), CollisionSchedule::homogeneous(4, k, lambda));
            for (const auto &cut : enumerate_cuts(4)) {
                CHECK_THAT(negativity_oracle(rho, cut).min_eigenvalue, WithinAbs(-0.5 * std::pow(lambda, 4 * k), 1e-14));
            }
        }
    }

    SECTION("W4 balanced cut: sqrt(2*2)/4") {
        const auto rep = negativity_oracle(to_density(make_w(4)), BipartiteCut(4, 0b0011));
        CHECK_THAT(rep.min_eigenvalue, WithinAbs(-0.5, 1e-14));
        CHECK_THAT(rep.negativity_sum, WithinAbs(0.5, 1e-14));
    }

    SECTION("separable product state") {
        const StateVector psi(2, {M_SQRT1_2, M_SQRT1_2, 0.0, 0.0}); // |0>|+>
        const auto rep = negativity_oracle(to_density(psi), BipartiteCut(2, 1));
        CHECK(rep.min_eigenvalue >= -1e-10);
        CHECK(rep.negativity_sum == 0.0);
    }

    SECTION("tiny negative eigenvalues are clamped") {
        // diag(0.5, 0.5, 0, 0) with a 1e-12 coherence gives PT eigenvalue −1e-12.
        ComplexMatrix m(4);
        m(0, 0) = 0.5;
        m(3, 3) = 0.5;
        m(1, 2) = 1e-12;
        m(2, 1) = 1e-12;
        const DensityMatrix rho(2, m, DensityMatrix::Unchecked{});
        const auto rep = negativity_oracle(rho, BipartiteCut(2, 1));
        CHECK(rep.min_eigenvalue == 0.0);
        CHECK(rep.negativity_sum == 0.0);
    }
}

TEST_CASE("ghz_negativity_formula", "[entanglement]") {
    CHECK(ghz_negativity_formula(AggregateDephasing::identity(5)) == -0.5);
    CHECK(ghz_negativity_formula(AggregateDephasing({1.0, 0.0, 0.7})) == 0.0);
    CHECK_FALSE(std::signbit(ghz_negativity_formula(AggregateDephasing({1.0, 0.0, 0.7}))));

    SECTION("lambda=0.9, K=2, N=3 against the oracle") {
        const auto agg = schedule_aggregate(CollisionSchedule::homogeneous(3, 2, 0.9));
        const double formula = ghz_negativity_formula(agg);
        CHECK_THAT(formula, WithinAbs(-0.2657205, 1e-7));
        const auto rho = dephased(FamilyKind::GHZ, 3, agg);
        for (const auto &cut : enumerate_cuts(3)) {
            CHECK_THAT(negativity_oracle(rho, cut).min_eigenvalue, WithinAbs(formula, 1e-12));
        }
    }
}

TEST_CASE("w_negativity_formula", "[entanglement]") {
    SECTION("N=2 agrees with GHZ") {
        CHECK_THAT(w_negativity_formula(AggregateDephasing::identity(2), BipartiteCut(2, 1)), WithinAbs(-0.5, 1e-15));
    }

    SECTION("balanced cut is independent of N") {
        for (int n : {2, 4, 6, 8}) {
            for (int k : {1, 3}) {
                const double lambda = 0.7;
                const auto agg = schedule_aggregate(CollisionSchedule::homogeneous(n, k, lambda));
                const BipartiteCut cut(n, (std::uint64_t{1} << (n / 2)) - 1);
                CHECK_THAT(w_negativity_formula(agg, cut), WithinAbs(-std::pow(lambda, 2 * k) / 2, 1e-15));
            }
        }
    }

    SECTION("only qubit 1 decohered") {
        const int n = 6;
        const double lk = std::pow(0.6, 2); // λ^K with K = 2
        std::vector<double> g(n, 1.0);
        g[0] = lk;
        const AggregateDephasing agg(g);
        for (const auto &cut : enumerate_cuts(n)) {
            const int np1 = cut.p1().size();
            const double expect = -std::sqrt((np1 - 1 + lk * lk) * (n - np1)) / n;
            CHECK_THAT(w_negativity_formula(agg, cut), WithinAbs(expect, 1e-15));
            CHECK_THAT(negativity_oracle(dephased(FamilyKind::W, n, agg), cut).min_eigenvalue, WithinAbs(expect, 1e-12));
        }
    }

    SECTION("only qubit 1 decohered, seen from the side without qubit 1") {
        // −(1/N)√(n(N − n − 1 + λ^{2K})) where n = |side without qubit 1|.
        const int n = 5;
        const double l2k = 0.3;
        std::vector<double> g(n, 1.0);
        g[0] = std::sqrt(l2k);
        const AggregateDephasing agg(g);
        for (const auto &cut : enumerate_cuts(n)) {
            const int other = cut.p2().size();
            const double expect = -std::sqrt(other * (n - other - 1 + l2k)) / n;
            CHECK_THAT(w_negativity_formula(agg, cut), WithinAbs(expect, 1e-15));
        }
    }
}

TEST_CASE("cluster_negativity_formula", "[entanglement]") {
    SECTION("undecohered value 1/2") {
        for (int n : {2, 3}) {
            for (const auto &cut : enumerate_cuts(n)) {
                CHECK_THAT(cluster_negativity_formula(AggregateDephasing::identity(n), cut, n), WithinAbs(0.5, 1e-15));
            }
        }
    }

    SECTION("two-qubit threshold") {
        const double g = std::sqrt(2.0) - 1.0;
        CHECK(std::abs(cluster_negativity_formula(AggregateDephasing::uniform(2, g), BipartiteCut(2, 1), 2)) < 1e-15);
    }

    SECTION("three-qubit middle-cut threshold") {
        const double v = cluster_negativity_formula(AggregateDephasing::uniform(3, 0.295598), BipartiteCut(3, 0b101), 3);
        CHECK(std::abs(v) < 5e-6);
    }

    SECTION("no closed form beyond three qubits") {
        CHECK_THROWS_AS(cluster_negativity_formula(AggregateDephasing::identity(4), BipartiteCut(4, 1), 4),
                        FormulaUnavailableError);
        CHECK_FALSE(closed_form(FamilyKind::LinearCluster, AggregateDephasing::identity(4), BipartiteCut(4, 1)));
    }

    SECTION("matches the oracle's negativity on a full grid") {
        // The formulas hold for the summed negative spectrum, including
        // inhomogeneous γ.
        for (int a = 0; a <= 10; ++a) {
            for (int b = 0; b <= 10; ++b) {
                const AggregateDephasing agg2({0.1 * a, 0.1 * b});
                const auto rep2 = evaluate_cut(FamilyKind::LinearCluster, dephased(FamilyKind::LinearCluster, 2, agg2), agg2,
                                               BipartiteCut(2, 1));
                CHECK(*rep2.abs_error() <= 1e-8);
                CHECK_THAT(std::min(rep2.min_eigenvalue, 0.0), WithinAbs(-rep2.negativity_sum, 1e-12));
                for (int c = 0; c <= 10; c += 2) {
                    const AggregateDephasing agg3({0.1 * a, 0.1 * b, 0.1 * c});
                    const auto rho = dephased(FamilyKind::LinearCluster, 3, agg3);
                    for (const auto &cut : enumerate_cuts(3)) {
                        CHECK(*evaluate_cut(FamilyKind::LinearCluster, rho, agg3, cut).abs_error() <= 1e-8);
                    }
                }
            }
        }
    }

    SECTION("outer cuts of the 3-qubit cluster split the negativity over two eigenvalues") {
        const auto rho = dephased(FamilyKind::LinearCluster, 3, AggregateDephasing::uniform(3, 0.5));
        const auto rep = negativity_oracle(rho, BipartiteCut(3, 0b001));
        CHECK_THAT(rep.negativity_sum, WithinAbs(0.0625, 1e-14));   // η₁₂ at γ = ½
        CHECK_THAT(rep.min_eigenvalue, WithinAbs(-0.046875, 1e-14)); // −3/64
        const auto mid = negativity_oracle(rho, BipartiteCut(3, 0b101));
        CHECK_THAT(mid.min_eigenvalue, WithinAbs(-mid.negativity_sum, 1e-14));
    }
}

TEST_CASE("distillability_check", "[entanglement]") {
    SECTION("pure GHZ3 is NPT on every cut") {
        const auto v = distillability_check(to_density(make_ghz(3)));
        CHECK(v.all_cuts_npt);
        CHECK(v.ppt_cuts.empty());
        CHECK(v.reports.size() == 3);
    }

    SECTION("GHZ3 with gamma_1 = 0 is PPT everywhere") {
        const auto rho = dephased(FamilyKind::GHZ, 3, AggregateDephasing({0.0, 1.0, 1.0}));
        const std::vector<Complex> d{0.5, 0, 0, 0, 0, 0, 0, 0.5};
        CHECK(max_abs_diff(rho.matrix(), ComplexMatrix::diagonal(d)) < 1e-15);
        const auto v = distillability_check(rho);
        CHECK_FALSE(v.all_cuts_npt);
        CHECK(v.ppt_cuts.size() == 3);
    }

    SECTION("W4 with gamma_1 = 0 keeps 3-partite NPT entanglement in the rest") {
        const auto rho = dephased(FamilyKind::W, 4, AggregateDephasing({0.0, 1.0, 1.0, 1.0}));
        const auto full = distillability_check(rho);
        CHECK_FALSE(full.all_cuts_npt);
        CHECK(full.worst_cut == BipartiteCut(4, 0b0001));
        const auto rest = distillability_check(partial_trace(rho, QubitSubset::of(4, {1})));
        CHECK(rest.all_cuts_npt);
    }
}

TEST_CASE("critical_gamma", "[entanglement]") {
    SECTION("two-qubit cluster") {
        const double g = critical_gamma({FamilyKind::LinearCluster, 2}, BipartiteCut(2, 1), 0.0, 1.0);
        CHECK_THAT(g, WithinAbs(std::sqrt(2.0) - 1.0, 1e-7));
    }

    SECTION("three-qubit cluster, middle cut") {
        const double g = critical_gamma({FamilyKind::LinearCluster, 3}, BipartiteCut(3, 0b101), 0.0, 1.0);
        CHECK_THAT(g, WithinAbs(0.295598, 5e-6));
        CHECK(std::abs(g * g * g + g * g + 3 * g - 1) <= 1e-8);
        CHECK_THAT(g, WithinAbs(cubic_root_cardano(), 1e-9));
    }

    SECTION("three-qubit cluster, outer cuts share the two-qubit threshold") {
        for (std::uint64_t m : {0b001U, 0b011U}) {
            const double g = critical_gamma({FamilyKind::LinearCluster, 3}, BipartiteCut(3, m), 0.0, 1.0);
            CHECK_THAT(g, WithinAbs(std::sqrt(2.0) - 1.0, 1e-7));
        }
    }

    SECTION("no transition in the bracket") {
        CHECK_THROWS_AS(critical_gamma({FamilyKind::GHZ, 3}, BipartiteCut(3, 1), 0.2, 1.0), BracketError);
        CHECK_THROWS_AS(critical_gamma({FamilyKind::LinearCluster, 2}, BipartiteCut(2, 1), 0.5, 0.4), InvalidArgumentError);
    }
}
