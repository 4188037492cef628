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

#include <bit>
#include <cmath>
#include <numeric>
#include <vector>

#include "catch2/catch_amalgamated.hpp"

#include "decohere/density.hpp"
#include "decohere/entanglement.hpp"
#include "decohere/matrix.hpp"
#include "decohere/states.hpp"

using namespace decohere;
using Catch::Matchers::WithinAbs;

namespace {

double squared_norm(const StateVector &v) {
    double s = 0.0;
    for (const auto &a : v.amplitudes()) {
        s += std::norm(a);
    }
    return s;
}

// Relabel qubits a and b (1-based) of a density matrix.
ComplexMatrix swap_qubits(const DensityMatrix &rho, int a, int b) {
    const int n = rho.n_qubits();
    auto perm = [&](std::size_t x) {
        const auto ba = basis_bit(n, a);
        const auto bb = basis_bit(n, b);
        const std::size_t xa = (x >> ba) & 1U;
        const std::size_t xb = (x >> bb) & 1U;
        x &= ~((std::size_t{1} << ba) | (std::size_t{1} << bb));
        return x | (xa << bb) | (xb << ba);
    };
    ComplexMatrix out(rho.dim());
    for (std::size_t r = 0; r < rho.dim(); ++r)
        for (std::size_t c = 0; c < rho.dim(); ++c)
            out(perm(r), perm(c)) = rho(r, c);
    return out;
}

ComplexMatrix kron_chain(const std::vector<ComplexMatrix> &f) { return kron_all(f); }

} // namespace

TEST_CASE("make_ghz", "[states]") {
    const auto g2 = make_ghz(2);
    CHECK(g2[0] == Complex(M_SQRT1_2));
    CHECK(g2[3] == Complex(M_SQRT1_2));
    CHECK(g2[1] == Complex(0));
    CHECK(g2[2] == Complex(0));

    SECTION("n=3 density equals the four-term tensor expansion") {
        ComplexMatrix expect = kron_chain({ops::p0(), ops::p0(), ops::p0()});
        expect += kron_chain({ops::s_plus(), ops::s_plus(), ops::s_plus()});
        expect += kron_chain({ops::s_minus(), ops::s_minus(), ops::s_minus()});
        expect += kron_chain({ops::p1(), ops::p1(), ops::p1()});
        expect *= 0.5;
        CHECK(max_abs_diff(to_density(make_ghz(3)).matrix(), expect) < 1e-15);
    }

    SECTION("four nonzero entries of modulus 1/2") {
        for (int n = 2; n <= 7; ++n) {
            const auto rho = to_density(make_ghz(n));
            int nz = 0;
            for (const auto &z : rho.matrix().entries()) {
                if (z != Complex{}) {
                    ++nz;
                    CHECK_THAT(std::abs(z), WithinAbs(0.5, 1e-15));
                }
            }
            CHECK(nz == 4);
        }
    }

    CHECK_THROWS_AS(make_ghz(1), InvalidSizeError);
}

TEST_CASE("make_w", "[states]") {
    const auto w2 = make_w(2);
    CHECK_THAT(w2[1].real(), WithinAbs(M_SQRT1_2, 1e-16));
    CHECK_THAT(w2[2].real(), WithinAbs(M_SQRT1_2, 1e-16));
    CHECK(w2[0] == Complex(0));
    CHECK(w2[3] == Complex(0));

    SECTION("n=3 diagonal and N(N-1) cross terms") {
        const auto rho = to_density(make_w(3));
        int cross = 0;
        for (std::size_t r = 0; r < 8; ++r) {
            for (std::size_t c = 0; c < 8; ++c) {
                const bool wr = std::popcount(r) == 1;
                const bool wc = std::popcount(c) == 1;
                if (r == c) {
                    CHECK_THAT(rho(r, c).real(), WithinAbs(wr ? 1.0 / 3 : 0.0, 1e-15));
                } else if (wr && wc) {
                    ++cross;
                    CHECK_THAT(rho(r, c).real(), WithinAbs(1.0 / 3, 1e-15));
                } else {
                    CHECK(rho(r, c) == Complex{});
                }
            }
        }
        CHECK(cross == 6);
    }

    SECTION("n=4 matches a direct outer product") {
        std::vector<Complex> v(16);
        for (std::size_t x : {1U, 2U, 4U, 8U}) {
            v[x] = 0.5;
        }
        CHECK(max_abs_diff(to_density(make_w(4)).matrix(), ComplexMatrix::outer(v, v)) < 1e-15);
    }

    CHECK_THROWS_AS(make_w(0), InvalidSizeError);
}

TEST_CASE("make_cluster", "[states]") {
    const auto c2 = make_cluster(2);
    CHECK_THAT(c2[0].real(), WithinAbs(0.5, 1e-15));
    CHECK_THAT(c2[1].real(), WithinAbs(0.5, 1e-15));
    CHECK_THAT(c2[2].real(), WithinAbs(0.5, 1e-15));
    CHECK_THAT(c2[3].real(), WithinAbs(-0.5, 1e-15));

    SECTION("sign is the parity of adjacent 11 pairs") {
        for (int n = 2; n <= 8; ++n) {
            const auto c = make_cluster(n);
            const double mod = std::pow(2.0, -0.5 * n);
            for (std::size_t x = 0; x < (std::size_t{1} << n); ++x) {
                int pairs = 0;
                for (int q = 1; q < n; ++q) {
                    pairs += ((x >> basis_bit(n, q)) & 1U) && ((x >> basis_bit(n, q + 1)) & 1U);
                }
                CHECK_THAT(c[x].real(), WithinAbs(pairs % 2 ? -mod : mod, 1e-15));
                CHECK(c[x].imag() == 0.0);
            }
        }
    }

    SECTION("n=2 reduced states are maximally mixed") {
        const auto rho = to_density(make_cluster(2));
        for (int q : {1, 2}) {
            const auto red = partial_trace(rho, QubitSubset::of(2, {q}));
            CHECK(max_abs_diff(red.matrix(), ComplexMatrix::identity(2) * 0.5) < 1e-15);
        }
    }

    SECTION("n=3 undecohered PT minimum is -1/2 on every cut") {
        const auto rho = to_density(make_cluster(3));
        for (const auto &cut : enumerate_cuts(3)) {
            CHECK_THAT(negativity_oracle(rho, cut).min_eigenvalue, WithinAbs(-0.5, 1e-12));
        }
    }

    CHECK_THROWS_AS(make_cluster(1), InvalidSizeError);
}

TEST_CASE("to_density", "[states]") {
    const StateVector zero(1, {1.0, 0.0});
    CHECK(to_density(zero).matrix() == ops::p0());

    const auto g = to_density(make_ghz(2));
    CHECK_THAT(g(0, 0).real(), WithinAbs(0.5, 1e-15));
    CHECK_THAT(g(0, 3).real(), WithinAbs(0.5, 1e-15));
    CHECK_THAT(g(3, 0).real(), WithinAbs(0.5, 1e-15));
    CHECK_THAT(g(3, 3).real(), WithinAbs(0.5, 1e-15));

    SECTION("purity is 1 at n=5") {
        for (const auto &psi : {make_ghz(5), make_w(5), make_cluster(5)}) {
            const auto rho = to_density(psi).matrix();
            CHECK_THAT((rho * rho).trace().real(), WithinAbs(1.0, 1e-12));
            CHECK_THAT(rho.trace().real(), WithinAbs(1.0, 1e-12));
        }
    }

    CHECK_THROWS_AS(StateVector(1, {1.0, 1.0}), NormalizationError);
    CHECK_THROWS_AS(StateVector(1, {1.0}), SizeMismatchError);
}

TEST_CASE("state invariants", "[states]") {
    for (int n = 2; n <= 6; ++n) {
        CHECK_THAT(squared_norm(make_ghz(n)), WithinAbs(1.0, 1e-12));
        CHECK_THAT(squared_norm(make_w(n)), WithinAbs(1.0, 1e-12));
        CHECK_THAT(squared_norm(make_cluster(n)), WithinAbs(1.0, 1e-12));
    }

    SECTION("GHZ and W are permutation symmetric") {
        for (int n = 2; n <= 5; ++n) {
            for (const auto &rho : {to_density(make_ghz(n)), to_density(make_w(n))}) {
                for (int a = 1; a <= n; ++a) {
                    for (int b = a + 1; b <= n; ++b) {
                        CHECK(max_abs_diff(swap_qubits(rho, a, b), rho.matrix()) == 0.0);
                    }
                }
            }
        }
    }

    SECTION("capacity") {
        NumericConfig cfg;
        cfg.max_qubits = 4;
        CHECK_THROWS_AS(make_ghz(5, cfg), CapacityError);
    }
}
