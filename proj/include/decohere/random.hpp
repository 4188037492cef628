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
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "collision.hpp"
#include "density.hpp"
#include "matrix.hpp"
#include "states.hpp"

namespace decohere {

/**
 * Seeded sampler for randomized test inputs.
 *
 * Draws are derived from raw mt19937_64 output (whose sequence is fixed by
 * the standard) rather than std distributions, so a seed reproduces the
 * same values with any standard library.
 */
class Sampler {
  public:
    explicit Sampler(std::uint64_t seed) : eng_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi].
    int integer(int lo, int hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(eng_() % span);
    }

    double normal() {
        // Box–Muller; 1 − u keeps the log argument in (0, 1].
        const double u = 1.0 - uniform();
        const double v = uniform();
        return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
    }

    Complex complex_normal() { return {normal(), normal()}; }

    /// Haar-like random pure state on n qubits.
    StateVector ket(int n) {
        std::vector<Complex> a(std::size_t{1} << n);
        double norm = 0.0;
        for (auto &z : a) {
            z = complex_normal();
            norm += std::norm(z);
        }
        const double s = 1.0 / std::sqrt(norm);
        for (auto &z : a) {
            z *= s;
        }
        return {n, std::move(a)};
    }

    /// Random Hermitian matrix with entries of order one.
    ComplexMatrix hermitian(std::size_t dim) {
        ComplexMatrix h(dim);
        for (std::size_t r = 0; r < dim; ++r) {
            h(r, r) = normal();
            for (std::size_t c = r + 1; c < dim; ++c) {
                h(r, c) = complex_normal();
                h(c, r) = std::conj(h(r, c));
            }
        }
        return h;
    }

    /// Random mixed state GG†/tr(GG†) with `rank` Gaussian columns.
    DensityMatrix density(int n, std::size_t rank = 0) {
        const std::size_t d = std::size_t{1} << n;
        if (rank == 0) {
            rank = d;
        }
        std::vector<Complex> g(d * rank);
        for (auto &z : g) {
            z = complex_normal();
        }
        ComplexMatrix m(d);
        double tr = 0.0;
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = r; c < d; ++c) {
                Complex s = 0.0;
                for (std::size_t k = 0; k < rank; ++k) {
                    s += g[r * rank + k] * std::conj(g[c * rank + k]);
                }
                m(r, c) = s;
                m(c, r) = std::conj(s);
            }
            tr += m(r, r).real();
        }
        for (std::size_t r = 0; r < d; ++r) {
            m(r, r) = m(r, r).real();
        }
        m *= 1.0 / tr;
        return {n, std::move(m), DensityMatrix::Unchecked{}};
    }

    double phase() { return uniform(0.0, 2.0 * std::numbers::pi); }

    MicroCollisionSpec collision_spec() {
        return {ket(1), phase(), ket(1), phase(), density(1)};
    }

    /// Up to `max_k` collisions per qubit with λ ∈ [lambda_lo, lambda_hi].
    CollisionSchedule schedule(int n, int max_k, double lambda_lo = 0.0, double lambda_hi = 1.0) {
        CollisionSchedule s(n);
        for (auto &list : s.per_qubit) {
            const int k = integer(0, max_k);
            for (int j = 0; j < k; ++j) {
                list.emplace_back(uniform(lambda_lo, lambda_hi), phase());
            }
        }
        return s;
    }

    AggregateDephasing dephasing(int n) {
        std::vector<double> g(static_cast<std::size_t>(n));
        std::vector<double> p(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < g.size(); ++i) {
            g[i] = uniform();
            p[i] = phase();
        }
        return {std::move(g), std::move(p)};
    }

  private:
    std::mt19937_64 eng_;
};

} // namespace decohere
