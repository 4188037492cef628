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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "config.hpp"
#include "errors.hpp"
#include "matrix.hpp"

namespace decohere {

namespace detail {

// Union-find over basis indices joined by a nonzero off-diagonal entry.
class DisjointSets {
  public:
    explicit DisjointSets(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent_[std::max(a, b)] = std::min(a, b);
        }
    }

  private:
    std::vector<std::size_t> parent_;
};

/**
 * Cyclic complex Jacobi on a dense Hermitian block held row-major in `a`.
 *
 * Each rotation acts in the (p, q) plane with
 *   G = [[c, s·e^{iα}], [−s·e^{−iα}, c]],  a_pq = |a_pq|·e^{iα},
 * and A ← G†AG annihilates a_pq. Exact zeros stay zero under rotations
 * whose plane does not touch them, so sparse inputs stay cheap.
 */
inline std::vector<double> jacobi_block(std::vector<Complex> a, std::size_t n,
                                        const NumericConfig &cfg) {
    auto at = [&](std::size_t r, std::size_t c) -> Complex & { return a[r * n + c]; };

    double total = 0.0;
    for (const auto &z : a) {
        total += std::norm(z);
    }
    const double target = cfg.eigen_rel_tol * std::sqrt(total);

    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = r + 1; c < n; ++c) {
                s += std::norm(at(r, c));
            }
        }
        return std::sqrt(2.0 * s);
    };

    int sweep = 0;
    while (off_norm() > target) {
        if (sweep++ >= cfg.eigen_max_sweeps) {
            throw ConvergenceError("hermitian_eigenvalues: no convergence after " +
                                   std::to_string(cfg.eigen_max_sweeps) + " sweeps");
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = at(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) {
                    continue;
                }
                const double app = at(p, p).real();
                const double aqq = at(q, q).real();
                // Entry already negligible against both diagonals.
                if (sweep > 4 && std::abs(app) + 100.0 * mag == std::abs(app) &&
                    std::abs(aqq) + 100.0 * mag == std::abs(aqq)) {
                    at(p, q) = 0.0;
                    at(q, p) = 0.0;
                    continue;
                }
                const Complex phase = apq / mag;
                const double theta = (aqq - app) / (2.0 * mag);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0) {
                    t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const Complex sp = s * phase;            // s·e^{iα}
                const Complex sm = s * std::conj(phase); // s·e^{−iα}

                // Columns: A ← A·G.
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = at(k, p);
                    const Complex akq = at(k, q);
                    at(k, p) = c * akp - sm * akq;
                    at(k, q) = sp * akp + c * akq;
                }
                // Rows: A ← G†·A.
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = at(p, k);
                    const Complex aqk = at(q, k);
                    at(p, k) = c * apk - sp * aqk;
                    at(q, k) = sm * apk + c * aqk;
                }
                at(p, p) = app - t * mag;
                at(q, q) = aqq + t * mag;
                at(p, q) = 0.0;
                at(q, p) = 0.0;
            }
        }
    }

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) {
        eig[i] = at(i, i).real();
    }
    return eig;
}

} // namespace detail

/**
 * All eigenvalues of a Hermitian matrix, ascending.
 *
 * The matrix is first split into the connected components of its nonzero
 * off-diagonal pattern (a permutation similarity, so the spectrum is exact),
 * then each block is diagonalised by cyclic Jacobi rotations. The result is
 * a deterministic function of the input entries.
 *
 * Throws SymmetryError if ‖a − a†‖_max exceeds the configured tolerance.
 */
[[nodiscard]] inline std::vector<double>
hermitian_eigenvalues(const ComplexMatrix &a, const NumericConfig &cfg = default_config()) {
    const double defect = hermiticity_defect(a);
    if (defect > cfg.eigen_input_hermitian_tol) {
        throw SymmetryError("hermitian_eigenvalues: input not Hermitian (defect " +
                            std::to_string(defect) + ")");
    }
    const std::size_t n = a.dim();

    detail::DisjointSets sets(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = r + 1; c < n; ++c) {
            if (a(r, c) != Complex{} || a(c, r) != Complex{}) {
                sets.unite(r, c);
            }
        }
    }
    std::vector<std::vector<std::size_t>> blocks(n);
    for (std::size_t i = 0; i < n; ++i) {
        blocks[sets.find(i)].push_back(i);
    }

    std::vector<double> eig;
    eig.reserve(n);
    for (const auto &members : blocks) {
        const std::size_t m = members.size();
        if (m == 0) {
            continue;
        }
        if (m == 1) {
            eig.push_back(a(members[0], members[0]).real());
            continue;
        }
        // Symmetrise so the block is exactly Hermitian.
        std::vector<Complex> block(m * m);
        for (std::size_t i = 0; i < m; ++i) {
            block[i * m + i] = a(members[i], members[i]).real();
            for (std::size_t j = i + 1; j < m; ++j) {
                const Complex v =
                    0.5 * (a(members[i], members[j]) + std::conj(a(members[j], members[i])));
                block[i * m + j] = v;
                block[j * m + i] = std::conj(v);
            }
        }
        const auto part = detail::jacobi_block(std::move(block), m, cfg);
        eig.insert(eig.end(), part.begin(), part.end());
    }
    std::sort(eig.begin(), eig.end());
    return eig;
}

} // namespace decohere
