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

#include <array>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "config.hpp"
#include "eigen.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "qubits.hpp"

namespace decohere {

/**
 * Density matrix of an n-qubit register.
 *
 * from_matrix() enforces Hermiticity, unit trace and positivity. Library
 * operations that preserve those properties by construction build results
 * through the unchecked constructor instead of paying for an eigensolve.
 */
class DensityMatrix {
  public:
    struct Unchecked {};

    DensityMatrix(int n_qubits, ComplexMatrix mat, Unchecked) : n_(n_qubits), mat_(std::move(mat)) {}

    [[nodiscard]] static DensityMatrix from_matrix(int n_qubits, ComplexMatrix mat,
                                                   const NumericConfig &cfg = default_config()) {
        if (n_qubits < 1) {
            throw InvalidSizeError("DensityMatrix: n_qubits must be >= 1");
        }
        if (n_qubits > cfg.max_qubits) {
            throw CapacityError("DensityMatrix: " + std::to_string(n_qubits) +
                                " qubits exceeds capacity " + std::to_string(cfg.max_qubits));
        }
        if (mat.dim() != (std::size_t{1} << n_qubits)) {
            throw SizeMismatchError("DensityMatrix: dimension is not 2^n_qubits");
        }
        if (hermiticity_defect(mat) > cfg.hermitian_tol) {
            throw SymmetryError("DensityMatrix: matrix is not Hermitian");
        }
        const Complex tr = mat.trace();
        if (std::abs(tr - 1.0) > cfg.trace_tol) {
            throw NormalizationError("DensityMatrix: trace " + std::to_string(tr.real()) +
                                     " is not 1");
        }
        const auto eig = hermitian_eigenvalues(mat, cfg);
        if (eig.front() < cfg.psd_floor) {
            throw InvalidArgumentError("DensityMatrix: not positive semidefinite (min eigenvalue " +
                                       std::to_string(eig.front()) + ")");
        }
        return {n_qubits, std::move(mat), Unchecked{}};
    }

    [[nodiscard]] int n_qubits() const noexcept { return n_; }
    [[nodiscard]] std::size_t dim() const noexcept { return mat_.dim(); }
    [[nodiscard]] const ComplexMatrix &matrix() const noexcept { return mat_; }
    [[nodiscard]] Complex operator()(std::size_t r, std::size_t c) const noexcept { return mat_(r, c); }

  private:
    int n_;
    ComplexMatrix mat_;
};

/// ρ_A ⊗ ρ_B, with A's qubits first.
[[nodiscard]] inline DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b,
                                          const NumericConfig &cfg = default_config()) {
    if (a.n_qubits() + b.n_qubits() > cfg.max_qubits) {
        throw CapacityError("tensor: combined register exceeds capacity");
    }
    return {a.n_qubits() + b.n_qubits(), kron(a.matrix(), b.matrix(), cfg),
            DensityMatrix::Unchecked{}};
}

namespace detail {

// Basis indices obtained by scattering each value in [0, 2^k) into the
// given bit positions (listed from most to least significant).
inline std::vector<std::size_t> scatter_table(std::span<const unsigned> positions) {
    const std::size_t k = positions.size();
    std::vector<std::size_t> table(std::size_t{1} << k);
    for (std::size_t v = 0; v < table.size(); ++v) {
        std::size_t idx = 0;
        for (std::size_t j = 0; j < k; ++j) {
            if ((v >> (k - 1 - j)) & 1U) {
                idx |= std::size_t{1} << positions[j];
            }
        }
        table[v] = idx;
    }
    return table;
}

} // namespace detail

/**
 * Trace out `traced`. The remaining qubits keep their relative order and are
 * renumbered 1..(n − |traced|).
 */
[[nodiscard]] inline DensityMatrix partial_trace(const DensityMatrix &rho, const QubitSubset &traced) {
    if (traced.n_qubits() != rho.n_qubits()) {
        throw SizeMismatchError("partial_trace: subset register size differs from state");
    }
    traced.require_proper("partial_trace");
    const int n = rho.n_qubits();

    std::vector<unsigned> kept_pos;
    std::vector<unsigned> traced_pos;
    for (int q = 1; q <= n; ++q) {
        (traced.contains(q) ? traced_pos : kept_pos).push_back(basis_bit(n, q));
    }
    const auto kept = detail::scatter_table(kept_pos);
    const auto env = detail::scatter_table(traced_pos);

    ComplexMatrix out(kept.size());
    for (std::size_t r = 0; r < kept.size(); ++r) {
        for (std::size_t c = 0; c < kept.size(); ++c) {
            Complex s = 0.0;
            for (const std::size_t t : env) {
                s += rho(kept[r] | t, kept[c] | t);
            }
            out(r, c) = s;
        }
    }
    return {static_cast<int>(kept_pos.size()), std::move(out), DensityMatrix::Unchecked{}};
}

/**
 * Transpose the tensor factors belonging to `cut`: the bits of the row and
 * column index on the cut's qubits are exchanged.
 */
[[nodiscard]] inline ComplexMatrix partial_transpose(const DensityMatrix &rho, const QubitSubset &cut) {
    if (cut.n_qubits() != rho.n_qubits()) {
        throw SizeMismatchError("partial_transpose: subset register size differs from state");
    }
    cut.require_proper("partial_transpose");
    const std::size_t mask = cut.basis_mask();
    const std::size_t d = rho.dim();
    ComplexMatrix out(d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            const std::size_t rs = (r & ~mask) | (c & mask);
            const std::size_t cs = (c & ~mask) | (r & mask);
            out(r, c) = rho(rs, cs);
        }
    }
    return out;
}

/// ρ ↦ UρU† for a 2^k×2^k unitary U acting on `targets` (1-based, U's first
/// factor on targets[0]). Only used internally; no unitarity check.
[[nodiscard]] inline ComplexMatrix conjugate_by_local(const ComplexMatrix &rho, int n_qubits,
                                                      std::span<const int> targets,
                                                      const ComplexMatrix &u) {
    const std::size_t k = targets.size();
    if (u.dim() != (std::size_t{1} << k)) {
        throw SizeMismatchError("conjugate_by_local: operator size does not match targets");
    }
    std::vector<unsigned> pos;
    std::size_t tmask = 0;
    for (int q : targets) {
        if (q < 1 || q > n_qubits) {
            throw InvalidArgumentError("conjugate_by_local: target out of range");
        }
        pos.push_back(basis_bit(n_qubits, q));
        tmask |= basis_mask_of(n_qubits, q);
    }
    const auto local = detail::scatter_table(pos);
    const std::size_t d = rho.dim();
    const std::size_t m = local.size();

    // Left: (Uρ) on row groups.
    ComplexMatrix left(d);
    std::vector<Complex> buf(m);
    for (std::size_t base = 0; base < d; ++base) {
        if (base & tmask) {
            continue;
        }
        for (std::size_t c = 0; c < d; ++c) {
            for (std::size_t i = 0; i < m; ++i) {
                buf[i] = rho(base | local[i], c);
            }
            for (std::size_t i = 0; i < m; ++i) {
                Complex s = 0.0;
                for (std::size_t j = 0; j < m; ++j) {
                    s += u(i, j) * buf[j];
                }
                left(base | local[i], c) = s;
            }
        }
    }
    // Right: (Uρ)U† on column groups.
    ComplexMatrix out(d);
    for (std::size_t base = 0; base < d; ++base) {
        if (base & tmask) {
            continue;
        }
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t i = 0; i < m; ++i) {
                buf[i] = left(r, base | local[i]);
            }
            for (std::size_t i = 0; i < m; ++i) {
                Complex s = 0.0;
                for (std::size_t j = 0; j < m; ++j) {
                    s += buf[j] * std::conj(u(i, j));
                }
                out(r, base | local[i]) = s;
            }
        }
    }
    return out;
}

} // namespace decohere
