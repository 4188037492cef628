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

#include <bit>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "config.hpp"
#include "density.hpp"
#include "errors.hpp"
#include "matrix.hpp"

namespace decohere {

enum class FamilyKind { GHZ, W, LinearCluster };

[[nodiscard]] constexpr std::string_view to_string(FamilyKind k) noexcept {
    switch (k) {
    case FamilyKind::GHZ:
        return "GHZ";
    case FamilyKind::W:
        return "W";
    case FamilyKind::LinearCluster:
        return "LinearCluster";
    }
    return "?";
}

struct StateFamily {
    FamilyKind kind;
    int n_qubits;

    StateFamily(FamilyKind k, int n) : kind(k), n_qubits(n) {
        if (n < 2) {
            throw InvalidSizeError(std::string(to_string(k)) + " state needs at least 2 qubits");
        }
    }
};

/// Normalised pure state of an n-qubit register.
class StateVector {
  public:
    StateVector(int n_qubits, std::vector<Complex> amplitudes,
                const NumericConfig &cfg = default_config())
        : n_(n_qubits), amp_(std::move(amplitudes)) {
        if (n_qubits < 1) {
            throw InvalidSizeError("StateVector: n_qubits must be >= 1");
        }
        if (n_qubits > cfg.max_qubits) {
            throw CapacityError("StateVector: " + std::to_string(n_qubits) +
                                " qubits exceeds capacity");
        }
        if (amp_.size() != (std::size_t{1} << n_qubits)) {
            throw SizeMismatchError("StateVector: expected 2^n amplitudes");
        }
        double norm = 0.0;
        for (const auto &a : amp_) {
            if (!is_finite(a)) {
                throw NonFiniteError("StateVector: non-finite amplitude");
            }
            norm += std::norm(a);
        }
        if (std::abs(norm - 1.0) > cfg.norm_tol) {
            throw NormalizationError("StateVector: squared norm " + std::to_string(norm) +
                                     " is not 1");
        }
    }

    [[nodiscard]] int n_qubits() const noexcept { return n_; }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept { return amp_; }
    [[nodiscard]] Complex operator[](std::size_t i) const noexcept { return amp_[i]; }

  private:
    int n_;
    std::vector<Complex> amp_;
};

namespace detail {
inline void require_family_size(int n, const char *who, const NumericConfig &cfg) {
    if (n < 2) {
        throw InvalidSizeError(std::string(who) + ": need n >= 2, got " + std::to_string(n));
    }
    if (n > cfg.max_qubits) {
        throw CapacityError(std::string(who) + ": " + std::to_string(n) +
                            " qubits exceeds capacity");
    }
}
} // namespace detail

/// (|0…0⟩ + |1…1⟩)/√2
[[nodiscard]] inline StateVector make_ghz(int n, const NumericConfig &cfg = default_config()) {
    detail::require_family_size(n, "make_ghz", cfg);
    std::vector<Complex> a(std::size_t{1} << n);
    a.front() = M_SQRT1_2;
    a.back() = M_SQRT1_2;
    return {n, std::move(a), cfg};
}

/// Uniform superposition of the n single-excitation basis states.
[[nodiscard]] inline StateVector make_w(int n, const NumericConfig &cfg = default_config()) {
    detail::require_family_size(n, "make_w", cfg);
    std::vector<Complex> a(std::size_t{1} << n);
    const double amp = 1.0 / std::sqrt(static_cast<double>(n));
    for (int q = 1; q <= n; ++q) {
        a[basis_mask_of(n, q)] = amp;
    }
    return {n, std::move(a), cfg};
}

/// Linear cluster state: CZ between every neighbouring pair applied to |+⟩^⊗n.
/// The amplitude of basis state x is 2^{−n/2}·(−1)^{#adjacent 11 pairs in x}.
[[nodiscard]] inline StateVector make_cluster(int n, const NumericConfig &cfg = default_config()) {
    detail::require_family_size(n, "make_cluster", cfg);
    const std::size_t d = std::size_t{1} << n;
    const double amp = std::pow(2.0, -0.5 * n);
    std::vector<Complex> a(d);
    for (std::size_t x = 0; x < d; ++x) {
        // x & (x >> 1) marks each adjacent pair of set bits once.
        const int pairs = std::popcount(x & (x >> 1));
        a[x] = (pairs % 2 == 0) ? amp : -amp;
    }
    return {n, std::move(a), cfg};
}

[[nodiscard]] inline StateVector make_state(const StateFamily &family,
                                            const NumericConfig &cfg = default_config()) {
    switch (family.kind) {
    case FamilyKind::GHZ:
        return make_ghz(family.n_qubits, cfg);
    case FamilyKind::W:
        return make_w(family.n_qubits, cfg);
    case FamilyKind::LinearCluster:
        return make_cluster(family.n_qubits, cfg);
    }
    throw InvalidArgumentError("make_state: unknown family");
}

/// |ψ⟩⟨ψ|
[[nodiscard]] inline DensityMatrix to_density(const StateVector &psi) {
    return {psi.n_qubits(), ComplexMatrix::outer(psi.amplitudes(), psi.amplitudes()),
            DensityMatrix::Unchecked{}};
}

} // namespace decohere
