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
#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "config.hpp"
#include "density.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "states.hpp"

namespace decohere {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduce an angle into [0, 2π).
[[nodiscard]] inline double normalize_phase(double phi) {
    if (!std::isfinite(phi)) {
        throw NonFiniteError("normalize_phase: non-finite angle");
    }
    double r = std::fmod(phi, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    // fmod of a tiny negative value can round back up to exactly 2π.
    return r >= kTwoPi ? 0.0 : r;
}

/// One collision: ⟨X⟩_ξ = λ·e^{iφ}.
struct CollisionParams {
    double lambda = 1.0;
    double phi = 0.0;

    CollisionParams() = default;
    CollisionParams(double lam, double ph) : lambda(lam), phi(normalize_phase(ph)) {
        if (!(lam >= 0.0 && lam <= 1.0)) {
            throw InvalidArgumentError("CollisionParams: lambda " + std::to_string(lam) +
                                       " outside [0, 1]");
        }
    }
};

/// Ordered collisions suffered by each system qubit; index 0 is qubit 1.
struct CollisionSchedule {
    int n_qubits = 0;
    std::vector<std::vector<CollisionParams>> per_qubit;

    explicit CollisionSchedule(int n) : n_qubits(n), per_qubit(static_cast<std::size_t>(n)) {
        if (n < 1) {
            throw InvalidSizeError("CollisionSchedule: n_qubits must be >= 1");
        }
    }

    /// K identical collisions (λ, φ) on every qubit.
    static CollisionSchedule homogeneous(int n, int k, double lambda, double phi = 0.0) {
        if (k < 0) {
            throw InvalidArgumentError("CollisionSchedule: K must be >= 0");
        }
        CollisionSchedule s(n);
        const CollisionParams p(lambda, phi);
        for (auto &list : s.per_qubit) {
            list.assign(static_cast<std::size_t>(k), p);
        }
        return s;
    }
};

/// Per-qubit dephasing strength γ_i ∈ [0, 1] and accumulated phase Φ_i.
struct AggregateDephasing {
    std::vector<double> gamma;
    std::vector<double> phase;

    AggregateDephasing(std::vector<double> g, std::vector<double> p)
        : gamma(std::move(g)), phase(std::move(p)) {
        if (gamma.empty() || gamma.size() != phase.size()) {
            throw SizeMismatchError("AggregateDephasing: gamma/phase length mismatch");
        }
        for (double x : gamma) {
            if (!(x >= 0.0 && x <= 1.0)) {
                throw InvalidArgumentError("AggregateDephasing: gamma " + std::to_string(x) +
                                           " outside [0, 1]");
            }
        }
        for (double &x : phase) {
            x = normalize_phase(x);
        }
    }

    /// Zero phases.
    explicit AggregateDephasing(std::vector<double> g)
        : AggregateDephasing(g, std::vector<double>(g.size(), 0.0)) {}

    static AggregateDephasing identity(int n) {
        return AggregateDephasing(std::vector<double>(static_cast<std::size_t>(n), 1.0));
    }

    static AggregateDephasing uniform(int n, double g) {
        return AggregateDephasing(std::vector<double>(static_cast<std::size_t>(n), g));
    }

    [[nodiscard]] int n_qubits() const noexcept { return static_cast<int>(gamma.size()); }
};

/// Channel composition: strengths multiply, phases add.
[[nodiscard]] inline AggregateDephasing compose(const AggregateDephasing &a,
                                                const AggregateDephasing &b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw SizeMismatchError("compose: register sizes differ");
    }
    std::vector<double> g(a.gamma.size());
    std::vector<double> p(a.gamma.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        g[i] = a.gamma[i] * b.gamma[i];
        p[i] = a.phase[i] + b.phase[i];
    }
    return {std::move(g), std::move(p)};
}

/// γ_i = Π_j λ_ij and Φ_i = Σ_j φ_ij mod 2π. No collisions gives (1, 0).
[[nodiscard]] inline AggregateDephasing schedule_aggregate(const CollisionSchedule &sched) {
    std::vector<double> g(sched.per_qubit.size(), 1.0);
    std::vector<double> p(sched.per_qubit.size(), 0.0);
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (const auto &c : sched.per_qubit[i]) {
            g[i] *= c.lambda;
            p[i] = normalize_phase(p[i] + c.phi);
        }
    }
    return {std::move(g), std::move(p)};
}

/**
 * Multiply entry (r, c) by Π_i f_i where, for qubit i,
 *   f_i = 1                 if bit_i(r) = bit_i(c),
 *   f_i = γ_i·e^{+iΦ_i}     if bit_i(r) = 0, bit_i(c) = 1,
 *   f_i = γ_i·e^{−iΦ_i}     if bit_i(r) = 1, bit_i(c) = 0.
 * The diagonal is untouched.
 */
[[nodiscard]] inline DensityMatrix apply_dephasing(const DensityMatrix &rho,
                                                   const AggregateDephasing &agg) {
    const int n = rho.n_qubits();
    if (agg.n_qubits() != n) {
        throw SizeMismatchError("apply_dephasing: schedule has " + std::to_string(agg.n_qubits()) +
                                " qubits, state has " + std::to_string(n));
    }
    // Factors indexed by basis bit position.
    std::vector<Complex> up(static_cast<std::size_t>(n));
    std::vector<Complex> down(static_cast<std::size_t>(n));
    for (int q = 1; q <= n; ++q) {
        const auto b = basis_bit(n, q);
        const double g = agg.gamma[static_cast<std::size_t>(q - 1)];
        const double ph = agg.phase[static_cast<std::size_t>(q - 1)];
        up[b] = g * std::polar(1.0, ph);
        down[b] = g * std::polar(1.0, -ph);
    }
    const std::size_t d = rho.dim();
    ComplexMatrix out = rho.matrix();
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            std::size_t diff = r ^ c;
            if (diff == 0) {
                continue;
            }
            Complex f = 1.0;
            while (diff != 0) {
                const auto b = static_cast<std::size_t>(std::countr_zero(diff));
                f *= ((c >> b) & 1U) ? up[b] : down[b];
                diff &= diff - 1;
            }
            out(r, c) *= f;
        }
    }
    return {n, std::move(out), DensityMatrix::Unchecked{}};
}

[[nodiscard]] inline DensityMatrix apply_schedule(const DensityMatrix &rho,
                                                  const CollisionSchedule &sched) {
    if (sched.n_qubits != rho.n_qubits()) {
        throw SizeMismatchError("apply_schedule: schedule size differs from state");
    }
    return apply_dephasing(rho, schedule_aggregate(sched));
}

// ---------------------------------------------------------------------------
// Microscopic collision model
// ---------------------------------------------------------------------------

/// ψ⊥ = e^{iθ}·(−b̄, ā) for ψ = (a, b).
[[nodiscard]] inline std::array<Complex, 2> perp_ket(const StateVector &psi, double theta) {
    const Complex ph = std::polar(1.0, theta);
    return {ph * -std::conj(psi[1]), ph * std::conj(psi[0])};
}

/**
 * Environment-side description of one controlled collision:
 *   V⁰ = |ψ⟩⟨0| + |ψ⊥⟩⟨1|,   V¹ = |φ⊥⟩⟨0| + |φ⟩⟨1|,
 * with ψ⊥ = e^{iθ_ψ}(−b̄, ā) for ψ = (a, b) and φ⊥ = e^{iθ_φ}(d̄, −c̄) for
 * φ = (c, d). At zero phases both targets have unit determinant, so
 * ψ = |0⟩, φ = |1⟩ is the trivial collision.
 */
struct MicroCollisionSpec {
    StateVector psi;
    double psi_perp_phase = 0.0;
    StateVector phi_ket;
    double phi_perp_phase = 0.0;
    DensityMatrix xi;

    MicroCollisionSpec(StateVector psi_, double psi_perp, StateVector phi_, double phi_perp,
                       DensityMatrix xi_)
        : psi(std::move(psi_)), psi_perp_phase(psi_perp), phi_ket(std::move(phi_)),
          phi_perp_phase(phi_perp), xi(std::move(xi_)) {
        if (psi.n_qubits() != 1 || phi_ket.n_qubits() != 1) {
            throw InvalidSizeError("MicroCollisionSpec: kets must be single-qubit");
        }
        if (xi.n_qubits() != 1) {
            throw InvalidSizeError("MicroCollisionSpec: environment state must be single-qubit");
        }
        if (!std::isfinite(psi_perp_phase) || !std::isfinite(phi_perp_phase)) {
            throw NonFiniteError("MicroCollisionSpec: non-finite perpendicular phase");
        }
    }

    /// V⁰ (first) and V¹ (second).
    [[nodiscard]] std::pair<ComplexMatrix, ComplexMatrix> targets() const {
        const auto pp = perp_ket(psi, psi_perp_phase);
        const Complex ph = std::polar(1.0, phi_perp_phase);
        const std::array<Complex, 2> fp{ph * std::conj(phi_ket[1]), ph * -std::conj(phi_ket[0])};
        ComplexMatrix v0{{psi[0], pp[0]}, {psi[1], pp[1]}};
        ComplexMatrix v1{{fp[0], phi_ket[0]}, {fp[1], phi_ket[1]}};
        return {std::move(v0), std::move(v1)};
    }
};

/// U = |0⟩⟨0| ⊗ V⁰ + |1⟩⟨1| ⊗ V¹ on (system, environment).
[[nodiscard]] inline ComplexMatrix build_collision_unitary(const MicroCollisionSpec &spec) {
    const auto [v0, v1] = spec.targets();
    return kron(ops::p0(), v0) + kron(ops::p1(), v1);
}

/// λ·e^{iφ} = tr(ξX) for an arbitrary single-qubit operator X.
[[nodiscard]] inline CollisionParams expectation_params(const DensityMatrix &xi,
                                                        const ComplexMatrix &x) {
    if (xi.dim() != 2 || x.dim() != 2) {
        throw InvalidSizeError("expectation_params: single-qubit operands required");
    }
    const Complex t = (xi.matrix() * x).trace();
    // |tr(ξX)| ≤ 1 for unitary X; clip rounding overshoot.
    return {std::min(std::abs(t), 1.0), std::arg(t)};
}

/// Collision parameters ⟨X⟩_ξ for X = V¹†V⁰.
[[nodiscard]] inline CollisionParams x_expectation(const MicroCollisionSpec &spec) {
    const auto [v0, v1] = spec.targets();
    return expectation_params(spec.xi, dagger(v1) * v0);
}

/**
 * One explicit collision of system qubit `qubit` (1-based) with a fresh
 * environment qubit in state ξ, followed by tracing out the environment.
 */
[[nodiscard]] inline DensityMatrix apply_microscopic_collision(const DensityMatrix &rho, int qubit,
                                                               const MicroCollisionSpec &spec,
                                                               const NumericConfig &cfg = default_config()) {
    const int n = rho.n_qubits();
    if (qubit < 1 || qubit > n) {
        throw InvalidArgumentError("apply_microscopic_collision: qubit " + std::to_string(qubit) +
                                   " outside {1.." + std::to_string(n) + "}");
    }
    if (n + 1 > cfg.max_qubits) {
        throw CapacityError("apply_microscopic_collision: no room for an environment qubit");
    }
    const ComplexMatrix joint = kron(rho.matrix(), spec.xi.matrix(), cfg);
    const std::array<int, 2> targets{qubit, n + 1};
    ComplexMatrix evolved = conjugate_by_local(joint, n + 1, targets, build_collision_unitary(spec));
    const DensityMatrix full(n + 1, std::move(evolved), DensityMatrix::Unchecked{});
    return partial_trace(full, QubitSubset::of(n + 1, {n + 1}));
}

/// Dephasing that touches only `qubit` with the given collision parameters.
[[nodiscard]] inline AggregateDephasing single_qubit_dephasing(int n, int qubit,
                                                               const CollisionParams &p) {
    std::vector<double> g(static_cast<std::size_t>(n), 1.0);
    std::vector<double> ph(static_cast<std::size_t>(n), 0.0);
    g[static_cast<std::size_t>(qubit - 1)] = p.lambda;
    ph[static_cast<std::size_t>(qubit - 1)] = p.phi;
    return {std::move(g), std::move(ph)};
}

} // namespace decohere
