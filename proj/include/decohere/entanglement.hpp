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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "collision.hpp"
#include "config.hpp"
#include "density.hpp"
#include "eigen.hpp"
#include "errors.hpp"
#include "qubits.hpp"
#include "states.hpp"

namespace decohere {

/**
 * A bipartition P₁ | P₂ of an n-qubit register.
 *
 * A cut and its complement describe the same bipartition, so the canonical
 * form always keeps qubit 1 in P₁.
 */
class BipartiteCut {
  public:
    explicit BipartiteCut(const QubitSubset &side) : p1_(side) {
        if (side.n_qubits() < 2) {
            throw InvalidPartitionError("BipartiteCut: need at least 2 qubits");
        }
        side.require_proper("BipartiteCut");
        if (!p1_.contains(1)) {
            p1_ = p1_.complement();
        }
    }

    /// Bit (i−1) of `p1_bits` set iff qubit i ∈ P₁.
    BipartiteCut(int n_qubits, std::uint64_t p1_bits) : BipartiteCut(QubitSubset(n_qubits, p1_bits)) {}

    [[nodiscard]] int n_qubits() const noexcept { return p1_.n_qubits(); }
    [[nodiscard]] const QubitSubset &p1() const noexcept { return p1_; }
    [[nodiscard]] QubitSubset p2() const { return p1_.complement(); }
    [[nodiscard]] std::uint64_t bitmask() const noexcept { return p1_.bits(); }

    /// e.g. "1,3|2"
    [[nodiscard]] std::string human() const {
        auto join = [](const std::vector<int> &qs) {
            std::string s;
            for (std::size_t i = 0; i < qs.size(); ++i) {
                if (i != 0) {
                    s += ',';
                }
                s += std::to_string(qs[i]);
            }
            return s;
        };
        return join(p1_.members()) + "|" + join(p2().members());
    }

    friend bool operator==(const BipartiteCut &, const BipartiteCut &) = default;

  private:
    QubitSubset p1_;
};

/// All 2^{n−1} − 1 bipartitions, ordered by ascending P₁ bitmask.
[[nodiscard]] inline std::vector<BipartiteCut> enumerate_cuts(int n) {
    if (n < 2) {
        throw InvalidSizeError("enumerate_cuts: need n >= 2");
    }
    if (n > 62) {
        throw CapacityError("enumerate_cuts: register too large");
    }
    std::vector<BipartiteCut> cuts;
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    cuts.reserve(static_cast<std::size_t>((std::uint64_t{1} << (n - 1)) - 1));
    for (std::uint64_t m = 1; m < full; m += 2) {
        cuts.emplace_back(n, m);
    }
    return cuts;
}

/// Which oracle quantity a closed form predicts.
enum class FormulaTarget {
    MinEigenvalue, ///< signed most-negative PT eigenvalue
    NegativitySum, ///< Σ|λ| over negative PT eigenvalues
};

struct ClosedForm {
    double value;
    std::string name;
    FormulaTarget target;
};

struct NegativityReport {
    BipartiteCut cut;
    double min_eigenvalue;
    double negativity_sum;
    std::optional<double> formula_value;
    std::optional<std::string> formula_name;
    FormulaTarget formula_target = FormulaTarget::MinEigenvalue;

    /// Oracle value the attached formula is compared with.
    [[nodiscard]] double observed() const noexcept {
        return formula_target == FormulaTarget::MinEigenvalue ? min_eigenvalue : negativity_sum;
    }

    [[nodiscard]] std::optional<double> abs_error() const {
        if (!formula_value) {
            return std::nullopt;
        }
        return std::abs(observed() - *formula_value);
    }
};

/**
 * Exact spectrum of the partial transpose over P₁.
 *
 * Eigenvalues below −zero_threshold count as negative; a smallest eigenvalue
 * in [−zero_threshold, 0] is reported as 0.
 */
[[nodiscard]] inline NegativityReport negativity_oracle(const DensityMatrix &rho, const BipartiteCut &cut,
                                                        const NumericConfig &cfg = default_config()) {
    if (cut.n_qubits() != rho.n_qubits()) {
        throw SizeMismatchError("negativity_oracle: cut register size differs from state");
    }
    const auto eig = hermitian_eigenvalues(partial_transpose(rho, cut.p1()), cfg);
    double neg = 0.0;
    for (double e : eig) {
        if (e < -cfg.zero_threshold) {
            neg -= e;
        }
    }
    double min_eig = eig.front();
    if (min_eig >= -cfg.zero_threshold && min_eig <= 0.0) {
        min_eig = 0.0;
    }
    return {cut, min_eig, neg, std::nullopt, std::nullopt, FormulaTarget::MinEigenvalue};
}

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

/// −½·Π γ_i, the single negative PT eigenvalue of a dephased GHZ state
/// (identical for every cut).
[[nodiscard]] inline double ghz_negativity_formula(const AggregateDephasing &agg) {
    double p = 1.0;
    for (double g : agg.gamma) {
        p *= g;
    }
    return -0.5 * p + 0.0;
}

/// −(1/N)·√((Σ_{P₁} γ²)(Σ_{P₂} γ²)) for a dephased W state.
[[nodiscard]] inline double w_negativity_formula(const AggregateDephasing &agg, const BipartiteCut &cut) {
    const int n = cut.n_qubits();
    if (agg.n_qubits() != n) {
        throw SizeMismatchError("w_negativity_formula: schedule size differs from cut");
    }
    double s1 = 0.0;
    double s2 = 0.0;
    for (int q = 1; q <= n; ++q) {
        const double g = agg.gamma[static_cast<std::size_t>(q - 1)];
        (cut.p1().contains(q) ? s1 : s2) += g * g;
    }
    return -std::sqrt(s1 * s2) / n + 0.0;
}

/// (γ_a γ_b + γ_a + γ_b − 1)/4
[[nodiscard]] inline double cluster_eta_pair(double ga, double gb) noexcept {
    return (ga * gb + ga + gb - 1.0) / 4.0;
}

/// [(1 + γ₁)γ₂(1 + γ₃) − (1 − γ₁)(1 − γ₃)]/8
[[nodiscard]] inline double cluster_eta_triple(double g1, double g2, double g3) noexcept {
    return ((1.0 + g1) * g2 * (1.0 + g3) - (1.0 - g1) * (1.0 - g3)) / 8.0;
}

/**
 * Negativity (sum of negative PT eigenvalue magnitudes, ≥ 0) of a dephased
 * linear cluster state with 2 or 3 qubits:
 *   n = 2:               max{η₁₂, 0}
 *   n = 3, {1}|{2,3}:    max{η₁₂, 0}
 *   n = 3, {1,2}|{3}:    max{η₂₃, 0}
 *   n = 3, {1,3}|{2}:    max{η₁₂, η₂₃, η₁₂₃, 0}
 * Other sizes throw FormulaUnavailableError.
 */
[[nodiscard]] inline double cluster_negativity_formula(const AggregateDephasing &agg,
                                                       const BipartiteCut &cut, int n) {
    if (n != 2 && n != 3) {
        throw FormulaUnavailableError("cluster_negativity_formula: no closed form for n = " +
                                      std::to_string(n));
    }
    if (cut.n_qubits() != n || agg.n_qubits() != n) {
        throw SizeMismatchError("cluster_negativity_formula: sizes disagree");
    }
    const auto &g = agg.gamma;
    if (n == 2) {
        return std::max(cluster_eta_pair(g[0], g[1]), 0.0);
    }
    const double e12 = cluster_eta_pair(g[0], g[1]);
    const double e23 = cluster_eta_pair(g[1], g[2]);
    switch (cut.bitmask()) {
    case 0b001:
        return std::max(e12, 0.0);
    case 0b011:
        return std::max(e23, 0.0);
    default: // 0b101
        return std::max({e12, e23, cluster_eta_triple(g[0], g[1], g[2]), 0.0});
    }
}

/// The closed form applicable to (family, cut), if any.
[[nodiscard]] inline std::optional<ClosedForm> closed_form(FamilyKind kind, const AggregateDephasing &agg,
                                                           const BipartiteCut &cut) {
    switch (kind) {
    case FamilyKind::GHZ:
        return ClosedForm{ghz_negativity_formula(agg), "ghz", FormulaTarget::MinEigenvalue};
    case FamilyKind::W:
        return ClosedForm{w_negativity_formula(agg, cut), "w", FormulaTarget::MinEigenvalue};
    case FamilyKind::LinearCluster:
        if (cut.n_qubits() == 2 || cut.n_qubits() == 3) {
            return ClosedForm{cluster_negativity_formula(agg, cut, cut.n_qubits()), "cluster",
                              FormulaTarget::NegativitySum};
        }
        return std::nullopt;
    }
    return std::nullopt;
}

/// Oracle report for a dephased family state, with its closed form attached
/// when one exists.
[[nodiscard]] inline NegativityReport evaluate_cut(FamilyKind kind, const DensityMatrix &rho,
                                                   const AggregateDephasing &agg, const BipartiteCut &cut,
                                                   const NumericConfig &cfg = default_config()) {
    auto report = negativity_oracle(rho, cut, cfg);
    if (auto f = closed_form(kind, agg, cut)) {
        report.formula_value = f->value;
        report.formula_name = f->name;
        report.formula_target = f->target;
    }
    return report;
}

// ---------------------------------------------------------------------------
// Distillability and thresholds
// ---------------------------------------------------------------------------

struct DistillabilityVerdict {
    bool all_cuts_npt;
    std::vector<BipartiteCut> ppt_cuts;
    BipartiteCut worst_cut;
    std::vector<NegativityReport> reports;
};

/// NPT across every bipartite cut (necessary for N-partite distillability).
[[nodiscard]] inline DistillabilityVerdict distillability_check(const DensityMatrix &rho,
                                                                const NumericConfig &cfg = default_config()) {
    const auto cuts = enumerate_cuts(rho.n_qubits());
    std::vector<NegativityReport> reports;
    reports.reserve(cuts.size());
    std::vector<BipartiteCut> ppt;
    std::size_t worst = 0;
    for (const auto &cut : cuts) {
        reports.push_back(negativity_oracle(rho, cut, cfg));
        const auto &r = reports.back();
        if (!(r.min_eigenvalue < -cfg.zero_threshold)) {
            ppt.push_back(cut);
        }
        if (r.min_eigenvalue > reports[worst].min_eigenvalue) {
            worst = reports.size() - 1;
        }
    }
    const BipartiteCut worst_cut = reports[worst].cut;
    return {ppt.empty(), std::move(ppt), worst_cut, std::move(reports)};
}

/**
 * Homogeneous γ at which the given cut of the dephased family state switches
 * between PPT and NPT, located by bisection on the oracle.
 *
 * Throws BracketError when [lo, hi] does not contain a transition.
 */
[[nodiscard]] inline double critical_gamma(const StateFamily &family, const BipartiteCut &cut, double lo,
                                           double hi, const NumericConfig &cfg = default_config()) {
    if (cut.n_qubits() != family.n_qubits) {
        throw SizeMismatchError("critical_gamma: cut register size differs from family");
    }
    if (!(lo >= 0.0 && hi <= 1.0 && lo < hi)) {
        throw InvalidArgumentError("critical_gamma: need 0 <= lo < hi <= 1");
    }
    const DensityMatrix pure = to_density(make_state(family, cfg));
    auto npt = [&](double g) {
        const auto rho = apply_dephasing(pure, AggregateDephasing::uniform(family.n_qubits, g));
        return negativity_oracle(rho, cut, cfg).min_eigenvalue < -cfg.zero_threshold;
    };
    bool lo_npt = npt(lo);
    if (lo_npt == npt(hi)) {
        throw BracketError("critical_gamma: no PPT/NPT transition in [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]");
    }
    for (int it = 0; it < cfg.bisection_max_iterations && hi - lo > cfg.bisection_tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (npt(mid) == lo_npt) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace decohere
