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
#include <functional>
#include <string>
#include <vector>

#include "collision.hpp"
#include "config.hpp"
#include "density.hpp"
#include "eigen.hpp"
#include "entanglement.hpp"
#include "matrix.hpp"
#include "random.hpp"
#include "states.hpp"

namespace decohere {

/// Outcome of one randomized property check. `worst` is the largest
/// violation metric seen; the property holds iff worst ≤ tolerance
/// (worst < tolerance when `strict`).
struct PropertyResult {
    std::string name;
    double worst = 0.0;
    double tolerance = 0.0;
    bool strict = false;
    std::size_t cases = 0;

    [[nodiscard]] bool passed() const noexcept {
        return strict ? worst < tolerance : worst <= tolerance;
    }

    void observe(double v) {
        // NaN must never pass.
        if (std::isnan(v)) {
            worst = INFINITY;
        } else {
            worst = std::max(worst, v);
        }
        ++cases;
    }
};

struct SuiteOptions {
    int max_n = 5;
    std::uint64_t seed = 1;
    /// Random cases per property (split across register sizes).
    int cases = 60;
};

namespace detail {

inline std::vector<int> sizes(int lo, int hi) {
    std::vector<int> out;
    for (int n = lo; n <= hi; ++n) {
        out.push_back(n);
    }
    return out;
}

// Random proper, nonempty subset.
inline QubitSubset random_proper_subset(Sampler &s, int n) {
    const auto full = (std::uint64_t{1} << n) - 1;
    const auto bits = static_cast<std::uint64_t>(s.integer(1, static_cast<int>(full) - 1));
    return {n, bits};
}

inline double multiset_distance(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

inline double least_squares_residual(const std::vector<double> &x, const std::vector<double> &y,
                                     double *slope_out = nullptr) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double icpt = (sy - slope * sx) / n;
    if (slope_out) {
        *slope_out = slope;
    }
    double r = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        r = std::max(r, std::abs(y[i] - (icpt + slope * x[i])));
    }
    return r;
}

} // namespace detail

// ---------------------------------------------------------------------------
// tensor-core
// ---------------------------------------------------------------------------

inline PropertyResult check_kron_associativity(const SuiteOptions &o) {
    PropertyResult r{"kron associativity", 0.0, 1e-14};
    Sampler s(o.seed ^ 0x1001);
    for (int i = 0; i < o.cases; ++i) {
        const auto a = s.hermitian(2) * s.complex_normal();
        const auto b = s.hermitian(static_cast<std::size_t>(s.integer(1, 3)));
        const auto c = s.hermitian(2);
        const auto left = kron(kron(a, b), c);
        r.observe(max_abs_diff(left, kron(a, kron(b, c))) / std::max(1.0, left.max_abs()));
    }
    return r;
}

inline PropertyResult check_partial_trace_preserves_trace(const SuiteOptions &o) {
    PropertyResult r{"partial_trace preserves trace", 0.0, 1e-12};
    Sampler s(o.seed ^ 0x1002);
    const auto ns = detail::sizes(2, o.max_n);
    for (int i = 0; i < o.cases; ++i) {
        const int n = ns[static_cast<std::size_t>(i) % ns.size()];
        const auto rho = s.density(n);
        const auto red = partial_trace(rho, detail::random_proper_subset(s, n));
        r.observe(std::abs(red.matrix().trace() - rho.matrix().trace()));
    }
    return r;
}

inline PropertyResult check_partial_transpose_involution(const SuiteOptions &o) {
    PropertyResult r{"partial_transpose involution, Hermiticity, trace", 0.0, 1e-14};
    Sampler s(o.seed ^ 0x1003);
    const auto ns = detail::sizes(2, o.max_n);
    for (int i = 0; i < o.cases; ++i) {
        const int n = ns[static_cast<std::size_t>(i) % ns.size()];
        const auto rho = s.density(n);
        const auto cut = detail::random_proper_subset(s, n);
        const auto pt = partial_transpose(rho, cut);
        const DensityMatrix as_state(n, pt, DensityMatrix::Unchecked{});
        const auto back = partial_transpose(as_state, cut);
        double v = max_abs_diff(back, rho.matrix());
        v = std::max(v, hermiticity_defect(pt));
        v = std::max(v, std::abs(pt.trace() - rho.matrix().trace()));
        r.observe(v);
    }
    return r;
}

inline PropertyResult check_eigen_trace(const SuiteOptions &o) {
    PropertyResult r{"eigenvalues sum to trace (scaled by 1/dim)", 0.0, 1e-9};
    Sampler s(o.seed ^ 0x1004);
    const auto ns = detail::sizes(1, o.max_n);
    for (int i = 0; i < o.cases; ++i) {
        const std::size_t d = std::size_t{1} << ns[static_cast<std::size_t>(i) % ns.size()];
        const auto h = s.hermitian(d);
        const auto eig = hermitian_eigenvalues(h);
        double sum = 0.0;
        for (double e : eig) {
            sum += e;
        }
        r.observe(std::abs(sum - h.trace().real()) / static_cast<double>(d));
    }
    return r;
}

inline PropertyResult check_eigen_product_spectrum(const SuiteOptions &o) {
    PropertyResult r{"spectrum of rho (x) sigma is pairwise products", 0.0, 1e-9};
    Sampler s(o.seed ^ 0x1005);
    for (int i = 0; i < o.cases; ++i) {
        const int na = s.integer(1, std::max(1, o.max_n - 1));
        const int nb = s.integer(1, std::max(1, o.max_n - na));
        const auto a = s.density(na);
        const auto b = s.density(nb);
        const auto ea = hermitian_eigenvalues(a.matrix());
        const auto eb = hermitian_eigenvalues(b.matrix());
        std::vector<double> prod;
        for (double x : ea) {
            for (double y : eb) {
                prod.push_back(x * y);
            }
        }
        r.observe(detail::multiset_distance(hermitian_eigenvalues(tensor(a, b).matrix()), prod));
    }
    return r;
}

inline PropertyResult check_pt_spectrum_bounds(const SuiteOptions &o) {
    PropertyResult r{"partial-transpose spectrum within [-1/2, 1]", 0.0, 1e-9};
    Sampler s(o.seed ^ 0x1006);
    const auto ns = detail::sizes(2, o.max_n);
    for (int i = 0; i < o.cases; ++i) {
        const int n = ns[static_cast<std::size_t>(i) % ns.size()];
        // Low rank keeps the states far from maximally mixed.
        const auto rho = (i % 2 == 0) ? to_density(s.ket(n)) : s.density(n, 2);
        const auto eig = hermitian_eigenvalues(partial_transpose(rho, detail::random_proper_subset(s, n)));
        r.observe(std::max({0.0, -0.5 - eig.front(), eig.back() - 1.0}));
    }
    return r;
}

// ---------------------------------------------------------------------------
// collision-channel
// ---------------------------------------------------------------------------

inline PropertyResult check_dephasing_validity(const SuiteOptions &o) {
    PropertyResult r{"dephasing preserves trace, Hermiticity, positivity", 0.0, 1e-10};
    Sampler s(o.seed ^ 0x2001);
    const auto ns = detail::sizes(1, o.max_n);
    for (int i = 0; i < o.cases; ++i) {
        const int n = ns[static_cast<std::size_t>(i) % ns.size()];
        const auto rho = s.density(n, static_cast<std::size_t>(s.integer(1, 3)));
        const auto out = apply_dephasing(rho, s.dephasing(n));
        double diag = 0.0;
        for (std::size_t k = 0; k < rho.dim(); ++k) {
            diag = std::max(diag, std::abs(out(k, k) - rho(k, k)));
        }
        // Diagonal must be bit-identical; Hermiticity at 1e-14; PSD floor 1e-10.
        const double herm = hermiticity_defect(out.matrix());
        const double psd = -hermitian_eigenvalues(out.matrix()).front();
        double v = std::max(0.0, psd);
        if (diag != 0.0 || herm > 1e-14) {
            v = INFINITY;
        }
        r.observe(v);
    }
    return r;
}

inline PropertyResult check_dephasing_composition(const SuiteOptions &o) {
    PropertyResult r{"dephasing composition law", 0.0, 1e-12};
    Sampler s(o.seed ^ 0x2002);
    const auto ns = detail::sizes(1, o.max_n);
    for (int i = 0; i < o.cases; ++i) {
        const int n = ns[static_cast<std::size_t>(i) % ns.size()];
        const auto rho = s.density(n);
        const auto a = s.dephasing(n);
        const auto b = s.dephasing(n);
        const auto twice = apply_dephasing(apply_dephasing(rho, a), b);
        const auto once = apply_dephasing(rho, compose(a, b));
        r.observe(max_abs_diff(twice.matrix(), once.matrix()));
    }
    return r;
}

inline PropertyResult check_microscopic_agreement(const SuiteOptions &o) {
    PropertyResult r{"microscopic collision equals reduced dephasing", 0.0, 1e-10};
    Sampler s(o.seed ^ 0x2003);
    const auto ns = detail::sizes(1, std::min(o.max_n, default_config().max_qubits - 1));
    for (int i = 0; i < o.cases; ++i) {
        const int n = ns[static_cast<std::size_t>(i) % ns.size()];
        const auto rho = s.density(n);
        const int q = s.integer(1, n);
        const auto spec = s.collision_spec();
        const auto micro = apply_microscopic_collision(rho, q, spec);
        const auto reduced = apply_dephasing(rho, single_qubit_dephasing(n, q, x_expectation(spec)));
        r.observe(max_abs_diff(micro.matrix(), reduced.matrix()));
    }
    return r;
}

inline PropertyResult check_phase_irrelevance(const SuiteOptions &o) {
    PropertyResult r{"accumulated phases do not change negativity", 0.0, 1e-9};
    Sampler s(o.seed ^ 0x2004);
    const auto ns = detail::sizes(2, o.max_n);
    for (int i = 0; i < o.cases; ++i) {
        const int n = ns[static_cast<std::size_t>(i) % ns.size()];
        const auto rho = (i % 2 == 0) ? to_density(s.ket(n)) : s.density(n, 2);
        const auto agg = s.dephasing(n);
        const BipartiteCut cut(detail::random_proper_subset(s, n));
        const auto with = negativity_oracle(apply_dephasing(rho, agg), cut);
        const auto without = negativity_oracle(apply_dephasing(rho, AggregateDephasing(agg.gamma)), cut);
        r.observe(std::max(std::abs(with.negativity_sum - without.negativity_sum),
                           std::abs(with.min_eigenvalue - without.min_eigenvalue)));
    }
    return r;
}

inline PropertyResult check_ghz_monotonicity(const SuiteOptions &o) {
    PropertyResult r{"GHZ negativity monotone in gamma", 0.0, 1e-9};
    Sampler s(o.seed ^ 0x2005);
    const auto ns = detail::sizes(2, o.max_n);
    for (int i = 0; i < o.cases; ++i) {
        const int n = ns[static_cast<std::size_t>(i) % ns.size()];
        const auto pure = to_density(make_ghz(n));
        const auto big = s.dephasing(n);
        std::vector<double> smaller = big.gamma;
        for (double &g : smaller) {
            g *= s.uniform();
        }
        const BipartiteCut cut(detail::random_proper_subset(s, n));
        const double nb = negativity_oracle(apply_dephasing(pure, big), cut).negativity_sum;
        const double ns_ = negativity_oracle(apply_dephasing(pure, AggregateDephasing(smaller, big.phase)), cut)
                               .negativity_sum;
        r.observe(std::max(0.0, ns_ - nb));
    }
    return r;
}

// ---------------------------------------------------------------------------
// entanglement
// ---------------------------------------------------------------------------

namespace detail {
inline int formula_cap(int max_n) { return std::min(max_n, 8); }
} // namespace detail

/// Worst |oracle − closed form| for a family over all cuts and sampled schedules.
inline PropertyResult check_formula_vs_oracle(const SuiteOptions &o, FamilyKind kind) {
    PropertyResult r{std::string(to_string(kind)) + " closed form matches oracle", 0.0, 1e-8};
    Sampler s(o.seed ^ (0x3001 + static_cast<std::uint64_t>(kind)));
    const int hi = kind == FamilyKind::LinearCluster ? std::min(o.max_n, 3) : detail::formula_cap(o.max_n);
    const auto ns = detail::sizes(2, hi);
    const int per_n = std::max(1, o.cases / static_cast<int>(ns.size()));
    for (int n : ns) {
        const auto pure = to_density(make_state({kind, n}));
        for (int i = 0; i < per_n; ++i) {
            const auto agg = schedule_aggregate(s.schedule(n, 3));
            const auto rho = apply_dephasing(pure, agg);
            for (const auto &cut : enumerate_cuts(n)) {
                r.observe(*evaluate_cut(kind, rho, agg, cut).abs_error());
            }
        }
    }
    return r;
}

inline PropertyResult check_ghz_cut_independence(const SuiteOptions &o) {
    PropertyResult r{"GHZ PT minimum identical across cuts", 0.0, 1e-9};
    Sampler s(o.seed ^ 0x3101);
    for (int n = 2; n <= detail::formula_cap(o.max_n); ++n) {
        const auto pure = to_density(make_ghz(n));
        for (int i = 0; i < std::max(1, o.cases / 10); ++i) {
            const auto rho = apply_dephasing(pure, s.dephasing(n));
            double lo = INFINITY;
            double hi = -INFINITY;
            for (const auto &cut : enumerate_cuts(n)) {
                const double m = negativity_oracle(rho, cut).min_eigenvalue;
                lo = std::min(lo, m);
                hi = std::max(hi, m);
            }
            r.observe(hi - lo);
        }
    }
    return r;
}

/// Homogeneous W decoherence: the weakest cut over an exhaustive scan matches
/// min over |P₁| of √(k(N−k))/N·γ².
inline PropertyResult check_w_weakest_link(const SuiteOptions &o) {
    PropertyResult r{"W weakest cut matches homogeneous closed form", 0.0, 1e-8};
    Sampler s(o.seed ^ 0x3102);
    for (int n = 2; n <= detail::formula_cap(o.max_n); ++n) {
        const auto pure = to_density(make_w(n));
        for (int i = 0; i < std::max(1, o.cases / 20); ++i) {
            const double g = s.uniform(0.05, 1.0);
            const auto rho = apply_dephasing(pure, AggregateDephasing::uniform(n, g));
            double weakest = INFINITY;
            for (const auto &cut : enumerate_cuts(n)) {
                weakest = std::min(weakest, std::abs(negativity_oracle(rho, cut).min_eigenvalue));
            }
            double predicted = INFINITY;
            for (int k = 1; k < n; ++k) {
                predicted = std::min(predicted, std::sqrt(double(k) * (n - k)) / n * g * g);
            }
            r.observe(std::abs(weakest - predicted));
        }
    }
    return r;
}

/// With every λ strictly inside (0, 1), GHZ and W stay NPT on every cut.
inline PropertyResult check_npt_persistence(const SuiteOptions &o) {
    PropertyResult r{"GHZ and W stay NPT for 0 < lambda < 1", -INFINITY, 0.0, true};
    Sampler s(o.seed ^ 0x3103);
    const int hi = std::min(o.max_n, 7);
    for (FamilyKind kind : {FamilyKind::GHZ, FamilyKind::W}) {
        for (int n = 2; n <= hi; ++n) {
            const auto pure = to_density(make_state({kind, n}));
            for (int i = 0; i < std::max(1, o.cases / 20); ++i) {
                const auto rho = apply_schedule(pure, s.schedule(n, 2, 0.3, 0.999));
                for (const auto &cut : enumerate_cuts(n)) {
                    r.observe(negativity_oracle(rho, cut).min_eigenvalue);
                }
            }
        }
    }
    return r;
}

/// Two-qubit cluster negativity stays strictly below the GHZ value ½γ² for
/// homogeneous γ ∈ (√2 − 1, 1).
inline PropertyResult check_cluster_below_ghz(const SuiteOptions &) {
    PropertyResult r{"2-qubit cluster negativity below GHZ on gamma grid", -INFINITY, 0.0, true};
    const auto cluster = to_density(make_cluster(2));
    const auto ghz = to_density(make_ghz(2));
    const BipartiteCut cut(2, 0b01);
    for (int k = 9; k <= 19; ++k) {
        const double g = 0.05 * k; // 0.45 … 0.95
        const auto agg = AggregateDephasing::uniform(2, g);
        const double nc = negativity_oracle(apply_dephasing(cluster, agg), cut).negativity_sum;
        const double ng = negativity_oracle(apply_dephasing(ghz, agg), cut).negativity_sum;
        r.observe(nc - ng);
    }
    return r;
}

/// ln|N| is affine in the register size with slope K·ln λ.
inline PropertyResult check_ghz_slope_law(const SuiteOptions &o) {
    PropertyResult r{"GHZ log-negativity affine in N", 0.0, 1e-9};
    const int hi = detail::formula_cap(o.max_n);
    if (hi < 3) {
        r.observe(0.0); // two points always fit a line
        return r;
    }
    for (int k = 1; k <= 3; ++k) {
        for (double lambda : {0.5, 0.9}) {
            std::vector<double> x;
            std::vector<double> y;
            for (int n = 2; n <= hi; ++n) {
                const auto rho = apply_schedule(to_density(make_ghz(n)),
                                                CollisionSchedule::homogeneous(n, k, lambda));
                x.push_back(n);
                y.push_back(std::log(std::abs(negativity_oracle(rho, BipartiteCut(n, 1)).min_eigenvalue)));
            }
            double slope = 0.0;
            const double resid = detail::least_squares_residual(x, y, &slope);
            r.observe(std::max(resid, std::abs(slope - k * std::log(lambda))));
        }
    }
    return r;
}

/// Every randomized invariant of the library, sized by `o`.
inline std::vector<PropertyResult> run_property_suite(const SuiteOptions &o) {
    if (o.max_n < 2) {
        throw InvalidArgumentError("run_property_suite: max_n must be >= 2");
    }
    if (o.max_n > default_config().max_qubits - 1) {
        throw CapacityError("run_property_suite: max_n exceeds capacity");
    }
    std::vector<std::function<PropertyResult()>> checks{
        [&] { return check_kron_associativity(o); },
        [&] { return check_partial_trace_preserves_trace(o); },
        [&] { return check_partial_transpose_involution(o); },
        [&] { return check_eigen_trace(o); },
        [&] { return check_eigen_product_spectrum(o); },
        [&] { return check_pt_spectrum_bounds(o); },
        [&] { return check_dephasing_validity(o); },
        [&] { return check_dephasing_composition(o); },
        [&] { return check_microscopic_agreement(o); },
        [&] { return check_phase_irrelevance(o); },
        [&] { return check_ghz_monotonicity(o); },
        [&] { return check_formula_vs_oracle(o, FamilyKind::GHZ); },
        [&] { return check_formula_vs_oracle(o, FamilyKind::W); },
        [&] { return check_formula_vs_oracle(o, FamilyKind::LinearCluster); },
        [&] { return check_ghz_cut_independence(o); },
        [&] { return check_w_weakest_link(o); },
        [&] { return check_npt_persistence(o); },
        [&] { return check_cluster_below_ghz(o); },
        [&] { return check_ghz_slope_law(o); },
    };
    std::vector<PropertyResult> out;
    out.reserve(checks.size());
    for (const auto &c : checks) {
        out.push_back(c());
    }
    return out;
}

} // namespace decohere
