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

#include <cstddef>

namespace decohere {

/**
 * Numeric tolerances and capacity limits shared by every module.
 *
 * Defaults are the values the library is validated against; pass a
 * modified copy to any operation that accepts one.
 */
struct NumericConfig {
    /// Largest qubit count a dense matrix may span (4096 x 4096 complex at 12).
    int max_qubits = 12;

    /// ‖A − A†‖_max accepted for a density matrix.
    double hermitian_tol = 1e-12;
    /// |tr ρ − 1| accepted for a density matrix.
    double trace_tol = 1e-12;
    /// Smallest eigenvalue accepted for a positive semidefinite matrix.
    double psd_floor = -1e-10;
    /// |‖ψ‖² − 1| accepted for a state vector or single-qubit ket.
    double norm_tol = 1e-12;
    /// ‖A − A†‖_max accepted on input to the eigensolver.
    double eigen_input_hermitian_tol = 1e-10;

    /// Jacobi stops once ‖offdiag‖_F ≤ eigen_rel_tol · ‖A‖_F.
    double eigen_rel_tol = 1e-12;
    int eigen_max_sweeps = 100;

    /// Partial-transpose eigenvalues below −zero_threshold count as negative;
    /// values in [−zero_threshold, 0] are reported as 0.
    double zero_threshold = 1e-10;

    int bisection_max_iterations = 60;
    double bisection_tol = 1e-12;
};

inline const NumericConfig &default_config() {
    static const NumericConfig cfg{};
    return cfg;
}

} // namespace decohere
