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
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "config.hpp"
#include "errors.hpp"

namespace decohere {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

inline bool is_finite(Complex z) noexcept {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/**
 * Dense square complex matrix stored row-major.
 *
 * Dense square matrix used for both states and operators.
 * Entries are finite by construction: every constructor that accepts
 * external data validates it.
 */
class ComplexMatrix {
  public:
    /// dim x dim zero matrix.
    explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
        if (dim == 0) {
            throw InvalidSizeError("ComplexMatrix: dimension must be >= 1");
        }
    }

    ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
        : dim_(dim), data_(std::move(entries)) {
        if (dim == 0) {
            throw InvalidSizeError("ComplexMatrix: dimension must be >= 1");
        }
        if (data_.size() != dim * dim) {
            throw SizeMismatchError("ComplexMatrix: expected " +
                                    std::to_string(dim * dim) + " entries, got " +
                                    std::to_string(data_.size()));
        }
        for (const auto &z : data_) {
            if (!is_finite(z)) {
                throw NonFiniteError("ComplexMatrix: non-finite entry");
            }
        }
    }

    /// Row-wise literal, e.g. `ComplexMatrix{{1, 0}, {0, -1}}`.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
        : ComplexMatrix(rows.size(), flatten(rows)) {}

    [[nodiscard]] static ComplexMatrix identity(std::size_t dim) {
        ComplexMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    [[nodiscard]] static ComplexMatrix diagonal(std::span<const Complex> d) {
        ComplexMatrix m(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) {
            m(i, i) = d[i];
        }
        return m;
    }

    /// |a⟩⟨b|
    [[nodiscard]] static ComplexMatrix outer(std::span<const Complex> a,
                                             std::span<const Complex> b) {
        if (a.size() != b.size()) {
            throw SizeMismatchError("outer: vector lengths differ");
        }
        ComplexMatrix m(a.size());
        for (std::size_t r = 0; r < a.size(); ++r) {
            for (std::size_t c = 0; c < b.size(); ++c) {
                m(r, c) = a[r] * std::conj(b[c]);
            }
        }
        return m;
    }

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }

    Complex &operator()(std::size_t r, std::size_t c) noexcept {
        return data_[r * dim_ + c];
    }
    const Complex &operator()(std::size_t r, std::size_t c) const noexcept {
        return data_[r * dim_ + c];
    }

    [[nodiscard]] std::span<const Complex> entries() const noexcept { return data_; }
    [[nodiscard]] std::span<Complex> entries() noexcept { return data_; }

    [[nodiscard]] Complex trace() const noexcept {
        Complex t = 0.0;
        for (std::size_t i = 0; i < dim_; ++i) {
            t += (*this)(i, i);
        }
        return t;
    }

    [[nodiscard]] double max_abs() const noexcept {
        double m = 0.0;
        for (const auto &z : data_) {
            m = std::max(m, std::abs(z));
        }
        return m;
    }

    [[nodiscard]] double frobenius_norm() const noexcept {
        double s = 0.0;
        for (const auto &z : data_) {
            s += std::norm(z);
        }
        return std::sqrt(s);
    }

    friend bool operator==(const ComplexMatrix &, const ComplexMatrix &) = default;

    ComplexMatrix &operator+=(const ComplexMatrix &o) {
        require_same_dim(o, "operator+=");
        for (std::size_t i = 0; i < data_.size(); ++i) {
            data_[i] += o.data_[i];
        }
        return *this;
    }
    ComplexMatrix &operator-=(const ComplexMatrix &o) {
        require_same_dim(o, "operator-=");
        for (std::size_t i = 0; i < data_.size(); ++i) {
            data_[i] -= o.data_[i];
        }
        return *this;
    }
    ComplexMatrix &operator*=(Complex s) noexcept {
        for (auto &z : data_) {
            z *= s;
        }
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }

    friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
        a.require_same_dim(b, "operator*");
        const std::size_t n = a.dim_;
        ComplexMatrix out(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                const Complex aik = a(i, k);
                if (aik == Complex{}) {
                    continue;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    out(i, j) += aik * b(k, j);
                }
            }
        }
        return out;
    }

  private:
    static std::vector<Complex>
    flatten(std::initializer_list<std::initializer_list<Complex>> rows) {
        std::vector<Complex> out;
        out.reserve(rows.size() * rows.size());
        for (const auto &row : rows) {
            if (row.size() != rows.size()) {
                throw SizeMismatchError("ComplexMatrix: literal is not square");
            }
            out.insert(out.end(), row.begin(), row.end());
        }
        return out;
    }

    void require_same_dim(const ComplexMatrix &o, const char *op) const {
        if (o.dim_ != dim_) {
            throw SizeMismatchError(std::string("ComplexMatrix::") + op +
                                    ": dimension mismatch");
        }
    }

    std::size_t dim_;
    std::vector<Complex> data_;
};

/// Conjugate transpose.
[[nodiscard]] inline ComplexMatrix dagger(const ComplexMatrix &a) {
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            out(c, r) = std::conj(a(r, c));
        }
    }
    return out;
}

/// Kronecker product: entry (i·b.dim + k, j·b.dim + l) = a(i,j)·b(k,l).
/// Throws CapacityError when the result would exceed 2^max_qubits rows.
[[nodiscard]] inline ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b,
                                        const NumericConfig &cfg = default_config()) {
    const std::size_t limit = std::size_t{1} << cfg.max_qubits;
    if (a.dim() > limit / b.dim()) {
        throw CapacityError("kron: result dimension " +
                            std::to_string(a.dim()) + "x" + std::to_string(b.dim()) +
                            " exceeds capacity of " + std::to_string(cfg.max_qubits) +
                            " qubits");
    }
    const std::size_t nb = b.dim();
    ComplexMatrix out(a.dim() * nb);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{}) {
                continue;
            }
            for (std::size_t k = 0; k < nb; ++k) {
                for (std::size_t l = 0; l < nb; ++l) {
                    out(i * nb + k, j * nb + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

/// Left-to-right Kronecker product of a non-empty list.
[[nodiscard]] inline ComplexMatrix kron_all(std::span<const ComplexMatrix> factors,
                                            const NumericConfig &cfg = default_config()) {
    if (factors.empty()) {
        throw InvalidArgumentError("kron_all: empty factor list");
    }
    ComplexMatrix out = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) {
        out = kron(out, factors[i], cfg);
    }
    return out;
}

[[nodiscard]] inline double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != b.dim()) {
        throw SizeMismatchError("max_abs_diff: dimension mismatch");
    }
    double m = 0.0;
    const auto ea = a.entries();
    const auto eb = b.entries();
    for (std::size_t i = 0; i < ea.size(); ++i) {
        m = std::max(m, std::abs(ea[i] - eb[i]));
    }
    return m;
}

/// ‖A − A†‖_max
[[nodiscard]] inline double hermiticity_defect(const ComplexMatrix &a) noexcept {
    double m = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = r; c < a.dim(); ++c) {
            m = std::max(m, std::abs(a(r, c) - std::conj(a(c, r))));
        }
    }
    return m;
}

/// Single-qubit operators in the computational basis.
namespace ops {

inline ComplexMatrix p0() { return {{1, 0}, {0, 0}}; }  // |0⟩⟨0|
inline ComplexMatrix p1() { return {{0, 0}, {0, 1}}; }  // |1⟩⟨1|
inline ComplexMatrix s_plus() { return {{0, 1}, {0, 0}}; }  // |0⟩⟨1|
inline ComplexMatrix s_minus() { return {{0, 0}, {1, 0}}; } // |1⟩⟨0|

inline ComplexMatrix sigma0() { return ComplexMatrix::identity(2); }
inline ComplexMatrix sigma1() { return {{0, 1}, {1, 0}}; }
inline ComplexMatrix sigma2() { return {{0, -kI}, {kI, 0}}; }
inline ComplexMatrix sigma3() { return {{1, 0}, {0, -1}}; }

} // namespace ops

} // namespace decohere
