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
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace decohere {

/// Bit position of qubit `q` (1-based) in a computational-basis index of an
/// n-qubit register. Qubit 1 is the most significant bit.
[[nodiscard]] constexpr unsigned basis_bit(int n_qubits, int q) noexcept {
    return static_cast<unsigned>(n_qubits - q);
}

[[nodiscard]] constexpr std::size_t basis_mask_of(int n_qubits, int q) noexcept {
    return std::size_t{1} << basis_bit(n_qubits, q);
}

/**
 * A set of qubits drawn from {1..n_qubits}.
 *
 * Stored as a bitmask with bit (i−1) set iff qubit i is a member; this is
 * also the encoding used for cuts in CSV output. Note that this differs from
 * the basis-index bit layout (qubit 1 = most significant); use basis_mask()
 * to translate.
 */
class QubitSubset {
  public:
    QubitSubset(int n_qubits, std::uint64_t member_bits) : n_(n_qubits), bits_(member_bits) {
        if (n_qubits < 1 || n_qubits > 63) {
            throw InvalidSizeError("QubitSubset: n_qubits out of range");
        }
        if ((member_bits >> n_qubits) != 0) {
            throw InvalidPartitionError("QubitSubset: member outside {1.." +
                                        std::to_string(n_qubits) + "}");
        }
    }

    /// From 1-based qubit indices.
    static QubitSubset of(int n_qubits, const std::vector<int> &members) {
        std::uint64_t bits = 0;
        for (int q : members) {
            if (q < 1 || q > n_qubits) {
                throw InvalidPartitionError("QubitSubset: qubit " + std::to_string(q) +
                                            " outside {1.." + std::to_string(n_qubits) + "}");
            }
            bits |= std::uint64_t{1} << (q - 1);
        }
        return {n_qubits, bits};
    }

    [[nodiscard]] int n_qubits() const noexcept { return n_; }
    [[nodiscard]] std::uint64_t bits() const noexcept { return bits_; }
    [[nodiscard]] int size() const noexcept { return std::popcount(bits_); }
    [[nodiscard]] bool empty() const noexcept { return bits_ == 0; }
    [[nodiscard]] bool full() const noexcept { return bits_ == full_bits(); }
    [[nodiscard]] bool contains(int q) const noexcept {
        return q >= 1 && q <= n_ && ((bits_ >> (q - 1)) & 1U) != 0;
    }

    [[nodiscard]] QubitSubset complement() const { return {n_, full_bits() & ~bits_}; }

    /// Ascending 1-based members.
    [[nodiscard]] std::vector<int> members() const {
        std::vector<int> out;
        for (int q = 1; q <= n_; ++q) {
            if (contains(q)) {
                out.push_back(q);
            }
        }
        return out;
    }

    /// Mask over computational-basis indices selecting the members' bits.
    [[nodiscard]] std::size_t basis_mask() const noexcept {
        std::size_t m = 0;
        for (int q = 1; q <= n_; ++q) {
            if (contains(q)) {
                m |= basis_mask_of(n_, q);
            }
        }
        return m;
    }

    /// Throws InvalidPartitionError unless the subset is nonempty and proper.
    void require_proper(const char *who) const {
        if (empty() || full()) {
            throw InvalidPartitionError(std::string(who) +
                                        ": qubit subset must be nonempty and proper");
        }
    }

    friend bool operator==(const QubitSubset &, const QubitSubset &) = default;

  private:
    [[nodiscard]] std::uint64_t full_bits() const noexcept {
        return (std::uint64_t{1} << n_) - 1;
    }

    int n_;
    std::uint64_t bits_;
};

} // namespace decohere
