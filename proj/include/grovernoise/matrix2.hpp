// Copyright 2026 The grover-noise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <array>
#include <complex>
#include <cstddef>

namespace gnoise {

using Complex = std::complex<double>;

/// Two-component amplitude vector in the ordered basis {|1>, |2>}.
struct Vector2 {
    Complex first{};
    Complex second{};

    double norm_squared() const { return std::norm(first) + std::norm(second); }
};

/// Dense 2x2 complex matrix, row-major.
class ComplexMatrix2 {
  public:
    constexpr ComplexMatrix2() = default;
    constexpr ComplexMatrix2(Complex m00, Complex m01, Complex m10, Complex m11) : m_{m00, m01, m10, m11} {}

    static constexpr ComplexMatrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    constexpr Complex operator()(std::size_t row, std::size_t col) const { return m_[2 * row + col]; }
    constexpr Complex &operator()(std::size_t row, std::size_t col) { return m_[2 * row + col]; }

    ComplexMatrix2 transpose() const { return {m_[0], m_[2], m_[1], m_[3]}; }
    ComplexMatrix2 adjoint() const {
        return {std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]), std::conj(m_[3])};
    }

    friend ComplexMatrix2 operator*(const ComplexMatrix2 &a, const ComplexMatrix2 &b) {
        return {a.m_[0] * b.m_[0] + a.m_[1] * b.m_[2], a.m_[0] * b.m_[1] + a.m_[1] * b.m_[3],
                a.m_[2] * b.m_[0] + a.m_[3] * b.m_[2], a.m_[2] * b.m_[1] + a.m_[3] * b.m_[3]};
    }

    friend Vector2 operator*(const ComplexMatrix2 &a, const Vector2 &v) {
        return {a.m_[0] * v.first + a.m_[1] * v.second, a.m_[2] * v.first + a.m_[3] * v.second};
    }

    /// Largest entrywise modulus of (a - b).
    friend double max_abs_diff(const ComplexMatrix2 &a, const ComplexMatrix2 &b) {
        double worst = 0.0;
        for (std::size_t k = 0; k < 4; ++k) {
            worst = std::max(worst, std::abs(a.m_[k] - b.m_[k]));
        }
        return worst;
    }

    bool is_finite() const;

  private:
    std::array<Complex, 4> m_{};
};

/// max |(M^dagger M - I)_{ij}|
double unitarity_defect(const ComplexMatrix2 &m);

}  // namespace gnoise
