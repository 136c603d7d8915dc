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

#include "grovernoise/matrix2.hpp"

#include <cmath>

namespace gnoise {

bool ComplexMatrix2::is_finite() const {
    for (const Complex &z : m_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            return false;
        }
    }
    return true;
}

double unitarity_defect(const ComplexMatrix2 &m) {
    return max_abs_diff(m.adjoint() * m, ComplexMatrix2::identity());
}

}  // namespace gnoise
