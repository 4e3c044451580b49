// Copyright 2026 The Transduce Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <random>

#include "transduce/hilbert.hpp"

namespace transduce::testing {

inline double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

inline Matrix random_matrix(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = Complex(g(rng), g(rng));
  }
  return m;
}

// Random full-rank density matrix.
inline Matrix random_density(int dim, std::mt19937_64& rng) {
  const Matrix a = random_matrix(dim, dim, rng);
  Matrix rho = a * a.adjoint();
  return rho / rho.trace();
}

inline Vector random_ket(int dim, std::mt19937_64& rng) {
  Vector v = random_matrix(dim, 1, rng);
  return v.normalized();
}

}  // namespace transduce::testing
