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

// Atom (4 levels) ⊗ resonator (Fock cutoff N) ⊗ superconducting qubit (2 levels).
//
// Flattened basis index: ((atom * N) + n) * 2 + sq, with atom levels ordered
// g, e, r, s and qubit levels ordered g̃, ẽ. Every operator and state in this
// library uses that ordering.

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "transduce/errors.hpp"

namespace transduce {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr int kAtomDim = 4;
inline constexpr int kQubitDim = 2;

enum class Subsystem { Atom, Resonator, SQubit };

enum class AtomLevel : int { G = 0, E = 1, R = 2, S = 3 };
enum class QubitLevel : int { Ground = 0, Excited = 1 };

constexpr int index_of(AtomLevel level) { return static_cast<int>(level); }
constexpr int index_of(QubitLevel level) { return static_cast<int>(level); }

class HilbertLayout {
 public:
  // Throws LayoutError when fock_dim < 2.
  explicit HilbertLayout(int fock_dim);

  int fock_dim() const { return fock_dim_; }
  int total_dim() const { return kAtomDim * fock_dim_ * kQubitDim; }
  int dim(Subsystem subsystem) const;

  int index(int atom, int photons, int qubit) const {
    return ((atom * fock_dim_) + photons) * kQubitDim + qubit;
  }
  int index(AtomLevel atom, int photons, QubitLevel qubit) const {
    return index(index_of(atom), photons, index_of(qubit));
  }

  friend bool operator==(const HilbertLayout&, const HilbertLayout&) = default;

 private:
  int fock_dim_;
};

// Square matrix on the full composite space.
class CompositeOperator {
 public:
  // Throws LayoutError if the matrix is not total_dim × total_dim.
  CompositeOperator(const HilbertLayout& layout, Matrix entries);

  static CompositeOperator zero(const HilbertLayout& layout);
  static CompositeOperator identity(const HilbertLayout& layout);

  const HilbertLayout& layout() const { return layout_; }
  const Matrix& matrix() const { return entries_; }
  Complex operator()(int row, int col) const { return entries_(row, col); }

  CompositeOperator adjoint() const;

  CompositeOperator& operator+=(const CompositeOperator& other);
  CompositeOperator& operator-=(const CompositeOperator& other);
  CompositeOperator& operator*=(Complex scale);

  friend CompositeOperator operator+(CompositeOperator a, const CompositeOperator& b) { return a += b; }
  friend CompositeOperator operator-(CompositeOperator a, const CompositeOperator& b) { return a -= b; }
  friend CompositeOperator operator*(CompositeOperator a, Complex s) { return a *= s; }
  friend CompositeOperator operator*(Complex s, CompositeOperator a) { return a *= s; }
  friend CompositeOperator operator*(double s, CompositeOperator a) { return a *= Complex(s, 0.0); }
  friend CompositeOperator operator*(const CompositeOperator& a, const CompositeOperator& b);

 private:
  void check_layout(const CompositeOperator& other) const;

  HilbertLayout layout_;
  Matrix entries_;
};

// A density operator, either on the full layout or on a single subsystem
// (layout() is empty for reduced states). Construction does not validate;
// use check_density() to measure the invariants.
class DensityMatrix {
 public:
  DensityMatrix(const HilbertLayout& layout, Matrix entries);
  explicit DensityMatrix(Matrix entries);

  const std::optional<HilbertLayout>& layout() const { return layout_; }
  const Matrix& matrix() const { return entries_; }
  int dim() const { return static_cast<int>(entries_.rows()); }
  Complex operator()(int row, int col) const { return entries_(row, col); }

  Complex trace() const { return entries_.trace(); }
  double purity() const;

 private:
  std::optional<HilbertLayout> layout_;
  Matrix entries_;
};

struct DensityCheck {
  double hermiticity = 0.0;  // max |ρ − ρ†|
  double trace_error = 0.0;  // |Tr ρ − 1|
  double min_eigenvalue = 0.0;

  bool ok(double herm_tol = 1e-10, double trace_tol = 1e-8, double eig_tol = 1e-8) const {
    return hermiticity <= herm_tol && trace_error <= trace_tol && min_eigenvalue >= -eig_tol;
  }
};

DensityCheck check_density(const Matrix& rho);
inline DensityCheck check_density(const DensityMatrix& rho) { return check_density(rho.matrix()); }

// Kronecker product, left factor varying slowest.
Matrix tensor(const Matrix& a, const Matrix& b);

// |atom⟩ ⊗ |resonator⟩ ⊗ |sq⟩ as a flat ket in layout order.
Vector product_ket(const Vector& atom, const Vector& resonator, const Vector& sq);

// Truncated ladder operator: ⟨n−1|a|n⟩ = √n.
Matrix annihilation(int fock_dim);

// |to⟩⟨from| on the atom or on the superconducting qubit.
Matrix atom_transition(AtomLevel to, AtomLevel from);
Matrix qubit_transition(QubitLevel to, QubitLevel from);

CompositeOperator embed(const Matrix& local_op, Subsystem subsystem, const HilbertLayout& layout);

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);

// Raw geometric weights n̄ⁿ/(n̄+1)ⁿ⁺¹ for n < fock_dim, before renormalization.
struct ThermalWeights {
  std::vector<double> weights;
  double discarded = 0.0;  // 1 − Σ weights
};

ThermalWeights thermal_weights(double nbar, int fock_dim);

// Resonator-local thermal state, renormalized to unit trace on the truncated space.
DensityMatrix thermal_state(double nbar, int fock_dim);

Vector basis_vector(int dim, int index);

// Rank-1 product state. Each amplitude vector must be normalized to 1e-10.
DensityMatrix pure_state(const Vector& atom, const Vector& resonator, const Vector& sq);
DensityMatrix pure_state(AtomLevel atom, const Vector& resonator, const Vector& sq);

// ρ_A ⊗ ρ_R ⊗ ρ_S on the full layout.
DensityMatrix product_state(const DensityMatrix& atom, const DensityMatrix& resonator,
                            const DensityMatrix& sq);

}  // namespace transduce
