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

#include "transduce/hilbert.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

namespace transduce {

namespace {

void require_square(const Matrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw LayoutError(std::string(what) + ": operand is not square (" + std::to_string(m.rows()) +
                      "x" + std::to_string(m.cols()) + ")");
  }
}

void require_normalized(const Vector& v, const char* what) {
  if (v.size() == 0 || std::abs(v.norm() - 1.0) > 1e-10) {
    throw ParameterError(std::string(what) + " amplitudes are not normalized (norm = " +
                         std::to_string(v.norm()) + ")");
  }
}

}  // namespace

HilbertLayout::HilbertLayout(int fock_dim) : fock_dim_(fock_dim) {
  if (fock_dim < 2) {
    throw LayoutError("fock_dim must be >= 2, got " + std::to_string(fock_dim));
  }
}

int HilbertLayout::dim(Subsystem subsystem) const {
  switch (subsystem) {
    case Subsystem::Atom:
      return kAtomDim;
    case Subsystem::Resonator:
      return fock_dim_;
    case Subsystem::SQubit:
      return kQubitDim;
  }
  return 0;
}

CompositeOperator::CompositeOperator(const HilbertLayout& layout, Matrix entries)
    : layout_(layout), entries_(std::move(entries)) {
  const int n = layout_.total_dim();
  if (entries_.rows() != n || entries_.cols() != n) {
    throw LayoutError("composite operator must be " + std::to_string(n) + "x" + std::to_string(n) +
                      ", got " + std::to_string(entries_.rows()) + "x" +
                      std::to_string(entries_.cols()));
  }
}

CompositeOperator CompositeOperator::zero(const HilbertLayout& layout) {
  return {layout, Matrix::Zero(layout.total_dim(), layout.total_dim())};
}

CompositeOperator CompositeOperator::identity(const HilbertLayout& layout) {
  return {layout, Matrix::Identity(layout.total_dim(), layout.total_dim())};
}

CompositeOperator CompositeOperator::adjoint() const { return {layout_, entries_.adjoint()}; }

void CompositeOperator::check_layout(const CompositeOperator& other) const {
  if (!(layout_ == other.layout_)) {
    throw LayoutError("operators live on different layouts");
  }
}

CompositeOperator& CompositeOperator::operator+=(const CompositeOperator& other) {
  check_layout(other);
  entries_ += other.entries_;
  return *this;
}

CompositeOperator& CompositeOperator::operator-=(const CompositeOperator& other) {
  check_layout(other);
  entries_ -= other.entries_;
  return *this;
}

CompositeOperator& CompositeOperator::operator*=(Complex scale) {
  entries_ *= scale;
  return *this;
}

CompositeOperator operator*(const CompositeOperator& a, const CompositeOperator& b) {
  a.check_layout(b);
  return {a.layout_, a.entries_ * b.entries_};
}

DensityMatrix::DensityMatrix(const HilbertLayout& layout, Matrix entries)
    : layout_(layout), entries_(std::move(entries)) {
  if (entries_.rows() != layout.total_dim() || entries_.cols() != layout.total_dim()) {
    throw LayoutError("density matrix does not match layout dimension");
  }
}

DensityMatrix::DensityMatrix(Matrix entries) : entries_(std::move(entries)) {
  require_square(entries_, "density matrix");
}

double DensityMatrix::purity() const {
  // Tr ρ² = Σ_ij ρ_ij ρ_ji
  return (entries_.cwiseProduct(entries_.transpose())).sum().real();
}

DensityCheck check_density(const Matrix& rho) {
  DensityCheck check;
  check.hermiticity = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  check.trace_error = std::abs(rho.trace() - Complex(1.0, 0.0));
  const Matrix herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm, Eigen::EigenvaluesOnly);
  check.min_eigenvalue = solver.eigenvalues().minCoeff();
  return check;
}

Matrix tensor(const Matrix& a, const Matrix& b) {
  require_square(a, "tensor");
  require_square(b, "tensor");
  const Eigen::Index rb = b.rows();
  Matrix out(a.rows() * rb, a.cols() * rb);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * rb, j * rb, rb, rb) = a(i, j) * b;
    }
  }
  return out;
}

Vector product_ket(const Vector& atom, const Vector& resonator, const Vector& sq) {
  if (atom.size() != kAtomDim || sq.size() != kQubitDim || resonator.size() < 2) {
    throw LayoutError("product_ket: expected 4 atomic, >= 2 resonator and 2 qubit amplitudes");
  }
  const Eigen::Index n = resonator.size();
  Vector out(kAtomDim * n * kQubitDim);
  for (Eigen::Index a = 0; a < kAtomDim; ++a) {
    for (Eigen::Index k = 0; k < n; ++k) {
      for (Eigen::Index q = 0; q < kQubitDim; ++q) out((a * n + k) * kQubitDim + q) = atom(a) * resonator(k) * sq(q);
    }
  }
  return out;
}

Matrix annihilation(int fock_dim) {
  if (fock_dim < 2) {
    throw LayoutError("fock_dim must be >= 2, got " + std::to_string(fock_dim));
  }
  Matrix a = Matrix::Zero(fock_dim, fock_dim);
  for (int n = 1; n < fock_dim; ++n) {
    a(n - 1, n) = std::sqrt(static_cast<double>(n));
  }
  return a;
}

Matrix atom_transition(AtomLevel to, AtomLevel from) {
  Matrix m = Matrix::Zero(kAtomDim, kAtomDim);
  m(index_of(to), index_of(from)) = 1.0;
  return m;
}

Matrix qubit_transition(QubitLevel to, QubitLevel from) {
  Matrix m = Matrix::Zero(kQubitDim, kQubitDim);
  m(index_of(to), index_of(from)) = 1.0;
  return m;
}

CompositeOperator embed(const Matrix& local_op, Subsystem subsystem, const HilbertLayout& layout) {
  require_square(local_op, "embed");
  const int expected = layout.dim(subsystem);
  if (local_op.rows() != expected) {
    throw LayoutError("embed: local operator has dimension " + std::to_string(local_op.rows()) +
                      ", subsystem expects " + std::to_string(expected));
  }
  const Matrix id_atom = Matrix::Identity(kAtomDim, kAtomDim);
  const Matrix id_res = Matrix::Identity(layout.fock_dim(), layout.fock_dim());
  const Matrix id_sq = Matrix::Identity(kQubitDim, kQubitDim);
  switch (subsystem) {
    case Subsystem::Atom:
      return {layout, tensor(tensor(local_op, id_res), id_sq)};
    case Subsystem::Resonator:
      return {layout, tensor(tensor(id_atom, local_op), id_sq)};
    case Subsystem::SQubit:
      return {layout, tensor(tensor(id_atom, id_res), local_op)};
  }
  throw LayoutError("embed: unknown subsystem");
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
  if (!rho.layout()) {
    throw LayoutError("partial_trace needs a density matrix on the full layout");
  }
  const HilbertLayout& layout = *rho.layout();
  const int dims[3] = {kAtomDim, layout.fock_dim(), kQubitDim};
  const int k = keep == Subsystem::Atom ? 0 : keep == Subsystem::Resonator ? 1 : 2;
  const int kept = dims[k];
  const int total = layout.total_dim();

  Matrix reduced = Matrix::Zero(kept, kept);
  const Matrix& m = rho.matrix();
  // A flat index splits into (atom, photons, qubit); sum over pairs whose
  // traced-out digits agree.
  auto digits = [&](int idx, int out[3]) {
    out[2] = idx % kQubitDim;
    idx /= kQubitDim;
    out[1] = idx % dims[1];
    out[0] = idx / dims[1];
  };
  int di[3];
  int dj[3];
  for (int i = 0; i < total; ++i) {
    digits(i, di);
    for (int j = 0; j < total; ++j) {
      digits(j, dj);
      bool same = true;
      for (int s = 0; s < 3; ++s) {
        if (s != k && di[s] != dj[s]) {
          same = false;
          break;
        }
      }
      if (same) reduced(di[k], dj[k]) += m(i, j);
    }
  }
  return DensityMatrix(std::move(reduced));
}

ThermalWeights thermal_weights(double nbar, int fock_dim) {
  if (!(nbar >= 0.0)) {
    throw ParameterError("mean thermal photon number must be >= 0, got " + std::to_string(nbar));
  }
  if (fock_dim < 2) {
    throw LayoutError("fock_dim must be >= 2, got " + std::to_string(fock_dim));
  }
  ThermalWeights out;
  out.weights.resize(static_cast<std::size_t>(fock_dim));
  const double q = nbar / (nbar + 1.0);
  double p = 1.0 / (nbar + 1.0);
  double sum = 0.0;
  for (int n = 0; n < fock_dim; ++n) {
    out.weights[static_cast<std::size_t>(n)] = p;
    sum += p;
    p *= q;
  }
  out.discarded = 1.0 - sum;
  return out;
}

DensityMatrix thermal_state(double nbar, int fock_dim) {
  const ThermalWeights tw = thermal_weights(nbar, fock_dim);
  double sum = 0.0;
  for (double w : tw.weights) sum += w;
  Matrix rho = Matrix::Zero(fock_dim, fock_dim);
  for (int n = 0; n < fock_dim; ++n) {
    rho(n, n) = tw.weights[static_cast<std::size_t>(n)] / sum;
  }
  return DensityMatrix(std::move(rho));
}

Vector basis_vector(int dim, int index) {
  if (index < 0 || index >= dim) {
    throw LayoutError("basis index " + std::to_string(index) + " out of range for dimension " +
                      std::to_string(dim));
  }
  Vector v = Vector::Zero(dim);
  v(index) = 1.0;
  return v;
}

DensityMatrix pure_state(const Vector& atom, const Vector& resonator, const Vector& sq) {
  if (atom.size() != kAtomDim) throw LayoutError("atom amplitude vector must have 4 entries");
  if (sq.size() != kQubitDim) throw LayoutError("qubit amplitude vector must have 2 entries");
  const HilbertLayout layout(static_cast<int>(resonator.size()));
  require_normalized(atom, "atom");
  require_normalized(resonator, "resonator");
  require_normalized(sq, "qubit");

  Vector psi(layout.total_dim());
  for (int a = 0; a < kAtomDim; ++a) {
    for (int n = 0; n < layout.fock_dim(); ++n) {
      for (int q = 0; q < kQubitDim; ++q) {
        psi(layout.index(a, n, q)) = atom(a) * resonator(n) * sq(q);
      }
    }
  }
  return DensityMatrix(layout, psi * psi.adjoint());
}

DensityMatrix pure_state(AtomLevel atom, const Vector& resonator, const Vector& sq) {
  return pure_state(basis_vector(kAtomDim, index_of(atom)), resonator, sq);
}

DensityMatrix product_state(const DensityMatrix& atom, const DensityMatrix& resonator,
                            const DensityMatrix& sq) {
  if (atom.dim() != kAtomDim) throw LayoutError("atom state must be 4x4");
  if (sq.dim() != kQubitDim) throw LayoutError("qubit state must be 2x2");
  const HilbertLayout layout(resonator.dim());
  return DensityMatrix(layout, tensor(tensor(atom.matrix(), resonator.matrix()), sq.matrix()));
}

}  // namespace transduce
