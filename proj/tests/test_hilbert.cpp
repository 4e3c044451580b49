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

#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "transduce/errors.hpp"
#include "transduce/hilbert.hpp"

using namespace transduce;
using transduce::testing::max_abs;

TEST_CASE("layout index follows atom-slowest ordering") {
  const HilbertLayout layout(5);
  CHECK(layout.total_dim() == 40);
  CHECK(layout.dim(Subsystem::Atom) == 4);
  CHECK(layout.dim(Subsystem::Resonator) == 5);
  CHECK(layout.dim(Subsystem::SQubit) == 2);
  for (int a = 0; a < 4; ++a) {
    for (int n = 0; n < 5; ++n) {
      for (int q = 0; q < 2; ++q) CHECK(layout.index(a, n, q) == ((a * 5) + n) * 2 + q);
    }
  }
  CHECK(layout.index(AtomLevel::R, 0, QubitLevel::Excited) == 21);
  CHECK_THROWS_AS(HilbertLayout(1), LayoutError);
}

TEST_CASE("tensor products") {
  SUBCASE("identities") {
    CHECK(max_abs(tensor(Matrix::Identity(2, 2), Matrix::Identity(3, 3)) - Matrix::Identity(6, 6)) == 0.0);
  }
  SUBCASE("diagonal structure") {
    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = 1.0;
    d(1, 1) = 2.0;
    const Matrix out = tensor(d, Matrix::Identity(2, 2));
    Eigen::VectorXcd expect(4);
    expect << 1.0, 1.0, 2.0, 2.0;
    CHECK(max_abs(out - Matrix(expect.asDiagonal())) == 0.0);
  }
  SUBCASE("|e><s| on the atom moves index (3,0,0) to (1,0,0)") {
    const HilbertLayout layout(4);
    const Matrix op = tensor(tensor(atom_transition(AtomLevel::E, AtomLevel::S), Matrix::Identity(4, 4)),
                             Matrix::Identity(2, 2));
    const Vector in = basis_vector(layout.total_dim(), layout.index(3, 0, 0));
    const Vector out = op * in;
    CHECK(max_abs(out - basis_vector(layout.total_dim(), layout.index(1, 0, 0))) == 0.0);
  }
  SUBCASE("non-square operands are rejected") {
    CHECK_THROWS_AS(tensor(Matrix::Zero(2, 3), Matrix::Identity(2, 2)), LayoutError);
  }
}

TEST_CASE("tensor is bilinear, associative and multiplicative") {
  std::mt19937_64 rng(7);
  const Matrix a = testing::random_matrix(2, 2, rng);
  const Matrix b = testing::random_matrix(3, 3, rng);
  const Matrix c = testing::random_matrix(2, 2, rng);
  const Matrix d = testing::random_matrix(3, 3, rng);
  const Matrix e = testing::random_matrix(2, 2, rng);
  const Complex s(0.3, -1.2);
  CHECK(max_abs(tensor(tensor(a, b), e) - tensor(a, tensor(b, e))) < 1e-12);
  CHECK(max_abs(tensor(a, b) * tensor(c, d) - tensor(a * c, b * d)) < 1e-12);
  CHECK(max_abs(tensor(a + s * c, b) - (tensor(a, b) + s * tensor(c, b))) < 1e-12);
  CHECK(max_abs(tensor(a, b + s * d) - (tensor(a, b) + s * tensor(a, d))) < 1e-12);
}

TEST_CASE("annihilation operator") {
  Matrix two(2, 2);
  two << 0.0, 1.0, 0.0, 0.0;
  CHECK(max_abs(annihilation(2) - two) == 0.0);
  CHECK(annihilation(3)(1, 2).real() == doctest::Approx(std::sqrt(2.0)));
  const Matrix a = annihilation(6);
  const Matrix n = a.adjoint() * a;
  for (int k = 0; k < 6; ++k) CHECK(n(k, k).real() == doctest::Approx(k));
  CHECK(max_abs(n - Matrix(n.diagonal().asDiagonal())) == 0.0);
  CHECK_THROWS_AS(annihilation(1), LayoutError);
}

TEST_CASE("embedding") {
  const HilbertLayout layout(4);
  CHECK(max_abs(embed(Matrix::Identity(4, 4), Subsystem::Atom, layout).matrix() -
                Matrix::Identity(layout.total_dim(), layout.total_dim())) == 0.0);

  SUBCASE("truncated commutator is identity except at the top Fock level") {
    const Matrix a = embed(annihilation(4), Subsystem::Resonator, layout).matrix();
    const Matrix comm = a * a.adjoint() - a.adjoint() * a;
    for (int at = 0; at < 4; ++at) {
      for (int n = 0; n < 4; ++n) {
        for (int q = 0; q < 2; ++q) {
          const int i = layout.index(at, n, q);
          CHECK(comm(i, i).real() == doctest::Approx(n == 3 ? -3.0 : 1.0));
        }
      }
    }
    CHECK(max_abs(comm - Matrix(comm.diagonal().asDiagonal())) == 0.0);
  }
  SUBCASE("qubit projector trace counts the other factors") {
    const auto pe = embed(qubit_transition(QubitLevel::Excited, QubitLevel::Excited), Subsystem::SQubit, layout);
    CHECK(pe.matrix().trace().real() == doctest::Approx(4 * 4));
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(embed(Matrix::Identity(3, 3), Subsystem::Atom, layout), LayoutError);
    CHECK_THROWS_AS(embed(annihilation(5), Subsystem::Resonator, layout), LayoutError);
  }
}

TEST_CASE("composite operators check layouts") {
  const HilbertLayout small(3), big(4);
  CHECK_THROWS_AS(CompositeOperator(small, Matrix::Identity(5, 5)), LayoutError);
  CHECK_THROWS(CompositeOperator::identity(small) + CompositeOperator::identity(big));
  const auto id = CompositeOperator::identity(small);
  CHECK(max_abs((id * id - id).matrix()) == 0.0);
}

TEST_CASE("partial trace") {
  std::mt19937_64 rng(11);
  const HilbertLayout layout(3);

  SUBCASE("product states factor") {
    const DensityMatrix ra(testing::random_density(4, rng));
    const DensityMatrix rr(testing::random_density(3, rng));
    const DensityMatrix rs(testing::random_density(2, rng));
    const DensityMatrix full = product_state(ra, rr, rs);
    CHECK(max_abs(partial_trace(full, Subsystem::Atom).matrix() - ra.matrix()) < 1e-12);
    CHECK(max_abs(partial_trace(full, Subsystem::Resonator).matrix() - rr.matrix()) < 1e-12);
    CHECK(max_abs(partial_trace(full, Subsystem::SQubit).matrix() - rs.matrix()) < 1e-12);
  }
  SUBCASE("maximally entangled atom-qubit pair") {
    Vector psi = Vector::Zero(layout.total_dim());
    psi(layout.index(AtomLevel::R, 0, QubitLevel::Excited)) = 1.0 / std::sqrt(2.0);
    psi(layout.index(AtomLevel::S, 0, QubitLevel::Ground)) = 1.0 / std::sqrt(2.0);
    const DensityMatrix rho(layout, psi * psi.adjoint());
    Matrix expect = Matrix::Zero(4, 4);
    expect(2, 2) = expect(3, 3) = 0.5;
    CHECK(max_abs(partial_trace(rho, Subsystem::Atom).matrix() - expect) < 1e-15);
  }
  SUBCASE("trace preserved and local expectations agree") {
    const DensityMatrix rho(layout, testing::random_density(layout.total_dim(), rng));
    const std::pair<Subsystem, int> parts[] = {{Subsystem::Atom, 4}, {Subsystem::Resonator, 3}, {Subsystem::SQubit, 2}};
    for (const auto& [s, d] : parts) {
      const DensityMatrix reduced = partial_trace(rho, s);
      CHECK(std::abs(reduced.trace() - 1.0) < 1e-10);
      const Matrix x = testing::random_matrix(d, d, rng);
      const Complex global = (embed(x, s, layout).matrix() * rho.matrix()).trace();
      const Complex local = (x * reduced.matrix()).trace();
      CHECK(std::abs(global - local) < 1e-12);
    }
  }
}

TEST_CASE("thermal states") {
  CHECK(max_abs(thermal_state(0.0, 6).matrix() - Matrix(basis_vector(6, 0) * basis_vector(6, 0).adjoint())) == 0.0);

  const ThermalWeights w = thermal_weights(0.6, 12);
  CHECK(w.weights[0] == doctest::Approx(0.625).epsilon(1e-12));
  CHECK(w.weights[1] == doctest::Approx(0.6 / (1.6 * 1.6)).epsilon(1e-12));
  CHECK(w.weights[1] == doctest::Approx(0.2344).epsilon(1e-3));
  CHECK(w.discarded < 1e-4);
  CHECK(w.discarded > 0.0);

  const DensityMatrix rho = thermal_state(0.6, 12);
  CHECK(std::abs(rho.trace() - 1.0) <= 1e-8);
  CHECK(check_density(rho).ok());
  for (int n = 1; n < 12; ++n) CHECK(rho(n, n).real() < rho(n - 1, n - 1).real());

  CHECK_THROWS_AS(thermal_state(-0.1, 5), ParameterError);
}

TEST_CASE("pure states") {
  const HilbertLayout layout(5);
  const Vector vac = basis_vector(5, 0);
  const Vector excited = basis_vector(2, 1);

  const DensityMatrix rho = pure_state(AtomLevel::R, vac, excited);
  const int idx = ((2 * 5) + 0) * 2 + 1;
  CHECK(rho(idx, idx).real() == 1.0);
  CHECK(std::abs(rho.trace() - 1.0) < 1e-15);

  Vector sq(2);
  sq << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const DensityMatrix eq = pure_state(AtomLevel::R, vac, sq);
  const int e = layout.index(AtomLevel::R, 0, QubitLevel::Excited);
  const int g = layout.index(AtomLevel::R, 0, QubitLevel::Ground);
  CHECK(eq(e, e).real() == doctest::Approx(0.5));
  CHECK(eq(g, g).real() == doctest::Approx(0.5));
  CHECK(eq(e, g).real() == doctest::Approx(0.5));

  std::mt19937_64 rng(3);
  for (int k = 0; k < 5; ++k) {
    const DensityMatrix r = pure_state(testing::random_ket(4, rng), testing::random_ket(5, rng), testing::random_ket(2, rng));
    CHECK(r.purity() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(check_density(r).ok());
  }

  CHECK_THROWS_AS(pure_state(AtomLevel::R, 2.0 * vac, excited), ParameterError);
  CHECK_THROWS_AS(pure_state(AtomLevel::R, vac, Vector::Zero(2)), ParameterError);
}

TEST_CASE("product kets agree with product density matrices") {
  std::mt19937_64 rng(5);
  const Vector a = testing::random_ket(4, rng);
  const Vector r = testing::random_ket(3, rng);
  const Vector s = testing::random_ket(2, rng);
  const Vector psi = product_ket(a, r, s);
  CHECK(max_abs(psi * psi.adjoint() - pure_state(a, r, s).matrix()) < 1e-14);
}

TEST_CASE("density checks flag broken invariants") {
  Matrix rho = Matrix::Identity(4, 4) / 4.0;
  CHECK(check_density(rho).ok());
  rho(0, 1) = 0.1;
  CHECK(check_density(rho).hermiticity > 0.05);
  Matrix neg = Matrix::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  CHECK(check_density(neg).min_eigenvalue == doctest::Approx(-0.5));
  CHECK_FALSE(check_density(neg).ok());
}
