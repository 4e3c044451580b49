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

#include "transduce/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Sparse>

namespace transduce {

namespace {

constexpr Complex kI(0.0, 1.0);
constexpr double kInf = std::numeric_limits<double>::infinity();

using Sparse = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;

Sparse sparse_from(const Matrix& m) {
  std::vector<Eigen::Triplet<Complex>> triplets;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (m(i, j) != Complex(0.0, 0.0)) triplets.emplace_back(i, j, m(i, j));
    }
  }
  Sparse s(m.rows(), m.cols());
  s.setFromTriplets(triplets.begin(), triplets.end());
  s.makeCompressed();
  return s;
}

// Non-Hermitian effective generator K(t) = H(t) − (i/2) Σ γ L†L on a fixed
// sparse pattern. Each term keeps its own value array aligned with the
// pattern, so re-evaluating K(t) is a short axpy over the nonzeros.
class PackedGenerator {
 public:
  PackedGenerator(const ModulatedHamiltonian& h, const std::vector<CollapseOperator>& collapse) {
    const int n = h.layout().total_dim();
    Matrix decay = Matrix::Zero(n, n);
    for (const CollapseOperator& c : collapse) {
      if (!(c.op.layout() == h.layout())) throw LayoutError("collapse operator layout mismatch");
      decay += (-0.5 * kI * c.rate) * (c.op.matrix().adjoint() * c.op.matrix());
      jumps_.push_back({c.rate, sparse_from(c.op.matrix())});
    }

    Eigen::MatrixXd mask = decay.cwiseAbs();
    for (const auto& term : h.terms()) mask += term.op.matrix().cwiseAbs();
    std::vector<Eigen::Triplet<Complex>> triplets;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (mask(i, j) > 0.0) triplets.emplace_back(i, j, Complex(1.0, 0.0));
      }
    }
    k_.resize(n, n);
    k_.setFromTriplets(triplets.begin(), triplets.end());
    k_.makeCompressed();

    constant_ = gather(decay);
    for (const auto& term : h.terms()) {
      terms_.push_back({gather(term.op.matrix()), term.frequency, term.switch_on});
      if (term.frequency != 0.0) time_dependent_ = true;
    }
    values_ = constant_;
  }

  // Terms switched on at or before the segment start are active for the
  // whole segment.
  void begin_segment(double segment_start) {
    segment_start_ = segment_start;
    assemble(segment_start);
  }

  void at(double t) {
    if (time_dependent_) assemble(t);
  }

  const Sparse& k() const { return k_; }
  const std::vector<std::pair<double, Sparse>>& jumps() const { return jumps_; }

 private:
  struct Term {
    Vector values;
    double frequency;
    double switch_on;
  };

  Vector gather(const Matrix& m) const {
    Vector v(k_.nonZeros());
    Eigen::Index p = 0;
    for (int row = 0; row < k_.outerSize(); ++row) {
      for (Sparse::InnerIterator it(k_, row); it; ++it) v(p++) = m(it.row(), it.col());
    }
    return v;
  }

  void assemble(double t) {
    values_ = constant_;
    for (const Term& term : terms_) {
      if (term.switch_on > segment_start_) continue;
      if (term.frequency == 0.0) {
        values_ += term.values;
      } else {
        values_ += std::exp(kI * term.frequency * t) * term.values;
      }
    }
    Eigen::Map<Vector>(k_.valuePtr(), k_.nonZeros()) = values_;
  }

  Sparse k_;
  Vector constant_;
  Vector values_;
  std::vector<Term> terms_;
  std::vector<std::pair<double, Sparse>> jumps_;
  double segment_start_ = -kInf;
  bool time_dependent_ = false;
};

// A jump operator with at most one nonzero per row (ladder operators,
// projector-like transitions, diagonal dephasing) acts on ρ as a weighted
// gather: (LρL†)_ij = w_i w_j* ρ_{c_i c_j}. Anything else falls back to
// sparse products.
struct Jump {
  double rate = 0.0;
  Sparse op;
  bool monomial = false;
  std::vector<int> rows;
  std::vector<int> cols;
  std::vector<Complex> weights;  // √γ-scaled
};

Jump make_jump(double rate, const Sparse& op) {
  Jump j;
  j.rate = rate;
  j.op = op;
  j.monomial = true;
  for (int row = 0; row < op.outerSize(); ++row) {
    int count = 0;
    for (Sparse::InnerIterator it(op, row); it; ++it) {
      if (++count > 1) j.monomial = false;
      j.rows.push_back(row);
      j.cols.push_back(static_cast<int>(it.col()));
      j.weights.push_back(std::sqrt(rate) * it.value());
    }
  }
  return j;
}

// y = K x for a column-major x with any number of columns.
void csr_times(const Sparse& k, const Complex* x, Complex* y, Eigen::Index n, Eigen::Index cols) {
  const auto* outer = k.outerIndexPtr();
  const auto* inner = k.innerIndexPtr();
  const Complex* values = k.valuePtr();
  for (Eigen::Index c = 0; c < cols; ++c) {
    const Complex* xc = x + c * n;
    Complex* yc = y + c * n;
    for (Eigen::Index i = 0; i < n; ++i) {
      Complex sum(0.0, 0.0);
      for (auto p = outer[i]; p < outer[i + 1]; ++p) sum += values[p] * xc[inner[p]];
      yc[i] = sum;
    }
  }
}

// ρ̇ = −iKρ + iρK† + Σ γ LρL†. Uses ρ = ρ† so that ρK† = (Kρ)† and
// LρL† = L(Lρ)†.
struct DensityRhs {
  PackedGenerator& gen;
  Matrix y;
  Matrix z;
  std::vector<Jump> jumps;

  void operator()(double t, const Matrix& rho, Matrix& out) {
    gen.at(t);
    if (jumps.size() != gen.jumps().size()) {
      jumps.clear();
      for (const auto& [rate, l] : gen.jumps()) jumps.push_back(make_jump(rate, l));
    }
    const Eigen::Index n = rho.rows();
    y.resize(n, n);
    out.resize(n, n);
    csr_times(gen.k(), rho.data(), y.data(), n, n);
    const Complex* yd = y.data();
    Complex* od = out.data();
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index i = 0; i < n; ++i) {
        const Complex d = yd[j * n + i] - std::conj(yd[i * n + j]);
        od[j * n + i] = Complex(d.imag(), -d.real());  // −i·d
      }
    }
    const Complex* rd = rho.data();
    for (const Jump& jump : jumps) {
      if (!jump.monomial) {
        z.noalias() = jump.op * rho;
        out.noalias() += jump.rate * (jump.op * z.adjoint());
        continue;
      }
      const std::size_t m = jump.rows.size();
      for (std::size_t b = 0; b < m; ++b) {
        const Complex wb = std::conj(jump.weights[b]);
        const Complex* rcol = rd + static_cast<Eigen::Index>(jump.cols[b]) * n;
        Complex* ocol = od + static_cast<Eigen::Index>(jump.rows[b]) * n;
        for (std::size_t a = 0; a < m; ++a) ocol[jump.rows[a]] += jump.weights[a] * wb * rcol[jump.cols[a]];
      }
    }
  }
};

struct StateRhs {
  PackedGenerator& gen;

  void operator()(double t, const Matrix& psi, Matrix& out) {
    gen.at(t);
    out.resize(psi.rows(), psi.cols());
    csr_times(gen.k(), psi.data(), out.data(), psi.rows(), psi.cols());
    out *= -kI;
  }
};

// Dormand–Prince 5(4) with FSAL and a max-norm error estimate.
template <class Rhs>
class Stepper {
 public:
  Stepper(Rhs& rhs, PackedGenerator& gen, std::vector<double> switches, double max_step,
          const IntegratorConfig& config, EvolutionDiagnostics& stats)
      : rhs_(rhs), gen_(gen), switches_(std::move(switches)), max_step_(max_step),
        config_(config), stats_(stats) {}

  void advance(Matrix& y, double t0, double t1) {
    if (t1 <= t0) return;
    std::vector<double> cuts{t0};
    for (double s : switches_) {
      if (s > t0 && s < t1) cuts.push_back(s);
    }
    cuts.push_back(t1);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const double start = cuts[i];
      if (std::find(switches_.begin(), switches_.end(), start) != switches_.end()) h_ = 0.0;
      gen_.begin_segment(start);
      segment(y, start, cuts[i + 1]);
    }
  }

 private:
  double error_norm(const Matrix& err, const Matrix& y, const Matrix& ynew) {
    // Squared magnitudes plus a plain sqrt vectorize; complex abs goes through hypot.
    scale_ = config_.abs_tol +
             config_.rel_tol * y.cwiseAbs2().array().max(ynew.cwiseAbs2().array()).sqrt();
    const double e = std::sqrt((err.cwiseAbs2().array() / scale_.square()).maxCoeff());
    return std::isfinite(e) ? e : 1e10;
  }

  void eval(double t, const Matrix& y, Matrix& out) {
    rhs_(t, y, out);
    ++stats_.rhs_evaluations;
  }

  void segment(Matrix& y, double t0, double t1) {
    const auto rows = y.rows();
    const auto cols = y.cols();
    for (Matrix* m : {&k1_, &k2_, &k3_, &k4_, &k5_, &k6_, &k7_, &tmp_, &ynew_}) m->resize(rows, cols);

    eval(t0, y, k1_);
    const double span = t1 - t0;
    double h = h_;
    if (h <= 0.0) {
      const Eigen::ArrayXXd scale = config_.abs_tol + config_.rel_tol * y.cwiseAbs().array();
      const double d0 = (y.cwiseAbs().array() / scale).maxCoeff();
      const double d1 = (k1_.cwiseAbs().array() / scale).maxCoeff();
      h = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 * span : 0.01 * d0 / d1;
    }
    h = std::min({h, max_step_, span});

    double t = t0;
    int rejections = 0;
    bool last_rejected = false;
    while (t < t1) {
      double step = h;
      bool clamped = false;
      if (t + step >= t1 - 1e-13 * std::max(1.0, std::abs(t1))) {
        step = t1 - t;
        clamped = true;
      }
      if (!(step > 1e-15 * std::max(1.0, std::abs(t)))) {
        throw IntegrationError("step size underflow", t);
      }

      tmp_ = y + step * (1.0 / 5.0) * k1_;
      eval(t + step / 5.0, tmp_, k2_);
      tmp_ = y + step * ((3.0 / 40.0) * k1_ + (9.0 / 40.0) * k2_);
      eval(t + 3.0 * step / 10.0, tmp_, k3_);
      tmp_ = y + step * ((44.0 / 45.0) * k1_ - (56.0 / 15.0) * k2_ + (32.0 / 9.0) * k3_);
      eval(t + 4.0 * step / 5.0, tmp_, k4_);
      tmp_ = y + step * ((19372.0 / 6561.0) * k1_ - (25360.0 / 2187.0) * k2_ +
                         (64448.0 / 6561.0) * k3_ - (212.0 / 729.0) * k4_);
      eval(t + 8.0 * step / 9.0, tmp_, k5_);
      tmp_ = y + step * ((9017.0 / 3168.0) * k1_ - (355.0 / 33.0) * k2_ + (46732.0 / 5247.0) * k3_ +
                         (49.0 / 176.0) * k4_ - (5103.0 / 18656.0) * k5_);
      eval(t + step, tmp_, k6_);
      ynew_ = y + step * ((35.0 / 384.0) * k1_ + (500.0 / 1113.0) * k3_ + (125.0 / 192.0) * k4_ -
                          (2187.0 / 6784.0) * k5_ + (11.0 / 84.0) * k6_);
      eval(t + step, ynew_, k7_);
      tmp_ = step * ((71.0 / 57600.0) * k1_ - (71.0 / 16695.0) * k3_ + (71.0 / 1920.0) * k4_ -
                     (17253.0 / 339200.0) * k5_ + (22.0 / 525.0) * k6_ - (1.0 / 40.0) * k7_);
      const double err = error_norm(tmp_, y, ynew_);

      if (err <= 1.0) {
        t = clamped ? t1 : t + step;
        y.swap(ynew_);
        k1_.swap(k7_);
        ++stats_.accepted_steps;
        if (static_cast<long>(stats_.accepted_steps) > config_.max_steps) {
          throw IntegrationError("step budget exhausted", t);
        }
        double factor = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
        if (last_rejected) factor = std::min(factor, 1.0);
        // A step shortened to land on t1 says nothing about the natural step.
        h = std::min((clamped ? std::max(h, step) : step) * factor, max_step_);
        rejections = 0;
        last_rejected = false;
      } else {
        ++stats_.rejected_steps;
        if (++rejections > config_.max_consecutive_rejections) {
          throw IntegrationError("error tolerance not met after repeated step rejections", t);
        }
        h = step * std::max(0.2, 0.9 * std::pow(err, -0.2));
        last_rejected = true;
      }
    }
    h_ = h;
  }

  Rhs& rhs_;
  PackedGenerator& gen_;
  std::vector<double> switches_;
  double max_step_;
  const IntegratorConfig& config_;
  EvolutionDiagnostics& stats_;
  double h_ = 0.0;
  Matrix k1_, k2_, k3_, k4_, k5_, k6_, k7_, tmp_, ynew_;
  Eigen::ArrayXXd scale_;
};

double effective_max_step(const ModulatedHamiltonian& h, const IntegratorConfig& config) {
  double cap = config.max_step > 0.0 ? config.max_step : kInf;
  const double w = h.max_frequency();
  if (w > 0.0) cap = std::min(cap, kTwoPi / (20.0 * w));
  return cap;
}

void check_layout(const ModulatedHamiltonian& h, const DensityMatrix& rho) {
  if (!rho.layout() || !(*rho.layout() == h.layout())) {
    throw LayoutError("initial state does not live on the Hamiltonian's layout");
  }
}

class TrajectoryBuilder {
 public:
  TrajectoryBuilder(const HilbertLayout& layout, const TargetState& target,
                    const IntegratorConfig& config, bool unitary, double initial_purity)
      : layout_(layout), target_(target), config_(config), unitary_(unitary),
        initial_purity_(initial_purity) {}

  void record(TrajectoryRecord& rec, double t, const Matrix& rho) {
    const DensityMatrix state(layout_, rho);
    const DensityMatrix atom = partial_trace(state, Subsystem::Atom);
    const Observables o = observables(state);
    rec.times.push_back(t);
    rec.fidelity.push_back(fidelity(atom, target_));
    rec.n_mean.push_back(o.n_mean);
    rec.p_g.push_back(o.p_g);
    rec.p_e.push_back(o.p_e);
    rec.p_r.push_back(o.p_r);
    rec.p_s.push_back(o.p_s);

    EvolutionDiagnostics& d = rec.diagnostics;
    d.max_trace_error = std::max(d.max_trace_error, std::abs(rho.trace() - Complex(1.0, 0.0)));
    d.max_hermiticity = std::max(d.max_hermiticity, (rho - rho.adjoint()).cwiseAbs().maxCoeff());
    if (config_.monitor_positivity) {
      const double min_eig = check_density(rho).min_eigenvalue;
      d.min_eigenvalue = std::min(d.min_eigenvalue, min_eig);
      if (min_eig < -1e-7 && !positivity_warned_) {
        std::ostringstream msg;
        msg << "density matrix eigenvalue " << min_eig << " below -1e-7 at t = " << t << " us";
        d.warnings.push_back(msg.str());
        positivity_warned_ = true;
      }
    }
    if (unitary_) {
      const double drift = std::abs(state.purity() - initial_purity_);
      d.max_purity_drift = std::max(d.max_purity_drift, drift);
      if (drift > 10.0 * config_.rel_tol && !purity_warned_) {
        std::ostringstream msg;
        msg << "purity drifted by " << drift << " at t = " << t << " us";
        d.warnings.push_back(msg.str());
        purity_warned_ = true;
      }
    }
  }

 private:
  HilbertLayout layout_;
  const TargetState& target_;
  const IntegratorConfig& config_;
  bool unitary_;
  double initial_purity_;
  bool positivity_warned_ = false;
  bool purity_warned_ = false;
};

TrajectoryRecord run(const ModulatedHamiltonian& h, const std::vector<CollapseOperator>& collapse,
                     const DensityMatrix& rho0, const ProtocolSchedule& schedule,
                     const TargetState& target, const IntegratorConfig& config) {
  check_layout(h, rho0);
  const double total = schedule.total();
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw ParameterError("protocol duration must be positive and finite");
  }

  PackedGenerator gen(h, collapse);
  TrajectoryRecord rec{{}, {}, {}, {}, {}, {}, {}, rho0, {}};
  DensityRhs rhs{gen, {}, {}, {}};
  Stepper<DensityRhs> stepper(rhs, gen, h.switch_times(), effective_max_step(h, config), config,
                              rec.diagnostics);
  TrajectoryBuilder builder(h.layout(), target, config, collapse.empty(), rho0.purity());

  Matrix rho = rho0.matrix();
  if (config.record_samples) {
    const double dt = config.sample_dt > 0.0 ? config.sample_dt : total / 400.0;
    const long intervals = std::max(1L, static_cast<long>(std::ceil(total / dt - 1e-9)));
    builder.record(rec, 0.0, rho);
    double t_prev = 0.0;
    for (long k = 1; k <= intervals; ++k) {
      const double t_next = k == intervals ? total : total * static_cast<double>(k) / intervals;
      stepper.advance(rho, t_prev, t_next);
      builder.record(rec, t_next, rho);
      t_prev = t_next;
    }
  } else {
    stepper.advance(rho, 0.0, total);
    builder.record(rec, total, rho);
  }
  rec.final_state = DensityMatrix(h.layout(), std::move(rho));
  return rec;
}

}  // namespace

double fastest_frequency(const ModelParams& params) {
  const double w = std::max({params.lambda_tilde(), params.omega_tilde, params.omega,
                             std::abs(params.delta), params.kappa});
  return w / kTwoPi;
}

IntegratorConfig integrator_config_for(const ModelParams& params) {
  IntegratorConfig config;
  const double f = fastest_frequency(params);
  if (f > 0.0) config.max_step = 0.05 / f;
  return config;
}

TrajectoryRecord evolve_von_neumann(const ModulatedHamiltonian& h, const DensityMatrix& rho0,
                                    const ProtocolSchedule& schedule, const TargetState& target,
                                    const IntegratorConfig& config) {
  return run(h, {}, rho0, schedule, target, config);
}

TrajectoryRecord evolve_lindblad(const ModulatedHamiltonian& h,
                                 const std::vector<CollapseOperator>& collapse,
                                 const DensityMatrix& rho0, const ProtocolSchedule& schedule,
                                 const TargetState& target, const IntegratorConfig& config) {
  return run(h, collapse, rho0, schedule, target, config);
}

namespace {

void check_span(double t0, double t1) {
  if (!std::isfinite(t0) || !std::isfinite(t1) || t1 < t0) {
    throw ParameterError("propagation span must be finite with t1 >= t0");
  }
}

}  // namespace

Matrix propagate_density(const ModulatedHamiltonian& h, const std::vector<CollapseOperator>& collapse,
                         const Matrix& rho, double t0, double t1, const IntegratorConfig& config,
                         EvolutionDiagnostics* stats) {
  const int n = h.layout().total_dim();
  if (rho.rows() != n || rho.cols() != n) throw LayoutError("density matrix dimension mismatch");
  check_span(t0, t1);
  EvolutionDiagnostics local;
  PackedGenerator gen(h, collapse);
  DensityRhs rhs{gen, {}, {}, {}};
  Stepper<DensityRhs> stepper(rhs, gen, h.switch_times(), effective_max_step(h, config), config,
                              stats ? *stats : local);
  Matrix out = rho;
  stepper.advance(out, t0, t1);
  return out;
}

Vector propagate_state(const ModulatedHamiltonian& h, const Vector& psi, double t0, double t1,
                       const IntegratorConfig& config, EvolutionDiagnostics* stats) {
  if (psi.size() != h.layout().total_dim()) throw LayoutError("state dimension mismatch");
  check_span(t0, t1);
  EvolutionDiagnostics local;
  PackedGenerator gen(h, {});
  StateRhs rhs{gen};
  Stepper<StateRhs> stepper(rhs, gen, h.switch_times(), effective_max_step(h, config), config,
                            stats ? *stats : local);
  Matrix out = psi;
  stepper.advance(out, t0, t1);
  return out.col(0);
}

}  // namespace transduce
