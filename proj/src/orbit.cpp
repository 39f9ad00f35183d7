#include "equinet/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace equinet {

namespace {

constexpr double kPi = std::numbers::pi;

int components(const FourierState& s) { return s.reduction.has_cosine() ? 2 : 1; }

struct Grid {
  int M = 0;
  Eigen::MatrixXd basis;  // M x (K*C): column (a*C + c) is sin/cos(k_a t)
};

Grid make_grid(const FourierState& s, int M) {
  Grid g;
  g.M = M;
  const int K = static_cast<int>(s.modes.size()), C = components(s);
  g.basis.resize(M, K * C);
  for (int m = 0; m < M; ++m) {
    const double t = 2.0 * kPi * m / M;
    for (int a = 0; a < K; ++a) {
      g.basis(m, a * C) = std::sin(s.modes[a] * t);
      if (C == 2) g.basis(m, a * C + 1) = std::cos(s.modes[a] * t);
    }
  }
  return g;
}

// (K*C) x n coefficient block in basis-column order.
Eigen::MatrixXd coeff_block(const FourierState& s) {
  const int K = static_cast<int>(s.modes.size()), C = components(s);
  Eigen::MatrixXd B(K * C, s.vertices());
  for (int a = 0; a < K; ++a) {
    B.row(a * C) = s.sine.row(a);
    if (C == 2) B.row(a * C + 1) = s.cosine.row(a);
  }
  return B;
}

void store_block(FourierState& s, const Eigen::MatrixXd& B) {
  const int K = static_cast<int>(s.modes.size()), C = components(s);
  for (int a = 0; a < K; ++a) {
    s.sine.row(a) = B.row(a * C);
    if (C == 2) s.cosine.row(a) = B.row(a * C + 1);
  }
}

}  // namespace

FourierState FourierState::zero(int vertices, double lambda, const ReductionChoice& red, int truncation) {
  if (truncation < 1) throw ValidationError("truncation: must be at least 1");
  FourierState s;
  s.lambda = lambda;
  s.reduction = red;
  s.truncation = truncation;
  s.modes = red.modes(truncation);
  if (s.modes.empty()) throw ValidationError("truncation: no modes of the reduction below N");
  s.sine = Eigen::MatrixXd::Zero(static_cast<int>(s.modes.size()), vertices);
  s.cosine = Eigen::MatrixXd::Zero(static_cast<int>(s.modes.size()), vertices);
  return s;
}

Eigen::VectorXd FourierState::evaluate(double t) const {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(vertices());
  for (std::size_t a = 0; a < modes.size(); ++a) {
    x += std::sin(modes[a] * t) * sine.row(a).transpose();
    if (reduction.has_cosine()) x += std::cos(modes[a] * t) * cosine.row(a).transpose();
  }
  return x;
}

double FourierState::max_abs_coeff() const {
  double m = sine.size() ? sine.cwiseAbs().maxCoeff() : 0.0;
  if (cosine.size()) m = std::max(m, cosine.cwiseAbs().maxCoeff());
  return m;
}

FourierState FourierState::resized(int N) const {
  FourierState out = zero(vertices(), lambda, reduction, N);
  for (std::size_t a = 0; a < out.modes.size(); ++a) {
    auto it = std::find(modes.begin(), modes.end(), out.modes[a]);
    if (it == modes.end()) continue;
    const auto b = it - modes.begin();
    out.sine.row(a) = sine.row(b);
    out.cosine.row(a) = cosine.row(b);
  }
  return out;
}

double FourierState::sine_coeff(int k, int i) const {
  auto it = std::find(modes.begin(), modes.end(), k);
  return it == modes.end() ? 0.0 : sine(it - modes.begin(), i);
}

int collocation_size(int truncation, const Nonlinearity& nl) {
  return std::max(4 * truncation, (nl.degree() + 1) * truncation + 2);
}

FourierState residual(const FourierState& state, const Eigen::MatrixXd& laplacian, const Nonlinearity& nl,
                      int collocation_points) {
  const int N = state.truncation;
  if (!state.modes.empty() && state.modes.back() > N) throw ValidationError("truncation below the largest mode");
  const int M = collocation_points > 0 ? collocation_points : collocation_size(N, nl);
  if (M <= nl.degree() * N)
    throw ValidationError("aliasing guard: collocation grid " + std::to_string(M) + " must exceed " +
                          std::to_string(nl.degree() * N));
  const Grid grid = make_grid(state, M);
  const Eigen::MatrixXd B = coeff_block(state);
  const Eigen::MatrixXd X = grid.basis * B;  // M x n
  Eigen::MatrixXd F = X * laplacian;         // Delta symmetric
  for (int m = 0; m < M; ++m)
    for (int i = 0; i < X.cols(); ++i) F(m, i) += nl.value(X(m, i));
  const Eigen::MatrixXd Fk = (2.0 / M) * grid.basis.transpose() * F;

  FourierState out = state;
  Eigen::MatrixXd R(B.rows(), B.cols());
  const int C = components(state);
  const double l2 = state.lambda * state.lambda;
  for (int r = 0; r < B.rows(); ++r) {
    const double k = state.modes[r / C];
    R.row(r) = -k * k * B.row(r) - l2 * Fk.row(r);
  }
  store_block(out, R);
  return out;
}

Eigen::VectorXd pack(const FourierState& state) {
  const Eigen::MatrixXd B = coeff_block(state);
  Eigen::VectorXd z(B.size());
  for (int r = 0; r < B.rows(); ++r)
    for (int i = 0; i < B.cols(); ++i) z(r * B.cols() + i) = B(r, i);
  return z;
}

FourierState unpack(const FourierState& shape, const Eigen::VectorXd& z) {
  FourierState out = shape;
  const int n = shape.vertices();
  Eigen::MatrixXd B(z.size() / n, n);
  for (int r = 0; r < B.rows(); ++r)
    for (int i = 0; i < n; ++i) B(r, i) = z(r * n + i);
  store_block(out, B);
  return out;
}

Eigen::MatrixXd jacobian_analytic(const FourierState& state, const Eigen::MatrixXd& laplacian,
                                  const Nonlinearity& nl) {
  const int M = collocation_size(state.truncation, nl);
  const Grid grid = make_grid(state, M);
  const Eigen::MatrixXd X = grid.basis * coeff_block(state);
  const int n = state.vertices(), KC = static_cast<int>(grid.basis.cols()), C = components(state);
  const double l2 = state.lambda * state.lambda;
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(KC * n, KC * n);
  for (int r = 0; r < KC; ++r) {
    const double k = state.modes[r / C];
    for (int i = 0; i < n; ++i) {
      J(r * n + i, r * n + i) -= k * k;
      for (int j = 0; j < n; ++j) J(r * n + i, r * n + j) -= l2 * laplacian(i, j);
    }
  }
  Eigen::VectorXd d(M);
  for (int i = 0; i < n; ++i) {
    for (int m = 0; m < M; ++m) d(m) = nl.derivative(X(m, i));
    const Eigen::MatrixXd G = (2.0 / M) * grid.basis.transpose() * d.asDiagonal() * grid.basis;
    for (int r = 0; r < KC; ++r)
      for (int s = 0; s < KC; ++s) J(r * n + i, s * n + i) -= l2 * G(r, s);
  }
  return J;
}

Eigen::MatrixXd jacobian_fd(const FourierState& state, const Eigen::MatrixXd& laplacian, const Nonlinearity& nl) {
  const Eigen::VectorXd z = pack(state);
  const Eigen::VectorXd r0 = pack(residual(state, laplacian, nl));
  Eigen::MatrixXd J(r0.size(), z.size());
  for (int c = 0; c < z.size(); ++c) {
    const double h = 1e-7 * std::max(1.0, std::abs(z(c)));
    Eigen::VectorXd zp = z;
    zp(c) += h;
    J.col(c) = (pack(residual(unpack(state, zp), laplacian, nl)) - r0) / h;
  }
  return J;
}

NewtonResult newton_solve(const FourierState& initial, const Eigen::MatrixXd& laplacian, const Nonlinearity& nl,
                          const NewtonOptions& opts) {
  if (!(opts.tol > 0.0)) throw ValidationError("tol: must be positive");
  if (laplacian.rows() != initial.vertices()) throw ValidationError("state and Laplacian sizes differ");
  FourierState state = initial;
  const int n = state.vertices();

  // Phase: one cosine coefficient of the first mode is held at zero.
  int fixed = -1;
  if (state.reduction.has_cosine()) {
    int v = opts.phase_vertex;
    if (v < 0) {
      v = 0;
      double best = -1.0;
      for (int i = 0; i < n; ++i) {
        const double a = std::abs(state.sine(0, i)) + std::abs(state.cosine(0, i));
        if (a > best + 1e-14) {
          best = a;
          v = i;
        }
      }
    }
    if (v >= n) throw ValidationError("phase_vertex: out of range");
    state.cosine(0, v) = 0.0;
    fixed = 1 * n + v;  // row 1 of the block is the first cosine
  }

  auto norm_of = [&](const FourierState& s) { return pack(residual(s, laplacian, nl)).cwiseAbs().maxCoeff(); };

  NewtonResult out;
  double rn = norm_of(state);
  int it = 0;
  for (; rn >= opts.tol; ++it) {
    if (it >= opts.max_iter)
      throw ValidationError("no convergence after " + std::to_string(opts.max_iter) +
                            " iterations (residual " + std::to_string(rn) + ")");
    const Eigen::VectorXd r = pack(residual(state, laplacian, nl));
    Eigen::MatrixXd J = opts.analytic_jacobian ? jacobian_analytic(state, laplacian, nl) : jacobian_fd(state, laplacian, nl);
    if (fixed >= 0) {
      const int last = static_cast<int>(J.cols()) - 1;
      J.col(fixed).swap(J.col(last));
      J.conservativeResize(Eigen::NoChange, last);
    }
    Eigen::VectorXd step = J.colPivHouseholderQr().solve(-r);
    if (fixed >= 0) {
      Eigen::VectorXd full = Eigen::VectorXd::Zero(step.size() + 1);
      full.head(step.size()) = step;
      std::swap(full(fixed), full(step.size()));
      full(step.size()) = full(step.size());
      step = full;
      step(fixed) = 0.0;
    }
    const Eigen::VectorXd z = pack(state);
    double alpha = 1.0;
    FourierState best = unpack(state, z + step);
    double best_norm = norm_of(best);
    for (int h = 0; h < 10 && !(best_norm < rn); ++h) {
      alpha *= 0.5;
      FourierState trial = unpack(state, z + alpha * step);
      const double tn = norm_of(trial);
      if (tn < best_norm) {
        best = trial;
        best_norm = tn;
      }
    }
    state = best;
    rn = best_norm;
    if (!std::isfinite(rn)) throw ValidationError("no convergence: residual is not finite");
  }
  if (!(state.max_abs_coeff() > 10.0 * opts.tol))
    throw ValidationError("collapsed to trivial solution (try larger seed amplitude)");
  out.state = state;
  out.iterations = it;
  out.residual_norm = rn;
  return out;
}

double seed_amplitude(double mu, int k, double lambda, const Eigen::VectorXd& v, const Nonlinearity& nl) {
  const double l2 = lambda * lambda;
  const double v2 = v.squaredNorm();
  // First-harmonic coefficient of sin^p: C(p,(p-1)/2) / 2^(p-1).
  auto balance = [&](double A) {
    double s = k * k + l2 * mu;
    for (const auto& [p, c] : nl.coeffs()) {
      double binom = 1.0;
      for (int i = 1; i <= (p - 1) / 2; ++i) binom = binom * (p + 1 - i) / i;
      const double gamma = binom / std::pow(2.0, p - 1);
      const double kappa = v.array().pow(p + 1).sum() / v2;
      s += l2 * c * gamma * kappa * std::pow(A, p - 1);
    }
    return s;
  };
  const double f0 = balance(0.0);
  double lo = 0.0, prev = f0;
  for (double A = 1e-3; A < 1e3; A *= 1.1) {
    const double f = balance(A);
    if ((f > 0) != (prev > 0)) {
      double hi = A;
      for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if ((balance(mid) > 0) == (f0 > 0))
          lo = mid;
        else
          hi = mid;
      }
      return 0.5 * (lo + hi);
    }
    lo = A;
    prev = f;
  }
  return 0.5;
}

FourierState seed_state(const SpectralData& spectrum, int j, int k, double lambda, const ReductionChoice& red,
                        int truncation, const Nonlinearity& nl, int column, std::optional<double> amplitude) {
  if (j < 0 || j >= static_cast<int>(spectrum.spaces.size()))
    throw ValidationError("seed-mode: eigenspace index " + std::to_string(j) + " out of range");
  const auto& sp = spectrum.spaces[j];
  if (column < 0 || column >= sp.dim) throw ValidationError("seed-mode: basis column out of range");
  if (!red.contains_mode(k))
    throw ValidationError("seed-mode: mode " + std::to_string(k) + " is not in reduction " + red.to_string());
  if (k > truncation) throw ValidationError("seed-mode: mode exceeds truncation");
  Eigen::VectorXd v = sp.basis.col(column);
  // Peak entry scaled to +1, so the amplitude is the per-vertex maximum.
  Eigen::Index arg = 0;
  v.cwiseAbs().maxCoeff(&arg);
  v /= v(arg);
  const double A = amplitude ? *amplitude : seed_amplitude(sp.mu, k, lambda, v, nl);
  FourierState s = FourierState::zero(static_cast<int>(v.size()), lambda, red, truncation);
  const auto a = std::find(s.modes.begin(), s.modes.end(), k) - s.modes.begin();
  s.sine.row(a) = A * v.transpose();
  return s;
}

SymmetryReport verify_symmetry(const FourierState& state, const std::vector<SymmetryRelation>& relations,
                               double tol, int grid) {
  SymmetryReport rep;
  std::vector<Eigen::VectorXd> samples(grid);
  for (int m = 0; m < grid; ++m) samples[m] = state.evaluate(2.0 * kPi * m / grid);
  for (const auto& rel : relations) {
    RelationResult rr;
    rr.description = rel.description;
    for (int m = 0; m < grid; ++m) {
      const double t = 2.0 * kPi * m / grid;
      const Eigen::VectorXd& x = samples[m];
      const Eigen::VectorXd y = state.evaluate((rel.time_reversal ? -t : t) + rel.time_shift);
      for (int i = 0; i < state.vertices(); ++i) {
        const int pi = rel.perm.empty() ? i : rel.perm[i];
        rr.max_violation = std::max(rr.max_violation, std::abs(x(pi) - rel.sign * y(i)));
      }
    }
    rr.pass = rr.max_violation < tol;
    rep.pass = rep.pass && rr.pass;
    rep.relations.push_back(rr);
  }
  return rep;
}

std::vector<SymmetryRelation> reduction_relations(const ReductionChoice& red, int vertices, bool odd_in_time) {
  std::vector<int> id(vertices);
  for (int i = 0; i < vertices; ++i) id[i] = i;
  const double m = red.m;
  const std::string ms = std::to_string(red.m);
  std::vector<SymmetryRelation> out;
  if (red.kind == ReductionKind::Dm_z) {
    out.push_back({"x(t) = x(t+2π/" + ms + ")", id, 1, 2.0 * kPi / m, false});
  } else {
    out.push_back({"x(t) = -x(t+π/" + ms + ")", id, -1, kPi / m, false});
  }
  if (red.kind != ReductionKind::Z2m_d || odd_in_time) out.push_back({"x(t) = -x(-t)", id, -1, 0.0, true});
  return out;
}

std::vector<SymmetryRelation> spatial_relations(const std::vector<GroupElement>& generators) {
  std::vector<SymmetryRelation> out;
  for (const auto& g : generators) {
    if (g.is_identity()) continue;
    out.push_back({"x = γx, γ = " + to_string(g), g.perm, g.sign, 0.0, false});
  }
  return out;
}

std::vector<GroupElement> isotropy_generators(const FiniteGroup& G, const Eigen::VectorXd& v) {
  std::vector<GroupElement> fix;
  for (const auto& g : G.elements()) {
    double err = 0.0;
    for (int i = 0; i < g.degree(); ++i) err = std::max(err, std::abs(v(g.perm[i]) - g.sign * v(i)));
    if (err < 1e-9 && !g.is_identity()) fix.push_back(g);
  }
  // Greedy generating set.
  std::vector<GroupElement> gens;
  std::vector<GroupElement> span{GroupElement::identity(G.degree())};
  for (const auto& g : fix) {
    if (std::find(span.begin(), span.end(), g) != span.end()) continue;
    gens.push_back(g);
    span = close_generators(G.degree(), gens).elements();
  }
  return gens;
}

AprioriReport apriori_check(const FourierState& state, const Nonlinearity& nl, const Eigen::MatrixXd& laplacian) {
  AprioriReport rep;
  const int grid = 1024;
  for (int m = 0; m < grid; ++m) {
    const Eigen::VectorXd x = state.evaluate(2.0 * kPi * m / grid);
    rep.sup_norm = std::max(rep.sup_norm, x.norm());
    rep.sup_abs = std::max(rep.sup_abs, x.cwiseAbs().maxCoeff());
  }
  rep.nagumo_M = nl.nagumo_M(laplacian);
  rep.warning = rep.sup_norm >= rep.nagumo_M;
  if (rep.warning) {
    std::ostringstream os;
    os << "sup norm " << rep.sup_norm << " exceeds the Nagumo radius " << rep.nagumo_M
       << "; check the nonlinearity configuration";
    rep.message = os.str();
  }
  return rep;
}

ContinuationResult continue_in_lambda(const FourierState& start, const Eigen::MatrixXd& laplacian,
                                      const Nonlinearity& nl, const std::vector<double>& lambda_targets,
                                      const NewtonOptions& opts, const FrequencyLattice* freq) {
  ContinuationResult out;
  out.last_good_lambda = start.lambda;
  FourierState current = start;
  auto crosses = [&](double a, double b) {
    if (!freq) return false;
    const double lo = std::min(a, b), hi = std::max(a, b);
    for (const auto& p : freq->points)
      if (p.value > lo && p.value < hi) return true;
    if (!freq->entries.empty() && hi > freq->lambda_max) return true;
    return false;
  };
  auto attempt = [&](const FourierState& from, double lambda) -> std::optional<NewtonResult> {
    FourierState seed = from;
    seed.lambda = lambda;
    try {
      return newton_solve(seed, laplacian, nl, opts);
    } catch (const ValidationError&) {
      return std::nullopt;
    }
  };
  for (double target : lambda_targets) {
    ContinuationStep step;
    step.lambda = target;
    step.crossed_critical = crosses(current.lambda, target);
    auto res = attempt(current, target);
    if (!res) {
      const double mid = 0.5 * (current.lambda + target);
      auto half = attempt(current, mid);
      if (half) res = attempt(half->state, target);
      step.bisected = true;
    }
    if (!res) {
      out.complete = false;
      std::ostringstream os;
      os << "continuation failed at lambda = " << target << "; last good lambda = " << out.last_good_lambda;
      out.message = os.str();
      break;
    }
    step.state = res->state;
    step.iterations = res->iterations;
    step.residual_norm = res->residual_norm;
    current = res->state;
    out.last_good_lambda = target;
    out.steps.push_back(std::move(step));
  }
  return out;
}

}  // namespace equinet
