// Copyright 2026 The qadvice Authors
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

#ifndef QADVICE_SDP_HPP_
#define QADVICE_SDP_HPP_

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qadvice/errors.hpp"

namespace qadvice {

// F0 + sum_k y_k F_k >= 0 with Hermitian F's. `coefficients` has one
// matrix per decision variable.
struct LmiBlock {
  std::string name;
  Eigen::MatrixXcd constant;
  std::vector<Eigen::MatrixXcd> coefficients;
};

// coefficients . y == offset (equalities) or coefficients . y + offset >= 0
// (inequalities).
struct LinearRow {
  std::string name;
  Eigen::VectorXd coefficients;
  double offset = 0.0;
};

// maximize objective . y + objective_constant over real y subject to the
// LMIs and linear rows.
struct SdpProblem {
  int variable_count = 0;
  std::vector<std::string> variable_names;
  Eigen::VectorXd objective;
  double objective_constant = 0.0;
  std::vector<LmiBlock> lmis;
  std::vector<LinearRow> equalities;
  std::vector<LinearRow> inequalities;

  int add_variable(std::string name) {
    variable_names.push_back(std::move(name));
    ++variable_count;
    for (auto& block : lmis) {
      block.coefficients.push_back(Eigen::MatrixXcd::Zero(block.constant.rows(), block.constant.cols()));
    }
    Eigen::VectorXd grown = Eigen::VectorXd::Zero(variable_count);
    if (objective.size() > 0) grown.head(objective.size()) = objective;
    objective = grown;
    for (auto& row : equalities) row.coefficients.conservativeResizeLike(Eigen::VectorXd::Zero(variable_count));
    for (auto& row : inequalities) row.coefficients.conservativeResizeLike(Eigen::VectorXd::Zero(variable_count));
    return variable_count - 1;
  }

  LinearRow make_row(std::string name) const {
    return LinearRow{std::move(name), Eigen::VectorXd::Zero(variable_count), 0.0};
  }

  // Value of block `b` at y.
  Eigen::MatrixXcd lmi_value(std::size_t b, const Eigen::VectorXd& y) const {
    Eigen::MatrixXcd out = lmis[b].constant;
    for (int k = 0; k < variable_count; ++k) {
      if (y(k) != 0.0) out += y(k) * lmis[b].coefficients[k];
    }
    return out;
  }
};

struct SdpOptions {
  double tolerance = 1e-7;
  int max_iterations = 200;
};

struct SdpSolution {
  // Objective at the final dual-feasible point (attained value).
  double optimum = 0.0;
  // Primal objective: an upper bound on the maximum once residuals vanish.
  double upper_bound = 0.0;
  double gap = 0.0;
  int iterations = 0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  Eigen::VectorXd variables;
  // Total real dimension of the PSD cone after reduction.
  int reduced_dimension = 0;
};

namespace sdp_detail {

using Blocks = std::vector<Eigen::MatrixXd>;

inline double inner(const Blocks& a, const Blocks& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i].cwiseProduct(b[i]).sum();
  return s;
}

inline double norm(const Blocks& a) { return std::sqrt(inner(a, a)); }

inline Blocks scaled_identity(const Blocks& shape, double v) {
  Blocks out;
  for (const auto& b : shape) out.push_back(v * Eigen::MatrixXd::Identity(b.rows(), b.cols()));
  return out;
}

// Largest step alpha with x + alpha d still positive semidefinite.
inline double max_step(const Blocks& x, const Blocks& d) {
  double alpha = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].rows() == 1) {
      if (d[i](0, 0) < 0) alpha = std::min(alpha, -x[i](0, 0) / d[i](0, 0));
      continue;
    }
    Eigen::LLT<Eigen::MatrixXd> llt(x[i]);
    const Eigen::MatrixXd l = llt.matrixL();
    const Eigen::MatrixXd linv = l.triangularView<Eigen::Lower>().solve(
        Eigen::MatrixXd::Identity(l.rows(), l.cols()));
    Eigen::MatrixXd m = linv * d[i] * linv.transpose();
    m = 0.5 * (m + m.transpose());
    const double lo = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m, Eigen::EigenvaluesOnly)
                          .eigenvalues()
                          .minCoeff();
    if (lo < 0) alpha = std::min(alpha, -1.0 / lo);
  }
  return alpha;
}

inline Eigen::MatrixXd real_embedding(const Eigen::MatrixXcd& h) {
  const Eigen::Index n = h.rows();
  Eigen::MatrixXd out(2 * n, 2 * n);
  out.topLeftCorner(n, n) = h.real();
  out.topRightCorner(n, n) = -h.imag();
  out.bottomLeftCorner(n, n) = h.imag();
  out.bottomRightCorner(n, n) = h.real();
  return 0.5 * (out + out.transpose());
}

// Real standard form: max b.t s.t. S = C - sum_j t_j A_j >= 0.
struct StandardForm {
  Blocks c;
  std::vector<Blocks> a;
  Eigen::VectorXd b;
};

// Equality elimination y = y0 + N t.
struct Parametrization {
  Eigen::VectorXd y0;
  Eigen::MatrixXd n;
  int rank = 0;
};

inline Parametrization parametrize(const Eigen::MatrixXd& e, const Eigen::VectorXd& rhs, int m,
                                   const std::vector<std::string>& names) {
  Parametrization p;
  if (e.rows() == 0) {
    p.y0 = Eigen::VectorXd::Zero(m);
    p.n = Eigen::MatrixXd::Identity(m, m);
    return p;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(e, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = 1e-9 * std::max(1.0, sv.size() ? sv(0) : 0.0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) ++rank;
  }
  Eigen::VectorXd y0 = Eigen::VectorXd::Zero(m);
  for (int i = 0; i < rank; ++i) y0 += svd.matrixV().col(i) * (svd.matrixU().col(i).dot(rhs) / sv(i));
  const Eigen::VectorXd residual = e * y0 - rhs;
  Eigen::Index worst = 0;
  const double worst_value = residual.cwiseAbs().maxCoeff(&worst);
  if (worst_value > 1e-8 * (1.0 + rhs.cwiseAbs().maxCoeff())) {
    throw InfeasibleError("equality constraint '" + names[worst] + "' cannot be satisfied (residual " +
                              std::to_string(worst_value) + ")",
                          worst_value);
  }
  p.y0 = y0;
  p.n = svd.matrixV().rightCols(m - rank);
  p.rank = rank;
  return p;
}

}  // namespace sdp_detail

// Dense primal-dual interior point solver (HKM direction, Mehrotra
// predictor-corrector, infeasible start).
//
// Before iterating, equalities are eliminated and every LMI is restricted to
// its minimal face: when a principal block is fully fixed and singular, the
// null vectors must annihilate the whole matrix, which adds equalities; the
// common kernel of all coefficient matrices is then projected out. Fixed
// data blocks built from low-rank states are singular, so without this step
// the problem would have no interior.
inline SdpSolution solve_sdp(const SdpProblem& problem, const SdpOptions& options = {}) {
  using namespace sdp_detail;
  const int m = problem.variable_count;
  constexpr double kZero = 1e-12;
  constexpr double kNull = 1e-9;
  // Eigenvalues of fixed blocks below this (relative) are treated as exact
  // zeros. Fixed moment blocks can carry genuine eigenvalues near 1e-10, so
  // this sits just above roundoff rather than at kNull.
  constexpr double kFace = 1e-13;

  // Collect equalities.
  std::vector<Eigen::VectorXd> eq_rows;
  std::vector<double> eq_rhs;
  std::vector<std::string> eq_names;
  for (const auto& row : problem.equalities) {
    eq_rows.push_back(row.coefficients);
    eq_rhs.push_back(row.offset);
    eq_names.push_back(row.name);
  }
  auto stack = [&](Eigen::MatrixXd& e, Eigen::VectorXd& r) {
    e.resize(static_cast<Eigen::Index>(eq_rows.size()), m);
    r.resize(static_cast<Eigen::Index>(eq_rows.size()));
    for (std::size_t i = 0; i < eq_rows.size(); ++i) {
      e.row(static_cast<Eigen::Index>(i)) = eq_rows[i].transpose();
      r(static_cast<Eigen::Index>(i)) = eq_rhs[i];
    }
  };

  Parametrization param;
  for (int round = 0;; ++round) {
    Eigen::MatrixXd e;
    Eigen::VectorXd r;
    stack(e, r);
    param = parametrize(e, r, m, eq_names);
    if (round >= 8) break;
    bool added = false;
    for (std::size_t bi = 0; bi < problem.lmis.size(); ++bi) {
      const auto& block = problem.lmis[bi];
      const Eigen::Index dim = block.constant.rows();
      Eigen::MatrixXcd g0 = problem.lmi_value(bi, param.y0);
      std::vector<Eigen::MatrixXcd> g(param.n.cols(), Eigen::MatrixXcd::Zero(dim, dim));
      for (Eigen::Index j = 0; j < param.n.cols(); ++j) {
        for (int k = 0; k < m; ++k) {
          if (std::abs(param.n(k, j)) > kZero) g[j] += param.n(k, j) * block.coefficients[k];
        }
      }
      // Indices whose diagonal never moves, pruned until the principal block
      // they span is entirely fixed.
      std::vector<Eigen::Index> fixed;
      for (Eigen::Index i = 0; i < dim; ++i) {
        bool moves = false;
        for (const auto& gj : g) moves = moves || std::abs(gj(i, i)) > kZero;
        if (!moves) fixed.push_back(i);
      }
      for (;;) {
        std::vector<int> conflicts(fixed.size(), 0);
        int worst = -1;
        for (std::size_t a = 0; a < fixed.size(); ++a) {
          for (std::size_t b = 0; b < fixed.size(); ++b) {
            for (const auto& gj : g) {
              if (std::abs(gj(fixed[a], fixed[b])) > kZero) {
                ++conflicts[a];
                break;
              }
            }
          }
          if (conflicts[a] > 0 && (worst < 0 || conflicts[a] > conflicts[worst])) worst = static_cast<int>(a);
        }
        if (worst < 0) break;
        fixed.erase(fixed.begin() + worst);
      }
      if (fixed.empty()) continue;
      const Eigen::Index f = static_cast<Eigen::Index>(fixed.size());
      Eigen::MatrixXcd sub(f, f);
      for (Eigen::Index a = 0; a < f; ++a) {
        for (Eigen::Index b = 0; b < f; ++b) sub(a, b) = g0(fixed[a], fixed[b]);
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(0.5 * (sub + sub.adjoint()));
      const double scale = std::max(1.0, eig.eigenvalues().cwiseAbs().maxCoeff());
      if (eig.eigenvalues()(0) < -1e-8 * scale) {
        throw InfeasibleError("fixed part of block '" + block.name +
                                  "' is not positive semidefinite (eigenvalue " +
                                  std::to_string(eig.eigenvalues()(0)) + ")",
                              -eig.eigenvalues()(0));
      }
      for (Eigen::Index k = 0; k < f; ++k) {
        if (eig.eigenvalues()(k) > kFace * scale) break;
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
        for (Eigen::Index a = 0; a < f; ++a) v(fixed[a]) = eig.eigenvectors()(a, k);
        // (F0 + sum y_k F_k) v = 0, split into real and imaginary rows.
        const Eigen::VectorXcd base = block.constant * v;
        std::vector<Eigen::VectorXcd> cols;
        for (int q = 0; q < m; ++q) cols.push_back(block.coefficients[q] * v);
        for (Eigen::Index row = 0; row < dim; ++row) {
          for (int part = 0; part < 2; ++part) {
            Eigen::VectorXd coeff(m);
            for (int q = 0; q < m; ++q) coeff(q) = part ? cols[q](row).imag() : cols[q](row).real();
            const double rhs = -(part ? base(row).imag() : base(row).real());
            if (coeff.cwiseAbs().maxCoeff() <= kZero && std::abs(rhs) <= kZero) continue;
            // Keep the row only if it is not already implied.
            const Eigen::VectorXd projected = param.n.transpose() * coeff;
            if (projected.size() > 0 && projected.cwiseAbs().maxCoeff() <= kNull) {
              continue;
            }
            if (projected.size() == 0) continue;
            eq_rows.push_back(coeff);
            eq_rhs.push_back(rhs);
            eq_names.push_back("kernel of fixed part of " + block.name);
            added = true;
          }
        }
      }
    }
    if (!added) break;
  }

  const Eigen::Index free_count = param.n.cols();

  // Reduced complex blocks Q^H G Q and their real embeddings.
  StandardForm sf;
  sf.a.assign(free_count, {});
  sf.b = param.n.transpose() * problem.objective;
  const double constant = problem.objective_constant + problem.objective.dot(param.y0);
  int reduced_dimension = 0;
  for (std::size_t bi = 0; bi < problem.lmis.size(); ++bi) {
    const auto& block = problem.lmis[bi];
    const Eigen::Index dim = block.constant.rows();
    const Eigen::MatrixXcd g0 = problem.lmi_value(bi, param.y0);
    std::vector<Eigen::MatrixXcd> g(free_count, Eigen::MatrixXcd::Zero(dim, dim));
    for (Eigen::Index j = 0; j < free_count; ++j) {
      for (int k = 0; k < m; ++k) {
        if (std::abs(param.n(k, j)) > kZero) g[j] += param.n(k, j) * block.coefficients[k];
      }
    }
    Eigen::MatrixXcd tall((free_count + 1) * dim, dim);
    tall.topRows(dim) = g0;
    for (Eigen::Index j = 0; j < free_count; ++j) tall.middleRows((j + 1) * dim, dim) = g[j];
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(tall, Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double cutoff = kFace * std::max(1.0, sv.size() ? sv(0) : 0.0);
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
      if (sv(i) > cutoff) ++rank;
    }
    if (rank == 0) continue;
    const Eigen::MatrixXcd q = svd.matrixV().leftCols(rank);
    sf.c.push_back(real_embedding(q.adjoint() * g0 * q));
    for (Eigen::Index j = 0; j < free_count; ++j) sf.a[j].push_back(-real_embedding(q.adjoint() * g[j] * q));
    reduced_dimension += static_cast<int>(2 * rank);
  }
  for (const auto& row : problem.inequalities) {
    const Eigen::VectorXd coeff = param.n.transpose() * row.coefficients;
    const double offset = row.offset + row.coefficients.dot(param.y0);
    if (coeff.size() == 0 || coeff.cwiseAbs().maxCoeff() <= kNull) {
      if (offset < -1e-8) {
        throw InfeasibleError("inequality '" + row.name + "' is violated by every feasible point (value " +
                                  std::to_string(offset) + ")",
                              -offset);
      }
      continue;
    }
    sf.c.push_back(Eigen::MatrixXd::Constant(1, 1, offset));
    for (Eigen::Index j = 0; j < free_count; ++j) sf.a[j].push_back(Eigen::MatrixXd::Constant(1, 1, -coeff(j)));
    reduced_dimension += 1;
  }

  SdpSolution solution;
  solution.reduced_dimension = reduced_dimension;

  if (free_count == 0 || sf.c.empty()) {
    // Nothing to optimize: feasibility of the fixed point decides.
    for (std::size_t i = 0; i < sf.c.size(); ++i) {
      const double lo = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(sf.c[i], Eigen::EigenvaluesOnly)
                            .eigenvalues()
                            .minCoeff();
      if (lo < -1e-8) {
        throw InfeasibleError("the only candidate point violates the PSD constraint (eigenvalue " +
                                  std::to_string(lo) + ")",
                              -lo);
      }
    }
    if (free_count > 0 && sf.b.cwiseAbs().maxCoeff() > kNull) {
      throw SolverError("objective is unbounded: no constraint restricts the free variables",
                        std::numeric_limits<double>::infinity());
    }
    solution.optimum = solution.upper_bound = constant;
    solution.variables = param.y0;
    return solution;
  }

  const Eigen::Index nvar = free_count;
  double n_total = 0;
  for (const auto& c : sf.c) n_total += static_cast<double>(c.rows());

  // Starting point (SDPT3-style scaling).
  double max_a = 0.0, ratio = 0.0;
  for (Eigen::Index j = 0; j < nvar; ++j) {
    const double aj = norm(sf.a[j]);
    max_a = std::max(max_a, aj);
    ratio = std::max(ratio, (1.0 + std::abs(sf.b(j))) / (1.0 + aj));
  }
  const double xi = std::max({10.0, std::sqrt(n_total), n_total * ratio});
  const double eta = std::max({10.0, std::sqrt(n_total), max_a, norm(sf.c)});
  Blocks x = scaled_identity(sf.c, xi);
  Blocks s = scaled_identity(sf.c, eta);
  Eigen::VectorXd t = Eigen::VectorXd::Zero(nvar);

  auto apply_a = [&](const Blocks& mat) {
    Eigen::VectorXd out(nvar);
    for (Eigen::Index j = 0; j < nvar; ++j) out(j) = inner(sf.a[j], mat);
    return out;
  };
  auto apply_at = [&](const Eigen::VectorXd& v) {
    Blocks out = scaled_identity(sf.c, 0.0);
    for (Eigen::Index j = 0; j < nvar; ++j) {
      if (v(j) == 0.0) continue;
      for (std::size_t i = 0; i < out.size(); ++i) out[i] += v(j) * sf.a[j][i];
    }
    return out;
  };
  const double b_norm = sf.b.norm();
  const double c_norm = norm(sf.c);

  double best_upper = std::numeric_limits<double>::infinity();
  for (int it = 0; it < options.max_iterations; ++it) {
    Eigen::VectorXd rp = sf.b - apply_a(x);
    Blocks rd = sf.c;
    {
      const Blocks ats = apply_at(t);
      for (std::size_t i = 0; i < rd.size(); ++i) rd[i] -= s[i] + ats[i];
    }
    const double pobj = inner(sf.c, x);
    const double dobj = sf.b.dot(t);
    const double xs = inner(x, s);
    const double rel_p = rp.norm() / (1.0 + b_norm);
    const double rel_d = norm(rd) / (1.0 + c_norm);
    solution.iterations = it;
    solution.primal_residual = rel_p;
    solution.dual_residual = rel_d;
    solution.gap = std::abs(pobj - dobj);
    solution.optimum = dobj + constant;
    solution.upper_bound = pobj + constant;
    if (rel_p < 1e-8) best_upper = std::min(best_upper, pobj + constant);
    if (rel_p <= options.tolerance && rel_d <= options.tolerance && solution.gap <= options.tolerance &&
        xs <= options.tolerance) {
      solution.variables = param.y0 + param.n * t;
      return solution;
    }

    Blocks sinv;
    for (const auto& si : s) sinv.push_back(si.llt().solve(Eigen::MatrixXd::Identity(si.rows(), si.cols())));

    // Schur complement M_ij = tr(A_i X A_j S^-1).
    std::vector<Blocks> xas(nvar);
    for (Eigen::Index j = 0; j < nvar; ++j) {
      for (std::size_t i = 0; i < x.size(); ++i) xas[j].push_back(x[i] * sf.a[j][i] * sinv[i]);
    }
    Eigen::MatrixXd schur(nvar, nvar);
    for (Eigen::Index i = 0; i < nvar; ++i) {
      for (Eigen::Index j = i; j < nvar; ++j) {
        schur(i, j) = schur(j, i) = 0.5 * (inner(sf.a[i], xas[j]) + inner(sf.a[j], xas[i]));
      }
    }
    // Near the optimum M is singular up to roundoff; a relative diagonal shift
    // far below the tolerance keeps the factorization usable.
    Eigen::LDLT<Eigen::MatrixXd> ldlt(schur);
    const double diag_scale = std::max(1.0, schur.diagonal().cwiseAbs().maxCoeff());
    for (double shift : {1e-14, 1e-12, 1e-10}) {
      if (ldlt.info() == Eigen::Success && ldlt.isPositive()) break;
      ldlt.compute(schur + shift * diag_scale * Eigen::MatrixXd::Identity(nvar, nvar));
    }
    if (ldlt.info() != Eigen::Success || !ldlt.isPositive()) {
      throw SolverError("Schur complement factorization failed", best_upper);
    }

    Blocks x_rd_sinv;
    for (std::size_t i = 0; i < x.size(); ++i) x_rd_sinv.push_back(x[i] * rd[i] * sinv[i]);
    const Eigen::VectorXd a_x_rd_sinv = apply_a(x_rd_sinv);

    auto direction = [&](const Blocks& r, Blocks& dx, Blocks& ds, Eigen::VectorXd& dt) {
      dt = ldlt.solve(rp - apply_a(r) + a_x_rd_sinv);
      const Blocks atdt = apply_at(dt);
      ds.clear();
      dx.clear();
      for (std::size_t i = 0; i < x.size(); ++i) {
        ds.push_back(rd[i] - atdt[i]);
        Eigen::MatrixXd d = r[i] - x[i] * ds[i] * sinv[i];
        dx.push_back(0.5 * (d + d.transpose()));
      }
    };

    const double mu = xs / n_total;
    Blocks r = x;
    for (auto& ri : r) ri = -ri;
    Blocks dx_a, ds_a;
    Eigen::VectorXd dt_a;
    direction(r, dx_a, ds_a, dt_a);
    const double ap = std::min(1.0, max_step(x, dx_a));
    const double ad = std::min(1.0, max_step(s, ds_a));
    double mu_aff = 0.0;
    {
      Blocks xa = x, sa = s;
      for (std::size_t i = 0; i < x.size(); ++i) {
        xa[i] += ap * dx_a[i];
        sa[i] += ad * ds_a[i];
      }
      mu_aff = inner(xa, sa) / n_total;
    }
    const double sigma = std::clamp(std::pow(mu_aff / mu, 3.0), 0.0, 1.0);

    for (std::size_t i = 0; i < x.size(); ++i) {
      r[i] = sigma * mu * sinv[i] - x[i] - dx_a[i] * ds_a[i] * sinv[i];
    }
    Blocks dx, ds;
    Eigen::VectorXd dt;
    direction(r, dx, ds, dt);
    const double step_p = std::min(1.0, 0.95 * max_step(x, dx));
    const double step_d = std::min(1.0, 0.95 * max_step(s, ds));
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] += step_p * dx[i];
      s[i] += step_d * ds[i];
      x[i] = 0.5 * (x[i] + x[i].transpose());
      s[i] = 0.5 * (s[i] + s[i].transpose());
    }
    t += step_d * dt;

    if (!std::isfinite(t.norm()) || norm(x) > 1e14) {
      throw InfeasibleError("iterates diverged; LMI residual " + std::to_string(rel_d), rel_d);
    }
  }
  if (solution.dual_residual > 1e-4) {
    std::ostringstream msg;
    msg << "no feasible point found: LMI residual " << solution.dual_residual << " after "
        << options.max_iterations << " iterations";
    throw InfeasibleError(msg.str(), solution.dual_residual);
  }
  std::ostringstream msg;
  msg << "interior point method did not converge in " << options.max_iterations
      << " iterations (gap " << solution.gap << ", best bound " << best_upper << ")";
  throw SolverError(msg.str(), best_upper);
}

// Plain-text dump for cross-checking with other solvers. One record per line:
//   variables <m>
//   var <id> <name>
//   objective <constant>
//   obj <id> <coefficient>
//   block <index> <dim> <name>
//   entry <block> <var|-1> <row> <col> <re> <im>   (upper triangle; -1 = constant)
//   eq <offset> <count> (<id> <coefficient>)*      coefficients . y == offset
//   ineq <offset> <count> (<id> <coefficient>)*    coefficients . y + offset >= 0
// Doubles are written with 17 significant digits.
inline void write_sdp_text(std::ostream& os, const SdpProblem& problem) {
  const auto old_precision = os.precision(17);
  os << "variables " << problem.variable_count << "\n";
  for (int k = 0; k < problem.variable_count; ++k) os << "var " << k << " " << problem.variable_names[k] << "\n";
  os << "objective " << problem.objective_constant << "\n";
  for (int k = 0; k < problem.variable_count; ++k) {
    if (problem.objective(k) != 0.0) os << "obj " << k << " " << problem.objective(k) << "\n";
  }
  for (std::size_t b = 0; b < problem.lmis.size(); ++b) {
    const auto& block = problem.lmis[b];
    os << "block " << b << " " << block.constant.rows() << " " << block.name << "\n";
    auto dump = [&](int id, const Eigen::MatrixXcd& mat) {
      for (Eigen::Index i = 0; i < mat.rows(); ++i) {
        for (Eigen::Index j = i; j < mat.cols(); ++j) {
          if (mat(i, j) == std::complex<double>(0.0, 0.0)) continue;
          os << "entry " << b << " " << id << " " << i << " " << j << " " << mat(i, j).real() << " "
             << mat(i, j).imag() << "\n";
        }
      }
    };
    dump(-1, block.constant);
    for (int k = 0; k < problem.variable_count; ++k) dump(k, block.coefficients[k]);
  }
  auto rows = [&](const char* tag, const std::vector<LinearRow>& list) {
    for (const auto& row : list) {
      int count = 0;
      for (int k = 0; k < problem.variable_count; ++k) count += row.coefficients(k) != 0.0;
      os << tag << " " << row.offset << " " << count;
      for (int k = 0; k < problem.variable_count; ++k) {
        if (row.coefficients(k) != 0.0) os << " " << k << " " << row.coefficients(k);
      }
      os << "\n";
    }
  };
  rows("eq", problem.equalities);
  rows("ineq", problem.inequalities);
  os.precision(old_precision);
}

}  // namespace qadvice

#endif  // QADVICE_SDP_HPP_
