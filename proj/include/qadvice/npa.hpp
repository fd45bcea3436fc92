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

#ifndef QADVICE_NPA_HPP_
#define QADVICE_NPA_HPP_

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <complex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "qadvice/deviation.hpp"
#include "qadvice/errors.hpp"
#include "qadvice/game.hpp"
#include "qadvice/quantum.hpp"
#include "qadvice/sdp.hpp"

namespace qadvice {

// One projector of the level-1 operator set. The deviator contributes A_x^a
// (x, a in {0,1}); the other two players act as one party with joint input
// z = (x_j, x_k) and joint outcome b = (y_j, y_k), each encoded as 2*first +
// second.
struct OperatorLabel {
  enum class Side { kDeviator, kFixedPair };
  Side side = Side::kDeviator;
  int input = 0;
  int output = 0;

  std::string to_string() const {
    auto bits = [](int v) { return std::to_string(v >> 1) + std::to_string(v & 1); };
    if (side == Side::kDeviator) return "A[" + std::to_string(input) + "|" + std::to_string(output) + "]";
    return "P[" + bits(input) + "|" + bits(output) + "]";
  }
  friend bool operator==(const OperatorLabel&, const OperatorLabel&) = default;
};

// The 4 deviator labels followed by the 16 pair labels, both in
// lexicographic (input, output) order.
inline std::vector<OperatorLabel> default_operator_labels() {
  std::vector<OperatorLabel> labels;
  for (int x = 0; x < 2; ++x) {
    for (int a = 0; a < 2; ++a) labels.push_back({OperatorLabel::Side::kDeviator, x, a});
  }
  for (int z = 0; z < 4; ++z) {
    for (int b = 0; b < 4; ++b) labels.push_back({OperatorLabel::Side::kFixedPair, z, b});
  }
  return labels;
}

// constant + sum coefficient * y[variable].
struct AffineEntry {
  enum class Status { kFixed, kVariable, kDependent };
  Complex constant{0.0, 0.0};
  std::vector<std::pair<int, Complex>> terms;

  Status status() const {
    if (terms.empty()) return Status::kFixed;
    if (terms.size() == 1 && terms[0].second == Complex(1.0, 0.0) && constant == Complex(0.0, 0.0)) {
      return Status::kVariable;
    }
    return Status::kDependent;
  }
  AffineEntry conjugate() const {
    AffineEntry out{std::conj(constant), {}};
    for (const auto& [id, c] : terms) out.terms.push_back({id, std::conj(c)});
    return out;
  }
  Complex evaluate(const Eigen::VectorXd& y) const {
    Complex v = constant;
    for (const auto& [id, c] : terms) v += c * y(id);
    return v;
  }
};

// Gamma_ij = <psi| S_i S_j |psi> over the 20 labels, bordered by the
// identity in row and column 0 (21x21 working matrix).
struct MomentMatrix {
  std::vector<OperatorLabel> labels;
  std::vector<std::vector<AffineEntry>> cells;

  int dimension() const { return static_cast<int>(cells.size()); }
  const AffineEntry& entry(int row, int col) const { return cells[row][col]; }

  // The 20x20 block without the identity border.
  std::vector<std::vector<AffineEntry>> reported_block() const {
    std::vector<std::vector<AffineEntry>> out;
    for (int i = 1; i < dimension(); ++i) out.emplace_back(cells[i].begin() + 1, cells[i].end());
    return out;
  }

  Eigen::MatrixXcd evaluate(const Eigen::VectorXd& y) const {
    Eigen::MatrixXcd out(dimension(), dimension());
    for (int i = 0; i < dimension(); ++i) {
      for (int j = 0; j < dimension(); ++j) out(i, j) = cells[i][j].evaluate(y);
    }
    return out;
  }
};

struct NpaOptions {
  // Add A^2 = A and A^0 A^1 = 0 for the deviator. Off by default: the
  // relaxation then only assumes a POVM on the deviator's side.
  bool projective_deviator = false;
  // Require the deviator's entries to come from an ensemble of the pair's
  // reduced state: P(a, b|x, z) = Tr(sigma_{a|x} Pi_zb) with sigma_{a|x} >= 0
  // and sum_a sigma_{a|x} = rho_pair. This is no-signalling stated on the
  // pair's state rather than on its outcome statistics.
  bool pair_state_constraint = true;
  // Order in which the 20 labels appear (a permutation of 0..19 applied to
  // default_operator_labels()); empty keeps the default order.
  std::vector<int> label_order;
  SdpOptions solver;
};

struct DeviationSdp {
  int player = 0;
  std::array<int, 2> pair{};
  MomentMatrix gamma;
  SdpProblem problem;

  // Variable ids, kept for evaluation and tests.
  int p_var[2][2][4][4]{};
  int m_var[2][2]{};
  int d_var[2][2]{};
  int o_var[2]{};
  int cross_re[2][2]{};
  int cross_im[2][2]{};
  // Ensemble element sigma_{0|x} = U tau_x U^H on the support U of rho_pair,
  // stored as real parameters of the Hermitian tau_x (empty when disabled).
  std::vector<int> tau_var[2];
  Eigen::MatrixXcd pair_support;
};

namespace npa_detail {

inline Eigen::MatrixXcd embed(const QubitOperator& op, int target, int qubits) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (int p = 0; p < qubits; ++p) {
    const Eigen::MatrixXcd factor =
        p == target ? Eigen::MatrixXcd(op) : Eigen::MatrixXcd(Eigen::MatrixXcd::Identity(2, 2));
    Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index r = 0; r < out.rows(); ++r) {
      for (Eigen::Index c = 0; c < out.cols(); ++c) next.block(2 * r, 2 * c, 2, 2) = out(r, c) * factor;
    }
    out = next;
  }
  return out;
}

inline void require_supported(const Game& game, const QuantumStrategy& qs, int player) {
  if (game.player_count() != 3) {
    throw UnsupportedError("the moment-matrix bound needs exactly 3 players, game has " +
                           std::to_string(game.player_count()));
  }
  if (!game.all_binary()) throw UnsupportedError("the moment-matrix bound needs binary inputs and outputs");
  require_compatible(game, qs);
  if (qs.state().qubits() != 3) throw UnsupportedError("the moment-matrix bound needs one qubit per player");
  if (player < 0 || player >= 3) throw StructuralError("no player " + std::to_string(player));
}

inline std::array<int, 2> pair_of(int player) {
  std::array<int, 2> pair{};
  int k = 0;
  for (int p = 0; p < 3; ++p) {
    if (p != player) pair[k++] = p;
  }
  return pair;
}

// Vectors S|psi> for the identity followed by the 20 default labels, using
// the strategy's own operators for the deviator as well.
inline std::vector<Eigen::VectorXcd> honest_vectors(const QuantumStrategy& qs, int player) {
  const auto pair = pair_of(player);
  const Eigen::VectorXcd& psi = qs.state().amplitudes();
  std::vector<Eigen::VectorXcd> vectors{psi};
  for (int x = 0; x < 2; ++x) {
    for (int a = 0; a < 2; ++a) vectors.push_back(embed(qs.measurement(player, x).effect(a), player, 3) * psi);
  }
  for (int z = 0; z < 4; ++z) {
    for (int b = 0; b < 4; ++b) {
      const Eigen::MatrixXcd pj = embed(qs.measurement(pair[0], z >> 1).effect(b >> 1), pair[0], 3);
      const Eigen::MatrixXcd pk = embed(qs.measurement(pair[1], z & 1).effect(b & 1), pair[1], 3);
      vectors.push_back(pj * pk * psi);
    }
  }
  return vectors;
}

// Reduced state of the two non-deviating qubits, indexed 2*q_j + q_k.
inline Eigen::Matrix4cd pair_state(const QuantumStrategy& qs, int player) {
  const auto pair = pair_of(player);
  const MixedRadix radix(std::vector<int>(3, 2));
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  const Eigen::VectorXcd& psi = qs.state().amplitudes();
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t k = 0; k < 8; ++k) {
      if (radix.digit(i, player) != radix.digit(k, player)) continue;
      const int p = 2 * radix.digit(i, pair[0]) + radix.digit(i, pair[1]);
      const int q = 2 * radix.digit(k, pair[0]) + radix.digit(k, pair[1]);
      rho(p, q) += psi(static_cast<Eigen::Index>(i)) * std::conj(psi(static_cast<Eigen::Index>(k)));
    }
  }
  return rho;
}

inline Eigen::Matrix4cd pair_projector(const QuantumStrategy& qs, int player, int z, int b) {
  const auto pair = pair_of(player);
  const QubitOperator& bj = qs.measurement(pair[0], z >> 1).effect(b >> 1);
  const QubitOperator& ck = qs.measurement(pair[1], z & 1).effect(b & 1);
  Eigen::Matrix4cd out;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) out(r, c) = bj(r >> 1, c >> 1) * ck(r & 1, c & 1);
  }
  return out;
}

// Real parameters of an r x r Hermitian matrix: diagonal, then (Re, Im) of
// each upper entry in row-major order.
inline Eigen::MatrixXcd hermitian_basis(int r, int k) {
  Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(r, r);
  if (k < r) {
    e(k, k) = 1.0;
    return e;
  }
  k -= r;
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      if (k < 2) {
        const Complex v = k == 0 ? Complex(1.0, 0.0) : Complex(0.0, 1.0);
        e(i, j) = v;
        e(j, i) = std::conj(v);
        return e;
      }
      k -= 2;
    }
  }
  return e;
}

}  // namespace npa_detail

// Level-1 relaxation of one player's deviation problem. Entries between the
// two fixed players are computed from the state; entries involving the
// deviator are free, subject to normalization, no-signalling, completeness
// and positivity of the moment matrix.
inline DeviationSdp build_deviation_sdp(const Game& game, const QuantumStrategy& qs, int player,
                                        const NpaOptions& options = {}) {
  npa_detail::require_supported(game, qs, player);
  DeviationSdp out;
  out.player = player;
  out.pair = npa_detail::pair_of(player);
  SdpProblem& sdp = out.problem;

  auto bits = [](int v) { return std::to_string(v >> 1) + std::to_string(v & 1); };
  for (int x = 0; x < 2; ++x) {
    for (int a = 0; a < 2; ++a) {
      for (int z = 0; z < 4; ++z) {
        for (int b = 0; b < 4; ++b) {
          out.p_var[x][a][z][b] = sdp.add_variable("P(" + std::to_string(a) + "," + bits(b) + "|" +
                                                   std::to_string(x) + "," + bits(z) + ")");
        }
      }
    }
  }
  for (int x = 0; x < 2; ++x) {
    for (int a = 0; a < 2; ++a) {
      out.m_var[x][a] = sdp.add_variable("<A[" + std::to_string(x) + "|" + std::to_string(a) + "]>");
    }
  }
  for (int x = 0; x < 2; ++x) {
    for (int a = 0; a < 2; ++a) {
      out.d_var[x][a] = sdp.add_variable("<A[" + std::to_string(x) + "|" + std::to_string(a) + "]^2>");
    }
    out.o_var[x] = sdp.add_variable("<A[" + std::to_string(x) + "|0]A[" + std::to_string(x) + "|1]>");
  }
  for (int a = 0; a < 2; ++a) {
    for (int c = 0; c < 2; ++c) {
      const std::string name = "<A[0|" + std::to_string(a) + "]A[1|" + std::to_string(c) + "]>";
      out.cross_re[a][c] = sdp.add_variable("Re" + name);
      out.cross_im[a][c] = sdp.add_variable("Im" + name);
    }
  }

  // Fixed data from the two other players.
  const auto vectors = npa_detail::honest_vectors(qs, player);
  auto fixed = [&](int i, int j) { return vectors[i].dot(vectors[j]); };  // <v_i, v_j>

  // Default-order cells over identity + 20 labels.
  const int dim = 21;
  std::vector<std::vector<AffineEntry>> cells(dim, std::vector<AffineEntry>(dim));
  auto dev = [](int x, int a) { return 1 + 2 * x + a; };
  auto pr = [](int z, int b) { return 5 + 4 * z + b; };
  auto var = [](int id) { return AffineEntry{{0.0, 0.0}, {{id, {1.0, 0.0}}}}; };
  auto set = [&](int i, int j, const AffineEntry& e) {
    cells[i][j] = e;
    cells[j][i] = e.conjugate();
  };
  set(0, 0, AffineEntry{{1.0, 0.0}, {}});
  for (int x = 0; x < 2; ++x) {
    for (int a = 0; a < 2; ++a) {
      set(0, dev(x, a), var(out.m_var[x][a]));
      set(dev(x, a), dev(x, a), var(out.d_var[x][a]));
      for (int z = 0; z < 4; ++z) {
        for (int b = 0; b < 4; ++b) set(dev(x, a), pr(z, b), var(out.p_var[x][a][z][b]));
      }
    }
    set(dev(x, 0), dev(x, 1), var(out.o_var[x]));
  }
  for (int a = 0; a < 2; ++a) {
    for (int c = 0; c < 2; ++c) {
      set(dev(0, a), dev(1, c),
          AffineEntry{{0.0, 0.0}, {{out.cross_re[a][c], {1.0, 0.0}}, {out.cross_im[a][c], {0.0, 1.0}}}});
    }
  }
  for (int i = 5; i < dim; ++i) {
    set(0, i, AffineEntry{fixed(0, i), {}});
    for (int j = i; j < dim; ++j) set(i, j, AffineEntry{fixed(i, j), {}});
  }

  std::vector<int> identity(20);
  std::iota(identity.begin(), identity.end(), 0);
  const std::vector<int> order = options.label_order.empty() ? identity : options.label_order;
  if (!std::is_permutation(order.begin(), order.end(), identity.begin(), identity.end())) {
    throw DomainError("label_order must be a permutation of 0..19");
  }
  const auto labels = default_operator_labels();
  out.gamma.labels.clear();
  for (int k : order) out.gamma.labels.push_back(labels[k]);
  std::vector<int> rows{0};
  for (int k : order) rows.push_back(k + 1);
  out.gamma.cells.assign(dim, std::vector<AffineEntry>(dim));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) out.gamma.cells[i][j] = cells[rows[i]][rows[j]];
  }

  LmiBlock block{"Gamma", Eigen::MatrixXcd::Zero(dim, dim), {}};
  block.coefficients.assign(sdp.variable_count, Eigen::MatrixXcd::Zero(dim, dim));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const AffineEntry& e = out.gamma.cells[i][j];
      block.constant(i, j) = e.constant;
      for (const auto& [id, c] : e.terms) block.coefficients[id](i, j) += c;
    }
  }
  sdp.lmis.push_back(std::move(block));

  auto equality = [&](std::string name, std::vector<std::pair<int, double>> terms, double rhs) {
    LinearRow row = sdp.make_row(std::move(name));
    for (const auto& [id, c] : terms) row.coefficients(id) += c;
    row.offset = rhs;
    sdp.equalities.push_back(std::move(row));
  };
  for (int x = 0; x < 2; ++x) {
    const std::string xs = std::to_string(x);
    for (int z = 0; z < 4; ++z) {
      std::vector<std::pair<int, double>> all;
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 4; ++b) all.push_back({out.p_var[x][a][z][b], 1.0});
      }
      equality("normalization x=" + xs + " z=" + bits(z), all, 1.0);
      for (int b = 0; b < 4; ++b) {
        equality("pair marginal x=" + xs + " z=" + bits(z) + " b=" + bits(b),
                 {{out.p_var[x][0][z][b], 1.0}, {out.p_var[x][1][z][b], 1.0}}, fixed(0, pr(z, b)).real());
      }
      for (int a = 0; a < 2; ++a) {
        std::vector<std::pair<int, double>> terms{{out.m_var[x][a], -1.0}};
        for (int b = 0; b < 4; ++b) terms.push_back({out.p_var[x][a][z][b], 1.0});
        equality("deviator marginal x=" + xs + " a=" + std::to_string(a) + " z=" + bits(z), terms, 0.0);
      }
    }
    equality("deviator normalization x=" + xs, {{out.m_var[x][0], 1.0}, {out.m_var[x][1], 1.0}}, 1.0);
    // sum_a A_x^a = I applied against A_x^c.
    for (int c = 0; c < 2; ++c) {
      const int other = out.d_var[x][c];
      equality("completeness x=" + xs + " c=" + std::to_string(c),
               {{other, 1.0}, {out.o_var[x], 1.0}, {out.m_var[x][c], -1.0}}, 0.0);
    }
    if (options.projective_deviator) {
      for (int a = 0; a < 2; ++a) {
        equality("idempotent x=" + xs + " a=" + std::to_string(a),
                 {{out.d_var[x][a], 1.0}, {out.m_var[x][a], -1.0}}, 0.0);
      }
      equality("orthogonal x=" + xs, {{out.o_var[x], 1.0}}, 0.0);
    }
  }
  // Completeness across inputs: sum_a <A_0^a A_1^c> = <A_1^c>, and
  // sum_c <A_0^a A_1^c> = <A_0^a> (imaginary parts cancel).
  for (int c = 0; c < 2; ++c) {
    equality("cross completeness c=" + std::to_string(c),
             {{out.cross_re[0][c], 1.0}, {out.cross_re[1][c], 1.0}, {out.m_var[1][c], -1.0}}, 0.0);
    equality("cross completeness imag c=" + std::to_string(c),
             {{out.cross_im[0][c], 1.0}, {out.cross_im[1][c], 1.0}}, 0.0);
  }
  for (int a = 0; a < 2; ++a) {
    equality("cross completeness a=" + std::to_string(a),
             {{out.cross_re[a][0], 1.0}, {out.cross_re[a][1], 1.0}, {out.m_var[0][a], -1.0}}, 0.0);
    equality("cross completeness imag a=" + std::to_string(a),
             {{out.cross_im[a][0], 1.0}, {out.cross_im[a][1], 1.0}}, 0.0);
  }

  if (options.pair_state_constraint) {
    const Eigen::Matrix4cd rho = npa_detail::pair_state(qs, player);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig(rho);
    std::vector<Eigen::Index> kept;
    for (Eigen::Index k = 0; k < 4; ++k) {
      if (eig.eigenvalues()(k) > 1e-12) kept.push_back(k);
    }
    const int r = static_cast<int>(kept.size());
    out.pair_support = Eigen::MatrixXcd(4, r);
    for (int k = 0; k < r; ++k) out.pair_support.col(k) = eig.eigenvectors().col(kept[k]);
    const Eigen::MatrixXcd& u = out.pair_support;
    const Eigen::MatrixXcd reduced = u.adjoint() * rho * u;
    for (int x = 0; x < 2; ++x) {
      for (int k = 0; k < r * r; ++k) {
        out.tau_var[x].push_back(sdp.add_variable("tau" + std::to_string(x) + "[" + std::to_string(k) + "]"));
      }
      // tau_x >= 0 and reduced - tau_x >= 0.
      for (int a = 0; a < 2; ++a) {
        LmiBlock block{"ensemble x=" + std::to_string(x) + " a=" + std::to_string(a),
                       a == 0 ? Eigen::MatrixXcd::Zero(r, r) : reduced,
                       std::vector<Eigen::MatrixXcd>(sdp.variable_count, Eigen::MatrixXcd::Zero(r, r))};
        for (int k = 0; k < r * r; ++k) {
          block.coefficients[out.tau_var[x][k]] = (a == 0 ? 1.0 : -1.0) * npa_detail::hermitian_basis(r, k);
        }
        sdp.lmis.push_back(std::move(block));
      }
      for (int z = 0; z < 4; ++z) {
        for (int b = 0; b < 4; ++b) {
          const Eigen::MatrixXcd kz = u.adjoint() * npa_detail::pair_projector(qs, player, z, b) * u;
          LinearRow row = sdp.make_row("ensemble x=" + std::to_string(x) + " z=" + bits(z) + " b=" + bits(b));
          row.coefficients(out.p_var[x][0][z][b]) = 1.0;
          for (int k = 0; k < r * r; ++k) {
            row.coefficients(out.tau_var[x][k]) = -(npa_detail::hermitian_basis(r, k) * kz).trace().real();
          }
          sdp.equalities.push_back(std::move(row));
        }
      }
    }
  }

  for (int x = 0; x < 2; ++x) {
    for (int a = 0; a < 2; ++a) {
      for (int z = 0; z < 4; ++z) {
        for (int b = 0; b < 4; ++b) {
          LinearRow row = sdp.make_row(sdp.variable_names[out.p_var[x][a][z][b]] + " >= 0");
          row.coefficients(out.p_var[x][a][z][b]) = 1.0;
          sdp.inequalities.push_back(std::move(row));
        }
      }
      LinearRow row = sdp.make_row(sdp.variable_names[out.m_var[x][a]] + " >= 0");
      row.coefficients(out.m_var[x][a]) = 1.0;
      sdp.inequalities.push_back(std::move(row));
    }
  }

  // The deviator's average payoff.
  const MixedRadix& in = game.inputs();
  const MixedRadix& outr = game.outputs();
  for (std::size_t x : game.support()) {
    const double px = to_double(game.prior(x));
    const int xi = in.digit(x, player);
    const int z = 2 * in.digit(x, out.pair[0]) + in.digit(x, out.pair[1]);
    for (std::size_t y = 0; y < outr.size(); ++y) {
      const double pay = to_double(game.payoff(x, y, player));
      if (pay == 0.0) continue;
      const int a = outr.digit(y, player);
      const int b = 2 * outr.digit(y, out.pair[0]) + outr.digit(y, out.pair[1]);
      sdp.objective(out.p_var[xi][a][z][b]) += px * pay;
    }
  }
  return out;
}

// Variable values realized by the strategy itself, including the deviator's
// actual measurements. A feasible point of build_deviation_sdp.
inline Eigen::VectorXd honest_assignment(const DeviationSdp& built, const QuantumStrategy& qs) {
  const auto vectors = npa_detail::honest_vectors(qs, built.player);
  auto g = [&](int i, int j) { return vectors[i].dot(vectors[j]); };
  auto dev = [](int x, int a) { return 1 + 2 * x + a; };
  Eigen::VectorXd y = Eigen::VectorXd::Zero(built.problem.variable_count);
  for (int x = 0; x < 2; ++x) {
    for (int a = 0; a < 2; ++a) {
      y(built.m_var[x][a]) = g(0, dev(x, a)).real();
      y(built.d_var[x][a]) = g(dev(x, a), dev(x, a)).real();
      for (int z = 0; z < 4; ++z) {
        for (int b = 0; b < 4; ++b) y(built.p_var[x][a][z][b]) = g(dev(x, a), 5 + 4 * z + b).real();
      }
    }
    y(built.o_var[x]) = g(dev(x, 0), dev(x, 1)).real();
  }
  for (int a = 0; a < 2; ++a) {
    for (int c = 0; c < 2; ++c) {
      const Complex v = g(dev(0, a), dev(1, c));
      y(built.cross_re[a][c]) = v.real();
      y(built.cross_im[a][c]) = v.imag();
    }
  }
  if (!built.tau_var[0].empty()) {
    // sigma_{0|x} = Tr_dev[(A_x^0 (x) I) |psi><psi|], expressed on the support.
    const auto pair = npa_detail::pair_of(built.player);
    const MixedRadix radix(std::vector<int>(3, 2));
    const Eigen::VectorXcd& psi = qs.state().amplitudes();
    const Eigen::MatrixXcd& u = built.pair_support;
    const int r = static_cast<int>(u.cols());
    for (int x = 0; x < 2; ++x) {
      const QubitOperator& e0 = qs.measurement(built.player, x).effect(0);
      Eigen::Matrix4cd sigma = Eigen::Matrix4cd::Zero();
      for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t k = 0; k < 8; ++k) {
          const int p = 2 * radix.digit(i, pair[0]) + radix.digit(i, pair[1]);
          const int q = 2 * radix.digit(k, pair[0]) + radix.digit(k, pair[1]);
          sigma(p, q) += e0(radix.digit(k, built.player), radix.digit(i, built.player)) *
                         psi(static_cast<Eigen::Index>(i)) * std::conj(psi(static_cast<Eigen::Index>(k)));
        }
      }
      const Eigen::MatrixXcd tau = u.adjoint() * sigma * u;
      int k = 0;
      for (int d = 0; d < r; ++d) y(built.tau_var[x][k++]) = tau(d, d).real();
      for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
          y(built.tau_var[x][k++]) = tau(i, j).real();
          y(built.tau_var[x][k++]) = tau(i, j).imag();
        }
      }
    }
  }
  return y;
}

// Upper bound on one player's deviation payoff from the level-1 moment
// relaxation.
inline DeviationReport npa_deviation_bound(const Game& game, const QuantumStrategy& qs, int player,
                                           const NpaOptions& options = {}) {
  const DeviationSdp built = build_deviation_sdp(game, qs, player, options);
  const SdpSolution solution = solve_sdp(built.problem, options.solver);
  DeviationReport report;
  report.player = player;
  report.current_payoff = player_payoff(game, qs, player);
  report.best_response_value = solution.upper_bound;
  report.method = BoundMethod::kNpaSdp;
  report.solver = SolverDiagnostics{solution.iterations, solution.gap, solution.optimum};
  return report;
}

}  // namespace qadvice

#endif  // QADVICE_NPA_HPP_
