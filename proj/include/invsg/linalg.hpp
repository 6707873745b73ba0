// invsg - finite inverse semigroups and their restricted algebras
//
// Dense complex operators: spectral norm by power iteration and numerical rank
// by pivoted column reduction.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "error.hpp"

namespace invsg {

  // Row = output basis index, column = input basis index; the basis is the
  // delta functions in element order.
  using LinearOperator = Eigen::MatrixXcd;

  struct PowerIterationOptions {
    double      rel_tol        = 1e-12;
    std::size_t max_iterations = 100000;
    std::size_t stagnation     = 1000;  // iterations before the squaring restart
  };

  namespace detail {
    // Restart for a stagnating iteration (nearly equal top eigenvalues): v is
    // replaced by a^(2^k) v for k large enough that a^(2^k), rescaled, stops
    // changing, which leaves only the top eigenspace of a.
    template <typename Project>
    Eigen::VectorXcd squaring_restart(Eigen::MatrixXcd const& a, Eigen::VectorXcd const& v, Project const& project) {
      Eigen::MatrixXcd b = a;
      for (Eigen::Index j = 0; j < b.cols(); ++j) {
        Eigen::VectorXcd col = b.col(j);
        project(col);
        b.col(j) = col;
      }
      b = (b.adjoint() * 0.5 + b * 0.5).eval();
      for (int k = 0; k < 64; ++k) {
        Eigen::MatrixXcd next = b * b;
        next                  = (next + next.adjoint()) * 0.5;
        double const scale    = next.cwiseAbs().maxCoeff();
        if (scale == 0.0) {
          break;
        }
        next /= scale;
        double const change = (next - b).cwiseAbs().maxCoeff();
        b                   = std::move(next);
        if (change <= 1e-15) {
          break;
        }
      }
      Eigen::VectorXcd w = b * v;
      project(w);
      double const nw = w.norm();
      return nw == 0.0 ? v : Eigen::VectorXcd(w / nw);
    }

    // Largest eigenvalue of the Hermitian positive semidefinite a, restricted
    // to the orthogonal complement of the unit vector `deflate` when given.
    inline double power_iteration(Eigen::MatrixXcd const&        a,
                                  Eigen::VectorXcd               v,
                                  Eigen::VectorXcd const*        deflate,
                                  PowerIterationOptions const&   options,
                                  Eigen::VectorXcd*              eigenvector) {
      // eigenvalues far below the trace are resolved to an absolute accuracy
      // only, otherwise rounding noise never settles
      double const trace = std::abs(a.trace().real());
      double const floor = 1e-4 * trace;
      auto const project = [deflate](Eigen::VectorXcd& w) {
        if (deflate != nullptr) {
          w -= deflate->dot(w) * *deflate;
        }
      };
      project(v);
      double nv = v.norm();
      if (nv == 0.0) {
        return 0.0;
      }
      v /= nv;
      double      rho = 0.0, last_change = 0.0;
      std::size_t fresh     = 0;  // iterations since the last (re)start
      bool        restarted = false;
      auto        restart   = [&] {
        v           = squaring_restart(a, v, project);
        restarted   = true;
        fresh       = 0;
        last_change = 0.0;
      };
      for (std::size_t it = 0; it < options.max_iterations; ++it, ++fresh) {
        Eigen::VectorXcd w = a * v;
        project(w);
        double const next = v.dot(w).real();
        double const nw   = w.norm();
        if (nw == 0.0) {
          // start vector lies in the kernel
          if (eigenvector != nullptr) {
            *eigenvector = v;
          }
          return 0.0;
        }
        v = w / nw;
        double const scale  = std::max(std::abs(next), floor);
        double const change = std::abs(next - rho);
        // remaining geometric tail from the contraction rate; no apparent
        // contraction means the estimate is not trustworthy yet
        double const rate = last_change > 0.0 ? change / last_change : (change == 0.0 ? 0.0 : 1.0);
        double const tail = rate < 1.0 ? change * std::max(1.0, rate / (1.0 - rate))
                                       : std::numeric_limits<double>::infinity();
        last_change       = fresh > 0 ? change : 0.0;
        rho               = next;
        if (fresh < 2) {
          continue;
        }
        // rounding noise is relative to the whole matrix, not the current estimate
        bool const at_noise = change <= 64.0 * std::numeric_limits<double>::epsilon() * trace;
        if (tail <= options.rel_tol * scale || at_noise) {
          // a tight cluster also looks converged; one restart separates it
          if (at_noise && !restarted) {
            restart();
            continue;
          }
          if (eigenvector != nullptr) {
            *eigenvector = v;
          }
          return std::max(next, 0.0);
        }
        if (fresh + 1 == options.stagnation) {
          restart();
        }
      }
      throw Error(ErrorKind::no_convergence,
                  "power iteration did not converge in " + std::to_string(options.max_iterations) + " iterations");
    }
  }  // namespace detail

  // Largest singular value. Power iteration on M*M from the normalized
  // all-ones vector, then a second pass deflated against the first
  // eigenvector from a fixed quasi-random start; the larger value wins. The
  // second pass recovers the top eigenvalue when the all-ones start is
  // orthogonal to its eigenspace.
  inline double op_norm(LinearOperator const& m, PowerIterationOptions const& options = {}) {
    if (m.size() == 0) {
      return 0.0;
    }
    if (!m.allFinite()) {
      throw Error(ErrorKind::invalid_argument, "operator has non-finite entries");
    }
    Eigen::MatrixXcd const a   = m.adjoint() * m;
    auto const             dim = a.rows();
    if (a.cwiseAbs().maxCoeff() == 0.0) {
      return 0.0;
    }
    Eigen::VectorXcd first;
    double const     rho1
        = detail::power_iteration(a, Eigen::VectorXcd::Ones(dim), nullptr, options, &first);
    Eigen::VectorXcd start(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      // golden-ratio phases
      double const phase = 2.0 * std::numbers::pi * std::fmod(0.6180339887498949 * static_cast<double>(i + 1), 1.0);
      start(i)           = std::polar(1.0 + 0.5 * std::sin(static_cast<double>(i) + 0.5), phase);
    }
    double rho2 = 0.0;
    if (dim > 1) {
      Eigen::VectorXcd unit = first.normalized();
      rho2                  = detail::power_iteration(a, start, &unit, options, nullptr);
    }
    return std::sqrt(std::max(rho1, rho2));
  }

  // Orthonormal basis of the column span, found by modified Gram-Schmidt with
  // largest-remaining-norm pivoting. Columns whose residual falls below
  // rel_tol times the largest original column norm are dropped.
  inline Eigen::MatrixXcd column_basis(Eigen::MatrixXcd columns, double rel_tol = 1e-9) {
    auto const          cols = columns.cols();
    std::vector<char>   used(static_cast<std::size_t>(cols), 0);
    double              scale = 0.0;
    for (Eigen::Index j = 0; j < cols; ++j) {
      scale = std::max(scale, columns.col(j).norm());
    }
    std::vector<Eigen::VectorXcd> basis;
    if (scale == 0.0) {
      return Eigen::MatrixXcd(columns.rows(), 0);
    }
    while (true) {
      Eigen::Index best = -1;
      double       best_norm = 0.0;
      for (Eigen::Index j = 0; j < cols; ++j) {
        if (!used[static_cast<std::size_t>(j)]) {
          double const nj = columns.col(j).norm();
          if (nj > best_norm) {
            best_norm = nj;
            best      = j;
          }
        }
      }
      if (best < 0 || best_norm <= rel_tol * scale) {
        break;
      }
      used[static_cast<std::size_t>(best)] = 1;
      Eigen::VectorXcd q = columns.col(best) / best_norm;
      // second orthogonalization pass
      for (auto const& b : basis) {
        q -= b.dot(q) * b;
      }
      q.normalize();
      for (Eigen::Index j = 0; j < cols; ++j) {
        if (!used[static_cast<std::size_t>(j)]) {
          columns.col(j) -= q.dot(columns.col(j)) * q;
        }
      }
      basis.push_back(std::move(q));
    }
    Eigen::MatrixXcd out(columns.rows(), static_cast<Eigen::Index>(basis.size()));
    for (std::size_t k = 0; k < basis.size(); ++k) {
      out.col(static_cast<Eigen::Index>(k)) = basis[k];
    }
    return out;
  }

  inline std::size_t numeric_rank(Eigen::MatrixXcd const& columns, double rel_tol = 1e-9) {
    return static_cast<std::size_t>(column_basis(columns, rel_tol).cols());
  }

  // Column-major flattening of a square operator.
  inline Eigen::VectorXcd vectorize(LinearOperator const& m) {
    return Eigen::Map<Eigen::VectorXcd const>(m.data(), m.size());
  }

  inline bool is_partial_isometry(LinearOperator const& m, double tol = 0.0) {
    return ((m * m.adjoint() * m) - m).cwiseAbs().maxCoeff() <= tol;
  }

}  // namespace invsg
