// invsg - finite inverse semigroups and their restricted algebras
//
// C*-norms at finite scale. For finite S the lift of lambda_r is a faithful
// *-representation of l^1_r(S) onto a finite-dimensional C*-algebra, so every
// restricted representation is contractive for the lambda_r operator norm and
// the full restricted norm coincides with it. The randomized cross-check
// below tests that identification against concrete members of Sigma_r.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "linalg.hpp"
#include "report.hpp"
#include "representations.hpp"
#include "restricted.hpp"

namespace invsg {

  // Absolute below magnitude 10, relative above.
  inline double norm_deviation(double a, double b) {
    double const scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) / (scale > 10.0 ? scale : 1.0);
  }

  inline double norm_lambda_r(AlgebraElement const& f, Representation const& lr) {
    return op_norm(lift(lr, f));
  }

  inline double norm_lambda_r(AlgebraElement const& f) {
    return norm_lambda_r(f, lambda_r(f.base()));
  }

  inline double norm_sigma_r(AlgebraElement const& f, Representation const& lr) {
    return norm_lambda_r(f, lr);
  }

  inline double norm_sigma_r(AlgebraElement const& f) {
    return norm_lambda_r(f);
  }

  // The unrestricted reduced norm, from the classical left regular
  // representation.
  inline double norm_lambda(AlgebraElement const& f) {
    return op_norm(lift(lambda_full(f.base()), f));
  }

  struct NormReport {
    double                l1            = 0;
    double                lambda_r_norm = 0;
    double                sigma_r_norm  = 0;
    std::optional<double> quotient_norm;

    [[nodiscard]] bool ordered(double tol = 1e-9) const noexcept {
      return lambda_r_norm <= sigma_r_norm + tol && sigma_r_norm <= l1 + tol;
    }
  };

  inline NormReport make_norm_report(AlgebraElement const& f) {
    auto const lr = lambda_r(f.base());
    NormReport out;
    out.l1            = norm_1(f);
    out.lambda_r_norm = norm_lambda_r(f, lr);
    out.sigma_r_norm  = norm_sigma_r(f, lr);
    return out;
  }

  // Classes of idempotents linked by some s with ss* = e and s*s = f. A sum of
  // deltas over a union of classes lifts to a central projection.
  inline std::vector<std::vector<element>> idempotent_classes(FiniteInvSemigroup const& s) {
    std::vector<element> parent(s.order());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](element x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    };
    for (element x = 0; x < s.order(); ++x) {
      parent[find(s.range(x))] = find(s.source(x));
    }
    std::vector<std::vector<element>> classes;
    std::vector<std::ptrdiff_t>       slot(s.order(), -1);
    for (element e : s.idempotents()) {
      element const root = find(e);
      if (slot[root] < 0) {
        slot[root] = static_cast<std::ptrdiff_t>(classes.size());
        classes.emplace_back();
      }
      classes[static_cast<std::size_t>(slot[root])].push_back(e);
    }
    return classes;
  }

  namespace detail {
    inline Eigen::MatrixXcd random_unitary(Eigen::Index dim, std::mt19937_64& rng) {
      std::normal_distribution<double> g(0.0, 1.0);
      Eigen::MatrixXcd                 z(dim, dim);
      for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
          double const re = g(rng);
          z(i, j)         = scalar(re, g(rng));
        }
      }
      Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
      return qr.householderQ();
    }

    inline Representation conjugated(Representation pi, Eigen::MatrixXcd const& u) {
      for (auto& m : pi.mats) {
        m = u * m * u.adjoint();
      }
      return pi;
    }

    inline Representation direct_sum(std::vector<Representation> const& blocks) {
      Representation out{blocks.front().base, 0, {}, RepresentationKind::restricted};
      for (auto const& b : blocks) {
        out.dim += b.dim;
      }
      auto const d = static_cast<Eigen::Index>(out.dim);
      for (element x = 0; x < out.base.order(); ++x) {
        LinearOperator m      = LinearOperator::Zero(d, d);
        Eigen::Index   offset = 0;
        for (auto const& b : blocks) {
          auto const bd                   = static_cast<Eigen::Index>(b.dim);
          m.block(offset, offset, bd, bd) = b.mats[x];
          offset += bd;
        }
        out.mats.push_back(std::move(m));
      }
      return out;
    }
  }  // namespace detail

  // A member of Sigma_r(S): a direct sum of two or three blocks drawn from
  // unitary conjugates of lambda_r and rho_r and compressions of lambda_r by
  // central projections lift(lambda_r, e_F) with i(F) a union of idempotent
  // classes.
  inline Representation random_sigma_r_member(FiniteInvSemigroup const& s, std::mt19937_64& rng) {
    auto const                  lr = lambda_r(s);
    auto const                  rr = rho_r(s);
    auto const                  n  = static_cast<Eigen::Index>(s.order());
    auto const                  classes = idempotent_classes(s);
    std::uniform_int_distribution<int> pick(0, 3);
    std::uniform_int_distribution<int> count(2, 3);
    std::bernoulli_distribution         coin(0.5);
    std::vector<Representation>        blocks;
    int const                          k = count(rng);
    for (int b = 0; b < k; ++b) {
      switch (pick(rng)) {
        case 0: blocks.push_back(detail::conjugated(lr, detail::random_unitary(n, rng))); break;
        case 1: blocks.push_back(detail::conjugated(rr, detail::random_unitary(n, rng))); break;
        case 2: blocks.push_back(rr); break;
        default: {
          std::vector<element> f;
          for (auto const& c : classes) {
            if (coin(rng)) {
              f.insert(f.end(), c.begin(), c.end());
            }
          }
          LinearOperator const p = lift(lr, local_unit(s, f));
          Representation       compressed = lr;
          for (auto& m : compressed.mats) {
            m = p * m;
          }
          blocks.push_back(std::move(compressed));
        }
      }
    }
    return detail::direct_sum(blocks);
  }

  // Largest excess of ||lift(pi, f)|| over norm_sigma_r(f) across `trials`
  // random members pi of Sigma_r.
  inline Check sigma_r_cross_check(AlgebraElement const& f, std::size_t trials, std::uint64_t seed, double tol = 1e-9) {
    Check           check{"sigma-r-cross-check", "||lift(pi, f)|| <= ||f||_sigma_r for pi in Sigma_r"};
    double const    bound = norm_sigma_r(f);
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
      auto const   pi     = random_sigma_r_member(f.base(), rng);
      double const excess = std::max(0.0, op_norm(lift(pi, f)) - bound);
      check.observe(excess, tol, "trial=" + std::to_string(t) + ", seed=" + std::to_string(seed));
    }
    return check;
  }

  // ||f + C delta_0|| in the reduced C*-algebra of S_r. lift(Lambda, delta_0)
  // is the central rank-one projection P onto delta_0, so the quotient norm
  // is the norm of lift(Lambda, f)(I - P).
  inline double quotient_norm_cstar(AlgebraElement const& f, RestrictedSemigroup const& r, Representation const& big) {
    if (!f.base().same_as(r.sr())) {
      throw Error(ErrorKind::base_mismatch, "quotient norm expects a function on the restricted semigroup");
    }
    auto const     z = static_cast<Eigen::Index>(r.zero_index());
    LinearOperator m = lift(big, f);
    m.col(z).setZero();
    return op_norm(m);
  }

  inline double quotient_norm_cstar(AlgebraElement const& f, RestrictedSemigroup const& r) {
    return quotient_norm_cstar(f, r, lambda_on_sr(r));
  }

  struct ScalarMinimum {
    double value;
    scalar minimizer;
  };

  // min over complex c of ||lift(Lambda, f + c delta_0)||, searched in the
  // disc |c| <= 2||f||_1: a polar grid, then compass search with steps shrunk
  // by the golden ratio. The objective is convex in c.
  inline ScalarMinimum quotient_norm_by_minimization(AlgebraElement const& f, RestrictedSemigroup const& r) {
    if (!f.base().same_as(r.sr())) {
      throw Error(ErrorKind::base_mismatch, "quotient norm expects a function on the restricted semigroup");
    }
    auto const           big  = lambda_on_sr(r);
    LinearOperator const base = lift(big, f);
    LinearOperator const unit = big(r.zero_index());
    auto const objective      = [&](scalar c) { return op_norm(base + c * unit); };

    double const radius = 2.0 * norm_1(f);
    scalar       best_c = 0;
    double       best   = objective(best_c);
    if (radius == 0.0) {
      return {best, best_c};
    }
    constexpr int rings = 6, spokes = 12;
    for (int i = 1; i <= rings; ++i) {
      for (int j = 0; j < spokes; ++j) {
        scalar const c = std::polar(radius * i / rings, 2.0 * std::numbers::pi * j / spokes);
        double const v = objective(c);
        if (v < best) {
          best   = v;
          best_c = c;
        }
      }
    }
    double       step   = radius / rings;
    double const shrink = 0.6180339887498949;
    scalar const dirs[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {0.7071067811865476, 0.7071067811865476},
                           {-0.7071067811865476, 0.7071067811865476}, {0.7071067811865476, -0.7071067811865476},
                           {-0.7071067811865476, -0.7071067811865476}};
    while (step > 1e-9 * std::max(1.0, radius)) {
      bool moved = false;
      for (scalar const d : dirs) {
        scalar const c = best_c + step * d;
        if (std::abs(c) > radius) {
          continue;
        }
        double const v = objective(c);
        if (v < best) {
          best   = v;
          best_c = c;
          moved  = true;
        }
      }
      if (!moved) {
        step *= shrink;
      }
    }
    return {best, best_c};
  }

  // The reduced C*-algebra of S is the quotient of that of S_r by C delta_0:
  // |quotient_norm_cstar(f) - norm_lambda_r(tau(f))| on every delta and on
  // `trials` random f over S_r, plus the scalar-minimization cross-check on
  // the first `minimization_trials` random f.
  inline std::vector<Check> check_quotient_norm(RestrictedSemigroup const& r,
                                         std::size_t                trials,
                                         std::uint64_t              seed,
                                         std::size_t                minimization_trials = 5,
                                         double                     tol                 = 1e-8,
                                         double                     minimization_tol    = 1e-6) {
    Check deltas{"quotient-cstar-deltas", "||f + C delta_0|| in C*_Lambda(S_r) = ||tau(f)||_lambda_r on deltas"};
    Check random{"quotient-cstar-random", "||f + C delta_0|| in C*_Lambda(S_r) = ||tau(f)||_lambda_r"};
    Check minimized{"quotient-cstar-minimization", "min_c ||lift(Lambda, f + c delta_0)|| = quotient norm"};
    auto const big = lambda_on_sr(r);
    auto const lr  = lambda_r(r.base());
    auto const& sr = r.sr();
    for (element x = 0; x < sr.order(); ++x) {
      auto const f = AlgebraElement::delta(sr, x);
      deltas.observe(norm_deviation(quotient_norm_cstar(f, r, big), norm_lambda_r(tau(f, r), lr)),
                     tol,
                     "delta_" + sr.label(x));
    }
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
      auto const   f = random_element(sr, rng);
      double const q = quotient_norm_cstar(f, r, big);
      random.observe(norm_deviation(q, norm_lambda_r(tau(f, r), lr)),
                     tol,
                     "trial=" + std::to_string(t) + ", seed=" + std::to_string(seed));
      if (t < minimization_trials) {
        auto const m = quotient_norm_by_minimization(f, r);
        minimized.observe(norm_deviation(m.value, q), minimization_tol, "trial=" + std::to_string(t));
      }
    }
    return {deltas, random, minimized};
  }

}  // namespace invsg
