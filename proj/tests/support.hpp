// Independent reference computations shared by the tests. Nothing here calls
// into the product, norm or representation code under test.

#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include <invsg/invsg.hpp>

namespace oracle {

  using invsg::element;
  using invsg::FiniteInvSemigroup;
  using invsg::scalar;

  // |I_n| = sum_k C(n,k)^2 k!
  inline std::size_t symmetric_inverse_order(std::size_t n) {
    std::size_t total = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      std::size_t c = 1, f = 1;
      for (std::size_t i = 0; i < k; ++i) {
        c = c * (n - i) / (i + 1);
        f *= i + 1;
      }
      total += c * c * f;
    }
    return total;
  }

  // All inverses of x by brute force.
  inline std::vector<element> inverses(FiniteInvSemigroup const& s, element x) {
    std::vector<element> out;
    for (element y = 0; y < s.order(); ++y) {
      if (s.mul(s.mul(x, y), x) == x && s.mul(s.mul(y, x), y) == y) {
        out.push_back(y);
      }
    }
    return out;
  }

  // (f . g) over S computed as the ordinary convolution on S_r, written out
  // from the S_r table, then restricted back to S.
  inline std::vector<scalar> dot_via_sr(invsg::RestrictedSemigroup const& r,
                                        std::vector<scalar> const&        f,
                                        std::vector<scalar> const&        g) {
    auto const& sr = r.sr();
    std::vector<scalar> h(sr.order(), 0.0);
    for (element a = 0; a < f.size(); ++a) {
      for (element b = 0; b < g.size(); ++b) {
        h[sr.mul(a, b)] += f[a] * g[b];
      }
    }
    h.pop_back();  // the zero is last
    return h;
  }

  inline std::vector<scalar> random_vector(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<scalar>                    out(n);
    for (auto& c : out) {
      double const re = u(rng);
      c               = {re, u(rng)};
    }
    return out;
  }

  inline double largest_singular_value(Eigen::MatrixXcd const& m) {
    if (m.size() == 0) {
      return 0.0;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues()(0);
  }

  inline Eigen::Index rank(Eigen::MatrixXcd const& m, double tol = 1e-9) {
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(m);
    lu.setThreshold(tol);
    return lu.rank();
  }

  // (lambda_r(x) xi)(y) = xi(x* y) when xx* = yy*, else 0: the matrix built
  // from the action on functions.
  inline Eigen::MatrixXcd lambda_r_by_action(FiniteInvSemigroup const& s, element x) {
    auto const       n = static_cast<Eigen::Index>(s.order());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (element col = 0; col < s.order(); ++col) {
      for (element y = 0; y < s.order(); ++y) {
        // xi = delta_col; (lambda_r(x) xi)(y) = [x* y == col][xx* == yy*]
        if (s.mul(x, s.star(x)) == s.mul(y, s.star(y)) && s.mul(s.star(x), y) == col) {
          m(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(col)) += 1.0;
        }
      }
    }
    return m;
  }

}  // namespace oracle
