// invsg - finite inverse semigroups and their restricted algebras
//
// Matrix realizations of the regular representations on l^2(S), lifting to
// functions on S, membership checks for contractive *-representations and
// restricted representations, and the inner-product identities relating the
// restricted regular representations to the dot product.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "error.hpp"
#include "linalg.hpp"
#include "report.hpp"
#include "restricted.hpp"
#include "semigroup.hpp"

namespace invsg {

  // full: pi(x)pi(y) = pi(xy) for all pairs.
  // restricted: pi(x)pi(y) = pi(xy) when x*x = yy*, and 0 otherwise.
  enum class RepresentationKind { full, restricted };

  struct Representation {
    FiniteInvSemigroup          base;
    std::size_t                 dim = 0;
    std::vector<LinearOperator> mats;
    RepresentationKind          kind = RepresentationKind::restricted;

    [[nodiscard]] LinearOperator const& operator()(element x) const {
      return mats.at(x);
    }
  };

  namespace detail {
    template <typename Entry>
    Representation regular(FiniteInvSemigroup const& s, RepresentationKind kind, Entry&& entry) {
      auto const     n = s.order();
      Representation out{s, n, {}, kind};
      out.mats.reserve(n);
      for (element x = 0; x < n; ++x) {
        LinearOperator m = LinearOperator::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        for (element y = 0; y < n; ++y) {
          if (auto col = entry(x, y)) {
            m(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(*col)) = 1.0;
          }
        }
        out.mats.push_back(std::move(m));
      }
      return out;
    }
  }  // namespace detail

  // lambda_r(x) xi (y) = xi(x*y) if xx* = yy*, else 0.
  inline Representation lambda_r(FiniteInvSemigroup const& s) {
    return detail::regular(s, RepresentationKind::restricted, [&s](element x, element y) -> std::optional<element> {
      if (s.range(x) != s.range(y)) {
        return std::nullopt;
      }
      return s.mul(s.star(x), y);
    });
  }

  // lambda(x) xi (y) = xi(x*y) if yy* <= xx*, else 0.
  inline Representation lambda_full(FiniteInvSemigroup const& s) {
    return detail::regular(s, RepresentationKind::full, [&s](element x, element y) -> std::optional<element> {
      if (s.mul(s.range(y), s.range(x)) != s.range(y)) {
        return std::nullopt;
      }
      return s.mul(s.star(x), y);
    });
  }

  // rho_r(x) xi (y) = xi(yx) if xx* = y*y, else 0.
  inline Representation rho_r(FiniteInvSemigroup const& s) {
    return detail::regular(s, RepresentationKind::restricted, [&s](element x, element y) -> std::optional<element> {
      if (s.range(x) != s.source(y)) {
        return std::nullopt;
      }
      return s.mul(y, x);
    });
  }

  // The classical left regular representation of S_r on l^2(S_r).
  inline Representation lambda_on_sr(RestrictedSemigroup const& r) {
    return lambda_full(r.sr());
  }

  // sum_x f(x) pi(x)
  inline LinearOperator lift(Representation const& pi, AlgebraElement const& f) {
    if (!pi.base.same_as(f.base())) {
      throw Error(ErrorKind::base_mismatch, "function and representation live over different semigroups");
    }
    auto const     d   = static_cast<Eigen::Index>(pi.dim);
    LinearOperator out = LinearOperator::Zero(d, d);
    for (element x = 0; x < f.size(); ++x) {
      if (f[x] != scalar(0)) {
        out += f[x] * pi.mats[x];
      }
    }
    return out;
  }

  enum class ViolationKind { not_adjoint_closed, not_contractive, not_multiplicative, not_restricted_multiplicative };

  inline char const* to_string(ViolationKind kind) noexcept {
    switch (kind) {
      case ViolationKind::not_adjoint_closed: return "NotAdjointClosed";
      case ViolationKind::not_contractive: return "NotContractive";
      case ViolationKind::not_multiplicative: return "NotMultiplicative";
      case ViolationKind::not_restricted_multiplicative: return "NotRestrictedMultiplicative";
    }
    return "Unknown";
  }

  struct Violation {
    ViolationKind kind;
    element       x;
    element       y;  // equals x for single-element laws
    double        deviation;
  };

  struct MembershipReport {
    std::vector<Violation> violations;
    double                 max_operator_norm = 0.0;

    [[nodiscard]] bool ok() const noexcept {
      return violations.empty();
    }

    [[nodiscard]] bool has(ViolationKind kind) const {
      for (auto const& v : violations) {
        if (v.kind == kind) {
          return true;
        }
      }
      return false;
    }
  };

  struct MembershipTolerances {
    double algebraic   = 0.0;  // adjoint and multiplicative laws, entrywise
    double contraction = 1e-9;
  };

  // Checks every law of the given kind and lists every violation.
  inline MembershipReport check_membership(Representation const&       pi,
                                           RepresentationKind          law,
                                           MembershipTolerances const& tol = {}) {
    auto const&      s = pi.base;
    MembershipReport report;
    auto const       dev = [](LinearOperator const& a, LinearOperator const& b) {
      return a.size() == 0 ? 0.0 : (a - b).cwiseAbs().maxCoeff();
    };
    for (element x = 0; x < s.order(); ++x) {
      double const d = dev(pi(s.star(x)), pi(x).adjoint());
      if (d > tol.algebraic) {
        report.violations.push_back({ViolationKind::not_adjoint_closed, x, x, d});
      }
      double const nx          = op_norm(pi(x));
      report.max_operator_norm = std::max(report.max_operator_norm, nx);
      if (nx > 1.0 + tol.contraction) {
        report.violations.push_back({ViolationKind::not_contractive, x, x, nx - 1.0});
      }
    }
    auto const d = static_cast<Eigen::Index>(pi.dim);
    for (element x = 0; x < s.order(); ++x) {
      for (element y = 0; y < s.order(); ++y) {
        LinearOperator const prod = pi(x) * pi(y);
        if (law == RepresentationKind::full) {
          double const e = dev(prod, pi(s.mul(x, y)));
          if (e > tol.algebraic) {
            report.violations.push_back({ViolationKind::not_multiplicative, x, y, e});
          }
        } else {
          double const e = s.composable(x, y) ? dev(prod, pi(s.mul(x, y))) : dev(prod, LinearOperator::Zero(d, d));
          if (e > tol.algebraic) {
            report.violations.push_back({ViolationKind::not_restricted_multiplicative, x, y, e});
          }
        }
      }
    }
    return report;
  }

  inline MembershipReport is_member_sigma_r(Representation const& pi, MembershipTolerances const& tol = {}) {
    return check_membership(pi, RepresentationKind::restricted, tol);
  }

  inline MembershipReport is_member_sigma(Representation const& pi, MembershipTolerances const& tol = {}) {
    return check_membership(pi, RepresentationKind::full, tol);
  }

  // Extends a restricted representation of S to a *-representation of S_r
  // with pi(0) = 0.
  inline Representation sigma_r_to_sigma0(Representation const& pi, RestrictedSemigroup const& r) {
    if (!pi.base.same_as(r.base())) {
      throw Error(ErrorKind::base_mismatch, "representation is not over the base of the restricted semigroup");
    }
    Representation out{r.sr(), pi.dim, pi.mats, RepresentationKind::full};
    auto const     d = static_cast<Eigen::Index>(pi.dim);
    out.mats.push_back(LinearOperator::Zero(d, d));
    return out;
  }

  // Restricts a *-representation of S_r vanishing at 0 to S.
  inline Representation sigma0_to_sigma_r(Representation const& pi, RestrictedSemigroup const& r) {
    if (!pi.base.same_as(r.sr())) {
      throw Error(ErrorKind::base_mismatch, "representation is not over the restricted semigroup");
    }
    auto const& at_zero = pi(r.zero_index());
    if (at_zero.size() != 0 && at_zero.cwiseAbs().maxCoeff() != 0.0) {
      throw Error(ErrorKind::invalid_argument, "representation does not vanish at the adjoined zero");
    }
    Representation out{r.base(), pi.dim, {}, RepresentationKind::restricted};
    out.mats.assign(pi.mats.begin(), pi.mats.begin() + static_cast<std::ptrdiff_t>(r.base().order()));
    return out;
  }

  namespace detail {
    inline Eigen::VectorXcd as_vector(AlgebraElement const& f) {
      Eigen::VectorXcd v(static_cast<Eigen::Index>(f.size()));
      for (element x = 0; x < f.size(); ++x) {
        v(static_cast<Eigen::Index>(x)) = f[x];
      }
      return v;
    }

    inline std::string trial_witness(FiniteInvSemigroup const& s, element x, std::size_t trial, std::uint64_t seed) {
      return "x=" + s.label(x) + ", trial=" + std::to_string(trial) + ", seed=" + std::to_string(seed);
    }
  }  // namespace detail

  // <lambda_r(x*) xi, eta> = (xi . tilde(eta))(x) for every x and `trials`
  // random xi, eta.
  inline Check verify_lambda_identity(FiniteInvSemigroup const& s,
                                      std::size_t               trials,
                                      std::uint64_t             seed,
                                      double                    tol = 1e-10) {
    Check      check{"lambda-r-inner-product", "<lambda_r(x*) xi, eta> = (xi . tilde(eta))(x)"};
    auto const lr = lambda_r(s);
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
      auto const xi  = random_element(s, rng);
      auto const eta = random_element(s, rng);
      auto const rhs = dot(xi, tilde(eta));
      auto const vx  = detail::as_vector(xi);
      auto const ve  = detail::as_vector(eta);
      for (element x = 0; x < s.order(); ++x) {
        scalar const lhs = ve.dot(lr(s.star(x)) * vx);
        check.observe(std::abs(lhs - rhs[x]), tol, detail::trial_witness(s, x, t, seed));
      }
    }
    return check;
  }

  // Three forms of the right regular identity:
  //   rho-r-inner-product:    <rho_r(x) xi, eta> = (tilde(eta) . xi)(x)
  //   rho-r-lift-pairing:     <lift(rho_r, phi) xi, eta> = sum_z phi(z) (check(xi) . bar(eta))(z*)
  //   rho-r-lift-at-identity: <lift(rho_r, phi) xi, eta> = (phi . (check(xi) . bar(eta)))(1)
  // Requires a unital semigroup.
  inline std::vector<Check> verify_rho_identity(FiniteInvSemigroup const& s,
                                                std::size_t               trials,
                                                std::uint64_t             seed,
                                                double                    tol = 1e-10) {
    if (!s.identity()) {
      throw Error(ErrorKind::invalid_argument, "the lifted right regular identity is evaluated at the identity");
    }
    element const one = *s.identity();
    Check pointwise{"rho-r-inner-product", "<rho_r(x) xi, eta> = (tilde(eta) . xi)(x)"};
    Check pairing{"rho-r-lift-pairing", "<lift(rho_r, phi) xi, eta> = sum_z phi(z) (check(xi) . bar(eta))(z*)"};
    Check at_identity{"rho-r-lift-at-identity", "<lift(rho_r, phi) xi, eta> = (phi . (check(xi) . bar(eta)))(1)"};
    auto const      rr = rho_r(s);
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
      auto const xi  = random_element(s, rng);
      auto const eta = random_element(s, rng);
      auto const phi = random_element(s, rng);
      auto const vx  = detail::as_vector(xi);
      auto const ve  = detail::as_vector(eta);

      auto const rhs = dot(tilde(eta), xi);
      for (element x = 0; x < s.order(); ++x) {
        scalar const lhs = ve.dot(rr(x) * vx);
        pointwise.observe(std::abs(lhs - rhs[x]), tol, detail::trial_witness(s, x, t, seed));
      }

      scalar const lhs   = ve.dot(lift(rr, phi) * vx);
      auto const   inner = dot(check(xi), bar(eta));
      scalar       paired = 0;
      for (element z = 0; z < s.order(); ++z) {
        paired += phi[z] * inner[s.star(z)];
      }
      pairing.observe(std::abs(lhs - paired), tol, detail::trial_witness(s, one, t, seed));
      scalar const literal = dot(phi, inner)[one];
      at_identity.observe(std::abs(lhs - literal), tol, detail::trial_witness(s, one, t, seed));
    }
    return {pointwise, pairing, at_identity};
  }

  enum class Product { conv, dot };

  // Rank of f -> lift(pi, f) on the |S|-dimensional coefficient space. The
  // product names the algebra the lift is a homomorphism of: conv pairs with
  // full representations, dot with restricted ones.
  inline std::size_t faithfulness_rank(Representation const& pi, Product algebra, double rel_tol = 1e-9) {
    bool const matches = (algebra == Product::conv) == (pi.kind == RepresentationKind::full);
    if (!matches) {
      throw Error(ErrorKind::invalid_argument, "product does not match the representation kind");
    }
    auto const       n = static_cast<Eigen::Index>(pi.base.order());
    Eigen::MatrixXcd columns(static_cast<Eigen::Index>(pi.dim * pi.dim), n);
    for (Eigen::Index x = 0; x < n; ++x) {
      columns.col(x) = vectorize(pi.mats[static_cast<std::size_t>(x)]);
    }
    return numeric_rank(columns, rel_tol);
  }

  struct SemisimplicityReport {
    std::size_t image_rank            = 0;
    std::size_t hermitian_form_rank   = 0;  // (a, b) -> tr(a b*)
    std::size_t trace_form_rank       = 0;  // (a, b) -> tr(a b)
    double      product_residual      = 0;  // distance of pi(x)pi(y) from the image
    double      adjoint_residual      = 0;  // distance of pi(x)* from the image

    [[nodiscard]] bool semisimple(double tol = 1e-9) const noexcept {
      return hermitian_form_rank == image_rank && trace_form_rank == image_rank && product_residual <= tol
             && adjoint_residual <= tol;
    }
  };

  // The image A = span{pi(x)} is checked to be a *-closed algebra, and the
  // trace forms are checked nondegenerate on it. A matrix algebra whose form
  // tr(ab) is nondegenerate has zero Jacobson radical.
  inline SemisimplicityReport semisimplicity(Representation const& pi, double rel_tol = 1e-9) {
    auto const       n  = static_cast<Eigen::Index>(pi.base.order());
    auto const       d2 = static_cast<Eigen::Index>(pi.dim * pi.dim);
    Eigen::MatrixXcd columns(d2, n);
    Eigen::MatrixXcd transposed(d2, n);
    for (Eigen::Index x = 0; x < n; ++x) {
      auto const& m     = pi.mats[static_cast<std::size_t>(x)];
      columns.col(x)    = vectorize(m);
      transposed.col(x) = vectorize(m.transpose());
    }
    SemisimplicityReport report;
    Eigen::MatrixXcd const q = column_basis(columns, rel_tol);
    report.image_rank        = static_cast<std::size_t>(q.cols());
    // hermitian: G(x, y) = tr(pi(x) pi(y)*) = <vec pi(x), vec pi(y)>
    Eigen::MatrixXcd const hermitian = columns.adjoint() * columns;
    report.hermitian_form_rank       = numeric_rank(hermitian, rel_tol);
    // bilinear: T(x, y) = tr(pi(x) pi(y)) = vec(pi(x)^T) . vec(pi(y))
    Eigen::MatrixXcd const bilinear = transposed.transpose() * columns;
    report.trace_form_rank          = numeric_rank(bilinear, rel_tol);

    auto const residual = [&q](Eigen::VectorXcd const& v) {
      double const scale = std::max(1.0, v.norm());
      return (v - q * (q.adjoint() * v)).norm() / scale;
    };
    for (Eigen::Index x = 0; x < n; ++x) {
      auto const& mx          = pi.mats[static_cast<std::size_t>(x)];
      report.adjoint_residual = std::max(report.adjoint_residual, residual(vectorize(mx.adjoint())));
      for (Eigen::Index y = 0; y < n; ++y) {
        LinearOperator const p  = mx * pi.mats[static_cast<std::size_t>(y)];
        report.product_residual = std::max(report.product_residual, residual(vectorize(p)));
      }
    }
    return report;
  }

  // Largest entrywise deviation between lambda_on_sr(s) P_0 and lambda_r(s)
  // placed in the nonzero block, over all s in S. P_0 removes the delta_0
  // coordinate.
  inline double compression_deviation(RestrictedSemigroup const& r) {
    auto const  lr     = lambda_r(r.base());
    auto const  big    = lambda_on_sr(r);
    auto const  n      = static_cast<Eigen::Index>(r.base().order());
    auto const  z      = static_cast<Eigen::Index>(r.zero_index());
    LinearOperator p0  = LinearOperator::Identity(n + 1, n + 1);
    p0(z, z)           = 0.0;
    double worst       = 0.0;
    for (element s = 0; s < r.base().order(); ++s) {
      LinearOperator const compressed = big(r.embed(s)) * p0;
      LinearOperator       expected   = LinearOperator::Zero(n + 1, n + 1);
      expected.topLeftCorner(n, n)    = lr(s);
      worst = std::max(worst, (compressed - expected).cwiseAbs().maxCoeff());
    }
    return worst;
  }

}  // namespace invsg
