// invsg - finite inverse semigroups and their restricted algebras
//
// Complex functions on a finite inverse semigroup: the classical convolution,
// the restricted dot product and its involutions, l^p norms, the local units
// e_F, and the restriction map from functions on S_r to functions on S.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "restricted.hpp"
#include "semigroup.hpp"

namespace invsg {

  using scalar = std::complex<double>;

  class AlgebraElement {
   public:
    explicit AlgebraElement(FiniteInvSemigroup base)
        : _base(std::move(base)), _coeffs(_base.order()) {}

    AlgebraElement(FiniteInvSemigroup base, std::vector<scalar> coeffs)
        : _base(std::move(base)), _coeffs(std::move(coeffs)) {
      if (_coeffs.size() != _base.order()) {
        throw Error(ErrorKind::invalid_argument,
                    "expected " + std::to_string(_base.order()) + " coefficients, got "
                        + std::to_string(_coeffs.size()));
      }
      for (auto const& c : _coeffs) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
          throw Error(ErrorKind::invalid_argument, "coefficients must be finite");
        }
      }
    }

    static AlgebraElement delta(FiniteInvSemigroup const& base, element x) {
      AlgebraElement out(base);
      out._coeffs.at(x) = 1.0;
      return out;
    }

    [[nodiscard]] FiniteInvSemigroup const& base() const noexcept {
      return _base;
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _coeffs.size();
    }

    [[nodiscard]] scalar operator[](element x) const {
      return _coeffs[x];
    }

    scalar& operator[](element x) {
      return _coeffs[x];
    }

    [[nodiscard]] std::span<scalar const> coeffs() const noexcept {
      return _coeffs;
    }

    AlgebraElement& operator+=(AlgebraElement const& other) {
      require_same_base(other);
      for (std::size_t i = 0; i < _coeffs.size(); ++i) {
        _coeffs[i] += other._coeffs[i];
      }
      return *this;
    }

    AlgebraElement& operator-=(AlgebraElement const& other) {
      require_same_base(other);
      for (std::size_t i = 0; i < _coeffs.size(); ++i) {
        _coeffs[i] -= other._coeffs[i];
      }
      return *this;
    }

    AlgebraElement& operator*=(scalar c) {
      for (auto& v : _coeffs) {
        v *= c;
      }
      return *this;
    }

    friend AlgebraElement operator+(AlgebraElement a, AlgebraElement const& b) {
      return a += b;
    }

    friend AlgebraElement operator-(AlgebraElement a, AlgebraElement const& b) {
      return a -= b;
    }

    friend AlgebraElement operator*(scalar c, AlgebraElement a) {
      return a *= c;
    }

    friend bool operator==(AlgebraElement const& a, AlgebraElement const& b) {
      return a._base.same_as(b._base) && a._coeffs == b._coeffs;
    }

    void require_same_base(AlgebraElement const& other) const {
      if (!_base.same_as(other._base)) {
        throw Error(ErrorKind::base_mismatch, "operands live over different semigroups");
      }
    }

   private:
    FiniteInvSemigroup  _base;
    std::vector<scalar> _coeffs;
  };

  // Real and imaginary parts uniform in [-1, 1].
  inline AlgebraElement random_element(FiniteInvSemigroup const& s, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    AlgebraElement                         out(s);
    for (element x = 0; x < s.order(); ++x) {
      double const re = u(rng);
      out[x]          = scalar(re, u(rng));
    }
    return out;
  }

  // Real, entrywise in [0, 1].
  inline AlgebraElement random_nonnegative(FiniteInvSemigroup const& s, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    AlgebraElement                         out(s);
    for (element x = 0; x < s.order(); ++x) {
      out[x] = u(rng);
    }
    return out;
  }

  // (f * g)(x) = sum_{st = x} f(s) g(t)
  inline AlgebraElement conv(AlgebraElement const& f, AlgebraElement const& g) {
    f.require_same_base(g);
    auto const&    s = f.base();
    AlgebraElement out(s);
    for (element a = 0; a < s.order(); ++a) {
      if (f[a] == scalar(0)) {
        continue;
      }
      for (element b = 0; b < s.order(); ++b) {
        out[s.mul(a, b)] += f[a] * g[b];
      }
    }
    return out;
  }

  // (f . g)(x) = sum_{y : x*x = yy*} f(xy) g(y*)
  inline AlgebraElement dot(AlgebraElement const& f, AlgebraElement const& g) {
    f.require_same_base(g);
    auto const&    s = f.base();
    AlgebraElement out(s);
    for (element x = 0; x < s.order(); ++x) {
      scalar acc = 0;
      for (element y : s.with_range(s.source(x))) {
        acc += f[s.mul(x, y)] * g[s.star(y)];
      }
      out[x] = acc;
    }
    return out;
  }

  // The same product summed over factorizations:
  // (f . g)(x) = sum_s sum_{t : st = x, x*x = t*t} f(s) g(t)
  inline AlgebraElement dot_factorized(AlgebraElement const& f, AlgebraElement const& g) {
    f.require_same_base(g);
    auto const&    s = f.base();
    AlgebraElement out(s);
    for (element a = 0; a < s.order(); ++a) {
      for (element b = 0; b < s.order(); ++b) {
        element const x = s.mul(a, b);
        if (s.source(x) == s.source(b)) {
          out[x] += f[a] * g[b];
        }
      }
    }
    return out;
  }

  // Sum over composable factorizations: sum_{st = x, s*s = tt*} f(s) g(t)
  inline AlgebraElement dot_composable(AlgebraElement const& f, AlgebraElement const& g) {
    f.require_same_base(g);
    auto const&    s = f.base();
    AlgebraElement out(s);
    for (element a = 0; a < s.order(); ++a) {
      for (element b : s.with_range(s.source(a))) {
        out[s.mul(a, b)] += f[a] * g[b];
      }
    }
    return out;
  }

  // f(x*)
  inline AlgebraElement check(AlgebraElement const& f) {
    AlgebraElement out(f.base());
    for (element x = 0; x < f.size(); ++x) {
      out[x] = f[f.base().star(x)];
    }
    return out;
  }

  // conj(f(x*))
  inline AlgebraElement tilde(AlgebraElement const& f) {
    AlgebraElement out(f.base());
    for (element x = 0; x < f.size(); ++x) {
      out[x] = std::conj(f[f.base().star(x)]);
    }
    return out;
  }

  // Pointwise conjugate.
  inline AlgebraElement bar(AlgebraElement const& f) {
    AlgebraElement out(f.base());
    for (element x = 0; x < f.size(); ++x) {
      out[x] = std::conj(f[x]);
    }
    return out;
  }

  enum class Lp { one, two, inf };

  inline double norm_1(AlgebraElement const& f) {
    double acc = 0;
    for (auto const& c : f.coeffs()) {
      acc += std::abs(c);
    }
    return acc;
  }

  inline double norm_2(AlgebraElement const& f) {
    double acc = 0;
    for (auto const& c : f.coeffs()) {
      acc += std::norm(c);
    }
    return std::sqrt(acc);
  }

  inline double norm_inf(AlgebraElement const& f) {
    double acc = 0;
    for (auto const& c : f.coeffs()) {
      acc = std::max(acc, std::abs(c));
    }
    return acc;
  }

  inline double norm(AlgebraElement const& f, Lp p) {
    switch (p) {
      case Lp::one: return norm_1(f);
      case Lp::two: return norm_2(f);
      case Lp::inf: return norm_inf(f);
    }
    return 0;
  }

  // <f, g> = sum_x f(x) conj(g(x))
  inline scalar inner(AlgebraElement const& f, AlgebraElement const& g) {
    f.require_same_base(g);
    scalar acc = 0;
    for (element x = 0; x < f.size(); ++x) {
      acc += f[x] * std::conj(g[x]);
    }
    return acc;
  }

  // Largest entrywise modulus of f - g.
  inline double max_deviation(AlgebraElement const& f, AlgebraElement const& g) {
    f.require_same_base(g);
    double out = 0;
    for (element x = 0; x < f.size(); ++x) {
      out = std::max(out, std::abs(f[x] - g[x]));
    }
    return out;
  }

  // i(F): the idempotents xx* and x*x for x in F, sorted.
  inline std::vector<element> support_idempotents(FiniteInvSemigroup const& s, std::span<element const> subset) {
    std::vector<element> out;
    for (element x : subset) {
      out.push_back(s.range(x));
      out.push_back(s.source(x));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // e_F: the indicator function of i(F).
  inline AlgebraElement local_unit(FiniteInvSemigroup const& s, std::span<element const> subset) {
    AlgebraElement out(s);
    for (element e : support_idempotents(s, subset)) {
      out[e] = 1.0;
    }
    return out;
  }

  // Restriction of a function on S_r to S (drops the zero coordinate).
  inline AlgebraElement tau(AlgebraElement const& f, RestrictedSemigroup const& r) {
    if (!f.base().same_as(r.sr())) {
      throw Error(ErrorKind::base_mismatch, "tau expects a function on the restricted semigroup");
    }
    std::vector<scalar> coeffs(f.coeffs().begin(), f.coeffs().begin() + static_cast<std::ptrdiff_t>(r.base().order()));
    return AlgebraElement(r.base(), std::move(coeffs));
  }

  // Extension by zero at the adjoined 0; a right inverse of tau.
  inline AlgebraElement embed(AlgebraElement const& f, RestrictedSemigroup const& r) {
    if (!f.base().same_as(r.base())) {
      throw Error(ErrorKind::base_mismatch, "embed expects a function on the base semigroup");
    }
    std::vector<scalar> coeffs(f.coeffs().begin(), f.coeffs().end());
    coeffs.push_back(0.0);
    return AlgebraElement(r.sr(), std::move(coeffs));
  }

  struct QuotientMinimum {
    double value;
    scalar minimizer;
  };

  // min over c of ||f + c delta_0||_1, attained at c = -f(0).
  inline QuotientMinimum l1_quotient_norm(AlgebraElement const& f, RestrictedSemigroup const& r) {
    if (!f.base().same_as(r.sr())) {
      throw Error(ErrorKind::base_mismatch, "quotient norm expects a function on the restricted semigroup");
    }
    AlgebraElement shifted = f;
    scalar const   c       = -f[r.zero_index()];
    shifted[r.zero_index()] += c;
    return {norm_1(shifted), c};
  }

  // The variant summing over every y with yy* <= x*x in the natural order.
  // This is not an associative product in general; it exists for the
  // non-associativity witness search and comparisons only.
  inline AlgebraElement order_dot(AlgebraElement const& f, AlgebraElement const& g) {
    f.require_same_base(g);
    auto const&    s = f.base();
    AlgebraElement out(s);
    for (element x = 0; x < s.order(); ++x) {
      element const d   = s.source(x);
      scalar        acc = 0;
      for (element y = 0; y < s.order(); ++y) {
        if (s.mul(s.range(y), d) == s.range(y)) {
          acc += f[s.mul(x, y)] * g[s.star(y)];
        }
      }
      out[x] = acc;
    }
    return out;
  }

  struct NonAssocWitness {
    element        x, y, z;
    AlgebraElement left;   // (d_x o d_y) o d_z
    AlgebraElement right;  // d_x o (d_y o d_z)
  };

  // First delta triple (lexicographic in x, y, z) on which order_dot fails to
  // associate, or nothing if the exhaustive scan passes.
  inline std::optional<NonAssocWitness> find_nonassoc_witness(FiniteInvSemigroup const& s) {
    std::vector<AlgebraElement> deltas;
    for (element x = 0; x < s.order(); ++x) {
      deltas.push_back(AlgebraElement::delta(s, x));
    }
    for (element x = 0; x < s.order(); ++x) {
      for (element y = 0; y < s.order(); ++y) {
        auto const xy = order_dot(deltas[x], deltas[y]);
        for (element z = 0; z < s.order(); ++z) {
          auto left  = order_dot(xy, deltas[z]);
          auto right = order_dot(deltas[x], order_dot(deltas[y], deltas[z]));
          if (!(left == right)) {
            return NonAssocWitness{x, y, z, std::move(left), std::move(right)};
          }
        }
      }
    }
    return std::nullopt;
  }

}  // namespace invsg
