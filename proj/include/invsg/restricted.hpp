// invsg - finite inverse semigroups and their restricted algebras
//
// The restricted product (xy, defined only when x*x = yy*), the associated
// groupoid, and the restricted semigroup S_r = S with a zero adjoined.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "semigroup.hpp"

namespace invsg {

  inline std::optional<element> restricted_product(FiniteInvSemigroup const& s, element x, element y) {
    if (!s.composable(x, y)) {
      return std::nullopt;
    }
    return s.mul(x, y);
  }

  inline std::vector<std::pair<element, element>> composable_pairs(FiniteInvSemigroup const& s) {
    std::vector<std::pair<element, element>> out;
    for (element x = 0; x < s.order(); ++x) {
      for (element y : s.with_range(s.source(x))) {
        out.emplace_back(x, y);
      }
    }
    return out;
  }

  // Groupoid laws on the composable pairs. Returns a description of the first
  // violation, or nothing.
  inline std::optional<std::string> check_groupoid_laws(FiniteInvSemigroup const& s) {
    auto const n = s.order();
    for (element x = 0; x < n; ++x) {
      if (!s.composable(s.star(x), x) || !s.composable(x, s.star(x))) {
        return "x* x or x x* not composable at " + s.label(x);
      }
      if (s.mul(s.star(x), x) != s.source(x) || s.mul(x, s.star(x)) != s.range(x)) {
        return "units of the groupoid are not x*x, xx* at " + s.label(x);
      }
    }
    for (auto [x, y] : composable_pairs(s)) {
      element const xy = s.mul(x, y);
      // composite keeps the source of y and the range of x
      if (s.source(xy) != s.source(y) || s.range(xy) != s.range(x)) {
        return "composite has wrong units at (" + s.label(x) + ", " + s.label(y) + ")";
      }
      for (element z = 0; z < n; ++z) {
        if (s.composable(xy, z) != s.composable(y, z)) {
          return "composability of (xy, z) and (y, z) differ at (" + s.label(x) + ", " + s.label(y) + ", "
                 + s.label(z) + ")";
        }
        if (s.composable(y, z) && !s.composable(x, s.mul(y, z))) {
          return "(x, yz) not composable at (" + s.label(x) + ", " + s.label(y) + ", " + s.label(z) + ")";
        }
        if (s.composable(y, z) && s.mul(xy, z) != s.mul(x, s.mul(y, z))) {
          return "restricted product not associative at (" + s.label(x) + ", " + s.label(y) + ", "
                 + s.label(z) + ")";
        }
      }
    }
    return std::nullopt;
  }

  class RestrictedSemigroup;
  inline RestrictedSemigroup build_restricted_semigroup(FiniteInvSemigroup const& s, BuildOptions const& options);

  class RestrictedSemigroup {
   public:
    [[nodiscard]] FiniteInvSemigroup const& base() const noexcept {
      return _base;
    }

    [[nodiscard]] FiniteInvSemigroup const& sr() const noexcept {
      return _sr;
    }

    // The adjoined zero is always the last index.
    [[nodiscard]] element zero_index() const noexcept {
      return _base.order();
    }

    [[nodiscard]] element embed(element x) const {
      if (x >= _base.order()) {
        throw Error(ErrorKind::invalid_argument, "element outside the base semigroup", std::to_string(x));
      }
      return x;
    }

    [[nodiscard]] std::optional<element> project(element i) const noexcept {
      if (i >= _base.order()) {
        return std::nullopt;
      }
      return i;
    }

    friend RestrictedSemigroup build_restricted_semigroup(FiniteInvSemigroup const&, BuildOptions const&);

   private:
    RestrictedSemigroup(FiniteInvSemigroup base, FiniteInvSemigroup sr)
        : _base(std::move(base)), _sr(std::move(sr)) {}

    FiniteInvSemigroup _base;
    FiniteInvSemigroup _sr;
  };

  // Builds the table of x . y = xy if x*x = yy*, else 0, and validates it as
  // an inverse semigroup. A validation failure is reported as
  // VerificationFailure.
  inline RestrictedSemigroup build_restricted_semigroup(FiniteInvSemigroup const& s,
                                                        BuildOptions const&       options = {}) {
    std::size_t const n    = s.order();
    element const     zero = n;
    Table             mul(n + 1, std::vector<element>(n + 1, zero));
    for (element x = 0; x < n; ++x) {
      for (element y = 0; y < n; ++y) {
        if (auto xy = restricted_product(s, x, y)) {
          mul[x][y] = *xy;
        }
      }
    }
    std::vector<element> star = s.star_map();
    star.push_back(zero);
    std::vector<std::string> labels;
    if (s.has_labels()) {
      labels = s.labels();
      bool const taken = std::find(labels.begin(), labels.end(), "0") != labels.end();
      labels.emplace_back(taken ? "0r" : "0");
    }
    BuildOptions relaxed = options;
    relaxed.max_order    = std::max(options.max_order, n + 1);
    try {
      auto sr = build_from_table(mul, star, std::move(labels), relaxed);
      return RestrictedSemigroup(s, std::move(sr));
    } catch (Error const& e) {
      throw Error(ErrorKind::verification_failure,
                  std::string("restricted semigroup failed validation: ") + e.what(),
                  e.witness());
    }
  }

}  // namespace invsg
