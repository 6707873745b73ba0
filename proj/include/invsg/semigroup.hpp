// invsg - finite inverse semigroups and their restricted algebras
//
// FiniteInvSemigroup: a validated, immutable multiplication table together
// with its involution, idempotents and the source/range maps x -> x*x and
// x -> xx*. Copies are cheap handles onto shared immutable data.

#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace invsg {

  // Elements are dense indices 0..n-1.
  using element = std::size_t;
  using Table   = std::vector<std::vector<element>>;

  struct BuildOptions {
    std::size_t max_order = 256;
  };

  class FiniteInvSemigroup;

  inline FiniteInvSemigroup build_from_table(Table const&                       mul,
                                      std::optional<std::vector<element>> star
                                      = std::nullopt,
                                      std::vector<std::string> labels = {},
                                      BuildOptions const& options = {});

  class FiniteInvSemigroup {
    struct Data {
      std::size_t              n = 0;
      std::vector<element>     mul;  // row-major
      std::vector<element>     star;
      std::vector<element>     source;  // x*x
      std::vector<element>     range;   // xx*
      std::vector<element>     idempotents;
      std::vector<char>        is_idempotent;
      std::vector<char>        composable;  // x*x == yy*, row-major
      // by_range[e] lists every y with yy* == e (empty unless e idempotent)
      std::vector<std::vector<element>> by_range;
      std::optional<element>            identity;
      std::optional<element>            zero;
      std::vector<std::string>          labels;
    };

   public:
    FiniteInvSemigroup() = delete;

    [[nodiscard]] std::size_t order() const noexcept {
      return _data->n;
    }

    [[nodiscard]] element mul(element x, element y) const noexcept {
      return _data->mul[x * _data->n + y];
    }

    [[nodiscard]] element star(element x) const noexcept {
      return _data->star[x];
    }

    // x*x
    [[nodiscard]] element source(element x) const noexcept {
      return _data->source[x];
    }

    // xx*
    [[nodiscard]] element range(element x) const noexcept {
      return _data->range[x];
    }

    [[nodiscard]] bool composable(element x, element y) const noexcept {
      return _data->composable[x * _data->n + y] != 0;
    }

    [[nodiscard]] bool is_idempotent(element x) const noexcept {
      return _data->is_idempotent[x] != 0;
    }

    [[nodiscard]] std::vector<element> const& idempotents() const noexcept {
      return _data->idempotents;
    }

    [[nodiscard]] std::vector<element> const& with_range(element e) const {
      return _data->by_range[e];
    }

    [[nodiscard]] std::optional<element> identity() const noexcept {
      return _data->identity;
    }

    [[nodiscard]] std::optional<element> zero() const noexcept {
      return _data->zero;
    }

    [[nodiscard]] bool has_labels() const noexcept {
      return !_data->labels.empty();
    }

    [[nodiscard]] std::vector<std::string> const& labels() const noexcept {
      return _data->labels;
    }

    // Human-readable name; falls back to the index.
    [[nodiscard]] std::string label(element x) const {
      return _data->labels.empty() ? std::to_string(x) : _data->labels[x];
    }

    [[nodiscard]] Table table() const {
      Table t(order(), std::vector<element>(order()));
      for (element x = 0; x < order(); ++x) {
        for (element y = 0; y < order(); ++y) {
          t[x][y] = mul(x, y);
        }
      }
      return t;
    }

    [[nodiscard]] std::vector<element> const& star_map() const noexcept {
      return _data->star;
    }

    // Same handle, or structurally identical tables and involutions.
    [[nodiscard]] bool same_as(FiniteInvSemigroup const& other) const noexcept {
      return _data == other._data
             || (_data->mul == other._data->mul
                 && _data->star == other._data->star);
    }

    friend FiniteInvSemigroup build_from_table(Table const&,
                                               std::optional<std::vector<element>>,
                                               std::vector<std::string>,
                                               BuildOptions const&);

   private:
    explicit FiniteInvSemigroup(std::shared_ptr<Data const> data)
        : _data(std::move(data)) {}

    std::shared_ptr<Data const> _data;
  };

  namespace detail {
    inline std::string witness_label(std::vector<std::string> const& labels,
                                     element                         x) {
      return labels.empty() ? std::to_string(x)
                            : std::to_string(x) + "=" + labels[x];
    }
  }  // namespace detail

  // Validates mul as an inverse semigroup (associative, regular, idempotents
  // commute), derives the involution, and checks a supplied one against it.
  inline FiniteInvSemigroup build_from_table(Table const& mul,
                                             std::optional<std::vector<element>> star,
                                             std::vector<std::string> labels,
                                             BuildOptions const&      options) {
    std::size_t const n = mul.size();
    if (n == 0) {
      throw Error(ErrorKind::invalid_table, "empty multiplication table");
    }
    if (n > options.max_order) {
      throw Error(ErrorKind::size_limit,
                  "order " + std::to_string(n) + " exceeds maximum order "
                      + std::to_string(options.max_order));
    }
    for (element x = 0; x < n; ++x) {
      if (mul[x].size() != n) {
        throw Error(ErrorKind::invalid_table,
                    "row " + std::to_string(x) + " has length "
                        + std::to_string(mul[x].size()) + ", expected "
                        + std::to_string(n));
      }
      for (element y = 0; y < n; ++y) {
        if (mul[x][y] >= n) {
          throw Error(ErrorKind::invalid_table,
                      "entry out of range",
                      "(" + std::to_string(x) + "," + std::to_string(y) + ")");
        }
      }
    }
    if (!labels.empty() && labels.size() != n) {
      throw Error(ErrorKind::invalid_table,
                  "expected " + std::to_string(n) + " labels, got "
                      + std::to_string(labels.size()));
    }
    auto const w = [&labels](element x) {
      return detail::witness_label(labels, x);
    };

    for (element x = 0; x < n; ++x) {
      for (element y = 0; y < n; ++y) {
        element const xy = mul[x][y];
        for (element z = 0; z < n; ++z) {
          if (mul[xy][z] != mul[x][mul[y][z]]) {
            throw Error(ErrorKind::not_associative,
                        "(xy)z != x(yz)",
                        "(" + w(x) + ", " + w(y) + ", " + w(z) + ")");
          }
        }
      }
    }

    for (element x = 0; x < n; ++x) {
      bool regular = false;
      for (element y = 0; y < n && !regular; ++y) {
        regular = mul[mul[x][y]][x] == x;
      }
      if (!regular) {
        throw Error(ErrorKind::not_inverse,
                    "element has no generalized inverse",
                    w(x));
      }
    }

    std::vector<element> idempotents;
    for (element x = 0; x < n; ++x) {
      if (mul[x][x] == x) {
        idempotents.push_back(x);
      }
    }
    for (element e : idempotents) {
      for (element f : idempotents) {
        if (mul[e][f] != mul[f][e]) {
          throw Error(ErrorKind::not_inverse,
                      "idempotents do not commute",
                      "(" + w(e) + ", " + w(f) + ")");
        }
      }
    }

    std::vector<element> derived(n);
    for (element x = 0; x < n; ++x) {
      std::size_t count = 0;
      for (element y = 0; y < n; ++y) {
        if (mul[mul[x][y]][x] == x && mul[mul[y][x]][y] == y) {
          derived[x] = y;
          ++count;
        }
      }
      if (count != 1) {
        throw Error(ErrorKind::not_inverse,
                    "element has " + std::to_string(count) + " inverses",
                    w(x));
      }
    }

    if (star) {
      auto const& s = *star;
      if (s.size() != n) {
        throw Error(ErrorKind::star_mismatch,
                    "involution has length " + std::to_string(s.size())
                        + ", expected " + std::to_string(n));
      }
      for (element x = 0; x < n; ++x) {
        if (s[x] >= n) {
          throw Error(ErrorKind::star_mismatch, "involution out of range", w(x));
        }
        if (mul[mul[x][s[x]]][x] != x || mul[mul[s[x]][x]][s[x]] != s[x]) {
          throw Error(ErrorKind::star_mismatch,
                      "x x* x = x or x* x x* = x* fails",
                      w(x));
        }
        if (s[x] != derived[x]) {
          throw Error(ErrorKind::star_mismatch,
                      "supplied involution differs from the unique inverse",
                      w(x));
        }
      }
    }

    auto data         = std::make_shared<FiniteInvSemigroup::Data>();
    data->n           = n;
    data->star        = std::move(derived);
    data->idempotents = std::move(idempotents);
    data->labels      = std::move(labels);
    data->mul.resize(n * n);
    for (element x = 0; x < n; ++x) {
      std::copy(mul[x].begin(), mul[x].end(), data->mul.begin() + x * n);
    }
    data->source.resize(n);
    data->range.resize(n);
    data->is_idempotent.assign(n, 0);
    data->by_range.assign(n, {});
    for (element x = 0; x < n; ++x) {
      data->source[x] = mul[data->star[x]][x];
      data->range[x]  = mul[x][data->star[x]];
      data->by_range[data->range[x]].push_back(x);
    }
    for (element e : data->idempotents) {
      data->is_idempotent[e] = 1;
    }
    data->composable.resize(n * n);
    for (element x = 0; x < n; ++x) {
      for (element y = 0; y < n; ++y) {
        data->composable[x * n + y] = data->source[x] == data->range[y] ? 1 : 0;
      }
    }
    for (element e = 0; e < n && !data->identity; ++e) {
      bool ok = true;
      for (element x = 0; x < n && ok; ++x) {
        ok = mul[e][x] == x && mul[x][e] == x;
      }
      if (ok) {
        data->identity = e;
      }
    }
    for (element z = 0; z < n && !data->zero; ++z) {
      bool ok = true;
      for (element x = 0; x < n && ok; ++x) {
        ok = mul[z][x] == z && mul[x][z] == z;
      }
      if (ok) {
        data->zero = z;
      }
    }
    return FiniteInvSemigroup(std::move(data));
  }

  inline std::vector<element> const& idempotents(FiniteInvSemigroup const& s) {
    return s.idempotents();
  }

  // e <= f iff ef = e, defined on idempotents only.
  inline bool natural_order(FiniteInvSemigroup const& s, element e, element f) {
    for (element x : {e, f}) {
      if (x >= s.order() || !s.is_idempotent(x)) {
        throw Error(ErrorKind::not_idempotent,
                    "natural order is taken between idempotents",
                    x < s.order() ? s.label(x) : std::to_string(x));
      }
    }
    return s.mul(e, f) == e;
  }

}  // namespace invsg
