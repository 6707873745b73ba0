// invsg - finite inverse semigroups and their restricted algebras
//
// Instance families: symmetric inverse monoids, cyclic and symmetric groups,
// semilattices, Brandt semigroups, and identity adjunction.

#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "semigroup.hpp"

namespace invsg {

  // Partial injective map on {0, ..., n-1}. Composition is that of functions:
  // (p * q)(i) = p(q(i)).
  class PartialInjection {
   public:
    static constexpr std::size_t undefined = std::numeric_limits<std::size_t>::max();

    PartialInjection(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> const& pairs)
        : _images(n, undefined) {
      std::vector<char> hit(n, 0);
      for (auto [point, image] : pairs) {
        if (point >= n || image >= n) {
          throw Error(ErrorKind::invalid_argument, "point outside ground set");
        }
        if (_images[point] != undefined || hit[image]) {
          throw Error(ErrorKind::invalid_argument, "map is not injective or not a function");
        }
        _images[point] = image;
        hit[image]     = 1;
      }
    }

    [[nodiscard]] std::size_t degree() const noexcept {
      return _images.size();
    }

    [[nodiscard]] std::size_t operator()(std::size_t point) const {
      return _images.at(point);
    }

    [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> pairs() const {
      std::vector<std::pair<std::size_t, std::size_t>> out;
      for (std::size_t i = 0; i < _images.size(); ++i) {
        if (_images[i] != undefined) {
          out.emplace_back(i, _images[i]);
        }
      }
      return out;
    }

    [[nodiscard]] std::size_t rank() const noexcept {
      return static_cast<std::size_t>(
          std::count_if(_images.begin(), _images.end(), [](std::size_t v) { return v != undefined; }));
    }

    [[nodiscard]] PartialInjection compose(PartialInjection const& inner) const {
      PartialInjection out(degree());
      for (std::size_t i = 0; i < degree(); ++i) {
        std::size_t const mid = inner._images[i];
        out._images[i]        = mid == undefined ? undefined : _images[mid];
      }
      return out;
    }

    [[nodiscard]] PartialInjection inverse() const {
      PartialInjection out(degree());
      for (std::size_t i = 0; i < degree(); ++i) {
        if (_images[i] != undefined) {
          out._images[_images[i]] = i;
        }
      }
      return out;
    }

    // Images of 1..n in one-line notation, "-" where undefined: "[2,-]".
    [[nodiscard]] std::string label() const {
      std::string out = "[";
      for (std::size_t i = 0; i < degree(); ++i) {
        if (i != 0) {
          out += ",";
        }
        out += _images[i] == undefined ? std::string("-") : std::to_string(_images[i] + 1);
      }
      return out + "]";
    }

    auto operator<=>(PartialInjection const&) const = default;

   private:
    explicit PartialInjection(std::size_t n) : _images(n, undefined) {}

    std::vector<std::size_t> _images;
  };

  // All partial injections on n points ordered by rank (descending) then
  // lexicographically, so the identity is element 0 and the empty map is last.
  inline std::vector<PartialInjection> enumerate_partial_injections(std::size_t n) {
    std::vector<PartialInjection> out;
    std::vector<std::size_t>      images(n, 0);  // 0 = undefined, k = point k-1
    while (true) {
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      std::vector<char>                                used(n, 0);
      bool                                             injective = true;
      for (std::size_t i = 0; i < n && injective; ++i) {
        if (images[i] != 0) {
          injective = !used[images[i] - 1];
          used[images[i] - 1] = 1;
          pairs.emplace_back(i, images[i] - 1);
        }
      }
      if (injective) {
        out.emplace_back(n, pairs);
      }
      std::size_t i = n;
      while (i > 0 && images[i - 1] == n) {
        images[--i] = 0;
      }
      if (i == 0) {
        break;
      }
      ++images[i - 1];
    }
    std::stable_sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
      if (a.rank() != b.rank()) {
        return a.rank() > b.rank();
      }
      return a.pairs() < b.pairs();
    });
    return out;
  }

  namespace detail {
    template <typename T>
    FiniteInvSemigroup from_elements(std::vector<T> const& elems,
                                     BuildOptions const&   options,
                                     auto&&                multiply,
                                     auto&&                invert,
                                     auto&&                name) {
      if (elems.size() > options.max_order) {
        throw Error(ErrorKind::size_limit,
                    "order " + std::to_string(elems.size()) + " exceeds maximum order "
                        + std::to_string(options.max_order));
      }
      std::map<T, element> index;
      for (element i = 0; i < elems.size(); ++i) {
        index.emplace(elems[i], i);
      }
      Table                    mul(elems.size(), std::vector<element>(elems.size()));
      std::vector<element>     star(elems.size());
      std::vector<std::string> labels;
      for (element i = 0; i < elems.size(); ++i) {
        for (element j = 0; j < elems.size(); ++j) {
          mul[i][j] = index.at(multiply(elems[i], elems[j]));
        }
        star[i] = index.at(invert(elems[i]));
        labels.push_back(name(elems[i]));
      }
      return build_from_table(mul, star, std::move(labels), options);
    }

    inline std::size_t symmetric_inverse_order(std::size_t n) {
      // sum_k C(n,k)^2 k!
      std::size_t total = 0;
      for (std::size_t k = 0; k <= n; ++k) {
        std::size_t c = 1;
        for (std::size_t i = 0; i < k; ++i) {
          c = c * (n - i) / (i + 1);
        }
        std::size_t f = 1;
        for (std::size_t i = 2; i <= k; ++i) {
          f *= i;
        }
        total += c * c * f;
      }
      return total;
    }
  }  // namespace detail

  inline FiniteInvSemigroup gen_symmetric_inverse_monoid(std::size_t n, BuildOptions const& options = {}) {
    if (n < 1 || n > 4 || detail::symmetric_inverse_order(n) > options.max_order) {
      throw Error(ErrorKind::size_limit, "symmetric inverse monoid needs 1 <= n <= 4 within the order limit");
    }
    return detail::from_elements(
        enumerate_partial_injections(n),
        options,
        [](auto const& a, auto const& b) { return a.compose(b); },
        [](auto const& a) { return a.inverse(); },
        [](auto const& a) { return a.label(); });
  }

  enum class GroupKind { cyclic, symmetric };

  inline FiniteInvSemigroup gen_group(GroupKind kind, std::size_t n, BuildOptions const& options = {}) {
    if (n < 1) {
      throw Error(ErrorKind::invalid_argument, "group parameter must be positive");
    }
    if (kind == GroupKind::cyclic) {
      if (n > options.max_order) {
        throw Error(ErrorKind::size_limit, "cyclic group order exceeds maximum order");
      }
      Table                    mul(n, std::vector<element>(n));
      std::vector<std::string> labels;
      for (element a = 0; a < n; ++a) {
        for (element b = 0; b < n; ++b) {
          mul[a][b] = (a + b) % n;
        }
        labels.push_back(a == 0 ? "1" : a == 1 ? "g" : "g^" + std::to_string(a));
      }
      return build_from_table(mul, std::nullopt, std::move(labels), options);
    }
    std::size_t order = 1;
    for (std::size_t i = 2; i <= n && order <= options.max_order; ++i) {
      order *= i;
    }
    if (order > options.max_order) {
      throw Error(ErrorKind::size_limit, "symmetric group order exceeds maximum order");
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<PartialInjection> elems;
    do {
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t i = 0; i < n; ++i) {
        pairs.emplace_back(i, perm[i]);
      }
      elems.emplace_back(n, pairs);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return detail::from_elements(
        elems,
        options,
        [](auto const& a, auto const& b) { return a.compose(b); },
        [](auto const& a) { return a.inverse(); },
        [](auto const& a) { return a.label(); });
  }

  // Chain 1 > e1 > ... > e_{n-1}; element 0 is the top (the identity).
  inline FiniteInvSemigroup gen_semilattice_chain(std::size_t n, BuildOptions const& options = {}) {
    if (n < 1) {
      throw Error(ErrorKind::invalid_argument, "chain length must be positive");
    }
    if (n > options.max_order) {
      throw Error(ErrorKind::size_limit, "chain length exceeds maximum order");
    }
    Table                    mul(n, std::vector<element>(n));
    std::vector<std::string> labels;
    for (element a = 0; a < n; ++a) {
      for (element b = 0; b < n; ++b) {
        mul[a][b] = std::max(a, b);
      }
      labels.push_back(a == 0 ? "1" : n == 2 ? "e" : "e" + std::to_string(a));
    }
    return build_from_table(mul, std::nullopt, std::move(labels), options);
  }

  // Semilattice from an explicit meet table.
  inline FiniteInvSemigroup gen_semilattice(Table const& meet, BuildOptions const& options = {}) {
    auto s = build_from_table(meet, std::nullopt, {}, options);
    for (element a = 0; a < s.order(); ++a) {
      if (!s.is_idempotent(a)) {
        throw Error(ErrorKind::invalid_table, "meet table has a non-idempotent element", std::to_string(a));
      }
    }
    return s;
  }

  namespace detail {
    inline std::vector<element> validate_group_table(Table const& g) {
      std::size_t const m = g.size();
      if (m == 0) {
        throw Error(ErrorKind::invalid_group_table, "empty group table");
      }
      for (auto const& row : g) {
        if (row.size() != m || std::any_of(row.begin(), row.end(), [m](element v) { return v >= m; })) {
          throw Error(ErrorKind::invalid_group_table, "group table is not a square table over its elements");
        }
      }
      for (element a = 0; a < m; ++a) {
        for (element b = 0; b < m; ++b) {
          for (element c = 0; c < m; ++c) {
            if (g[g[a][b]][c] != g[a][g[b][c]]) {
              throw Error(ErrorKind::invalid_group_table, "group table is not associative");
            }
          }
        }
      }
      std::optional<element> unit;
      for (element e = 0; e < m && !unit; ++e) {
        bool ok = true;
        for (element a = 0; a < m && ok; ++a) {
          ok = g[e][a] == a && g[a][e] == a;
        }
        if (ok) {
          unit = e;
        }
      }
      if (!unit) {
        throw Error(ErrorKind::invalid_group_table, "group table has no identity");
      }
      std::vector<element> inv(m);
      for (element a = 0; a < m; ++a) {
        auto it = std::find_if(g[a].begin(), g[a].end(), [&](element v) { return v == *unit; });
        element const b = static_cast<element>(it - g[a].begin());
        if (it == g[a].end() || g[b][a] != *unit) {
          throw Error(ErrorKind::invalid_group_table, "element without inverse", std::to_string(a));
        }
        inv[a] = b;
      }
      return inv;
    }
  }  // namespace detail

  // Brandt semigroup B(G, n): triples (i, g, j) with 1 <= i, j <= n, plus a
  // zero (last index). (i,g,j)(k,h,l) = (i,gh,l) if j == k, else 0.
  inline FiniteInvSemigroup gen_brandt(Table const& group, std::size_t n, BuildOptions const& options = {}) {
    auto const        inv = detail::validate_group_table(group);
    std::size_t const m   = group.size();
    if (n < 1) {
      throw Error(ErrorKind::invalid_argument, "Brandt index set must be nonempty");
    }
    std::size_t const order = n * n * m + 1;
    if (order > options.max_order) {
      throw Error(ErrorKind::size_limit, "Brandt semigroup order exceeds maximum order");
    }
    element const zero   = order - 1;
    auto const    encode = [&](std::size_t i, element g, std::size_t j) { return (i * m + g) * n + j; };
    Table                    mul(order, std::vector<element>(order, zero));
    std::vector<element>     star(order, zero);
    std::vector<std::string> labels(order, "0");
    for (std::size_t i = 0; i < n; ++i) {
      for (element g = 0; g < m; ++g) {
        for (std::size_t j = 0; j < n; ++j) {
          element const x = encode(i, g, j);
          star[x]         = encode(j, inv[g], i);
          labels[x]       = "(" + std::to_string(i + 1) + "," + std::to_string(g) + "," + std::to_string(j + 1) + ")";
          for (element h = 0; h < m; ++h) {
            for (std::size_t l = 0; l < n; ++l) {
              mul[x][encode(j, h, l)] = encode(i, group[g][h], l);
            }
          }
        }
      }
    }
    return build_from_table(mul, star, std::move(labels), options);
  }

  // S^1: returns s unchanged when it already has an identity, otherwise
  // appends a new identity element as the last index.
  inline FiniteInvSemigroup adjoin_identity(FiniteInvSemigroup const& s, BuildOptions const& options = {}) {
    if (s.identity()) {
      return s;
    }
    std::size_t const n = s.order();
    Table             mul(n + 1, std::vector<element>(n + 1));
    for (element x = 0; x <= n; ++x) {
      for (element y = 0; y <= n; ++y) {
        mul[x][y] = x == n ? y : y == n ? x : s.mul(x, y);
      }
    }
    std::vector<element> star = s.star_map();
    star.push_back(n);
    std::vector<std::string> labels;
    if (s.has_labels()) {
      labels = s.labels();
      labels.emplace_back("1");
    }
    return build_from_table(mul, star, std::move(labels), options);
  }

}  // namespace invsg
