// invsg - finite inverse semigroups and their restricted algebras
//
// Verification suites: every structural claim about S, S_r, the restricted
// algebra, its regular representations and C*-norms, checked exhaustively on
// deltas and on seeded random elements. Each check states the property it
// verifies.

#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "cstar.hpp"
#include "error.hpp"
#include "io.hpp"
#include "report.hpp"
#include "representations.hpp"
#include "restricted.hpp"
#include "semigroup.hpp"

namespace invsg {

  enum class Suite { axioms, algebra, reps, cstar, all };

  struct SuiteOptions {
    std::uint64_t         seed   = 7;
    std::size_t           trials = 100;
    std::optional<double> tol;  // overrides every numeric tolerance when set
    BuildOptions          build;

    [[nodiscard]] double pick(double fallback) const {
      return tol.value_or(fallback);
    }
  };

  namespace detail {
    inline std::string pair_label(FiniteInvSemigroup const& s, element x, element y) {
      return "(" + s.label(x) + ", " + s.label(y) + ")";
    }

    inline std::string triple_label(FiniteInvSemigroup const& s, element x, element y, element z) {
      return "(" + s.label(x) + ", " + s.label(y) + ", " + s.label(z) + ")";
    }

    inline std::vector<AlgebraElement> deltas(FiniteInvSemigroup const& s) {
      std::vector<AlgebraElement> out;
      for (element x = 0; x < s.order(); ++x) {
        out.push_back(AlgebraElement::delta(s, x));
      }
      return out;
    }

    inline bool is_group(FiniteInvSemigroup const& s) {
      return s.idempotents().size() == 1 && s.identity().has_value();
    }

    // sum of delta_s over s whose chosen idempotent lies in i(F)
    inline AlgebraElement filtered(AlgebraElement const& f,
                                   std::vector<element> const& units,
                                   bool by_source) {
      AlgebraElement out(f.base());
      for (element s = 0; s < f.size(); ++s) {
        element const e = by_source ? f.base().source(s) : f.base().range(s);
        if (std::binary_search(units.begin(), units.end(), e)) {
          out[s] = f[s];
        }
      }
      return out;
    }
  }  // namespace detail

  inline std::vector<Check> axiom_checks(FiniteInvSemigroup const& s, SuiteOptions const& options) {
    auto const n = s.order();
    Check axioms{"axioms-inverse-semigroup", "(xy)z = x(yz), x x* x = x, x* x x* = x*"};
    for (element x = 0; x < n; ++x) {
      if (s.mul(s.mul(x, s.star(x)), x) != x || s.mul(s.mul(s.star(x), x), s.star(x)) != s.star(x)) {
        axioms.fail(s.label(x));
      }
      for (element y = 0; y < n; ++y) {
        for (element z = 0; z < n; ++z) {
          if (s.mul(s.mul(x, y), z) != s.mul(x, s.mul(y, z))) {
            axioms.fail(detail::triple_label(s, x, y, z));
          }
        }
      }
    }
    Check involution{"axioms-star-involution", "x** = x, (xy)* = y* x*"};
    for (element x = 0; x < n; ++x) {
      if (s.star(s.star(x)) != x) {
        involution.fail(s.label(x));
      }
      for (element y = 0; y < n; ++y) {
        if (s.star(s.mul(x, y)) != s.mul(s.star(y), s.star(x))) {
          involution.fail(detail::pair_label(s, x, y));
        }
      }
    }
    Check ranges{"axioms-idempotents-are-ranges", "E = {x : x^2 = x} = {s s* : s in S}"};
    {
      std::vector<element> from_ranges;
      for (element x = 0; x < n; ++x) {
        from_ranges.push_back(s.range(x));
      }
      std::sort(from_ranges.begin(), from_ranges.end());
      from_ranges.erase(std::unique(from_ranges.begin(), from_ranges.end()), from_ranges.end());
      if (from_ranges != s.idempotents()) {
        ranges.fail("idempotent set differs from {s s*}");
      }
    }
    Check semilattice{"axioms-idempotents-commutative", "E is a commutative subsemigroup"};
    for (element e : s.idempotents()) {
      for (element f : s.idempotents()) {
        if (s.mul(e, f) != s.mul(f, e) || !s.is_idempotent(s.mul(e, f))) {
          semilattice.fail(detail::pair_label(s, e, f));
        }
      }
    }
    Check order{"axioms-natural-order", "e <= f iff ef = e is a partial order on E"};
    for (element e : s.idempotents()) {
      if (!natural_order(s, e, e)) {
        order.fail("reflexivity at " + s.label(e));
      }
      for (element f : s.idempotents()) {
        if (e != f && natural_order(s, e, f) && natural_order(s, f, e)) {
          order.fail("antisymmetry at " + detail::pair_label(s, e, f));
        }
        for (element g : s.idempotents()) {
          if (natural_order(s, e, f) && natural_order(s, f, g) && !natural_order(s, e, g)) {
            order.fail("transitivity at " + detail::triple_label(s, e, f, g));
          }
        }
      }
    }
    Check restricted{"axioms-restricted-semigroup", "S_r = S u {0} with x . y is an inverse semigroup"};
    Check groupoid{"axioms-groupoid", "S under the restricted product is a groupoid"};
    Check embedding{"axioms-restricted-embedding", "embed(x) . embed(y) = embed(xy) if x*x = yy*, else 0"};
    if (auto bad = check_groupoid_laws(s)) {
      groupoid.fail(*bad);
    }
    try {
      auto const  r  = build_restricted_semigroup(s, options.build);
      auto const& sr = r.sr();
      element const z = r.zero_index();
      if (sr.star(z) != z || sr.zero() != z) {
        embedding.fail("adjoined 0 is not a self-adjoint zero");
      }
      for (element x = 0; x < n; ++x) {
        if (r.project(r.embed(x)) != x) {
          embedding.fail("embed/project at " + s.label(x));
        }
        for (element y = 0; y < n; ++y) {
          element const expected = s.composable(x, y) ? r.embed(s.mul(x, y)) : z;
          if (sr.mul(r.embed(x), r.embed(y)) != expected) {
            embedding.fail(detail::pair_label(s, x, y));
          }
        }
      }
    } catch (Error const& e) {
      restricted.fail(e.what());
      embedding.fail("restricted semigroup unavailable");
    }
    return {axioms, involution, ranges, semilattice, order, restricted, groupoid, embedding};
  }

  inline std::vector<Check> algebra_checks(FiniteInvSemigroup const& s, SuiteOptions const& options) {
    auto const         n      = s.order();
    auto const         deltas = detail::deltas(s);
    double const       tol    = options.pick(1e-12);
    std::mt19937_64    rng(options.seed);
    std::vector<Check> out;

    Check assoc_d{"dot-associativity-deltas", "(f . g) . h = f . (g . h) on all delta triples"};
    for (element x = 0; x < n; ++x) {
      for (element y = 0; y < n; ++y) {
        auto const xy = dot(deltas[x], deltas[y]);
        for (element z = 0; z < n; ++z) {
          assoc_d.observe(max_deviation(dot(xy, deltas[z]), dot(deltas[x], dot(deltas[y], deltas[z]))),
                          tol,
                          detail::triple_label(s, x, y, z));
        }
      }
    }
    out.push_back(assoc_d);

    Check assoc_r{"dot-associativity-random", "(f . g) . h = f . (g . h)"};
    Check formulas{"dot-two-formulas", "sum_{x*x = yy*} f(xy) g(y*) = sum_{st = x, x*x = t*t} f(s) g(t)"};
    Check composable{"dot-composable-factorizations", "f . g = sum over st = x with s*s = tt* of f(s) g(t)"};
    Check star_r{"tilde-anti-multiplicative", "(f . g)~ = g~ . f~"};
    Check submult{"l1-submultiplicative", "||f . g||_1 <= ||f||_1 ||g||_1"};
    Check positive{"positivity-comparison", "||f . g||_1 <= ||f * g||_1 for f, g >= 0"};
    Check involution{"tilde-isometric-involution", "f~~ = f, ||f~||_1 = ||f||_1"};
    for (element x = 0; x < n; ++x) {
      for (element y = 0; y < n; ++y) {
        auto const where = detail::pair_label(s, x, y);
        formulas.observe(max_deviation(dot(deltas[x], deltas[y]), dot_factorized(deltas[x], deltas[y])), 0.0, where);
        composable.observe(max_deviation(dot(deltas[x], deltas[y]), dot_composable(deltas[x], deltas[y])), 0.0, where);
        star_r.observe(max_deviation(tilde(dot(deltas[x], deltas[y])), dot(tilde(deltas[y]), tilde(deltas[x]))),
                       0.0,
                       where);
      }
    }
    for (std::size_t t = 0; t < options.trials; ++t) {
      std::string const where = "trial=" + std::to_string(t) + ", seed=" + std::to_string(options.seed);
      auto const f = random_element(s, rng);
      auto const g = random_element(s, rng);
      auto const h = random_element(s, rng);
      assoc_r.observe(max_deviation(dot(dot(f, g), h), dot(f, dot(g, h))), tol, where);
      formulas.observe(max_deviation(dot(f, g), dot_factorized(f, g)), tol, where);
      composable.observe(max_deviation(dot(f, g), dot_composable(f, g)), tol, where);
      star_r.observe(max_deviation(tilde(dot(f, g)), dot(tilde(g), tilde(f))), tol, where);
      submult.observe(std::max(0.0, norm_1(dot(f, g)) - norm_1(f) * norm_1(g)), tol, where);
      involution.observe(std::max(max_deviation(tilde(tilde(f)), f), std::abs(norm_1(tilde(f)) - norm_1(f))),
                         tol,
                         where);
      auto const p = random_nonnegative(s, rng);
      auto const q = random_nonnegative(s, rng);
      positive.observe(std::max(0.0, norm_1(dot(p, q)) - norm_1(conv(p, q))), tol, where);
    }
    out.insert(out.end(), {assoc_r, formulas, composable, star_r, submult, positive, involution});

    if (detail::is_group(s)) {
      Check group{"dot-equals-conv-in-groups", "f . g = f * g when S is a group"};
      for (std::size_t t = 0; t < options.trials; ++t) {
        auto const f = random_element(s, rng);
        auto const g = random_element(s, rng);
        group.observe(max_deviation(dot(f, g), conv(f, g)), tol, "trial=" + std::to_string(t));
      }
      out.push_back(group);
    }

    Check lemma{"delta-idempotent-lemma", "d_y . d_e = d_y iff y*y = e, d_e . d_y = d_y iff yy* = e, else 0"};
    AlgebraElement const zero(s);
    for (element y = 0; y < n; ++y) {
      for (element e : s.idempotents()) {
        auto const& right_expected = s.source(y) == e ? deltas[y] : zero;
        auto const& left_expected  = s.range(y) == e ? deltas[y] : zero;
        auto const  where          = detail::pair_label(s, y, e);
        lemma.observe(max_deviation(dot(deltas[y], deltas[e]), right_expected), 0.0, where);
        lemma.observe(max_deviation(dot(deltas[e], deltas[y]), left_expected), 0.0, where);
      }
    }
    out.push_back(lemma);

    Check units{"local-unit-laws", "e_F . d_s = d_s . e_F = d_s (s in F), e_F . e_G = sum over i(F) n i(G), "
                                   "f . e_F and e_F . f filter by s*s, ss* in i(F)"};
    auto check_subset = [&](std::vector<element> const& subset, std::vector<element> const& other) {
      std::string const where = [&] {
        std::string w = "F={";
        for (element x : subset) {
          w += s.label(x) + " ";
        }
        return w + "}";
      }();
      auto const unit = local_unit(s, subset);
      auto const iF   = support_idempotents(s, subset);
      for (element x : subset) {
        units.observe(max_deviation(dot(unit, deltas[x]), deltas[x]), 0.0, where);
        units.observe(max_deviation(dot(deltas[x], unit), deltas[x]), 0.0, where);
      }
      auto const iG = support_idempotents(s, other);
      std::vector<element> both;
      std::set_intersection(iF.begin(), iF.end(), iG.begin(), iG.end(), std::back_inserter(both));
      AlgebraElement expected(s);
      for (element e : both) {
        expected[e] = 1.0;
      }
      auto const other_unit = local_unit(s, other);
      units.observe(max_deviation(dot(unit, other_unit), expected), 0.0, where);
      units.observe(max_deviation(dot(other_unit, unit), expected), 0.0, where);
      auto const f = random_element(s, rng);
      units.observe(max_deviation(dot(f, unit), detail::filtered(f, iF, true)), tol, where);
      units.observe(max_deviation(dot(unit, f), detail::filtered(f, iF, false)), tol, where);
      AlgebraElement supported(s);
      for (element x : subset) {
        supported[x] = f[x];
      }
      units.observe(max_deviation(dot(supported, unit), supported), tol, where);
      units.observe(max_deviation(dot(unit, supported), supported), tol, where);
    };
    std::uniform_int_distribution<element> any(0, n - 1);
    for (element a = 0; a < n; ++a) {
      check_subset({a}, {any(rng)});
      for (element b = a + 1; b < n; ++b) {
        check_subset({a, b}, {a});
        for (element c = b + 1; c < n; ++c) {
          check_subset({a, b, c}, {c, any(rng)});
        }
      }
    }
    for (int t = 0; t < 20; ++t) {
      std::vector<element> subset, other;
      for (element x = 0; x < n; ++x) {
        if (rng() % 2 == 0) {
          subset.push_back(x);
        }
        if (rng() % 3 == 0) {
          other.push_back(x);
        }
      }
      check_subset(subset, other);
    }
    out.push_back(units);

    Check approx{"approximate-identity", "||f - f . e_F||_1 < eps and ||f - e_F . f||_1 < eps once F carries all "
                                         "but eps of ||f||_1"};
    for (std::size_t t = 0; t < std::max<std::size_t>(1, options.trials / 2); ++t) {
      auto f = random_element(s, rng);
      for (element x = 0; x < n; ++x) {
        f[x] *= std::pow(0.5, static_cast<double>(x % 12));
      }
      std::vector<element> by_mass(n);
      std::iota(by_mass.begin(), by_mass.end(), 0);
      std::stable_sort(by_mass.begin(), by_mass.end(), [&f](element a, element b) {
        return std::abs(f[a]) > std::abs(f[b]);
      });
      for (double eps : {1e-1, 1e-3}) {
        std::vector<element> subset;
        double               tail = norm_1(f);
        for (element x : by_mass) {
          if (tail < eps) {
            break;
          }
          subset.push_back(x);
          tail -= std::abs(f[x]);
        }
        auto const unit  = local_unit(s, subset);
        double const err = std::max(norm_1(f - dot(f, unit)), norm_1(f - dot(unit, f)));
        approx.max_deviation = std::max(approx.max_deviation, err);
        if (!(err < eps)) {
          approx.fail("trial=" + std::to_string(t) + ", eps=" + std::to_string(eps));
        }
      }
    }
    out.push_back(approx);

    Check hom{"tau-homomorphism", "tau(d_x *_{S_r} d_y) = tau(d_x) . tau(d_y)"};
    Check kernel{"tau-kernel-surjective", "tau(d_0) = 0, tau(embed(g)) = g"};
    Check iso{"tau-quotient-isometry", "||tau(f)||_1 = min_c ||f + c d_0||_1 at c = -f(0)"};
    try {
      auto const  r  = build_restricted_semigroup(s, options.build);
      auto const& sr = r.sr();
      auto const  sr_deltas = detail::deltas(sr);
      for (element x = 0; x < sr.order(); ++x) {
        for (element y = 0; y < sr.order(); ++y) {
          hom.observe(max_deviation(tau(conv(sr_deltas[x], sr_deltas[y]), r),
                                    dot(tau(sr_deltas[x], r), tau(sr_deltas[y], r))),
                      0.0,
                      detail::pair_label(sr, x, y));
        }
      }
      kernel.observe(norm_inf(tau(sr_deltas[r.zero_index()], r)), 0.0, "d_0");
      for (std::size_t t = 0; t < options.trials; ++t) {
        auto const g = random_element(s, rng);
        kernel.observe(max_deviation(tau(embed(g, r), r), g), 0.0, "trial=" + std::to_string(t));
        auto const f = random_element(sr, rng);
        auto const m = l1_quotient_norm(f, r);
        iso.observe(std::abs(norm_1(tau(f, r)) - m.value), 0.0, "trial=" + std::to_string(t));
        iso.observe(std::abs(m.minimizer + f[r.zero_index()]), 0.0, "minimizer, trial=" + std::to_string(t));
      }
    } catch (Error const& e) {
      hom.fail(e.what());
    }
    out.insert(out.end(), {hom, kernel, iso});
    return out;
  }

  inline std::vector<Check> rep_checks(FiniteInvSemigroup const& s, SuiteOptions const& options) {
    std::vector<Check> out;
    auto const         n  = s.order();
    auto const         lr = lambda_r(s);
    auto const         rr = rho_r(s);
    auto const         lf = lambda_full(s);

    auto membership = [&](std::string id, std::string anchor, Representation const& pi, RepresentationKind law) {
      Check      c{std::move(id), std::move(anchor)};
      auto const report = check_membership(pi, law);
      c.max_deviation   = report.max_operator_norm;
      if (!report.ok()) {
        auto const& v = report.violations.front();
        c.fail(std::string(to_string(v.kind)) + " at " + detail::pair_label(s, v.x, v.y));
      }
      return c;
    };
    out.push_back(membership("rep-lambda-r-in-sigma-r",
                             "lambda_r is a contractive restricted *-representation",
                             lr,
                             RepresentationKind::restricted));
    out.push_back(membership("rep-rho-r-in-sigma-r",
                             "rho_r is a contractive restricted *-representation",
                             rr,
                             RepresentationKind::restricted));
    out.push_back(
        membership("rep-lambda-in-sigma", "lambda is a contractive *-representation", lf, RepresentationKind::full));

    Check partial{"rep-lambda-r-partial-isometries", "lambda_r(x) lambda_r(x)* lambda_r(x) = lambda_r(x)"};
    for (element x = 0; x < n; ++x) {
      if (!is_partial_isometry(lr(x))) {
        partial.fail(s.label(x));
      }
    }
    out.push_back(partial);

    out.push_back(verify_lambda_identity(s, options.trials, options.seed, options.pick(1e-10)));
    if (s.identity()) {
      auto rho = verify_rho_identity(s, options.trials, options.seed, options.pick(1e-10));
      out.insert(out.end(), rho.begin(), rho.end());
    }

    Check lift_hom{"rep-lift-homomorphism", "lift(pi, f . g) = lift(pi, f) lift(pi, g), lift(pi, f~) = lift(pi, f)*"};
    std::mt19937_64 rng(options.seed);
    for (std::size_t t = 0; t < options.trials; ++t) {
      auto const f = random_element(s, rng);
      auto const g = random_element(s, rng);
      for (auto const* pi : {&lr, &rr}) {
        LinearOperator const lf_ = lift(*pi, f);
        double const d1 = (lift(*pi, dot(f, g)) - lf_ * lift(*pi, g)).cwiseAbs().maxCoeff();
        double const d2 = (lift(*pi, tilde(f)) - lf_.adjoint()).cwiseAbs().maxCoeff();
        lift_hom.observe(std::max(d1, d2), options.pick(1e-10), "trial=" + std::to_string(t));
      }
    }
    out.push_back(lift_hom);

    Check faithful{"rep-lambda-r-faithful", "rank of f -> lift(lambda_r, f) is |S|"};
    std::size_t const rank_r = faithfulness_rank(lr, Product::dot);
    if (rank_r != n) {
      faithful.fail("rank " + std::to_string(rank_r) + " of " + std::to_string(n));
    }
    out.push_back(faithful);
    Check faithful_full{"rep-lambda-faithful", "rank of f -> lift(lambda, f) is |S|"};
    std::size_t const rank_f = faithfulness_rank(lf, Product::conv);
    if (rank_f != n) {
      faithful_full.fail("rank " + std::to_string(rank_f) + " of " + std::to_string(n));
    }
    out.push_back(faithful_full);

    Check semisimple{"rep-semisimple", "lift(lambda_r, l1_r(S)) is a *-algebra with nondegenerate trace forms"};
    auto const ss = semisimplicity(lr);
    semisimple.max_deviation = std::max(ss.product_residual, ss.adjoint_residual);
    if (!ss.semisimple()) {
      semisimple.fail("image rank " + std::to_string(ss.image_rank) + ", trace form rank "
                      + std::to_string(ss.trace_form_rank) + ", hermitian form rank "
                      + std::to_string(ss.hermitian_form_rank));
    }
    out.push_back(semisimple);

    Check compression{"rep-compression-identity", "lambda_r(s) = Lambda(s) P_0 on l2_0(S_r) = l2(S)"};
    Check correspondence{"rep-sigma-r-equals-sigma-0", "Sigma_r(S) = {pi in Sigma(S_r) : pi(0) = 0}"};
    try {
      auto const r = build_restricted_semigroup(s, options.build);
      compression.observe(compression_deviation(r), 0.0, "max over s in S");
      auto const up = sigma_r_to_sigma0(lr, r);
      if (!is_member_sigma(up).ok()) {
        correspondence.fail("extension of lambda_r is not a *-representation of S_r");
      }
      auto const down = sigma0_to_sigma_r(up, r);
      if (down.mats != lr.mats || !is_member_sigma_r(down).ok()) {
        correspondence.fail("restriction does not recover lambda_r");
      }
      if (!is_member_sigma(lambda_on_sr(r)).ok()) {
        correspondence.fail("Lambda is not a *-representation of S_r");
      }
    } catch (Error const& e) {
      compression.fail(e.what());
      correspondence.fail(e.what());
    }
    out.insert(out.end(), {compression, correspondence});
    return out;
  }

  inline std::vector<Check> cstar_checks(FiniteInvSemigroup const& s, SuiteOptions const& options) {
    std::vector<Check> out;
    auto const         lr = lambda_r(s);
    std::mt19937_64    rng(options.seed);
    Check cstar{"cstar-identity", "||f~ . f||_lambda_r = ||f||_lambda_r^2"};
    Check ordering{"cstar-norm-ordering", "||f||_lambda_r <= ||f||_sigma_r <= ||f||_1"};
    for (element x = 0; x < s.order(); ++x) {
      auto const report = make_norm_report(AlgebraElement::delta(s, x));
      if (!report.ordered(options.pick(1e-9))) {
        ordering.fail("delta_" + s.label(x));
      }
    }
    for (std::size_t t = 0; t < options.trials; ++t) {
      auto const   f  = random_element(s, rng);
      double const nf = norm_lambda_r(f, lr);
      double const nn = norm_lambda_r(dot(tilde(f), f), lr);
      cstar.observe(std::abs(nn - nf * nf) / std::max(1e-300, nf * nf), options.pick(1e-8), "trial=" + std::to_string(t));
      NormReport report{norm_1(f), nf, norm_sigma_r(f, lr), std::nullopt};
      if (!report.ordered(options.pick(1e-9))) {
        ordering.fail("trial=" + std::to_string(t));
      }
    }
    out.insert(out.end(), {cstar, ordering});

    Check cross{"cstar-sigma-r-cross-check", "||lift(pi, f)|| <= ||f||_sigma_r for random pi in Sigma_r"};
    std::size_t const functions = std::max<std::size_t>(1, options.trials / 20);
    for (std::size_t t = 0; t < functions; ++t) {
      auto const f = random_element(s, rng);
      auto const c = sigma_r_cross_check(f, 5, options.seed + t, options.pick(1e-9));
      cross.observe(c.max_deviation, options.pick(1e-9), c.witness.empty() ? "f=" + std::to_string(t) : c.witness);
    }
    out.push_back(cross);

    try {
      auto const r      = build_restricted_semigroup(s, options.build);
      auto       checks = check_quotient_norm(r, options.trials, options.seed, 3, options.pick(1e-8), options.pick(1e-6));
      out.insert(out.end(), checks.begin(), checks.end());
    } catch (Error const& e) {
      Check failed{"quotient-cstar", "C*_lambda_r(S) = C*_Lambda(S_r) / C d_0"};
      failed.fail(e.what());
      out.push_back(failed);
    }
    return out;
  }

  inline std::vector<VerificationReport> run_suites(std::string const&         name,
                                                    FiniteInvSemigroup const&  s,
                                                    Suite                      suite,
                                                    SuiteOptions const&        options) {
    std::vector<VerificationReport> out;
    auto run = [&](char const* suite_name, auto&& body) {
      auto const         start = std::chrono::steady_clock::now();
      VerificationReport report{name, suite_name, body(s, options)};
      report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      report.sort_checks();
      out.push_back(std::move(report));
    };
    if (suite == Suite::axioms || suite == Suite::all) {
      run("axioms", axiom_checks);
    }
    if (suite == Suite::algebra || suite == Suite::all) {
      run("algebra", algebra_checks);
    }
    if (suite == Suite::reps || suite == Suite::all) {
      run("reps", rep_checks);
    }
    if (suite == Suite::cstar || suite == Suite::all) {
      run("cstar", cstar_checks);
    }
    return out;
  }

  // Validation of an unvalidated document. A table that is not an inverse
  // semigroup yields a single failed axioms report carrying the witness.
  inline std::vector<VerificationReport> run_suites(std::string const&            name,
                                                    io::SemigroupDocument const& doc,
                                                    Suite                         suite,
                                                    SuiteOptions const&           options) {
    std::optional<FiniteInvSemigroup> s;
    try {
      s = io::build_semigroup(doc, options.build);
    } catch (Error const& e) {
      if (e.kind() == ErrorKind::size_limit || e.kind() == ErrorKind::invalid_table) {
        throw;
      }
      Check c{"axioms-inverse-semigroup", "(xy)z = x(yz), x x* x = x, x* x x* = x*"};
      c.fail(e.what());
      return {VerificationReport{name, "axioms", {c}, 0.0}};
    }
    return run_suites(name, *s, suite, options);
  }

}  // namespace invsg
