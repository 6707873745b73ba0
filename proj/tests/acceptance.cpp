// Acceptance run over the default corpus. One line per criterion:
//   [PASS] or [FAIL], the criterion number and title, then the measured
// deviations or the first witness. Failing criteria are reported, not hidden;
// the process exits 0 once every criterion has been evaluated and 1 only if
// the run itself breaks.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <invsg/invsg.hpp>

using namespace invsg;

namespace {

  constexpr std::uint64_t seed   = 7;
  constexpr std::size_t   trials = 100;

  struct Outcome {
    bool        passed = true;
    std::string detail;
  };

  // First failure wins the detail; worst deviation is tracked separately.
  struct Tally {
    bool        passed = true;
    double      worst  = 0.0;
    std::string witness;

    void observe(double deviation, double tol, std::string const& where) {
      worst = std::max(worst, deviation);
      if (!(deviation <= tol)) {
        fail(where);
      }
    }

    void expect(bool ok, std::string const& where) {
      if (!ok) {
        fail(where);
      }
    }

    void fail(std::string const& where) {
      if (passed) {
        passed  = false;
        witness = where;
      }
    }
  };

  std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
  }

  std::string at(std::string const& name, FiniteInvSemigroup const& s, std::initializer_list<element> xs) {
    std::string out = name + " (";
    bool        first = true;
    for (element x : xs) {
      out += (first ? "" : ", ") + s.label(x);
      first = false;
    }
    return out + ")";
  }

  std::vector<CorpusEntry> const& corpus() {
    static auto const c = default_corpus();
    return c;
  }

  std::vector<AlgebraElement> deltas(FiniteInvSemigroup const& s) {
    std::vector<AlgebraElement> out;
    for (element x = 0; x < s.order(); ++x) {
      out.push_back(AlgebraElement::delta(s, x));
    }
    return out;
  }

  // 1 -----------------------------------------------------------------------
  Outcome axioms() {
    Tally t;
    std::size_t triples = 0;
    auto validate = [&](std::string const& name, FiniteInvSemigroup const& s) {
      auto const n = s.order();
      for (element x = 0; x < n; ++x) {
        std::size_t inverses = 0;
        for (element y = 0; y < n; ++y) {
          if (s.mul(s.mul(x, y), x) == x && s.mul(s.mul(y, x), y) == y) {
            ++inverses;
            t.expect(y == s.star(x), at(name, s, {x}) + " inverse is not x*");
          }
          for (element z = 0; z < n; ++z) {
            t.expect(s.mul(s.mul(x, y), z) == s.mul(x, s.mul(y, z)), at(name, s, {x, y, z}) + " not associative");
          }
        }
        triples += n * n;
        t.expect(inverses == 1, at(name, s, {x}) + " has " + std::to_string(inverses) + " inverses");
      }
      try {
        build_from_table(s.table(), s.star_map());
      } catch (Error const& e) {
        t.fail(name + ": " + e.what());
      }
    };
    for (auto const& [name, s] : corpus()) {
      validate(name, s);
      validate(name + " S_r", build_restricted_semigroup(s).sr());
    }
    std::string rejection;
    try {
      build_from_table({{0, 1}, {0, 1}});
      t.fail("right-zero table accepted");
    } catch (Error const& e) {
      // both witness elements are idempotents that do not commute: 0.1 = 1, 1.0 = 0
      t.expect(e.kind() == ErrorKind::not_inverse && e.witness() == "(0, 1)",
               std::string("right-zero rejected with the wrong witness: ") + e.what());
      rejection = e.what();
    }
    return {t.passed,
            t.passed ? std::to_string(corpus().size() * 2) + " semigroups, " + std::to_string(triples)
                           + " triples; right-zero: " + rejection
                     : t.witness};
  }

  // 2 -----------------------------------------------------------------------
  Outcome dot_associativity() {
    Tally           exhaustive, random;
    std::size_t     triples = 0;
    std::mt19937_64 rng(seed);
    for (auto const& [name, s] : corpus()) {
      auto const d = deltas(s);
      auto const n = s.order();
      for (element x = 0; x < n; ++x) {
        for (element y = 0; y < n; ++y) {
          auto const xy = dot(d[x], d[y]);
          for (element z = 0; z < n; ++z) {
            exhaustive.observe(max_deviation(dot(xy, d[z]), dot(d[x], dot(d[y], d[z]))), 1e-12, at(name, s, {x, y, z}));
            ++triples;
          }
        }
      }
      for (std::size_t t = 0; t < trials; ++t) {
        auto const f = random_element(s, rng);
        auto const g = random_element(s, rng);
        auto const h = random_element(s, rng);
        random.observe(max_deviation(dot(dot(f, g), h), dot(f, dot(g, h))), 1e-12, name + " trial " + std::to_string(t));
      }
    }
    bool const ok = exhaustive.passed && random.passed;
    return {ok,
            ok ? std::to_string(triples) + " delta triples max dev " + sci(exhaustive.worst) + ", random max dev "
                     + sci(random.worst)
               : (exhaustive.passed ? random.witness : exhaustive.witness)};
  }

  // 3 -----------------------------------------------------------------------
  Outcome banach_star_laws() {
    Tally           star_delta, star_random, submult, positive;
    std::mt19937_64 rng(seed);
    for (auto const& [name, s] : corpus()) {
      auto const d = deltas(s);
      for (element x = 0; x < s.order(); ++x) {
        for (element y = 0; y < s.order(); ++y) {
          auto const xy = dot(d[x], d[y]);
          star_delta.observe(max_deviation(tilde(xy), dot(tilde(d[y]), tilde(d[x]))), 0.0, at(name, s, {x, y}));
          submult.observe(norm_1(xy) - norm_1(d[x]) * norm_1(d[y]), 0.0, at(name, s, {x, y}));
        }
      }
      for (std::size_t t = 0; t < trials; ++t) {
        auto const  f     = random_element(s, rng);
        auto const  g     = random_element(s, rng);
        auto const  fg    = dot(f, g);
        std::string where = name + " trial " + std::to_string(t);
        star_random.observe(max_deviation(tilde(fg), dot(tilde(g), tilde(f))), 1e-12, where);
        submult.observe(norm_1(fg) - norm_1(f) * norm_1(g), 1e-12, where);
        auto const p = random_nonnegative(s, rng);
        auto const q = random_nonnegative(s, rng);
        positive.observe(norm_1(dot(p, q)) - norm_1(conv(p, q)), 1e-12, where);
      }
    }
    bool const ok = star_delta.passed && star_random.passed && submult.passed && positive.passed;
    std::string const witness = !star_delta.passed    ? "tilde on deltas: " + star_delta.witness
                                : !star_random.passed ? "tilde: " + star_random.witness
                                : !submult.passed     ? "submultiplicativity: " + submult.witness
                                                      : "positivity: " + positive.witness;
    return {ok,
            ok ? "tilde exact on deltas, random max dev " + sci(star_random.worst) + "; ||f.g||_1 - ||f||_1||g||_1 <= "
                     + sci(submult.worst) + "; ||f.g||_1 - ||f*g||_1 <= " + sci(positive.worst)
               : witness};
  }

  // 4 -----------------------------------------------------------------------
  Outcome delta_lemma() {
    Tally       t;
    std::size_t pairs = 0;
    for (auto const& [name, s] : corpus()) {
      AlgebraElement const zero(s);
      for (element y = 0; y < s.order(); ++y) {
        auto const dy = AlgebraElement::delta(s, y);
        for (element e : s.idempotents()) {
          auto const de = AlgebraElement::delta(s, e);
          t.expect(dot(dy, de) == (s.mul(s.star(y), y) == e ? dy : zero), at(name, s, {y, e}) + " right");
          t.expect(dot(de, dy) == (s.mul(y, s.star(y)) == e ? dy : zero), at(name, s, {y, e}) + " left");
          ++pairs;
        }
      }
    }
    return {t.passed, t.passed ? std::to_string(pairs) + " (y, e) pairs, both equalities exact" : t.witness};
  }

  // 5 -----------------------------------------------------------------------
  Outcome local_units() {
    Tally           t, approx;
    std::size_t     subsets = 0;
    std::mt19937_64 rng(seed);
    for (auto const& [name, s] : corpus()) {
      auto const n = s.order();
      auto const d = deltas(s);

      auto units_of = [&](std::vector<element> const& F) {
        std::vector<element> out;
        for (element x : F) {
          out.push_back(s.mul(x, s.star(x)));
          out.push_back(s.mul(s.star(x), x));
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
      };
      auto sum_of = [&](std::vector<element> const& es) {
        AlgebraElement out(s);
        for (element e : es) {
          out[e] = 1.0;
        }
        return out;
      };
      std::vector<std::vector<element>> singleton_units(n);
      std::vector<AlgebraElement>       singleton_e;
      for (element g = 0; g < n; ++g) {
        singleton_units[g] = units_of({g});
        singleton_e.push_back(sum_of(singleton_units[g]));
      }

      auto laws = [&](std::vector<element> const& F) {
        ++subsets;
        std::string where = name + " F={";
        for (element x : F) {
          where += s.label(x) + ";";
        }
        where += "}";
        auto const iF = units_of(F);
        auto const eF = local_unit(s, F);
        t.expect(eF == sum_of(iF), where + " e_F");
        // (i)
        for (element x : F) {
          t.expect(dot(eF, d[x]) == d[x] && dot(d[x], eF) == d[x], where + " (i) at " + s.label(x));
        }
        // (ii) against every singleton G and against each G inside F
        for (element g = 0; g < n; ++g) {
          std::vector<element> both;
          std::set_intersection(iF.begin(), iF.end(), singleton_units[g].begin(), singleton_units[g].end(),
                                std::back_inserter(both));
          auto const expected = sum_of(both);
          t.expect(dot(eF, singleton_e[g]) == expected && dot(singleton_e[g], eF) == expected,
                   where + " (ii) with G={" + s.label(g) + "}");
        }
        // (iii)
        auto const     f = random_element(s, rng);
        AlgebraElement right(s), left(s), supported(s);
        for (element x = 0; x < n; ++x) {
          if (std::binary_search(iF.begin(), iF.end(), s.mul(s.star(x), x))) {
            right[x] = f[x];
          }
          if (std::binary_search(iF.begin(), iF.end(), s.mul(x, s.star(x)))) {
            left[x] = f[x];
          }
        }
        t.expect(dot(f, eF) == right && dot(eF, f) == left, where + " (iii)");
        // (iv)
        for (element x : F) {
          supported[x] = f[x];
        }
        t.expect(dot(supported, eF) == supported && dot(eF, supported) == supported, where + " (iv)");
      };

      for (element a = 0; a < n; ++a) {
        laws({a});
        for (element b = a + 1; b < n; ++b) {
          laws({a, b});
          for (element c = b + 1; c < n; ++c) {
            laws({a, b, c});
          }
        }
      }
      std::bernoulli_distribution coin(0.5);
      for (int r = 0; r < 20; ++r) {
        std::vector<element> F;
        for (element x = 0; x < n; ++x) {
          if (coin(rng)) {
            F.push_back(x);
          }
        }
        laws(F);
      }

      // approximate identity on geometrically decaying f
      for (int r = 0; r < 50; ++r) {
        auto f = random_element(s, rng);
        for (element x = 0; x < n; ++x) {
          f[x] *= std::pow(0.3, static_cast<double>((x * 7) % 13));
        }
        std::vector<element> by_mass(n);
        std::iota(by_mass.begin(), by_mass.end(), 0);
        std::stable_sort(by_mass.begin(), by_mass.end(), [&](element a, element b) { return std::abs(f[a]) > std::abs(f[b]); });
        for (double eps : {1e-1, 1e-3}) {
          std::vector<element> F;
          double               tail = norm_1(f);
          for (element x : by_mass) {
            if (tail < eps) {
              break;
            }
            F.push_back(x);
            tail -= std::abs(f[x]);
          }
          auto const   eF  = local_unit(s, F);
          double const err = std::max(norm_1(f - dot(f, eF)), norm_1(f - dot(eF, f)));
          approx.worst     = std::max(approx.worst, err / eps);
          approx.expect(err < eps, name + " f#" + std::to_string(r) + " eps=" + sci(eps));
        }
      }
    }
    bool const ok = t.passed && approx.passed;
    return {ok,
            ok ? std::to_string(subsets) + " subsets F, laws exact; approximation error / eps <= " + sci(approx.worst)
               : (t.passed ? approx.witness : t.witness)};
  }

  // 6 -----------------------------------------------------------------------
  Outcome l1_quotient() {
    Tally           hom, iso;
    std::mt19937_64 rng(seed);
    for (auto const& [name, s] : corpus()) {
      auto const  r  = build_restricted_semigroup(s);
      auto const& sr = r.sr();
      auto const  d  = deltas(sr);
      for (element x = 0; x < sr.order(); ++x) {
        for (element y = 0; y < sr.order(); ++y) {
          hom.expect(tau(conv(d[x], d[y]), r) == dot(tau(d[x], r), tau(d[y], r)), at(name + " S_r", sr, {x, y}));
        }
      }
      for (std::size_t t = 0; t < trials; ++t) {
        auto const f = random_element(sr, rng);
        // the minimum over c of sum_{x != 0} |f(x)| + |f(0) + c| is attained at c = -f(0)
        auto const m = l1_quotient_norm(f, r);
        AlgebraElement shifted = f;
        shifted[r.zero_index()] += m.minimizer;
        iso.observe(std::abs(norm_1(tau(f, r)) - m.value), 0.0, name + " trial " + std::to_string(t));
        iso.observe(std::abs(norm_1(shifted) - m.value), 0.0, name + " trial " + std::to_string(t));
        for (double c : {-1.0, -0.1, 0.1, 1.0}) {
          AlgebraElement other = shifted;
          other[r.zero_index()] += c;
          iso.expect(norm_1(other) >= m.value, name + " minimum beaten, trial " + std::to_string(t));
        }
      }
    }
    bool const ok = hom.passed && iso.passed;
    return {ok, ok ? "homomorphism exact on all delta pairs; isometry exact on random f" : (hom.passed ? iso.witness : hom.witness)};
  }

  // 7 -----------------------------------------------------------------------
  Outcome restricted_membership() {
    Tally  t;
    double max_norm = 0;
    for (auto const& [name, s] : corpus()) {
      for (auto const& [which, pi] : {std::pair{"lambda_r", lambda_r(s)}, std::pair{"rho_r", rho_r(s)}}) {
        auto const n = s.order();
        for (element x = 0; x < n; ++x) {
          t.expect(pi(s.star(x)) == pi(x).adjoint(), std::string(which) + " adjoint at " + at(name, s, {x}));
          Eigen::JacobiSVD<Eigen::MatrixXcd> svd(pi(x));
          double const sigma = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
          max_norm           = std::max(max_norm, sigma);
          t.expect(sigma <= 1.0 + 1e-9, std::string(which) + " not contractive at " + at(name, s, {x}));
          for (element y = 0; y < n; ++y) {
            LinearOperator const expected = s.composable(x, y) ? pi(s.mul(x, y)) : LinearOperator::Zero(pi.dim, pi.dim);
            t.expect(pi(x) * pi(y) == expected, std::string(which) + " multiplicativity at " + at(name, s, {x, y}));
          }
        }
      }
    }
    auto const  i2     = gen_symmetric_inverse_monoid(2);
    auto const  report = check_membership(lambda_full(i2), RepresentationKind::restricted);
    std::string lambda_witness;
    if (!report.has(ViolationKind::not_restricted_multiplicative)) {
      t.fail("lambda on I2 satisfies the restricted laws");
    } else {
      auto const& v  = report.violations.front();
      lambda_witness = std::string(to_string(v.kind)) + " at " + at("I2", i2, {v.x, v.y});
    }
    return {t.passed,
            t.passed ? "lambda_r and rho_r exact, max norm " + sci(max_norm) + "; lambda on I2: " + lambda_witness
                     : t.witness};
  }

  // 8 -----------------------------------------------------------------------
  Outcome inner_products() {
    Tally           left, right, lifted;
    std::size_t     unital = 0;
    std::mt19937_64 rng(seed);
    auto vec = [](AlgebraElement const& f) {
      Eigen::VectorXcd v(static_cast<Eigen::Index>(f.size()));
      for (element x = 0; x < f.size(); ++x) {
        v(static_cast<Eigen::Index>(x)) = f[x];
      }
      return v;
    };
    std::vector<std::string> failing;
    for (auto const& [name, s] : corpus()) {
      auto const lr = lambda_r(s);
      auto const rr = rho_r(s);
      for (std::size_t t = 0; t < trials; ++t) {
        auto const  xi    = random_element(s, rng);
        auto const  eta   = random_element(s, rng);
        auto const  phi   = random_element(s, rng);
        std::string where = name + " trial " + std::to_string(t);
        auto const  l     = dot(xi, tilde(eta));
        auto const  r     = dot(tilde(eta), xi);
        for (element x = 0; x < s.order(); ++x) {
          left.observe(std::abs(vec(eta).dot(lr(s.star(x)) * vec(xi)) - l[x]), 1e-10, where + " x=" + s.label(x));
          right.observe(std::abs(vec(eta).dot(rr(x) * vec(xi)) - r[x]), 1e-10, where + " x=" + s.label(x));
        }
        if (s.identity()) {
          scalar const lhs = vec(eta).dot(lift(rr, phi) * vec(xi));
          scalar const rhs = dot(phi, dot(check(xi), bar(eta)))[*s.identity()];
          double const dev = std::abs(lhs - rhs);
          lifted.observe(dev, 1e-10, where);
          if (dev > 1e-10 && (failing.empty() || failing.back() != name)) {
            failing.push_back(name);
          }
        }
      }
      unital += s.identity() ? 1 : 0;
    }
    bool const  ok = left.passed && right.passed && lifted.passed;
    std::string detail = "lambda_r identity max dev " + sci(left.worst) + ", rho_r identity max dev " + sci(right.worst)
                         + ", lifted rho_r identity at 1 over " + std::to_string(unital) + " unital semigroups max dev "
                         + sci(lifted.worst);
    if (!ok) {
      detail += "; first failure: " + (left.passed ? (right.passed ? lifted.witness : right.witness) : left.witness);
      if (!failing.empty()) {
        detail += "; lifted identity fails on";
        for (auto const& f : failing) {
          detail += " " + f;
        }
      }
    }
    return {ok, detail};
  }

  // 9 -----------------------------------------------------------------------
  Outcome faithfulness() {
    Tally t;
    for (auto const& [name, s] : corpus()) {
      auto const lr   = lambda_r(s);
      auto const rank = faithfulness_rank(lr, Product::dot, 1e-9);
      t.expect(rank == s.order(), name + " rank " + std::to_string(rank) + " of " + std::to_string(s.order()));
      auto const ss = semisimplicity(lr, 1e-9);
      t.expect(ss.semisimple(), name + " trace form rank " + std::to_string(ss.trace_form_rank) + " of "
                                    + std::to_string(ss.image_rank));
    }
    return {t.passed, t.passed ? "rank |S| and nondegenerate trace forms on all " + std::to_string(corpus().size()) : t.witness};
  }

  // 10 ----------------------------------------------------------------------
  Outcome compression() {
    Tally t;
    for (auto const& [name, s] : corpus()) {
      auto const r   = build_restricted_semigroup(s);
      auto const big = lambda_on_sr(r);
      auto const lr  = lambda_r(s);
      auto const n   = static_cast<Eigen::Index>(s.order());
      for (element x = 0; x < s.order(); ++x) {
        // Lambda(s) P_0 restricted to l2(S), P_0 the projection off delta_0
        LinearOperator m = big(x);
        m.col(n).setZero();
        t.expect(m.topLeftCorner(n, n) == lr(x) && m.row(n).isZero(0) , at(name, s, {x}));
      }
    }
    return {t.passed, t.passed ? "entrywise equality for every s" : t.witness};
  }

  // 11 ----------------------------------------------------------------------
  Outcome cstar_norms() {
    Tally           identity, ordering, cross;
    std::mt19937_64 rng(seed);
    for (auto const& [name, s] : corpus()) {
      auto const lr = lambda_r(s);
      for (std::size_t t = 0; t < trials; ++t) {
        auto const   f     = random_element(s, rng);
        double const nf    = norm_lambda_r(f, lr);
        double const nstar = norm_lambda_r(dot(tilde(f), f), lr);
        std::string  where = name + " trial " + std::to_string(t);
        identity.observe(std::abs(nstar - nf * nf) / (nf * nf), 1e-8, where);
        double const sigma = norm_sigma_r(f, lr);
        ordering.observe(std::max(nf - sigma, sigma - norm_1(f)), 1e-9, where);
      }
      for (int k = 0; k < 5; ++k) {
        auto const f     = random_element(s, rng);
        double const bound = norm_sigma_r(f, lr);
        for (int j = 0; j < 5; ++j) {
          auto const pi = random_sigma_r_member(s, rng);
          cross.observe(op_norm(lift(pi, f)) - bound, 1e-9, name + " f#" + std::to_string(k));
        }
      }
    }
    bool const ok = identity.passed && ordering.passed && cross.passed;
    return {ok,
            ok ? "C*-identity max rel dev " + sci(identity.worst) + "; ordering slack " + sci(ordering.worst)
                     + "; Sigma_r cross-check excess " + sci(cross.worst)
               : (!identity.passed ? identity.witness : !ordering.passed ? ordering.witness : cross.witness)};
  }

  // 12 ----------------------------------------------------------------------
  Outcome cstar_quotient() {
    Tally           exact, minimized;
    std::mt19937_64 rng(seed);
    for (auto const& [name, s] : corpus()) {
      auto const  r   = build_restricted_semigroup(s);
      auto const& sr  = r.sr();
      auto const  big = lambda_on_sr(r);
      auto const  lr  = lambda_r(s);
      auto measure = [&](AlgebraElement const& f, std::string const& where, bool minimize) {
        double const q = quotient_norm_cstar(f, r, big);
        exact.observe(norm_deviation(q, norm_lambda_r(tau(f, r), lr)), 1e-8, where);
        if (minimize) {
          minimized.observe(norm_deviation(quotient_norm_by_minimization(f, r).value, q), 1e-6, where);
        }
      };
      for (element x = 0; x < sr.order(); ++x) {
        measure(AlgebraElement::delta(sr, x), name + " delta_" + sr.label(x), x == 0);
      }
      for (std::size_t t = 0; t < trials; ++t) {
        measure(random_element(sr, rng), name + " trial " + std::to_string(t), t < 3);
      }
    }
    bool const ok = exact.passed && minimized.passed;
    return {ok,
            ok ? "max dev " + sci(exact.worst) + "; scalar minimization max dev " + sci(minimized.worst)
               : (exact.passed ? minimized.witness : exact.witness)};
  }

  // 13 ----------------------------------------------------------------------
  Outcome witness_search() {
    auto run = [] {
      std::string report;
      for (auto const& [name, s] : corpus()) {
        auto const w = find_nonassoc_witness(s);
        report += name + ":";
        if (w) {
          report += "(" + s.label(w->x) + "," + s.label(w->y) + "," + s.label(w->z) + ");";
        } else {
          report += "exhaustive;";
        }
      }
      return report;
    };
    std::string const first  = run();
    std::string const second = run();
    Tally             t;
    t.expect(first == second, "report differs between runs");

    // re-check every reported witness with a direct evaluation of the
    // order-relaxed product: sum over y with yy* <= x*x of f(xy) g(y*)
    std::size_t witnesses = 0, certified = 0;
    for (auto const& [name, s] : corpus()) {
      auto prod = [&s](std::vector<scalar> const& f, std::vector<scalar> const& g) {
        std::vector<scalar> out(s.order());
        for (element x = 0; x < s.order(); ++x) {
          element const d = s.mul(s.star(x), x);
          for (element y = 0; y < s.order(); ++y) {
            element const r = s.mul(y, s.star(y));
            if (s.mul(r, d) == r) {
              out[x] += f[s.mul(x, y)] * g[s.star(y)];
            }
          }
        }
        return out;
      };
      auto delta = [&s](element x) {
        std::vector<scalar> v(s.order());
        v[x] = 1.0;
        return v;
      };
      if (auto const w = find_nonassoc_witness(s)) {
        ++witnesses;
        auto const left  = prod(prod(delta(w->x), delta(w->y)), delta(w->z));
        auto const right = prod(delta(w->x), prod(delta(w->y), delta(w->z)));
        t.expect(left != right, name + " reported witness associates");
      } else {
        ++certified;
      }
    }
    t.expect(witnesses > 0, "no failing triple found anywhere");
    return {t.passed,
            t.passed ? std::to_string(witnesses) + " semigroups with a failing triple, " + std::to_string(certified)
                           + " certified associative; deterministic"
                     : t.witness};
  }

}  // namespace

int main() {
  struct Criterion {
    int                      number;
    char const*              title;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> const criteria{
      {1, "inverse-semigroup axioms", axioms},
      {2, "dot associativity", dot_associativity},
      {3, "Banach *-algebra laws", banach_star_laws},
      {4, "delta lemma", delta_lemma},
      {5, "local units and approximate identity", local_units},
      {6, "quotient by C delta_0 at the l1 level", l1_quotient},
      {7, "regular representations are restricted representations", restricted_membership},
      {8, "inner-product identities", inner_products},
      {9, "faithfulness and semisimplicity", faithfulness},
      {10, "compression identity", compression},
      {11, "C*-norms", cstar_norms},
      {12, "reduced C*-algebra of S as a quotient", cstar_quotient},
      {13, "non-associativity witness search", witness_search},
  };
  int  passed = 0;
  bool broken = false;
  for (auto const& c : criteria) {
    auto const start = std::chrono::steady_clock::now();
    Outcome    o;
    try {
      o = c.run();
    } catch (std::exception const& e) {
      o      = {false, std::string("error: ") + e.what()};
      broken = true;
    }
    double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    passed += o.passed ? 1 : 0;
    std::printf("[%s] %2d %s: %s (%.1f s)\n", o.passed ? "PASS" : "FAIL", c.number, c.title, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria pass\n", passed, criteria.size());
  return broken ? 1 : 0;
}
