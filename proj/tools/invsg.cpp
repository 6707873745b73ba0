// invsg command line: generate, verify and inspect finite inverse semigroups.
//
// Exit codes: 0 pass, 1 verification failure, 2 input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <invsg/invsg.hpp>

namespace {

  using namespace invsg;
  using nlohmann::json;

  constexpr int exit_pass  = 0;
  constexpr int exit_fail  = 1;
  constexpr int exit_input = 2;

  struct Common {
    std::uint64_t          seed      = 7;
    std::size_t            trials    = 100;
    std::optional<double>  tol;
    std::size_t            max_order = 256;
    bool                   as_json   = false;

    [[nodiscard]] BuildOptions build() const {
      return BuildOptions{max_order};
    }
  };

  void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--seed", c.seed, "RNG seed")->capture_default_str();
    cmd->add_option("--trials", c.trials, "random trials per check")->capture_default_str();
    cmd->add_option("--tol", c.tol, "override every numeric tolerance");
    cmd->add_option("--max-order", c.max_order, "largest accepted semigroup order")->capture_default_str();
    auto* j = cmd->add_flag("--json", c.as_json, "machine-readable output");
    cmd->add_flag("--text{false}", c.as_json, "human-readable output (default)")->excludes(j);
  }

  void write_out(std::string const& text, std::string const& path) {
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw Error(ErrorKind::invalid_argument, "cannot write file", path);
    }
    out << text;
  }

  std::string format_double(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
  }

  std::string format_scalar(scalar c) {
    if (c.imag() == 0.0) {
      return format_double(c.real());
    }
    return "(" + format_double(c.real()) + (c.imag() < 0 ? "-" : "+") + format_double(std::abs(c.imag())) + "i)";
  }

  // Sparse text form, e.g. "d_1 + d_e".
  std::string format_element(AlgebraElement const& f) {
    std::string out;
    for (element x = 0; x < f.size(); ++x) {
      if (f[x] == scalar(0)) {
        continue;
      }
      if (!out.empty()) {
        out += " + ";
      }
      if (f[x] != scalar(1)) {
        out += format_scalar(f[x]) + "*";
      }
      out += "d_" + f.base().label(x);
    }
    return out.empty() ? "0" : out;
  }

  element parse_element(FiniteInvSemigroup const& s, std::string const& token) {
    for (element x = 0; x < s.order(); ++x) {
      if (s.has_labels() && s.label(x) == token) {
        return x;
      }
    }
    try {
      std::size_t used = 0;
      auto const  x    = std::stoull(token, &used);
      if (used == token.size() && x < s.order()) {
        return static_cast<element>(x);
      }
    } catch (std::exception const&) {
    }
    throw Error(ErrorKind::invalid_argument, "no such element", token);
  }

  std::vector<CorpusEntry> select_corpus(std::string const& selector, BuildOptions const& options) {
    if (selector == "default") {
      return default_corpus(options);
    }
    if (selector == "base") {
      return base_corpus(options);
    }
    std::vector<CorpusEntry> out;
    std::stringstream        in(selector);
    std::string              name;
    while (std::getline(in, name, ',')) {
      if (!name.empty()) {
        out.push_back({name, corpus_entry(name, options)});
      }
    }
    return out;
  }

  std::string check_text(Check const& c) {
    std::string line = std::string(c.passed ? "  [pass] " : "  [FAIL] ") + c.id + " : " + c.anchor
                       + "  (max deviation " + format_double(c.max_deviation) + ")";
    if (!c.passed) {
      line += "\n         witness: " + c.witness;
    }
    return line + "\n";
  }

  // gen ----------------------------------------------------------------------

  struct GenArgs {
    std::string family;
    std::size_t n          = 1;
    std::size_t group_order = 1;
    bool        adjoin     = false;
    bool        restricted = false;
    std::string out;
    std::size_t max_order  = 256;
  };

  int cmd_gen(GenArgs const& a) {
    BuildOptions const options{a.max_order};
    std::optional<FiniteInvSemigroup> s;
    if (a.family == "trivial") {
      s = gen_group(GroupKind::cyclic, 1, options);
    } else if (a.family == "cyclic") {
      s = gen_group(GroupKind::cyclic, a.n, options);
    } else if (a.family == "symmetric-group") {
      s = gen_group(GroupKind::symmetric, a.n, options);
    } else if (a.family == "chain") {
      s = gen_semilattice_chain(a.n, options);
    } else if (a.family == "symmetric-inverse") {
      s = gen_symmetric_inverse_monoid(a.n, options);
    } else {
      s = gen_brandt(gen_group(GroupKind::cyclic, a.group_order, options).table(), a.n, options);
    }
    if (a.adjoin) {
      s = adjoin_identity(*s, options);
    }
    if (a.restricted) {
      s = build_restricted_semigroup(*s, options).sr();
    }
    write_out(io::to_json(*s), a.out);
    return exit_pass;
  }

  // verify -------------------------------------------------------------------

  struct VerifyArgs {
    std::string file;
    std::string corpus;
    std::string suite = "all";
  };

  int cmd_verify(VerifyArgs const& a, Common const& c) {
    if (a.file.empty() == a.corpus.empty()) {
      throw Error(ErrorKind::invalid_argument, "give either a semigroup file or --corpus");
    }
    Suite const suite = a.suite == "axioms"  ? Suite::axioms
                        : a.suite == "algebra" ? Suite::algebra
                        : a.suite == "reps"    ? Suite::reps
                        : a.suite == "cstar"   ? Suite::cstar
                                               : Suite::all;
    SuiteOptions options;
    options.seed   = c.seed;
    options.trials = c.trials;
    options.tol    = c.tol;
    options.build  = c.build();

    std::vector<VerificationReport> reports;
    if (!a.file.empty()) {
      auto const doc = io::read_semigroup_document(io::parse_json(io::read_file(a.file), a.file));
      auto       r   = run_suites(std::filesystem::path(a.file).stem().string(), doc, suite, options);
      reports.insert(reports.end(), r.begin(), r.end());
    } else {
      for (auto const& entry : select_corpus(a.corpus, options.build)) {
        auto r = run_suites(entry.name, entry.semigroup, suite, options);
        if (!c.as_json) {
          for (auto const& report : r) {
            std::cout << entry.name << " / " << report.suite << ": " << (report.passed() ? "pass" : "FAIL") << " ("
                      << format_double(report.wall_time_s) << " s)\n";
            for (auto const& check : report.checks) {
              if (!check.passed) {
                std::cout << check_text(check);
              }
            }
          }
        }
        reports.insert(reports.end(), r.begin(), r.end());
      }
    }
    bool const passed = std::all_of(reports.begin(), reports.end(), [](auto const& r) { return r.passed(); });
    if (c.as_json) {
      json out{{"passed", passed}, {"seed", c.seed}, {"trials", c.trials}, {"reports", json::array()}};
      for (auto const& r : reports) {
        out["reports"].push_back(io::to_json(r));
      }
      std::cout << out.dump(2) << "\n";
    } else if (!a.file.empty()) {
      for (auto const& r : reports) {
        std::cout << r.semigroup << " / " << r.suite << ": " << (r.passed() ? "pass" : "FAIL") << "\n";
        for (auto const& check : r.checks) {
          std::cout << check_text(check);
        }
      }
    }
    if (!c.as_json) {
      std::cout << (passed ? "all checks passed" : "verification failed") << "\n";
    }
    return passed ? exit_pass : exit_fail;
  }

  // rep ----------------------------------------------------------------------

  struct RepArgs {
    std::string file;
    std::string which;
    std::string element_token;
    bool        check = false;
    std::string law   = "own";
  };

  int cmd_rep(RepArgs const& a, Common const& c) {
    auto const s = io::load_semigroup(a.file, c.build());
    std::optional<RestrictedSemigroup> r;
    std::vector<std::pair<std::string, Representation>> reps;
    auto add = [&](std::string const& name) {
      if (name == "lambda_r") {
        reps.emplace_back(name, lambda_r(s));
      } else if (name == "rho_r") {
        reps.emplace_back(name, rho_r(s));
      } else if (name == "lambda") {
        reps.emplace_back(name, lambda_full(s));
      } else {
        r = build_restricted_semigroup(s, c.build());
        reps.emplace_back(name, lambda_on_sr(*r));
      }
    };

    if (!a.check) {
      if (a.element_token.empty()) {
        throw Error(ErrorKind::invalid_argument, "rep needs --element or --check");
      }
      add(a.which.empty() ? "lambda_r" : a.which);
      auto const& pi = reps.front().second;
      element const x = parse_element(pi.base, a.element_token);
      if (c.as_json) {
        json out{{"representation", a.which}, {"element", x}, {"dim", pi.dim}, {"matrix", io::to_json(pi(x))}};
        std::cout << out.dump(2) << "\n";
      } else {
        auto const& m = pi(x);
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
          for (Eigen::Index j = 0; j < m.cols(); ++j) {
            std::cout << (j ? " " : "") << format_scalar(m(i, j));
          }
          std::cout << "\n";
        }
      }
      return exit_pass;
    }

    if (a.which.empty() || a.which == "all") {
      for (auto const* name : {"lambda_r", "rho_r", "lambda", "Lambda"}) {
        add(name);
      }
    } else {
      add(a.which);
    }
    MembershipTolerances tol;
    if (c.tol) {
      tol.algebraic   = *c.tol;
      tol.contraction = *c.tol;
    }
    bool ok  = true;
    json out = json::array();
    for (auto const& [name, pi] : reps) {
      RepresentationKind const law = a.law == "restricted" ? RepresentationKind::restricted
                                     : a.law == "full"     ? RepresentationKind::full
                                                           : pi.kind;
      auto const report = check_membership(pi, law, tol);
      ok                = ok && report.ok();
      json violations   = json::array();
      for (auto const& v : report.violations) {
        violations.push_back({{"kind", to_string(v.kind)},
                              {"x", pi.base.label(v.x)},
                              {"y", pi.base.label(v.y)},
                              {"deviation", v.deviation}});
      }
      out.push_back({{"representation", name},
                     {"law", law == RepresentationKind::restricted ? "restricted" : "full"},
                     {"ok", report.ok()},
                     {"max_operator_norm", report.max_operator_norm},
                     {"violations", violations}});
      if (!c.as_json) {
        std::cout << name << ": " << (report.ok() ? "member" : "NOT a member") << " ("
                  << (law == RepresentationKind::restricted ? "restricted" : "full") << " laws)\n";
        for (auto const& v : report.violations) {
          std::cout << "  " << to_string(v.kind) << " at (" << pi.base.label(v.x) << ", " << pi.base.label(v.y)
                    << "), deviation " << format_double(v.deviation) << "\n";
        }
      }
    }
    if (c.as_json) {
      std::cout << out.dump(2) << "\n";
    }
    return ok ? exit_pass : exit_fail;
  }

  // norm ---------------------------------------------------------------------

  struct NormArgs {
    std::string file;
    std::string p = "1";
    bool        cstar = false;
  };

  int cmd_norm(NormArgs const& a, Common const& c) {
    auto const doc =
        io::parse_function(io::read_file(a.file), std::filesystem::path(a.file).parent_path(), c.build());
    if (a.cstar) {
      // over S_r the report describes tau(f), with the quotient norm alongside
      AlgebraElement const g = doc.restricted ? tau(doc.f, *doc.restricted) : doc.f;
      NormReport report      = make_norm_report(g);
      if (doc.restricted) {
        report.quotient_norm = quotient_norm_cstar(doc.f, *doc.restricted);
      }
      std::cout << io::to_json(report).dump(2) << "\n";
      return exit_pass;
    }
    Lp const p   = a.p == "inf" ? Lp::inf : a.p == "2" ? Lp::two : Lp::one;
    double const v = norm(doc.f, p);
    if (c.as_json) {
      std::cout << json{{"p", a.p}, {"norm", v}}.dump(2) << "\n";
    } else {
      std::cout.precision(17);
      std::cout << v << "\n";
    }
    return exit_pass;
  }

  // quotient-check -----------------------------------------------------------

  struct QuotientArgs {
    std::string file;
    std::string corpus;
    std::size_t minimization_trials = 5;
  };

  int cmd_quotient_check(QuotientArgs const& a, Common const& c) {
    std::vector<CorpusEntry> entries;
    if (!a.file.empty()) {
      entries.push_back({std::filesystem::path(a.file).stem().string(), io::load_semigroup(a.file, c.build())});
    } else {
      entries = select_corpus(a.corpus.empty() ? "base" : a.corpus, c.build());
    }
    bool ok  = true;
    json out = json::array();
    for (auto const& entry : entries) {
      auto const r = build_restricted_semigroup(entry.semigroup, c.build());
      VerificationReport report{entry.name,
                                "quotient",
                                check_quotient_norm(r,
                                             c.trials,
                                             c.seed,
                                             a.minimization_trials,
                                             c.tol.value_or(1e-8),
                                             c.tol.value_or(1e-6)),
                                0.0};
      report.sort_checks();
      ok = ok && report.passed();
      out.push_back(io::to_json(report));
      if (!c.as_json) {
        std::cout << entry.name << ": " << (report.passed() ? "pass" : "FAIL") << "\n";
        for (auto const& check : report.checks) {
          std::cout << check_text(check);
        }
      }
    }
    if (c.as_json) {
      std::cout << out.dump(2) << "\n";
    }
    return ok ? exit_pass : exit_fail;
  }

  // witness-search -----------------------------------------------------------

  int cmd_witness_search(std::string const& corpus, Common const& c) {
    json out = json::array();
    for (auto const& entry : select_corpus(corpus, c.build())) {
      auto const& s = entry.semigroup;
      auto const  w = find_nonassoc_witness(s);
      if (w) {
        out.push_back({{"semigroup", entry.name},
                       {"associative", false},
                       {"triple", {s.label(w->x), s.label(w->y), s.label(w->z)}},
                       {"left", io::coeffs_json(w->left)},
                       {"right", io::coeffs_json(w->right)}});
      } else {
        out.push_back({{"semigroup", entry.name}, {"associative", true}, {"triples_checked", s.order() * s.order() * s.order()}});
      }
      if (!c.as_json) {
        std::cout << entry.name << ": ";
        if (w) {
          std::cout << "witness (" << s.label(w->x) << ", " << s.label(w->y) << ", " << s.label(w->z) << ")\n"
                    << "  (d_x o d_y) o d_z = " << format_element(w->left) << "\n"
                    << "  d_x o (d_y o d_z) = " << format_element(w->right) << "\n";
        } else {
          std::cout << "associative on all " << s.order() * s.order() * s.order() << " delta triples\n";
        }
      }
    }
    if (c.as_json) {
      std::cout << out.dump(2) << "\n";
    }
    return exit_pass;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite inverse semigroups, their restricted semigroup algebras and C*-norms"};
  app.require_subcommand(1);

  Common common;

  GenArgs gen;
  auto*   gen_cmd = app.add_subcommand("gen", "emit a semigroup as a JSON table");
  gen_cmd->add_option("--family", gen.family, "semigroup family")
      ->required()
      ->check(CLI::IsMember({"trivial", "cyclic", "symmetric-group", "chain", "symmetric-inverse", "brandt"}));
  gen_cmd->add_option("--n", gen.n, "size parameter")->capture_default_str();
  gen_cmd->add_option("--group-order", gen.group_order, "order of the cyclic structure group (brandt)")
      ->capture_default_str();
  gen_cmd->add_flag("--adjoin-identity", gen.adjoin, "adjoin an identity if there is none");
  gen_cmd->add_flag("--restricted", gen.restricted, "emit the restricted semigroup S_r");
  gen_cmd->add_option("--out,-o", gen.out, "output file (default stdout)");
  gen_cmd->add_option("--max-order", gen.max_order, "largest accepted semigroup order")->capture_default_str();

  VerifyArgs verify;
  auto*      verify_cmd = app.add_subcommand("verify", "run the verification suites");
  verify_cmd->add_option("file", verify.file, "semigroup JSON file");
  verify_cmd->add_option("--corpus", verify.corpus, "\"default\", \"base\" or comma-separated corpus names");
  verify_cmd->add_option("--suite", verify.suite, "suite to run")
      ->check(CLI::IsMember({"axioms", "algebra", "reps", "cstar", "all"}))
      ->capture_default_str();
  add_common(verify_cmd, common);

  RepArgs rep;
  auto*   rep_cmd = app.add_subcommand("rep", "print a representation matrix or check membership");
  rep_cmd->add_option("file", rep.file, "semigroup JSON file")->required();
  rep_cmd->add_option("--which", rep.which, "representation (default lambda_r; all four with --check)")
      ->check(CLI::IsMember({"lambda_r", "rho_r", "lambda", "Lambda", "all"}));
  rep_cmd->add_option("--element", rep.element_token, "element index or label");
  rep_cmd->add_flag("--check", rep.check, "run the membership checks; exit 1 on a violation");
  rep_cmd->add_option("--law", rep.law, "laws to check: those of the representation's own kind, restricted or full")
      ->check(CLI::IsMember({"own", "restricted", "full"}))
      ->capture_default_str();
  add_common(rep_cmd, common);

  NormArgs norm_args;
  auto*    norm_cmd = app.add_subcommand("norm", "norms of a function on S");
  norm_cmd->add_option("file", norm_args.file, "function JSON file")->required();
  norm_cmd->add_option("--p", norm_args.p, "l^p norm")->check(CLI::IsMember({"1", "2", "inf"}))->capture_default_str();
  norm_cmd->add_flag("--cstar", norm_args.cstar, "print the C*-norm report as JSON");
  add_common(norm_cmd, common);

  QuotientArgs quotient;
  auto*        quotient_cmd = app.add_subcommand("quotient-check", "compare the quotient norm over S_r with lambda_r");
  quotient_cmd->add_option("file", quotient.file, "semigroup JSON file (default: base corpus)");
  quotient_cmd->add_option("--corpus", quotient.corpus, "corpus names when no file is given");
  quotient_cmd->add_option("--minimization-trials", quotient.minimization_trials, "random f for the scalar search")
      ->capture_default_str();
  add_common(quotient_cmd, common);

  std::string witness_corpus = "default";
  auto*       witness_cmd    = app.add_subcommand("witness-search", "search for a non-associating delta triple");
  witness_cmd->add_option("--corpus", witness_corpus, "\"default\", \"base\" or comma-separated corpus names")
      ->capture_default_str();
  add_common(witness_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? exit_pass : exit_input;
  }

  try {
    if (*gen_cmd) {
      return cmd_gen(gen);
    }
    if (*verify_cmd) {
      return cmd_verify(verify, common);
    }
    if (*rep_cmd) {
      return cmd_rep(rep, common);
    }
    if (*norm_cmd) {
      return cmd_norm(norm_args, common);
    }
    if (*quotient_cmd) {
      return cmd_quotient_check(quotient, common);
    }
    return cmd_witness_search(witness_corpus, common);
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::verification_failure ? exit_fail : exit_input;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  }
}
