// invsg - finite inverse semigroups and their restricted algebras
//
// JSON formats.
//
// Semigroup:  {"identity": int?, "labels": [string]?, "mul": [[int]],
//              "order": n, "star": [int]?, "zero": int?}
// Function:   {"semigroup": <path or inline semigroup>, "coeffs": [[re, im]],
//              "restricted": bool?}
//
// mul[i][j] is the product of element i by element j. With "restricted":
// true the coefficients are indexed by the restricted semigroup S_r of the
// given semigroup (its elements followed by the adjoined zero).
//
// Emission is canonical: keys sorted, one multiplication-table row per line.

#pragma once

#include <json.hpp>

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "cstar.hpp"
#include "error.hpp"
#include "report.hpp"
#include "restricted.hpp"
#include "semigroup.hpp"

namespace invsg::io {

  using json = nlohmann::json;

  namespace detail {
    inline std::pair<std::size_t, std::size_t> line_column(std::string const& text, std::size_t byte) {
      std::size_t line = 1, column = 1;
      for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
          ++line;
          column = 1;
        } else {
          ++column;
        }
      }
      return {line, column};
    }
  }  // namespace detail

  // Parses JSON text, reporting syntax errors as ParseError with the line and
  // column in the witness.
  inline json parse_json(std::string const& text, std::string const& source = "<input>") {
    try {
      return json::parse(text);
    } catch (json::parse_error const& e) {
      // nlohmann reports the byte one past the offending character
      auto const [line, column] = detail::line_column(text, e.byte == 0 ? 0 : e.byte - 1);
      throw Error(ErrorKind::parse_error,
                  source + ": malformed JSON",
                  "line " + std::to_string(line) + ", column " + std::to_string(column));
    }
  }

  inline std::string read_file(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error(ErrorKind::parse_error, "cannot open file", path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }

  // The raw fields of a semigroup document, before validation.
  struct SemigroupDocument {
    Table                                mul;
    std::optional<std::vector<element>>  star;
    std::optional<element>               identity;
    std::optional<element>               zero;
    std::vector<std::string>             labels;
  };

  inline SemigroupDocument read_semigroup_document(json const& doc) {
    auto field_error = [](std::string const& what) {
      return Error(ErrorKind::parse_error, "semigroup document: " + what);
    };
    if (!doc.is_object()) {
      throw field_error("expected an object");
    }
    SemigroupDocument out;
    try {
      if (!doc.contains("mul")) {
        throw field_error("missing field \"mul\"");
      }
      out.mul = doc.at("mul").get<Table>();
      if (doc.contains("order") && doc.at("order").get<std::size_t>() != out.mul.size()) {
        throw field_error("\"order\" does not match the table size");
      }
      if (doc.contains("star")) {
        out.star = doc.at("star").get<std::vector<element>>();
      }
      if (doc.contains("identity")) {
        out.identity = doc.at("identity").get<element>();
      }
      if (doc.contains("zero")) {
        out.zero = doc.at("zero").get<element>();
      }
      if (doc.contains("labels")) {
        out.labels = doc.at("labels").get<std::vector<std::string>>();
      }
    } catch (json::exception const& e) {
      throw field_error(std::string("mistyped field: ") + e.what());
    }
    return out;
  }

  inline FiniteInvSemigroup build_semigroup(SemigroupDocument const& doc, BuildOptions const& options = {}) {
    auto s = build_from_table(doc.mul, doc.star, doc.labels, options);
    if (doc.identity && s.identity() != doc.identity) {
      throw Error(ErrorKind::invalid_table, "declared identity is not the identity", std::to_string(*doc.identity));
    }
    if (doc.zero && s.zero() != doc.zero) {
      throw Error(ErrorKind::invalid_table, "declared zero is not the zero", std::to_string(*doc.zero));
    }
    return s;
  }

  inline FiniteInvSemigroup parse_semigroup(std::string const& text, BuildOptions const& options = {}) {
    return build_semigroup(read_semigroup_document(parse_json(text)), options);
  }

  inline FiniteInvSemigroup load_semigroup(std::filesystem::path const& path, BuildOptions const& options = {}) {
    return build_semigroup(read_semigroup_document(parse_json(read_file(path), path.string())), options);
  }

  inline std::string to_json(FiniteInvSemigroup const& s) {
    std::string out = "{\n";
    if (s.identity()) {
      out += "  \"identity\": " + std::to_string(*s.identity()) + ",\n";
    }
    if (s.has_labels()) {
      out += "  \"labels\": " + json(s.labels()).dump() + ",\n";
    }
    out += "  \"mul\": [\n";
    for (element x = 0; x < s.order(); ++x) {
      std::vector<element> row(s.order());
      for (element y = 0; y < s.order(); ++y) {
        row[y] = s.mul(x, y);
      }
      out += "    " + json(row).dump() + (x + 1 < s.order() ? ",\n" : "\n");
    }
    out += "  ],\n";
    out += "  \"order\": " + std::to_string(s.order()) + ",\n";
    out += "  \"star\": " + json(s.star_map()).dump();
    if (s.zero()) {
      out += ",\n  \"zero\": " + std::to_string(*s.zero());
    }
    out += "\n}\n";
    return out;
  }

  struct FunctionDocument {
    AlgebraElement                     f;
    std::optional<RestrictedSemigroup> restricted;  // set when f lives on S_r
  };

  // `base_dir` resolves a relative semigroup path.
  inline FunctionDocument parse_function(std::string const&           text,
                                         std::filesystem::path const& base_dir = {},
                                         BuildOptions const&          options  = {}) {
    json const doc = parse_json(text);
    if (!doc.is_object() || !doc.contains("semigroup") || !doc.contains("coeffs")) {
      throw Error(ErrorKind::parse_error, "function document needs \"semigroup\" and \"coeffs\"");
    }
    auto const& ref = doc.at("semigroup");
    std::optional<FiniteInvSemigroup> s;
    if (ref.is_string()) {
      std::filesystem::path p = ref.get<std::string>();
      if (p.is_relative() && !base_dir.empty()) {
        p = base_dir / p;
      }
      s = load_semigroup(p, options);
    } else {
      s = build_semigroup(read_semigroup_document(ref), options);
    }
    bool restricted = false;
    std::vector<scalar> coeffs;
    try {
      restricted = doc.value("restricted", false);
      for (auto const& c : doc.at("coeffs")) {
        if (c.is_number()) {
          coeffs.emplace_back(c.get<double>(), 0.0);
        } else {
          auto const pair = c.get<std::vector<double>>();
          if (pair.size() != 2) {
            throw Error(ErrorKind::parse_error, "complex coefficients are [re, im] pairs");
          }
          coeffs.emplace_back(pair[0], pair[1]);
        }
      }
    } catch (json::exception const& e) {
      throw Error(ErrorKind::parse_error, std::string("mistyped coefficients: ") + e.what());
    }
    if (restricted) {
      auto r = build_restricted_semigroup(*s, options);
      AlgebraElement f(r.sr(), std::move(coeffs));
      return {std::move(f), std::move(r)};
    }
    return {AlgebraElement(*s, std::move(coeffs)), std::nullopt};
  }

  inline json coeffs_json(AlgebraElement const& f) {
    json out = json::array();
    for (auto const& c : f.coeffs()) {
      out.push_back({c.real(), c.imag()});
    }
    return out;
  }

  inline json to_json(LinearOperator const& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        row.push_back({m(i, j).real(), m(i, j).imag()});
      }
      rows.push_back(std::move(row));
    }
    return rows;
  }

  inline json to_json(NormReport const& r) {
    json out{{"l1", r.l1}, {"lambda_r_norm", r.lambda_r_norm}, {"sigma_r_norm", r.sigma_r_norm}};
    out["quotient_norm"] = r.quotient_norm ? json(*r.quotient_norm) : json(nullptr);
    return out;
  }

  inline json to_json(Check const& c) {
    return {{"id", c.id},
            {"anchor", c.anchor},
            {"passed", c.passed},
            {"max_deviation", c.max_deviation},
            {"witness", c.witness}};
  }

  inline json to_json(VerificationReport const& r) {
    json checks = json::array();
    for (auto const& c : r.checks) {
      checks.push_back(to_json(c));
    }
    return {{"semigroup", r.semigroup},
            {"suite", r.suite},
            {"passed", r.passed()},
            {"checks", std::move(checks)},
            {"wall_time_s", r.wall_time_s}};
  }

}  // namespace invsg::io
