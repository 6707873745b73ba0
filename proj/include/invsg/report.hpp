// invsg - finite inverse semigroups and their restricted algebras

#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace invsg {

  // One verified claim. `anchor` states the property checked, or "plumbing"
  // for checks of the artifact itself.
  struct Check {
    Check() = default;
    Check(std::string id_, std::string anchor_) : id(std::move(id_)), anchor(std::move(anchor_)) {}

    std::string id;
    std::string anchor;
    bool        passed        = true;
    double      max_deviation = 0.0;
    std::string witness;

    // Record a deviation; the first one above tol becomes the witness.
    void observe(double deviation, double tol, std::string const& where) {
      if (deviation > max_deviation) {
        max_deviation = deviation;
      }
      if (!(deviation <= tol) && passed) {
        passed  = false;
        witness = where;
      }
    }

    void fail(std::string const& where) {
      if (passed) {
        passed  = false;
        witness = where;
      }
    }
  };

  struct VerificationReport {
    std::string        semigroup;
    std::string        suite;
    std::vector<Check> checks;
    double             wall_time_s = 0.0;

    [[nodiscard]] bool passed() const {
      return std::all_of(checks.begin(), checks.end(), [](Check const& c) { return c.passed; });
    }

    void sort_checks() {
      std::stable_sort(checks.begin(), checks.end(), [](Check const& a, Check const& b) { return a.id < b.id; });
    }
  };

}  // namespace invsg
