// invsg - finite inverse semigroups and their restricted algebras
//
// Error type shared by every module. Each failure carries a kind and, where
// one exists, a witness naming the offending elements.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace invsg {

  enum class ErrorKind {
    not_associative,
    not_inverse,
    star_mismatch,
    invalid_table,
    size_limit,
    invalid_group_table,
    not_idempotent,
    base_mismatch,
    no_convergence,
    verification_failure,
    parse_error,
    invalid_argument
  };

  inline char const* to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::not_associative: return "NotAssociative";
      case ErrorKind::not_inverse: return "NotInverse";
      case ErrorKind::star_mismatch: return "StarMismatch";
      case ErrorKind::invalid_table: return "InvalidTable";
      case ErrorKind::size_limit: return "SizeLimit";
      case ErrorKind::invalid_group_table: return "InvalidGroupTable";
      case ErrorKind::not_idempotent: return "NotIdempotent";
      case ErrorKind::base_mismatch: return "BaseMismatch";
      case ErrorKind::no_convergence: return "NoConvergence";
      case ErrorKind::verification_failure: return "VerificationFailure";
      case ErrorKind::parse_error: return "ParseError";
      case ErrorKind::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
  }

  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& message, std::string witness = {})
        : std::runtime_error(compose(kind, message, witness)),
          _kind(kind),
          _witness(std::move(witness)) {}

    [[nodiscard]] ErrorKind kind() const noexcept {
      return _kind;
    }

    [[nodiscard]] std::string const& witness() const noexcept {
      return _witness;
    }

   private:
    static std::string compose(ErrorKind          kind,
                               std::string const& message,
                               std::string const& witness) {
      std::string out = std::string("[") + to_string(kind) + "] " + message;
      if (!witness.empty()) {
        out += " (witness: " + witness + ")";
      }
      return out;
    }

    ErrorKind   _kind;
    std::string _witness;
  };

}  // namespace invsg
