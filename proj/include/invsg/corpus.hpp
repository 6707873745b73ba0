// invsg - finite inverse semigroups and their restricted algebras
//
// The default instance corpus: small groups, chains, symmetric inverse
// monoids and B_2 with an identity adjoined, optionally followed by the
// restricted semigroup of each.

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "generators.hpp"
#include "restricted.hpp"
#include "semigroup.hpp"

namespace invsg {

  struct CorpusEntry {
    std::string        name;
    FiniteInvSemigroup semigroup;
  };

  inline std::vector<CorpusEntry> base_corpus(BuildOptions const& options = {}) {
    Table const trivial{{0}};
    return {
        {"trivial", gen_group(GroupKind::cyclic, 1, options)},
        {"Z2", gen_group(GroupKind::cyclic, 2, options)},
        {"Z4", gen_group(GroupKind::cyclic, 4, options)},
        {"S3", gen_group(GroupKind::symmetric, 3, options)},
        {"chain2", gen_semilattice_chain(2, options)},
        {"chain3", gen_semilattice_chain(3, options)},
        {"chain4", gen_semilattice_chain(4, options)},
        {"I1", gen_symmetric_inverse_monoid(1, options)},
        {"I2", gen_symmetric_inverse_monoid(2, options)},
        {"I3", gen_symmetric_inverse_monoid(3, options)},
        {"B2^1", adjoin_identity(gen_brandt(trivial, 2, options), options)},
    };
  }

  // Base corpus followed by "<name>_r" for each restricted semigroup.
  inline std::vector<CorpusEntry> default_corpus(BuildOptions const& options = {}) {
    auto corpus = base_corpus(options);
    auto const n = corpus.size();
    for (std::size_t i = 0; i < n; ++i) {
      corpus.push_back({corpus[i].name + "_r", build_restricted_semigroup(corpus[i].semigroup, options).sr()});
    }
    return corpus;
  }

  inline FiniteInvSemigroup corpus_entry(std::string_view name, BuildOptions const& options = {}) {
    for (auto& entry : default_corpus(options)) {
      if (entry.name == name) {
        return entry.semigroup;
      }
    }
    throw Error(ErrorKind::invalid_argument, "unknown corpus entry", std::string(name));
  }

}  // namespace invsg
