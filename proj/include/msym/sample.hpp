#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "msym/relations.hpp"

namespace msym {

/// Seeded source of random cusps, symbols, generator instances and balanced
/// sums. Draws use `engine() % n` so streams are identical on every platform.
class Sampler {
 public:
  Sampler(const LabeledTree& tree, std::uint64_t seed) : tree_(tree), rng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  long long between(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// Cusp whose anchor lies at depth <= max_depth (max_depth >= 4).
  Cusp cusp(std::size_t max_depth);
  ModularSymbol symbol(std::size_t max_depth);
  /// A minimal vertex at depth <= max_depth.
  VertexAddress site(std::size_t max_depth);
  /// Random 2- or 3-tuple of ports at a random site, classified into its rule.
  TupleRule instance(std::size_t max_depth);

  struct SumOptions {
    std::size_t instances = 20;
    std::size_t cycles = 3;
    long long max_coeff = 3;
    std::size_t depth = 8;
  };
  /// Random integer combination of generator instances plus random closed
  /// cycles {c1,c2} + {c2,c3} + ... + {ck,c1}.
  FormalSum balanced_sum(const SumOptions& opts);
  FormalSum balanced_sum() { return balanced_sum(SumOptions{}); }

 private:
  const LabeledTree& tree_;
  std::mt19937_64 rng_;
};

/// Reasons the decomposition of `s` fails its contract; empty when sound.
std::vector<std::string> decomposition_violations(const LabeledTree& tree,
                                                  const ModularSymbol& s);

}  // namespace msym
