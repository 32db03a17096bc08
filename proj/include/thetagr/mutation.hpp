#pragma once

// Sign mutations of coordinate data, and whether the structural checks notice them.

#include <cstdint>
#include <string>
#include <vector>

#include "thetagr/coordalg.hpp"
#include "thetagr/graded.hpp"

namespace thetagr {

/// Products whose matrix is nonzero; flipping a zero matrix changes nothing.
std::vector<ProductKey> nonzero_products(const CoordinateData& data);

/// Copy of `data` with the product `key` negated.
CoordinateData flip_sign(const CoordinateData& data, const ProductKey& key);

struct MutationOutcome {
  ProductKey key;
  std::size_t jacobi_violations = 0;
  bool jacobi_antisymmetric = true;
  /// Structural checks that fail more often than on the unmutated data.
  std::vector<std::string> new_failures;
  bool detected() const { return jacobi_violations > 0 || !jacobi_antisymmetric || !new_failures.empty(); }
};

struct MutationOptions {
  std::size_t count = 10;  // 0 means every nonzero product
  std::uint64_t seed = kDefaultSeed;
  JacobiMode jacobi = JacobiMode::Sampled;
  std::size_t samples = 5000;
};

/// Flips `count` distinct nonzero products chosen by `seed`, one at a time.
std::vector<MutationOutcome> run_mutations(const CoordinateData& data, const MutationOptions& opt);

}  // namespace thetagr
