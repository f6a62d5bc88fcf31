#pragma once

#include <cstdint>

#include "wdist/linear_code.hpp"
#include "wdist/weight_distribution.hpp"

namespace wdist {

// Desk-scale bound on q^k for exhaustive enumeration.
inline constexpr std::uint64_t kBruteforceLimit = std::uint64_t{1} << 24;

/// Exact weight distribution by enumerating all q^k messages.
///
/// Messages are numbered in base p over the F_p-basis {x^i * row_j} of the
/// code (i < m, j < k), digit t = j*m + i; stepping the counter adds one
/// basis codeword per changed digit. The message space is split into
/// `threads` contiguous ranges whose histograms are merged, so the result
/// does not depend on `threads`. Throws TooLarge past kBruteforceLimit.
WeightDistribution bruteforce_weight_distribution(const GeneratorMatrix& g, unsigned threads = 1);

/// Histogram contribution of messages [begin, end) in the numbering above.
/// The returned distribution is partial (its total is end - begin).
WeightDistribution bruteforce_weight_range(const GeneratorMatrix& g, std::uint64_t begin, std::uint64_t end);

}  // namespace wdist
