#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wdist/linear_code.hpp"
#include "wdist/weight_distribution.hpp"

namespace wdist {

/// In-place Walsh-Hadamard butterfly: W <- H_k W with H_k the Sylvester
/// matrix. Stride j doubles from 1 to 2^{k-1}; each pair (u, u+j) with
/// (u & j) == 0 becomes (a+b, a-b). With threads > 1 the pairs of a single
/// stride level are split across workers; the result is bit-identical.
/// Throws LengthNotPowerOfTwo.
void fwht_in_place(std::span<std::int64_t> w, unsigned threads = 1);

/// Extended characteristic vector (0, chi_1, ..., chi_{2^k-1}).
std::vector<std::int64_t> extended_characteristic_vector(const CharacteristicVector& chi);

/// sum_u after[u]^2 == len * sum_u before[u]^2.
bool parseval_holds(std::span<const std::int64_t> before, std::span<const std::int64_t> after);

/// Weight distribution of a binary code from its characteristic vector:
/// after the transform, position u holds n - 2 w_u.
///
/// Throws ParityViolation when n - W[u] is odd or w_u falls outside [0, n],
/// and when W[0] != n.
WeightDistribution binary_weight_distribution(const CharacteristicVector& chi, unsigned threads = 1);

/// Same, on a caller-owned extended vector that is transformed in place.
/// `n` is the code length (sum of the counts).
WeightDistribution binary_weight_distribution_in_place(std::span<std::int64_t> extended, std::uint64_t n,
                                                       unsigned threads = 1);

}  // namespace wdist
