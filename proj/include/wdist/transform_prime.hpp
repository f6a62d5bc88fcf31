#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wdist/linear_code.hpp"
#include "wdist/weight_distribution.hpp"

namespace wdist {

/// The theta(p,k) x p array H of the staged transform.
///
/// Row i (1-based) of the level-l state is the row m_i of M_k^[chi](l):
/// entry u counts the chi-mass of the positions j whose inner product
/// with canonical column i equals u. Storage is 0-based and row-major;
/// the 1-based row numbering is used only by new_h.
class TransformState {
public:
    TransformState(std::uint32_t p, std::uint32_t k);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t k() const noexcept { return k_; }
    std::uint32_t level() const noexcept { return level_; }
    std::uint64_t rows() const noexcept { return rows_; }

    // 0-based row access
    std::span<std::uint32_t> row(std::uint64_t i) noexcept { return {cells_.data() + i * p_, p_}; }
    std::span<const std::uint32_t> row(std::uint64_t i) const noexcept { return {cells_.data() + i * p_, p_}; }
    const std::vector<std::uint32_t>& cells() const noexcept { return cells_; }

    std::vector<std::vector<std::uint32_t>> to_rows() const;

    void set_level(std::uint32_t l) noexcept { level_ = l; }

private:
    std::uint32_t p_;
    std::uint32_t k_;
    std::uint32_t level_ = 1;
    std::uint64_t rows_;
    std::vector<std::uint32_t> cells_;
};

/// Scalar additions performed, for the complexity instrumentation.
struct TransformStats {
    std::uint64_t additions = 0;
};

/// Level-1 state: row i is (0, chi_i, 0, ..., 0). Throws LengthMismatch.
TransformState init_state(const CharacteristicVector& chi);

/// out[(i + s) mod p] = in[i]. The left shift is s = p - 1.
std::vector<std::uint32_t> circular_shift_right(std::span<const std::uint32_t> row, std::uint64_t s);

/// One block update on rows r0+1 .. r (1-based), a block of p*theta0 + 1
/// rows made of p sub-blocks of theta0 rows plus a trailing single row:
///
///   Add0     rows of sub-block 1 gain lcs(H[r]);
///   LastRow  H[r][j] = sum of the first row of sub-block j;
///   AllRows  for each i the rows T[s] = H[r0 + s*theta0 + i] are replaced by
///            H[r0 + j*theta0 + i] = sum_s sigma^{j*s}(T[s]),  j = 0..p-1.
///
/// Throws IndexOutOfBlock if the bounds do not describe such a block.
void new_h(TransformState& state, std::uint64_t r0, std::uint64_t r, std::uint64_t theta0,
           TransformStats* stats = nullptr);

/// Moves the state from level l to l+1: walks the rows in blocks of
/// theta(p, l+1), applies new_h to each and skips the inactive rows that
/// separate them. Blocks are independent, so threads > 1 shares them out.
void advance_level(TransformState& state, TransformStats* stats = nullptr, unsigned threads = 1);

/// Runs advance_level until the state reaches level k; H = M_k^[chi].
void main_transform(TransformState& state, TransformStats* stats = nullptr, unsigned threads = 1);

/// w_i = n - H[i][0] for a completed state. Throws RowSumMismatch if a row
/// does not sum to n.
std::vector<std::uint64_t> weights_from_state(const TransformState& state, std::uint64_t n);

/// A_0 = 1 and A_j = (p-1) * #{i : w_i = j} for an odd prime p.
WeightDistribution prime_weight_distribution(const CharacteristicVector& chi, unsigned threads = 1,
                                             TransformStats* stats = nullptr);

}  // namespace wdist
