#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wdist/linear_code.hpp"

namespace wdist {

// Dense 0/1 matrices used only to cross-check the staged transform against
// its product-of-sparse-factors form; never on the production path.
inline constexpr std::uint64_t kDenseVerifierLimit = 4096;

class DenseMatrix {
public:
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::uint8_t at(std::size_t r, std::size_t c) const noexcept { return a_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::uint8_t v) noexcept { a_[r * cols_ + c] = v; }

    // copies `block` with its top-left corner at (r, c)
    void place(std::size_t r, std::size_t c, const DenseMatrix& block);

    std::vector<std::int64_t> apply(std::span<const std::int64_t> x) const;

    bool operator==(const DenseMatrix&) const = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint8_t> a_;
};

enum class FactorKind { ShiftPower, Selector, Identity, Composite };

struct FactorMatrix {
    FactorKind kind;
    DenseMatrix matrix;
};

FactorMatrix identity_factor(std::size_t n);
/// P^e, P the p x p right circular shift; P^{-1} = P^{p-1}.
FactorMatrix shift_factor(std::uint32_t p, std::int64_t e);
/// E_j: row j is all ones, the rest zero.
FactorMatrix selector_factor(std::uint32_t p, std::uint32_t j);

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

/// T_{k,l}, 2 <= l <= k, of size p*theta(p,k). Throws TooLargeForDenseVerifier.
FactorMatrix transform_factor(std::uint32_t p, std::uint32_t k, std::uint32_t l);

/// Flattened rows of M_k^[chi](1): (0, chi_1, 0, ..., 0 | 0, chi_2, 0, ...).
std::vector<std::int64_t> flattened_initial_state(const CharacteristicVector& chi);

/// T_{k,k} ... T_{k,2} applied to the flattened level-1 state, compared
/// entrywise with the flattened output of main_transform. Throws
/// TooLargeForDenseVerifier past kDenseVerifierLimit.
bool verify_factorization(const CharacteristicVector& chi);

}  // namespace wdist
