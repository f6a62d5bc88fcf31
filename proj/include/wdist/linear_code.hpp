#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wdist/finite_field.hpp"

namespace wdist {

/// theta(p, k) = (p^k - 1) / (p - 1), the number of projective points of
/// PG(k-1, p). Throws Overflow when it does not fit in 63 bits.
std::uint64_t theta(std::uint64_t p, std::uint32_t k);

/// p^k, throwing Overflow unless it is below 2^63.
std::uint64_t checked_pow(std::uint64_t p, std::uint32_t k);

/// k x n matrix over a finite field, row-major.
class GeneratorMatrix {
public:
    GeneratorMatrix(Field field, std::size_t k, std::size_t n);
    GeneratorMatrix(Field field, std::size_t k, std::size_t n, std::vector<Element> entries);

    const Field& field() const noexcept { return field_; }
    std::size_t k() const noexcept { return k_; }
    std::size_t n() const noexcept { return n_; }

    Element at(std::size_t row, std::size_t col) const noexcept { return entries_[row * n_ + col]; }
    void set(std::size_t row, std::size_t col, Element v);

    std::span<const Element> row(std::size_t r) const noexcept { return {entries_.data() + r * n_, n_}; }
    std::vector<Element> column(std::size_t c) const;
    const std::vector<Element>& entries() const noexcept { return entries_; }

    bool operator==(const GeneratorMatrix& o) const noexcept {
        return field_ == o.field_ && k_ == o.k_ && n_ == o.n_ && entries_ == o.entries_;
    }

private:
    Field field_;
    std::size_t k_;
    std::size_t n_;
    std::vector<Element> entries_;
};

/// Row rank by Gaussian elimination over the matrix's field.
std::size_t rank(const GeneratorMatrix& g);

/// Returns the rank; throws RankDeficientError when it is below k.
std::size_t validate(const GeneratorMatrix& g);

struct StrippedMatrix {
    GeneratorMatrix matrix;
    std::size_t removed;
};

/// Drops all-zero columns. Throws AllColumnsZero if nothing would remain.
StrippedMatrix strip_zero_columns(const GeneratorMatrix& g);

/// Generator matrix G_k of the simplex code over F_p.
///
/// For odd p the columns follow the block recursion
///   G_1 = (1),  G_k = ( 0..0  1..1  ...  (p-1)..(p-1)  1 )
///                     ( G_{k-1} G_{k-1} ... G_{k-1}     0 )
/// For p = 2, column u (1-based) is the k-bit binary expansion of u with
/// the first coordinate as the most significant bit.
GeneratorMatrix simplex_generator(std::uint32_t p, std::uint32_t k);

struct CanonicalIndex {
    std::uint64_t index;  // 1-based column of G_k
    Element scalar;       // v = scalar * column(index)
};

/// Locates the simplex column proportional to the nonzero vector v over F_p.
/// Throws ZeroColumn for v = 0.
CanonicalIndex canonical_index(std::uint32_t p, std::span<const Element> v);

/// Column `index` (1-based) of simplex_generator(p, k), computed directly.
std::vector<Element> canonical_column(std::uint32_t p, std::uint32_t k, std::uint64_t index);

/// Multiplicity of each projective point among the columns of a generator
/// matrix. `n` equals the sum of the counts.
struct CharacteristicVector {
    std::uint32_t p = 2;
    std::uint32_t k = 1;
    std::vector<std::uint32_t> counts;  // length theta(p, k); counts[u-1] = chi_u
    std::uint64_t n = 0;

    bool operator==(const CharacteristicVector&) const = default;
};

/// Builds chi from a generator matrix over a prime field. Zero columns must
/// already be stripped (ZeroColumn otherwise).
CharacteristicVector characteristic_vector(const GeneratorMatrix& g);

/// Wraps raw counts, checking the length against theta(p, k).
CharacteristicVector make_characteristic_vector(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> counts);

/// A matrix whose characteristic vector is chi: chi_u copies of canonical column u.
GeneratorMatrix matrix_from_characteristic_vector(const CharacteristicVector& chi);

}  // namespace wdist
