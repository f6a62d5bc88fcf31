#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "wdist/finite_field.hpp"
#include "wdist/linear_code.hpp"

namespace wdist {

/// Text format:
///
///   # comment lines (first non-blank character '#') and blank lines are skipped
///   q k n
///   poly c_0 c_1 ... c_m        (optional; modulus for q = p^m, m > 1)
///   k rows of n integers in [0, q), digit-encoded
///
/// Throws ParseError (with line number), SymbolOutOfRange, RankDeficient,
/// and the field construction errors.
GeneratorMatrix parse_code_file(std::string_view text);

/// Inverse of parse_code_file. A poly line is written for m > 1.
std::string format_code_file(const GeneratorMatrix& g);

/// SplitMix64: a counter-based generator. The state advances by the
/// constant 0x9E3779B97F4A7C15 per draw and the output is the
/// state passed through the fixed 64-bit finalizer
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   z =  z ^ (z >> 31)
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept;

    /// Uniform in [0, bound) by rejection: draws at or above the largest
    /// multiple of bound that fits in 2^64 are discarded.
    std::uint64_t uniform(std::uint64_t bound) noexcept;

private:
    std::uint64_t state_;
};

inline constexpr int kRandomCodeAttempts = 1000;

/// Random k x n generator matrix over F_q, entries drawn row-major with
/// SplitMix64(seed).uniform(q). Whole matrices are redrawn (continuing the
/// same stream) until the rank is k; CannotReachRank after 1000 tries.
GeneratorMatrix random_code(std::uint64_t q, std::size_t k, std::size_t n, std::uint64_t seed,
                            std::optional<Polynomial> modulus = std::nullopt);

}  // namespace wdist
