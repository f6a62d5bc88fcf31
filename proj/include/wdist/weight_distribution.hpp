#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace wdist {

/// Sparse weight distribution: weight i -> A_i (only nonzero A_i stored).
struct WeightDistribution {
    std::uint64_t n = 0;
    std::map<std::uint64_t, std::uint64_t> counts;

    std::uint64_t total() const noexcept;
    std::uint64_t count(std::uint64_t weight) const noexcept;
    // Smallest positive weight with A_i > 0.
    std::optional<std::uint64_t> min_weight() const noexcept;
    // FNV-1a over the (weight, count) pairs as little-endian 64-bit words.
    std::uint64_t checksum() const noexcept;

    bool operator==(const WeightDistribution&) const = default;
};

std::string to_string(const WeightDistribution& wd);

}  // namespace wdist
