#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "wdist/linear_code.hpp"
#include "wdist/weight_distribution.hpp"

namespace wdist {

enum class Method { Auto, Transform, Bruteforce };

std::string_view method_name(Method m) noexcept;
std::optional<Method> parse_method(std::string_view name) noexcept;

inline constexpr std::uint64_t kDefaultMemoryBudget = std::uint64_t{8} << 30;
// auto picks brute force at or below this many codewords
inline constexpr std::uint64_t kAutoBruteforceBelow = std::uint64_t{1} << 12;
inline constexpr std::uint64_t kMaxLength = (std::uint64_t{1} << 31) - 1;

/// WDIST_MEM_BUDGET_BYTES if set and numeric, else kDefaultMemoryBudget.
std::uint64_t memory_budget_from_env();

/// Working-set estimate in 32-bit units: p * theta(p, dim) + p^2 + 2n.
std::uint64_t transform_memory_units(std::uint32_t p, std::uint32_t dim, std::uint64_t n);

struct ComputeOptions {
    Method method = Method::Auto;
    unsigned threads = 1;
    std::uint64_t memory_budget_bytes = kDefaultMemoryBudget;
};

struct Timings {
    double chi_ms = 0;        // zero-column stripping, trace reduction, characteristic vector
    double transform_ms = 0;  // butterfly / staged transform and weight extraction
    double total_ms = 0;
};

struct ComputeResult {
    WeightDistribution distribution;
    Method method;  // never Auto
    Timings timings;
};

/// The transform route, or MemoryBudget / DimensionTooLarge / Overflow when
/// the code is out of range for it.
void check_transform_limits(const GeneratorMatrix& g, std::uint64_t memory_budget_bytes);

/// Weight distribution of a (validated) generator matrix. Checks A_0 = 1
/// and sum A_i = q^k on the result (InvariantViolation otherwise).
ComputeResult compute_weight_distribution(const GeneratorMatrix& g, const ComputeOptions& options = {});

}  // namespace wdist
