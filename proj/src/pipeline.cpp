#include "wdist/pipeline.hpp"

#include <chrono>
#include <cstdlib>
#include <string>

#include "wdist/bruteforce.hpp"
#include "wdist/error.hpp"
#include "wdist/trace_reduction.hpp"
#include "wdist/transform_prime.hpp"
#include "wdist/walsh_binary.hpp"

namespace wdist {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t) { return std::chrono::duration<double, std::milli>(Clock::now() - t).count(); }

// q^k, saturating just past the brute-force guard
std::uint64_t codeword_count(const GeneratorMatrix& g) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < g.k(); ++i) {
        if (total > kBruteforceLimit) return kBruteforceLimit + 1;
        total *= g.field().q();
    }
    return total;
}

void check_invariants(const WeightDistribution& wd, const GeneratorMatrix& g) {
    if (wd.count(0) != 1)
        throw Error(Errc::InvariantViolation, "A_0 = " + std::to_string(wd.count(0)) + ", expected 1");
    const std::uint64_t expected = checked_pow(g.field().q(), static_cast<std::uint32_t>(g.k()));
    if (wd.total() != expected)
        throw Error(Errc::InvariantViolation, "sum of A_i = " + std::to_string(wd.total()) + ", expected q^k = " +
                                                  std::to_string(expected));
    if (!wd.counts.empty() && wd.counts.rbegin()->first > g.n())
        throw Error(Errc::InvariantViolation, "weight above n");
}

}  // namespace

std::string_view method_name(Method m) noexcept {
    switch (m) {
        case Method::Auto: return "auto";
        case Method::Transform: return "transform";
        case Method::Bruteforce: return "bruteforce";
    }
    return "auto";
}

std::optional<Method> parse_method(std::string_view name) noexcept {
    if (name == "auto") return Method::Auto;
    if (name == "transform") return Method::Transform;
    if (name == "bruteforce") return Method::Bruteforce;
    return std::nullopt;
}

std::uint64_t memory_budget_from_env() {
    const char* env = std::getenv("WDIST_MEM_BUDGET_BYTES");
    if (!env || !*env) return kDefaultMemoryBudget;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') return kDefaultMemoryBudget;
    return v;
}

std::uint64_t transform_memory_units(std::uint32_t p, std::uint32_t dim, std::uint64_t n) {
    const std::uint64_t th = theta(p, dim);
    if (th > (~std::uint64_t{0} - std::uint64_t{p} * p - 2 * n) / p)
        throw Error(Errc::DimensionTooLarge, "working array size overflows");
    return p * th + std::uint64_t{p} * p + 2 * n;
}

void check_transform_limits(const GeneratorMatrix& g, std::uint64_t memory_budget_bytes) {
    const Field& f = g.field();
    if (g.n() > kMaxLength)
        throw Error(Errc::Overflow, "code length " + std::to_string(g.n()) + " must be below 2^31");
    const auto dim = static_cast<std::uint32_t>(f.m() * g.k());
    std::uint64_t units = 0;
    try {
        (void)checked_pow(f.p(), dim);
        units = transform_memory_units(f.p(), dim, g.n());
    } catch (const Error&) {
        throw Error(Errc::DimensionTooLarge, "p^(mk) = " + std::to_string(f.p()) + "^" + std::to_string(dim) +
                                                 " is beyond the 2^63 transform limit");
    }
    if (units > memory_budget_bytes / 4)
        throw Error(Errc::MemoryBudget, "transform needs " + std::to_string(units * 4) + " bytes, budget is " +
                                            std::to_string(memory_budget_bytes) +
                                            " (raise WDIST_MEM_BUDGET_BYTES or use --method bruteforce)");
}

ComputeResult compute_weight_distribution(const GeneratorMatrix& g, const ComputeOptions& options) {
    const auto start = Clock::now();
    const std::uint64_t words = codeword_count(g);

    Method method = options.method;
    if (method == Method::Auto) {
        if (words <= kAutoBruteforceBelow) {
            method = Method::Bruteforce;
        } else {
            try {
                check_transform_limits(g, options.memory_budget_bytes);
                method = Method::Transform;
            } catch (const Error&) {
                if (words > kBruteforceLimit) throw;
                method = Method::Bruteforce;
            }
        }
    }

    ComputeResult result{{}, method, {}};
    if (method == Method::Bruteforce) {
        result.distribution = bruteforce_weight_distribution(g, options.threads);
    } else {
        check_transform_limits(g, options.memory_budget_bytes);
        const Field& f = g.field();
        if (f.is_prime_field()) {
            auto t = Clock::now();
            const auto stripped = strip_zero_columns(g);
            const auto chi = characteristic_vector(stripped.matrix);
            result.timings.chi_ms = ms_since(t);
            t = Clock::now();
            result.distribution = f.p() == 2 ? binary_weight_distribution(chi, options.threads)
                                             : prime_weight_distribution(chi, options.threads);
            result.timings.transform_ms = ms_since(t);
            result.distribution.n = g.n();
        } else {
            CompositeTiming ct;
            result.distribution = composite_weight_distribution(g, options.threads, &ct);
            result.timings.chi_ms = ct.reduce_ms;
            result.timings.transform_ms = ct.transform_ms;
        }
    }
    check_invariants(result.distribution, g);
    result.timings.total_ms = ms_since(start);
    return result;
}

}  // namespace wdist
