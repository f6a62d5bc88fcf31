#include "wdist/trace_reduction.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "wdist/error.hpp"
#include "wdist/transform_prime.hpp"
#include "wdist/walsh_binary.hpp"

namespace wdist {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point since) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

}  // namespace

GeneratorMatrix expand_generator(const GeneratorMatrix& g) {
    const auto order = g.field().nonzero_elements();
    return expand_generator(g, order);
}

GeneratorMatrix expand_generator(const GeneratorMatrix& g, std::span<const Element> order) {
    const Field& f = g.field();
    if (f.is_prime_field()) throw Error(Errc::PrimeFieldInput, "expansion is only needed for composite fields");
    if (order.size() != f.q() - 1) throw Error(Errc::LengthMismatch, "ordering must list all q-1 nonzero elements");
    std::vector<bool> seen(f.q(), false);
    for (auto a : order) {
        if (a == 0 || !f.contains(a) || seen[a])
            throw Error(Errc::InvalidArgument, "ordering is not a permutation of the nonzero elements");
        seen[a] = true;
    }

    const std::size_t n = g.n();
    const std::size_t wide = n * order.size();
    std::vector<Element> entries(g.k() * wide);
    for (std::size_t r = 0; r < g.k(); ++r) {
        const auto row = g.row(r);
        for (std::size_t s = 0; s < order.size(); ++s)
            for (std::size_t c = 0; c < n; ++c) entries[r * wide + s * n + c] = f.mul(order[s], row[c]);
    }
    return GeneratorMatrix(f, g.k(), wide, std::move(entries));
}

GeneratorMatrix trace_generator(const GeneratorMatrix& expanded) {
    const Field& f = expanded.field();
    const std::uint32_t m = f.m();
    const std::size_t k = expanded.k();
    const std::size_t n = expanded.n();
    Field base = make_field(f.p(), 1);
    std::vector<Element> entries(m * k * n);
    for (std::uint32_t i = 0; i < m; ++i) {
        const Element beta = f.basis_element(i);
        for (std::size_t j = 0; j < k; ++j) {
            const auto v = expanded.row(j);
            Element* out = entries.data() + (i * k + j) * n;
            for (std::size_t c = 0; c < n; ++c) out[c] = f.trace(f.mul(beta, v[c]));
        }
    }
    GeneratorMatrix t(std::move(base), m * k, n, std::move(entries));
    validate(t);
    return t;
}

TraceExpansion expand_and_trace(const GeneratorMatrix& g) {
    auto expanded = expand_generator(g);
    auto traced = trace_generator(expanded);
    const std::uint64_t len = traced.n();
    return {g, std::move(traced), len, weight_scale(g.field().q(), g.field().p())};
}

std::uint64_t weight_scale(std::uint32_t q, std::uint32_t p) { return std::uint64_t{q} / p * (p - 1); }

WeightDistribution map_distribution_back(const WeightDistribution& trace_dist, std::uint32_t q, std::uint32_t p,
                                         std::uint64_t n) {
    const std::uint64_t scale = weight_scale(q, p);
    WeightDistribution wd;
    wd.n = n;
    for (const auto& [w, a] : trace_dist.counts) {
        if (w % scale != 0)
            throw Error(Errc::NonDivisibleWeight, "trace-code weight " + std::to_string(w) +
                                                      " is not a multiple of " + std::to_string(scale));
        const std::uint64_t orig = w / scale;
        if (orig > n)
            throw Error(Errc::NonDivisibleWeight, "trace-code weight " + std::to_string(w) + " maps past n");
        wd.counts[orig] += a;
    }
    return wd;
}

WeightDistribution composite_weight_distribution(const GeneratorMatrix& g, unsigned threads,
                                                 CompositeTiming* timing) {
    const Field& f = g.field();
    if (f.is_prime_field()) throw Error(Errc::PrimeFieldInput, "use the prime-field kernels for m = 1");
    const auto dim = f.m() * static_cast<std::uint32_t>(g.k());
    try {
        (void)theta(f.p(), dim);
    } catch (const Error&) {
        throw Error(Errc::DimensionTooLarge, "trace code dimension " + std::to_string(dim) + " over F_" +
                                                 std::to_string(f.p()) + " is beyond the transform limits");
    }

    auto t0 = std::chrono::steady_clock::now();
    const auto stripped = strip_zero_columns(g);
    const auto traced = trace_generator(expand_generator(stripped.matrix));
    const auto chi = characteristic_vector(traced);
    if (timing) timing->reduce_ms = elapsed_ms(t0);

    t0 = std::chrono::steady_clock::now();
    const WeightDistribution trace_dist =
        f.p() == 2 ? binary_weight_distribution(chi, threads) : prime_weight_distribution(chi, threads);
    auto wd = map_distribution_back(trace_dist, f.q(), f.p(), g.n());
    if (timing) timing->transform_ms = elapsed_ms(t0);
    return wd;
}

}  // namespace wdist
