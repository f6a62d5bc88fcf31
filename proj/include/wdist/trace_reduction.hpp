#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wdist/linear_code.hpp"
#include "wdist/weight_distribution.hpp"

namespace wdist {

/// Weight distribution of a code over F_{p^m}, m > 1, through a code over F_p.
///
/// The expanded generator G' = (G | a_2 G | ... | a_{q-1} G) lists every
/// nonzero multiple of G. Taking the trace coordinatewise of x^i * v_j
/// (v_j the rows of G') gives an F_p generator of dimension mk whose
/// codewords are the traces of the codewords of G'. A nonzero symbol c
/// contributes q - q/p nonzero traces across its q-1 multiples, so every
/// weight w of the original code appears as (q - q/p) * w.
struct TraceExpansion {
    GeneratorMatrix source;
    GeneratorMatrix trace_matrix;  // mk x (q-1)n over F_p, rows i-major: index i*k + j
    std::uint64_t expanded_length;
    std::uint64_t weight_scale;  // p^{m-1} (p - 1)
};

/// Block s (1-based) is alpha_s * G with alpha_s = nonzero_elements()[s-1].
/// Throws PrimeFieldInput for m = 1.
GeneratorMatrix expand_generator(const GeneratorMatrix& g);

/// Same with an explicit ordering of the nonzero elements (a permutation of
/// 1..q-1); the distribution does not depend on it.
GeneratorMatrix expand_generator(const GeneratorMatrix& g, std::span<const Element> order);

/// Row (i, j) = Tr(x^i * v_j), i-major. The rank is checked to be m*k;
/// RankDeficient otherwise.
GeneratorMatrix trace_generator(const GeneratorMatrix& expanded);

TraceExpansion expand_and_trace(const GeneratorMatrix& g);

std::uint64_t weight_scale(std::uint32_t q, std::uint32_t p);

/// A_i(C) = A'_{scale * i}(Tr(C')). Throws NonDivisibleWeight.
WeightDistribution map_distribution_back(const WeightDistribution& trace_dist, std::uint32_t q, std::uint32_t p,
                                         std::uint64_t n);

struct CompositeTiming {
    double reduce_ms = 0;     // expansion, trace, characteristic vector
    double transform_ms = 0;  // prime/binary kernel and back-mapping
};

/// Full chain: expand, trace, characteristic vector, F_p kernel (Walsh for
/// p = 2), map back. Zero columns of g are ignored; wd.n is g.n().
WeightDistribution composite_weight_distribution(const GeneratorMatrix& g, unsigned threads = 1,
                                                 CompositeTiming* timing = nullptr);

}  // namespace wdist
