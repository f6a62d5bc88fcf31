#include "wdist/transform_prime.hpp"

#include <cassert>
#include <limits>
#include <string>
#include <thread>

#include "wdist/error.hpp"

namespace wdist {

TransformState::TransformState(std::uint32_t p, std::uint32_t k) : p_(p), k_(k), rows_(theta(p, k)) {
    if (p < 3 || !is_prime(p)) throw Error(Errc::InvalidArgument, "the p-ary transform needs an odd prime p");
    if (k < 1) throw Error(Errc::InvalidArgument, "dimension must be >= 1");
    cells_.assign(rows_ * p_, 0);
}

std::vector<std::vector<std::uint32_t>> TransformState::to_rows() const {
    std::vector<std::vector<std::uint32_t>> out(rows_);
    for (std::uint64_t i = 0; i < rows_; ++i) {
        auto r = row(i);
        out[i].assign(r.begin(), r.end());
    }
    return out;
}

TransformState init_state(const CharacteristicVector& chi) {
    TransformState state(chi.p, chi.k);
    if (chi.counts.size() != state.rows())
        throw Error(Errc::LengthMismatch, "characteristic vector length " + std::to_string(chi.counts.size()) +
                                              " != theta(p, k) = " + std::to_string(state.rows()));
    std::uint64_t sum = 0;
    for (std::uint64_t i = 0; i < state.rows(); ++i) {
        state.row(i)[1] = chi.counts[i];
        sum += chi.counts[i];
    }
    if (sum > std::numeric_limits<std::uint32_t>::max())
        throw Error(Errc::Overflow, "code length " + std::to_string(sum) + " does not fit 32-bit entries");
    return state;
}

std::vector<std::uint32_t> circular_shift_right(std::span<const std::uint32_t> row, std::uint64_t s) {
    const std::size_t p = row.size();
    std::vector<std::uint32_t> out(p);
    for (std::size_t i = 0; i < p; ++i) out[(i + s) % p] = row[i];
    return out;
}

void new_h(TransformState& state, std::uint64_t r0, std::uint64_t r, std::uint64_t theta0, TransformStats* stats) {
    const std::uint32_t p = state.p();
    if (theta0 == 0 || r - r0 != p * theta0 + 1 || r > state.rows() || r0 >= r)
        throw Error(Errc::IndexOutOfBlock, "rows " + std::to_string(r0 + 1) + ".." + std::to_string(r) +
                                               " do not form a block with theta0 = " + std::to_string(theta0));
    // 1-based row x lives at 0-based storage row x - 1
    auto H = [&](std::uint64_t x) { return state.row(x - 1); };
    std::uint64_t adds = 0;

    // Add0
    {
        const auto last = H(r);
        std::vector<std::uint32_t> shifted(p);
        for (std::uint32_t u = 0; u < p; ++u) shifted[u] = last[(u + 1) % p];
        for (std::uint64_t i = 1; i <= theta0; ++i) {
            auto dst = H(r0 + theta0 + i);
            for (std::uint32_t u = 0; u < p; ++u) dst[u] += shifted[u];
        }
        adds += theta0 * p;
    }

    // LastRow
    {
        auto last = H(r);
        for (std::uint32_t j = 0; j < p; ++j) {
            const auto first = H(r0 + j * theta0 + 1);
            std::uint64_t s = 0;
            for (std::uint32_t u = 0; u < p; ++u) s += first[u];
            assert(s <= std::numeric_limits<std::uint32_t>::max());
            last[j] = static_cast<std::uint32_t>(s);
        }
        adds += std::uint64_t{p} * (p - 1);
    }

    // AllRows. Each source row is stored twice so that the rotation
    // sigma^{j*s}(T[s])[u] = T[s][(u - j*s) mod p] becomes a plain offset.
    const std::size_t w = 2 * std::size_t{p};
    std::vector<std::uint32_t> t(w * p);
    std::vector<std::uint32_t> off(std::size_t{p} * p);
    for (std::uint32_t j = 0; j < p; ++j) {
        std::uint32_t shift = 0;
        for (std::uint32_t s = 0; s < p; ++s) {
            off[std::size_t{j} * p + s] = s * static_cast<std::uint32_t>(w) + p - shift;
            shift += j;
            if (shift >= p) shift -= p;
        }
    }
    for (std::uint64_t i = 1; i <= theta0; ++i) {
        for (std::uint32_t s = 0; s < p; ++s) {
            const auto src = H(r0 + s * theta0 + i);
            std::copy(src.begin(), src.end(), t.begin() + s * w);
            std::copy(src.begin(), src.end(), t.begin() + s * w + p);
        }
        for (std::uint32_t j = 0; j < p; ++j) {
            auto dst = H(r0 + j * theta0 + i);
            const std::uint32_t* o = &off[std::size_t{j} * p];
            for (std::uint32_t u = 0; u < p; ++u) {
                std::uint64_t acc = 0;
                for (std::uint32_t s = 0; s < p; ++s) acc += t[o[s] + u];
                assert(acc <= std::numeric_limits<std::uint32_t>::max());
                dst[u] = static_cast<std::uint32_t>(acc);
            }
        }
    }
    adds += theta0 * p * p * (p - 1);

    if (stats) stats->additions += adds;
}

void advance_level(TransformState& state, TransformStats* stats, unsigned threads) {
    const std::uint32_t p = state.p();
    const std::uint32_t k = state.k();
    const std::uint32_t l = state.level() + 1;
    if (l > k) return;
    const std::uint64_t theta0 = theta(p, l - 1);
    const std::uint64_t theta1 = p * theta0 + 1;
    const std::uint64_t total = state.rows();

    // Block starts. Counter a[s] tracks how many level-s blocks have been
    // closed; every p of them are followed by one inactive row.
    std::vector<std::uint64_t> starts;
    std::vector<std::uint32_t> a(k + 2, 0);
    std::uint64_t r = 0;
    while (r < total) {
        starts.push_back(r);
        r += theta1;
        std::uint32_t s = l;
        ++a[s];
        while (a[s] == p && s <= k) {
            ++r;
            a[s] = 0;
            ++s;
            ++a[s];
        }
    }

    if (threads <= 1 || starts.size() < 2) {
        for (auto r0 : starts) new_h(state, r0, r0 + theta1, theta0, stats);
    } else {
        std::vector<TransformStats> part(threads);
        {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < threads; ++t) {
                const std::size_t first = starts.size() * t / threads;
                const std::size_t last = starts.size() * (t + 1) / threads;
                pool.emplace_back([&, t, first, last] {
                    for (std::size_t b = first; b < last; ++b)
                        new_h(state, starts[b], starts[b] + theta1, theta0, &part[t]);
                });
            }
        }
        if (stats)
            for (const auto& s : part) stats->additions += s.additions;
    }
    state.set_level(l);
}

void main_transform(TransformState& state, TransformStats* stats, unsigned threads) {
    while (state.level() < state.k()) advance_level(state, stats, threads);
}

std::vector<std::uint64_t> weights_from_state(const TransformState& state, std::uint64_t n) {
    std::vector<std::uint64_t> w(state.rows());
    for (std::uint64_t i = 0; i < state.rows(); ++i) {
        const auto row = state.row(i);
        std::uint64_t sum = 0;
        for (auto v : row) sum += v;
        if (sum != n)
            throw Error(Errc::RowSumMismatch, "row " + std::to_string(i + 1) + " sums to " + std::to_string(sum) +
                                                  ", expected n = " + std::to_string(n));
        w[i] = n - row[0];
    }
    return w;
}

WeightDistribution prime_weight_distribution(const CharacteristicVector& chi, unsigned threads,
                                             TransformStats* stats) {
    if (chi.p == 2) throw Error(Errc::InvalidArgument, "binary codes use the Walsh-Hadamard path");
    TransformState state = init_state(chi);
    main_transform(state, stats, threads);
    const auto weights = weights_from_state(state, chi.n);

    std::vector<std::uint64_t> hist(chi.n + 1, 0);
    for (auto w : weights) ++hist[w];
    WeightDistribution wd;
    wd.n = chi.n;
    const std::uint64_t scale = chi.p - 1;
    for (std::uint64_t w = 0; w <= chi.n; ++w) {
        const std::uint64_t a = hist[w] * scale + (w == 0 ? 1 : 0);
        if (a != 0) wd.counts[w] = a;
    }
    return wd;
}

}  // namespace wdist
