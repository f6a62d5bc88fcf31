#include "wdist/walsh_binary.hpp"

#include <string>
#include <thread>

#include "wdist/error.hpp"

namespace wdist {

namespace {

void butterfly_pairs(std::span<std::int64_t> w, std::size_t j, std::size_t first, std::size_t last) {
    for (std::size_t t = first; t < last; ++t) {
        const std::size_t u = (t / j) * 2 * j + t % j;
        const std::int64_t a = w[u];
        const std::int64_t b = w[u + j];
        w[u] = a + b;
        w[u + j] = a - b;
    }
}

}  // namespace

void fwht_in_place(std::span<std::int64_t> w, unsigned threads) {
    const std::size_t len = w.size();
    if (len == 0 || (len & (len - 1)) != 0)
        throw Error(Errc::LengthNotPowerOfTwo, "transform length " + std::to_string(len) + " is not a power of two");

    if (threads <= 1 || len < 4096) {
        for (std::size_t j = 1; j < len; j *= 2) {
            for (std::size_t base = 0; base < len; base += 2 * j) {
                for (std::size_t u = base; u < base + j; ++u) {
                    const std::int64_t a = w[u];
                    const std::int64_t b = w[u + j];
                    w[u] = a + b;
                    w[u + j] = a - b;
                }
            }
        }
        return;
    }

    const std::size_t pairs = len / 2;
    for (std::size_t j = 1; j < len; j *= 2) {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            const std::size_t first = pairs * t / threads;
            const std::size_t last = pairs * (t + 1) / threads;
            pool.emplace_back([=] { butterfly_pairs(w, j, first, last); });
        }
    }
}

std::vector<std::int64_t> extended_characteristic_vector(const CharacteristicVector& chi) {
    if (chi.p != 2) throw Error(Errc::InvalidArgument, "extended characteristic vector is defined for p = 2");
    std::vector<std::int64_t> ext(chi.counts.size() + 1, 0);
    for (std::size_t u = 0; u < chi.counts.size(); ++u) ext[u + 1] = chi.counts[u];
    return ext;
}

bool parseval_holds(std::span<const std::int64_t> before, std::span<const std::int64_t> after) {
    __extension__ typedef unsigned __int128 u128;
    if (before.size() != after.size()) return false;
    u128 lhs = 0, rhs = 0;
    for (auto v : after) lhs += static_cast<u128>(v < 0 ? -v : v) * static_cast<u128>(v < 0 ? -v : v);
    for (auto v : before) rhs += static_cast<u128>(v < 0 ? -v : v) * static_cast<u128>(v < 0 ? -v : v);
    return lhs == rhs * before.size();
}

WeightDistribution binary_weight_distribution_in_place(std::span<std::int64_t> extended, std::uint64_t n,
                                                       unsigned threads) {
    fwht_in_place(extended, threads);
    if (extended[0] != static_cast<std::int64_t>(n))
        throw Error(Errc::ParityViolation, "transform position 0 is " + std::to_string(extended[0]) +
                                               ", expected n = " + std::to_string(n));
    std::vector<std::uint64_t> hist(n + 1, 0);
    const auto sn = static_cast<std::int64_t>(n);
    for (std::size_t u = 1; u < extended.size(); ++u) {
        const std::int64_t twice = sn - extended[u];
        if ((twice & 1) != 0 || twice < 0 || twice > 2 * sn)
            throw Error(Errc::ParityViolation, "position " + std::to_string(u) + " gives n - W = " +
                                                   std::to_string(twice) + ", not an even value in [0, 2n]");
        ++hist[static_cast<std::size_t>(twice / 2)];
    }
    WeightDistribution wd;
    wd.n = n;
    // the zero codeword; any further weight-0 rows only arise from a rank-deficient input
    ++hist[0];
    for (std::size_t w = 0; w <= n; ++w)
        if (hist[w] != 0) wd.counts[w] = hist[w];
    return wd;
}

WeightDistribution binary_weight_distribution(const CharacteristicVector& chi, unsigned threads) {
    auto ext = extended_characteristic_vector(chi);
    return binary_weight_distribution_in_place(ext, chi.n, threads);
}

}  // namespace wdist
