#include "wdist/bruteforce.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <thread>
#include <vector>

#include "wdist/error.hpp"

namespace wdist {

namespace {

using Histogram = std::vector<std::uint64_t>;

// basis[t] = x^i * row_j, t = j*m + i
std::vector<std::vector<Element>> prime_basis(const GeneratorMatrix& g) {
    const Field& f = g.field();
    std::vector<std::vector<Element>> basis;
    basis.reserve(g.k() * f.m());
    for (std::size_t j = 0; j < g.k(); ++j) {
        const auto row = g.row(j);
        for (std::uint32_t i = 0; i < f.m(); ++i) {
            const Element beta = f.basis_element(i);
            std::vector<Element> v(g.n());
            for (std::size_t c = 0; c < g.n(); ++c) v[c] = f.mul(beta, row[c]);
            basis.push_back(std::move(v));
        }
    }
    return basis;
}

std::vector<std::uint32_t> digits_of(std::uint64_t x, std::uint32_t p, std::size_t count) {
    std::vector<std::uint32_t> d(count);
    for (std::size_t t = 0; t < count; ++t) {
        d[t] = static_cast<std::uint32_t>(x % p);
        x /= p;
    }
    return d;
}

void enumerate_binary(const GeneratorMatrix& g, std::uint64_t begin, std::uint64_t end, Histogram& hist) {
    const std::size_t n = g.n();
    const std::size_t words = (n + 63) / 64;
    const std::size_t k = g.k();
    std::vector<std::uint64_t> rows(k * words, 0);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t c = 0; c < n; ++c)
            if (g.at(j, c)) rows[j * words + c / 64] |= std::uint64_t{1} << (c % 64);

    std::vector<std::uint64_t> cw(words, 0);
    for (std::size_t j = 0; j < k; ++j)
        if ((begin >> j) & 1u)
            for (std::size_t w = 0; w < words; ++w) cw[w] ^= rows[j * words + w];
    std::uint64_t weight = 0;
    for (auto w : cw) weight += std::popcount(w);

    for (std::uint64_t x = begin; x < end; ++x) {
        ++hist[weight];
        if (x + 1 == end) break;
        // bits of x that flip on increment: trailing ones plus the next zero
        const std::uint64_t changed = x ^ (x + 1);
        for (std::size_t j = 0; j < k; ++j) {
            if (!((changed >> j) & 1u)) continue;
            const std::uint64_t* r = &rows[j * words];
            for (std::size_t w = 0; w < words; ++w) {
                const std::uint64_t before = cw[w];
                cw[w] = before ^ r[w];
                weight = weight + std::popcount(cw[w]) - std::popcount(before);
            }
        }
    }
}

// Add(a, b) must agree with Field::add; it is a template parameter so the
// prime-field case compiles to a compare-and-subtract.
template <class Add>
void enumerate_general(const GeneratorMatrix& g, std::uint64_t begin, std::uint64_t end, Histogram& hist, Add add) {
    const std::uint32_t p = g.field().p();
    const std::size_t n = g.n();
    const auto basis = prime_basis(g);
    auto digits = digits_of(begin, p, basis.size());

    std::vector<Element> cw(n, 0);
    for (std::size_t t = 0; t < basis.size(); ++t)
        for (std::uint32_t rep = 0; rep < digits[t]; ++rep)
            for (std::size_t c = 0; c < n; ++c) cw[c] = add(cw[c], basis[t][c]);
    std::uint64_t weight = static_cast<std::uint64_t>(std::count_if(cw.begin(), cw.end(), [](Element e) { return e != 0; }));

    for (std::uint64_t x = begin; x < end; ++x) {
        ++hist[weight];
        if (x + 1 == end) break;
        for (std::size_t t = 0; t < basis.size(); ++t) {
            const Element* b = basis[t].data();
            std::int64_t delta = 0;
            for (std::size_t c = 0; c < n; ++c) {
                const Element before = cw[c];
                const Element after = add(before, b[c]);
                cw[c] = after;
                delta += static_cast<std::int64_t>(after != 0) - static_cast<std::int64_t>(before != 0);
            }
            weight = static_cast<std::uint64_t>(static_cast<std::int64_t>(weight) + delta);
            // digit wraps p-1 -> 0; p copies of b cancel, so carry on
            if (++digits[t] < p) break;
            digits[t] = 0;
        }
    }
}

void enumerate_general(const GeneratorMatrix& g, std::uint64_t begin, std::uint64_t end, Histogram& hist) {
    const Field& f = g.field();
    if (f.is_prime_field()) {
        const Element p = f.p();
        enumerate_general(g, begin, end, hist, [p](Element a, Element b) {
            const Element s = a + b;
            return s >= p ? s - p : s;
        });
    } else if (f.q() <= kTableOrderLimit) {
        const std::uint32_t q = f.q();
        std::vector<Element> table(std::size_t{q} * q);
        for (Element a = 0; a < q; ++a)
            for (Element b = 0; b < q; ++b) table[a * q + b] = f.add(a, b);
        enumerate_general(g, begin, end, hist, [&table, q](Element a, Element b) { return table[a * q + b]; });
    } else {
        enumerate_general(g, begin, end, hist, [&f](Element a, Element b) { return f.add(a, b); });
    }
}

std::uint64_t message_count(const GeneratorMatrix& g) {
    std::uint64_t total = 1;
    for (std::size_t j = 0; j < g.k(); ++j) {
        if (total > kBruteforceLimit / g.field().q())
            throw Error(Errc::TooLarge, "brute force needs q^k <= 2^24 (q = " + std::to_string(g.field().q()) +
                                            ", k = " + std::to_string(g.k()) + ")");
        total *= g.field().q();
    }
    return total;
}

WeightDistribution to_distribution(const Histogram& hist, std::uint64_t n) {
    WeightDistribution wd;
    wd.n = n;
    for (std::size_t w = 0; w < hist.size(); ++w)
        if (hist[w] != 0) wd.counts[w] = hist[w];
    return wd;
}

Histogram range_histogram(const GeneratorMatrix& g, std::uint64_t begin, std::uint64_t end) {
    Histogram hist(g.n() + 1, 0);
    if (begin >= end) return hist;
    if (g.field().q() == 2)
        enumerate_binary(g, begin, end, hist);
    else
        enumerate_general(g, begin, end, hist);
    return hist;
}

}  // namespace

WeightDistribution bruteforce_weight_range(const GeneratorMatrix& g, std::uint64_t begin, std::uint64_t end) {
    const std::uint64_t total = message_count(g);
    if (begin > end || end > total) throw Error(Errc::InvalidArgument, "message range out of bounds");
    return to_distribution(range_histogram(g, begin, end), g.n());
}

WeightDistribution bruteforce_weight_distribution(const GeneratorMatrix& g, unsigned threads) {
    const std::uint64_t total = message_count(g);
    threads = std::max(1u, threads);
    if (threads == 1) return to_distribution(range_histogram(g, 0, total), g.n());

    std::vector<Histogram> parts(threads);
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            const std::uint64_t b = total * t / threads;
            const std::uint64_t e = total * (t + 1) / threads;
            pool.emplace_back([&, t, b, e] { parts[t] = range_histogram(g, b, e); });
        }
    }
    Histogram merged(g.n() + 1, 0);
    for (const auto& h : parts)
        for (std::size_t w = 0; w < h.size(); ++w) merged[w] += h[w];
    return to_distribution(merged, g.n());
}

}  // namespace wdist
