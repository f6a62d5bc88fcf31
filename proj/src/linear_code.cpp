#include "wdist/linear_code.hpp"

#include <limits>
#include <string>
#include <utility>

#include "wdist/error.hpp"

namespace wdist {

namespace {

constexpr std::uint64_t kMaxSimplexEntries = std::uint64_t{1} << 28;

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
    while (new_r != 0) {
        const std::int64_t quot = r / new_r;
        t = std::exchange(new_t, t - quot * new_t);
        r = std::exchange(new_r, r - quot * new_r);
    }
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(p) : t);
}

}  // namespace

std::uint64_t checked_pow(std::uint64_t p, std::uint32_t k) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        if (r > (std::uint64_t{1} << 63) / p)
            throw Error(Errc::Overflow, std::to_string(p) + "^" + std::to_string(k) + " exceeds 2^63");
        r *= p;
    }
    if (r >= (std::uint64_t{1} << 63))
        throw Error(Errc::Overflow, std::to_string(p) + "^" + std::to_string(k) + " is not below 2^63");
    return r;
}

std::uint64_t theta(std::uint64_t p, std::uint32_t k) {
    if (p < 2) throw Error(Errc::InvalidArgument, "theta needs p >= 2");
    return (checked_pow(p, k) - 1) / (p - 1);
}

GeneratorMatrix::GeneratorMatrix(Field field, std::size_t k, std::size_t n)
    : field_(std::move(field)), k_(k), n_(n), entries_(k * n, 0) {
    if (k == 0) throw Error(Errc::InvalidArgument, "generator matrix needs k >= 1");
}

GeneratorMatrix::GeneratorMatrix(Field field, std::size_t k, std::size_t n, std::vector<Element> entries)
    : field_(std::move(field)), k_(k), n_(n), entries_(std::move(entries)) {
    if (k == 0) throw Error(Errc::InvalidArgument, "generator matrix needs k >= 1");
    if (entries_.size() != k * n)
        throw Error(Errc::LengthMismatch, "expected " + std::to_string(k * n) + " entries, got " +
                                              std::to_string(entries_.size()));
    for (auto e : entries_)
        if (!field_.contains(e))
            throw Error(Errc::SymbolOutOfRange,
                        "symbol " + std::to_string(e) + " outside F_" + std::to_string(field_.q()));
}

void GeneratorMatrix::set(std::size_t row, std::size_t col, Element v) {
    if (!field_.contains(v))
        throw Error(Errc::SymbolOutOfRange, "symbol " + std::to_string(v) + " outside F_" + std::to_string(field_.q()));
    entries_[row * n_ + col] = v;
}

std::vector<Element> GeneratorMatrix::column(std::size_t c) const {
    std::vector<Element> out(k_);
    for (std::size_t r = 0; r < k_; ++r) out[r] = at(r, c);
    return out;
}

std::size_t rank(const GeneratorMatrix& g) {
    const Field& f = g.field();
    const std::size_t k = g.k();
    const std::size_t n = g.n();
    std::vector<Element> a = g.entries();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < k; ++c) {
        std::size_t pivot = r;
        while (pivot < k && a[pivot * n + c] == 0) ++pivot;
        if (pivot == k) continue;
        if (pivot != r)
            for (std::size_t j = c; j < n; ++j) std::swap(a[pivot * n + j], a[r * n + j]);
        const Element scale = f.inv(a[r * n + c]);
        for (std::size_t j = c; j < n; ++j) a[r * n + j] = f.mul(a[r * n + j], scale);
        for (std::size_t i = r + 1; i < k; ++i) {
            const Element factor = a[i * n + c];
            if (factor == 0) continue;
            for (std::size_t j = c; j < n; ++j) a[i * n + j] = f.sub(a[i * n + j], f.mul(factor, a[r * n + j]));
        }
        ++r;
    }
    return r;
}

std::size_t validate(const GeneratorMatrix& g) {
    const std::size_t r = rank(g);
    if (r < g.k()) throw RankDeficientError(r, g.k());
    return r;
}

StrippedMatrix strip_zero_columns(const GeneratorMatrix& g) {
    std::vector<std::size_t> keep;
    keep.reserve(g.n());
    for (std::size_t c = 0; c < g.n(); ++c) {
        for (std::size_t r = 0; r < g.k(); ++r) {
            if (g.at(r, c) != 0) {
                keep.push_back(c);
                break;
            }
        }
    }
    if (keep.empty()) throw Error(Errc::AllColumnsZero, "every column of the generator matrix is zero");
    if (keep.size() == g.n()) return {g, 0};
    std::vector<Element> entries;
    entries.reserve(g.k() * keep.size());
    for (std::size_t r = 0; r < g.k(); ++r)
        for (auto c : keep) entries.push_back(g.at(r, c));
    return {GeneratorMatrix(g.field(), g.k(), keep.size(), std::move(entries)), g.n() - keep.size()};
}

GeneratorMatrix simplex_generator(std::uint32_t p, std::uint32_t k) {
    if (!is_prime(p)) throw Error(Errc::NonPrimeCharacteristic, "simplex generator needs a prime p");
    if (k < 1) throw Error(Errc::InvalidArgument, "simplex generator needs k >= 1");
    const std::uint64_t len = theta(p, k);
    if (len >= std::numeric_limits<std::uint32_t>::max() || len * k > kMaxSimplexEntries)
        throw Error(Errc::Overflow, "simplex generator for p = " + std::to_string(p) + ", k = " + std::to_string(k) +
                                        " is too large to materialize");
    Field f = make_field(p, 1);
    GeneratorMatrix g(f, k, len);

    if (p == 2) {
        for (std::uint64_t u = 1; u <= len; ++u)
            for (std::uint32_t r = 0; r < k; ++r) g.set(r, u - 1, static_cast<Element>((u >> (k - 1 - r)) & 1u));
        return g;
    }

    // columns of G_l, grown one level at a time
    std::vector<std::vector<Element>> cols{{1}};
    for (std::uint32_t l = 2; l <= k; ++l) {
        std::vector<std::vector<Element>> next;
        next.reserve(p * cols.size() + 1);
        for (Element j = 0; j < p; ++j) {
            for (const auto& c : cols) {
                std::vector<Element> col;
                col.reserve(l);
                col.push_back(j);
                col.insert(col.end(), c.begin(), c.end());
                next.push_back(std::move(col));
            }
        }
        std::vector<Element> last(l, 0);
        last[0] = 1;
        next.push_back(std::move(last));
        cols = std::move(next);
    }
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::uint32_t r = 0; r < k; ++r) g.set(r, c, cols[c][r]);
    return g;
}

CanonicalIndex canonical_index(std::uint32_t p, std::span<const Element> v) {
    const auto k = static_cast<std::uint32_t>(v.size());
    if (p == 2) {
        std::uint64_t idx = 0;
        for (auto x : v) idx = (idx << 1) | (x & 1u);
        if (idx == 0) throw Error(Errc::ZeroColumn, "zero column has no projective point");
        return {idx, 1};
    }
    std::size_t last = v.size();
    for (std::size_t t = v.size(); t-- > 0;) {
        if (v[t] != 0) {
            last = t;
            break;
        }
    }
    if (last == v.size()) throw Error(Errc::ZeroColumn, "zero column has no projective point");

    // The suffix (v_last, 0, ..., 0) is the final column of G_{k-last}; every
    // earlier coordinate selects a block j = v_t / lambda one level up.
    const Element lambda = v[last];
    const std::uint64_t lambda_inv = inverse_mod(lambda, p);
    std::uint64_t idx = theta(p, k - static_cast<std::uint32_t>(last));
    for (std::size_t t = last; t-- > 0;) {
        const std::uint64_t block = (v[t] * lambda_inv) % p;
        idx += block * theta(p, k - static_cast<std::uint32_t>(t) - 1);
    }
    return {idx, lambda};
}

std::vector<Element> canonical_column(std::uint32_t p, std::uint32_t k, std::uint64_t index) {
    const std::uint64_t len = theta(p, k);
    if (index < 1 || index > len) throw Error(Errc::InvalidArgument, "canonical column index out of range");
    std::vector<Element> col(k, 0);
    if (p == 2) {
        for (std::uint32_t r = 0; r < k; ++r) col[r] = static_cast<Element>((index >> (k - 1 - r)) & 1u);
        return col;
    }
    std::uint64_t i = index;
    for (std::uint32_t r = 0; r < k; ++r) {
        const std::uint64_t level_len = theta(p, k - r);
        if (i == level_len) {
            col[r] = 1;
            return col;
        }
        const std::uint64_t sub_len = theta(p, k - r - 1);
        col[r] = static_cast<Element>((i - 1) / sub_len);
        i = (i - 1) % sub_len + 1;
    }
    return col;
}

CharacteristicVector characteristic_vector(const GeneratorMatrix& g) {
    const Field& f = g.field();
    if (!f.is_prime_field())
        throw Error(Errc::InvalidArgument, "characteristic vector needs a prime field; reduce composite fields first");
    if (g.n() >= std::numeric_limits<std::uint32_t>::max())
        throw Error(Errc::Overflow, "code length must be below 2^32");
    const auto k = static_cast<std::uint32_t>(g.k());
    CharacteristicVector chi;
    chi.p = f.p();
    chi.k = k;
    chi.counts.assign(theta(f.p(), k), 0);
    chi.n = g.n();
    std::vector<Element> col(k);
    for (std::size_t c = 0; c < g.n(); ++c) {
        for (std::size_t r = 0; r < k; ++r) col[r] = g.at(r, c);
        const auto ci = canonical_index(f.p(), col);
        ++chi.counts[ci.index - 1];
    }
    return chi;
}

CharacteristicVector make_characteristic_vector(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> counts) {
    if (counts.size() != theta(p, k))
        throw Error(Errc::LengthMismatch, "characteristic vector length " + std::to_string(counts.size()) +
                                              " != theta(p, k) = " + std::to_string(theta(p, k)));
    CharacteristicVector chi;
    chi.p = p;
    chi.k = k;
    chi.n = 0;
    for (auto c : counts) chi.n += c;
    chi.counts = std::move(counts);
    return chi;
}

GeneratorMatrix matrix_from_characteristic_vector(const CharacteristicVector& chi) {
    if (chi.n == 0) throw Error(Errc::AllColumnsZero, "characteristic vector is empty");
    std::vector<std::vector<Element>> cols;
    for (std::size_t u = 0; u < chi.counts.size(); ++u) {
        if (chi.counts[u] == 0) continue;
        auto col = canonical_column(chi.p, chi.k, u + 1);
        for (std::uint32_t c = 0; c < chi.counts[u]; ++c) cols.push_back(col);
    }
    GeneratorMatrix g(make_field(chi.p, 1), chi.k, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::uint32_t r = 0; r < chi.k; ++r) g.set(r, c, cols[c][r]);
    return g;
}

}  // namespace wdist
