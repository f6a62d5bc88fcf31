#include "wdist/finite_field.hpp"

#include <array>
#include <cassert>
#include <string>

#include "wdist/error.hpp"

namespace wdist {

namespace {

// Remainder of a modulo the monic polynomial b over F_p. Both constant term first.
Polynomial poly_mod(Polynomial a, std::span<const std::uint32_t> b, std::uint32_t p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint64_t lead = a.back();
        if (lead != 0) {
            const std::size_t shift = a.size() - 1 - db;
            for (std::size_t i = 0; i < db; ++i) {
                const std::uint64_t sub = (lead * b[i]) % p;
                a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
            }
        }
        a.pop_back();
    }
    return a;
}

bool all_zero(const Polynomial& a) {
    for (auto c : a)
        if (c != 0) return false;
    return true;
}

struct BuiltinEntry {
    std::uint32_t p;
    std::uint32_t m;
    std::array<std::uint32_t, 9> coeffs;
};

// Smallest monic irreducible per order, ranked by sum_{i<m} c_i p^i.
constexpr BuiltinEntry kBuiltin[] = {
    {2, 2, {1, 1, 1}},
    {2, 3, {1, 1, 0, 1}},
    {3, 2, {1, 0, 1}},
    {2, 4, {1, 1, 0, 0, 1}},
    {5, 2, {2, 0, 1}},
    {3, 3, {1, 2, 0, 1}},
    {2, 5, {1, 0, 1, 0, 0, 1}},
    {7, 2, {1, 0, 1}},
    {2, 6, {1, 1, 0, 0, 0, 0, 1}},
    {3, 4, {2, 1, 0, 0, 1}},
    {11, 2, {1, 0, 1}},
    {5, 3, {1, 1, 0, 1}},
    {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
    {13, 2, {2, 0, 1}},
    {3, 5, {1, 2, 0, 0, 0, 1}},
    {2, 8, {1, 1, 0, 1, 1, 0, 0, 0, 1}},
};

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) noexcept {
    if (q < 2) return std::nullopt;
    std::uint64_t p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) p = q;
    std::uint32_t m = 0;
    while (q % p == 0) {
        q /= p;
        ++m;
    }
    if (q != 1 || p > 0xffffffffu) return std::nullopt;
    return std::make_pair(static_cast<std::uint32_t>(p), m);
}

bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p) {
    if (poly.size() < 2 || poly.back() == 0) return false;
    const std::size_t deg = poly.size() - 1;
    if (deg == 1) return true;
    Polynomial f(poly.begin(), poly.end());
    // trial division by every monic polynomial of degree 1..deg/2
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        Polynomial g(d + 1, 0);
        g[d] = 1;
        while (true) {
            if (all_zero(poly_mod(f, g, p))) return false;
            std::size_t i = 0;
            while (i < d && ++g[i] == p) g[i++] = 0;
            if (i == d) break;
        }
    }
    return true;
}

std::optional<Polynomial> builtin_modulus(std::uint32_t p, std::uint32_t m) {
    for (const auto& e : kBuiltin)
        if (e.p == p && e.m == m) return Polynomial(e.coeffs.begin(), e.coeffs.begin() + m + 1);
    return std::nullopt;
}

Field make_field(std::uint32_t p, std::uint32_t m, std::optional<Polynomial> modulus) {
    if (p < 2 || p > kMaxCharacteristic || !is_prime(p))
        throw Error(Errc::NonPrimeCharacteristic, "characteristic " + std::to_string(p) + " is not a supported prime");
    if (m < 1) throw Error(Errc::InvalidArgument, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxOrder)
            throw Error(Errc::UnsupportedOrder, "field order " + std::to_string(p) + "^" + std::to_string(m) +
                                                    " exceeds 2^20");
    }

    Field f;
    f.p_ = p;
    f.m_ = m;
    f.q_ = static_cast<std::uint32_t>(q);
    if (m == 1) {
        f.modulus_ = {0, 1};
    } else {
        if (!modulus) modulus = builtin_modulus(p, m);
        if (!modulus)
            throw Error(Errc::UnsupportedOrder,
                        "no built-in modulus for q = " + std::to_string(q) + "; supply one explicitly");
        if (modulus->size() != m + 1)
            throw Error(Errc::InvalidArgument, "modulus must have m + 1 = " + std::to_string(m + 1) + " coefficients");
        for (auto c : *modulus)
            if (c >= p) throw Error(Errc::InvalidArgument, "modulus coefficient out of range [0, p)");
        if (modulus->back() != 1) throw Error(Errc::InvalidArgument, "modulus must be monic");
        if (!is_irreducible(*modulus, p))
            throw Error(Errc::ReduciblePolynomial, "modulus polynomial is reducible over F_" + std::to_string(p));
        f.modulus_ = std::move(*modulus);
    }

    f.digit_weight_.resize(m);
    Element w = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        f.digit_weight_[i] = w;
        w *= p;
    }

    auto tables = std::make_shared<Field::Tables>();
    if (f.q_ <= kTableOrderLimit) {
        tables->mul.resize(std::size_t{f.q_} * f.q_);
        for (Element a = 0; a < f.q_; ++a)
            for (Element b = 0; b < f.q_; ++b) tables->mul[std::size_t{a} * f.q_ + b] = f.mul_poly(a, b);
        f.tables_ = tables;
        tables->inv.assign(f.q_, 0);
        for (Element a = 1; a < f.q_; ++a)
            for (Element b = 1; b < f.q_; ++b)
                if (tables->mul[std::size_t{a} * f.q_ + b] == 1) {
                    tables->inv[a] = b;
                    break;
                }
    } else {
        f.tables_ = tables;
    }

    f.basis_trace_.resize(m);
    for (std::uint32_t i = 0; i < m; ++i) {
        Element x = f.digit_weight_[i];
        Element acc = 0;
        for (std::uint32_t j = 0; j < m; ++j) {
            acc = f.add(acc, x);
            x = f.pow(x, p);
        }
        assert(acc < p);
        f.basis_trace_[i] = acc;
    }
    return f;
}

Field field_of_order(std::uint64_t q, std::optional<Polynomial> modulus) {
    auto pm = prime_power(q);
    if (!pm) throw Error(Errc::UnsupportedOrder, "q = " + std::to_string(q) + " is not a prime power");
    return make_field(pm->first, pm->second, std::move(modulus));
}

Element Field::add(Element a, Element b) const noexcept {
    if (p_ == 2) return a ^ b;
    if (m_ == 1) {
        const Element s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Element r = 0;
    for (std::uint32_t i = 0; i < m_; ++i) {
        Element d = a % p_ + b % p_;
        if (d >= p_) d -= p_;
        r += d * digit_weight_[i];
        a /= p_;
        b /= p_;
    }
    return r;
}

Element Field::neg(Element a) const noexcept {
    if (p_ == 2) return a;
    if (m_ == 1) return a == 0 ? 0 : p_ - a;
    Element r = 0;
    for (std::uint32_t i = 0; i < m_; ++i) {
        const Element d = a % p_;
        r += (d == 0 ? 0 : p_ - d) * digit_weight_[i];
        a /= p_;
    }
    return r;
}

Element Field::sub(Element a, Element b) const noexcept { return add(a, neg(b)); }

Element Field::mul_poly(Element a, Element b) const noexcept {
    if (m_ == 1) return static_cast<Element>((std::uint64_t{a} * b) % p_);
    std::array<std::uint64_t, 40> prod{};
    std::array<std::uint32_t, 20> da{}, db{};
    for (std::uint32_t i = 0; i < m_; ++i) {
        da[i] = a % p_;
        db[i] = b % p_;
        a /= p_;
        b /= p_;
    }
    for (std::uint32_t i = 0; i < m_; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_;
    }
    // reduce with the monic modulus, top degree down
    for (std::uint32_t d = 2 * m_ - 2; d >= m_; --d) {
        const std::uint64_t lead = prod[d];
        if (lead == 0) continue;
        prod[d] = 0;
        for (std::uint32_t i = 0; i < m_; ++i) {
            const std::uint64_t sub = (lead * modulus_[i]) % p_;
            prod[d - m_ + i] = (prod[d - m_ + i] + p_ - sub) % p_;
        }
    }
    Element r = 0;
    for (std::uint32_t i = 0; i < m_; ++i) r += static_cast<Element>(prod[i]) * digit_weight_[i];
    return r;
}

Element Field::mul(Element a, Element b) const noexcept {
    if (!tables_->mul.empty()) return tables_->mul[std::size_t{a} * q_ + b];
    return mul_poly(a, b);
}

Element Field::pow(Element a, std::uint64_t e) const noexcept {
    Element r = 1;
    while (e != 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Element Field::inv(Element a) const {
    if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
    if (!tables_->inv.empty()) return tables_->inv[a];
    return pow(a, q_ - 2);
}

std::uint32_t Field::trace(Element a) const noexcept {
    if (m_ == 1) return a;
    std::uint64_t acc = 0;
    for (std::uint32_t i = 0; i < m_; ++i) {
        acc += std::uint64_t{a % p_} * basis_trace_[i];
        a /= p_;
    }
    return static_cast<std::uint32_t>(acc % p_);
}

std::vector<Element> Field::nonzero_elements() const {
    std::vector<Element> out(q_ - 1);
    for (Element a = 1; a < q_; ++a) out[a - 1] = a;
    return out;
}

}  // namespace wdist
