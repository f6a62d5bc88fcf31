#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace wdist {

// Field element under the base-p digit encoding: the value sum_i c_i p^i
// stands for the polynomial sum_i c_i x^i reduced modulo the field's
// modulus, constant term in the least significant digit.
using Element = std::uint32_t;

inline constexpr std::uint32_t kMaxCharacteristic = 1u << 15;
inline constexpr std::uint32_t kMaxOrder = 1u << 20;
inline constexpr std::uint32_t kTableOrderLimit = 256;

bool is_prime(std::uint64_t n) noexcept;

// Returns (p, m) with q = p^m, or nullopt if q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) noexcept;

// Coefficients c_0..c_m of a polynomial over F_p, constant term first.
using Polynomial = std::vector<std::uint32_t>;

bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p);

// Built-in modulus: the monic irreducible of degree m whose coefficient
// encoding sum_i c_i p^i (i < m) is smallest. Available for the orders
// 4, 8, 9, 16, 25, 27, 32, 49, 64, 81, 121, 125, 128, 169, 243, 256.
std::optional<Polynomial> builtin_modulus(std::uint32_t p, std::uint32_t m);

/// Finite field F_q, q = p^m. Immutable; copies share the lookup tables.
class Field {
public:
    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t m() const noexcept { return m_; }
    std::uint32_t q() const noexcept { return q_; }
    const Polynomial& modulus() const noexcept { return modulus_; }
    bool is_prime_field() const noexcept { return m_ == 1; }

    bool contains(Element a) const noexcept { return a < q_; }

    Element add(Element a, Element b) const noexcept;
    Element sub(Element a, Element b) const noexcept;
    Element neg(Element a) const noexcept;
    Element mul(Element a, Element b) const noexcept;
    Element inv(Element a) const;  // throws DivisionByZero
    Element pow(Element a, std::uint64_t e) const noexcept;

    /// Absolute trace Tr(a) = a + a^p + ... + a^{p^{m-1}}, as a residue in [0, p).
    std::uint32_t trace(Element a) const noexcept;

    /// 1, 2, ..., q-1 in encoding order; the first entry is the unit.
    std::vector<Element> nonzero_elements() const;

    /// Encoding of x^i, i.e. the i-th polynomial basis vector.
    Element basis_element(std::uint32_t i) const noexcept { return digit_weight_[i]; }

    bool operator==(const Field& other) const noexcept {
        return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
    }

private:
    friend Field make_field(std::uint32_t, std::uint32_t, std::optional<Polynomial>);

    struct Tables {
        std::vector<std::uint32_t> mul;  // q*q, only when q <= kTableOrderLimit
        std::vector<std::uint32_t> inv;  // q
    };

    Field() = default;
    Element mul_poly(Element a, Element b) const noexcept;

    std::uint32_t p_ = 2;
    std::uint32_t m_ = 1;
    std::uint32_t q_ = 2;
    Polynomial modulus_;
    std::vector<Element> digit_weight_;      // p^i, i < m
    std::vector<std::uint32_t> basis_trace_;  // Tr(x^i), i < m
    std::shared_ptr<const Tables> tables_;
};

/// Validated field construction. For m = 1 the polynomial is ignored.
/// Throws NonPrimeCharacteristic, ReduciblePolynomial, UnsupportedOrder or
/// InvalidArgument.
Field make_field(std::uint32_t p, std::uint32_t m, std::optional<Polynomial> modulus = std::nullopt);

/// Field of order q; q must be a prime power.
Field field_of_order(std::uint64_t q, std::optional<Polynomial> modulus = std::nullopt);

}  // namespace wdist
