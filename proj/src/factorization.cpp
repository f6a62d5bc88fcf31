#include "wdist/factorization.hpp"

#include <string>

#include "wdist/error.hpp"
#include "wdist/transform_prime.hpp"

namespace wdist {

void DenseMatrix::place(std::size_t r, std::size_t c, const DenseMatrix& block) {
    for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j) set(r + i, c + j, block.at(i, j));
}

std::vector<std::int64_t> DenseMatrix::apply(std::span<const std::int64_t> x) const {
    if (x.size() != cols_) throw Error(Errc::LengthMismatch, "matrix-vector size mismatch");
    std::vector<std::int64_t> y(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        const std::uint8_t* row = a_.data() + r * cols_;
        std::int64_t acc = 0;
        for (std::size_t c = 0; c < cols_; ++c)
            if (row[c]) acc += row[c] * x[c];
        y[r] = acc;
    }
    return y;
}

FactorMatrix identity_factor(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return {FactorKind::Identity, std::move(m)};
}

FactorMatrix shift_factor(std::uint32_t p, std::int64_t e) {
    const auto sp = static_cast<std::int64_t>(p);
    const std::size_t shift = static_cast<std::size_t>(((e % sp) + sp) % sp);
    DenseMatrix m(p, p);
    for (std::size_t i = 0; i < p; ++i) m.set((i + shift) % p, i, 1);
    return {FactorKind::ShiftPower, std::move(m)};
}

FactorMatrix selector_factor(std::uint32_t p, std::uint32_t j) {
    DenseMatrix m(p, p);
    for (std::size_t c = 0; c < p; ++c) m.set(j, c, 1);
    return {FactorKind::Selector, std::move(m)};
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.at(i, j)) out.place(i * b.rows(), j * b.cols(), b);
    return out;
}

namespace {

DenseMatrix ones_column(std::size_t len) {
    DenseMatrix m(len, 1);
    for (std::size_t i = 0; i < len; ++i) m.set(i, 0, 1);
    return m;
}

// T_{2,2}: block (a, b) is P^{ab} for a, b < p; the last block column holds
// P^{a-1}; the last block row is E_0 ... E_{p-1} followed by E_1.
DenseMatrix t22(std::uint32_t p) {
    const std::size_t dim = std::size_t{p} * (p + 1);
    DenseMatrix t(dim, dim);
    for (std::uint32_t a = 0; a < p; ++a) {
        for (std::uint32_t b = 0; b < p; ++b)
            t.place(a * p, b * p, shift_factor(p, std::int64_t{a} * b).matrix);
        t.place(a * p, std::size_t{p} * p, shift_factor(p, std::int64_t{a} - 1).matrix);
    }
    for (std::uint32_t b = 0; b < p; ++b) t.place(std::size_t{p} * p, b * p, selector_factor(p, b).matrix);
    t.place(std::size_t{p} * p, std::size_t{p} * p, selector_factor(p, 1).matrix);
    return t;
}

// T_{k,k}, k > 2, with theta = theta(p, k-1): blocks I_theta (x) P^{ab},
// last block column 1 (x) P^{a-1}, last block row (E_b 0) ... then I_p.
DenseMatrix tkk(std::uint32_t p, std::uint32_t k) {
    const std::size_t th = theta(p, k - 1);
    const std::size_t sub = th * p;
    const std::size_t dim = sub * p + p;
    DenseMatrix t(dim, dim);
    const DenseMatrix eye = identity_factor(th).matrix;
    const DenseMatrix ones = ones_column(th);
    for (std::uint32_t a = 0; a < p; ++a) {
        for (std::uint32_t b = 0; b < p; ++b)
            t.place(a * sub, b * sub, kron(eye, shift_factor(p, std::int64_t{a} * b).matrix));
        t.place(a * sub, sub * p, kron(ones, shift_factor(p, std::int64_t{a} - 1).matrix));
    }
    for (std::uint32_t b = 0; b < p; ++b) t.place(sub * p, b * sub, selector_factor(p, b).matrix);
    t.place(sub * p, sub * p, identity_factor(p).matrix);
    return t;
}

DenseMatrix tkl(std::uint32_t p, std::uint32_t k, std::uint32_t l) {
    if (k == l) return k == 2 ? t22(p) : tkk(p, k);
    // blockdiag(I_p (x) T_{k-1,l}, I_p)
    const DenseMatrix inner = kron(identity_factor(p).matrix, tkl(p, k - 1, l));
    DenseMatrix t(inner.rows() + p, inner.cols() + p);
    t.place(0, 0, inner);
    t.place(inner.rows(), inner.cols(), identity_factor(p).matrix);
    return t;
}

void check_dense_size(std::uint32_t p, std::uint32_t k) {
    const std::uint64_t dim = std::uint64_t{p} * theta(p, k);
    if (dim > kDenseVerifierLimit)
        throw Error(Errc::TooLargeForDenseVerifier, "p * theta(p, k) = " + std::to_string(dim) +
                                                        " exceeds the dense verifier limit " +
                                                        std::to_string(kDenseVerifierLimit));
}

}  // namespace

FactorMatrix transform_factor(std::uint32_t p, std::uint32_t k, std::uint32_t l) {
    if (l < 2 || l > k) throw Error(Errc::InvalidArgument, "T_{k,l} needs 2 <= l <= k");
    check_dense_size(p, k);
    return {FactorKind::Composite, tkl(p, k, l)};
}

std::vector<std::int64_t> flattened_initial_state(const CharacteristicVector& chi) {
    std::vector<std::int64_t> v(chi.counts.size() * chi.p, 0);
    for (std::size_t i = 0; i < chi.counts.size(); ++i) v[i * chi.p + 1] = chi.counts[i];
    return v;
}

bool verify_factorization(const CharacteristicVector& chi) {
    if (chi.p < 3) throw Error(Errc::InvalidArgument, "the factorization applies to odd primes");
    check_dense_size(chi.p, chi.k);

    auto v = flattened_initial_state(chi);
    for (std::uint32_t l = 2; l <= chi.k; ++l) v = transform_factor(chi.p, chi.k, l).matrix.apply(v);

    TransformState state = init_state(chi);
    main_transform(state);
    const auto& cells = state.cells();
    if (cells.size() != v.size()) return false;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != static_cast<std::int64_t>(cells[i])) return false;
    return true;
}

}  // namespace wdist
