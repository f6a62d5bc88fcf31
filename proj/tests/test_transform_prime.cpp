#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "wdist/code_file.hpp"
#include "wdist/error.hpp"
#include "wdist/transform_prime.hpp"

using namespace wdist;

namespace {

using Rows = std::vector<std::vector<std::uint32_t>>;

const std::vector<std::uint32_t> kChi{0, 4, 3, 2, 0, 8, 5, 1, 1, 4, 3, 2, 3};

const Rows kLevel2{{2, 7, 0}, {3, 2, 4},  {4, 0, 5}, {0, 6, 3}, {1, 13, 0}, {5, 1, 8}, {8, 0, 6},
                   {0, 9, 5}, {2, 8, 0}, {3, 3, 4}, {4, 1, 5}, {1, 6, 3}, {0, 3, 0}};

const Rows kFinal{{8, 28, 0},  {14, 6, 16}, {19, 1, 16}, {4, 21, 11}, {10, 11, 15}, {14, 14, 8}, {11, 16, 9},
                  {11, 12, 13}, {15, 9, 12}, {8, 13, 15}, {9, 10, 17}, {12, 12, 12}, {9, 17, 10}};

TransformState example_state() { return init_state(make_characteristic_vector(3, 3, kChi)); }

std::vector<std::uint32_t> random_counts(std::mt19937_64& rng, std::uint64_t len, std::uint32_t max) {
    std::vector<std::uint32_t> c(len);
    for (auto& x : c) x = static_cast<std::uint32_t>(rng() % (max + 1));
    return c;
}

}  // namespace

TEST(InitState, Examples) {
    const auto s = example_state();
    EXPECT_EQ(s.level(), 1u);
    ASSERT_EQ(s.rows(), 13u);
    for (std::uint64_t i = 0; i < 13; ++i) EXPECT_EQ(s.to_rows()[i], (std::vector<std::uint32_t>{0, kChi[i], 0}));

    const auto zero = init_state(make_characteristic_vector(5, 2, std::vector<std::uint32_t>(6, 0)));
    for (auto v : zero.cells()) EXPECT_EQ(v, 0u);

    const auto single = init_state(make_characteristic_vector(3, 1, {7}));
    EXPECT_EQ(single.to_rows(), (Rows{{0, 7, 0}}));
}

TEST(InitState, Errors) {
    CharacteristicVector bad{3, 2, {1, 2, 3}, 6};
    try {
        init_state(bad);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::LengthMismatch);
    }
    EXPECT_THROW(TransformState(2, 3), Error);
    EXPECT_THROW(TransformState(9, 2), Error);
}

TEST(CircularShift, Examples) {
    const std::vector<std::uint32_t> a{1, 13, 0}, b{0, 3, 0}, c{1, 2, 3, 4, 5};
    EXPECT_EQ(circular_shift_right(a, 1), (std::vector<std::uint32_t>{0, 1, 13}));
    EXPECT_EQ(circular_shift_right(a, 0), a);
    EXPECT_EQ(circular_shift_right(b, 2), (std::vector<std::uint32_t>{3, 0, 0}));
    EXPECT_EQ(circular_shift_right(c, 7), circular_shift_right(c, 2));
    EXPECT_EQ(circular_shift_right(circular_shift_right(c, 2), 3), c);
}

TEST(MainTransform, ExampleLevels) {
    auto s = example_state();
    advance_level(s);
    EXPECT_EQ(s.level(), 2u);
    EXPECT_EQ(s.to_rows(), kLevel2);
    advance_level(s);
    EXPECT_EQ(s.level(), 3u);
    EXPECT_EQ(s.to_rows(), kFinal);

    auto t = example_state();
    main_transform(t);
    EXPECT_EQ(t.to_rows(), kFinal);
}

TEST(MainTransform, SubVectorExample) {
    auto s = init_state(make_characteristic_vector(3, 2, {0, 4, 3, 2}));
    main_transform(s);
    EXPECT_EQ(s.to_rows(), (Rows{{2, 7, 0}, {3, 2, 4}, {4, 0, 5}, {0, 6, 3}}));
}

TEST(MainTransform, LevelOneIsFixed) {
    auto s = init_state(make_characteristic_vector(5, 1, {4}));
    main_transform(s);
    EXPECT_EQ(s.to_rows(), (Rows{{0, 4, 0, 0, 0}}));
}

TEST(NewH, Add0Substep) {
    // LastRow reads the first row of each sub-block after Add0 has run, so
    // H[13] exposes Add0's (1,13,0) + lcs(0,3,0) = (4,13,0)
    auto s = example_state();
    advance_level(s);
    new_h(s, 0, 13, 4);
    EXPECT_EQ(s.to_rows()[12], (std::vector<std::uint32_t>{2 + 7 + 0, 4 + 13 + 0, 2 + 8 + 0}));
    EXPECT_EQ(s.to_rows(), kFinal);
}

TEST(NewH, ZeroBlockStaysZero) {
    TransformState s(3, 2);
    new_h(s, 0, 4, 1);
    for (auto v : s.cells()) EXPECT_EQ(v, 0u);
}

TEST(NewH, BadBlockBounds) {
    auto s = example_state();
    for (auto [r0, r, th] : {std::tuple{0, 12, 4}, std::tuple{0, 13, 3}, std::tuple{1, 14, 4}, std::tuple{0, 13, 0}}) {
        try {
            new_h(s, r0, r, th);
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), Errc::IndexOutOfBlock);
        }
    }
}

TEST(MainTransform, MatchesDenseDefinition) {
    std::mt19937_64 rng(99);
    for (std::uint32_t p : {3u, 5u, 7u})
        for (std::uint32_t k = 1; k <= (p == 3 ? 5u : 3u); ++k)
            for (int t = 0; t < 4; ++t) {
                const auto counts = random_counts(rng, theta(p, k), 6);
                auto s = init_state(make_characteristic_vector(p, k, counts));
                main_transform(s);
                EXPECT_EQ(s.to_rows(), oracle::dense_chi_transform(p, k, counts)) << "p=" << p << " k=" << k;
            }
}

TEST(MainTransform, RowSumsAndThreads) {
    std::mt19937_64 rng(4);
    for (std::uint32_t p : {3u, 5u}) {
        const std::uint32_t k = p == 3 ? 7 : 4;
        const auto counts = random_counts(rng, theta(p, k), 9);
        const auto chi = make_characteristic_vector(p, k, counts);
        auto a = init_state(chi);
        auto b = a;
        TransformStats sa, sb;
        main_transform(a, &sa, 1);
        main_transform(b, &sb, 3);
        EXPECT_EQ(a.cells(), b.cells());
        EXPECT_EQ(sa.additions, sb.additions);
        for (std::uint64_t i = 0; i < a.rows(); ++i) {
            std::uint64_t sum = 0;
            for (auto v : a.row(i)) sum += v;
            EXPECT_EQ(sum, chi.n);
        }
    }
}

TEST(Weights, Example) {
    auto s = example_state();
    main_transform(s);
    EXPECT_EQ(weights_from_state(s, 36),
              (std::vector<std::uint64_t>{28, 22, 17, 32, 26, 22, 25, 25, 21, 28, 27, 24, 27}));
}

TEST(Weights, EdgeRowsAndMismatch) {
    TransformState single(3, 1);
    single.row(0)[1] = 5;
    EXPECT_EQ(weights_from_state(single, 5), (std::vector<std::uint64_t>{5}));

    TransformState zero(3, 2);
    for (std::uint64_t i = 0; i < zero.rows(); ++i) zero.row(i)[0] = 4;
    EXPECT_EQ(weights_from_state(zero, 4), std::vector<std::uint64_t>(4, 0));

    auto s = example_state();
    main_transform(s);
    try {
        weights_from_state(s, 35);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::RowSumMismatch);
    }
}

TEST(PrimeDistribution, Examples) {
    const auto wd = prime_weight_distribution(make_characteristic_vector(3, 3, kChi));
    using Counts = std::map<std::uint64_t, std::uint64_t>;
    EXPECT_EQ(wd.counts, (Counts{{0, 1},
                                 {17, 2},
                                 {21, 2},
                                 {22, 4},
                                 {24, 2},
                                 {25, 4},
                                 {26, 2},
                                 {27, 4},
                                 {28, 4},
                                 {32, 2}}));
    EXPECT_EQ(wd.total(), 27u);
    // the same code reconstructed column by column, enumerated directly
    const auto g = matrix_from_characteristic_vector(make_characteristic_vector(3, 3, kChi));
    EXPECT_EQ(wd, oracle::prime_distribution(3, oracle::rows_of(g)));

    EXPECT_EQ(prime_weight_distribution(make_characteristic_vector(3, 2, {1, 1, 1, 1})).counts,
              (Counts{{0, 1}, {3, 8}}));
    EXPECT_EQ(prime_weight_distribution(make_characteristic_vector(7, 1, {9})).counts, (Counts{{0, 1}, {9, 6}}));
}

TEST(PrimeDistribution, BinaryIsRejected) {
    EXPECT_THROW(prime_weight_distribution(make_characteristic_vector(2, 2, {1, 1, 1})), Error);
}

TEST(PrimeDistribution, OracleEquivalence) {
    std::mt19937_64 rng(31337);
    for (std::uint32_t p : {3u, 5u, 7u})
        for (int t = 0; t < 25; ++t) {
            const std::size_t kmax = p == 3 ? 7 : (p == 5 ? 5 : 4);
            const std::size_t k = 1 + rng() % kmax, n = k + rng() % (65 - k);
            const auto g = strip_zero_columns(random_code(p, k, n, rng())).matrix;
            const auto wd = prime_weight_distribution(characteristic_vector(g));
            EXPECT_EQ(wd, oracle::prime_distribution(p, oracle::rows_of(g))) << "p=" << p << " k=" << k;
        }
}

TEST(PrimeDistribution, ColumnScalingInvariance) {
    std::mt19937_64 rng(12);
    for (std::uint32_t p : {3u, 5u, 7u}) {
        const auto g = strip_zero_columns(random_code(p, 3, 25, rng())).matrix;
        GeneratorMatrix h = g;
        for (std::size_t c = 0; c < g.n(); ++c) {
            const Element s = 1 + static_cast<Element>(rng() % (p - 1));
            for (std::size_t r = 0; r < g.k(); ++r) h.set(r, c, g.field().mul(s, g.at(r, c)));
        }
        EXPECT_EQ(prime_weight_distribution(characteristic_vector(g)),
                  prime_weight_distribution(characteristic_vector(h)));
    }
}

TEST(PrimeDistribution, AdditionCountBound) {
    for (std::uint32_t p : {3u, 5u, 7u})
        for (std::uint32_t k = 2; k <= (p == 3 ? 8u : 4u); ++k) {
            const auto counts = std::vector<std::uint32_t>(theta(p, k), 1);
            TransformStats stats;
            auto s = init_state(make_characteristic_vector(p, k, counts));
            main_transform(s, &stats);
            double bound = 2.0 * (k - 1) * static_cast<double>(checked_pow(p, k + 2)) / (p - 1);
            EXPECT_GT(stats.additions, 0u);
            EXPECT_LE(static_cast<double>(stats.additions), bound) << p << " " << k;
        }
}
