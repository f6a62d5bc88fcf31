#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "oracle.hpp"
#include "wdist/bruteforce.hpp"
#include "wdist/code_file.hpp"
#include "wdist/error.hpp"
#include "wdist/harness.hpp"
#include "wdist/pipeline.hpp"

using namespace wdist;

namespace {

ComputeOptions with(Method m, unsigned threads = 1) {
    ComputeOptions o;
    o.method = m;
    o.threads = threads;
    return o;
}

}  // namespace

TEST(Methods, Names) {
    for (Method m : {Method::Auto, Method::Transform, Method::Bruteforce}) EXPECT_EQ(parse_method(method_name(m)), m);
    EXPECT_FALSE(parse_method("fast"));
}

TEST(Compute, MethodsAgree) {
    std::mt19937_64 rng(1);
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        for (int t = 0; t < 6; ++t) {
            const std::size_t k = 1 + rng() % 4, n = k + rng() % 30;
            auto g = random_code(q, k, n, rng());
            // a zero column somewhere
            if (t % 2) {
                GeneratorMatrix z(g.field(), k, n + 1);
                for (std::size_t r = 0; r < k; ++r)
                    for (std::size_t c = 0; c < n; ++c) z.set(r, c + (c >= n / 2), g.at(r, c));
                g = z;
            }
            const auto a = compute_weight_distribution(g, with(Method::Transform));
            const auto b = compute_weight_distribution(g, with(Method::Bruteforce));
            EXPECT_EQ(a.method, Method::Transform);
            EXPECT_EQ(b.method, Method::Bruteforce);
            EXPECT_EQ(a.distribution, b.distribution) << "q=" << q;
            EXPECT_EQ(a.distribution.checksum(), b.distribution.checksum());
            EXPECT_EQ(a.distribution.n, g.n());
            EXPECT_EQ(a.distribution, compute_weight_distribution(g, with(Method::Transform, 3)).distribution);
        }
    }
}

TEST(Compute, AutoSelection) {
    EXPECT_EQ(compute_weight_distribution(random_code(2, 10, 20, 1)).method, Method::Bruteforce);
    EXPECT_EQ(compute_weight_distribution(random_code(2, 12, 20, 1)).method, Method::Bruteforce);
    EXPECT_EQ(compute_weight_distribution(random_code(2, 13, 20, 1)).method, Method::Transform);
    EXPECT_EQ(compute_weight_distribution(random_code(3, 8, 20, 1)).method, Method::Transform);
}

TEST(Compute, MemoryBudget) {
    const auto g = random_code(3, 9, 30, 1);
    ComputeOptions o = with(Method::Transform);
    o.memory_budget_bytes = 1024;
    try {
        compute_weight_distribution(g, o);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::MemoryBudget);
        EXPECT_EQ(error_class(e.code()), ErrorClass::ResourceLimit);
    }
    // auto falls back to enumeration when the transform does not fit
    o.method = Method::Auto;
    const auto r = compute_weight_distribution(g, o);
    EXPECT_EQ(r.method, Method::Bruteforce);
    EXPECT_EQ(r.distribution, compute_weight_distribution(g, with(Method::Transform)).distribution);

    EXPECT_EQ(transform_memory_units(3, 2, 10), 3 * 4 + 9 + 20u);
}

TEST(Compute, Limits) {
    const auto big = random_code(2, 25, 30, 2);
    try {
        compute_weight_distribution(big, with(Method::Bruteforce));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::TooLarge);
    }
    const auto huge = random_code(3, 41, 45, 2);
    try {
        compute_weight_distribution(huge, with(Method::Transform));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::DimensionTooLarge);
    }
    EXPECT_THROW(compute_weight_distribution(huge, with(Method::Auto)), Error);
}

TEST(Compute, EnvironmentBudget) {
    ::setenv("WDIST_MEM_BUDGET_BYTES", "4096", 1);
    EXPECT_EQ(memory_budget_from_env(), 4096u);
    ::setenv("WDIST_MEM_BUDGET_BYTES", "lots", 1);
    EXPECT_EQ(memory_budget_from_env(), kDefaultMemoryBudget);
    ::unsetenv("WDIST_MEM_BUDGET_BYTES");
    EXPECT_EQ(memory_budget_from_env(), kDefaultMemoryBudget);
}

TEST(Compute, TimingsArePopulated) {
    const auto r = compute_weight_distribution(random_code(3, 7, 500, 4), with(Method::Transform));
    EXPECT_GE(r.timings.chi_ms, 0.0);
    EXPECT_GE(r.timings.transform_ms, 0.0);
    EXPECT_GE(r.timings.total_ms, r.timings.transform_ms);
}

TEST(Harness, Median) {
    EXPECT_EQ(median_of({3, 1, 2}), 2);
    EXPECT_EQ(median_of({4, 1, 2, 3}), 2.5);
    EXPECT_EQ(median_of({}), 0);
}

TEST(Harness, BenchRecordsAndMedians) {
    BenchOptions o;
    o.q = 3;
    o.k = 5;
    o.n_list = {20, 200};
    o.repeats = 5;
    const auto report = run_bench(o);
    EXPECT_EQ(report.records.size(), 2u * 2u * 5u);
    ASSERT_EQ(report.medians.size(), 4u);
    for (const auto& m : report.medians) EXPECT_EQ(m.runs, 5u);
    ASSERT_TRUE(report.median(200, "bruteforce"));
    EXPECT_FALSE(report.median(30, "transform"));
    for (const auto& r : report.records) {
        EXPECT_EQ(r.seed, 1u);
        const auto& first = report.records[r.n == 20 ? 0 : 10];
        EXPECT_EQ(r.checksum, first.checksum);
    }
}

TEST(Harness, BenchWithoutBruteforce) {
    BenchOptions o;
    o.q = 2;
    o.k = 8;
    o.n_list = {40};
    o.repeats = 1;
    o.bruteforce = false;
    const auto report = run_bench(o);
    ASSERT_EQ(report.medians.size(), 1u);
    EXPECT_EQ(report.medians[0].method, "transform");
}

TEST(Harness, Verify) {
    VerifyOptions o;
    o.p = 3;
    o.k = 3;
    o.trials = 20;
    const auto s = run_verify(o);
    EXPECT_TRUE(s.factorization_applicable);
    EXPECT_EQ(s.factorization_trials, 20u);
    EXPECT_EQ(s.oracle_trials, 20u);
    EXPECT_TRUE(s.all_passed());

    o.p = 2;
    o.k = 6;
    const auto b = run_verify(o);
    EXPECT_FALSE(b.factorization_applicable);
    EXPECT_EQ(b.factorization_trials, 0u);
    EXPECT_EQ(b.parseval_trials, 20u);
    EXPECT_TRUE(b.all_passed());

    o.p = 3;
    o.k = 9;
    try {
        run_verify(o);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::TooLargeForDenseVerifier);
    }
    o.p = 4;
    EXPECT_THROW(run_verify(o), Error);
}
