#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wdist/pipeline.hpp"

namespace wdist {

struct BenchOptions {
    std::uint64_t q = 2;
    std::size_t k = 16;
    std::vector<std::size_t> n_list{30, 300, 3000, 30000};
    std::uint64_t seed = 1;
    unsigned repeats = 5;
    unsigned threads = 1;
    bool bruteforce = true;  // skipped anyway when q^k is past the oracle guard
    std::uint64_t memory_budget_bytes = kDefaultMemoryBudget;
};

struct BenchRecord {
    std::uint64_t q;
    std::size_t k;
    std::size_t n;
    std::string method;
    std::uint64_t seed;
    unsigned repeat;
    double chi_ms;
    double transform_ms;
    double total_ms;
    std::uint64_t checksum;
};

struct BenchMedian {
    std::size_t n;
    std::string method;
    unsigned runs;
    double chi_ms;
    double transform_ms;
    double total_ms;
};

struct BenchReport {
    std::vector<BenchRecord> records;
    std::vector<BenchMedian> medians;

    const BenchMedian* median(std::size_t n, std::string_view method) const;
};

/// Times every method on one random code per length (same seed for every
/// cell). Each cell gets an untimed warm-up run. Throws ChecksumMismatch
/// if the methods disagree on a code.
BenchReport run_bench(const BenchOptions& options);

double median_of(std::vector<double> values);

struct VerifyOptions {
    std::uint32_t p = 3;
    std::uint32_t k = 3;
    unsigned trials = 50;
    std::uint64_t seed = 1;
};

struct VerifySummary {
    bool factorization_applicable = true;  // false for p = 2
    unsigned factorization_passed = 0;
    unsigned factorization_trials = 0;
    unsigned parseval_passed = 0;
    unsigned parseval_trials = 0;
    unsigned oracle_passed = 0;
    unsigned oracle_trials = 0;

    bool all_passed() const noexcept {
        return factorization_passed == factorization_trials && parseval_passed == parseval_trials &&
               oracle_passed == oracle_trials;
    }
};

/// For odd p: the dense factorization check on `trials` random vectors
/// (TooLargeForDenseVerifier past the dense limit). For p = 2 the
/// factorization is not defined and the Parseval identity of the butterfly
/// is checked instead. Both run transform-vs-brute-force on random codes
/// when p^k is within the oracle guard.
VerifySummary run_verify(const VerifyOptions& options);

}  // namespace wdist
