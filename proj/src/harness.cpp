#include "wdist/harness.hpp"

#include <algorithm>

#include "wdist/bruteforce.hpp"
#include "wdist/code_file.hpp"
#include "wdist/error.hpp"
#include "wdist/factorization.hpp"
#include "wdist/walsh_binary.hpp"

namespace wdist {

namespace {

bool oracle_feasible(std::uint64_t q, std::size_t k) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        total *= q;
        if (total > kBruteforceLimit) return false;
    }
    return true;
}

}  // namespace

double median_of(std::vector<double> values) {
    if (values.empty()) return 0;
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    return values.size() % 2 ? values[mid] : (values[mid - 1] + values[mid]) / 2;
}

const BenchMedian* BenchReport::median(std::size_t n, std::string_view method) const {
    for (const auto& m : medians)
        if (m.n == n && m.method == method) return &m;
    return nullptr;
}

BenchReport run_bench(const BenchOptions& options) {
    BenchReport report;
    const bool brute = options.bruteforce && oracle_feasible(options.q, options.k);
    const unsigned repeats = std::max(1u, options.repeats);

    for (const std::size_t n : options.n_list) {
        const GeneratorMatrix g = random_code(options.q, options.k, n, options.seed);
        std::vector<Method> methods{Method::Transform};
        if (brute) methods.push_back(Method::Bruteforce);

        std::vector<std::uint64_t> reference(repeats, 0);
        for (const Method method : methods) {
            ComputeOptions co;
            co.method = method;
            co.threads = options.threads;
            co.memory_budget_bytes = options.memory_budget_bytes;
            (void)compute_weight_distribution(g, co);  // warm-up

            std::vector<double> chi, tr, tot;
            for (unsigned r = 0; r < repeats; ++r) {
                const auto res = compute_weight_distribution(g, co);
                const std::uint64_t sum = res.distribution.checksum();
                if (method == methods.front())
                    reference[r] = sum;
                else if (reference[r] != sum)
                    throw Error(Errc::ChecksumMismatch, "methods disagree on the code with n = " + std::to_string(n));
                report.records.push_back({options.q, options.k, n, std::string(method_name(method)), options.seed, r,
                                          res.timings.chi_ms, res.timings.transform_ms, res.timings.total_ms, sum});
                chi.push_back(res.timings.chi_ms);
                tr.push_back(res.timings.transform_ms);
                tot.push_back(res.timings.total_ms);
            }
            report.medians.push_back({n, std::string(method_name(method)), repeats, median_of(chi), median_of(tr),
                                      median_of(tot)});
        }
    }
    return report;
}

VerifySummary run_verify(const VerifyOptions& options) {
    if (!is_prime(options.p)) throw Error(Errc::NonPrimeCharacteristic, "verify needs a prime p");
    if (options.k < 1) throw Error(Errc::InvalidArgument, "verify needs k >= 1");
    VerifySummary summary;
    SplitMix64 rng(options.seed);
    const std::uint64_t len = theta(options.p, options.k);

    if (options.p == 2) {
        summary.factorization_applicable = false;
        if (len > (std::uint64_t{1} << 26)) throw Error(Errc::TooLarge, "binary verification needs k <= 26");
        for (unsigned t = 0; t < options.trials; ++t) {
            std::vector<std::uint32_t> counts(len);
            for (auto& c : counts) c = static_cast<std::uint32_t>(rng.uniform(9));
            const auto chi = make_characteristic_vector(2, options.k, std::move(counts));
            auto ext = extended_characteristic_vector(chi);
            const auto before = ext;
            fwht_in_place(ext);
            ++summary.parseval_trials;
            if (ext[0] == static_cast<std::int64_t>(chi.n) && parseval_holds(before, ext)) ++summary.parseval_passed;
        }
    } else {
        if (std::uint64_t{options.p} * len > kDenseVerifierLimit)
            throw Error(Errc::TooLargeForDenseVerifier,
                        "p * theta(p, k) = " + std::to_string(options.p * len) + " exceeds the dense verifier limit");
        for (unsigned t = 0; t < options.trials; ++t) {
            std::vector<std::uint32_t> counts(len);
            for (auto& c : counts) c = static_cast<std::uint32_t>(rng.uniform(9));
            const auto chi = make_characteristic_vector(options.p, options.k, std::move(counts));
            ++summary.factorization_trials;
            if (verify_factorization(chi)) ++summary.factorization_passed;
        }
    }

    if (oracle_feasible(options.p, options.k)) {
        const std::size_t k = options.k;
        const std::size_t max_n = std::max<std::size_t>(k, 64);
        for (unsigned t = 0; t < options.trials; ++t) {
            const std::size_t n = k + static_cast<std::size_t>(rng.uniform(max_n - k + 1));
            const auto g = random_code(options.p, k, n, rng.next());
            ComputeOptions co;
            co.method = Method::Transform;
            const auto fast = compute_weight_distribution(g, co).distribution;
            ++summary.oracle_trials;
            if (fast == bruteforce_weight_distribution(g)) ++summary.oracle_passed;
        }
    }
    return summary;
}

}  // namespace wdist
