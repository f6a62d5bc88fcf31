#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <new>
#include <sstream>

#include "wdist/code_file.hpp"
#include "wdist/error.hpp"
#include "wdist/harness.hpp"
#include "wdist/pipeline.hpp"

namespace wdist::cli {

namespace {

using json = nlohmann::ordered_json;

enum Exit { kOk = 0, kValidation = 2, kResource = 3, kConsistency = 4 };

int exit_code(const Error& e) {
    switch (error_class(e.code())) {
        case ErrorClass::Validation: return kValidation;
        case ErrorClass::ResourceLimit: return kResource;
        case ErrorClass::Consistency: return kConsistency;
    }
    return kConsistency;
}

std::string read_input(const std::string& path, std::istream& in) {
    if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(Errc::InvalidArgument, "cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

json distribution_json(const WeightDistribution& wd) {
    json d = json::object();
    for (const auto& [w, a] : wd.counts) d[std::to_string(w)] = a;
    return d;
}

struct ComputeArgs {
    std::string file;
    std::string method = "auto";
    std::string format = "text";
    unsigned threads = 1;
};

int cmd_compute(const ComputeArgs& a, std::istream& in, std::ostream& out) {
    const auto method = parse_method(a.method);
    if (!method) throw Error(Errc::InvalidArgument, "unknown method " + a.method);
    const GeneratorMatrix g = parse_code_file(read_input(a.file, in));

    ComputeOptions co;
    co.method = *method;
    co.threads = a.threads;
    co.memory_budget_bytes = memory_budget_from_env();
    const ComputeResult r = compute_weight_distribution(g, co);
    const auto& wd = r.distribution;
    const auto d = wd.min_weight();

    if (a.format == "json") {
        json j;
        j["q"] = g.field().q();
        j["k"] = g.k();
        j["n"] = g.n();
        j["d"] = d ? json(*d) : json(nullptr);
        j["method"] = method_name(r.method);
        j["distribution"] = distribution_json(wd);
        j["checksum"] = wd.checksum();
        j["timings"] = {{"chi_ms", r.timings.chi_ms},
                        {"transform_ms", r.timings.transform_ms},
                        {"total_ms", r.timings.total_ms}};
        out << j.dump(2) << '\n';
    } else {
        for (const auto& [w, c] : wd.counts) out << w << ' ' << c << '\n';
        out << "sum " << wd.total() << '\n';
        out << "min_weight " << (d ? std::to_string(*d) : "none") << '\n';
    }
    return kOk;
}

struct RandomArgs {
    std::uint64_t q = 2;
    std::size_t k = 1;
    std::size_t n = 1;
    std::uint64_t seed = 1;
    std::vector<std::uint32_t> poly;
};

int cmd_random(const RandomArgs& a, std::ostream& out) {
    std::optional<Polynomial> modulus;
    if (!a.poly.empty()) modulus = a.poly;
    out << format_code_file(random_code(a.q, a.k, a.n, a.seed, modulus));
    return kOk;
}

struct BenchArgs {
    BenchOptions opts;
    std::string format = "text";
    bool no_bruteforce = false;
};

int cmd_bench(BenchArgs a, std::ostream& out) {
    a.opts.bruteforce = !a.no_bruteforce;
    a.opts.memory_budget_bytes = memory_budget_from_env();
    const BenchReport report = run_bench(a.opts);

    if (a.format == "json") {
        json records = json::array();
        for (const auto& r : report.records)
            records.push_back({{"q", r.q},
                               {"k", r.k},
                               {"n", r.n},
                               {"method", r.method},
                               {"seed", r.seed},
                               {"repeat", r.repeat},
                               {"chi_ms", r.chi_ms},
                               {"transform_ms", r.transform_ms},
                               {"total_ms", r.total_ms},
                               {"checksum", r.checksum}});
        json medians = json::array();
        for (const auto& m : report.medians)
            medians.push_back({{"n", m.n},
                               {"method", m.method},
                               {"runs", m.runs},
                               {"chi_ms", m.chi_ms},
                               {"transform_ms", m.transform_ms},
                               {"total_ms", m.total_ms}});
        out << json{{"records", records}, {"medians", medians}}.dump(2) << '\n';
        return kOk;
    }

    out << "# q k n method seed repeat chi_ms transform_ms total_ms checksum\n";
    char buf[256];
    for (const auto& r : report.records) {
        std::snprintf(buf, sizeof buf, "%llu %zu %zu %s %llu %u %.3f %.3f %.3f %016llx\n",
                      static_cast<unsigned long long>(r.q), r.k, r.n, r.method.c_str(),
                      static_cast<unsigned long long>(r.seed), r.repeat, r.chi_ms, r.transform_ms, r.total_ms,
                      static_cast<unsigned long long>(r.checksum));
        out << buf;
    }
    out << "# median: n method runs chi_ms transform_ms total_ms\n";
    for (const auto& m : report.medians) {
        std::snprintf(buf, sizeof buf, "median %zu %s %u %.3f %.3f %.3f\n", m.n, m.method.c_str(), m.runs,
                      m.chi_ms, m.transform_ms, m.total_ms);
        out << buf;
    }
    return kOk;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
    const VerifySummary s = run_verify(o);
    if (s.factorization_applicable)
        out << "factorization " << s.factorization_passed << '/' << s.factorization_trials << " pass\n";
    else
        out << "factorization rejected for p = 2; checking the butterfly by Parseval instead\n"
            << "parseval " << s.parseval_passed << '/' << s.parseval_trials << " pass\n";
    if (s.oracle_trials)
        out << "oracle " << s.oracle_passed << '/' << s.oracle_trials << " pass\n";
    else
        out << "oracle skipped (p^k above the brute-force guard)\n";
    return s.all_passed() ? kOk : kConsistency;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact weight distributions of linear codes over finite fields", "wdist"};
    app.require_subcommand(1);

    ComputeArgs compute;
    auto* c = app.add_subcommand("compute", "Weight distribution of a code file");
    c->add_option("file", compute.file, "Code file, or - for stdin")->required();
    c->add_option("--method", compute.method, "auto, transform or bruteforce")
        ->check(CLI::IsMember({"auto", "transform", "bruteforce"}));
    c->add_option("--format", compute.format)->check(CLI::IsMember({"text", "json"}));
    c->add_option("--threads", compute.threads)->check(CLI::Range(1u, 1024u));

    RandomArgs random;
    auto* r = app.add_subcommand("random", "Random full-rank code file");
    r->add_option("--q", random.q)->required();
    r->add_option("--k", random.k)->required()->check(CLI::PositiveNumber);
    r->add_option("--n", random.n)->required()->check(CLI::PositiveNumber);
    r->add_option("--seed", random.seed);
    r->add_option("--poly", random.poly, "Modulus coefficients c_0 .. c_m");

    BenchArgs bench;
    bench.opts.n_list.clear();
    auto* b = app.add_subcommand("bench", "Time transform against brute force");
    b->add_option("--q", bench.opts.q);
    b->add_option("--k", bench.opts.k)->check(CLI::PositiveNumber);
    b->add_option("--n-list", bench.opts.n_list)->delimiter(',');
    b->add_option("--seed", bench.opts.seed);
    b->add_option("--repeats", bench.opts.repeats)->check(CLI::PositiveNumber);
    b->add_option("--threads", bench.opts.threads)->check(CLI::Range(1u, 1024u));
    b->add_option("--format", bench.format)->check(CLI::IsMember({"text", "json"}));
    b->add_flag("--no-bruteforce", bench.no_bruteforce);

    VerifyOptions verify;
    auto* v = app.add_subcommand("verify", "Check the factorized transform and the oracle");
    v->add_option("--p", verify.p)->required();
    v->add_option("--k", verify.k)->required()->check(CLI::PositiveNumber);
    v->add_option("--trials", verify.trials);
    v->add_option("--seed", verify.seed);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kOk : kValidation;
    }

    try {
        if (*c) return cmd_compute(compute, in, out);
        if (*r) return cmd_random(random, out);
        if (*b) {
            if (bench.opts.n_list.empty()) bench.opts.n_list = {30, 300, 3000, 30000};
            return cmd_bench(bench, out);
        }
        if (*v) return cmd_verify(verify, out);
    } catch (const Error& e) {
        err << "error: " << errc_name(e.code()) << ": " << e.what() << '\n';
        return exit_code(e);
    } catch (const std::bad_alloc&) {
        err << "error: out of memory\n";
        return kResource;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kConsistency;
    }
    return kValidation;
}

}  // namespace wdist::cli
