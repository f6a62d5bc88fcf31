#include "wdist/code_file.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "wdist/error.hpp"

namespace wdist {

namespace {

struct Line {
    std::size_t number;
    std::string_view text;
};

std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        ++number;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        const std::size_t first = line.find_first_not_of(" \t");
        if (first != std::string_view::npos && line[first] != '#') out.push_back({number, line});
        if (end == text.size()) break;
        pos = end + 1;
    }
    return out;
}

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        pos = line.find_first_not_of(" \t", pos);
        if (pos == std::string_view::npos) break;
        std::size_t end = line.find_first_of(" \t", pos);
        if (end == std::string_view::npos) end = line.size();
        out.push_back(line.substr(pos, end - pos));
        pos = end;
    }
    return out;
}

std::uint64_t to_uint(std::string_view tok, std::size_t line) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected a nonnegative integer, got '" + std::string(tok) + "'");
    return v;
}

}  // namespace

GeneratorMatrix parse_code_file(std::string_view text) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw ParseError(1, "missing header 'q k n'");

    const auto header = tokens(lines[0].text);
    if (header.size() != 3) throw ParseError(lines[0].number, "header must be 'q k n'");
    const std::uint64_t q = to_uint(header[0], lines[0].number);
    const std::uint64_t k = to_uint(header[1], lines[0].number);
    const std::uint64_t n = to_uint(header[2], lines[0].number);
    if (k < 1 || n < 1) throw ParseError(lines[0].number, "k and n must be positive");

    std::size_t next = 1;
    std::optional<Polynomial> modulus;
    if (next < lines.size()) {
        const auto toks = tokens(lines[next].text);
        if (!toks.empty() && toks[0] == "poly") {
            Polynomial poly;
            for (std::size_t i = 1; i < toks.size(); ++i)
                poly.push_back(static_cast<std::uint32_t>(to_uint(toks[i], lines[next].number)));
            if (poly.empty()) throw ParseError(lines[next].number, "poly needs coefficients");
            modulus = std::move(poly);
            ++next;
        }
    }

    Field field = field_of_order(q, modulus);

    if (lines.size() - next < k)
        throw ParseError(lines.empty() ? 1 : lines.back().number,
                         "expected " + std::to_string(k) + " matrix rows, found " + std::to_string(lines.size() - next));
    std::vector<Element> entries;
    entries.reserve(k * n);
    for (std::uint64_t r = 0; r < k; ++r) {
        const auto& line = lines[next + r];
        const auto toks = tokens(line.text);
        if (toks.size() != n)
            throw ParseError(line.number, "row has " + std::to_string(toks.size()) + " symbols, expected " +
                                              std::to_string(n));
        for (auto tok : toks) {
            const std::uint64_t v = to_uint(tok, line.number);
            if (v >= q)
                throw Error(Errc::SymbolOutOfRange, "line " + std::to_string(line.number) + ": symbol " +
                                                        std::to_string(v) + " is not below q = " + std::to_string(q));
            entries.push_back(static_cast<Element>(v));
        }
    }
    if (next + k < lines.size()) throw ParseError(lines[next + k].number, "unexpected content after the matrix rows");

    GeneratorMatrix g(std::move(field), k, n, std::move(entries));
    validate(g);
    return g;
}

std::string format_code_file(const GeneratorMatrix& g) {
    std::ostringstream os;
    const Field& f = g.field();
    os << f.q() << ' ' << g.k() << ' ' << g.n() << '\n';
    if (!f.is_prime_field()) {
        os << "poly";
        for (auto c : f.modulus()) os << ' ' << c;
        os << '\n';
    }
    for (std::size_t r = 0; r < g.k(); ++r) {
        const auto row = g.row(r);
        for (std::size_t c = 0; c < g.n(); ++c) os << (c ? " " : "") << row[c];
        os << '\n';
    }
    return os.str();
}

std::uint64_t SplitMix64::next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::uniform(std::uint64_t bound) noexcept {
    // 2^64 mod bound, computed without overflow
    const std::uint64_t reject_from = bound == 0 ? 0 : (0 - bound) % bound;
    while (true) {
        const std::uint64_t x = next();
        // accept x < 2^64 - (2^64 mod bound)
        if (reject_from == 0 || x < 0 - reject_from) return x % bound;
    }
}

GeneratorMatrix random_code(std::uint64_t q, std::size_t k, std::size_t n, std::uint64_t seed,
                            std::optional<Polynomial> modulus) {
    if (k < 1 || n < 1) throw Error(Errc::InvalidArgument, "random code needs k >= 1 and n >= 1");
    Field field = field_of_order(q, std::move(modulus));
    SplitMix64 rng(seed);
    std::vector<Element> entries(k * n);
    for (int attempt = 0; attempt < kRandomCodeAttempts; ++attempt) {
        for (auto& e : entries) e = static_cast<Element>(rng.uniform(q));
        GeneratorMatrix g(field, k, n, entries);
        if (rank(g) == k) return g;
    }
    throw Error(Errc::CannotReachRank, "no rank-" + std::to_string(k) + " matrix after " +
                                           std::to_string(kRandomCodeAttempts) + " attempts (n = " +
                                           std::to_string(n) + ")");
}

}  // namespace wdist
