#include <gtest/gtest.h>

#include <set>

#include "wdist/code_file.hpp"
#include "wdist/error.hpp"

using namespace wdist;

namespace {

std::size_t parse_error_line(std::string_view text) {
    try {
        parse_code_file(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    ADD_FAILURE() << "parsed: " << text;
    return 0;
}

Errc error_of(std::string_view text) {
    try {
        parse_code_file(text);
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "parsed: " << text;
    return Errc::InvalidArgument;
}

}  // namespace

TEST(Parse, Examples) {
    const auto g = parse_code_file("2 2 3\n1 0 1\n0 1 1");
    EXPECT_EQ(g.field().q(), 2u);
    EXPECT_EQ(g.entries(), (std::vector<Element>{1, 0, 1, 0, 1, 1}));

    const auto w = parse_code_file("4 1 1\n2");
    EXPECT_EQ(w.field().q(), 4u);
    EXPECT_EQ(w.at(0, 0), 2u);

    try {
        parse_code_file("3 2 2\n1 2\n2 1");
        FAIL();
    } catch (const RankDeficientError& e) {
        EXPECT_EQ(e.rank(), 1u);
    }
}

TEST(Parse, CommentsBlankLinesAndWhitespace) {
    const auto g = parse_code_file("# a code\n\n   # indented comment\n2 2 3\r\n\t1 0 1  \n\n0\t1 1\n# trailing\n");
    EXPECT_EQ(g.k(), 2u);
    EXPECT_EQ(g.n(), 3u);
}

TEST(Parse, PolyDirective) {
    const auto g = parse_code_file("8 1 2\npoly 1 0 1 1\n1 5\n");
    EXPECT_EQ(g.field().modulus(), (Polynomial{1, 0, 1, 1}));
    EXPECT_EQ(error_of("4 1 1\npoly 1 0 1\n1\n"), Errc::ReduciblePolynomial);
}

TEST(Parse, ErrorsCarryLineNumbers) {
    EXPECT_EQ(parse_error_line(""), 1u);
    EXPECT_EQ(parse_error_line("# only a comment\n"), 1u);
    EXPECT_EQ(parse_error_line("2 2\n1 0\n"), 1u);
    EXPECT_EQ(parse_error_line("\n2 x 3\n"), 2u);
    EXPECT_EQ(parse_error_line("2 2 3\n1 0 1\n"), 2u);
    EXPECT_EQ(parse_error_line("2 2 3\n1 0 1\n0 1\n"), 3u);
    EXPECT_EQ(parse_error_line("2 1 2\n1 1\n1 1\n"), 3u);
    EXPECT_EQ(parse_error_line("2 1 2\n1 -1\n"), 2u);
    EXPECT_EQ(parse_error_line("2 0 2\n"), 1u);
}

TEST(Parse, SymbolOutOfRange) {
    EXPECT_EQ(error_of("3 1 2\n1 3\n"), Errc::SymbolOutOfRange);
    EXPECT_EQ(error_of("6 1 1\n1\n"), Errc::UnsupportedOrder);
}

TEST(Format, RoundTrip) {
    for (std::uint64_t q : {2u, 3u, 4u, 9u, 16u}) {
        const auto g = random_code(q, 3, 11, q * 7);
        const auto text = format_code_file(g);
        EXPECT_EQ(parse_code_file(text), g);
        EXPECT_EQ(text.find("poly") != std::string::npos, q == 4 || q == 9 || q == 16);
    }
}

TEST(SplitMix64Test, ReferenceOutputs) {
    // published SplitMix64 outputs for seed 0
    SplitMix64 r(0);
    EXPECT_EQ(r.next(), 0xE220A8397B1DCDAFull);
    EXPECT_EQ(r.next(), 0x6E789E6AA1B965F4ull);
    EXPECT_EQ(r.next(), 0x06C45D188009454Full);
}

TEST(SplitMix64Test, UniformRange) {
    SplitMix64 r(3);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 2000; ++i) {
        const auto v = r.uniform(7);
        ASSERT_LT(v, 7u);
        seen.insert(v);
    }
    EXPECT_EQ(seen.size(), 7u);
    EXPECT_EQ(r.uniform(1), 0u);
}

TEST(RandomCode, DeterministicAndFullRank) {
    EXPECT_EQ(format_code_file(random_code(2, 4, 7, 1)), format_code_file(random_code(2, 4, 7, 1)));
    EXPECT_NE(format_code_file(random_code(2, 4, 7, 1)), format_code_file(random_code(2, 4, 7, 2)));
    const auto g = random_code(4, 3, 20, 7);
    EXPECT_EQ(rank(parse_code_file(format_code_file(g))), 3u);
    EXPECT_EQ(rank(random_code(2, 8, 8, 5)), 8u);
}

TEST(RandomCode, Errors) {
    try {
        random_code(3, 5, 3, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::CannotReachRank);
    }
    EXPECT_THROW(random_code(3, 0, 3, 1), Error);
    EXPECT_THROW(random_code(10, 1, 3, 1), Error);
}

TEST(RandomCode, ExplicitModulus) {
    const auto g = random_code(8, 2, 6, 1, Polynomial{1, 0, 1, 1});
    EXPECT_EQ(g.field().modulus(), (Polynomial{1, 0, 1, 1}));
}
