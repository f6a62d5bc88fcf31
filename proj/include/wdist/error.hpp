#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wdist {

enum class Errc {
    // input / validation
    NonPrimeCharacteristic,
    ReduciblePolynomial,
    UnsupportedOrder,
    InvalidArgument,
    DivisionByZero,
    SymbolOutOfRange,
    RankDeficient,
    AllColumnsZero,
    ZeroColumn,
    LengthMismatch,
    LengthNotPowerOfTwo,
    PrimeFieldInput,
    ParseError,
    CannotReachRank,
    // resource limits
    Overflow,
    TooLarge,
    DimensionTooLarge,
    MemoryBudget,
    TooLargeForDenseVerifier,
    // internal consistency
    ParityViolation,
    RowSumMismatch,
    NonDivisibleWeight,
    IndexOutOfBlock,
    ChecksumMismatch,
    InvariantViolation,
};

std::string_view errc_name(Errc code) noexcept;

enum class ErrorClass { Validation, ResourceLimit, Consistency };

ErrorClass error_class(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

// Carries the rank actually found so callers can report it.
class RankDeficientError : public Error {
public:
    RankDeficientError(std::size_t rank, std::size_t expected)
        : Error(Errc::RankDeficient, "RankDeficient(" + std::to_string(rank) + "): rows span rank " +
                                         std::to_string(rank) + " < k = " + std::to_string(expected)),
          rank_(rank) {}

    std::size_t rank() const noexcept { return rank_; }

private:
    std::size_t rank_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& msg)
        : Error(Errc::ParseError, "line " + std::to_string(line) + ": " + msg), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace wdist
