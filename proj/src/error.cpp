#include "wdist/error.hpp"

namespace wdist {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
        case Errc::ReduciblePolynomial: return "ReduciblePolynomial";
        case Errc::UnsupportedOrder: return "UnsupportedOrder";
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::SymbolOutOfRange: return "SymbolOutOfRange";
        case Errc::RankDeficient: return "RankDeficient";
        case Errc::AllColumnsZero: return "AllColumnsZero";
        case Errc::ZeroColumn: return "ZeroColumn";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::LengthNotPowerOfTwo: return "LengthNotPowerOfTwo";
        case Errc::PrimeFieldInput: return "PrimeFieldInput";
        case Errc::ParseError: return "ParseError";
        case Errc::CannotReachRank: return "CannotReachRank";
        case Errc::Overflow: return "Overflow";
        case Errc::TooLarge: return "TooLarge";
        case Errc::DimensionTooLarge: return "DimensionTooLarge";
        case Errc::MemoryBudget: return "MemoryBudget";
        case Errc::TooLargeForDenseVerifier: return "TooLargeForDenseVerifier";
        case Errc::ParityViolation: return "ParityViolation";
        case Errc::RowSumMismatch: return "RowSumMismatch";
        case Errc::NonDivisibleWeight: return "NonDivisibleWeight";
        case Errc::IndexOutOfBlock: return "IndexOutOfBlock";
        case Errc::ChecksumMismatch: return "ChecksumMismatch";
        case Errc::InvariantViolation: return "InvariantViolation";
    }
    return "Unknown";
}

ErrorClass error_class(Errc code) noexcept {
    switch (code) {
        case Errc::Overflow:
        case Errc::TooLarge:
        case Errc::DimensionTooLarge:
        case Errc::MemoryBudget:
        case Errc::TooLargeForDenseVerifier:
            return ErrorClass::ResourceLimit;
        case Errc::ParityViolation:
        case Errc::RowSumMismatch:
        case Errc::NonDivisibleWeight:
        case Errc::IndexOutOfBlock:
        case Errc::ChecksumMismatch:
        case Errc::InvariantViolation:
            return ErrorClass::Consistency;
        default:
            return ErrorClass::Validation;
    }
}

}  // namespace wdist
