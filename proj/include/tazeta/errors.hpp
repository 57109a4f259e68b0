#pragma once

#include <stdexcept>
#include <string>

namespace tazeta {

enum class Errc {
    dimension_mismatch,
    index_out_of_range,
    non_commutative,
    non_integral_rescale,
    not_monogenic,
    degree_too_large,
    basis_kind_mismatch,
    maximality_uncertified,
    not_certified_maximal,
    missing_bad_prime,
    non_integral_quotient,
    unsupported_m,
    unsupported_case,
    precision_unstable,
    depth_exceeded,
    not_full_rank,
    parse_error,
    invalid_argument,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::dimension_mismatch: return "DimensionMismatch";
        case Errc::index_out_of_range: return "IndexOutOfRange";
        case Errc::non_commutative: return "NonCommutative";
        case Errc::non_integral_rescale: return "NonIntegralRescale";
        case Errc::not_monogenic: return "NotMonogenic";
        case Errc::degree_too_large: return "DegreeTooLarge";
        case Errc::basis_kind_mismatch: return "BasisKindMismatch";
        case Errc::maximality_uncertified: return "MaximalityUncertified";
        case Errc::not_certified_maximal: return "NotCertifiedMaximal";
        case Errc::missing_bad_prime: return "MissingBadPrime";
        case Errc::non_integral_quotient: return "NonIntegralQuotient";
        case Errc::unsupported_m: return "UnsupportedM";
        case Errc::unsupported_case: return "UnsupportedCase";
        case Errc::precision_unstable: return "PrecisionUnstable";
        case Errc::depth_exceeded: return "DepthExceeded";
        case Errc::not_full_rank: return "NotFullRank";
        case Errc::parse_error: return "ParseError";
        case Errc::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Single exception type for the library; `code()` tells callers which
/// contract was violated.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

    /// Declared limits of the implementation rather than bad input.
    bool is_unsupported() const noexcept {
        switch (code_) {
            case Errc::not_monogenic:
            case Errc::degree_too_large:
            case Errc::maximality_uncertified:
            case Errc::not_certified_maximal:
            case Errc::unsupported_m:
            case Errc::unsupported_case:
            case Errc::depth_exceeded:
            case Errc::precision_unstable:
                return true;
            default:
                return false;
        }
    }

private:
    Errc code_;
};

}  // namespace tazeta
