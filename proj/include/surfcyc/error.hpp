#ifndef SURFCYC_ERROR_HPP
#define SURFCYC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace surfcyc {

enum class ErrorKind {
    MalformedPermutation,
    NegativeWeight,
    Disconnected,
    NonOrientable,
    InvalidBoundary,
    NotSimple,
    NotEmbeddedWalk,
    NotBoundary,
    HasBoundary,
    Unreachable,
    TooFewBoundaries,
    GenusZero,
    NoBoundary,
    Separating,
    NotCycle,
    OutOfRange,
    BasepointMismatch,
    TooLarge,
    AsymmetricWeights,
    ParseError,
};

const char* error_kind_name(ErrorKind k);

/// All preconditions and input failures are reported through this type;
/// queries whose answer class is empty return an empty optional instead.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg),
          kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::MalformedPermutation: return "MalformedPermutation";
        case ErrorKind::NegativeWeight: return "NegativeWeight";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::NonOrientable: return "NonOrientable";
        case ErrorKind::InvalidBoundary: return "InvalidBoundary";
        case ErrorKind::NotSimple: return "NotSimple";
        case ErrorKind::NotEmbeddedWalk: return "NotEmbeddedWalk";
        case ErrorKind::NotBoundary: return "NotBoundary";
        case ErrorKind::HasBoundary: return "HasBoundary";
        case ErrorKind::Unreachable: return "Unreachable";
        case ErrorKind::TooFewBoundaries: return "TooFewBoundaries";
        case ErrorKind::GenusZero: return "GenusZero";
        case ErrorKind::NoBoundary: return "NoBoundary";
        case ErrorKind::Separating: return "Separating";
        case ErrorKind::NotCycle: return "NotCycle";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::BasepointMismatch: return "BasepointMismatch";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::AsymmetricWeights: return "AsymmetricWeights";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Error";
}

} // namespace surfcyc

#endif
