#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace orchard {

/// Error categories shared by all modules. Every throwing operation reports
/// exactly one of these so callers (and the CLI exit-code mapping) can react
/// without parsing messages.
enum class Errc {
    NotPrime,
    Reducible,
    TooLarge,
    TooSmall,
    SpecMismatch,
    ZeroInverse,
    EvenCharacteristic,
    WrongForm,
    SingularCurve,
    NotOnCurve,
    NonInteger,
    RankTooHigh,
    DuplicatePoints,
    FourCollinear,
    DenominatorDivisibleByP,
    NotRealizableOrder,
    BadFactorization,
    CongruenceViolated,
    NoParameterFound,
    RowMismatch,
    HypothesisViolated,
    ParseError,
    Overflow,
    Internal,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

/// Resource cap after applying the ORCHARD_MAX_Q environment override.
/// The override can only lower a cap, never raise it.
std::uint64_t effective_q_cap(std::uint64_t default_cap);

} // namespace orchard
