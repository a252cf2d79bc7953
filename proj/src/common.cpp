#include "orchard/common.hpp"

#include <cstdlib>

namespace orchard {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::Reducible: return "Reducible";
        case Errc::TooLarge: return "TooLarge";
        case Errc::TooSmall: return "TooSmall";
        case Errc::SpecMismatch: return "SpecMismatch";
        case Errc::ZeroInverse: return "ZeroInverse";
        case Errc::EvenCharacteristic: return "EvenCharacteristic";
        case Errc::WrongForm: return "WrongForm";
        case Errc::SingularCurve: return "SingularCurve";
        case Errc::NotOnCurve: return "NotOnCurve";
        case Errc::NonInteger: return "NonInteger";
        case Errc::RankTooHigh: return "RankTooHigh";
        case Errc::DuplicatePoints: return "DuplicatePoints";
        case Errc::FourCollinear: return "FourCollinear";
        case Errc::DenominatorDivisibleByP: return "DenominatorDivisibleByP";
        case Errc::NotRealizableOrder: return "NotRealizableOrder";
        case Errc::BadFactorization: return "BadFactorization";
        case Errc::CongruenceViolated: return "CongruenceViolated";
        case Errc::NoParameterFound: return "NoParameterFound";
        case Errc::RowMismatch: return "RowMismatch";
        case Errc::HypothesisViolated: return "HypothesisViolated";
        case Errc::ParseError: return "ParseError";
        case Errc::Overflow: return "Overflow";
        case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

std::uint64_t effective_q_cap(std::uint64_t default_cap) {
    static const std::uint64_t env_cap = [] {
        const char* raw = std::getenv("ORCHARD_MAX_Q");
        if (raw == nullptr) return UINT64_MAX;
        char* end = nullptr;
        unsigned long long v = std::strtoull(raw, &end, 10);
        if (end == raw || *end != '\0' || v == 0) return UINT64_MAX;
        return static_cast<std::uint64_t>(v);
    }();
    return env_cap < default_cap ? env_cap : default_cap;
}

} // namespace orchard
