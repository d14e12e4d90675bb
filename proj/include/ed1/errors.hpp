#pragma once

#include <stdexcept>
#include <string>

namespace ed1 {

enum class Errc {
    CharDividesN,
    NotPositiveCharacteristic,
    InconsistentRequirements,
    NotAUnitOfFiniteOrder,
    SingularMatrix,
    OrderExceedsCap,
    CapExceeded,
    InvalidDescriptor,
    MissingRoots,
    InvalidGnprParams,
    FieldTooSmall,
    NotEdOne,
    Unclassifiable,
    ParseError,
    NonPrimePower,
    UnsupportedDescriptor,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::CharDividesN: return "CharDividesN";
        case Errc::NotPositiveCharacteristic: return "NotPositiveCharacteristic";
        case Errc::InconsistentRequirements: return "InconsistentRequirements";
        case Errc::NotAUnitOfFiniteOrder: return "NotAUnitOfFiniteOrder";
        case Errc::SingularMatrix: return "SingularMatrix";
        case Errc::OrderExceedsCap: return "OrderExceedsCap";
        case Errc::CapExceeded: return "CapExceeded";
        case Errc::InvalidDescriptor: return "InvalidDescriptor";
        case Errc::MissingRoots: return "MissingRoots";
        case Errc::InvalidGnprParams: return "InvalidGnprParams";
        case Errc::FieldTooSmall: return "FieldTooSmall";
        case Errc::NotEdOne: return "NotEdOne";
        case Errc::Unclassifiable: return "Unclassifiable";
        case Errc::ParseError: return "ParseError";
        case Errc::NonPrimePower: return "NonPrimePower";
        case Errc::UnsupportedDescriptor: return "UnsupportedDescriptor";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace ed1
