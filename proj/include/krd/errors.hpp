#ifndef KRD_ERRORS_HPP
#define KRD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace krd {

// Base class for all domain errors raised by the library.  The CLI maps
// these to exit status 2; anything else is a bug.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct MalformedSpec : Error {
    using Error::Error;
};
struct UnsupportedType : Error {
    using Error::Error;
};
struct ExponentOverflow : Error {
    using Error::Error;
};
struct NotRepresentable : Error {
    using Error::Error;
};
struct FundamentalDataUnavailable : Error {
    using Error::Error;
};
struct UcoefDataUnavailable : Error {
    using Error::Error;
};
struct BaseMismatch : Error {
    using Error::Error;
};
struct CoefficientNotMonomial : Error {
    using Error::Error;
};
struct EnumerationCapExceeded : Error {
    using Error::Error;
};
struct InvalidLetter : Error {
    using Error::Error;
};
struct UnsupportedIdentity : Error {
    using Error::Error;
};
struct CaseConditionViolated : Error {
    using Error::Error;
};
struct NotASink : Error {
    using Error::Error;
};
struct MismatchAgainstPrintedList : Error {
    using Error::Error;
};

}  // namespace krd

#endif
