#pragma once

#include <stdexcept>
#include <string>

namespace cmnd {

// Base class for all library errors.  The CLI maps subclasses to exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or out-of-domain argument.
struct InvalidInput : Error {
    using Error::Error;
};

// The requested kernel contains complex conjugation, so the fixed field is
// totally real rather than CM.
struct InvalidCMField : Error {
    using Error::Error;
};

// A set failed the CM-type axioms.  `witness` is an element g such that both
// or neither of g, iota*g were present.
struct NotACMType : Error {
    long witness;
    NotACMType(const std::string& msg, long w) : Error(msg), witness(w) {}
};

// Fixed-width arithmetic would have wrapped.  Never silent.
struct OverflowError : Error {
    using Error::Error;
};

// p divides the conductor; the unramified coset description of the
// decomposition group does not apply.
struct RamifiedPrime : Error {
    long p;
    RamifiedPrime(const std::string& msg, long p_) : Error(msg), p(p_) {}
};

}  // namespace cmnd
