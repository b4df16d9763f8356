// Exception types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace mixhecke {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two values from different Coxeter systems / contexts were combined.
struct SystemMismatchError : Error {
    using Error::Error;
};

// Malformed input file or string.
struct ParseError : Error {
    using Error::Error;
};

// A table entry required by an operation is absent.
struct MissingEntryError : Error {
    using Error::Error;
};

// A structural invariant of input data failed. `check` names the failed
// invariant ("triangularity", "bar-invariance", "kl-nonnegativity", ...)
// and `where` identifies the offending element.
struct ValidationError : Error {
    std::string check;
    std::string where;
    ValidationError(std::string check_, std::string where_)
        : Error(check_ + " failed at w=" + where_), check(std::move(check_)), where(std::move(where_)) {}
};

// The BGG linear system could not be inverted (bad multiplicity data).
struct SingularSystemError : Error {
    using Error::Error;
};

} // namespace mixhecke
