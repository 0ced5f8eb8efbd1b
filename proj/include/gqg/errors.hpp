#pragma once

#include <stdexcept>
#include <string>

namespace gqg {

// Domain errors. The CLI maps every subclass to exit code 1.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TorsionMismatch : Error {
    using Error::Error;
};

struct InvalidArgument : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

// A Cartan entry is -inf where a finite one is required.
struct CartanUndefined : Error {
    using Error::Error;
};

// The greedy longest-word search exceeded its length cutoff.
struct NotFiniteType : Error {
    using Error::Error;
};

// h_i(chi, lambda) is infinite where a reflection needs it finite.
struct InfiniteH : Error {
    using Error::Error;
};

// Object enumeration exceeded max_objects.
struct CutoffExceeded : Error {
    using Error::Error;
};

}  // namespace gqg
