/*
 * errors.hpp — exception taxonomy.
 *
 * InputError        caller-supplied data violates a documented contract
 *                   (malformed file, size mismatch, inadmissible word, ...);
 *                   the CLI maps this to exit code 1.
 * CapError          a documented desk-scale bound was exceeded (polynomial
 *                   degree cap, enumeration range, ...).
 * InconclusiveError an adaptive exact computation reached its retry cap
 *                   without a decision; raised instead of silently accepting.
 * InternalError     a library invariant broke — always a bug, never input.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace invlim {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputError : Error {
    using Error::Error;
};

struct CapError : Error {
    using Error::Error;
};

struct InconclusiveError : Error {
    using Error::Error;
};

struct InternalError : Error {
    using Error::Error;
};

} // namespace invlim
