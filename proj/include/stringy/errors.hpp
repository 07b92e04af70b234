#pragma once

#include <stdexcept>
#include <string>

namespace stringy {

// Error hierarchy shared across the library.  The CLI maps these to exit
// codes, so each condition gets its own type rather than a bare message.

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

// CycloRational::as_polynomial on a value with a nonempty reduced denominator.
struct NotPolynomial : Error {
    using Error::Error;
};

// eval_int at a point where a surviving denominator factor vanishes.
struct PoleAtPoint : Error {
    using Error::Error;
};

// A group element whose coordinate sum is not divisible by the global
// denominator: the input fails the sum(alpha) = 0 mod r criterion.
struct NonIntegralAge : Error {
    using Error::Error;
};

struct RayAlreadyPresent : Error {
    using Error::Error;
};

struct RayOutsideSupport : Error {
    using Error::Error;
};

struct NotSimplicial : Error {
    using Error::Error;
};

struct NotSmooth : Error {
    using Error::Error;
};

// betti_readout on a series that is not a nonnegative combination of pure
// powers q^(n-k) with 0 <= k <= n.
struct MixedTerms : Error {
    using Error::Error;
};

struct FixtureMissing : Error {
    using Error::Error;
};

struct MethodDisagreement : Error {
    using Error::Error;
};

}  // namespace stringy
