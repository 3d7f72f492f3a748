#pragma once

#include <stdexcept>
#include <string>

namespace pillow {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A constructor or operation received an argument outside its domain.
class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// Odd branch degree: the node formula's b^2/2 term is not an integer.
class NonIntegralNodeCount : public Error {
public:
    using Error::Error;
};

/// A closed form that must be an exact integer came out fractional.
class NonIntegral : public Error {
public:
    using Error::Error;
};

/// One of b, n, k, t came out negative; the surface is outside the regime
/// where a general projection has only nodes and cusps.
class NegativeCharacter : public Error {
public:
    NegativeCharacter(std::string which, long long value)
        : Error("negative branch character " + which + " = " + std::to_string(value)),
          which_(std::move(which)) {}

    const std::string& which() const noexcept { return which_; }

private:
    std::string which_;
};

/// The complex does not have the vertex census a pillow must have.
class MalformedComplex : public Error {
public:
    using Error::Error;
};

class ArithmeticOverflow : public Error {
public:
    using Error::Error;
};

}  // namespace pillow
