#pragma once

#include <stdexcept>
#include <string>

namespace congrlab {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The rational's denominator is divisible by the prime of the target ring.
class NotPInteger : public Error {
public:
    using Error::Error;
};

class ModulusMismatch : public Error {
public:
    using Error::Error;
};

// Inversion of an element divisible by p.
class NonUnit : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class InvalidModulus : public Error {
public:
    using Error::Error;
};

// A harmonic index required by a check does not exist for this prime.
class DomainTooSmall : public Error {
public:
    using Error::Error;
};

class NonPIntegerBernoulli : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace congrlab
