#pragma once

/**
 * @file errors.hpp
 * @brief Exception types shared by every hurwitz module.
 */

#include <stdexcept>
#include <string>

namespace hurwitz {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegreeMismatch : public Error {
public:
    using Error::Error;
};

/// Thrown when an explicit enumeration would grow past its configured cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

class NotADivisor : public Error {
public:
    using Error::Error;
};

class UnknownName : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class BadPrime : public Error {
public:
    using Error::Error;
};

class DegreeCapExceeded : public Error {
public:
    using Error::Error;
};

class ParityError : public Error {
public:
    using Error::Error;
};

class NegativeGenus : public Error {
public:
    using Error::Error;
};

class ViolatedIdentity : public Error {
public:
    using Error::Error;
};

class ShapeViolation : public Error {
public:
    using Error::Error;
};

class SingularPointFound : public Error {
public:
    using Error::Error;
};

class HypothesisUnmet : public Error {
public:
    using Error::Error;
};

class NonConvergence : public Error {
public:
    using Error::Error;
};

class StepLimitExceeded : public Error {
public:
    using Error::Error;
};

class InconsistentGenus : public Error {
public:
    using Error::Error;
};

class VerdictFailure : public Error {
public:
    using Error::Error;
};

} // namespace hurwitz
