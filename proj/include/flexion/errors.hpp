#pragma once

#include <stdexcept>
#include <string>

namespace flexion {

// Base of every error raised by the library. Callers that only care about
// "bad input vs. false assertion" can catch this one type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Precondition on a parameter range (odd eps index, depth out of range, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class AlphabetMismatch : public Error {
public:
    AlphabetMismatch() : Error("alphabet mismatch") {}
};

class ArityMismatch : public Error {
public:
    ArityMismatch() : Error("arity mismatch") {}
};

class KindMismatch : public Error {
public:
    KindMismatch() : Error("mould kind mismatch") {}
};

class NotInCSpan : public Error {
public:
    explicit NotInCSpan(const std::string& what)
        : Error("not in the span of C-monomials: " + what) {}
};

class NotHomogeneous : public Error {
public:
    explicit NotHomogeneous(const std::string& what) : Error("not homogeneous: " + what) {}
};

class NotPushInvariant : public Error {
public:
    NotPushInvariant() : Error("polynomial is not push-invariant") {}
};

class NotAlternal : public Error {
public:
    NotAlternal() : Error("mould is not alternal") {}
};

class NotLie : public Error {
public:
    NotLie() : Error("polynomial is not a Lie element") {}
};

class NotDerZero : public Error {
public:
    explicit NotDerZero(const std::string& what) : Error("derivation not in Der0: " + what) {}
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace flexion
