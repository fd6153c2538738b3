#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace initforms {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- expression front-end ---

struct SyntaxError : Error {
    std::size_t position;  // byte offset into the input
    SyntaxError(std::string msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct VarOutOfRange : Error {
    using Error::Error;
};

struct ZNotAllowed : Error {
    using Error::Error;
};

// --- ring arithmetic ---

struct ArityMismatch : Error {
    using Error::Error;
};

struct DimMismatch : Error {
    using Error::Error;
};

struct DivisionByZeroPoly : Error {
    using Error::Error;
};

struct TooManyPolys : Error {
    using Error::Error;
};

struct ZeroPolynomial : Error {
    using Error::Error;
};

// --- ordered weights ---

struct EmptyList : Error {
    using Error::Error;
};

struct AllZero : Error {
    using Error::Error;
};

// --- Newton polytopes ---

struct EmptySet : Error {
    using Error::Error;
};

struct PointNotInSet : Error {
    using Error::Error;
};

// --- Ga-actions ---

struct CounitFails : Error {
    int index;  // 0-based generator index
    CounitFails(int i, std::string detail)
        : Error("counit law fails for generator " + std::to_string(i + 1) + ": " + detail),
          index(i) {}
};

struct CoassocFails : Error {
    int index;
    CoassocFails(int i, std::string detail)
        : Error("coassociativity fails for generator " + std::to_string(i + 1) + ": " + detail),
          index(i) {}
};

struct NotLocallyNilpotent : Error {
    int index;
    int cap;
    NotLocallyNilpotent(int i, int cap_)
        : Error("derivation does not annihilate generator " + std::to_string(i + 1) + " within " +
                std::to_string(cap_) + " iterations"),
          index(i), cap(cap_) {}
};

struct NotAnAutomorphismPair : Error {
    using Error::Error;
};

// --- theorem lab ---

struct ZeroImage : Error {
    int index;
    explicit ZeroImage(int i)
        : Error("homomorphism image of generator " + std::to_string(i + 1) + " is zero"), index(i) {}
};

struct NoZTerms : Error {
    using Error::Error;
};

struct StarFails : Error {
    using Error::Error;
};

struct SNotFullRank : Error {
    using Error::Error;
};

struct EmptyInvariantList : Error {
    using Error::Error;
};

struct PreconditionFails : Error {
    using Error::Error;
};

struct WitnessInvalid : Error {
    using Error::Error;
};

// Raised when an internally asserted postcondition fails; indicates a bug,
// never an unmet user-facing hypothesis.
struct CheckFailed : Error {
    using Error::Error;
};

}  // namespace initforms
