#pragma once

#include <stdexcept>
#include <string>

namespace hyperlab {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A gamma/Pochhammer factor vanished where it must not (division by zero).
struct PoleError : Error {
    using Error::Error;
};

// Input outside an operation's domain (e.g. i+j-l < 0 for the summand form).
struct DomainError : Error {
    using Error::Error;
};

// A partial-fraction decomposition whose simple-pole residues do not cancel.
struct ConvergenceError : Error {
    using Error::Error;
};

// A series that cannot be matched to the exactly evaluable integral family.
struct UnmappableError : Error {
    using Error::Error;
};

// A parameter restriction needed for exact gamma reduction does not hold.
struct RestrictionError : Error {
    using Error::Error;
};

struct NotInOrbitError : Error {
    using Error::Error;
};

// Instance cannot be verified exactly; the numeric route applies instead.
struct InadmissibleInstance : Error {
    using Error::Error;
};

struct DivergentSeries : Error {
    using Error::Error;
};

// Malformed records file.
struct FormatError : Error {
    using Error::Error;
};

}  // namespace hyperlab
