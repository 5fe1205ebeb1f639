#pragma once

#include <stdexcept>
#include <string>

namespace plk {

// Base of everything the kernel throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: unknown ids, bad file syntax, out-of-range parameters.
class StructuralError : public Error {
public:
    using Error::Error;
};

// Input is well formed but violates a mathematical requirement.
class ValidityError : public Error {
public:
    using Error::Error;
};

// A colimit diagram whose identifications do not respect faces.
class DiagramError : public ValidityError {
public:
    using ValidityError::ValidityError;
};

// Geometric precondition failure (general position, point outside a domain).
class GeometryError : public Error {
public:
    using Error::Error;
};

}  // namespace plk
