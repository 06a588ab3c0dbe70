#pragma once

#include <stdexcept>
#include <string>

namespace zvp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Structurally invalid input: non-square tables, NaN, negative distances.
class MalformedInput : public Error
{
public:
    using Error::Error;
};

/// A named precondition of an operation does not hold.
class PreconditionError : public Error
{
public:
    using Error::Error;
};

/// The quantitative premise of a local theorem is violated.
class PremiseError : public Error
{
public:
    using Error::Error;
};

/// A point or argument lies outside the domain where the operation is defined.
class DomainError : public Error
{
public:
    using Error::Error;
};

/// A tail property was requested for a sequence whose tail is not known.
class UndeterminedError : public Error
{
public:
    using Error::Error;
};

}  // namespace zvp
