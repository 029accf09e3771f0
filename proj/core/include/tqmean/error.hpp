#ifndef TQMEAN_ERROR_HPP
#define TQMEAN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tqmean {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the documented domain (e.g. a non-positive mean argument).
class DomainError : public Error {
public:
    using Error::Error;
};

/// An iterative method (series, quadrature, solver) hit its iteration budget.
class NonConvergence : public Error {
public:
    using Error::Error;
};

/// Two independent evaluation routes disagreed beyond their tolerance.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

class UnsupportedKind : public Error {
public:
    using Error::Error;
};

class UnknownCase : public Error {
public:
    using Error::Error;
};

class NoSharpnessData : public Error {
public:
    using Error::Error;
};

class UnknownSequence : public Error {
public:
    using Error::Error;
};

} // namespace tqmean

#endif
