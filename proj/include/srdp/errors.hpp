#pragma once

#include <stdexcept>
#include <string>

namespace srdp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rank-deficient or inconsistent exact linear system.
class SingularSystem : public Error {
public:
    using Error::Error;
};

class InvalidIndex : public Error {
public:
    using Error::Error;
};

/// No polynomial of admissible degree satisfies the interpolation conditions.
class ConstructionFailure : public Error {
public:
    using Error::Error;
};

class InvalidTarget : public Error {
public:
    using Error::Error;
};

class UnsupportedOrder : public Error {
public:
    using Error::Error;
};

/// Dirichlet elimination removed every degree of freedom.
class EmptySystem : public Error {
public:
    using Error::Error;
};

class MassNotPD : public Error {
public:
    using Error::Error;
};

class InsufficientSpectrum : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace srdp
