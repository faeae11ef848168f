#pragma once

#include <stdexcept>
#include <string>

namespace hellmann {

/// Argument outside the domain of an operation (r <= 0, invalid parameters, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An iterative procedure failed to converge or to bracket its target.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// No bound state could be resolved in the energy search window.
class SpectrumError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace hellmann
