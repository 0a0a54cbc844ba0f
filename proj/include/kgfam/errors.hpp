#pragma once

#include <stdexcept>
#include <string>

namespace kgfam {

/// Two algebra elements (or polynomials) of different order/arity were combined.
class OrderMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A NaN or infinity tried to enter a coefficient container.
class NonFiniteValue : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// k0 = 0: the linear equations for k1, k2, ... cannot be solved.
class DegenerateK0 : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An exact square root was requested of a rational complex number that is
/// not a perfect square.
class NonRationalRoot : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A solution or polynomial uses variables outside the active dimension.
class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace kgfam
