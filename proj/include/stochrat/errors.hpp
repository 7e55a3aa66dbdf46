#pragma once

#include <stdexcept>
#include <string>

namespace stochrat {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain arguments (bad simplex, negative weight, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Budget lines do not cross inside the strictly positive orthant.
class NonOverlappingBudgets : public Error {
 public:
  using Error::Error;
};

/// A bundle does not exhaust the budget it was supposedly chosen from.
class OffBudgetLine : public Error {
 public:
  using Error::Error;
};

/// A population places mass on a demand type that chooses the intersection.
class Region3MassPresent : public Error {
 public:
  using Error::Error;
};

class EmptySample : public Error {
 public:
  using Error::Error;
};

class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace stochrat
