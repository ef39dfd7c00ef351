#pragma once

#include <stdexcept>
#include <string>

namespace warpmech {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A field or stencil evaluation produced a non-finite number.
struct NumericalDomainError : Error {
  using Error::Error;
};

// Metric (or another square matrix) is numerically singular.
struct SingularMetricError : Error {
  using Error::Error;
};

// A model was evaluated outside its coordinate domain.
struct DomainError : Error {
  using Error::Error;
};

// Velocity profile evaluated at a singular parameter value.
struct SingularProfileError : Error {
  using Error::Error;
};

// An inverse coordinate power hit a vanishing coordinate.
struct ZeroCoordinateError : Error {
  using Error::Error;
};

// A canonical-map branch precondition failed (vanishing denominator or
// discriminant of the wrong sign).
struct BranchDomainError : Error {
  using Error::Error;
};

// A recursion-operator block assembly precondition failed.
struct BlockDomainError : Error {
  using Error::Error;
};

// Implicit stage equation failed to converge.
struct FixedPointDivergence : Error {
  using Error::Error;
};

// Trajectory left the model's coordinate domain.
struct DomainExit : Error {
  using Error::Error;
};

struct UnknownMonitor : Error {
  using Error::Error;
};

// Numerically evaluated hierarchy bracket disagrees with its closed form.
struct HierarchyMismatch : Error {
  using Error::Error;
};

// A Lie derivative is not proportional to its expected target.
struct FitResidualError : Error {
  using Error::Error;
};

// Scenario configuration is malformed.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace warpmech
