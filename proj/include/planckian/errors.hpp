#pragma once

#include <stdexcept>
#include <string>

namespace planckian {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidOperator : Error {
  using Error::Error;
};
struct DimError : Error {
  using Error::Error;
};
struct ScheduleError : Error {
  using Error::Error;
};
struct UnsupportedLimit : Error {
  using Error::Error;
};
struct NumericalInstability : Error {
  using Error::Error;
};
struct DegeneratePair : Error {
  using Error::Error;
};
struct UnsupportedDimension : Error {
  using Error::Error;
};
struct DegenerateTask : Error {
  using Error::Error;
};
struct NotAThermalizer : Error {
  using Error::Error;
};
struct PoleError : Error {
  using Error::Error;
};
struct QuadratureError : Error {
  using Error::Error;
};
struct BoundViolation : Error {
  using Error::Error;
};

}  // namespace planckian
