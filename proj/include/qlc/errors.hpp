#pragma once

#include <stdexcept>
#include <string>

namespace qlc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonSymmetricError : Error {
  using Error::Error;
};
struct NonTracelessError : Error {
  using Error::Error;
};
struct UnsupportedOrderError : Error {
  using Error::Error;
};
struct NonFiniteIntegrandError : Error {
  using Error::Error;
};
struct NotPhysicalError : Error {
  using Error::Error;
};
struct NoConvergenceError : Error {
  double final_residual = 0.0;
  NoConvergenceError(const std::string& msg, double res)
      : Error(msg), final_residual(res) {}
};
struct SingularCovarianceError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct EmptyMeshError : Error {
  using Error::Error;
};
struct NonTetElementsError : Error {
  using Error::Error;
};
struct EllipticityError : Error {
  using Error::Error;
};
struct NotPhysicalAtQuadPointError : Error {
  std::size_t element = 0;
  std::size_t point = 0;
  double margin = 0.0;
  NotPhysicalAtQuadPointError(const std::string& msg, std::size_t elem,
                              std::size_t pt, double m)
      : Error(msg), element(elem), point(pt), margin(m) {}
};
struct LinearSolveError : Error {
  double achieved_residual = 0.0;
  LinearSolveError(const std::string& msg, double res)
      : Error(msg), achieved_residual(res) {}
};
struct StepRejectedError : Error {
  using Error::Error;
};
struct TooLargeError : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace qlc
