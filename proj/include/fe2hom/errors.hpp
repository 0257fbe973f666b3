// Exception hierarchy shared by all modules. The CLI maps these onto
// distinct process exit codes.
#pragma once

#include <stdexcept>
#include <string>

namespace fe2hom {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Tensor/vector dimension mismatch or invalid spatial dimension.
struct DimensionError : Error {
  using Error::Error;
};

// Invalid geometry: inverted element, microstructure outside the domain,
// non-mirrored mesh where mirror pairing is required.
struct GeometryError : Error {
  using Error::Error;
};

// Configuration parsing / validation failure (exit code 2).
struct ConfigError : Error {
  using Error::Error;
};

// Linear-solver failure: singular or indefinite operator where a definite
// one was required (exit code 4).
struct SolverError : Error {
  using Error::Error;
};

// Macro Newton loop exceeded its iteration cap (exit code 3).
struct ConvergenceError : Error {
  using Error::Error;
};

}  // namespace fe2hom
