#pragma once

#include <stdexcept>
#include <string>

namespace reuleaux {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument outside the domain of a function (zero vector, parameter out of range).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Inputs that do not form the geometric configuration an operation needs.
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// Bad family parameters (parity, range).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Malformed point-set or plan files.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Two input points further apart than 1 + eps.
class DiameterViolation : public Error {
 public:
  DiameterViolation(std::size_t i, std::size_t j, double distance);

  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }
  double distance() const noexcept { return distance_; }

 private:
  std::size_t first_;
  std::size_t second_;
  double distance_;
};

/// More diametric pairs than the 2m - 2 bound allows: eps merged distinct distances.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

/// A point set that is valid but not extremal was handed to an operation that needs one.
class NonExtremalError : public Error {
 public:
  using Error::Error;
};

/// Face cycles, edges or duality could not be reconstructed.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A closed-form evaluation produced a value outside its admissible range.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Smoothing plan does not pick exactly one edge per dual pair.
class PlanError : public Error {
 public:
  using Error::Error;
};

/// Mesh is not closed where a closed mesh is required.
class TopologyError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace reuleaux
