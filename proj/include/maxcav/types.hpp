// Copyright (c) 2026 The maxcav Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Core>
#include <Eigen/SparseCore>

namespace maxcav {

using Complex = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using Vec3c = Eigen::Vector3cd;
using Mat3c = Eigen::Matrix3cd;
using ComplexVector = Eigen::VectorXcd;
using ComplexSparseMatrix = Eigen::SparseMatrix<Complex>;

inline constexpr Complex kImagUnit{0.0, 1.0};

/// Malformed input file; `line` is 1-based, 0 when not attributable to a line.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

/// A coefficient, mesh, or configuration failed an admissibility check.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Factorization failed or the residual did not meet the requested tolerance.
/// At zero absorption this is the numerical signature of a resonance.
class SingularSystemError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An internal algebraic identity was violated; indicates an assembly bug,
/// not bad user input.
class ConsistencyError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace maxcav
