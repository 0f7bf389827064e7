// Copyright (c) 2026 The maxcav Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>

namespace maxcav::quad {

// Second-order rules, exact for products of two affine functions. Weights
// are fractions of the cell measure.

struct TetPoint {
  std::array<double, 4> bary;
  double weight;
};

inline constexpr double kTetA = 0.5854101966249685;  // (5 + 3 sqrt 5) / 20
inline constexpr double kTetB = 0.1381966011250105;  // (5 - sqrt 5) / 20

inline constexpr std::array<TetPoint, 4> kTetOrder2 = {{
    {{kTetA, kTetB, kTetB, kTetB}, 0.25},
    {{kTetB, kTetA, kTetB, kTetB}, 0.25},
    {{kTetB, kTetB, kTetA, kTetB}, 0.25},
    {{kTetB, kTetB, kTetB, kTetA}, 0.25},
}};

struct TriPoint {
  std::array<double, 3> bary;
  double weight;
};

// Edge midpoints.
inline constexpr std::array<TriPoint, 3> kTriOrder2 = {{
    {{0.5, 0.5, 0.0}, 1.0 / 3.0},
    {{0.5, 0.0, 0.5}, 1.0 / 3.0},
    {{0.0, 0.5, 0.5}, 1.0 / 3.0},
}};

}  // namespace maxcav::quad
