#pragma once

#include <complex>

#include "tricontour/errors.hpp"

namespace tricontour {

// Convexity class of the width-2 curve as the shape parameter grows.
enum class Regime {
  Circle,            // a = 0
  StronglyConvex,    // 0 < a < 1/8, curvature radius bounded away from 0
  StrictlyConvex,    // a = 1/8, curvature radius touches 0 at three angles
  SelfIntersecting,  // 1/8 < a < 1/3
};

const char* regime_name(Regime r);

// Shape parameter of the constant-width triangle family. The support
// function 1 + a*cos(3t) stays positive for a < 1/3; beyond that the
// construction degenerates, so values outside [0, 1/3) are rejected.
class WidthParam {
 public:
  explicit WidthParam(double a);

  double value() const noexcept { return a_; }
  Regime regime() const noexcept;

  static constexpr double max_value = 1.0 / 3.0;  // exclusive upper bound

 private:
  double a_;
};

struct ShapeMetrics {
  double area;       // signed support-function integral; negative never occurs for a < 1/3
  double perimeter;  // always 2*pi: width 2 forces the circle's perimeter
  double iso_ratio;  // perimeter^2 / area
  Regime convexity;
};

// Support function p(t) = 1 + a*cos(3t).
double support_function(WidthParam a, double t);

// Boundary point of the width-2 curve,
// z(t) = e^{it} * (1 + a*cos(3t) - 3i*a*sin(3t)).
std::complex<double> triangle_point(WidthParam a, double t);

// Radius of curvature p(t) + p''(t) = 1 - 8a*cos(3t).
double curvature_radius(WidthParam a, double t);

ShapeMetrics shape_metrics(WidthParam a);

}  // namespace tricontour
