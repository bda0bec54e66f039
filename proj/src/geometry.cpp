#include "tricontour/geometry.hpp"

#include <cmath>
#include <numbers>

namespace tricontour {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// Angles are reduced once on entry so trig error stays bounded for large t.
double reduce_angle(double t) {
  double r = std::remainder(t, two_pi);
  return r;
}

}  // namespace

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::Circle: return "circle";
    case Regime::StronglyConvex: return "strongly-convex";
    case Regime::StrictlyConvex: return "strictly-convex";
    case Regime::SelfIntersecting: return "self-intersecting";
  }
  return "unknown";
}

WidthParam::WidthParam(double a) : a_(a) {
  if (!(std::isfinite(a) && a >= 0.0 && a < max_value)) {
    fail(errc::invalid_parameter,
         "shape parameter must lie in [0, 1/3), got " + std::to_string(a));
  }
}

Regime WidthParam::regime() const noexcept {
  if (a_ == 0.0) return Regime::Circle;
  if (a_ < 0.125) return Regime::StronglyConvex;
  if (a_ == 0.125) return Regime::StrictlyConvex;
  return Regime::SelfIntersecting;
}

double support_function(WidthParam a, double t) {
  return 1.0 + a.value() * std::cos(3.0 * reduce_angle(t));
}

std::complex<double> triangle_point(WidthParam a, double t) {
  const double tr = reduce_angle(t);
  const double av = a.value();
  const std::complex<double> radial(1.0 + av * std::cos(3.0 * tr),
                                    -3.0 * av * std::sin(3.0 * tr));
  return std::polar(1.0, tr) * radial;
}

double curvature_radius(WidthParam a, double t) {
  return 1.0 - 8.0 * a.value() * std::cos(3.0 * reduce_angle(t));
}

ShapeMetrics shape_metrics(WidthParam a) {
  const double av = a.value();
  ShapeMetrics m;
  m.area = std::numbers::pi * (1.0 - 4.0 * av * av);
  m.perimeter = two_pi;
  m.iso_ratio = 4.0 * std::numbers::pi / (1.0 - 4.0 * av * av);
  m.convexity = a.regime();
  return m;
}

}  // namespace tricontour
