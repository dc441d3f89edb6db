#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace mixint {

// Points are stored with three coordinates regardless of the ambient
// dimension; in 2D the z component is kept at zero.
using Pt = std::array<double, 3>;

// Tolerances shared across the geometric kernel.
inline constexpr double kDedupTol = 1e-12;      // vertex deduplication
inline constexpr double kOrientTol = 1e-10;     // hull orientation / coplanarity
inline constexpr double kNestTol = 1e-10;       // layer nesting containment
inline constexpr double kHausdorffTol = 1e-9;   // body comparisons in tests
inline constexpr double kThresholdTol = 1e-15;  // layer-cake threshold dedup

inline Pt operator+(const Pt& a, const Pt& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
inline Pt operator-(const Pt& a, const Pt& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
inline Pt operator*(double s, const Pt& a) { return {s * a[0], s * a[1], s * a[2]}; }

inline double dot(const Pt& a, const Pt& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline Pt cross(const Pt& a, const Pt& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}
// z component of the 2D cross product (a x b).
inline double cross2(const Pt& a, const Pt& b) { return a[0] * b[1] - a[1] * b[0]; }

inline double norm(const Pt& a) { return std::sqrt(dot(a, a)); }
inline double dist(const Pt& a, const Pt& b) { return norm(a - b); }

// Small dense matrix for affine maps in dimension 2 or 3. Unused rows and
// columns hold the identity so 2D matrices act trivially on z.
struct Mat {
  int dim = 2;
  std::array<std::array<double, 3>, 3> a{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

  static Mat identity(int dim) {
    Mat m;
    m.dim = dim;
    return m;
  }

  static Mat diag(int dim, double d0, double d1, double d2 = 1.0) {
    Mat m = identity(dim);
    m.a[0][0] = d0;
    m.a[1][1] = d1;
    if (dim == 3) m.a[2][2] = d2;
    return m;
  }

  static Mat rotation2d(double angle) {
    Mat m = identity(2);
    const double c = std::cos(angle), s = std::sin(angle);
    m.a[0][0] = c;
    m.a[0][1] = -s;
    m.a[1][0] = s;
    m.a[1][1] = c;
    return m;
  }

  // Rotation about a (not necessarily unit) axis by the given angle.
  static Mat rotation3d(const Pt& axis, double angle) {
    const double len = norm(axis);
    if (len == 0.0) throw std::invalid_argument("rotation3d: zero axis");
    const Pt u = (1.0 / len) * axis;
    const double c = std::cos(angle), s = std::sin(angle), t = 1.0 - c;
    Mat m = identity(3);
    m.a[0] = {t * u[0] * u[0] + c, t * u[0] * u[1] - s * u[2], t * u[0] * u[2] + s * u[1]};
    m.a[1] = {t * u[0] * u[1] + s * u[2], t * u[1] * u[1] + c, t * u[1] * u[2] - s * u[0]};
    m.a[2] = {t * u[0] * u[2] - s * u[1], t * u[1] * u[2] + s * u[0], t * u[2] * u[2] + c};
    return m;
  }

  double det() const {
    if (dim == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  }

  Pt apply(const Pt& p) const {
    return {a[0][0] * p[0] + a[0][1] * p[1] + a[0][2] * p[2],
            a[1][0] * p[0] + a[1][1] * p[1] + a[1][2] * p[2],
            a[2][0] * p[0] + a[2][1] * p[1] + a[2][2] * p[2]};
  }
};

}  // namespace mixint
