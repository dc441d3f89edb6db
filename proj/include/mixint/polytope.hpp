#pragma once

#include <span>
#include <vector>

#include "mixint/geometry.hpp"

namespace mixint {

/// Compact convex body in R^2 or R^3, stored as its extreme vertices
/// (hull-reduced). 2D bodies keep vertices in counterclockwise boundary
/// order; full-dimensional 3D bodies additionally carry an outward-oriented
/// facet triangulation. Lower-dimensional (degenerate) bodies are legal and
/// have volume 0. Instances are immutable after construction.
class Polytope {
 public:
  Polytope() = default;

  static Polytope empty_body(int dim);

  int dim() const { return dim_; }
  bool is_empty() const { return verts_.empty(); }
  // Affine dimension of the vertex set: -1 for the empty body, else 0..dim.
  int affine_dim() const { return affdim_; }
  const std::vector<Pt>& vertices() const { return verts_; }
  const std::vector<std::array<int, 3>>& facets() const { return tris_; }
  double volume() const { return volume_; }

  std::size_t size() const { return verts_.size(); }

  // Membership within distance `tol` of the body.
  bool contains(const Pt& p, double tol = kNestTol) const;
  // Euclidean distance from p to the body (0 if inside). Empty body: +inf.
  double distance_to(const Pt& p) const;

  Pt centroid_of_vertices() const;
  // Axis-aligned bounding box as (lo, hi).
  std::pair<Pt, Pt> bounding_box() const;

  friend Polytope hull(std::span<const Pt> points, int dim);
  friend Polytope scale(const Polytope& p, double lambda);
  friend Polytope translate(const Polytope& p, const Pt& shift);

 private:
  int dim_ = 2;
  std::vector<Pt> verts_;
  std::vector<std::array<int, 3>> tris_;  // 3D full-dimensional bodies only
  double volume_ = 0.0;
  int affdim_ = -1;
};

/// Convex hull of the given points; the result contains only extreme points.
/// Throws std::invalid_argument on an empty input.
Polytope hull(std::span<const Pt> points, int dim);
Polytope hull(const std::vector<Pt>& points, int dim);

/// Exact Minkowski sum (hull of pairwise vertex sums).
Polytope minkowski_sum(const Polytope& p, const Polytope& q);

/// lambda * K about the origin; lambda = 0 yields the one-point body {0}.
Polytope scale(const Polytope& p, double lambda);

Polytope translate(const Polytope& p, const Pt& shift);

/// x -> u x + shift with invertible u (|det u| > 1e-12).
Polytope affine_map(const Polytope& p, const Mat& u, const Pt& shift);

/// n-dimensional volume: shoelace in 2D, signed tetrahedra in 3D.
/// Degenerate bodies have volume 0.
inline double volume(const Polytope& p) { return p.volume(); }

/// Mixed volume of exactly n bodies in R^n (n = 2 or 3), by polarization:
///   2 V(K,L)        = Vol(K+L) - Vol(K) - Vol(L)
///   6 V(K1,K2,K3)   = Vol(K1+K2+K3) - sum of pair sums + sum of singles.
/// Symmetric in its arguments; V(K,...,K) = Vol(K); 0 if any body is empty.
double mixed_volume(std::span<const Polytope> bodies);
double mixed_volume(const Polytope& k, const Polytope& l);
double mixed_volume(const Polytope& k1, const Polytope& k2, const Polytope& k3);

/// 2D only: convex polygon intersection by successive half-plane clipping.
/// Disjoint inputs produce the distinguished empty body.
Polytope intersect(const Polytope& p, const Polytope& q);

/// Hausdorff distance between convex bodies (max vertex-to-body distance,
/// symmetrized). Returns 0 if both are empty, +inf if exactly one is.
double hausdorff_distance(const Polytope& p, const Polytope& q);

/// Inscribed polytopal approximation of the Euclidean unit ball D.
/// 2D: regular m-gon (m even, m >= 8), area (m/2)sin(2pi/m).
/// 3D: icosphere with m facets, m in {20, 80, 320, 1280}.
/// Centrally symmetric; volume -> Vol(D) as m grows.
struct BallApprox {
  int dim = 2;
  int facets = 64;
  Polytope body;
};
BallApprox ball_approx(int dim, int facets);

/// Exact volume of the Euclidean unit ball, pi^{n/2} / Gamma(n/2 + 1).
double unit_ball_volume(int dim);

}  // namespace mixint
