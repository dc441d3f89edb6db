#include "mixint/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>
#include <utility>

namespace mixint {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Lexicographic sort + windowed sweep; keeps the first occurrence among
// points closer than kDedupTol.
std::vector<Pt> dedup_points(std::span<const Pt> points) {
  std::vector<Pt> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Pt> kept;
  kept.reserve(sorted.size());
  for (const Pt& p : sorted) {
    bool dup = false;
    for (auto it = kept.rbegin(); it != kept.rend(); ++it) {
      if (p[0] - (*it)[0] > kDedupTol) break;
      if (dist(p, *it) <= kDedupTol) {
        dup = true;
        break;
      }
    }
    if (!dup) kept.push_back(p);
  }
  return kept;
}

// Monotone chain over lexicographically sorted points (xy plane only).
// Returns indices into `pts`, counterclockwise, starting at the lex-min
// vertex. Collinear middle points are dropped.
std::vector<int> hull2d_indices(const std::vector<Pt>& pts) {
  const int n = int(pts.size());
  if (n == 1) return {0};
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return pts[i] < pts[j]; });

  auto turn = [&](int a, int b, int c) {
    return cross2(pts[b] - pts[a], pts[c] - pts[a]);
  };
  std::vector<int> h(2 * n);
  int k = 0;
  for (int ii = 0; ii < n; ++ii) {  // lower hull
    int i = order[ii];
    while (k >= 2 && turn(h[k - 2], h[k - 1], i) <= kOrientTol) --k;
    h[k++] = i;
  }
  for (int ii = n - 2, lower = k + 1; ii >= 0; --ii) {  // upper hull
    int i = order[ii];
    while (k >= lower && turn(h[k - 2], h[k - 1], i) <= kOrientTol) --k;
    h[k++] = i;
  }
  h.resize(k - 1);
  return h;
}

double shoelace(const std::vector<Pt>& v) {
  double s = 0.0;
  const int n = int(v.size());
  for (int i = 0; i < n; ++i) {
    const Pt& a = v[i];
    const Pt& b = v[(i + 1) % n];
    s += a[0] * b[1] - b[0] * a[1];
  }
  return 0.5 * s;
}

struct Tri {
  int a, b, c;
  Pt n;      // unit outward normal
  double d;  // plane offset: dot(n, x) = d
  bool alive = true;
};

Tri make_tri(const std::vector<Pt>& pts, int a, int b, int c, const Pt& interior) {
  Tri t{a, b, c, {0, 0, 0}, 0.0};
  Pt nn = cross(pts[b] - pts[a], pts[c] - pts[a]);
  double len = norm(nn);
  if (len > 0) nn = (1.0 / len) * nn;
  t.n = nn;
  t.d = dot(t.n, pts[a]);
  if (dot(t.n, interior) - t.d > 0) {  // flip to face away from the interior
    std::swap(t.b, t.c);
    t.n = -1.0 * t.n;
    t.d = -t.d;
  }
  return t;
}

double point_segment_distance(const Pt& p, const Pt& a, const Pt& b) {
  const Pt ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return dist(p, a);
  double t = dot(p - a, ab) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return dist(p, a + t * ab);
}

double point_triangle_distance(const Pt& p, const Pt& a, const Pt& b, const Pt& c) {
  // Closest point on triangle, via barycentric region tests.
  const Pt ab = b - a, ac = c - a, ap = p - a;
  const double d1 = dot(ab, ap), d2 = dot(ac, ap);
  if (d1 <= 0 && d2 <= 0) return dist(p, a);
  const Pt bp = p - b;
  const double d3 = dot(ab, bp), d4 = dot(ac, bp);
  if (d3 >= 0 && d4 <= d3) return dist(p, b);
  const double vc = d1 * d4 - d3 * d2;
  if (vc <= 0 && d1 >= 0 && d3 <= 0) {
    const double v = d1 / (d1 - d3);
    return dist(p, a + v * ab);
  }
  const Pt cp = p - c;
  const double d5 = dot(ab, cp), d6 = dot(ac, cp);
  if (d6 >= 0 && d5 <= d6) return dist(p, c);
  const double vb = d5 * d2 - d1 * d6;
  if (vb <= 0 && d2 >= 0 && d6 <= 0) {
    const double w = d2 / (d2 - d6);
    return dist(p, a + w * ac);
  }
  const double va = d3 * d6 - d5 * d4;
  if (va <= 0 && (d4 - d3) >= 0 && (d5 - d6) >= 0) {
    const double w = (d4 - d3) / ((d4 - d3) + (d5 - d6));
    return dist(p, b + w * (c - b));
  }
  const double denom = 1.0 / (va + vb + vc);
  const double v = vb * denom, w = vc * denom;
  return dist(p, a + v * ab + w * ac);
}

// Orthonormal basis of the plane spanned by a CCW-ordered planar vertex loop.
struct PlaneBasis {
  Pt origin, e1, e2, normal;
};

PlaneBasis plane_basis(const std::vector<Pt>& verts) {
  PlaneBasis pb;
  pb.origin = verts[0];
  pb.e1 = verts[1] - verts[0];
  pb.e1 = (1.0 / norm(pb.e1)) * pb.e1;
  Pt n{0, 0, 0};
  for (std::size_t i = 2; i < verts.size(); ++i) {
    n = cross(verts[1] - verts[0], verts[i] - verts[0]);
    if (norm(n) > kOrientTol) break;
  }
  pb.normal = (1.0 / norm(n)) * n;
  pb.e2 = cross(pb.normal, pb.e1);
  return pb;
}

Pt project_to_plane(const PlaneBasis& pb, const Pt& p) {
  const Pt r = p - pb.origin;
  return {dot(r, pb.e1), dot(r, pb.e2), 0.0};
}

// CCW polygon membership in the xy plane, tolerance in perpendicular distance.
bool polygon_contains_2d(const std::vector<Pt>& verts, const Pt& p, double tol) {
  const int n = int(verts.size());
  for (int i = 0; i < n; ++i) {
    const Pt& a = verts[i];
    const Pt& b = verts[(i + 1) % n];
    const Pt e = b - a;
    const double len = norm(e);
    if (len == 0.0) continue;
    if (cross2(e, p - a) / len < -tol) return false;
  }
  return true;
}

}  // namespace

Polytope Polytope::empty_body(int dim) {
  require(dim == 2 || dim == 3, "Polytope: dimension must be 2 or 3");
  Polytope p;
  p.dim_ = dim;
  return p;
}

Pt Polytope::centroid_of_vertices() const {
  Pt c{0, 0, 0};
  for (const Pt& v : verts_) c = c + v;
  return verts_.empty() ? c : (1.0 / double(verts_.size())) * c;
}

std::pair<Pt, Pt> Polytope::bounding_box() const {
  Pt lo{kInf, kInf, kInf}, hi{-kInf, -kInf, -kInf};
  for (const Pt& v : verts_)
    for (int k = 0; k < 3; ++k) {
      lo[k] = std::min(lo[k], v[k]);
      hi[k] = std::max(hi[k], v[k]);
    }
  if (dim_ == 2) lo[2] = hi[2] = 0.0;
  return {lo, hi};
}

bool Polytope::contains(const Pt& p, double tol) const {
  if (is_empty()) return false;
  switch (affdim_) {
    case 0:
      return dist(p, verts_[0]) <= tol;
    case 1:
      return point_segment_distance(p, verts_.front(), verts_.back()) <= tol;
    case 2: {
      if (dim_ == 2) return polygon_contains_2d(verts_, p, tol);
      const PlaneBasis pb = plane_basis(verts_);
      if (std::abs(dot(p - pb.origin, pb.normal)) > tol) return false;
      std::vector<Pt> flat(verts_.size());
      for (std::size_t i = 0; i < verts_.size(); ++i)
        flat[i] = project_to_plane(pb, verts_[i]);
      return polygon_contains_2d(flat, project_to_plane(pb, p), tol);
    }
    default: {
      for (const auto& t : tris_) {
        Pt n = cross(verts_[t[1]] - verts_[t[0]], verts_[t[2]] - verts_[t[0]]);
        const double len = norm(n);
        if (len == 0.0) continue;
        if ((dot(n, p) - dot(n, verts_[t[0]])) / len > tol) return false;
      }
      return true;
    }
  }
}

double Polytope::distance_to(const Pt& p) const {
  if (is_empty()) return kInf;
  switch (affdim_) {
    case 0:
      return dist(p, verts_[0]);
    case 1:
      return point_segment_distance(p, verts_.front(), verts_.back());
    case 2: {
      if (dim_ == 2) {
        if (polygon_contains_2d(verts_, p, 0.0)) return 0.0;
        double best = kInf;
        const int n = int(verts_.size());
        for (int i = 0; i < n; ++i)
          best = std::min(best,
                          point_segment_distance(p, verts_[i], verts_[(i + 1) % n]));
        return best;
      }
      const PlaneBasis pb = plane_basis(verts_);
      std::vector<Pt> flat(verts_.size());
      for (std::size_t i = 0; i < verts_.size(); ++i)
        flat[i] = project_to_plane(pb, verts_[i]);
      const Pt q = project_to_plane(pb, p);
      const double h = dot(p - pb.origin, pb.normal);
      if (polygon_contains_2d(flat, q, 0.0)) return std::abs(h);
      double best = kInf;
      const int n = int(verts_.size());
      for (int i = 0; i < n; ++i)
        best = std::min(best,
                        point_segment_distance(p, verts_[i], verts_[(i + 1) % n]));
      return best;
    }
    default: {
      if (contains(p, 0.0)) return 0.0;
      double best = kInf;
      for (const auto& t : tris_)
        best = std::min(best, point_triangle_distance(p, verts_[t[0]], verts_[t[1]],
                                                      verts_[t[2]]));
      return best;
    }
  }
}

namespace {

// Incremental convex hull for full-dimensional 3D point sets. `pts` must be
// deduplicated; i0..i3 span a non-degenerate tetrahedron.
void hull3d_incremental(const std::vector<Pt>& pts, int i0, int i1, int i2, int i3,
                        std::vector<Pt>& out_verts,
                        std::vector<std::array<int, 3>>& out_tris) {
  const Pt interior = 0.25 * (pts[i0] + pts[i1] + pts[i2] + pts[i3]);
  std::vector<Tri> tris;
  tris.push_back(make_tri(pts, i0, i1, i2, interior));
  tris.push_back(make_tri(pts, i0, i1, i3, interior));
  tris.push_back(make_tri(pts, i0, i2, i3, interior));
  tris.push_back(make_tri(pts, i1, i2, i3, interior));

  // Far points first: extreme shell forms early, interior points get skipped.
  std::vector<int> order;
  order.reserve(pts.size());
  for (int i = 0; i < int(pts.size()); ++i)
    if (i != i0 && i != i1 && i != i2 && i != i3) order.push_back(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const double da = dist(pts[a], interior), db = dist(pts[b], interior);
    if (da != db) return da > db;
    return pts[a] > pts[b];
  });

  std::vector<int> visible;
  for (int idx : order) {
    const Pt& p = pts[idx];
    visible.clear();
    for (int ti = 0; ti < int(tris.size()); ++ti) {
      if (!tris[ti].alive) continue;
      if (dot(tris[ti].n, p) - tris[ti].d > kOrientTol) visible.push_back(ti);
    }
    if (visible.empty()) continue;

    std::set<std::pair<int, int>> vis_edges;
    for (int ti : visible) {
      const Tri& t = tris[ti];
      vis_edges.insert({t.a, t.b});
      vis_edges.insert({t.b, t.c});
      vis_edges.insert({t.c, t.a});
    }
    for (int ti : visible) tris[ti].alive = false;
    for (const auto& e : vis_edges) {
      if (vis_edges.count({e.second, e.first})) continue;  // interior edge
      tris.push_back(make_tri(pts, e.first, e.second, idx, interior));
    }
  }

  std::vector<int> remap(pts.size(), -1);
  std::vector<int> used;
  for (const Tri& t : tris) {
    if (!t.alive) continue;
    for (int v : {t.a, t.b, t.c})
      if (remap[v] < 0) {
        remap[v] = 0;
        used.push_back(v);
      }
  }
  std::sort(used.begin(), used.end(),
            [&](int a, int b) { return pts[a] < pts[b]; });
  for (int i = 0; i < int(used.size()); ++i) remap[used[i]] = i;
  out_verts.clear();
  for (int v : used) out_verts.push_back(pts[v]);
  out_tris.clear();
  for (const Tri& t : tris)
    if (t.alive) out_tris.push_back({remap[t.a], remap[t.b], remap[t.c]});
}

}  // namespace

Polytope hull(std::span<const Pt> points, int dim) {
  require(dim == 2 || dim == 3, "hull: dimension must be 2 or 3");
  require(!points.empty(), "hull: empty point set");

  std::vector<Pt> pts(points.begin(), points.end());
  if (dim == 2)
    for (Pt& p : pts) p[2] = 0.0;
  pts = dedup_points(pts);

  Polytope out;
  out.dim_ = dim;

  if (pts.size() == 1) {
    out.verts_ = pts;
    out.affdim_ = 0;
    out.volume_ = 0.0;
    return out;
  }

  if (dim == 2) {
    const std::vector<int> idx = hull2d_indices(pts);
    for (int i : idx) out.verts_.push_back(pts[i]);
    out.affdim_ = out.verts_.size() >= 3 ? 2 : 1;
    out.volume_ = out.affdim_ == 2 ? shoelace(out.verts_) : 0.0;
    return out;
  }

  // 3D: pick spanning points, falling back through the degenerate cases.
  const int n = int(pts.size());
  int i0 = 0;  // pts is lex-sorted, so pts[0] is extreme
  int i1 = -1;
  double best = kDedupTol;
  for (int i = 1; i < n; ++i) {
    const double d = dist(pts[i], pts[i0]);
    if (d > best) {
      best = d;
      i1 = i;
    }
  }
  if (i1 < 0) {  // all points coincide (should not survive dedup)
    out.verts_ = {pts[0]};
    out.affdim_ = 0;
    return out;
  }

  const Pt axis = pts[i1] - pts[i0];
  const double axis_len = norm(axis);
  int i2 = -1;
  best = kOrientTol;
  for (int i = 0; i < n; ++i) {
    const double d = norm(cross(axis, pts[i] - pts[i0])) / axis_len;
    if (d > best) {
      best = d;
      i2 = i;
    }
  }
  if (i2 < 0) {  // collinear: keep the two extreme points along the axis
    int lo = i0, hi = i0;
    double tlo = 0.0, thi = 0.0;
    for (int i = 0; i < n; ++i) {
      const double t = dot(pts[i] - pts[i0], axis);
      if (t < tlo) {
        tlo = t;
        lo = i;
      }
      if (t > thi) {
        thi = t;
        hi = i;
      }
    }
    out.verts_ = {pts[lo], pts[hi]};
    if (pts[hi] < pts[lo]) std::swap(out.verts_[0], out.verts_[1]);
    out.affdim_ = 1;
    return out;
  }

  Pt nrm = cross(axis, pts[i2] - pts[i0]);
  nrm = (1.0 / norm(nrm)) * nrm;
  int i3 = -1;
  best = kOrientTol;
  for (int i = 0; i < n; ++i) {
    const double d = std::abs(dot(nrm, pts[i] - pts[i0]));
    if (d > best) {
      best = d;
      i3 = i;
    }
  }
  if (i3 < 0) {  // coplanar: run the 2D hull in the supporting plane
    PlaneBasis pb;
    pb.origin = pts[i0];
    pb.e1 = (1.0 / axis_len) * axis;
    pb.normal = nrm;
    pb.e2 = cross(pb.normal, pb.e1);
    std::vector<Pt> flat(n);
    for (int i = 0; i < n; ++i) flat[i] = project_to_plane(pb, pts[i]);
    for (int i : hull2d_indices(flat)) out.verts_.push_back(pts[i]);
    out.affdim_ = out.verts_.size() >= 3 ? 2 : 1;
    out.volume_ = 0.0;
    return out;
  }

  hull3d_incremental(pts, i0, i1, i2, i3, out.verts_, out.tris_);
  out.affdim_ = 3;
  const Pt g = out.centroid_of_vertices();
  double vol = 0.0;
  for (const auto& t : out.tris_)
    vol += dot(out.verts_[t[0]] - g,
               cross(out.verts_[t[1]] - g, out.verts_[t[2]] - g));
  out.volume_ = std::abs(vol) / 6.0;
  return out;
}

Polytope hull(const std::vector<Pt>& points, int dim) {
  return hull(std::span<const Pt>(points), dim);
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  require(p.dim() == q.dim(), "minkowski_sum: dimension mismatch");
  if (p.is_empty() || q.is_empty()) return Polytope::empty_body(p.dim());
  std::vector<Pt> sums;
  sums.reserve(p.size() * q.size());
  for (const Pt& a : p.vertices())
    for (const Pt& b : q.vertices()) sums.push_back(a + b);
  return hull(sums, p.dim());
}

Polytope scale(const Polytope& p, double lambda) {
  require(lambda >= 0.0, "scale: negative factor");
  if (p.is_empty()) return p;
  if (lambda == 0.0) return hull(std::vector<Pt>{{0, 0, 0}}, p.dim());
  Polytope out = p;
  for (Pt& v : out.verts_) v = lambda * v;
  out.volume_ = p.volume_ * std::pow(lambda, p.dim_);
  return out;
}

Polytope translate(const Polytope& p, const Pt& shift) {
  if (p.is_empty()) return p;
  Polytope out = p;
  for (Pt& v : out.verts_) v = v + shift;
  return out;
}

Polytope affine_map(const Polytope& p, const Mat& u, const Pt& shift) {
  require(u.dim == p.dim(), "affine_map: matrix dimension mismatch");
  require(std::abs(u.det()) > 1e-12, "affine_map: singular matrix");
  if (p.is_empty()) return p;
  std::vector<Pt> mapped;
  mapped.reserve(p.size());
  for (const Pt& v : p.vertices()) mapped.push_back(u.apply(v) + shift);
  return hull(mapped, p.dim());
}

double mixed_volume(std::span<const Polytope> bodies) {
  require(!bodies.empty(), "mixed_volume: no bodies");
  const int n = bodies[0].dim();
  require(int(bodies.size()) == n, "mixed_volume: need exactly n bodies in R^n");
  for (const Polytope& b : bodies)
    require(b.dim() == n, "mixed_volume: dimension mismatch");
  for (const Polytope& b : bodies)
    if (b.is_empty()) return 0.0;

  if (n == 2) {
    const double vab = minkowski_sum(bodies[0], bodies[1]).volume();
    return 0.5 * (vab - bodies[0].volume() - bodies[1].volume());
  }
  const Polytope s01 = minkowski_sum(bodies[0], bodies[1]);
  const double v012 = minkowski_sum(s01, bodies[2]).volume();
  const double v01 = s01.volume();
  const double v02 = minkowski_sum(bodies[0], bodies[2]).volume();
  const double v12 = minkowski_sum(bodies[1], bodies[2]).volume();
  return (v012 - v01 - v02 - v12 + bodies[0].volume() + bodies[1].volume() +
          bodies[2].volume()) /
         6.0;
}

double mixed_volume(const Polytope& k, const Polytope& l) {
  const Polytope b[] = {k, l};
  return mixed_volume(std::span<const Polytope>(b, 2));
}

double mixed_volume(const Polytope& k1, const Polytope& k2, const Polytope& k3) {
  const Polytope b[] = {k1, k2, k3};
  return mixed_volume(std::span<const Polytope>(b, 3));
}

namespace {

// Keeps the part of a CCW polygon on the left of the directed line a -> b.
std::vector<Pt> clip_by_halfplane(const std::vector<Pt>& poly, const Pt& a,
                                  const Pt& b) {
  const Pt e = b - a;
  const double len = norm(e);
  auto side = [&](const Pt& p) { return cross2(e, p - a) / len; };
  std::vector<Pt> out;
  const int n = int(poly.size());
  for (int i = 0; i < n; ++i) {
    const Pt& cur = poly[i];
    const Pt& nxt = poly[(i + 1) % n];
    const double sc = side(cur), sn = side(nxt);
    if (sc >= -kOrientTol) out.push_back(cur);
    if ((sc > kOrientTol && sn < -kOrientTol) ||
        (sc < -kOrientTol && sn > kOrientTol)) {
      const double t = sc / (sc - sn);
      out.push_back(cur + t * (nxt - cur));
    }
  }
  return out;
}

// Clips the segment [a,b] against the CCW polygon `poly`.
std::vector<Pt> clip_segment_by_polygon(Pt a, Pt b, const std::vector<Pt>& poly) {
  double t0 = 0.0, t1 = 1.0;
  const int n = int(poly.size());
  for (int i = 0; i < n; ++i) {
    const Pt& u = poly[i];
    const Pt& v = poly[(i + 1) % n];
    const Pt e = v - u;
    const double len = norm(e);
    const double sa = cross2(e, a - u) / len;
    const double sb = cross2(e, b - u) / len;
    if (sa < -kOrientTol && sb < -kOrientTol) return {};
    if (sa >= -kOrientTol && sb >= -kOrientTol) continue;
    const double t = sa / (sa - sb);
    if (sa < sb)
      t0 = std::max(t0, t);
    else
      t1 = std::min(t1, t);
    if (t0 > t1) return {};
  }
  return {a + t0 * (b - a), a + t1 * (b - a)};
}

}  // namespace

Polytope intersect(const Polytope& p, const Polytope& q) {
  require(p.dim() == 2 && q.dim() == 2, "intersect: 2D only");
  if (p.is_empty() || q.is_empty()) return Polytope::empty_body(2);

  // Degenerate operands reduce to point/segment clipping.
  if (p.affine_dim() <= 1 || q.affine_dim() <= 1) {
    const Polytope& deg = p.affine_dim() <= q.affine_dim() ? p : q;
    const Polytope& other = p.affine_dim() <= q.affine_dim() ? q : p;
    if (deg.affine_dim() == 0) {
      if (other.contains(deg.vertices()[0], kOrientTol))
        return hull(deg.vertices(), 2);
      return Polytope::empty_body(2);
    }
    // deg is a segment
    if (other.affine_dim() >= 2) {
      auto seg = clip_segment_by_polygon(deg.vertices().front(),
                                         deg.vertices().back(), other.vertices());
      if (seg.empty()) return Polytope::empty_body(2);
      return hull(seg, 2);
    }
    // segment vs segment (or point): restrict one to the other
    const Pt a = deg.vertices().front(), b = deg.vertices().back();
    const Pt c = other.vertices().front(), d = other.vertices().back();
    const Pt e1 = b - a, e2 = d - c;
    const double cr = cross2(e1, e2);
    if (std::abs(cr) > kOrientTol) {  // generic crossing
      const Pt ca = c - a;
      const double s = cross2(ca, e2) / cr;
      const double t = cross2(ca, e1) / cr;
      if (s >= -1e-12 && s <= 1 + 1e-12 && t >= -1e-12 && t <= 1 + 1e-12)
        return hull(std::vector<Pt>{a + s * e1}, 2);
      return Polytope::empty_body(2);
    }
    // parallel: overlap only if collinear
    if (point_segment_distance(c, a, b) > kOrientTol &&
        point_segment_distance(d, a, b) > kOrientTol)
      return Polytope::empty_body(2);
    const Pt dir = (1.0 / norm(e1)) * e1;
    const double lo = std::max(0.0, std::min(dot(c - a, dir), dot(d - a, dir)));
    const double hi =
        std::min(norm(e1), std::max(dot(c - a, dir), dot(d - a, dir)));
    if (lo > hi + 1e-12) return Polytope::empty_body(2);
    return hull(std::vector<Pt>{a + lo * dir, a + hi * dir}, 2);
  }

  std::vector<Pt> poly = p.vertices();
  const std::vector<Pt>& clip = q.vertices();
  const int n = int(clip.size());
  for (int i = 0; i < n && !poly.empty(); ++i)
    poly = clip_by_halfplane(poly, clip[i], clip[(i + 1) % n]);
  if (poly.empty()) return Polytope::empty_body(2);
  return hull(poly, 2);
}

double hausdorff_distance(const Polytope& p, const Polytope& q) {
  if (p.is_empty() && q.is_empty()) return 0.0;
  if (p.is_empty() || q.is_empty()) return kInf;
  double h = 0.0;
  for (const Pt& v : p.vertices()) h = std::max(h, q.distance_to(v));
  for (const Pt& v : q.vertices()) h = std::max(h, p.distance_to(v));
  return h;
}

BallApprox ball_approx(int dim, int facets) {
  require(dim == 2 || dim == 3, "ball_approx: dimension must be 2 or 3");
  BallApprox ball;
  ball.dim = dim;
  ball.facets = facets;

  if (dim == 2) {
    require(facets >= 8 && facets % 2 == 0,
            "ball_approx: 2D facet count must be even and >= 8");
    std::vector<Pt> v(facets);
    for (int j = 0; j < facets; ++j) {
      const double th = 2.0 * std::numbers::pi * j / facets;
      v[j] = {std::cos(th), std::sin(th), 0.0};
    }
    ball.body = hull(v, 2);
    return ball;
  }

  int levels = -1;
  for (int k = 0, f = 20; k <= 3; ++k, f *= 4)
    if (facets == f) levels = k;
  require(levels >= 0, "ball_approx: 3D facet count must be 20 * 4^k, k <= 3");

  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Pt> verts = {{0, 1, phi},  {0, -1, phi},  {0, 1, -phi}, {0, -1, -phi},
                           {1, phi, 0},  {-1, phi, 0},  {1, -phi, 0}, {-1, -phi, 0},
                           {phi, 0, 1},  {-phi, 0, 1},  {phi, 0, -1}, {-phi, 0, -1}};
  for (Pt& v : verts) v = (1.0 / norm(v)) * v;
  std::vector<std::array<int, 3>> faces = hull(verts, 3).facets();
  {
    // Rebuild vertex list to match the hull's indexing.
    verts = hull(verts, 3).vertices();
  }
  for (int round = 0; round < levels; ++round) {
    std::map<std::pair<int, int>, int> mid;
    auto midpoint = [&](int a, int b) {
      const auto key = std::minmax(a, b);
      auto it = mid.find(key);
      if (it != mid.end()) return it->second;
      Pt m = 0.5 * (verts[a] + verts[b]);
      m = (1.0 / norm(m)) * m;
      verts.push_back(m);
      const int id = int(verts.size()) - 1;
      mid.emplace(key, id);
      return id;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(faces.size() * 4);
    for (const auto& f : faces) {
      const int ab = midpoint(f[0], f[1]);
      const int bc = midpoint(f[1], f[2]);
      const int ca = midpoint(f[2], f[0]);
      next.push_back({f[0], ab, ca});
      next.push_back({f[1], bc, ab});
      next.push_back({f[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    faces = std::move(next);
  }
  ball.body = hull(verts, 3);
  return ball;
}

double unit_ball_volume(int dim) {
  return std::pow(std::numbers::pi, dim / 2.0) / std::tgamma(dim / 2.0 + 1.0);
}

}  // namespace mixint
