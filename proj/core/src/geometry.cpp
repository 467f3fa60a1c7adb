#include "dsmn/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace dsmn::geom {

namespace {

// Relative tolerance for classifying tangency and parallelism. Scene
// generators keep configurations far from these margins, so the exact value
// only matters for hand-constructed exact-tangency inputs.
constexpr double kTangentEps = 1e-9;

bool finite(double v) { return std::isfinite(v); }

std::string describe(const Shape& s) {
  std::ostringstream out;
  if (const auto* seg = std::get_if<Segment>(&s)) {
    out << "segment (" << seg->a.x << "," << seg->a.y << ")-(" << seg->b.x << "," << seg->b.y << ")";
  } else if (const auto* c = std::get_if<Circle>(&s)) {
    out << "circle r=" << c->radius << " center (" << c->center.x << "," << c->center.y << ")";
  } else {
    const auto& r = std::get<Rect>(s);
    out << "rect h=" << r.height << " w=" << r.width << " at (" << r.x << "," << r.y << ")";
  }
  return out.str();
}

void push_dedup(std::vector<Point>& pts, Point p) {
  for (const Point& q : pts)
    if (distance(p, q) <= kDedupeEps) return;
  pts.push_back(p);
}

std::vector<Point> segment_segment(const Segment& s1, const Segment& s2) {
  Point r = s1.b - s1.a;
  Point s = s2.b - s2.a;
  Point qp = s2.a - s1.a;
  double rxs = cross(r, s);
  double len_scale = norm(r) * norm(s);
  if (std::abs(rxs) <= 1e-12 * len_scale) {
    // Parallel. Collinear iff the offset is parallel too.
    if (std::abs(cross(qp, r)) > 1e-12 * norm(r) * (norm(qp) + norm(r))) return {};
    // Collinear: project s2 endpoints on s1's parameter.
    double rr = dot(r, r);
    double t0 = dot(qp, r) / rr;
    double t1 = dot(s2.b - s1.a, r) / rr;
    if (t0 > t1) std::swap(t0, t1);
    double lo = std::max(0.0, t0);
    double hi = std::min(1.0, t1);
    double overlap = (hi - lo) * norm(r);
    if (overlap > kDedupeEps)
      throw degenerate_pair_error("collinear overlapping segments: " + describe(s1) + " / " + describe(s2));
    if (overlap >= -kDedupeEps && lo >= -1e-12 && lo <= 1.0 + 1e-12) {
      double t = std::clamp(0.5 * (lo + hi), 0.0, 1.0);
      return {s1.a + t * r};
    }
    return {};
  }
  double t = cross(qp, s) / rxs;
  double u = cross(qp, r) / rxs;
  if (t < 0.0 || t > 1.0 || u < 0.0 || u > 1.0) return {};
  return {s1.a + t * r};
}

std::vector<Point> segment_circle(const Segment& seg, const Circle& c) {
  Point d = seg.b - seg.a;
  Point f = seg.a - c.center;
  double a = dot(d, d);
  double b = 2.0 * dot(f, d);
  double cc = dot(f, f) - c.radius * c.radius;
  double disc = b * b - 4.0 * a * cc;
  // Geometric separation of the two roots is sqrt(disc / a).
  double sep2 = disc / a;
  if (std::abs(sep2) <= kTangentEps * kTangentEps) {
    double t = -b / (2.0 * a);
    if (t >= 0.0 && t <= 1.0) return {seg.a + t * d};
    return {};
  }
  if (disc < 0.0) return {};
  double sq = std::sqrt(disc);
  // Numerically stable quadratic roots.
  double q = -0.5 * (b + (b >= 0.0 ? sq : -sq));
  double t0 = q / a;
  double t1 = (cc != 0.0) ? cc / q : -b / a - t0;
  if (t0 > t1) std::swap(t0, t1);
  std::vector<Point> pts;
  for (double t : {t0, t1})
    if (t >= 0.0 && t <= 1.0) push_dedup(pts, seg.a + t * d);
  return pts;
}

std::vector<Point> circle_circle(const Circle& c1, const Circle& c2) {
  double d = distance(c1.center, c2.center);
  double rsum = c1.radius + c2.radius;
  double rdiff = std::abs(c1.radius - c2.radius);
  if (d <= kTangentEps && rdiff <= kTangentEps)
    throw degenerate_pair_error("coincident circles: " + describe(Shape{c1}));
  Point u = (d > 0.0) ? (1.0 / d) * (c2.center - c1.center) : Point{1.0, 0.0};
  if (std::abs(d - rsum) <= kTangentEps) return {c1.center + c1.radius * u};
  if (std::abs(d - rdiff) <= kTangentEps) {
    // Internal tangency: the point lies on the ray toward (or away from) c2.
    double dir = (c1.radius >= c2.radius) ? 1.0 : -1.0;
    return {c1.center + c1.radius * dir * u};
  }
  if (d > rsum || d < rdiff) return {};
  double a = (d * d + c1.radius * c1.radius - c2.radius * c2.radius) / (2.0 * d);
  double h2 = c1.radius * c1.radius - a * a;
  double h = std::sqrt(std::max(0.0, h2));
  Point mid = c1.center + a * u;
  Point perp{-u.y, u.x};
  std::vector<Point> pts;
  push_dedup(pts, mid + h * perp);
  push_dedup(pts, mid - h * perp);
  return pts;
}

std::vector<Point> with_rect(const Rect& r, const Shape& other) {
  std::vector<Point> pts;
  for (const Segment& side : rect_sides(r))
    for (Point p : pair_intersections(Shape{side}, other)) push_dedup(pts, p);
  return pts;
}

}  // namespace

double norm(Point a) { return std::hypot(a.x, a.y); }
double distance(Point a, Point b) { return norm(a - b); }

std::array<Segment, 4> rect_sides(const Rect& r) {
  Point bl{r.x, r.y};
  Point br{r.x + r.width, r.y};
  Point tr{r.x + r.width, r.y + r.height};
  Point tl{r.x, r.y + r.height};
  return {Segment{bl, br}, Segment{br, tr}, Segment{tr, tl}, Segment{tl, bl}};
}

void validate_shape(const Shape& s) {
  if (const auto* seg = std::get_if<Segment>(&s)) {
    for (double v : {seg->a.x, seg->a.y, seg->b.x, seg->b.y})
      if (!finite(v)) throw data_error("segment with non-finite coordinate");
    if (distance(seg->a, seg->b) <= 0.0) throw data_error("segment endpoints coincide");
  } else if (const auto* c = std::get_if<Circle>(&s)) {
    if (!finite(c->radius) || !finite(c->center.x) || !finite(c->center.y))
      throw data_error("circle with non-finite field");
    if (c->radius <= 0.0) throw data_error("non-positive radius");
  } else {
    const auto& r = std::get<Rect>(s);
    if (!finite(r.height) || !finite(r.width) || !finite(r.x) || !finite(r.y))
      throw data_error("rectangle with non-finite field");
    if (r.height <= 0.0) throw data_error("non-positive rectangle height");
    if (r.width <= 0.0) throw data_error("non-positive rectangle width");
  }
}

bool shape_in_canvas(const Shape& s, double extent) {
  auto inside = [extent](double lo, double hi) { return lo >= 0.0 && hi <= extent; };
  if (const auto* seg = std::get_if<Segment>(&s)) {
    return inside(std::min(seg->a.x, seg->b.x), std::max(seg->a.x, seg->b.x)) &&
           inside(std::min(seg->a.y, seg->b.y), std::max(seg->a.y, seg->b.y));
  }
  if (const auto* c = std::get_if<Circle>(&s)) {
    return inside(c->center.x - c->radius, c->center.x + c->radius) &&
           inside(c->center.y - c->radius, c->center.y + c->radius);
  }
  const auto& r = std::get<Rect>(s);
  return inside(r.x, r.x + r.width) && inside(r.y, r.y + r.height);
}

bool shapes_identical(const Shape& a, const Shape& b) {
  return encode_shape(a) == encode_shape(b);
}

ShapeVec encode_shape(const Shape& s) {
  if (const auto* seg = std::get_if<Segment>(&s))
    return {kCodeSegment, seg->a.x, seg->a.y, seg->b.x, seg->b.y};
  if (const auto* c = std::get_if<Circle>(&s))
    return {kCodeCircle, c->radius, c->center.x, c->center.y, 0.0};
  const auto& r = std::get<Rect>(s);
  return {kCodeRect, r.height, r.width, r.x, r.y};
}

Shape decode_shape(const ShapeVec& v) {
  Shape s;
  if (v[0] == kCodeSegment) {
    s = Segment{{v[1], v[2]}, {v[3], v[4]}};
  } else if (v[0] == kCodeCircle) {
    s = Circle{v[1], {v[2], v[3]}};
  } else if (v[0] == kCodeRect) {
    s = Rect{v[1], v[2], v[3], v[4]};
  } else {
    std::ostringstream out;
    out << "unknown type code " << v[0] << " (expected 1, 2 or 3)";
    throw data_error(out.str());
  }
  validate_shape(s);
  if (!shape_in_canvas(s))
    throw data_error("shape extends outside the 10x10 canvas: " + describe(s));
  return s;
}

std::vector<Point> pair_intersections(const Shape& a, const Shape& b) {
  // Rect pairs reduce to side-by-side segment tests; shared edges surface as
  // collinear overlaps there.
  if (const auto* r = std::get_if<Rect>(&a)) return with_rect(*r, b);
  if (const auto* r = std::get_if<Rect>(&b)) return with_rect(*r, a);
  if (const auto* s1 = std::get_if<Segment>(&a)) {
    if (const auto* s2 = std::get_if<Segment>(&b)) return segment_segment(*s1, *s2);
    return segment_circle(*s1, std::get<Circle>(b));
  }
  const auto& c1 = std::get<Circle>(a);
  if (const auto* s2 = std::get_if<Segment>(&b)) return segment_circle(*s2, c1);
  return circle_circle(c1, std::get<Circle>(b));
}

int count_intersections(const Scene& scene) {
  std::vector<Point> all;
  for (std::size_t i = 0; i < scene.shapes.size(); ++i)
    for (std::size_t j = i + 1; j < scene.shapes.size(); ++j)
      for (Point p : pair_intersections(scene.shapes[i], scene.shapes[j])) push_dedup(all, p);
  return static_cast<int>(all.size());
}

CanvasImage make_canvas(int resolution) {
  CanvasImage c;
  c.height = resolution;
  c.width = resolution;
  c.values.assign(static_cast<std::size_t>(resolution) * resolution, 0.0);
  return c;
}

std::pair<int, int> to_pixel(Point p, int resolution, double extent) {
  int col = static_cast<int>(std::floor(p.x / extent * resolution));
  int row = static_cast<int>(std::floor((extent - p.y) / extent * resolution));
  col = std::clamp(col, 0, resolution - 1);
  row = std::clamp(row, 0, resolution - 1);
  return {row, col};
}

void draw_segment(CanvasImage& canvas, Point a, Point b, double extent) {
  // March at sub-pixel steps; a set pixel is set once.
  double len = distance(a, b);
  double pixel = extent / canvas.width;
  int steps = std::max(1, static_cast<int>(std::ceil(len / (0.25 * pixel))));
  for (int i = 0; i <= steps; ++i) {
    double t = static_cast<double>(i) / steps;
    auto [row, col] = to_pixel(a + t * (b - a), canvas.width, extent);
    canvas.at(row, col) = 1.0;
  }
}

void draw_shape(CanvasImage& canvas, const Shape& s, double extent) {
  if (const auto* seg = std::get_if<Segment>(&s)) {
    draw_segment(canvas, seg->a, seg->b, extent);
  } else if (const auto* c = std::get_if<Circle>(&s)) {
    double pixel = extent / canvas.width;
    int steps = std::max(8, static_cast<int>(std::ceil(2.0 * M_PI * c->radius / (0.25 * pixel))));
    for (int i = 0; i < steps; ++i) {
      double a = 2.0 * M_PI * i / steps;
      Point p{c->center.x + c->radius * std::cos(a), c->center.y + c->radius * std::sin(a)};
      auto [row, col] = to_pixel(p, canvas.width, extent);
      canvas.at(row, col) = 1.0;
    }
  } else {
    for (const Segment& side : rect_sides(std::get<Rect>(s)))
      draw_segment(canvas, side.a, side.b, extent);
  }
}

void draw_block(CanvasImage& canvas, Point center, int half_side, double extent) {
  auto [row, col] = to_pixel(center, canvas.width, extent);
  for (int dr = -half_side; dr <= half_side; ++dr)
    for (int dc = -half_side; dc <= half_side; ++dc) {
      int r = row + dr, c = col + dc;
      if (r >= 0 && r < canvas.height && c >= 0 && c < canvas.width) canvas.at(r, c) = 1.0;
    }
}

CanvasImage rasterize(const Shape& s, int resolution, double extent) {
  CanvasImage canvas = make_canvas(resolution);
  draw_shape(canvas, s, extent);
  return canvas;
}

double shape_perimeter(const Shape& s) {
  if (const auto* seg = std::get_if<Segment>(&s)) return distance(seg->a, seg->b);
  if (const auto* c = std::get_if<Circle>(&s)) return 2.0 * M_PI * c->radius;
  const auto& r = std::get<Rect>(s);
  return 2.0 * (r.height + r.width);
}

Point boundary_point(const Shape& s, double u) {
  if (const auto* seg = std::get_if<Segment>(&s)) {
    double t = u / distance(seg->a, seg->b);
    return seg->a + t * (seg->b - seg->a);
  }
  if (const auto* c = std::get_if<Circle>(&s)) {
    double a = u / c->radius;
    return {c->center.x + c->radius * std::cos(a), c->center.y + c->radius * std::sin(a)};
  }
  const auto& r = std::get<Rect>(s);
  for (const Segment& side : rect_sides(r)) {
    double len = distance(side.a, side.b);
    if (u <= len) return side.a + (u / len) * (side.b - side.a);
    u -= len;
  }
  return {r.x, r.y};
}

double point_segment_distance(Point p, const Segment& s) {
  Point d = s.b - s.a;
  double t = dot(p - s.a, d) / dot(d, d);
  t = std::clamp(t, 0.0, 1.0);
  return distance(p, s.a + t * d);
}

double boundary_distance(Point p, const Shape& s) {
  if (const auto* seg = std::get_if<Segment>(&s)) return point_segment_distance(p, *seg);
  if (const auto* c = std::get_if<Circle>(&s)) return std::abs(distance(p, c->center) - c->radius);
  double best = std::numeric_limits<double>::infinity();
  for (const Segment& side : rect_sides(std::get<Rect>(s)))
    best = std::min(best, point_segment_distance(p, side));
  return best;
}

}  // namespace dsmn::geom
