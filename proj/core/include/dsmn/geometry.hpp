#pragma once

#include <array>
#include <filesystem>
#include <variant>
#include <vector>

#include "dsmn/error.hpp"

namespace dsmn::geom {

// Shapes live on a 10 x 10 canvas.
inline constexpr double kCanvasExtent = 10.0;

// Two intersection points closer than this are the same point.
inline constexpr double kDedupeEps = 1e-9;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
double norm(Point a);
double distance(Point a, Point b);

struct Segment {
  Point a;
  Point b;
};

struct Circle {
  double radius = 0.0;
  Point center;
};

// Axis-aligned; (x, y) is the bottom-left corner.
struct Rect {
  double height = 0.0;
  double width = 0.0;
  double x = 0.0;
  double y = 0.0;
};

using Shape = std::variant<Segment, Circle, Rect>;

// Type codes used by the 5-number encoding.
inline constexpr double kCodeSegment = 1.0;
inline constexpr double kCodeCircle = 2.0;
inline constexpr double kCodeRect = 3.0;

using ShapeVec = std::array<double, 5>;

// A pair of shapes whose boundaries share an infinite point set (collinear
// overlapping segments, coincident circles, shared rectangle edges).
class degenerate_pair_error : public error {
 public:
  explicit degenerate_pair_error(const std::string& what) : error(what) {}
};

// Checks field invariants (finite, distinct endpoints, positive sizes).
void validate_shape(const Shape& s);

// True when the whole shape lies inside [0, extent]^2.
bool shape_in_canvas(const Shape& s, double extent = kCanvasExtent);

bool shapes_identical(const Shape& a, const Shape& b);

// (1,x1,y1,x2,y2) / (2,r,cx,cy,0) / (3,h,w,x,y).
ShapeVec encode_shape(const Shape& s);

// Inverse of encode_shape; throws data_error on unknown type codes,
// non-positive sizes, or coordinates outside the canvas.
Shape decode_shape(const ShapeVec& v);

// Exact boundary intersection points of a pair. Tangency yields one point; a
// rectangle is its 4-side boundary. Throws degenerate_pair_error when the
// intersection set is infinite.
std::vector<Point> pair_intersections(const Shape& a, const Shape& b);

struct Scene {
  std::vector<Shape> shapes;
};

// Number of distinct boundary intersection points over all pairs. Points from
// different pairs closer than kDedupeEps count once.
int count_intersections(const Scene& scene);

// Row-major H x W grayscale image, values in [0,1], row 0 at the top.
struct CanvasImage {
  int height = 0;
  int width = 0;
  std::vector<double> values;

  double& at(int row, int col) { return values[static_cast<std::size_t>(row) * width + col]; }
  double at(int row, int col) const { return values[static_cast<std::size_t>(row) * width + col]; }
};

CanvasImage make_canvas(int resolution);

// Pixel of a canvas point; `extent` is the side of the square world window.
// y grows northward, so row 0 holds the top of the window.
std::pair<int, int> to_pixel(Point p, int resolution, double extent);

// 1-pixel-stroke binary mask of the shape boundary on [0, extent]^2.
CanvasImage rasterize(const Shape& s, int resolution, double extent = kCanvasExtent);

// Draws onto an existing canvas (same mapping as rasterize).
void draw_shape(CanvasImage& canvas, const Shape& s, double extent = kCanvasExtent);
void draw_segment(CanvasImage& canvas, Point a, Point b, double extent = kCanvasExtent);
void draw_block(CanvasImage& canvas, Point center, int half_side, double extent = kCanvasExtent);

// --- helpers shared with the sampling oracle and the scene sampler ---

// Boundary arc length.
double shape_perimeter(const Shape& s);

// Point at arc-length parameter u in [0, perimeter) along the boundary.
Point boundary_point(const Shape& s, double u);

// Unsigned distance from a point to the shape boundary.
double boundary_distance(Point p, const Shape& s);

double point_segment_distance(Point p, const Segment& s);

// Rectangle sides in order bottom, right, top, left.
std::array<Segment, 4> rect_sides(const Rect& r);

}  // namespace dsmn::geom
