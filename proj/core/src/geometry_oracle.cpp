#include "dsmn/geometry_oracle.hpp"

#include <cmath>
#include <vector>

namespace dsmn::geom {

namespace {

// A boundary sample of one shape that came within the proximity threshold of
// the other shape's boundary.
struct Hit {
  Point p;
};

constexpr double kClusterRadius = 0.02;

}  // namespace

int brute_force_count(const Scene& scene, double step) {
  if (step > 1e-3) throw contract_error("brute_force_count: step must be <= 1e-3");
  const double prox = 2.0 * step;

  std::vector<Point> candidates;
  const auto& shapes = scene.shapes;
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    for (std::size_t j = i + 1; j < shapes.size(); ++j) {
      // Walk shape i's boundary; keep the local minima of the distance to
      // shape j's boundary that dip under the proximity threshold.
      double peri = shape_perimeter(shapes[i]);
      int n = std::max(8, static_cast<int>(std::ceil(peri / step)));
      bool in_run = false;
      Point best_p{};
      double best_d = 0.0;
      auto flush = [&]() {
        if (in_run) candidates.push_back(best_p);
        in_run = false;
      };
      for (int k = 0; k <= n; ++k) {
        // Closed boundaries (circle, rect) wrap; open segments include both ends.
        double u = peri * (static_cast<double>(k % n) / n);
        if (std::holds_alternative<Segment>(shapes[i])) {
          if (k == n) u = peri;
        } else if (k == n) {
          flush();
          break;
        }
        Point p = boundary_point(shapes[i], u);
        double d = boundary_distance(p, shapes[j]);
        if (d <= prox) {
          if (!in_run || d < best_d) {
            best_p = p;
            best_d = d;
          }
          in_run = true;
        } else {
          flush();
        }
      }
      flush();
    }
  }

  // Greedy clustering: candidates within the cluster radius are one point.
  std::vector<Point> centers;
  for (const Point& p : candidates) {
    bool merged = false;
    for (const Point& c : centers) {
      if (distance(p, c) <= kClusterRadius) {
        merged = true;
        break;
      }
    }
    if (!merged) centers.push_back(p);
  }
  return static_cast<int>(centers.size());
}

}  // namespace dsmn::geom
