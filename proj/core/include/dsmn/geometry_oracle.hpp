#pragma once

#include "dsmn/geometry.hpp"

namespace dsmn::geom {

// Counts intersection points by dense boundary sampling, proximity detection
// against the other shape's boundary, and spatial clustering of the hits.
// Deliberately ignorant of the closed-form intersection code; test oracle only.
//
// `step` is the arc-length sampling step in canvas units (must be <= 1e-3).
int brute_force_count(const Scene& scene, double step = 1e-3);

}  // namespace dsmn::geom
