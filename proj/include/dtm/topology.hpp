// Digital topology on regions: flood-fill components, solid sets,
// morphology, graph distances and Urysohn-style ramp functions.

#pragma once

#include <vector>

#include "dtm/space.hpp"

namespace dtm {

struct Component {
  Region cells;
  // plane_window mode: true for the component reachable from the virtual
  // exterior node (it models the unbounded part of the complement).
  bool unbounded = false;
};

// Partition of `r` into maximal connected subsets. attach_exterior makes the
// virtual exterior node (plane_window mode only) a member of the set,
// adjacent to every border cell; it contributes no cells of its own.
std::vector<Component> connected_components(const Region& r, Side side,
                                            bool attach_exterior);

// Spec-level variant: the exterior participates when looking at the
// background side of a plane window.
std::vector<Component> connected_components(const Region& r, Side side);

// Connected with connected complement. Empty: false. Full space: true.
bool is_solid(const Region& r);

Region dilate(const Region& r, int steps);  // 4-adjacency rings, clipped to the grid
Region erode(const Region& r, int steps);   // plane_window erodes from the border too

// No cell of a is 8-adjacent (or equal) to a cell of b; grid stand-in for
// disjoint compacta.
bool separated(const Region& a, const Region& b);

// 4-adjacency graph distance from each cell to the nearest cell of `from`
// (INT_MAX where unreachable). In plane_window mode with from_exterior the
// virtual exterior seeds the front at distance 0 (border cells get 1).
std::vector<int> distance_field(const Region& from, bool from_exterior = false);

// Minimal 4-adjacency distance between two nonempty regions.
int region_distance(const Region& a, const Region& b);

// f = clamp(d(c, X \ U) / m, 0, 1) with m = min(margin, d(K, X \ U)).
// Guarantees f = 1 on K, f = 0 outside U. Throws unless K subset of U.
GridFunction urysohn_ramp(const Region& k, const Region& u, int margin);

}  // namespace dtm
