#pragma once

#include <cmath>

namespace meecda {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline double distance(Point a, Point b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

}  // namespace meecda
