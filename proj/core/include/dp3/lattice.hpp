#pragma once

#include <array>
#include <compare>
#include <ostream>
#include <string>

namespace dp3 {

struct LatticePoint {
  int i = 0, j = 0, k = 0;

  auto operator<=>(const LatticePoint&) const = default;
};

inline std::string to_string(const LatticePoint& p) {
  return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + "," + std::to_string(p.k) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const LatticePoint& p) { return os << to_string(p); }

using Prism = std::array<LatticePoint, 6>;

}  // namespace dp3
