#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dp3/lattice.hpp"
#include "dp3/laurent.hpp"

namespace dp3 {

// signed side lengths (a,b,c,d,e,f); + and - come from ExponentVector, the same type
using SixTuple = std::array<int, 6>;

// point m*u + n*v of the triangular lattice, u at 0 degrees and v at 60 degrees
struct Lat2 {
  int m = 0, n = 0;
  auto operator<=>(const Lat2&) const = default;
  Lat2 operator+(const Lat2& o) const { return {m + o.m, n + o.n}; }
  Lat2 operator-(const Lat2& o) const { return {m - o.m, n - o.n}; }
  Lat2 operator*(int s) const { return {m * s, n * s}; }
};

// unit vector at angle 60*d degrees, d = 0..5
Lat2 lattice_direction(int d);
// direction index (0..5) walked by side s = 0..5 for positive length; a..f at 300,240,...,0 degrees
int side_direction(int s);

SixTuple phi(const LatticePoint& p);
std::optional<LatticePoint> phi_inverse(const SixTuple& t);
SixTuple sigma(const SixTuple& t, int m);
SixTuple theta(const SixTuple& t);
SixTuple negate(const SixTuple& t);

bool closes(const SixTuple& t);
bool is_valid_closed(const SixTuple& t);
int side_sum(const SixTuple& t);

// 7 corners, first = start, last = end (equal to start for a closed contour)
std::array<Lat2, 7> contour_path(const SixTuple& t, Lat2 start = {});
bool is_self_intersecting(const SixTuple& t);

struct SignPattern {
  std::string word;             // e.g. "+-0+-+"
  int case_label = 0;           // 1,2,3,5 for zero-free words, 4 when some side is zero
  std::vector<int> compatible;  // for case 4: labels reachable by filling the zeros
  std::string orbit;            // least word in the orbit under rotation and theta
};
SignPattern sign_pattern(const SixTuple& t);

// the six-tuple added when a black point on side s is removed; white removal subtracts it
SixTuple removal_shift(int side);

std::string to_string(const SixTuple& t);
SixTuple parse_contour(const std::string& text);

// planar coordinates, x to the right and y up
std::pair<double, double> to_plane(double m, double n);
std::string contour_svg(const SixTuple& t, double scale = 40.0);

}  // namespace dp3
