#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dp3/contour.hpp"
#include "dp3/laurent.hpp"

namespace dp3 {

struct WindowTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SelfIntersecting : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CutDiagnostic : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoPerfectMatching : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};
struct PointAbsent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Color { black, white };
// white6: lattice points; white3a/white3b: centres of down/up triangles; black4: edge midpoints
enum class DegreeClass { white6, white3a, white3b, black4 };

// position in units of 1/6 of the lattice basis
struct VertexKey {
  int x = 0, y = 0;
  auto operator<=>(const VertexKey&) const = default;
};

struct Vertex {
  VertexKey key;
  Color color = Color::white;
  DegreeClass cls = DegreeClass::white6;
};

struct Edge {
  int u = 0, v = 0;        // vertex indices
  int face_a = 0, face_b = 0;  // labels (1..6) of the two faces it separates, face_a < face_b
};

// a unit triangle; up = (P, P+u, P+v), down = (P, P+v, P+v-u)
struct Triangle {
  bool up = true;
  Lat2 base;
  auto operator<=>(const Triangle&) const = default;
  std::array<Lat2, 3> corners() const;
  // face label at each corner, in the order of corners()
  std::array<int, 3> labels() const;
};

// the tiling restricted to the hexagon max(|m|,|n|,|m+n|) <= radius
struct TilingGraph {
  int radius = 0;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<Triangle> triangles;
  std::map<VertexKey, int> index;

  bool contains(Lat2 p) const;
  // face labels met walking once around a vertex (counterclockwise), only for vertices whose fan is complete
  std::vector<int> face_cycle(int v) const;
};

TilingGraph build_window(int radius);
// smallest radius whose window holds every contour with all sides bounded by max_side
int window_radius_for(int max_side);

struct CutSubgraph {
  SixTuple contour{};
  std::vector<Vertex> vertices;  // sorted by key
  std::vector<Edge> edges;
  std::vector<Triangle> inside;
  std::vector<VertexKey> removed;        // boundary vertices deleted by the cut
  std::array<int, 6> face_counts{};      // faces of each label inside the contour
  std::vector<Edge> forced;              // edges fixed while peeling to the core (indices are stale)
  std::array<int, 6> forced_counts{};    // label multiplicities of the forced edges
  bool is_core = false;

  int find(VertexKey k) const;  // -1 if absent
  // covering monomial m(G): faces inside, divided by the forced edges' weights
  LaurentPoly covering_monomial() const;
  ExponentVector monomial_exponents() const;
};

CutSubgraph cut(const SixTuple& t, const TilingGraph& window);
// builds a window large enough on its own
CutSubgraph cut(const SixTuple& t);
// repeatedly matches degree-1 vertices of either color; throws NoPerfectMatching on an isolated vertex
CutSubgraph core(const CutSubgraph& g);
CutSubgraph remove_vertices(const CutSubgraph& g, const std::vector<int>& vs);
// remove a vertex and return the core of what is left
CutSubgraph remove_point(const CutSubgraph& g, int v);

// equal up to a translation of the white-6 lattice, including edge labels
bool same_up_to_translation(const CutSubgraph& a, const CutSubgraph& b);

// the index-th special point (1-based from the side's start) of side s of g's contour:
// black on positive sides, white on negative sides
VertexKey special_point_key(const SixTuple& t, int side, int index);
// vertex index in g; throws IndexOutOfRange or PointAbsent
int special_point(const CutSubgraph& g, int side, int index);
// the first special point of the side that is still present in g, -1 if none
int first_special_point(const CutSubgraph& g, int side);
// label of the face lost when the special point of `side` is removed
int lost_face(int side, Color color);

std::pair<double, double> key_to_plane(VertexKey k);
std::string to_svg(const CutSubgraph& g, double scale = 40.0);

}  // namespace dp3
