#pragma once

#include <array>
#include <optional>
#include <string>

#include "dp3/laurent.hpp"

namespace dp3 {

// b[i][j] = #(i -> j) - #(j -> i), 0-based storage; public vertex indices are 1..6
using QuiverMatrix = std::array<std::array<int, kVars>, kVars>;

struct Seed {
  QuiverMatrix b{};
  std::array<LaurentPoly, kVars> cluster;

  friend bool operator==(const Seed&, const Seed&) = default;
};

QuiverMatrix initial_quiver();
Seed initial_seed();

// throws std::overflow_error when an entry leaves the int range
QuiverMatrix mutate(const QuiverMatrix& b, int v);
Seed mutate(const Seed& s, int v);

bool is_toric(const QuiverMatrix& b, int v);
bool is_toric(const Seed& s, int v);
int in_degree(const QuiverMatrix& b, int v);
int out_degree(const QuiverMatrix& b, int v);
bool is_skew_symmetric(const QuiverMatrix& b);

// reference quivers for Models 1-4, reached from the initial quiver by mutations
const QuiverMatrix& model_reference(int model);
// 1..4, or nullopt when the quiver is none of the four models (NotAModel)
std::optional<int> classify_model(const QuiverMatrix& b);

// 6 rows of the b-matrix, then one cluster polynomial per line
std::string serialize(const Seed& s);
Seed parse_seed(const std::string& text);

}  // namespace dp3
