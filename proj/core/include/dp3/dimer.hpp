#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "dp3/contour.hpp"
#include "dp3/lattice.hpp"
#include "dp3/laurent.hpp"
#include "dp3/tiling.hpp"

namespace dp3 {

struct BudgetExceeded : std::runtime_error {
  BudgetExceeded(std::uint64_t seen, std::uint64_t budget)
      : std::runtime_error("perfect-matching enumeration stopped after " + std::to_string(seen) +
                           " matchings (budget " + std::to_string(budget) + ")"),
        partial_count(seen) {}
  std::uint64_t partial_count;
};
struct SkippedSelfIntersecting : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PreconditionViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Engine {
  enumerate,  // depth-first over matchings, min-degree branching; stops at the budget
  transfer,   // frontier dynamic programme over a sweep order; no budget
};

struct PfOptions {
  Engine engine = Engine::enumerate;
  std::uint64_t budget = 1'000'000;
};

// weighted sum over perfect matchings, an edge between faces i and j weighing 1/(x_i x_j)
LaurentPoly partition_function(const CutSubgraph& g, const PfOptions& opt = {});
// the number of perfect matchings
mpz_class match_count(const CutSubgraph& g, const PfOptions& opt = {});
// m(G) * w(G)
LaurentPoly c_value(const CutSubgraph& g, const PfOptions& opt = {});

// largest DP state count of the transfer engine's chosen order, for diagnostics and benchmarks
std::size_t transfer_width(const CutSubgraph& g);

enum class Recurrence { R1, R2, R4 };

// one instance of a three-term relation between six lattice points:
// z(lhs[0]) z(lhs[1]) = z(rhs1[0]) z(rhs1[1]) + z(rhs2[0]) z(rhs2[1])
struct RecurrenceTerms {
  Recurrence kind = Recurrence::R4;
  int direction = 0;  // index into the six unit steps of the (i,j) plane
  int dk = 0;         // +1 or -1 for R4, unused otherwise
  std::array<LatticePoint, 2> lhs, rhs1, rhs2;
};

// unit steps (1,0),(0,1),(-1,1),(-1,0),(0,-1),(1,-1) of the (i,j) plane
std::pair<int, int> plane_step(int direction);
RecurrenceTerms recurrence_terms(const LatticePoint& p, Recurrence kind, int direction, int dk = 1);
// every instance based at p: R4 for 6 directions and dk = +-1, R2 and R1 for 6 directions
std::vector<RecurrenceTerms> recurrence_instances(const LatticePoint& p);

struct RecurrenceCheck {
  bool holds = false;
  LaurentPoly lhs, rhs;
};
// evaluates all six c-values with dimers; throws SkippedSelfIntersecting if any contour self-intersects
RecurrenceCheck check_recurrence(const RecurrenceTerms& r, const PfOptions& opt = {});
RecurrenceCheck check_recurrence(const LatticePoint& p, Recurrence kind, int direction, int dk = 1,
                                 const PfOptions& opt = {});
std::string to_string(Recurrence r);

}  // namespace dp3
