#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dp3/dimer.hpp"

namespace dp3 {

enum class KuoVariant { balanced, unbalanced, nonalternating, monochromatic };
std::string to_string(KuoVariant v);

// which of the four identities applies to four boundary colors listed in cyclic order
KuoVariant kuo_variant(const std::array<Color, 4>& colors);

// subsets of the four points as bitmasks over their cyclic positions 0..3:
// w(G-lhs[0]) w(G-lhs[1]) = w(G-rhs[0][0]) w(G-rhs[0][1]) + w(G-rhs[1][0]) w(G-rhs[1][1])
struct KuoTerms {
  std::array<unsigned, 2> lhs{};
  std::array<std::array<unsigned, 2>, 2> rhs{};
};
KuoTerms kuo_terms(const std::array<Color, 4>& colors);

struct KuoCheck {
  bool holds = false;
  KuoVariant variant = KuoVariant::balanced;
  LaurentPoly lhs, rhs;
  std::array<LaurentPoly, 16> w;  // w(H - S) for every subset S that occurs, indexed by mask
};

// points are vertex indices of h in cyclic boundary order; throws PreconditionViolated
KuoCheck kuo_check(const CutSubgraph& h, const std::array<int, 4>& points, KuoVariant variant,
                   const PfOptions& opt = {});

// an explicit instance realising a recurrence by condensation on the cut-out of an outer contour
struct KuoInstance {
  RecurrenceTerms terms;
  SixTuple outer{};
  std::array<int, 4> sides{};  // sides carrying the four points, increasing
  std::array<int, 4> signs{};  // +1: black point on a positive side, -1: white point on a negative side
  std::array<int, 4> indices{};  // special point index used on each side
  unsigned s1 = 0;             // points whose side of `outer` is shortened relative to phi(lhs[0])
  KuoVariant variant = KuoVariant::balanced;
};

// all instances found by trying every split of the contour difference into four unit removals.
// Point indices are chosen, nearest the middle of each side first, so that the core of every
// H - S in the identity coincides with the core cut out by its target contour, covering monomial included.
std::vector<KuoInstance> kuo_instances(const RecurrenceTerms& r);

struct KuoInstanceCheck {
  KuoCheck kuo;
  // c-value of each H - S (m(H) over the lost faces, times w(H - S)) against the formula at the mapped point
  bool matches_formula = false;
  std::array<LatticePoint, 16> points{};
};
KuoInstanceCheck check_instance(const KuoInstance& inst, const PfOptions& opt = {});

// the seven illustrated instances, numbered 28..34
struct FigureInstance {
  int number = 0;
  LatticePoint p;
  Recurrence kind = Recurrence::R4;
  KuoVariant variant = KuoVariant::balanced;
};
const std::vector<FigureInstance>& figure_instances();
// the first instance at the figure's point with the figure's recurrence and variant
std::optional<KuoInstance> figure_instance(int number);

// recurrence type relating p and p + d, if any
std::optional<Recurrence> classify_shift(int di, int dj, int dk);
// translation applied to the second contour before superposing it on the first, from the changes in a and f
Lat2 superposition_shift(const SixTuple& c, const SixTuple& shifted);

}  // namespace dp3
