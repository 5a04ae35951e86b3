#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dp3/lattice.hpp"
#include "dp3/quiver.hpp"

namespace dp3 {

// symbols 1..5 stand for tau_1..tau_5
using TauWord = std::vector<int>;

struct NotFactorable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotFound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TauDefinition {
  std::vector<int> mutations;  // applied left to right
  std::vector<int> cycle;      // entry at cycle[t] moves to cycle[t+1]
};

// vertices ordered so that vertex r has i - j = r (mod 3)
struct Alcove {
  std::array<std::pair<int, int>, 3> v;
  friend bool operator==(const Alcove&, const Alcove&) = default;
  bool points_ne() const;
};

struct FactoredWord {
  TauWord s1;  // tau_1..tau_3 symbols in order
  TauWord s2;  // reduced alternating tau_4/tau_5 tail
};

TauDefinition tau_to_mutations(int t);
Seed apply_tau(const Seed& s, int t);
Seed apply_tau_word(const Seed& s, const TauWord& w);
Seed apply_mutations(const Seed& s, const std::vector<int>& word);

// strict: throw NotFactorable when the raw tau4/tau5 subword has equal neighbours
FactoredWord factor_word(const TauWord& w, bool strict = false);
Alcove initial_alcove();
Alcove flip(const Alcove& a, int r);
Alcove alcove_of(const TauWord& s1);
Prism prism_of(const TauWord& w);

// parses "t1 t2 t4" (also accepts "τ" spellings like "tau1"); empty text is the empty word
TauWord parse_tau_word(const std::string& text);
std::string to_string(const TauWord& w);
// parses "m1 m4 m3"
std::vector<int> parse_mutation_word(const std::string& text);

LatticePoint locate_variable(const LaurentPoly& p, int window);

}  // namespace dp3
