#pragma once

#include "legcob/moves.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace legcob {

// Ordered positive parts; N is their sum.
using Composition = std::vector<int>;

void validate_composition(const Composition& x);
int composition_total(const Composition& x);

// Bar b (1 <= b <= N-1) is present when some prefix of parts sums to b.
std::vector<int> bar_set(const Composition& x);
unsigned bar_mask(const Composition& x); // bit b-1 <-> bar b
Composition composition_from_bars(int n, unsigned mask);
std::string bar_set_label(const Composition& x); // e.g. "bars={2,3}"

// y <= x: same total and bars(y) a subset of bars(x).
bool is_coarsening(const Composition& y, const Composition& x);

// All 2^(len-1) coarsenings, ordered by descending bar mask (x itself first,
// the single-part composition last).
std::vector<Composition> coarsenings(const Composition& x);

// Partition count by exhaustive enumeration; the independent oracle.
long long partitions_count(int n);

enum class TangleState { Minus, Center, Plus };
const char* tangle_state_name(TangleState s);

// One inter-level tangle occurrence inside a canonical family word.
struct TangleSite {
  int junction = 0;          // 0-based; sits between level junction+1 and junction+2
  int first = 0, last = 0;   // inclusive event range of the junction block
  TangleState state = TangleState::Plus;
  int lower_x = 1;           // part of the level below the tangle
  int upper_comp = -1;       // component owning the two strands entering from above
  std::vector<int> lower_comps;
  friend bool operator==(const TangleSite&, const TangleSite&) = default;
};

// Canonical plat word for the stacked torus-link family with the given
// per-junction tangle states; orientations follow the family rule
// (single-component levels +, two-component levels outer +, inner -).
FrontDiagram lambda_word(const Composition& x, const std::vector<TangleState>& states);

// All junctions entangled; validates rotation 0 everywhere and link tb = N.
FrontDiagram build_lambda(const Composition& x);

// The degenerate-top variant: a bare unknot entangled with a trefoil.
FrontDiagram lambda_star();

// Scan a canonical word for its junction blocks. The two-argument form
// checks the block shapes against the composition and resolves every state;
// the one-argument form prefers the full-clasp reading of capped blocks.
std::vector<TangleSite> find_tangle_sites(const FrontDiagram& f, const Composition& x);
std::vector<TangleSite> find_tangle_sites(const FrontDiagram& f);

FrontDiagram replace_tangle(const FrontDiagram& f, const TangleSite& site,
                            TangleState to);

// The torus-link filling: one zero handle, n loop insertions on the top
// strand, n-1 one handles; certified trace is one surface of euler 2-n.
MoveProgram torus_filling_program(int n);

// Two-lens clasp program for the two-component T_2 plat; exactly one
// relative orientation admits the final one handles.
MoveProgram hopf_program(int upper_orient, int lower_orient);

// Cobordism fragments at a junction whose site is in the reduced state.
// Both end with the site entangled; join merges the upper surface piece with
// the lower one (euler sum minus three), split spends all handles below.
MoveProgram join_program(const FrontDiagram& f, const TangleSite& site);
MoveProgram split_program(const FrontDiagram& f, const TangleSite& site);

// Complete program from the empty front: level fillings plus one fragment
// per junction, split at block boundaries of y, join elsewhere. The executed
// trace has one surface per part of y with euler -y_i, in order.
MoveProgram filling_program(const Composition& x, const Composition& y);

// Homeomorphism type of a filling: sorted (genus, boundary circles) pairs.
struct FillingType {
  std::vector<std::pair<int, int>> comps;
  friend bool operator==(const FillingType&, const FillingType&) = default;
  friend auto operator<=>(const FillingType&, const FillingType&) = default;
};

FillingType classify(const SurfaceTrace& s);
std::string filling_type_label(const FillingType& t);

// Executes every filling_program(x, y) over y <= x and counts distinct types.
long long count_distinct_fillings(const Composition& x);

// For each k in 1..n, a certified program whose trace has k surface pieces.
std::map<int, MoveProgram> fillings_by_component_count(int n);

// The two inequivalent fillings of the degenerate-top link: a builds one
// connected surface (an annulus), b keeps the top disk separate.
MoveProgram lambda_star_construction_a();
MoveProgram lambda_star_construction_b();

} // namespace legcob
