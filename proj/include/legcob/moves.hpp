#pragma once

#include "legcob/front.hpp"

#include <optional>
#include <string>
#include <vector>

namespace legcob {

enum class MoveKind { ZeroHandle, OneHandle, Isotopy };

enum class IsotopyRule {
  Kink1Insert,
  Kink1Remove,
  Kink2Insert,
  Kink2Remove,
  SlideAExpand,
  SlideAReduce,
  SlideBExpand,
  SlideBReduce,
  SlideCExpand,
  SlideCReduce,
  SlideDExpand,
  SlideDReduce,
  Braid,
  Commute,
};

const char* isotopy_rule_name(IsotopyRule r);
std::optional<IsotopyRule> isotopy_rule_from_name(const std::string& name);

// col indexes the event word: insertion index for inserts and zero handles,
// first pattern event otherwise. pos is the strand row parameter p of the
// rule pattern; row/orient belong to zero handles.
struct Move {
  MoveKind kind = MoveKind::Isotopy;
  IsotopyRule rule = IsotopyRule::Commute;
  int col = 0;
  int row = 1;
  int orient = 1;
  int pos = 1;
  friend bool operator==(const Move&, const Move&) = default;
};

Move zero_handle(int col, int row, int orient);
Move one_handle(int col);
Move isotopy(IsotopyRule rule, int col, int pos = 1);

struct MoveResult {
  FrontDiagram front;
  // Component correspondence across the move; isotopies are bijections,
  // a one-handle merge maps two old ids to one, a split one id to two.
  std::vector<std::vector<int>> news_of_old;
  std::vector<std::vector<int>> olds_of_new;
  int zero_handle_comp = -1;          // id of the freshly created component
  int pinch_in = -1, pinch_out = -1;  // old component ids spliced by a one-handle
};

MoveResult apply_move(const FrontDiagram& f, const Move& mv);

// One exact Lagrangian piece of the filling built so far.
struct SurfaceComponent {
  int euler = 0;
  std::vector<int> boundary; // link component ids, ascending
  friend bool operator==(const SurfaceComponent&, const SurfaceComponent&) = default;
};

struct SurfaceTrace {
  std::vector<SurfaceComponent> comps;
  int comp_of_boundary(int link_comp) const; // -1 when absent
  friend bool operator==(const SurfaceTrace&, const SurfaceTrace&) = default;
};

// Checks euler(S) == -(writhe(S) - right cusps(S)) for every surface piece,
// the boundary sets partition the link components, and each piece has
// nonempty boundary.
void euler_check(const SurfaceTrace& s, const FrontDiagram& f);

// Folds one applied move into the surface trace: a zero handle opens a disk,
// a one handle merges two pieces or adds genus to one, and every boundary id
// is remapped through the move's component correspondence.
void update_surfaces(SurfaceTrace& st, const Move& mv, const MoveResult& res);

struct Annotation {
  std::string label;
  int first = 0, last = 0; // inclusive move index range
  friend bool operator==(const Annotation&, const Annotation&) = default;
};

struct MoveProgram {
  bool start_empty = true;
  FrontDiagram start;  // used when !start_empty
  FrontDiagram target;
  std::vector<Move> moves;
  std::vector<Annotation> annotations;
  friend bool operator==(const MoveProgram&, const MoveProgram&) = default;
};

MoveProgram parse_program_json(const std::string& text);
std::string serialize_program_json(const MoveProgram& p);

struct StepRecord {
  FrontDiagram front;     // after the move
  SurfaceTrace surfaces;  // after the move (empty-start programs only)
  MoveResult result;
};

struct RunReport {
  FrontDiagram final_front;
  bool surfaces_valid = false;
  SurfaceTrace surfaces;
  std::vector<StepRecord> steps;
};

// Applies each move with certification: isotopies must preserve component
// count, matched tb, rotation and linking; a zero handle adds a tb -1 disk
// boundary; a one handle raises link tb by one. Empty-start programs track
// surfaces and must pass euler_check; the final front must normalize to the
// declared target, orientations included.
RunReport run_program(const MoveProgram& p);

} // namespace legcob
