#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace legcob {

enum class ErrorKind {
  Syntax,
  StrandBalance,
  PositionRange,
  UnknownComponent,
  DuplicateOrientation,
  MissingOrientation,
  IllegalSite,
  OrientationGate,
  RuleMismatch,
  Certification,
  TargetMismatch,
  InvalidComposition,
  NotCoarsening,
  InvalidSummary,
  Io,
};

const char* error_kind_name(ErrorKind k);

struct Error : std::runtime_error {
  ErrorKind kind;
  int line = 0;         // 1-based source line when nonzero
  int col = 0;          // 1-based source column when nonzero
  int event_index = -1; // offending event when nonnegative
  Error(ErrorKind k, const std::string& msg, int line_ = 0, int col_ = 0,
        int event_index_ = -1);
};

// A plat front is a word of events read left to right. Row 1 is the top
// strand; an event's `pos` names the upper row it acts on.
//   LeftCusp p : inserts a strand pair at rows p, p+1 (rows >= p shift down)
//   Crossing p : swaps rows p, p+1
//   RightCusp p: joins rows p, p+1 (rows >= p+2 shift up)
enum class EventKind : std::uint8_t { LeftCusp = 0, Crossing = 1, RightCusp = 2 };

struct Event {
  EventKind kind{};
  int pos = 1;
  friend bool operator==(const Event&, const Event&) = default;
};

// Components are numbered by the word index of their first left cusp.
struct FrontDiagram {
  std::vector<Event> events;
  std::vector<int> orient; // +1 or -1 per component id
  friend bool operator==(const FrontDiagram&, const FrontDiagram&) = default;
};

// Validates event legality and closedness; returns strand counts per slice
// (slice s sits before event s; size events.size()+1, first and last 0).
std::vector<int> slice_counts(const std::vector<Event>& events);

FrontDiagram parse_front(const std::string& text);
std::string serialize_front(const FrontDiagram& f);

// A segment is one strand within one slice.
struct SegRef {
  int slice = 0;
  int row = 0; // 1-based
  friend bool operator==(const SegRef&, const SegRef&) = default;
};

struct FrontTrace {
  int ncomps = 0;
  std::vector<std::vector<int>> comp;  // comp[slice][row-1] = component id
  std::vector<std::vector<int>> sense; // +1 if the walk passed the segment eastward
  std::vector<int> first_cusp_event;   // per component
  // filled by the direction passes:
  std::vector<std::vector<int>> dir; // +1 east, -1 west
  std::vector<int> comp_sign;        // dir of the upper branch at the first cusp
};

FrontTrace trace_components(const std::vector<Event>& events);

// Orients every segment from per-component signs.
void assign_directions(const std::vector<Event>& events, FrontTrace& t,
                       const std::vector<int>& orient);

// Orients every segment from explicit seeded directions; every component
// needs at least one seed and conflicting seeds are a certification error.
void assign_directions_from_seeds(
    const std::vector<Event>& events, FrontTrace& t,
    const std::vector<std::pair<SegRef, int>>& seeds);

struct InvariantReport {
  int component_count = 0;
  std::vector<int> tb;       // per component: self writhe minus own right cusps
  std::vector<int> rotation; // per component: (down cusps - up cusps) / 2
  int writhe = 0;
  int tb_link = 0; // writhe minus all right cusps
  std::vector<std::vector<int>> linking; // symmetric, zero diagonal
};

InvariantReport invariants(const FrontDiagram& f);

// Adjacent commutation: e1 is the earlier event, e2 the later one expressed
// after e1. Independent pairs may swap; swap_adjacent returns (e2', e1').
bool swap_independent(const Event& e1, const Event& e2);
std::pair<Event, Event> swap_adjacent(const Event& e1, const Event& e2);

struct NormalizedWord {
  std::vector<Event> events;
  std::vector<int> source; // source[i] = index of events[i] in the input word
};

// Greedy least word of the commutation class; ties between equal head
// expressions are broken by the least normalized remainder.
NormalizedWord normalize_word(const std::vector<Event>& events);

// Normal form with orientations carried along the event identities.
FrontDiagram normalize(const FrontDiagram& f);

std::string render_ascii(const FrontDiagram& f);

} // namespace legcob
