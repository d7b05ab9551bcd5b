#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "legcob/moves.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

using namespace legcob;

namespace {

Event E(char k, int p) {
  if (k == 'l') return Event{EventKind::LeftCusp, p};
  if (k == 'x') return Event{EventKind::Crossing, p};
  return Event{EventKind::RightCusp, p};
}

std::vector<Event> W(const std::vector<std::pair<char, int>>& xs) {
  std::vector<Event> w;
  for (auto& [k, p] : xs) w.push_back(E(k, p));
  return w;
}

FrontDiagram FD(std::vector<Event> evs, std::vector<int> orient = {}) {
  FrontDiagram f;
  f.events = std::move(evs);
  if (orient.empty()) {
    FrontTrace t = trace_components(f.events);
    orient.assign(t.ncomps, 1);
  }
  f.orient = std::move(orient);
  return f;
}

// invariants must match across the move's component correspondence
void check_preserved(const InvariantReport& b, const InvariantReport& a,
                     const MoveResult& r) {
  REQUIRE(a.component_count == b.component_count);
  std::vector<int> m(b.component_count, -1);
  for (int o = 0; o < b.component_count; ++o) {
    REQUIRE(r.news_of_old[o].size() == 1);
    m[o] = r.news_of_old[o][0];
    CHECK(a.tb[m[o]] == b.tb[o]);
    CHECK(a.rotation[m[o]] == b.rotation[o]);
  }
  for (int o1 = 0; o1 < b.component_count; ++o1)
    for (int o2 = o1 + 1; o2 < b.component_count; ++o2)
      CHECK(a.linking[m[o1]][m[o2]] == b.linking[o1][o2]);
  CHECK(a.tb_link == b.tb_link);
}

IsotopyRule inverse_rule(IsotopyRule r) {
  switch (r) {
    case IsotopyRule::Kink1Insert: return IsotopyRule::Kink1Remove;
    case IsotopyRule::Kink1Remove: return IsotopyRule::Kink1Insert;
    case IsotopyRule::Kink2Insert: return IsotopyRule::Kink2Remove;
    case IsotopyRule::Kink2Remove: return IsotopyRule::Kink2Insert;
    case IsotopyRule::SlideAExpand: return IsotopyRule::SlideAReduce;
    case IsotopyRule::SlideAReduce: return IsotopyRule::SlideAExpand;
    case IsotopyRule::SlideBExpand: return IsotopyRule::SlideBReduce;
    case IsotopyRule::SlideBReduce: return IsotopyRule::SlideBExpand;
    case IsotopyRule::SlideCExpand: return IsotopyRule::SlideCReduce;
    case IsotopyRule::SlideCReduce: return IsotopyRule::SlideCExpand;
    case IsotopyRule::SlideDExpand: return IsotopyRule::SlideDReduce;
    case IsotopyRule::SlideDReduce: return IsotopyRule::SlideDExpand;
    case IsotopyRule::Braid: return IsotopyRule::Braid;
    case IsotopyRule::Commute: return IsotopyRule::Commute;
  }
  return IsotopyRule::Commute;
}

// applies the move, checks preservation, applies the inverse, checks return
void round_trip(const FrontDiagram& f, IsotopyRule rule, int col, int pos) {
  const InvariantReport b = invariants(f);
  MoveResult res = apply_move(f, isotopy(rule, col, pos));
  check_preserved(b, invariants(res.front), res);
  MoveResult back = apply_move(res.front, isotopy(inverse_rule(rule), col, pos));
  CHECK(back.front == f);
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind;
  }
  FAIL("expected an error");
  return ErrorKind::Io;
}

std::vector<Event> random_word(std::mt19937& rng, int target_len) {
  std::vector<Event> w;
  int count = 0;
  for (;;) {
    if (count == 0) {
      if (static_cast<int>(w.size()) >= target_len) break;
      w.push_back(E('l', 1 + static_cast<int>(rng() % (count + 1))));
      count += 2;
      continue;
    }
    int kind = static_cast<int>(rng() % 3);
    if (static_cast<int>(w.size()) >= target_len) kind = 2;
    if (kind != 2 && count < 2) kind = 0;
    if (kind == 0) {
      w.push_back(E('l', 1 + static_cast<int>(rng() % (count + 1))));
      count += 2;
    } else if (kind == 1) {
      w.push_back(E('x', 1 + static_cast<int>(rng() % (count - 1))));
    } else {
      w.push_back(E('r', 1 + static_cast<int>(rng() % (count - 1))));
      count -= 2;
    }
  }
  return w;
}

FrontDiagram random_front(std::mt19937& rng, int target_len) {
  std::vector<Event> w = random_word(rng, target_len);
  FrontTrace t = trace_components(w);
  std::vector<int> orient(t.ncomps);
  for (auto& o : orient) o = (rng() % 2) ? 1 : -1;
  return FD(std::move(w), std::move(orient));
}

// clasp chain: a disk, n upper kinks, a second disk, n junction handles
std::vector<Move> clasp_moves(int n, int oa, int ob) {
  std::vector<Move> mv;
  mv.push_back(zero_handle(0, 1, oa));
  for (int i = 0; i < n; ++i)
    mv.push_back(isotopy(IsotopyRule::Kink1Insert, 1 + 3 * i, 1));
  mv.push_back(zero_handle(1 + 3 * n, 1, ob));
  for (int i = 0; i < n; ++i) mv.push_back(one_handle(3 + i));
  return mv;
}

std::optional<FrontDiagram> fold_front(const std::vector<Move>& moves) {
  FrontDiagram cur;
  try {
    for (const Move& mv : moves) cur = apply_move(cur, mv).front;
  } catch (const Error&) {
    return std::nullopt;
  }
  return cur;
}

std::vector<Event> clasp_word(int n) {
  std::vector<Event> w = {E('l', 1), E('l', 1)};
  for (int i = 0; i < n; ++i) w.push_back(E('x', 2));
  w.push_back(E('r', 1));
  w.push_back(E('r', 1));
  return w;
}

} // namespace

TEST_CASE("kink rules round trip on the three crossing clasp") {
  const FrontDiagram f = FD(clasp_word(3));
  round_trip(f, IsotopyRule::Kink1Insert, 2, 2);
  round_trip(f, IsotopyRule::Kink1Insert, 2, 1);
  round_trip(f, IsotopyRule::Kink2Insert, 2, 2);
  round_trip(f, IsotopyRule::Kink2Insert, 3, 3);
  const MoveResult res = apply_move(f, isotopy(IsotopyRule::Kink1Insert, 2, 2));
  CHECK(res.front.events ==
        W({{'l', 1}, {'l', 1}, {'l', 2}, {'x', 3}, {'r', 2},
           {'x', 2}, {'x', 2}, {'x', 2}, {'r', 1}, {'r', 1}}));
  CHECK(res.news_of_old == std::vector<std::vector<int>>{{0}});
  CHECK(res.front.orient == std::vector<int>{1});
}

TEST_CASE("slide rules round trip") {
  const FrontDiagram nested =
      FD(W({{'l', 1}, {'l', 2}, {'x', 2}, {'x', 2}, {'x', 2}, {'r', 2}, {'r', 1}}),
         {1, -1});
  round_trip(nested, IsotopyRule::SlideAExpand, 1, 1);
  round_trip(nested, IsotopyRule::SlideBExpand, 1, 2);
  round_trip(nested, IsotopyRule::SlideDExpand, 5, 1);
  const FrontDiagram clasp = FD(clasp_word(3));
  round_trip(clasp, IsotopyRule::SlideCExpand, 5, 1);
  const MoveResult dip = apply_move(clasp, isotopy(IsotopyRule::SlideCExpand, 5, 1));
  CHECK(dip.front.events ==
        W({{'l', 1}, {'l', 1}, {'x', 2}, {'x', 2}, {'x', 2},
           {'x', 2}, {'x', 1}, {'r', 2}, {'r', 1}}));
  const MoveResult slid = apply_move(nested, isotopy(IsotopyRule::SlideAExpand, 1, 1));
  CHECK(slid.front.events ==
        W({{'l', 1}, {'l', 1}, {'x', 2}, {'x', 1}, {'x', 2},
           {'x', 2}, {'x', 2}, {'r', 2}, {'r', 1}}));
}

TEST_CASE("braid and commute round trip") {
  const FrontDiagram braidable =
      FD(W({{'l', 1}, {'l', 2}, {'x', 1}, {'x', 2}, {'x', 1}, {'r', 2}, {'r', 1}}));
  round_trip(braidable, IsotopyRule::Braid, 2, 1);
  const MoveResult b = apply_move(braidable, isotopy(IsotopyRule::Braid, 2));
  CHECK(b.front.events ==
        W({{'l', 1}, {'l', 2}, {'x', 2}, {'x', 1}, {'x', 2}, {'r', 2}, {'r', 1}}));

  const FrontDiagram hopf = FD(clasp_word(2), {1, -1});
  round_trip(hopf, IsotopyRule::Commute, 0, 1);
  const MoveResult c = apply_move(hopf, isotopy(IsotopyRule::Commute, 0));
  CHECK(c.front.events ==
        W({{'l', 1}, {'l', 3}, {'x', 2}, {'x', 2}, {'r', 1}, {'r', 1}}));
  // the upper lens is written first now, so the component ids swap
  CHECK(c.news_of_old == std::vector<std::vector<int>>{{1}, {0}});
  CHECK(c.front.orient == std::vector<int>{-1, 1});
}

TEST_CASE("isotopy site errors") {
  const FrontDiagram f = FD(clasp_word(3));
  CHECK(kind_of([&] { apply_move(f, isotopy(IsotopyRule::Kink1Remove, 2, 2)); }) ==
        ErrorKind::RuleMismatch);
  CHECK(kind_of([&] { apply_move(f, isotopy(IsotopyRule::Kink1Insert, 0, 3)); }) ==
        ErrorKind::IllegalSite);
  CHECK(kind_of([&] { apply_move(f, isotopy(IsotopyRule::Kink1Insert, 99, 1)); }) ==
        ErrorKind::IllegalSite);
  CHECK(kind_of([&] { apply_move(f, isotopy(IsotopyRule::Braid, 2, 1)); }) ==
        ErrorKind::RuleMismatch);
  CHECK(kind_of([&] { apply_move(f, isotopy(IsotopyRule::Commute, 2, 1)); }) ==
        ErrorKind::RuleMismatch);
  CHECK(kind_of([&] { apply_move(f, isotopy(IsotopyRule::SlideBExpand, 0, 1)); }) ==
        ErrorKind::IllegalSite);
  CHECK(kind_of([&] { apply_move(f, isotopy(IsotopyRule::SlideCExpand, 5, 0)); }) ==
        ErrorKind::IllegalSite);
}

TEST_CASE("zero handle") {
  const FrontDiagram empty;
  MoveResult res = apply_move(empty, zero_handle(0, 1, -1));
  CHECK(res.front.events == W({{'l', 1}, {'r', 1}}));
  CHECK(res.front.orient == std::vector<int>{-1});
  CHECK(res.zero_handle_comp == 0);
  const InvariantReport inv = invariants(res.front);
  CHECK(inv.tb == std::vector<int>{-1});
  CHECK(inv.rotation == std::vector<int>{0});
  CHECK(serialize_front(res.front) == "front v1\nl 1\nr 1\norient 0 -\n");

  MoveResult two = apply_move(res.front, zero_handle(2, 1, 1));
  CHECK(two.front.events == W({{'l', 1}, {'r', 1}, {'l', 1}, {'r', 1}}));
  CHECK(two.front.orient == std::vector<int>{-1, 1});
  CHECK(two.zero_handle_comp == 1);
  CHECK(invariants(two.front).tb_link == -2);

  CHECK(kind_of([&] { apply_move(empty, zero_handle(0, 2, 1)); }) ==
        ErrorKind::IllegalSite);
  CHECK(kind_of([&] { apply_move(empty, zero_handle(1, 1, 1)); }) ==
        ErrorKind::IllegalSite);
  CHECK(kind_of([&] { apply_move(empty, zero_handle(0, 1, 0)); }) ==
        ErrorKind::IllegalSite);
}

TEST_CASE("one handle gate and pinch") {
  const FrontDiagram aligned =
      FD(W({{'l', 1}, {'r', 1}, {'l', 1}, {'r', 1}}), {1, 1});
  const InvariantReport b = invariants(aligned);
  MoveResult res = apply_move(aligned, one_handle(1));
  CHECK(res.front.events == W({{'l', 1}, {'r', 1}}));
  CHECK(res.pinch_in == 0);
  CHECK(res.pinch_out == 1);
  CHECK(res.news_of_old == std::vector<std::vector<int>>{{0}, {0}});
  CHECK(res.olds_of_new == std::vector<std::vector<int>>{{0, 1}});
  CHECK(invariants(res.front).tb_link == b.tb_link + 1);

  const FrontDiagram opposed =
      FD(W({{'l', 1}, {'r', 1}, {'l', 1}, {'r', 1}}), {1, -1});
  CHECK(kind_of([&] { apply_move(opposed, one_handle(1)); }) ==
        ErrorKind::OrientationGate);

  CHECK(kind_of([&] { apply_move(aligned, one_handle(0)); }) ==
        ErrorKind::IllegalSite);
  CHECK(kind_of([&] { apply_move(aligned, one_handle(3)); }) ==
        ErrorKind::IllegalSite);
}

TEST_CASE("clasp chain program builds the Hopf link with an annulus filling") {
  int certified = 0;
  for (int oa : {1, -1}) {
    int ok_for_oa = 0;
    for (int ob : {1, -1}) {
      const std::vector<Move> mv = clasp_moves(2, oa, ob);
      const auto folded = fold_front(mv);
      if (!folded) continue;
      ++ok_for_oa;
      ++certified;
      CHECK(folded->events == clasp_word(2));
      MoveProgram p;
      p.moves = mv;
      p.target = *folded;
      const RunReport rep = run_program(p);
      const InvariantReport inv = invariants(rep.final_front);
      CHECK(inv.component_count == 2);
      CHECK(inv.tb == std::vector<int>{-1, -1});
      CHECK(inv.linking[0][1] == 1);
      CHECK(inv.tb_link == 0);
      REQUIRE(rep.surfaces_valid);
      REQUIRE(rep.surfaces.comps.size() == 1);
      CHECK(rep.surfaces.comps[0].euler == 0);
      CHECK(rep.surfaces.comps[0].boundary == std::vector<int>{0, 1});

      // the aligned declaration for the second disk must hit the gate
      MoveProgram bad = p;
      bad.moves[3].orient = -ob;
      bool gated = false;
      try {
        run_program(bad);
      } catch (const Error& e) {
        gated = true;
        CHECK(e.kind == ErrorKind::OrientationGate);
      }
      CHECK(gated);
    }
    CHECK(ok_for_oa == 1);
  }
  CHECK(certified == 2);
}

TEST_CASE("clasp chain program surface snapshots") {
  for (int ob : {1, -1}) {
    const std::vector<Move> mv = clasp_moves(2, 1, ob);
    const auto folded = fold_front(mv);
    if (!folded) continue;
    MoveProgram p;
    p.moves = mv;
    p.target = *folded;
    const RunReport rep = run_program(p);
    REQUIRE(rep.steps.size() == 6);
    CHECK(rep.steps[0].surfaces.comps.size() == 1); // first disk
    CHECK(rep.steps[3].surfaces.comps.size() == 2); // both disks
    REQUIRE(rep.steps[4].surfaces.comps.size() == 2); // a split keeps its piece
    CHECK(rep.steps[4].surfaces.comps[0].euler == 0);
    CHECK(rep.steps[4].surfaces.comps[0].boundary.size() == 2);
    CHECK(rep.steps[5].surfaces.comps.size() == 1); // merged with the second disk
    // mid program component count exceeds the final count
    CHECK(invariants(rep.steps[4].front).component_count == 3);
  }
}

TEST_CASE("clasp chain program builds the three crossing clasp") {
  int certified = 0;
  for (int ob : {1, -1}) {
    const std::vector<Move> mv = clasp_moves(3, 1, ob);
    const auto folded = fold_front(mv);
    if (!folded) continue;
    ++certified;
    CHECK(folded->events == clasp_word(3));
    MoveProgram p;
    p.moves = mv;
    p.target = *folded;
    const RunReport rep = run_program(p);
    const InvariantReport inv = invariants(rep.final_front);
    CHECK(inv.component_count == 1);
    CHECK(inv.tb == std::vector<int>{1});
    REQUIRE(rep.surfaces.comps.size() == 1);
    CHECK(rep.surfaces.comps[0].euler == -1);
    CHECK(rep.surfaces.comps[0].boundary == std::vector<int>{0});
  }
  CHECK(certified == 1);
}

TEST_CASE("target is compared in normal form") {
  for (int ob : {1, -1}) {
    const std::vector<Move> mv = clasp_moves(2, 1, ob);
    const auto folded = fold_front(mv);
    if (!folded) continue;
    MoveProgram p;
    p.moves = mv;
    p.target = apply_move(*folded, isotopy(IsotopyRule::Commute, 0)).front;
    CHECK(p.target.events != folded->events);
    const RunReport rep = run_program(p);
    CHECK(rep.final_front.events == clasp_word(2));

    MoveProgram wrong = p;
    wrong.target = FD(W({{'l', 1}, {'r', 1}}));
    CHECK(kind_of([&] { run_program(wrong); }) == ErrorKind::TargetMismatch);
  }
}

TEST_CASE("run_program reports the failing move") {
  MoveProgram p;
  p.moves = {zero_handle(0, 1, 1), one_handle(0)};
  try {
    run_program(p);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::IllegalSite);
    CHECK(std::string(e.what()).find("move 1") == 0);
  }
}

TEST_CASE("empty program with empty target certifies") {
  MoveProgram p;
  const RunReport rep = run_program(p);
  CHECK(rep.final_front.events.empty());
  CHECK(rep.surfaces_valid);
  CHECK(rep.surfaces.comps.empty());
}

TEST_CASE("nonempty start skips surface tracking") {
  const FrontDiagram f = FD(clasp_word(3));
  MoveProgram p;
  p.start_empty = false;
  p.start = f;
  p.moves = {isotopy(IsotopyRule::Commute, 0, 1)};
  p.target = apply_move(f, isotopy(IsotopyRule::Commute, 0)).front;
  const RunReport rep = run_program(p);
  CHECK(!rep.surfaces_valid);
  CHECK(rep.surfaces.comps.empty());
  CHECK(invariants(rep.final_front).tb == std::vector<int>{1});
}

TEST_CASE("euler_check validates surface pieces against boundary tb") {
  const FrontDiagram clasp3 = FD(clasp_word(3));
  SurfaceTrace good;
  good.comps = {SurfaceComponent{-1, {0}}};
  euler_check(good, clasp3);

  SurfaceTrace wrong_euler;
  wrong_euler.comps = {SurfaceComponent{0, {0}}};
  CHECK(kind_of([&] { euler_check(wrong_euler, clasp3); }) == ErrorKind::Certification);

  SurfaceTrace empty_boundary;
  empty_boundary.comps = {SurfaceComponent{-1, {0}}, SurfaceComponent{1, {}}};
  CHECK(kind_of([&] { euler_check(empty_boundary, clasp3); }) ==
        ErrorKind::Certification);

  SurfaceTrace missing;
  CHECK(kind_of([&] { euler_check(missing, clasp3); }) == ErrorKind::Certification);

  // the Hopf annulus needs the linking term
  const FrontDiagram hopf = FD(clasp_word(2), {1, -1});
  SurfaceTrace annulus;
  annulus.comps = {SurfaceComponent{0, {0, 1}}};
  euler_check(annulus, hopf);
}

TEST_CASE("program json round trip") {
  MoveProgram p;
  p.moves = clasp_moves(2, 1, -1);
  p.target = FD(clasp_word(2), {1, -1});
  p.annotations = {Annotation{"chain", 0, 3}, Annotation{"junctions", 4, 5}};
  const std::string text = serialize_program_json(p);
  CHECK(text == serialize_program_json(p));
  const MoveProgram q = parse_program_json(text);
  CHECK(q == p);

  MoveProgram s = p;
  s.start_empty = false;
  s.start = FD(clasp_word(3));
  const MoveProgram t = parse_program_json(serialize_program_json(s));
  CHECK(t == s);
}

TEST_CASE("program json errors") {
  CHECK(kind_of([] { parse_program_json("not json"); }) == ErrorKind::Syntax);
  CHECK(kind_of([] { parse_program_json("[]"); }) == ErrorKind::Syntax);
  CHECK(kind_of([] {
          parse_program_json(R"({"version":2,"start":"empty","target":"empty","moves":[]})");
        }) == ErrorKind::Syntax);
  CHECK(kind_of([] {
          parse_program_json(
              R"({"version":1,"start":"empty","target":"empty","moves":[{"kind":"warp","col":0}]})");
        }) == ErrorKind::Syntax);
  CHECK(kind_of([] {
          parse_program_json(
              R"({"version":1,"start":"empty","target":"empty","moves":[{"kind":"isotopy","rule":"untwist","col":0}]})");
        }) == ErrorKind::Syntax);
  CHECK(kind_of([] {
          parse_program_json(
              R"({"version":1,"start":"empty","target":"empty","moves":[{"kind":"one_handle"}]})");
        }) == ErrorKind::Syntax);
  CHECK(kind_of([] {
          parse_program_json(
              R"({"version":1,"start":"empty","target":"empty","moves":[],"annotations":[{"label":"a","first":0,"last":0}]})");
        }) == ErrorKind::Syntax);
  CHECK(kind_of([] {
          parse_program_json(
              R"({"version":1,"start":"front v1\nq 1\n","target":"empty","moves":[]})");
        }) == ErrorKind::Syntax);
}

TEST_CASE("random isotopies preserve invariants and invert") {
  std::mt19937 rng(20260816u);
  const IsotopyRule all_rules[] = {
      IsotopyRule::Kink1Insert, IsotopyRule::Kink1Remove,
      IsotopyRule::Kink2Insert, IsotopyRule::Kink2Remove,
      IsotopyRule::SlideAExpand, IsotopyRule::SlideAReduce,
      IsotopyRule::SlideBExpand, IsotopyRule::SlideBReduce,
      IsotopyRule::SlideCExpand, IsotopyRule::SlideCReduce,
      IsotopyRule::SlideDExpand, IsotopyRule::SlideDReduce,
      IsotopyRule::Braid, IsotopyRule::Commute,
  };
  int successes = 0;
  FrontDiagram f = random_front(rng, 14);
  for (int t = 0; t < 20000 && successes < 300; ++t) {
    if (t % 40 == 39) f = random_front(rng, 8 + static_cast<int>(rng() % 12));
    const IsotopyRule rule = all_rules[rng() % 14];
    const int col = static_cast<int>(rng() % (f.events.size() + 1));
    const int pos = 1 + static_cast<int>(rng() % 5);
    const InvariantReport b = invariants(f);
    MoveResult res;
    try {
      res = apply_move(f, isotopy(rule, col, pos));
    } catch (const Error& e) {
      CHECK((e.kind == ErrorKind::RuleMismatch || e.kind == ErrorKind::IllegalSite));
      continue;
    }
    ++successes;
    check_preserved(b, invariants(res.front), res);
    const MoveResult back =
        apply_move(res.front, isotopy(inverse_rule(rule), col, pos));
    CHECK(back.front == f);
  }
  CHECK(successes >= 300);
}

TEST_CASE("random handles shift link tb by one") {
  std::mt19937 rng(977u);
  int zeros = 0, ones = 0, gated = 0;
  for (int t = 0; t < 60; ++t) {
    FrontDiagram f = random_front(rng, 10 + static_cast<int>(rng() % 8));
    const InvariantReport b = invariants(f);
    const int col = static_cast<int>(rng() % (f.events.size() + 1));
    MoveResult res;
    try {
      res = apply_move(f, zero_handle(col, 1 + static_cast<int>(rng() % 3),
                                      (rng() % 2) ? 1 : -1));
    } catch (const Error& e) {
      CHECK(e.kind == ErrorKind::IllegalSite);
      continue;
    }
    ++zeros;
    CHECK(invariants(res.front).tb_link == b.tb_link - 1);

    // scan the grown word for handle sites
    const auto& w = res.front.events;
    const InvariantReport b2 = invariants(res.front);
    for (size_t c = 0; c + 1 < w.size(); ++c) {
      if (w[c].kind != EventKind::RightCusp || w[c + 1].kind != EventKind::LeftCusp ||
          w[c].pos != w[c + 1].pos)
        continue;
      try {
        const MoveResult h = apply_move(res.front, one_handle(static_cast<int>(c)));
        ++ones;
        CHECK(invariants(h.front).tb_link == b2.tb_link + 1);
        const int delta = invariants(h.front).component_count - b2.component_count;
        CHECK((delta == 1 || delta == -1));
        CHECK((h.pinch_in == h.pinch_out) == (delta == 1));
      } catch (const Error& e) {
        ++gated;
        CHECK(e.kind == ErrorKind::OrientationGate);
      }
    }
  }
  CHECK(zeros >= 40);
  CHECK(ones >= 20);
  CHECK(gated >= 5);
}
