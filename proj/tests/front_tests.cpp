#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "legcob/front.hpp"

#include <algorithm>
#include <random>

using namespace legcob;

namespace {

std::vector<Event> word(std::initializer_list<std::pair<char, int>> evs) {
  std::vector<Event> out;
  for (auto [k, p] : evs)
    out.push_back({k == 'l'   ? EventKind::LeftCusp
                   : k == 'x' ? EventKind::Crossing
                              : EventKind::RightCusp,
                   p});
  return out;
}

FrontDiagram front(std::initializer_list<std::pair<char, int>> evs,
                   std::vector<int> orient = {}) {
  FrontDiagram f;
  f.events = word(evs);
  if (orient.empty()) {
    FrontTrace t = trace_components(f.events);
    f.orient.assign(t.ncomps, 1);
  } else {
    f.orient = std::move(orient);
  }
  return f;
}

// Pseudo-random legal closed words for property tests.
std::vector<Event> random_word(std::mt19937& rng, int target_len) {
  std::vector<Event> w;
  int n = 0;
  while ((int)w.size() < target_len || n > 0) {
    int kind;
    if (n == 0)
      kind = 0;
    else if ((int)w.size() >= target_len)
      kind = 2;
    else
      kind = (int)(rng() % 3);
    if (kind == 0) {
      int p = 1 + (int)(rng() % (n + 1));
      w.push_back({EventKind::LeftCusp, p});
      n += 2;
    } else if (kind == 1 && n >= 2) {
      int p = 1 + (int)(rng() % (n - 1));
      w.push_back({EventKind::Crossing, p});
    } else if (n >= 2) {
      int p = 1 + (int)(rng() % (n - 1));
      w.push_back({EventKind::RightCusp, p});
      n -= 2;
    }
  }
  return w;
}

} // namespace

TEST_CASE("slice counts and legality") {
  CHECK(slice_counts(word({{'l', 1}, {'r', 1}})) == std::vector<int>{0, 2, 0});
  CHECK(slice_counts({}) == std::vector<int>{0});

  CHECK_THROWS_AS(slice_counts(word({{'l', 1}, {'x', 1}})), Error);
  CHECK_THROWS_AS(slice_counts(word({{'l', 1}, {'r', 2}})), Error);
  CHECK_THROWS_AS(slice_counts(word({{'x', 1}})), Error);
  CHECK_THROWS_AS(slice_counts(word({{'l', 3}})), Error);

  try {
    slice_counts(word({{'l', 1}, {'x', 1}}));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::StrandBalance);
  }
  try {
    slice_counts(word({{'l', 1}, {'r', 2}}));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::PositionRange);
    CHECK(e.event_index == 1);
  }
}

TEST_CASE("parse and serialize round trip") {
  std::string text = "front v1\n"
                     "l 1\n"
                     "l 1\n"
                     "x 2\n"
                     "x 2\n"
                     "x 2\n"
                     "r 1\n"
                     "r 1\n"
                     "orient 0 +\n";
  FrontDiagram f = parse_front(text);
  CHECK(f.events.size() == 7);
  CHECK(f.orient == std::vector<int>{1});
  CHECK(serialize_front(f) == text);
  CHECK(parse_front(serialize_front(f)) == f);
}

TEST_CASE("parse defaults, comments, blank lines") {
  FrontDiagram f = parse_front("# a lens\nfront v1\n\nl 1 # open\n\nr 1\n");
  CHECK(f.events == word({{'l', 1}, {'r', 1}}));
  CHECK(f.orient == std::vector<int>{1});

  FrontDiagram empty = parse_front("front v1\n");
  CHECK(empty.events.empty());
  CHECK(empty.orient.empty());
  CHECK(serialize_front(empty) == "front v1\n");
}

TEST_CASE("parse errors carry position") {
  auto expect = [](const std::string& text, ErrorKind kind, int line) {
    try {
      parse_front(text);
      FAIL("expected error for: " << text);
    } catch (const Error& e) {
      CHECK(e.kind == kind);
      CHECK(e.line == line);
    }
  };
  expect("front v2\nl 1\nr 1\n", ErrorKind::Syntax, 1);
  expect("l 1\n", ErrorKind::Syntax, 1);
  expect("front v1\nq 1\n", ErrorKind::Syntax, 2);
  expect("front v1\nl one\n", ErrorKind::Syntax, 2);
  expect("front v1\nl 1\nr 2\n", ErrorKind::PositionRange, 3);
  expect("front v1\nl 1\norient 0 +\nr 1\n", ErrorKind::Syntax, 4);
  expect("front v1\nl 1\nr 1\norient 1 +\n", ErrorKind::UnknownComponent, 4);
  expect("front v1\nl 1\nr 1\norient 0 +\norient 0 -\n",
         ErrorKind::DuplicateOrientation, 5);
  expect("front v1\nl 1\nr 1\norient 0 *\n", ErrorKind::Syntax, 4);

  try {
    parse_front("front v1\nl 1\nl 1\nr 1\nr 1\norient 0 +\n");
    FAIL("expected missing orientation");
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::MissingOrientation);
  }
  try {
    parse_front("front v1\nl 1\nx 1\n");
    FAIL("expected balance error");
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::StrandBalance);
  }
}

TEST_CASE("unknot invariants") {
  InvariantReport r = invariants(front({{'l', 1}, {'r', 1}}));
  CHECK(r.component_count == 1);
  CHECK(r.tb == std::vector<int>{-1});
  CHECK(r.rotation == std::vector<int>{0});
  CHECK(r.writhe == 0);
  CHECK(r.tb_link == -1);
}

TEST_CASE("trefoil invariants") {
  InvariantReport r = invariants(
      front({{'l', 1}, {'l', 1}, {'x', 2}, {'x', 2}, {'x', 2}, {'r', 1}, {'r', 1}}));
  CHECK(r.component_count == 1);
  CHECK(r.writhe == 3);
  CHECK(r.tb == std::vector<int>{1});
  CHECK(r.rotation == std::vector<int>{0});
  CHECK(r.tb_link == 1);
}

TEST_CASE("hopf invariants depend on orientation") {
  auto hopf = [](std::vector<int> orient) {
    return front({{'l', 1}, {'l', 1}, {'x', 2}, {'x', 2}, {'r', 1}, {'r', 1}},
                 std::move(orient));
  };
  InvariantReport anti = invariants(hopf({1, -1}));
  CHECK(anti.component_count == 2);
  CHECK(anti.tb == std::vector<int>{-1, -1});
  CHECK(anti.linking[0][1] == 1);
  CHECK(anti.linking[1][0] == 1);
  CHECK(anti.tb_link == 0);

  InvariantReport aligned = invariants(hopf({1, 1}));
  CHECK(aligned.tb == std::vector<int>{-1, -1});
  CHECK(aligned.linking[0][1] == -1);
  CHECK(aligned.tb_link == -4);
}

TEST_CASE("nested two component front") {
  InvariantReport r = invariants(front(
      {{'l', 1}, {'l', 2}, {'x', 2}, {'x', 2}, {'x', 2}, {'r', 2}, {'r', 1}}));
  CHECK(r.component_count == 2);
  CHECK(r.writhe == -3);
  CHECK(r.tb_link == -5);
  std::vector<int> tb = r.tb;
  std::sort(tb.begin(), tb.end());
  CHECK(tb == std::vector<int>{-4, -1});
  CHECK(r.linking[0][1] == 0);
}

TEST_CASE("swap arithmetic") {
  Event l1{EventKind::LeftCusp, 1}, l3{EventKind::LeftCusp, 3};
  Event r1{EventKind::RightCusp, 1}, r3{EventKind::RightCusp, 3};
  Event r5{EventKind::RightCusp, 5};

  CHECK(swap_independent(l1, l3));
  auto [a, b] = swap_adjacent(l1, l3);
  CHECK(a == Event{EventKind::LeftCusp, 1});
  CHECK(b == Event{EventKind::LeftCusp, 1});

  // A pinch pair at one position does not commute.
  CHECK_FALSE(swap_independent(r1, Event{EventKind::LeftCusp, 1}));
  // Nor may a swap create one.
  CHECK_FALSE(swap_independent(l3, r1));
  CHECK_FALSE(swap_independent(l1, r3));

  CHECK(swap_independent(r1, l3));
  auto [c, d] = swap_adjacent(r1, l3);
  CHECK(c == Event{EventKind::LeftCusp, 5});
  CHECK(d == Event{EventKind::RightCusp, 1});

  CHECK(swap_independent(r5, r3));
  auto [e, f] = swap_adjacent(r5, r3);
  CHECK(e == Event{EventKind::RightCusp, 3});
  CHECK(f == Event{EventKind::RightCusp, 3});

  CHECK_FALSE(swap_independent(Event{EventKind::Crossing, 2},
                               Event{EventKind::Crossing, 3}));
  CHECK(swap_independent(Event{EventKind::Crossing, 2},
                         Event{EventKind::Crossing, 4}));
}

TEST_CASE("normal form of stacked lenses") {
  NormalizedWord nw = normalize_word(word({{'l', 1}, {'l', 3}, {'r', 1}, {'r', 1}}));
  CHECK(nw.events == word({{'l', 1}, {'l', 1}, {'r', 1}, {'r', 1}}));
  CHECK(nw.source == std::vector<int>{1, 0, 2, 3});
}

TEST_CASE("normal form transports orientations") {
  FrontDiagram f = front({{'l', 1}, {'l', 3}, {'r', 1}, {'r', 1}}, {1, -1});
  FrontDiagram g = normalize(f);
  CHECK(g.events == word({{'l', 1}, {'l', 1}, {'r', 1}, {'r', 1}}));
  CHECK(g.orient == std::vector<int>{-1, 1});

  InvariantReport a = invariants(f), b = invariants(g);
  std::sort(a.tb.begin(), a.tb.end());
  std::sort(b.tb.begin(), b.tb.end());
  CHECK(a.tb == b.tb);
  CHECK(a.tb_link == b.tb_link);
}

TEST_CASE("normal form is idempotent and commutation invariant") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Event> w = random_word(rng, 4 + (int)(rng() % 9));
    NormalizedWord n0 = normalize_word(w);
    CHECK(normalize_word(n0.events).events == n0.events);

    std::vector<Event> shuffled = w;
    for (int s = 0; s < 60; ++s) {
      if (shuffled.size() < 2) break;
      int i = (int)(rng() % (shuffled.size() - 1));
      if (swap_independent(shuffled[i], shuffled[i + 1])) {
        auto [a, b] = swap_adjacent(shuffled[i], shuffled[i + 1]);
        shuffled[i] = a;
        shuffled[i + 1] = b;
      }
    }
    slice_counts(shuffled); // swaps must keep the word legal
    CHECK(normalize_word(shuffled).events == n0.events);
  }
}

TEST_CASE("normal form preserves invariants") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    FrontDiagram f;
    f.events = random_word(rng, 4 + (int)(rng() % 9));
    FrontTrace t = trace_components(f.events);
    f.orient.resize(t.ncomps);
    for (int c = 0; c < t.ncomps; ++c) f.orient[c] = rng() % 2 ? 1 : -1;

    FrontDiagram g = normalize(f);
    InvariantReport a = invariants(f), b = invariants(g);
    CHECK(a.component_count == b.component_count);
    CHECK(a.writhe == b.writhe);
    CHECK(a.tb_link == b.tb_link);
    std::vector<std::pair<int, int>> pa, pb;
    for (int c = 0; c < a.component_count; ++c) {
      pa.push_back({a.tb[c], a.rotation[c]});
      pb.push_back({b.tb[c], b.rotation[c]});
    }
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    CHECK(pa == pb);
  }
}

TEST_CASE("serialize round trips random fronts") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    FrontDiagram f;
    f.events = random_word(rng, 3 + (int)(rng() % 8));
    FrontTrace t = trace_components(f.events);
    f.orient.resize(t.ncomps);
    for (int c = 0; c < t.ncomps; ++c) f.orient[c] = rng() % 2 ? 1 : -1;
    CHECK(parse_front(serialize_front(f)) == f);
  }
}

TEST_CASE("ascii render") {
  CHECK(render_ascii(front({})) == "");
  CHECK(render_ascii(front({{'l', 1}, {'r', 1}})) == " /----\\\n"
                                                     "<      >\n"
                                                     " \\----/\n");
  std::string tref = render_ascii(front(
      {{'l', 1}, {'l', 1}, {'x', 2}, {'x', 2}, {'x', 2}, {'r', 1}, {'r', 1}}));
  CHECK(tref == " /-- /----------------\\ --\\\n"
                "<   <                  >   >\n"
                " \\-- \\---\\/--\\/--\\/---/ --/\n"
                "         X   X   X\n"
                "    -----/\\--/\\--/\\-----\n"
                "\n"
                "    --------------------\n");
}
