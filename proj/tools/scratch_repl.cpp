// Temporary move REPL: builds the canonicalized chain for X=(2,x), then
// applies moves from stdin, printing the word, link and surfaces after each.
// Move lines: k1 COL POS | k2 COL POS | 1h COL | cm COL | sc COL POS |
// sd COL POS | br COL | k1r COL POS | k2r COL POS
#include "legcob/family.hpp"

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace legcob;

static std::string wstr(const std::vector<Event>& w) {
  std::string s;
  int i = 0;
  for (const Event& e : w) {
    char k = e.kind == EventKind::LeftCusp ? 'l' : e.kind == EventKind::Crossing ? 'x' : 'r';
    s += k + std::to_string(e.pos);
    s += "@" + std::to_string(i++) + " ";
  }
  return s;
}

struct Fold {
  FrontDiagram f;
  SurfaceTrace s;
  std::vector<Move> moves;
  void apply(const Move& mv) {
    MoveResult res = apply_move(f, mv);
    update_surfaces(s, mv, res);
    f = std::move(res.front);
    moves.push_back(mv);
  }
  int cap_col() const { return (int)f.events.size() - 1; }
};

static void show(const Fold& fd) {
  std::printf("word: %s\n", wstr(fd.f.events).c_str());
  InvariantReport inv = invariants(fd.f);
  FrontTrace t = trace_components(fd.f.events);
  std::printf("comps=%d tb_link=%d |", inv.component_count, inv.tb_link);
  for (int c = 0; c < inv.component_count; ++c)
    std::printf(" c%d(first=%d tb=%d rot=%d o=%+d)", c, t.first_cusp_event[c],
                inv.tb[c], inv.rotation[c], fd.f.orient[c]);
  std::printf(" |");
  for (int a = 0; a < inv.component_count; ++a)
    for (int b = a + 1; b < inv.component_count; ++b)
      if (inv.linking[a][b] != 0) std::printf(" lk(%d,%d)=%d", a, b, inv.linking[a][b]);
  std::printf("\nsurfaces:");
  for (size_t p = 0; p < fd.s.comps.size(); ++p)
    std::printf(" piece%zu(chi=%d b=%zu)", p, fd.s.comps[p].euler,
                fd.s.comps[p].boundary.size());
  std::printf("\n");
}

int main(int argc, char** argv) {
  int x = argc > 1 ? std::atoi(argv[1]) : 2;
  int o = argc > 2 ? std::atoi(argv[2]) : 1;
  Fold fd;
  fd.apply(zero_handle(0, 1, 1));
  for (int t = 0; t < 4; ++t) fd.apply(isotopy(IsotopyRule::Kink1Insert, 1 + 3 * t, 1));
  for (int t = 0; t + 1 < 4; ++t) fd.apply(one_handle(3 + t));
  {
    const int c = fd.cap_col();
    fd.apply(zero_handle(c, 3, o));
    const int k = x - 1;
    if (k == 0) {
      fd.apply(zero_handle(c + 1, 5, o));
    } else {
      for (int t = 0; t < k; ++t) fd.apply(isotopy(IsotopyRule::Kink2Insert, c + 1 + 3 * t, 4));
      for (int t = 0; t + 1 < k; ++t) fd.apply(one_handle(c + 3 + t));
    }
    const int q = (int)fd.f.events.size() - 3;
    fd.apply(isotopy(IsotopyRule::Commute, q + 1));
    fd.apply(isotopy(IsotopyRule::Commute, q));
    fd.apply(isotopy(IsotopyRule::Commute, q + 1));
  }
  std::printf("=== start (x=%d, chain o=%+d) ===\n", x, o);
  show(fd);
  FrontDiagram canon = lambda_word({2, x}, {TangleState::Plus});
  std::printf("target: %s\n", wstr(canon.events).c_str());

  std::string line;
  while (std::getline(std::cin, line)) {
    std::istringstream is(line);
    std::string op;
    int col = 0, pos = 1;
    if (!(is >> op)) continue;
    if (op == "q") break;
    is >> col >> pos;
    try {
      if (op == "k1") fd.apply(isotopy(IsotopyRule::Kink1Insert, col, pos));
      else if (op == "k2") fd.apply(isotopy(IsotopyRule::Kink2Insert, col, pos));
      else if (op == "k1r") fd.apply(isotopy(IsotopyRule::Kink1Remove, col, pos));
      else if (op == "k2r") fd.apply(isotopy(IsotopyRule::Kink2Remove, col, pos));
      else if (op == "1h") fd.apply(one_handle(col));
      else if (op == "cm") fd.apply(isotopy(IsotopyRule::Commute, col));
      else if (op == "sc") fd.apply(isotopy(IsotopyRule::SlideCExpand, col, pos));
      else if (op == "sd") fd.apply(isotopy(IsotopyRule::SlideDExpand, col, pos));
      else if (op == "scr") fd.apply(isotopy(IsotopyRule::SlideCReduce, col, pos));
      else if (op == "sdr") fd.apply(isotopy(IsotopyRule::SlideDReduce, col, pos));
      else if (op == "br") fd.apply(isotopy(IsotopyRule::Braid, col));
      else { std::printf("unknown op %s\n", op.c_str()); continue; }
      std::printf("--- %s %d %d ---\n", op.c_str(), col, pos);
      show(fd);
      std::printf("canon? %s\n", normalize(fd.f) == normalize(canon) ? "YES" : "no");
    } catch (const Error& e) {
      std::printf("REJECT %s %d %d: %s\n", op.c_str(), col, pos, e.what());
    }
  }
  return 0;
}
