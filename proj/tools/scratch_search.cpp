// Temporary bounded BFS over junction fragments: from the canonicalized
// reduced state for X=(2,x), find move sequences with exactly three one
// handles landing on the entangled link (canonical invariants), then replay
// with surface tracking to keep only genuine joins.
#include "legcob/family.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

using namespace legcob;

struct Fold {
  FrontDiagram f;
  SurfaceTrace s;
  bool track = true;
  std::vector<Move> moves;
  void apply(const Move& mv) {
    MoveResult res = apply_move(f, mv);
    if (track) update_surfaces(s, mv, res);
    f = std::move(res.front);
    moves.push_back(mv);
  }
  int cap_col() const { return (int)f.events.size() - 1; }
};

static std::string key_of(const FrontDiagram& f, int handles) {
  std::string k;
  k.reserve(f.events.size() * 2 + f.orient.size() + 1);
  for (const Event& e : f.events) {
    k += char('0' + int(e.kind));
    k += char('a' + e.pos);
  }
  k += '|';
  for (int o : f.orient) k += o > 0 ? '+' : '-';
  k += char('0' + handles);
  return k;
}

static std::string move_str(const Move& m) {
  if (m.kind == MoveKind::OneHandle) return "1h " + std::to_string(m.col);
  const char* r = "?";
  switch (m.rule) {
    case IsotopyRule::Kink1Insert: r = "k1"; break;
    case IsotopyRule::Kink2Insert: r = "k2"; break;
    case IsotopyRule::Kink1Remove: r = "k1r"; break;
    case IsotopyRule::Kink2Remove: r = "k2r"; break;
    case IsotopyRule::SlideAExpand: r = "sa"; break;
    case IsotopyRule::SlideAReduce: r = "sar"; break;
    case IsotopyRule::SlideBExpand: r = "sb"; break;
    case IsotopyRule::SlideBReduce: r = "sbr"; break;
    case IsotopyRule::SlideCExpand: r = "sc"; break;
    case IsotopyRule::SlideCReduce: r = "scr"; break;
    case IsotopyRule::SlideDExpand: r = "sd"; break;
    case IsotopyRule::SlideDReduce: r = "sdr"; break;
    case IsotopyRule::Braid: r = "br"; break;
    case IsotopyRule::Commute: r = "cm"; break;
  }
  return std::string(r) + " " + std::to_string(m.col) + " " + std::to_string(m.pos);
}

int main(int argc, char** argv) {
  const int x = argc > 1 ? std::atoi(argv[1]) : 2;
  const int max_depth = argc > 2 ? std::atoi(argv[2]) : 11;
  const int want = argc > 3 ? std::atoi(argv[3]) : 6;
  const int y = argc > 4 ? std::atoi(argv[4]) : 2;  // part above the junction
  const bool std_mode = argc > 5 && std::strcmp(argv[5], "std") == 0;

  const FrontDiagram canon = lambda_word({y, x}, {TangleState::Plus});
  const FrontDiagram canon_nrm = normalize(canon);
  const InvariantReport cinv = invariants(canon);
  const int max_len = (int)canon.events.size() + 6;
  const int uc = (y + 2) % 2 ? 1 : 2;  // upper sublink components

  struct Node {
    FrontDiagram f;
    int handles = 0;
    int kinks = 0;
    int slides = 0;
    int commutes = 0;
    int removes = 0;
    int braids = 0;
    int seed = 0;
    std::vector<Move> path;
  };

  // starting states: chain orientation +1 and -1 (x = 1 gets all four pairs),
  // crossed with both upper chain orientations
  std::vector<Node> layer;
  std::vector<std::tuple<int, int, int>> oris;
  for (int uo : {1, -1}) {
    if (x == 1) {
      for (int o1 : {1, -1})
        for (int o2 : {1, -1}) oris.push_back({uo, o1, o2});
    } else {
      oris.push_back({uo, 1, 0});
      oris.push_back({uo, -1, 0});
    }
  }
  int chain_first = 0;
  std::vector<Fold> starts;
  // std mode: search from the given reduced word exactly as fragment_program
  // sees it, fixed orientations; goal is the pass-1 invariant acceptance
  FrontDiagram std_want;
  InvariantReport std_want_inv;
  std::vector<std::pair<int, int>> std_want_pairs;
  int std_a = 0, std_bs = 0;
  if (std_mode) {
    FrontDiagram f0 = lambda_word({y, x}, {TangleState::Minus});
    TangleSite site = find_tangle_sites(f0, {y, x}).at(0);
    chain_first = site.first;
    std_a = site.last - 1;
    std_bs = site.first;
    std_want = replace_tangle(f0, site, TangleState::Plus);
    std_want_inv = invariants(std_want);
    for (int c = 0; c < std_want_inv.component_count; ++c)
      std_want_pairs.push_back({std_want_inv.tb[c], std_want_inv.rotation[c]});
    std::sort(std_want_pairs.begin(), std_want_pairs.end());
    std::printf("std mode: site [%d..%d] a=%d bs=%d len=%zu\n", site.first,
                site.last, std_a, std_bs, f0.events.size());
    Fold fd;
    fd.track = false;
    fd.f = f0;
    starts.push_back(fd);
    Node seed_node;
    seed_node.f = f0;
    seed_node.seed = 0;
    layer.push_back(std::move(seed_node));
    oris.clear();
  }
  for (auto [uo, o1, o2] : oris) {
    Fold fd;
    fd.track = true;
    try {
      const int w = y + 2;  // upper chain crossing count
      fd.apply(zero_handle(0, 1, uo));
      for (int t = 0; t < w; ++t) fd.apply(isotopy(IsotopyRule::Kink1Insert, 1 + 3 * t, 1));
      for (int t = 0; t + 1 < w; ++t) fd.apply(one_handle(3 + t));
      const int c = fd.cap_col();
      chain_first = c;
      fd.apply(zero_handle(c, 3, o1));
      const int k = x - 1;
      if (k == 0) {
        fd.apply(zero_handle(c + 1, 5, o2));
      } else {
        for (int t = 0; t < k; ++t) fd.apply(isotopy(IsotopyRule::Kink2Insert, c + 1 + 3 * t, 4));
        for (int t = 0; t + 1 < k; ++t) fd.apply(one_handle(c + 3 + t));
      }
      const int q = (int)fd.f.events.size() - 3;
      fd.apply(isotopy(IsotopyRule::Commute, q + 1));
      fd.apply(isotopy(IsotopyRule::Commute, q));
      fd.apply(isotopy(IsotopyRule::Commute, q + 1));
    } catch (const Error&) {
      continue;
    }
    starts.push_back(fd);
    Node seed_node;
    seed_node.f = fd.f;
    seed_node.seed = (int)starts.size() - 1;
    layer.push_back(std::move(seed_node));
  }

  // goal: right component/link data for the entangled junction
  const int m = x + 2;
  const int lc = m % 2 ? 1 : 2;
  auto is_goal = [&](const FrontDiagram& f) -> bool {
    if (f.events.empty() || !(f.events.back() == Event{EventKind::RightCusp, 1}))
      return false;
    FrontTrace t = trace_components(f.events);
    if (t.ncomps != uc + lc) return false;
    std::vector<int> low;
    for (int c = 0; c < t.ncomps; ++c)
      if (t.first_cusp_event[c] >= chain_first) low.push_back(c);
    if ((int)low.size() != lc) return false;
    InvariantReport inv = invariants(f);
    if (inv.tb_link != cinv.tb_link) return false;
    std::set<int> lowset(low.begin(), low.end());
    std::vector<int> tbs;
    for (int c : low) {
      if (inv.rotation[c] != 0) return false;
      tbs.push_back(inv.tb[c]);
      for (int d = 0; d < t.ncomps; ++d)
        if (!lowset.count(d) && inv.linking[c][d] != 0) return false;
    }
    std::sort(tbs.begin(), tbs.end());
    if (lc == 1 && tbs != std::vector<int>{x}) return false;
    if (lc == 2) {
      if (tbs != std::vector<int>{-1, -1}) return false;
      if (inv.linking[low[0]][low[1]] != m / 2) return false;
    }
    // tail pair: the final cap closes the strands of the second lower cusp
    const int tail_comp = t.comp[(int)f.events.size() - 1][0];
    if (!lowset.count(tail_comp)) return false;
    // orientation rule on the new lower comps
    for (size_t i = 0; i < low.size(); ++i)
      if (f.orient[low[i]] != (i == 0 ? 1 : -1)) return false;
    return true;
  };

  // std goal: landing carries the same link data as the entangled word,
  // matched under some component relabeling (tb, rot, full linking matrix)
  auto is_goal_std = [&](const FrontDiagram& f) -> bool {
    InvariantReport inv = invariants(f);
    const int n = inv.component_count;
    if (n != std_want_inv.component_count) return false;
    if (inv.tb_link != std_want_inv.tb_link) return false;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i)
        ok = inv.tb[perm[i]] == std_want_inv.tb[i] &&
             inv.rotation[perm[i]] == std_want_inv.rotation[i];
      for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j)
          ok = inv.linking[perm[i]][perm[j]] == std_want_inv.linking[i][j];
      if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  };

  std::unordered_set<std::string> seen;
  for (const Node& n : layer) seen.insert(key_of(n.f, 0));

  std::vector<std::pair<int, std::vector<Move>>> found;

  // budgets shaping the search to round-structured movies
  const int max_kinks = 3, max_slides = 2, max_commutes = 6, max_removes = 0;
  const int max_braids = 3;
  const int max_cross = (y + 2) + x + 11;  // body crossings + slack

  auto cross_count = [](const FrontDiagram& f) {
    int c = 0;
    for (const Event& e : f.events)
      if (e.kind == EventKind::Crossing) ++c;
    return c;
  };

  for (int depth = 0; depth < max_depth && !layer.empty(); ++depth) {
    std::vector<Node> next;
    for (const Node& n : layer) {
      const int len = (int)n.f.events.size();
      // cap columns: events that are right cusps, within the block
      std::vector<int> rcols, lcols;
      for (int c = chain_first; c < len; ++c) {
        if (n.f.events[c].kind == EventKind::RightCusp) rcols.push_back(c);
        if (n.f.events[c].kind == EventKind::LeftCusp) lcols.push_back(c);
      }

      // goal states must land the canonical word (orientations may differ on
      // the upper components) and merge one surface piece
      auto try_record = [&](const Node& c) -> bool {
        if (c.handles != 3) return false;
        if (std_mode) {
          if (!is_goal_std(c.f)) return false;
          found.push_back({c.seed, c.path});
          return true;
        }
        if (!is_goal(c.f)) return false;
        if (normalize(c.f).events != canon_nrm.events) return false;
        Fold fd = starts[c.seed];
        const int pre = (int)fd.s.comps.size();
        try {
          for (const Move& mv : c.path) fd.apply(mv);
        } catch (const Error&) {
          return false;
        }
        // join: upper piece and every lower piece fuse into one
        const int lower_pieces = x == 1 ? 2 : 1;
        if ((int)fd.s.comps.size() != pre - lower_pieces) return false;
        found.push_back({c.seed, c.path});
        return true;
      };

      auto finish = [&](Node&& c) {
        if (try_record(c)) return;
        std::string k = key_of(c.f, c.handles);
        if (seen.insert(std::move(k)).second) next.push_back(std::move(c));
      };

      auto push = [&](Move mv, int dk, int ds, int dc, int dr, int db = 0) {
        if (n.kinks + dk > max_kinks || n.slides + ds > max_slides ||
            n.commutes + dc > max_commutes || n.removes + dr > max_removes ||
            n.braids + db > max_braids)
          return;
        try {
          MoveResult res = apply_move(n.f, mv);
          if ((int)res.front.events.size() > max_len) return;
          if (cross_count(res.front) > max_cross) return;
          Node c;
          c.f = std::move(res.front);
          c.handles = n.handles + (mv.kind == MoveKind::OneHandle);
          c.kinks = n.kinks + dk;
          c.slides = n.slides + ds;
          c.commutes = n.commutes + dc;
          c.removes = n.removes + dr;
          c.braids = n.braids + db;
          c.seed = n.seed;
          c.path = n.path;
          c.path.push_back(mv);
          finish(std::move(c));
        } catch (const Error&) {}
      };

      // round macro: kink fused immediately by a handle on its own cusp pair
      auto push_round_at = [&](int kcol, int hcol, IsotopyRule kind, int p) {
        if (n.handles >= 3 || n.kinks >= max_kinks) return;
        try {
          MoveResult r1 = apply_move(n.f, isotopy(kind, kcol, p));
          FrontDiagram mid = std::move(r1.front);
          MoveResult r2 = apply_move(mid, one_handle(hcol));
          if ((int)r2.front.events.size() > max_len) return;
          if (cross_count(r2.front) > max_cross) return;
          Node c;
          c.f = std::move(r2.front);
          c.handles = n.handles + 1;
          c.kinks = n.kinks + 1;
          c.slides = n.slides;
          c.commutes = n.commutes;
          c.removes = n.removes;
          c.braids = n.braids;
          c.seed = n.seed;
          c.path = n.path;
          c.path.push_back(isotopy(kind, kcol, p));
          c.path.push_back(one_handle(hcol));
          finish(std::move(c));
        } catch (const Error&) {}
      };

      // commutes and braid moves anywhere in the block region
      for (int c = std::max(1, chain_first - 1); c + 1 < len; ++c) {
        push(isotopy(IsotopyRule::Commute, c), 0, 0, 1, 0);
        if (c + 2 < len) push(isotopy(IsotopyRule::Braid, c), 0, 0, 0, 0, 1);
      }

      for (int q : rcols) {
        if (n.handles < 3) push(one_handle(q), 0, 0, 0, 0);
        for (int p = 1; p <= 4; ++p) {
          push_round_at(q + 1, q, IsotopyRule::Kink1Insert, p);
          push_round_at(q + 1, q, IsotopyRule::Kink2Insert, p);
          if (p <= 3) {
            push(isotopy(IsotopyRule::SlideCExpand, q, p), 0, 1, 0, 0);
            if (p >= 2) push(isotopy(IsotopyRule::SlideDExpand, q, p), 0, 1, 0, 0);
          }
        }
      }
      // left entry: kink just before a left cusp, fuse its tail into the cusp
      for (int lc : lcols) {
        for (int p = 1; p <= 4; ++p) {
          push_round_at(lc, lc + 2, IsotopyRule::Kink1Insert, p);
          push_round_at(lc, lc + 2, IsotopyRule::Kink2Insert, p);
        }
      }
      if ((int)found.size() >= want) goto done;
    }
    layer = std::move(next);
    std::printf("depth %d: layer %zu seen %zu found %zu\n", depth + 1, layer.size(),
                seen.size(), found.size());
    std::fflush(stdout);
    if ((int)found.size() >= want) break;
  }
done:
  std::printf("== %zu candidate sequences ==\n", found.size());

  // every recorded path already merged one piece; print the details
  const FrontDiagram canon_n = normalize(std_mode ? std_want : canon);
  for (const auto& [si, path] : found) {
    Fold fd = starts[si];
    const int pre_pieces = (int)fd.s.comps.size();
    for (const Move& mv : path) fd.apply(mv);
    std::printf("start %d: pieces %d -> %d, eulers:", si, pre_pieces,
                (int)fd.s.comps.size());
    for (auto& p : fd.s.comps) std::printf(" %d", p.euler);
    bool canonical = normalize(fd.f) == canon_n;
    std::printf("  canon=%s  moves:", canonical ? "YES" : "no");
    for (const Move& mv : path) std::printf(" [%s]", move_str(mv).c_str());
    if (std_mode) {
      std::printf("\n  a-relative (a=%d bs=%d):", std_a, std_bs);
      for (const Move& mv : path) {
        std::string s = move_str(mv);
        std::printf(" [%s | col=a%+d]", s.c_str(), mv.col - std_a);
      }
    }
    std::printf("\n");
    if (canonical) continue;

    std::printf("  landed: %s\n", serialize_front(normalize(fd.f)).c_str());
    std::printf("  wanted: %s\n", serialize_front(canon_n).c_str());

    // stage 2: isotopy-only cleanup toward the canonical word
    struct CNode {
      FrontDiagram f;
      std::vector<Move> path;
    };
    std::vector<CNode> lay{{fd.f, {}}};
    std::unordered_set<std::string> cseen{serialize_front(normalize(fd.f))};
    std::vector<Move> cleanup;
    bool done2 = false;
    for (int d = 0; d < 12 && !lay.empty() && !done2; ++d) {
      std::vector<CNode> nx;
      for (const CNode& cn : lay) {
        const int ln = (int)cn.f.events.size();
        auto try2 = [&](Move mv) {
          if (done2) return;
          try {
            MoveResult res = apply_move(cn.f, mv);
            if ((int)res.front.events.size() > (int)fd.f.events.size()) return;
            CNode c2{std::move(res.front), cn.path};
            c2.path.push_back(mv);
            if (normalize(c2.f) == canon_n) {
              cleanup = c2.path;
              done2 = true;
              return;
            }
            std::string k = serialize_front(normalize(c2.f));
            if (cseen.insert(std::move(k)).second) nx.push_back(std::move(c2));
          } catch (const Error&) {}
        };
        for (int c2 = 1; c2 + 1 < ln && !done2; ++c2) {
          try2(isotopy(IsotopyRule::Commute, c2));
          try2(isotopy(IsotopyRule::Braid, c2));
          for (int p = 1; p <= 4; ++p) {
            try2(isotopy(IsotopyRule::SlideCReduce, c2, p));
            try2(isotopy(IsotopyRule::SlideDReduce, c2, p));
            try2(isotopy(IsotopyRule::SlideCExpand, c2, p));
            try2(isotopy(IsotopyRule::SlideDExpand, c2, p));
            try2(isotopy(IsotopyRule::Kink1Remove, c2, p));
            try2(isotopy(IsotopyRule::Kink2Remove, c2, p));
          }
        }
        if (done2) break;
      }
      lay = std::move(nx);
    }
    if (done2) {
      std::printf("  cleanup:");
      for (const Move& mv : cleanup) std::printf(" [%s]", move_str(mv).c_str());
      std::printf("\n");
    } else {
      std::printf("  cleanup: none within depth 8\n");
    }
  }
  return 0;
}
