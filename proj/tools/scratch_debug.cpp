// Temporary probe: synthesize the connected-filling program for the
// two-component degenerate link directly as (0-handle, isotopy, 1-handle).
// Insert an adjacent cap pair into the target word so one_handle restores it
// exactly, then reduce the inserted word to the bare unknot by isotopy BFS;
// the reversed reduction is the construction's isotopy stage.
#include "legcob/family.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <string>
#include <unordered_map>
#include <vector>

using namespace legcob;

static std::string wstr(const std::vector<Event>& w) {
  std::string s;
  for (const Event& e : w) {
    char k = e.kind == EventKind::LeftCusp ? 'l' : e.kind == EventKind::Crossing ? 'x' : 'r';
    s += k + std::to_string(e.pos) + " ";
  }
  return s;
}

static std::string key(const FrontDiagram& f) {
  std::string k;
  for (const Event& e : f.events) {
    k += char('0' + int(e.kind));
    k += char('a' + e.pos);
  }
  return k;
}

static const char* rule_name(IsotopyRule r) {
  switch (r) {
    case IsotopyRule::Kink1Insert: return "Kink1Insert";
    case IsotopyRule::Kink2Insert: return "Kink2Insert";
    case IsotopyRule::Kink1Remove: return "Kink1Remove";
    case IsotopyRule::Kink2Remove: return "Kink2Remove";
    case IsotopyRule::SlideAExpand: return "SlideAExpand";
    case IsotopyRule::SlideAReduce: return "SlideAReduce";
    case IsotopyRule::SlideBExpand: return "SlideBExpand";
    case IsotopyRule::SlideBReduce: return "SlideBReduce";
    case IsotopyRule::SlideCExpand: return "SlideCExpand";
    case IsotopyRule::SlideCReduce: return "SlideCReduce";
    case IsotopyRule::SlideDExpand: return "SlideDExpand";
    case IsotopyRule::SlideDReduce: return "SlideDReduce";
    case IsotopyRule::Braid: return "Braid";
    case IsotopyRule::Commute: return "Commute";
  }
  return "?";
}

static IsotopyRule inverse_rule(IsotopyRule r) {
  switch (r) {
    case IsotopyRule::Kink1Remove: return IsotopyRule::Kink1Insert;
    case IsotopyRule::Kink2Remove: return IsotopyRule::Kink2Insert;
    case IsotopyRule::SlideAReduce: return IsotopyRule::SlideAExpand;
    case IsotopyRule::SlideBReduce: return IsotopyRule::SlideBExpand;
    case IsotopyRule::SlideCReduce: return IsotopyRule::SlideCExpand;
    case IsotopyRule::SlideDReduce: return IsotopyRule::SlideDExpand;
    default: return r;  // commute and braid are self inverse
  }
}

int main() {
  const FrontDiagram star = lambda_star();
  const int len = (int)star.events.size();

  // candidate unknot words whose single one_handle lands the target exactly
  struct Cand {
    FrontDiagram w;
    int col = 0;
  };
  std::vector<Cand> cands;
  for (int i = 0; i <= len; ++i) {
    for (int p = 1; p <= 6; ++p) {
      for (int o : {1, -1}) {
        FrontDiagram w;
        w.events = star.events;
        w.events.insert(w.events.begin() + i,
            {Event{EventKind::RightCusp, p}, Event{EventKind::LeftCusp, p}});
        w.orient = {o};
        try {
          slice_counts(w.events);
          FrontTrace t = trace_components(w.events);
          if (t.ncomps != 1) continue;
          MoveResult res = apply_move(w, one_handle(i));
          if (res.front.events != star.events) continue;
          if (res.front.orient != star.orient) continue;
          InvariantReport inv = invariants(w);
          std::printf("cand i=%d p=%d o=%+d  tb=%d rot=%d  %s\n", i, p, o,
                      inv.tb[0], inv.rotation[0], wstr(w.events).c_str());
          cands.push_back({w, i});
        } catch (const Error&) {
        }
      }
    }
  }
  std::printf("== %zu candidates ==\n", cands.size());

  // reduce each candidate to the bare unknot l1 r1 by isotopy BFS
  for (const Cand& cd : cands) {
    struct Step {
      std::string parent;
      Move mv;
    };
    std::unordered_map<std::string, Step> from;
    std::deque<FrontDiagram> q{cd.w};
    from[key(cd.w)] = {"", {}};
    const std::string goal = key([] {
      FrontDiagram u;
      u.events = {Event{EventKind::LeftCusp, 1}, Event{EventKind::RightCusp, 1}};
      u.orient = {1};
      return u;
    }());
    bool hit = false;
    std::string hitkey;
    const int max_len = (int)cd.w.events.size() + 2;
    int expanded = 0;
    while (!q.empty() && !hit && expanded < 400000) {
      FrontDiagram cur = q.front();
      q.pop_front();
      ++expanded;
      const int n = (int)cur.events.size();
      for (int c = 0; c < n; ++c) {
        for (IsotopyRule r :
             {IsotopyRule::Commute, IsotopyRule::Braid, IsotopyRule::Kink1Remove,
              IsotopyRule::Kink2Remove, IsotopyRule::SlideAReduce,
              IsotopyRule::SlideBReduce, IsotopyRule::SlideCReduce,
              IsotopyRule::SlideDReduce, IsotopyRule::SlideAExpand,
              IsotopyRule::SlideBExpand, IsotopyRule::SlideCExpand,
              IsotopyRule::SlideDExpand}) {
          for (int p = 0; p <= 5; ++p) {
            Move mv = isotopy(r, c, p);
            try {
              MoveResult res = apply_move(cur, mv);
              if ((int)res.front.events.size() > max_len) continue;
              std::string k = key(res.front);
              if (from.count(k)) continue;
              from[k] = {key(cur), mv};
              if (k == goal) {
                hit = true;
                hitkey = k;
                break;
              }
              q.push_back(std::move(res.front));
            } catch (const Error&) {
            }
          }
          if (hit) break;
        }
        if (hit) break;
      }
    }
    if (!hit) {
      std::printf("cand col=%d: no reduction within %d states\n", cd.col, expanded);
      continue;
    }
    // walk back, then invert to get the forward construction
    std::vector<Move> reduction;
    for (std::string k = hitkey; !from[k].parent.empty(); k = from[k].parent)
      reduction.push_back(from[k].mv);
    std::reverse(reduction.begin(), reduction.end());
    std::printf("cand col=%d: reduction in %zu moves; construction:\n", cd.col,
                reduction.size());
    std::printf("  zero_handle(0, 1, %+d)\n", cd.w.orient[0]);
    for (auto it = reduction.rbegin(); it != reduction.rend(); ++it)
      std::printf("  isotopy(IsotopyRule::%s, %d, %d)\n",
                  rule_name(inverse_rule(it->rule)), it->col, it->pos);
    std::printf("  one_handle(%d)\n", cd.col);

    // verify the forward program lands the target word
    FrontDiagram f;
    f.events = {Event{EventKind::LeftCusp, 1}, Event{EventKind::RightCusp, 1}};
    f.orient = {cd.w.orient[0]};
    bool ok = true;
    try {
      for (auto it = reduction.rbegin(); it != reduction.rend(); ++it) {
        MoveResult res = apply_move(f, isotopy(inverse_rule(it->rule), it->col, it->pos));
        f = res.front;
      }
      MoveResult res = apply_move(f, one_handle(cd.col));
      f = res.front;
    } catch (const Error& e) {
      std::printf("  FORWARD REPLAY FAILED: %s\n", e.what());
      ok = false;
    }
    if (ok)
      std::printf("  forward replay: %s\n",
                  f.events == star.events && f.orient == star.orient ? "LANDS TARGET"
                                                                      : "MISMATCH");
    break;  // first reducible candidate is enough
  }
  return 0;
}
