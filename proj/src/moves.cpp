#include "legcob/moves.hpp"

#include "json.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>

namespace legcob {

namespace {

using nlohmann::json;

constexpr EventKind L = EventKind::LeftCusp;
constexpr EventKind X = EventKind::Crossing;
constexpr EventKind R = EventKind::RightCusp;

Event ev(EventKind k, int p) { return Event{k, p}; }

struct RuleName {
  IsotopyRule rule;
  const char* name;
};

constexpr RuleName kRuleNames[] = {
    {IsotopyRule::Kink1Insert, "kink1_insert"},
    {IsotopyRule::Kink1Remove, "kink1_remove"},
    {IsotopyRule::Kink2Insert, "kink2_insert"},
    {IsotopyRule::Kink2Remove, "kink2_remove"},
    {IsotopyRule::SlideAExpand, "slide_a_expand"},
    {IsotopyRule::SlideAReduce, "slide_a_reduce"},
    {IsotopyRule::SlideBExpand, "slide_b_expand"},
    {IsotopyRule::SlideBReduce, "slide_b_reduce"},
    {IsotopyRule::SlideCExpand, "slide_c_expand"},
    {IsotopyRule::SlideCReduce, "slide_c_reduce"},
    {IsotopyRule::SlideDExpand, "slide_d_expand"},
    {IsotopyRule::SlideDReduce, "slide_d_reduce"},
    {IsotopyRule::Braid, "braid"},
    {IsotopyRule::Commute, "commute"},
};

struct Rewrite {
  int len_old = 0;
  std::vector<Event> repl;
};

// Every rule rewrites a block of events in place. pos is the base row p of
// the written pattern; braid and commute read their rows from the word.
Rewrite plan_isotopy(const std::vector<Event>& w, const Move& mv) {
  const int n = static_cast<int>(w.size());
  const int c = mv.col;
  const int p = mv.pos;
  auto mismatch = [&](const char* why) {
    return Error(ErrorKind::RuleMismatch,
                 std::string(isotopy_rule_name(mv.rule)) + " at column " +
                     std::to_string(c) + ": " + why,
                 0, 0, c);
  };
  auto need_insert_col = [&] {
    if (c < 0 || c > n)
      throw Error(ErrorKind::IllegalSite, "insertion column out of range", 0, 0, c);
  };
  auto have = [&](int k) { return c >= 0 && c + k <= n; };
  auto is = [&](int i, EventKind k, int pos) {
    return w[c + i].kind == k && w[c + i].pos == pos;
  };
  if (p < 1 && mv.rule != IsotopyRule::Braid && mv.rule != IsotopyRule::Commute)
    throw Error(ErrorKind::IllegalSite, "rule row must be positive", 0, 0, c);
  switch (mv.rule) {
    case IsotopyRule::Kink1Insert:
      need_insert_col();
      return {0, {ev(L, p), ev(X, p + 1), ev(R, p)}};
    case IsotopyRule::Kink1Remove:
      if (!have(3) || !is(0, L, p) || !is(1, X, p + 1) || !is(2, R, p))
        throw mismatch("expected the upper kink block");
      return {3, {}};
    case IsotopyRule::Kink2Insert:
      need_insert_col();
      return {0, {ev(L, p + 1), ev(X, p), ev(R, p + 1)}};
    case IsotopyRule::Kink2Remove:
      if (!have(3) || !is(0, L, p + 1) || !is(1, X, p) || !is(2, R, p + 1))
        throw mismatch("expected the lower kink block");
      return {3, {}};
    case IsotopyRule::SlideAExpand:
      if (!have(1) || !is(0, L, p + 1)) throw mismatch("expected a left cusp one row below");
      return {1, {ev(L, p), ev(X, p + 1), ev(X, p)}};
    case IsotopyRule::SlideAReduce:
      if (!have(3) || !is(0, L, p) || !is(1, X, p + 1) || !is(2, X, p))
        throw mismatch("expected the slide block");
      return {3, {ev(L, p + 1)}};
    case IsotopyRule::SlideBExpand:
      if (!have(1) || !is(0, L, p)) throw mismatch("expected a left cusp at the row");
      return {1, {ev(L, p + 1), ev(X, p), ev(X, p + 1)}};
    case IsotopyRule::SlideBReduce:
      if (!have(3) || !is(0, L, p + 1) || !is(1, X, p) || !is(2, X, p + 1))
        throw mismatch("expected the slide block");
      return {3, {ev(L, p)}};
    case IsotopyRule::SlideCExpand:
      if (!have(1) || !is(0, R, p)) throw mismatch("expected a right cusp at the row");
      return {1, {ev(X, p + 1), ev(X, p), ev(R, p + 1)}};
    case IsotopyRule::SlideCReduce:
      if (!have(3) || !is(0, X, p + 1) || !is(1, X, p) || !is(2, R, p + 1))
        throw mismatch("expected the slide block");
      return {3, {ev(R, p)}};
    case IsotopyRule::SlideDExpand:
      if (!have(1) || !is(0, R, p + 1)) throw mismatch("expected a right cusp one row below");
      return {1, {ev(X, p), ev(X, p + 1), ev(R, p)}};
    case IsotopyRule::SlideDReduce:
      if (!have(3) || !is(0, X, p) || !is(1, X, p + 1) || !is(2, R, p))
        throw mismatch("expected the slide block");
      return {3, {ev(R, p + 1)}};
    case IsotopyRule::Braid: {
      if (!have(3) || w[c].kind != X || w[c + 1].kind != X || w[c + 2].kind != X)
        throw mismatch("expected three crossings");
      const int a = w[c].pos, b = w[c + 1].pos;
      if (w[c + 2].pos != a || (b != a + 1 && b != a - 1))
        throw mismatch("expected an adjacent braid triple");
      return {3, {ev(X, b), ev(X, a), ev(X, b)}};
    }
    case IsotopyRule::Commute: {
      if (!have(2)) throw mismatch("expected two events");
      if (!swap_independent(w[c], w[c + 1])) throw mismatch("events are not independent");
      auto [e2p, e1p] = swap_adjacent(w[c], w[c + 1]);
      return {2, {e2p, e1p}};
    }
  }
  throw mismatch("unknown rule");
}

// Rebuilds the trace after events [col, col+len_old) became len_new events,
// carrying directions and the component correspondence across the unchanged
// slices. lens_seed orients a component born inside the rewritten window.
MoveResult retrace(const FrontDiagram& oldf, const FrontTrace& ot,
                   std::vector<Event> nw, int col, int len_old, int len_new,
                   const std::optional<std::pair<SegRef, int>>& lens_seed) {
  MoveResult res;
  res.front.events = std::move(nw);
  FrontTrace nt = trace_components(res.front.events);
  const int oldm = static_cast<int>(oldf.events.size());
  const int shift = len_new - len_old;
  std::vector<std::pair<SegRef, int>> seeds;
  std::set<std::pair<int, int>> rel;
  auto take = [&](int os, int ns) {
    if (ot.comp[os].size() != nt.comp[ns].size())
      throw Error(ErrorKind::Certification, "slice shape changed outside the rewritten window");
    for (int r = 1; r <= static_cast<int>(ot.comp[os].size()); ++r) {
      rel.insert({ot.comp[os][r - 1], nt.comp[ns][r - 1]});
      seeds.push_back({SegRef{ns, r}, ot.dir[os][r - 1]});
    }
  };
  for (int s = 0; s <= col; ++s) take(s, s);
  for (int s = col + len_old; s <= oldm; ++s) take(s, s + shift);
  if (lens_seed) seeds.push_back(*lens_seed);
  assign_directions_from_seeds(res.front.events, nt, seeds);
  res.front.orient = nt.comp_sign;
  res.news_of_old.assign(ot.ncomps, {});
  res.olds_of_new.assign(nt.ncomps, {});
  for (const auto& [o, nn] : rel) {
    res.news_of_old[o].push_back(nn);
    res.olds_of_new[nn].push_back(o);
  }
  for (auto& v : res.news_of_old)
    if (v.empty())
      throw Error(ErrorKind::Certification, "a component vanished under the move");
  if (lens_seed)
    res.zero_handle_comp =
        nt.comp[lens_seed->first.slice][lens_seed->first.row - 1];
  return res;
}

void check(bool ok, const char* msg) {
  if (!ok) throw Error(ErrorKind::Certification, msg);
}

// The preserved part of the invariants must match through the correspondence.
void certify_bijection_part(const InvariantReport& b, const InvariantReport& a,
                            const MoveResult& r, const std::vector<int>& olds) {
  std::vector<int> m(b.component_count, -1);
  for (int o : olds) {
    check(r.news_of_old[o].size() == 1, "move is not one to one on untouched components");
    m[o] = r.news_of_old[o][0];
    check(b.tb[o] == a.tb[m[o]], "move changed tb of an untouched component");
    check(b.rotation[o] == a.rotation[m[o]], "move changed rotation of an untouched component");
  }
  for (size_t i = 0; i < olds.size(); ++i)
    for (size_t j = i + 1; j < olds.size(); ++j) {
      const int o1 = olds[i], o2 = olds[j];
      check(b.linking[o1][o2] == a.linking[m[o1]][m[o2]],
            "move changed linking of untouched components");
    }
}

void certify_step(const Move& mv, const InvariantReport& b,
                  const InvariantReport& a, const MoveResult& r) {
  std::vector<int> all_old(b.component_count);
  for (int o = 0; o < b.component_count; ++o) all_old[o] = o;
  switch (mv.kind) {
    case MoveKind::Isotopy: {
      check(a.component_count == b.component_count, "isotopy changed the component count");
      for (int nn = 0; nn < a.component_count; ++nn)
        check(r.olds_of_new[nn].size() == 1, "isotopy merged components");
      certify_bijection_part(b, a, r, all_old);
      check(a.tb_link == b.tb_link, "isotopy changed link tb");
      break;
    }
    case MoveKind::ZeroHandle: {
      check(a.component_count == b.component_count + 1, "zero handle must add one component");
      check(a.tb_link == b.tb_link - 1, "zero handle must lower link tb by one");
      const int z = r.zero_handle_comp;
      check(z >= 0 && z < a.component_count, "zero handle lost its new component");
      check(r.olds_of_new[z].empty(), "zero handle component is not new");
      check(a.tb[z] == -1, "new disk boundary must have tb -1");
      check(a.rotation[z] == 0, "new disk boundary must have rotation 0");
      for (int c = 0; c < a.component_count; ++c)
        if (c != z) check(a.linking[z][c] == 0, "new disk boundary must be unlinked");
      certify_bijection_part(b, a, r, all_old);
      break;
    }
    case MoveKind::OneHandle: {
      check(a.tb_link == b.tb_link + 1, "one handle must raise link tb by one");
      std::vector<int> untouched;
      if (r.pinch_in == r.pinch_out) {
        check(a.component_count == b.component_count + 1, "same component pinch must split");
        check(r.news_of_old[r.pinch_in].size() == 2, "split must map to two components");
      } else {
        check(a.component_count == b.component_count - 1, "two component pinch must merge");
        check(r.news_of_old[r.pinch_in].size() == 1 &&
                  r.news_of_old[r.pinch_in] == r.news_of_old[r.pinch_out],
              "merge must identify the pinched components");
      }
      for (int o = 0; o < b.component_count; ++o)
        if (o != r.pinch_in && o != r.pinch_out) untouched.push_back(o);
      certify_bijection_part(b, a, r, untouched);
      break;
    }
  }
}

Move parse_move_json(const json& jm, size_t idx) {
  auto fail = [&](const std::string& why) {
    return Error(ErrorKind::Syntax, "move " + std::to_string(idx) + ": " + why);
  };
  if (!jm.is_object()) throw fail("expected an object");
  std::string kind;
  try {
    kind = jm.at("kind").get<std::string>();
    const int col = jm.at("col").get<int>();
    if (kind == "zero_handle") {
      const std::string o = jm.at("orient").get<std::string>();
      if (o != "+" && o != "-") throw fail("orient must be + or -");
      return zero_handle(col, jm.at("row").get<int>(), o == "+" ? 1 : -1);
    }
    if (kind == "one_handle") return one_handle(col);
    if (kind == "isotopy") {
      const std::string rn = jm.at("rule").get<std::string>();
      auto rule = isotopy_rule_from_name(rn);
      if (!rule) throw fail("unknown rule " + rn);
      return isotopy(*rule, col, jm.value("pos", 1));
    }
  } catch (const json::exception& e) {
    throw fail(e.what());
  }
  throw fail("unknown kind " + kind);
}

json move_to_json(const Move& mv) {
  json jm;
  jm["col"] = mv.col;
  switch (mv.kind) {
    case MoveKind::ZeroHandle:
      jm["kind"] = "zero_handle";
      jm["row"] = mv.row;
      jm["orient"] = mv.orient > 0 ? "+" : "-";
      break;
    case MoveKind::OneHandle:
      jm["kind"] = "one_handle";
      break;
    case MoveKind::Isotopy:
      jm["kind"] = "isotopy";
      jm["rule"] = isotopy_rule_name(mv.rule);
      jm["pos"] = mv.pos;
      break;
  }
  return jm;
}

} // namespace

void update_surfaces(SurfaceTrace& st, const Move& mv, const MoveResult& res) {
  int keep = -1, drop = -1;
  if (mv.kind == MoveKind::OneHandle) {
    const int sa = st.comp_of_boundary(res.pinch_in);
    const int sb = st.comp_of_boundary(res.pinch_out);
    check(sa >= 0 && sb >= 0, "pinched boundary is not on any surface piece");
    keep = std::min(sa, sb);
    drop = std::max(sa, sb);
  }
  for (auto& sc : st.comps) {
    std::set<int> nb;
    for (int o : sc.boundary)
      nb.insert(res.news_of_old[o].begin(), res.news_of_old[o].end());
    sc.boundary.assign(nb.begin(), nb.end());
  }
  if (mv.kind == MoveKind::ZeroHandle) {
    st.comps.push_back(SurfaceComponent{1, {res.zero_handle_comp}});
  } else if (mv.kind == MoveKind::OneHandle) {
    if (keep == drop) {
      st.comps[keep].euler -= 1;
    } else {
      std::set<int> nb(st.comps[keep].boundary.begin(), st.comps[keep].boundary.end());
      nb.insert(st.comps[drop].boundary.begin(), st.comps[drop].boundary.end());
      st.comps[keep].euler += st.comps[drop].euler - 1;
      st.comps[keep].boundary.assign(nb.begin(), nb.end());
      st.comps.erase(st.comps.begin() + drop);
    }
  }
}

const char* isotopy_rule_name(IsotopyRule r) {
  for (const auto& rn : kRuleNames)
    if (rn.rule == r) return rn.name;
  return "unknown";
}

std::optional<IsotopyRule> isotopy_rule_from_name(const std::string& name) {
  for (const auto& rn : kRuleNames)
    if (name == rn.name) return rn.rule;
  return std::nullopt;
}

Move zero_handle(int col, int row, int orient) {
  Move mv;
  mv.kind = MoveKind::ZeroHandle;
  mv.col = col;
  mv.row = row;
  mv.orient = orient;
  return mv;
}

Move one_handle(int col) {
  Move mv;
  mv.kind = MoveKind::OneHandle;
  mv.col = col;
  return mv;
}

Move isotopy(IsotopyRule rule, int col, int pos) {
  Move mv;
  mv.kind = MoveKind::Isotopy;
  mv.rule = rule;
  mv.col = col;
  mv.pos = pos;
  return mv;
}

MoveResult apply_move(const FrontDiagram& f, const Move& mv) {
  const auto& w = f.events;
  const int n = static_cast<int>(w.size());
  FrontTrace ot = trace_components(w);
  if (static_cast<int>(f.orient.size()) != ot.ncomps)
    throw Error(ErrorKind::Certification, "orientation data does not cover the components");
  assign_directions(w, ot, f.orient);

  int len_old = 0;
  std::vector<Event> repl;
  std::optional<std::pair<SegRef, int>> lens_seed;
  int pin = -1, pout = -1;

  switch (mv.kind) {
    case MoveKind::ZeroHandle: {
      if (mv.col < 0 || mv.col > n)
        throw Error(ErrorKind::IllegalSite, "insertion column out of range", 0, 0, mv.col);
      if (mv.orient != 1 && mv.orient != -1)
        throw Error(ErrorKind::IllegalSite, "zero handle orientation must be +1 or -1");
      if (mv.row < 1)
        throw Error(ErrorKind::IllegalSite, "zero handle row must be positive", 0, 0, mv.col);
      repl = {ev(L, mv.row), ev(R, mv.row)};
      lens_seed = {SegRef{mv.col + 1, mv.row}, mv.orient};
      break;
    }
    case MoveKind::OneHandle: {
      if (mv.col < 0 || mv.col + 1 >= n || w[mv.col].kind != R ||
          w[mv.col + 1].kind != L || w[mv.col].pos != w[mv.col + 1].pos)
        throw Error(ErrorKind::IllegalSite,
                    "one handle needs an adjacent right cusp, left cusp pair at one row",
                    0, 0, mv.col);
      len_old = 2;
      const int p = w[mv.col].pos;
      if (ot.dir[mv.col][p - 1] != ot.dir[mv.col + 2][p - 1])
        throw Error(ErrorKind::OrientationGate,
                    "strand directions disagree across the handle", 0, 0, mv.col);
      pin = ot.comp[mv.col][p - 1];
      pout = ot.comp[mv.col + 2][p - 1];
      break;
    }
    case MoveKind::Isotopy: {
      Rewrite rw = plan_isotopy(w, mv);
      len_old = rw.len_old;
      repl = std::move(rw.repl);
      break;
    }
  }

  std::vector<Event> nw(w.begin(), w.begin() + mv.col);
  nw.insert(nw.end(), repl.begin(), repl.end());
  nw.insert(nw.end(), w.begin() + mv.col + len_old, w.end());
  try {
    slice_counts(nw);
  } catch (const Error& e) {
    throw Error(ErrorKind::IllegalSite,
                std::string("move produces an illegal word: ") + e.what(), 0, 0, mv.col);
  }

  MoveResult res = retrace(f, ot, std::move(nw), mv.col, len_old,
                           static_cast<int>(repl.size()), lens_seed);
  res.pinch_in = pin;
  res.pinch_out = pout;
  return res;
}

int SurfaceTrace::comp_of_boundary(int link_comp) const {
  for (size_t i = 0; i < comps.size(); ++i)
    if (std::find(comps[i].boundary.begin(), comps[i].boundary.end(), link_comp) !=
        comps[i].boundary.end())
      return static_cast<int>(i);
  return -1;
}

void euler_check(const SurfaceTrace& s, const FrontDiagram& f) {
  const InvariantReport inv = invariants(f);
  std::vector<int> owner(inv.component_count, -1);
  for (size_t i = 0; i < s.comps.size(); ++i) {
    const auto& sc = s.comps[i];
    check(!sc.boundary.empty(), "surface piece with empty boundary");
    int tb_sub = 0;
    for (size_t a = 0; a < sc.boundary.size(); ++a) {
      const int c = sc.boundary[a];
      check(c >= 0 && c < inv.component_count, "surface boundary names a missing component");
      check(owner[c] == -1, "component bounded by two surface pieces");
      owner[c] = static_cast<int>(i);
      tb_sub += inv.tb[c];
      for (size_t b = a + 1; b < sc.boundary.size(); ++b)
        tb_sub += 2 * inv.linking[c][sc.boundary[b]];
    }
    check(sc.euler == -tb_sub, "surface euler does not match boundary tb");
  }
  for (int c = 0; c < inv.component_count; ++c)
    check(owner[c] != -1, "component not bounded by any surface piece");
}

MoveProgram parse_program_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Syntax, std::string("bad program json: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorKind::Syntax, "program must be a json object");
  MoveProgram p;
  try {
    if (j.at("version").get<int>() != 1)
      throw Error(ErrorKind::Syntax, "unsupported program version");
    const std::string start = j.at("start").get<std::string>();
    if (start == "empty") {
      p.start_empty = true;
    } else {
      p.start_empty = false;
      p.start = parse_front(start);
    }
    const std::string target = j.at("target").get<std::string>();
    if (target != "empty") p.target = parse_front(target);
    const json& jm = j.at("moves");
    if (!jm.is_array()) throw Error(ErrorKind::Syntax, "moves must be an array");
    for (size_t i = 0; i < jm.size(); ++i) p.moves.push_back(parse_move_json(jm[i], i));
    if (j.contains("annotations")) {
      const json& ja = j.at("annotations");
      if (!ja.is_array()) throw Error(ErrorKind::Syntax, "annotations must be an array");
      for (const auto& a : ja) {
        Annotation an;
        an.label = a.at("label").get<std::string>();
        an.first = a.at("first").get<int>();
        an.last = a.at("last").get<int>();
        if (an.first < 0 || an.last < an.first ||
            an.last >= static_cast<int>(p.moves.size()))
          throw Error(ErrorKind::Syntax, "annotation range out of bounds");
        p.annotations.push_back(std::move(an));
      }
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Syntax, std::string("bad program json: ") + e.what());
  }
  return p;
}

std::string serialize_program_json(const MoveProgram& p) {
  json j;
  j["version"] = 1;
  j["start"] = p.start_empty ? "empty" : serialize_front(p.start);
  j["target"] = serialize_front(p.target);
  json arr = json::array();
  for (const Move& mv : p.moves) arr.push_back(move_to_json(mv));
  j["moves"] = std::move(arr);
  if (!p.annotations.empty()) {
    json ja = json::array();
    for (const auto& an : p.annotations)
      ja.push_back(json{{"label", an.label}, {"first", an.first}, {"last", an.last}});
    j["annotations"] = std::move(ja);
  }
  return j.dump(2) + "\n";
}

RunReport run_program(const MoveProgram& p) {
  FrontDiagram cur;
  if (!p.start_empty) {
    cur = p.start;
    slice_counts(cur.events);
  }
  RunReport rep;
  rep.surfaces_valid = p.start_empty;
  SurfaceTrace surf;
  InvariantReport before = invariants(cur);
  for (size_t i = 0; i < p.moves.size(); ++i) {
    const Move& mv = p.moves[i];
    MoveResult res;
    try {
      res = apply_move(cur, mv);
      const InvariantReport after = invariants(res.front);
      certify_step(mv, before, after, res);
      if (rep.surfaces_valid) update_surfaces(surf, mv, res);
      before = after;
    } catch (const Error& e) {
      throw Error(e.kind, "move " + std::to_string(i) + ": " + e.what(), e.line,
                  e.col, e.event_index);
    }
    cur = res.front;
    rep.steps.push_back(StepRecord{cur, surf, std::move(res)});
  }
  if (!(normalize(cur) == normalize(p.target)))
    throw Error(ErrorKind::TargetMismatch,
                "final front does not normalize to the declared target");
  if (rep.surfaces_valid) euler_check(surf, cur);
  rep.final_front = std::move(cur);
  rep.surfaces = std::move(surf);
  return rep;
}

} // namespace legcob
