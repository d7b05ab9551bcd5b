#include "legcob/front.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace legcob {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Syntax: return "syntax";
    case ErrorKind::StrandBalance: return "strand-balance";
    case ErrorKind::PositionRange: return "position-range";
    case ErrorKind::UnknownComponent: return "unknown-component";
    case ErrorKind::DuplicateOrientation: return "duplicate-orientation";
    case ErrorKind::MissingOrientation: return "missing-orientation";
    case ErrorKind::IllegalSite: return "illegal-site";
    case ErrorKind::OrientationGate: return "orientation-gate";
    case ErrorKind::RuleMismatch: return "rule-mismatch";
    case ErrorKind::Certification: return "certification";
    case ErrorKind::TargetMismatch: return "target-mismatch";
    case ErrorKind::InvalidComposition: return "invalid-composition";
    case ErrorKind::NotCoarsening: return "not-coarsening";
    case ErrorKind::InvalidSummary: return "invalid-summary";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

Error::Error(ErrorKind k, const std::string& msg, int line_, int col_,
             int event_index_)
    : std::runtime_error(msg), kind(k), line(line_), col(col_),
      event_index(event_index_) {}

std::vector<int> slice_counts(const std::vector<Event>& events) {
  std::vector<int> counts;
  counts.reserve(events.size() + 1);
  int n = 0;
  counts.push_back(0);
  for (int i = 0; i < (int)events.size(); ++i) {
    const Event& e = events[i];
    switch (e.kind) {
      case EventKind::LeftCusp:
        if (e.pos < 1 || e.pos > n + 1)
          throw Error(ErrorKind::PositionRange,
                      "left cusp at position " + std::to_string(e.pos) +
                          " with " + std::to_string(n) + " strands",
                      0, 0, i);
        n += 2;
        break;
      case EventKind::Crossing:
        if (e.pos < 1 || e.pos + 1 > n)
          throw Error(ErrorKind::PositionRange,
                      "crossing at position " + std::to_string(e.pos) +
                          " with " + std::to_string(n) + " strands",
                      0, 0, i);
        break;
      case EventKind::RightCusp:
        if (e.pos < 1 || e.pos + 1 > n)
          throw Error(ErrorKind::PositionRange,
                      "right cusp at position " + std::to_string(e.pos) +
                          " with " + std::to_string(n) + " strands",
                      0, 0, i);
        n -= 2;
        break;
    }
    counts.push_back(n);
  }
  if (n != 0)
    throw Error(ErrorKind::StrandBalance,
                "word ends with " + std::to_string(n) + " open strands");
  return counts;
}

namespace {

struct Token {
  std::string text;
  int col = 0; // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r' && line[j] != '#')
      ++j;
    out.push_back({line.substr(i, j - i), (int)i + 1});
    i = j;
  }
  return out;
}

int parse_int_token(const Token& t, int lineno) {
  size_t i = 0;
  if (i < t.text.size() && (t.text[i] == '-' || t.text[i] == '+')) ++i;
  if (i == t.text.size())
    throw Error(ErrorKind::Syntax, "expected integer, got '" + t.text + "'",
                lineno, t.col);
  for (; i < t.text.size(); ++i)
    if (t.text[i] < '0' || t.text[i] > '9')
      throw Error(ErrorKind::Syntax, "expected integer, got '" + t.text + "'",
                  lineno, t.col);
  return std::stoi(t.text);
}

} // namespace

FrontDiagram parse_front(const std::string& text) {
  std::vector<Event> events;
  std::vector<std::pair<int, int>> ev_at; // (line, col) per event
  struct OrientEntry {
    int comp, sign, line, col;
  };
  std::vector<OrientEntry> entries;
  bool header_seen = false;
  bool orient_seen = false;

  int lineno = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(start, end - start);
    ++lineno;
    bool last = end == text.size();
    start = end + 1;

    std::vector<Token> toks = tokenize(line);
    if (toks.empty()) {
      if (last) break;
      continue;
    }
    if (!header_seen) {
      if (toks.size() != 2 || toks[0].text != "front" || toks[1].text != "v1")
        throw Error(ErrorKind::Syntax, "expected header 'front v1'", lineno,
                    toks[0].col);
      header_seen = true;
      if (last) break;
      continue;
    }
    const std::string& kw = toks[0].text;
    if (kw == "l" || kw == "x" || kw == "r") {
      if (orient_seen)
        throw Error(ErrorKind::Syntax, "event line after orient line", lineno,
                    toks[0].col);
      if (toks.size() != 2)
        throw Error(ErrorKind::Syntax, "expected '" + kw + " <pos>'", lineno,
                    toks[0].col);
      int p = parse_int_token(toks[1], lineno);
      EventKind kind = kw == "l"   ? EventKind::LeftCusp
                       : kw == "x" ? EventKind::Crossing
                                   : EventKind::RightCusp;
      events.push_back({kind, p});
      ev_at.push_back({lineno, toks[1].col});
    } else if (kw == "orient") {
      if (toks.size() != 3)
        throw Error(ErrorKind::Syntax, "expected 'orient <component> <+|->'",
                    lineno, toks[0].col);
      int c = parse_int_token(toks[1], lineno);
      int s;
      if (toks[2].text == "+")
        s = 1;
      else if (toks[2].text == "-")
        s = -1;
      else
        throw Error(ErrorKind::Syntax,
                    "expected '+' or '-', got '" + toks[2].text + "'", lineno,
                    toks[2].col);
      entries.push_back({c, s, lineno, toks[1].col});
      orient_seen = true;
    } else {
      throw Error(ErrorKind::Syntax, "unknown directive '" + kw + "'", lineno,
                  toks[0].col);
    }
    if (last) break;
  }
  if (!header_seen)
    throw Error(ErrorKind::Syntax, "expected header 'front v1'", 1, 1);

  try {
    slice_counts(events);
  } catch (Error& e) {
    if (e.event_index >= 0) {
      throw Error(e.kind, e.what(), ev_at[e.event_index].first,
                  ev_at[e.event_index].second, e.event_index);
    }
    throw;
  }

  FrontTrace t = trace_components(events);
  FrontDiagram f;
  f.events = std::move(events);
  if (entries.empty()) {
    f.orient.assign(t.ncomps, 1);
  } else {
    f.orient.assign(t.ncomps, 0);
    for (const OrientEntry& oe : entries) {
      if (oe.comp < 0 || oe.comp >= t.ncomps)
        throw Error(ErrorKind::UnknownComponent,
                    "orientation entry for unknown component " +
                        std::to_string(oe.comp),
                    oe.line, oe.col);
      if (f.orient[oe.comp] != 0)
        throw Error(ErrorKind::DuplicateOrientation,
                    "duplicate orientation for component " +
                        std::to_string(oe.comp),
                    oe.line, oe.col);
      f.orient[oe.comp] = oe.sign;
    }
    for (int c = 0; c < t.ncomps; ++c)
      if (f.orient[c] == 0)
        throw Error(ErrorKind::MissingOrientation,
                    "component " + std::to_string(c) +
                        " has no orientation entry");
  }
  return f;
}

std::string serialize_front(const FrontDiagram& f) {
  FrontTrace t = trace_components(f.events);
  if ((int)f.orient.size() != t.ncomps)
    throw Error(ErrorKind::MissingOrientation,
                "orientation vector covers " + std::to_string(f.orient.size()) +
                    " of " + std::to_string(t.ncomps) + " components");
  std::string out = "front v1\n";
  for (const Event& e : f.events) {
    char k = e.kind == EventKind::LeftCusp    ? 'l'
             : e.kind == EventKind::Crossing  ? 'x'
                                              : 'r';
    out += k;
    out += ' ';
    out += std::to_string(e.pos);
    out += '\n';
  }
  for (int c = 0; c < t.ncomps; ++c) {
    out += "orient ";
    out += std::to_string(c);
    out += f.orient[c] > 0 ? " +\n" : " -\n";
  }
  return out;
}

namespace {

// End of a segment: either continues into the adjacent slice at `row`, or
// joins the cusp partner at `row` within the same slice.
struct End {
  bool join = false;
  int row = 0;
};

struct Links {
  std::vector<std::vector<End>> right, left;
};

Links build_links(const std::vector<Event>& events,
                  const std::vector<int>& counts) {
  int m = (int)events.size();
  Links lk;
  lk.right.resize(m + 1);
  lk.left.resize(m + 1);
  for (int s = 0; s <= m; ++s) {
    lk.right[s].resize(counts[s]);
    lk.left[s].resize(counts[s]);
  }
  for (int s = 0; s < m; ++s) {
    const Event& e = events[s];
    int n = counts[s];
    int p = e.pos;
    switch (e.kind) {
      case EventKind::LeftCusp:
        for (int r = 1; r <= n; ++r) {
          int rp = r < p ? r : r + 2;
          lk.right[s][r - 1] = {false, rp};
          lk.left[s + 1][rp - 1] = {false, r};
        }
        lk.left[s + 1][p - 1] = {true, p + 1};
        lk.left[s + 1][p] = {true, p};
        break;
      case EventKind::Crossing:
        for (int r = 1; r <= n; ++r) {
          int rp = r == p ? p + 1 : r == p + 1 ? p : r;
          lk.right[s][r - 1] = {false, rp};
          lk.left[s + 1][rp - 1] = {false, r};
        }
        break;
      case EventKind::RightCusp:
        lk.right[s][p - 1] = {true, p + 1};
        lk.right[s][p] = {true, p};
        for (int r = 1; r <= n; ++r) {
          if (r == p || r == p + 1) continue;
          int rp = r < p ? r : r - 2;
          lk.right[s][r - 1] = {false, rp};
          lk.left[s + 1][rp - 1] = {false, r};
        }
        break;
    }
  }
  return lk;
}

} // namespace

FrontTrace trace_components(const std::vector<Event>& events) {
  std::vector<int> counts = slice_counts(events);
  Links lk = build_links(events, counts);
  int m = (int)events.size();

  FrontTrace t;
  t.comp.resize(m + 1);
  t.sense.resize(m + 1);
  for (int s = 0; s <= m; ++s) {
    t.comp[s].assign(counts[s], -1);
    t.sense[s].assign(counts[s], 0);
  }

  for (int e = 0; e < m; ++e) {
    if (events[e].kind != EventKind::LeftCusp) continue;
    int s0 = e + 1, r0 = events[e].pos;
    if (t.comp[s0][r0 - 1] >= 0) continue;
    int cid = t.ncomps++;
    t.first_cusp_event.push_back(e);
    int s = s0, r = r0, moving = 1;
    do {
      assert(t.comp[s][r - 1] == -1);
      t.comp[s][r - 1] = cid;
      t.sense[s][r - 1] = moving;
      if (moving > 0) {
        End en = lk.right[s][r - 1];
        if (en.join) {
          r = en.row;
          moving = -1;
        } else {
          r = en.row;
          ++s;
        }
      } else {
        End en = lk.left[s][r - 1];
        if (en.join) {
          r = en.row;
          moving = 1;
        } else {
          r = en.row;
          --s;
        }
      }
    } while (s != s0 || r != r0);
  }
  for (int s = 0; s <= m; ++s)
    for (int v : t.comp[s]) assert(v >= 0);
  return t;
}

void assign_directions_from_seeds(
    const std::vector<Event>& events, FrontTrace& t,
    const std::vector<std::pair<SegRef, int>>& seeds) {
  std::vector<int> sigma(t.ncomps, 0);
  for (const auto& [seg, d] : seeds) {
    int c = t.comp[seg.slice][seg.row - 1];
    int sg = d * t.sense[seg.slice][seg.row - 1];
    if (sigma[c] != 0 && sigma[c] != sg)
      throw Error(ErrorKind::Certification,
                  "inconsistent orientation transport on component " +
                      std::to_string(c));
    sigma[c] = sg;
  }
  for (int c = 0; c < t.ncomps; ++c)
    if (sigma[c] == 0)
      throw Error(ErrorKind::MissingOrientation,
                  "component " + std::to_string(c) + " has no seed");
  t.dir.resize(t.comp.size());
  for (size_t s = 0; s < t.comp.size(); ++s) {
    t.dir[s].resize(t.comp[s].size());
    for (size_t r = 0; r < t.comp[s].size(); ++r)
      t.dir[s][r] = sigma[t.comp[s][r]] * t.sense[s][r];
  }
  t.comp_sign.assign(t.ncomps, 0);
  for (int c = 0; c < t.ncomps; ++c) {
    int e = t.first_cusp_event[c];
    t.comp_sign[c] = t.dir[e + 1][events[e].pos - 1];
  }
}

void assign_directions(const std::vector<Event>& events, FrontTrace& t,
                       const std::vector<int>& orient) {
  if ((int)orient.size() != t.ncomps)
    throw Error(ErrorKind::MissingOrientation,
                "orientation vector covers " + std::to_string(orient.size()) +
                    " of " + std::to_string(t.ncomps) + " components");
  std::vector<std::pair<SegRef, int>> seeds;
  seeds.reserve(t.ncomps);
  for (int c = 0; c < t.ncomps; ++c) {
    int e = t.first_cusp_event[c];
    seeds.push_back({{e + 1, events[e].pos}, orient[c]});
  }
  assign_directions_from_seeds(events, t, seeds);
}

InvariantReport invariants(const FrontDiagram& f) {
  FrontTrace t = trace_components(f.events);
  assign_directions(f.events, t, f.orient);

  InvariantReport rep;
  rep.component_count = t.ncomps;
  rep.tb.assign(t.ncomps, 0);
  rep.rotation.assign(t.ncomps, 0);
  rep.linking.assign(t.ncomps, std::vector<int>(t.ncomps, 0));

  std::vector<int> selfw(t.ncomps, 0), rcusp(t.ncomps, 0), up(t.ncomps, 0),
      down(t.ncomps, 0);
  std::vector<std::vector<int>> interw(t.ncomps, std::vector<int>(t.ncomps, 0));
  int total_rc = 0;

  for (int e = 0; e < (int)f.events.size(); ++e) {
    const Event& ev = f.events[e];
    int p = ev.pos;
    switch (ev.kind) {
      case EventKind::Crossing: {
        // The over strand is the one descending through the crossing, which
        // enters at the upper row. Positive iff both run the same way.
        int co = t.comp[e][p - 1], cu = t.comp[e][p];
        int sign = t.dir[e][p - 1] == t.dir[e][p] ? 1 : -1;
        rep.writhe += sign;
        if (co == cu)
          selfw[co] += sign;
        else {
          interw[co][cu] += sign;
          interw[cu][co] += sign;
        }
        break;
      }
      case EventKind::LeftCusp: {
        int c = t.comp[e + 1][p - 1];
        (t.dir[e + 1][p - 1] > 0 ? up[c] : down[c])++;
        break;
      }
      case EventKind::RightCusp: {
        int c = t.comp[e][p - 1];
        (t.dir[e][p - 1] > 0 ? down[c] : up[c])++;
        rcusp[c]++;
        total_rc++;
        break;
      }
    }
  }
  for (int c = 0; c < t.ncomps; ++c) {
    rep.tb[c] = selfw[c] - rcusp[c];
    assert((down[c] - up[c]) % 2 == 0);
    rep.rotation[c] = (down[c] - up[c]) / 2;
  }
  rep.tb_link = rep.writhe - total_rc;
  for (int a = 0; a < t.ncomps; ++a)
    for (int b = 0; b < t.ncomps; ++b) {
      if (a == b) continue;
      assert(interw[a][b] % 2 == 0);
      rep.linking[a][b] = interw[a][b] / 2;
    }
  return rep;
}

namespace {

// Footprint on the slice between the two events, in half-row units so that
// seams (odd values) never collide with rows (even values).
void footprint_applied(const Event& e, int& lo, int& hi) {
  if (e.kind == EventKind::RightCusp) {
    lo = hi = 2 * e.pos - 1; // seam left by the removed pair
  } else {
    lo = 2 * e.pos;
    hi = 2 * e.pos + 2;
  }
}

void footprint_pending(const Event& e, int& lo, int& hi) {
  if (e.kind == EventKind::LeftCusp) {
    lo = hi = 2 * e.pos - 1; // seam the pair will be inserted into
  } else {
    lo = 2 * e.pos;
    hi = 2 * e.pos + 2;
  }
}

int rank(EventKind k) { return (int)k; }

bool key_less(const Event& a, const Event& b) {
  if (a.pos != b.pos) return a.pos < b.pos;
  return rank(a.kind) < rank(b.kind);
}

bool word_less(const std::vector<Event>& a, const std::vector<Event>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      key_less);
}

struct WordLess {
  bool operator()(const std::vector<Event>& a,
                  const std::vector<Event>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i].pos != b[i].pos) return a[i].pos < b[i].pos;
      if (a[i].kind != b[i].kind) return rank(a[i].kind) < rank(b[i].kind);
    }
    return false;
  }
};

} // namespace

bool swap_independent(const Event& e1, const Event& e2) {
  int lo1, hi1, lo2, hi2;
  footprint_applied(e1, lo1, hi1);
  footprint_pending(e2, lo2, hi2);
  if (hi1 >= lo2 && hi2 >= lo1) return false;
  // Swapping a (LeftCusp, RightCusp) pair must not create an adjacent
  // same-position (RightCusp, LeftCusp) pair, which is order-significant.
  if (e1.kind == EventKind::LeftCusp && e2.kind == EventKind::RightCusp &&
      (e2.pos == e1.pos + 2 || e2.pos + 2 == e1.pos))
    return false;
  return true;
}

std::pair<Event, Event> swap_adjacent(const Event& e1, const Event& e2) {
  assert(swap_independent(e1, e2));
  int lo1, hi1, lo2, hi2;
  footprint_applied(e1, lo1, hi1);
  footprint_pending(e2, lo2, hi2);
  Event e2p = e2, e1p = e1;
  if (hi2 < lo1) {
    // e2 acts above e1: e1 re-expressed across e2's strand shift.
    if (e2.kind == EventKind::LeftCusp) e1p.pos += 2;
    if (e2.kind == EventKind::RightCusp) e1p.pos -= 2;
  } else {
    // e2 acts below e1: e2 un-shifted by e1's strand shift.
    if (e1.kind == EventKind::LeftCusp) e2p.pos -= 2;
    if (e1.kind == EventKind::RightCusp) e2p.pos += 2;
  }
  assert(swap_independent(e2p, e1p));
  return {e2p, e1p};
}

namespace {

using Word = std::vector<Event>;

// Bubbles events[k] to the front through adjacent swaps; fails if blocked.
bool try_bubble(const Word& w, int k, Event& expr, Word& rem) {
  Event cur = w[k];
  Word passed(w.begin(), w.begin() + k);
  for (int i = k - 1; i >= 0; --i) {
    if (!swap_independent(passed[i], cur)) return false;
    auto [c2, e1p] = swap_adjacent(passed[i], cur);
    cur = c2;
    passed[i] = e1p;
  }
  expr = cur;
  rem = std::move(passed);
  rem.insert(rem.end(), w.begin() + k + 1, w.end());
  return true;
}

using Memo = std::map<Word, Word, WordLess>;

const Word& nf(const Word& w, Memo& memo) {
  static const Word kEmpty;
  if (w.empty()) return kEmpty;
  auto it = memo.find(w);
  if (it != memo.end()) return it->second;

  bool have = false;
  Event best_expr{};
  Word best_rem;
  Event expr{};
  Word rem;
  for (int k = 0; k < (int)w.size(); ++k) {
    if (!try_bubble(w, k, expr, rem)) continue;
    if (!have || key_less(expr, best_expr)) {
      have = true;
      best_expr = expr;
      best_rem = rem;
    } else if (expr == best_expr && rem != best_rem &&
               word_less(nf(rem, memo), nf(best_rem, memo))) {
      best_rem = rem;
    }
  }
  assert(have); // k = 0 always bubbles trivially
  Word result;
  result.reserve(w.size());
  result.push_back(best_expr);
  const Word& tail = nf(best_rem, memo);
  result.insert(result.end(), tail.begin(), tail.end());
  return memo.emplace(w, std::move(result)).first->second;
}

} // namespace

NormalizedWord normalize_word(const std::vector<Event>& events) {
  slice_counts(events);
  Memo memo;
  NormalizedWord out;
  Word cur = events;
  std::vector<int> ids(events.size());
  for (size_t i = 0; i < ids.size(); ++i) ids[i] = (int)i;

  while (!cur.empty()) {
    bool have = false;
    int best_k = -1;
    Event best_expr{};
    Word best_rem;
    Event expr{};
    Word rem;
    for (int k = 0; k < (int)cur.size(); ++k) {
      if (!try_bubble(cur, k, expr, rem)) continue;
      if (!have || key_less(expr, best_expr)) {
        have = true;
        best_k = k;
        best_expr = expr;
        best_rem = rem;
      } else if (expr == best_expr && rem != best_rem &&
                 word_less(nf(rem, memo), nf(best_rem, memo))) {
        best_k = k;
        best_rem = rem;
      }
    }
    assert(have);
    out.events.push_back(best_expr);
    out.source.push_back(ids[best_k]);
    ids.erase(ids.begin() + best_k);
    cur = std::move(best_rem);
  }
  return out;
}

FrontDiagram normalize(const FrontDiagram& f) {
  FrontTrace t = trace_components(f.events);
  if ((int)f.orient.size() != t.ncomps)
    throw Error(ErrorKind::MissingOrientation,
                "orientation vector covers " + std::to_string(f.orient.size()) +
                    " of " + std::to_string(t.ncomps) + " components");
  NormalizedWord nw = normalize_word(f.events);
  FrontDiagram g;
  g.events = nw.events;
  if (g.events.empty()) return g;

  FrontTrace t2 = trace_components(g.events);
  if (t2.ncomps != t.ncomps)
    throw Error(ErrorKind::Certification, "normal form changed component count");
  std::vector<int> newcol(nw.source.size());
  for (size_t i = 0; i < nw.source.size(); ++i) newcol[nw.source[i]] = (int)i;
  std::vector<std::pair<SegRef, int>> seeds;
  for (int c = 0; c < t.ncomps; ++c) {
    int e = t.first_cusp_event[c];
    int nc = newcol[e];
    seeds.push_back({{nc + 1, g.events[nc].pos}, f.orient[c]});
  }
  assign_directions_from_seeds(g.events, t2, seeds);
  g.orient = t2.comp_sign;
  return g;
}

std::string render_ascii(const FrontDiagram& f) {
  std::vector<int> counts = slice_counts(f.events);
  int maxn = 0;
  for (int c : counts) maxn = std::max(maxn, c);
  if (maxn == 0) return "";
  int rows = 2 * maxn - 1;
  int m = (int)f.events.size();
  std::vector<std::string> canvas(rows, std::string(4 * m, ' '));

  auto put = [&](int tr, int col, const char* cell) {
    for (int i = 0; i < 4; ++i) canvas[tr][4 * col + i] = cell[i];
  };
  auto strand_row = [](int r) { return 2 * r - 2; };
  auto between_row = [](int r) { return 2 * r - 1; };

  for (int e = 0; e < m; ++e) {
    const Event& ev = f.events[e];
    int p = ev.pos;
    int n = counts[e];
    switch (ev.kind) {
      case EventKind::LeftCusp:
        for (int r = 1; r <= n; ++r)
          put(strand_row(r < p ? r : r + 2), e, "----");
        put(strand_row(p), e, " /--");
        put(between_row(p), e, "<   ");
        put(strand_row(p + 1), e, " \\--");
        break;
      case EventKind::Crossing:
        for (int r = 1; r <= n; ++r)
          if (r != p && r != p + 1) put(strand_row(r), e, "----");
        put(strand_row(p), e, "-\\/-");
        put(between_row(p), e, " X  ");
        put(strand_row(p + 1), e, "-/\\-");
        break;
      case EventKind::RightCusp:
        for (int r = 1; r <= n; ++r)
          if (r != p && r != p + 1) put(strand_row(r), e, "----");
        put(strand_row(p), e, "--\\ ");
        put(between_row(p), e, "   >");
        put(strand_row(p + 1), e, "--/ ");
        break;
    }
  }
  std::string out;
  for (std::string& line : canvas) {
    size_t end = line.find_last_not_of(' ');
    if (end == std::string::npos)
      line.clear();
    else
      line.resize(end + 1);
    out += line;
    out += '\n';
  }
  return out;
}

} // namespace legcob
