// Temporary development driver for the family fragments.
#include "legcob/family.hpp"

#include <cstdio>
#include <string>
#include <vector>

using namespace legcob;

static int fails = 0;

static void check(bool ok, const std::string& what) {
  std::printf("%s %s\n", ok ? "PASS" : "FAIL", what.c_str());
  if (!ok) ++fails;
}

static std::string comp_str(const Composition& x) {
  std::string s = "(";
  for (size_t i = 0; i < x.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(x[i]);
  }
  return s + ")";
}

int main() {
  // torus fillings
  for (int n = 2; n <= 10; ++n) {
    try {
      MoveProgram p = torus_filling_program(n);
      RunReport r = run_program(p);
      InvariantReport inv = invariants(r.final_front);
      bool ok = inv.tb_link == n - 2 && r.surfaces.comps.size() == 1 &&
                r.surfaces.comps[0].euler == 2 - n;
      check(ok, "torus n=" + std::to_string(n) + " tb=" + std::to_string(inv.tb_link) +
                    " chi=" + std::to_string(r.surfaces.comps[0].euler));
    } catch (const Error& e) {
      check(false, "torus n=" + std::to_string(n) + " threw: " + std::string(e.what()));
    }
  }

  // splits: X=(2,x), Y=(2,x) for x=1..6
  for (int x = 1; x <= 6; ++x) {
    Composition X{2, x};
    try {
      MoveProgram p = filling_program(X, X);
      RunReport r = run_program(p);
      FrontDiagram canon = build_lambda(X);
      bool canon_ok = normalize(p.target) == normalize(canon);
      bool surf = r.surfaces.comps.size() == 2 && r.surfaces.comps[0].euler == -2 &&
                  r.surfaces.comps[1].euler == -x;
      check(surf, "split x=" + std::to_string(x) + " surfaces");
      check(canon_ok, "split x=" + std::to_string(x) + " canonical landing");
    } catch (const Error& e) {
      check(false, "split x=" + std::to_string(x) + " threw: " + std::string(e.what()));
    }
  }

  // joins via filling_program: X=(2,x), Y=(2+x)
  for (int x = 1; x <= 6; ++x) {
    Composition X{2, x};
    Composition Y{2 + x};
    try {
      MoveProgram p = filling_program(X, Y);
      RunReport r = run_program(p);
      FrontDiagram canon = build_lambda(X);
      bool canon_ok = normalize(p.target) == normalize(canon);
      bool surf = r.surfaces.comps.size() == 1 &&
                  r.surfaces.comps[0].euler == -(2 + x);
      check(surf, "join x=" + std::to_string(x) + " surfaces");
      std::printf("  join x=%d lands %s\n", x, canon_ok ? "canonical" : "variant");
    } catch (const Error& e) {
      check(false, "join x=" + std::to_string(x) + " threw: " + std::string(e.what()));
    }
  }

  // standalone fragments on the canonical reduced word
  for (int x = 1; x <= 5; ++x) {
    Composition X{2, x};
    FrontDiagram f = lambda_word(X, {TangleState::Minus});
    try {
      auto sites = find_tangle_sites(f, X);
      MoveProgram sp = split_program(f, sites[0]);
      RunReport rr = run_program(sp);
      check(true, "standalone split x=" + std::to_string(x));
    } catch (const Error& e) {
      check(false, "standalone split x=" + std::to_string(x) + " threw: " +
                       std::string(e.what()));
    }
    try {
      auto sites = find_tangle_sites(f, X);
      MoveProgram jp = join_program(f, sites[0]);
      RunReport rr = run_program(jp);
      check(true, "standalone join x=" + std::to_string(x));
    } catch (const Error& e) {
      check(false, "standalone join x=" + std::to_string(x) + " threw: " +
                       std::string(e.what()));
    }
  }

  // hopf orientations
  for (int oa : {1, -1})
    for (int ob : {1, -1}) {
      try {
        MoveProgram p = hopf_program(oa, ob);
        run_program(p);
        std::printf("  hopf (%+d,%+d) certifies\n", oa, ob);
      } catch (const Error& e) {
        std::printf("  hopf (%+d,%+d) rejected: %s\n", oa, ob, e.what());
      }
    }

  // all X with N <= 5, all Y <= X
  for (int n = 2; n <= 5; ++n) {
    for (unsigned m = 0; m < (1u << (n - 1)); ++m) {
      Composition X = composition_from_bars(n, m);
      for (const Composition& Y : coarsenings(X)) {
        try {
          MoveProgram p = filling_program(X, Y);
          RunReport r = run_program(p);
          bool ok = r.surfaces.comps.size() == Y.size();
          for (size_t i = 0; i < Y.size() && ok; ++i)
            ok = r.surfaces.comps[i].euler == -Y[i];
          if (!ok) check(false, "grid X=" + comp_str(X) + " Y=" + comp_str(Y));
        } catch (const Error& e) {
          check(false, "grid X=" + comp_str(X) + " Y=" + comp_str(Y) + " threw: " +
                           std::string(e.what()));
        }
      }
    }
    std::printf("  grid N=%d done\n", n);
  }

  // distinct filling counts: p(2)=2, p(3)=3, p(4)=5
  for (int n = 2; n <= 4; ++n) {
    Composition X(n, 1);
    try {
      long long c = count_distinct_fillings(X);
      check(c == partitions_count(n),
            "count (1^" + std::to_string(n) + ") = " + std::to_string(c));
    } catch (const Error& e) {
      check(false, "count n=" + std::to_string(n) + " threw: " + std::string(e.what()));
    }
  }

  // the degenerate-top constructions
  try {
    MoveProgram a = lambda_star_construction_a();
    RunReport ra = run_program(a);
    FillingType ta = classify(ra.surfaces);
    check(filling_type_label(ta) == "{(0,2)}",
          "construction a type " + filling_type_label(ta));
    check(normalize(a.target) == normalize(lambda_star()), "construction a target");
  } catch (const Error& e) {
    check(false, std::string("construction a threw: ") + e.what());
  }
  try {
    MoveProgram b = lambda_star_construction_b();
    RunReport rb = run_program(b);
    FillingType tb = classify(rb.surfaces);
    check(filling_type_label(tb) == "{(0,1),(1,1)}",
          "construction b type " + filling_type_label(tb));
  } catch (const Error& e) {
    check(false, std::string("construction b threw: ") + e.what());
  }

  std::printf("%s (%d failures)\n", fails ? "DRIVER FAIL" : "DRIVER PASS", fails);
  return fails ? 1 : 0;
}
