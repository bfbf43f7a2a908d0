#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "altk/invariants.hpp"
#include "altk/iso.hpp"
#include "altk/tangle.hpp"

using namespace altk;

namespace {

// Row of n positive crossings closed into the (2,n) torus pattern, all strands
// of vertex i over at slots 0/2.  Matches the builder in test_invariants.cpp.
Diagram torus_row(int n) {
  Diagram D;
  for (int i = 0; i < n; ++i) D.add_vertex();
  for (int i = 0; i + 1 < n; ++i) {
    D.join(4 * i + 0, 4 * (i + 1) + 1);
    D.join(4 * i + 3, 4 * (i + 1) + 2);
  }
  D.join(4 * (n - 1) + 0, 1);
  D.join(2, 4 * (n - 1) + 3);
  for (int i = 0; i < n; ++i) D.set_over(i, true);
  return D;
}

Diagram relabel_legs(Diagram D, const std::array<int, 4>& p) {
  for (int d = 0; d < D.darts(); ++d)
    if (D.theta[d] != Diagram::unset && D.theta[d] < 0) D.theta[d] = ~p[~D.theta[d]];
  return D;
}

TangleExpr rand_tangle(std::mt19937& rng, int depth) {
  auto rint = [&](int lo, int hi) { return lo + (int)(rng() % (hi - lo + 1)); };
  int pick = depth <= 0 ? 0 : rint(0, 5);
  if (pick <= 1) return twist(rint(2, 3) * (rint(0, 1) ? 1 : -1));
  if (pick == 2)
    return transform_tangle(rand_tangle(rng, depth - 1),
                            rint(0, 1) ? Transform::add_north : Transform::add_south);
  int k = rint(1, 2);
  int sg = rint(0, 1) ? 1 : -1;
  std::vector<int> w(k + 1);
  for (int& x : w) x = rint(0, 2) * sg;
  if (k == 1 && w[0] == 0 && w[1] == 0) w[0] = sg;
  std::vector<TangleExpr> slots;
  for (int i = 0; i < k; ++i) slots.push_back(rand_tangle(rng, depth - 1));
  return band(std::move(w), std::move(slots));
}

// A legal flype move on the current tree, if any node admits one.
std::optional<FlypeMove> pick_move(const TangleExpr& F, std::mt19937& rng) {
  std::vector<std::pair<std::vector<int>, const TangleExpr*>> nodes;
  std::vector<int> path;
  std::function<void(const TangleExpr&)> walk = [&](const TangleExpr& T) {
    if (T.kind == NodeKind::band || T.kind == NodeKind::pole) nodes.push_back({path, &T});
    for (int i = 0; i < (int)T.slots.size(); ++i) {
      path.push_back(i);
      walk(T.slots[i]);
      path.pop_back();
    }
  };
  walk(F);
  std::shuffle(nodes.begin(), nodes.end(), rng);
  for (auto& [p, T] : nodes) {
    if (T->kind == NodeKind::pole) return FlypeMove{p, 0, false};
    int k = (int)T->slots.size();
    std::vector<std::pair<int, bool>> opts;
    for (int pos = 0; pos <= k; ++pos) {
      if (T->weights[pos] == 0) continue;
      if (pos > 0) opts.emplace_back(pos, true);
      if (pos < k) opts.emplace_back(pos, false);
    }
    if (!opts.empty()) {
      auto [pos, left] = opts[rng() % opts.size()];
      return FlypeMove{p, pos, left};
    }
  }
  return std::nullopt;
}

JewelSym compose_sym(const JewelSym& a, const JewelSym& b) {
  // b first, then a; decorations compose by xor (the four transforms form a
  // Klein four group) and ride along b's permutation.
  int n = (int)a.perm.size();
  JewelSym c;
  c.perm.resize(n);
  c.t.resize(n);
  for (int i = 0; i < n; ++i) {
    c.perm[i] = a.perm[b.perm[i]];
    c.t[i] = a.t[b.perm[i]] ^ b.t[i];
  }
  c.mirror = a.mirror != b.mirror;
  return c;
}

bool sym_in(const std::vector<JewelSym>& tbl, const JewelSym& g) {
  for (const JewelSym& h : tbl)
    if (h.perm == g.perm && h.t == g.t && h.mirror == g.mirror) return true;
  return false;
}

bool same_knot(const Diagram& A, const Diagram& B) {
  return normalized_bracket(A) == normalized_bracket(B) && signature(A) == signature(B);
}

}  // namespace

TEST_CASE("tangle words print back") {
  CHECK(tangle_word(parse_tangle("C(1,2)")) == "P(1,-2)");
  CHECK(tangle_word(parse_tangle("P(4,2,2,4,2)")) == "P(4,2,2,4,2)");
  CHECK(tangle_word(parse_tangle("B[2,1,0](C(1,2),P(2,3))")) == "B[2,1,0](P(1,-2),P(2,3))");
  CHECK(tangle_word(parse_tangle("N+ P(2,2)")) == "N+ P(2,2)");
  CHECK(tangle_word(parse_tangle("S- 3")) == "S- 3");
  CHECK(tangle_word(parse_tangle("J{6*}(1,1,1,1,1,1)")) == "J{J(3,3)}(1,1,1,1,1,1)");
  CHECK(tangle_word(twist(-3)) == "-3");
  // prefix transforms are applied eagerly while parsing
  CHECK(tangle_word(parse_tangle("*C(3)")) == "3");
  CHECK(tangle_word(parse_tangle("vP(2,3)")) == "B[0,2](3)");

  std::mt19937 rng(3);
  std::vector<TangleExpr> pool = {parse_tangle("B[0,0,0,0](C(1,2),C(1,2),C(3))"),
                                  parse_tangle("J{J(3,2)}(1,C(1,2),-1,2)")};
  for (int i = 0; i < 12; ++i) pool.push_back(rand_tangle(rng, 2));
  for (const TangleExpr& F : pool) CHECK(parse_tangle(tangle_word(F)) == F);
}

TEST_CASE("malformed tangle words are rejected") {
  for (const char* w : {
           "0",                        // empty twist
           "C(1,0)",                   // zero fraction entry
           "C(3,1)",                   // fraction ending in a unit
           "C()",                      //
           "P(0,2)",                   // interior zero
           "P(2,1)",                   // tail too small
           "B[1,1](2,3)",              // weight/slot count off by one
           "B[1,1,1](2)",              //
           "B[0,0](3)",                // one-slot band with no crossing
           "B[1,-1](2)",               // mixed sign weights
           "B[1,0](1)",                // bare crossing outside a jewel
           "B[1,0](J{J(3,2)}(1,1,1,1))",  // closed jewel below the root
           "J{J(3,2)}(1,1,1)",         // wrong filling count
           "J{nope}(1)",               // unknown template
           "J{J(30,30)}(1)",           //
           "N 3",                      // pole without a sign
           "3 x",                      // trailing input
       })
    CHECK_THROWS_AS(parse_tangle(w), tangle_error);
}

TEST_CASE("continued fractions translate to plumbing words") {
  CHECK(parse_tangle("C(1,2)") == parse_tangle("P(1,-2)"));
  CHECK(parse_tangle("C(2,2)") == parse_tangle("P(2,-2)"));
  CHECK(parse_tangle("C(4,-2,2,-4,2)") == parse_tangle("P(4,2,2,4,2)"));
}

TEST_CASE("renders of small chains") {
  TangleExpr c12 = parse_tangle("C(1,2)");
  Diagram R = render(c12);
  CHECK(R.nv == 3);
  CHECK(leg_count(R) == 4);
  CHECK(crossing_total(c12) == 3);

  // numerator closure of a bare twist row is the torus row diagram
  Diagram t3 = close(twist(3), Closure::numerator);
  Diagram tor = torus_row(3);
  CHECK(iso_exists(t3, tor, false, false));
  CHECK(iso_exists(t3, tor, true, true));
  CHECK_FALSE(iso_exists(t3, tor, false, true));
  CHECK_FALSE(iso_exists(t3, tor, true, false));
  // and the diagram is chiral as a flagged map
  CHECK_FALSE(iso_exists(t3, mirror(t3), false, false));
  CHECK_FALSE(iso_exists(t3, mirror(t3), true, true));

  // N(C(1,2)) is the mirror trefoil of the all-over row
  Diagram tri = close(c12, Closure::numerator);
  CHECK(crossing_count(tri) == 3);
  CHECK(normalized_bracket(tri) == lau_conj(normalized_bracket(tor)));
  CHECK(signature(tri) == -2);
  CHECK(signature(tor) == 2);

  // denominator closure of a twist row unknots crossing by crossing
  for (int n : {2, 5}) {
    Diagram D = close(twist(n), Closure::denominator);
    CHECK(crossing_count(D) == n);
    CHECK(component_count(D) == 1);
    CHECK((int)nugatory_crossings(D).size() == n);
  }
}

TEST_CASE("closures of rewrite pairs are the same knot") {
  auto N = [](const std::string& w) { return close(parse_tangle(w), Closure::numerator); };
  CHECK(same_knot(N("P(3,-3,2,-2)"), N("P(4,2,2,4,2)")));
  CHECK(same_knot(N("P(3,-1,3,-2)"), N("P(4,4,-2)")));
  for (int b = 2; b <= 5; ++b) {
    std::string twos = "P(2";
    for (int i = 1; i < b; ++i) twos += ",2";
    twos += ")";
    CHECK(same_knot(N("P(1," + std::to_string(-b) + ")"), N(twos)));
  }
}

TEST_CASE("transforms compose like the Klein four group") {
  std::mt19937 rng(5);
  std::vector<TangleExpr> pool = {parse_tangle("C(1,2)"),
                                  parse_tangle("B[0,0,0,0](C(1,2),C(1,2),C(3))"),
                                  parse_tangle("N- B[2,1,0](C(1,2),P(2,3))")};
  for (int i = 0; i < 10; ++i) pool.push_back(rand_tangle(rng, 2));
  auto tr = [](const TangleExpr& F, Transform t) { return transform_tangle(F, t); };
  for (const TangleExpr& F : pool) {
    CHECK(tr(tr(F, Transform::h), Transform::h) == F);
    CHECK(tr(tr(F, Transform::v), Transform::v) == F);
    CHECK(tr(tr(F, Transform::star), Transform::star) == F);
    CHECK(tr(tr(F, Transform::h), Transform::v) == tr(F, Transform::star));
    CHECK(tr(tr(F, Transform::v), Transform::h) == tr(F, Transform::star));
  }

  // pole axis flips under h and star, stays put under v
  CHECK(tr(parse_tangle("N+ 3"), Transform::h) == parse_tangle("S+ 3"));
  CHECK(tr(parse_tangle("N+ 3"), Transform::v) == parse_tangle("N+ 3"));
  CHECK(tr(parse_tangle("N- 3"), Transform::star) == parse_tangle("S- 3"));

  TangleExpr J = parse_tangle("J{J(3,2)}(1,1,1,1)");
  CHECK_THROWS_AS(transform_tangle(J, Transform::h), tangle_error);
  CHECK_THROWS_AS(transform_tangle(J, Transform::add_north), tangle_error);
}

TEST_CASE("transforms act on renders as reflections") {
  // h mirrors across the horizontal axis (legs NE<->SE, NW<->SW), v across the
  // vertical axis, star is the half turn.  Reflections reverse the rotation
  // order and flip every crossing; the half turn does neither.
  struct Geo {
    Transform t;
    std::array<int, 4> p;
    bool refl, mir;
  };
  const Geo geos[3] = {{Transform::h, {3, 2, 1, 0}, true, true},
                       {Transform::v, {1, 0, 3, 2}, true, true},
                       {Transform::star, {2, 3, 0, 1}, false, false}};
  std::mt19937 rng(11);
  std::vector<TangleExpr> pool = {parse_tangle("P(1,-2)"),
                                  parse_tangle("B[0,0,0,0](P(1,-2),P(1,-2),3)"),
                                  parse_tangle("B[2,1,0](P(1,-2),P(2,3))"),
                                  parse_tangle("N+ P(2,2)")};
  for (int i = 0; i < 8; ++i) pool.push_back(rand_tangle(rng, 2));
  for (const Geo& g : geos)
    for (const TangleExpr& F : pool) {
      Diagram A = render(transform_tangle(F, g.t));
      Diagram B = relabel_legs(render(F), g.p);
      CHECK(iso_exists(A, B, g.refl, g.mir));
    }
}

TEST_CASE("canonical form is idempotent and flype-stable") {
  TangleExpr C = canonicalize(parse_tangle("B[2,1,0](C(1,2),P(2,3))"));
  CHECK(C.weights == std::vector<int>{3, 0, 0});
  CHECK(tangle_word(C) == "B[3,0,0](P(1,-2),P(2,3))");

  std::mt19937 rng(17);
  for (int it = 0; it < 25; ++it) {
    TangleExpr F = rand_tangle(rng, 2);
    TangleExpr K = canonicalize(F);
    CHECK(canonicalize(K) == K);
    TangleExpr cur = F;
    for (int m = 0; m < 5; ++m) {
      auto mv = pick_move(cur, rng);
      if (!mv) break;
      cur = apply_flypes(cur, {*mv});
    }
    CHECK(canonicalize(cur) == K);
    if (crossing_total(F) <= 18) {
      CHECK(bracket(close(F, Closure::numerator)) == bracket(close(cur, Closure::numerator)));
      CHECK(bracket(close(F, Closure::denominator)) ==
            bracket(close(cur, Closure::denominator)));
    }
  }

  // one crossing walks across the slot and flips it over
  CHECK(equivalent(parse_tangle("B[1,1](C(1,2))"), parse_tangle("B[2,0](*C(1,2))"),
                   EqMode::flype));

  TangleExpr J = parse_tangle("J{J(3,2)}(1,C(1,2),1,1)");
  J.turns = {1, 0, 0, 0};
  CHECK_THROWS_AS(canonicalize(J), tangle_error);
  CHECK_THROWS_AS(tangle_word(J), tangle_error);
}

TEST_CASE("equivalence modes") {
  for (const char* w : {"C(3)", "C(1,2)", "P(3,-3,2,-2)"}) {
    TangleExpr F = parse_tangle(w);
    CHECK(equivalent(F, F, EqMode::flype));
    CHECK(equivalent(F, F, EqMode::h));
    CHECK(equivalent(F, F, EqMode::v));
    CHECK(equivalent(F, F, EqMode::star));
  }
  CHECK_FALSE(equivalent(parse_tangle("P(2,3)"), parse_tangle("P(3,2)"), EqMode::flype));

  TangleExpr M = parse_tangle("B[0,0,0,0](C(1,2),C(1,2),C(3))");
  CHECK(equivalent(M, M, EqMode::h));
  CHECK_FALSE(equivalent(M, M, EqMode::v));
  CHECK_FALSE(equivalent(M, M, EqMode::star));

  // wrapping a pole around F turns h-symmetry of F into star-symmetry
  TangleExpr G1 = parse_tangle("B[0,0,0](B[0,0,0,0](C(1,2),C(1,2),C(3)),C(3))");
  for (const TangleExpr& G : {parse_tangle("C(1,2)"), M, G1}) {
    TangleExpr P = transform_tangle(G, Transform::add_north);
    CHECK(equivalent(G, G, EqMode::h) == equivalent(P, P, EqMode::star));
  }

  // jewel fills compare through the symmetry table
  TangleExpr ja = parse_tangle("J{J(3,2)}(1,1,1,1)");
  CHECK(equivalent(ja, ja, EqMode::flype));
  CHECK_FALSE(
      equivalent(ja, parse_tangle("J{J(3,2)}(2,1,1,1)"), EqMode::flype));
  // with an incompletely tabulated template a failed match is no verdict
  TangleExpr j6 = parse_tangle("J{6*}(1,1,1,1,1,1)");
  CHECK(equivalent(j6, j6, EqMode::flype));
  CHECK_THROWS_AS(equivalent(j6, parse_tangle("J{6*}(2,1,1,1,1,1)"), EqMode::flype),
                  tangle_error);
}

TEST_CASE("complexity counts boxes and jewels") {
  CHECK(complexity(parse_tangle("P(3,-3,2,-2)")) == 1);
  CHECK(complexity(parse_tangle("N+ C(3)")) == 1);
  CHECK(rational(parse_tangle("N+ C(3)")));
  TangleExpr M = parse_tangle("B[0,0,0,0](C(1,2),C(1,2),C(3))");
  CHECK_FALSE(rational(M));
  CHECK(complexity(M) == 4);
  CHECK(complexity(band({1, 0}, {M})) == 5);
  CHECK(complexity(parse_tangle("J{6*}(1,1,1,1,1,1)")) == 7);
  CHECK(crossing_total(M) == 9);
}

TEST_CASE("jewel templates") {
  for (int u = 2; u <= 4; ++u)
    for (int v = 2; v <= 6; ++v) {
      std::string nm = "J(" + std::to_string(u) + "," + std::to_string(v) + ")";
      const JewelTemplate& T = jewel_template(nm);
      CHECK(T.holes == (u - 1) * v);
      CHECK((int)T.syms.size() == 4 * v);
      // adjacency is a fixed-point-free pairing of the hole corners
      REQUIRE((int)T.adj.size() == 4 * T.holes);
      for (int p = 0; p < 4 * T.holes; ++p) {
        CHECK(T.adj[p] != p);
        CHECK(T.adj[T.adj[p]] == p);
      }
      // square patterns admit quarter turns the fillings cannot follow
      CHECK(T.syms_complete == (u != v));
    }
  CHECK(jewel_template("6*").name == jewel_template("J(3,3)").name);

  // the tables are dihedral: cyclic shifts (h-decorated when odd) and
  // reversals (star when odd, v when even)
  for (int v = 2; v <= 3; ++v) {
    const JewelTemplate& T = jewel_template("J(3," + std::to_string(v) + ")");
    int n = 2 * v;
    std::vector<JewelSym> want;
    for (int s = 0; s < 2; ++s)
      for (int k = 0; k < n; ++k) {
        JewelSym g;
        g.perm.resize(n);
        g.t.assign(n, (k % 2) + 2 * s);
        g.mirror = (k % 2) != s;
        for (int i = 0; i < n; ++i) g.perm[i] = ((s ? k - i + n : k + i)) % n;
        want.push_back(g);
      }
    REQUIRE(T.syms.size() == want.size());
    for (const JewelSym& g : want) CHECK(sym_in(T.syms, g));
  }

  // each table is a group: identity present, closed under composition
  for (const char* nm : {"J(3,2)", "J(2,3)", "J(4,2)", "J(3,3)"}) {
    const JewelTemplate& T = jewel_template(nm);
    JewelSym id;
    id.perm.resize(T.holes);
    id.t.assign(T.holes, 0);
    for (int i = 0; i < T.holes; ++i) id.perm[i] = i;
    CHECK(sym_in(T.syms, id));
    for (const JewelSym& a : T.syms)
      for (const JewelSym& b : T.syms) CHECK(sym_in(T.syms, compose_sym(a, b)));
  }
}

TEST_CASE("jewel symmetries act on renders") {
  static const Transform tc[4] = {Transform::h, Transform::h, Transform::v, Transform::star};
  for (const char* nm : {"J(3,2)", "J(3,3)", "J(4,2)"}) {
    const JewelTemplate& T = jewel_template(nm);
    std::mt19937 rng(7);
    std::vector<TangleExpr> fills;
    for (int i = 0; i < T.holes; ++i) {
      int r = rng() % 3;
      fills.push_back(r == 0 ? twist(1) : r == 1 ? parse_tangle("C(1,2)") : twist(-2));
    }
    Diagram A = render(jewel(nm, fills));
    for (const JewelSym& g : T.syms) {
      std::vector<TangleExpr> im(T.holes, twist(1));
      for (int i = 0; i < T.holes; ++i) {
        TangleExpr s = fills[i];
        if (g.t[i]) s = transform_tangle(s, tc[g.t[i]]);
        im[g.perm[i]] = s;
      }
      Diagram B = render(jewel(nm, im));
      CHECK(iso_exists(A, B, g.mirror, g.mirror));
    }
  }
}

TEST_CASE("the smallest turban is the figure eight pattern") {
  const JewelTemplate& T = jewel_template("J(3,2)");
  std::vector<TangleExpr> fills(T.holes, twist(1));
  Diagram A = render(jewel("J(3,2)", fills));
  CHECK(crossing_count(A) == 4);
  CHECK(planar(A));
  repaint_alternating(A);
  CHECK(alternating(A));

  Diagram f8 = close(parse_tangle("C(2,2)"), Closure::numerator);
  repaint_alternating(f8);
  for (int r = 0; r < 2; ++r)
    for (int m = 0; m < 2; ++m) CHECK(iso_exists(A, f8, r, m));
  CHECK(iso_exists(A, mirror(A), false, true));
}

TEST_CASE("flype moves") {
  // a band flype carries one crossing over the slot and flips the slot
  TangleExpr F = parse_tangle("B[1,1](C(1,2))");
  CHECK(apply_flypes(F, {{{}, 1, true}}) ==
        band({2, 0}, {transform_tangle(parse_tangle("C(1,2)"), Transform::v)}));
  // a pole flype swings the crossing to the other axis end
  CHECK(tangle_word(apply_flypes(parse_tangle("N+ P(2,2)"), {{{}, 0, false}})) ==
        "S+ B[0,2](2)");

  CHECK_THROWS_AS(apply_flypes(twist(3), {{{}, 0, false}}), tangle_error);
  CHECK_THROWS_AS(apply_flypes(F, {{{3}, 0, false}}), tangle_error);
  CHECK_THROWS_AS(apply_flypes(F, {{{}, 2, false}}), tangle_error);
  CHECK_THROWS_AS(apply_flypes(F, {{{}, 1, false}}), tangle_error);  // off the end
  TangleExpr Z = parse_tangle("B[0,2](3)");
  CHECK_THROWS_AS(apply_flypes(Z, {{{}, 0, false}}), tangle_error);  // nothing at 0
}
