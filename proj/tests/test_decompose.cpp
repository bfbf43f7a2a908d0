#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "altk/decompose.hpp"
#include "altk/equivalence.hpp"
#include "altk/projection.hpp"
#include "altk/tangle.hpp"

using namespace altk;

namespace {

Diagram closed(const char* word) {
  return close(parse_tangle(word), Closure::numerator);
}

Diagram closed_jewel(const std::string& tpl, std::vector<TangleExpr> fills) {
  Diagram d = close(jewel(tpl, std::move(fills)), Closure::numerator);
  repaint_alternating(d);
  return d;
}

std::vector<TangleExpr> unit_fills(int holes) {
  std::vector<TangleExpr> f;
  for (int h = 0; h < holes; ++h) f.push_back(twist(1));
  return f;
}

// Brute-force enumeration of circle classes: pick four distinct edges, try
// to chain them through four pairwise distinct faces (crossing an edge moves
// between its two sides, so the face sequence is forced once the first face
// is chosen), then record the crossing partition left by deleting the four
// edges.  Completely independent of the route-walking enumerator.
std::set<std::vector<char>> brute_circles(const Diagram& D) {
  int nf = 0;
  auto face = faces(D, &nf);
  std::vector<int> edge;  // one dart per edge
  for (int d = 0; d < D.darts(); ++d)
    if (d < D.theta[d]) edge.push_back(d);
  int m = (int)edge.size();
  auto sides = [&](int e) {
    return std::array<int, 2>{face[edge[e]], face[D.theta[edge[e]]]};
  };
  auto partition_of = [&](const std::array<int, 4>& cut) {
    std::vector<int> parent(D.nv);
    for (int v = 0; v < D.nv; ++v) parent[v] = v;
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (int d = 0; d < D.darts(); ++d) {
      if (d >= D.theta[d]) continue;
      bool iscut = false;
      for (int e : cut) iscut |= (edge[e] == d);
      if (!iscut) parent[find(d / 4)] = find(D.theta[d] / 4);
    }
    std::vector<char> inside(D.nv, 0);
    int zero = find(0), other = -1;
    for (int v = 0; v < D.nv; ++v) {
      int r = find(v);
      if (r == zero) continue;
      if (other == -1) other = r;
      REQUIRE(r == other);  // a circle leaves exactly two sides
      inside[v] = 1;
    }
    REQUIRE(other != -1);
    return inside;
  };
  std::set<std::vector<char>> classes;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int c = b + 1; c < m; ++c)
        for (int d = c + 1; d < m; ++d) {
          std::array<std::array<int, 4>, 3> orders = {
              {{a, b, c, d}, {a, b, d, c}, {a, c, b, d}}};
          bool found = false;
          for (const auto& ord : orders) {
            for (int first = 0; first < 2 && !found; ++first) {
              std::array<int, 4> fseq{};
              fseq[0] = sides(ord[0])[first];
              bool ok = true;
              for (int i = 1; i < 4 && ok; ++i) {
                auto s = sides(ord[i]);
                // enter edge i from fseq[i-1], leave on its other side
                if (s[0] == fseq[i - 1])
                  fseq[i] = s[1];
                else if (s[1] == fseq[i - 1])
                  fseq[i] = s[0];
                else
                  ok = false;
              }
              ok = ok && fseq[3] != fseq[0] &&
                   (sides(ord[0])[0] == fseq[3] || sides(ord[0])[1] == fseq[3]);
              // the chain must close back through edge ord[0]
              ok = ok && (sides(ord[0])[0] + sides(ord[0])[1] ==
                          fseq[3] + fseq[0]);
              for (int i = 0; i < 4 && ok; ++i)
                for (int j = i + 1; j < 4; ++j) ok &= (fseq[i] != fseq[j]);
              if (ok) found = true;
            }
            if (found) break;
          }
          if (found) classes.insert(partition_of({a, b, c, d}));
        }
  return classes;
}

std::set<std::vector<char>> impl_circles(const Diagram& D) {
  std::set<std::vector<char>> classes;
  for (const auto& C : haseman_circles(D)) classes.insert(C.inside);
  return classes;
}

// Random plumbing trees compatible with the alternating rendering: a band's
// weights all carry the node's phase and every slot flips it, crossingless
// hubs included.
TangleExpr random_plumbing(std::mt19937& rng, int depth, int phase, int& budget) {
  auto pick = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  if (depth >= 3 || budget <= 4 || pick(0, 2) == 0) {
    int n = pick(2, 4);
    budget -= n;
    return twist(phase * n);
  }
  if (pick(0, 4) == 0) {
    std::vector<TangleExpr> s;
    for (int i = 0; i < 3; ++i)
      s.push_back(random_plumbing(rng, depth + 1, -phase, budget));
    return band({0, 0, 0, 0}, std::move(s));
  }
  int k = pick(1, 3);
  std::vector<int> w(k + 1, 0);
  bool any = false;
  for (int i = 0; i <= k; ++i)
    if (pick(0, 1)) {
      w[i] = phase * pick(2, 3);
      budget -= std::abs(w[i]);
      any = true;
    }
  if (!any) {
    int i = pick(0, k);
    w[i] = phase * pick(2, 3);
    budget -= std::abs(w[i]);
  }
  std::vector<TangleExpr> s;
  for (int i = 0; i < k; ++i)
    s.push_back(random_plumbing(rng, depth + 1, -phase, budget));
  return band(std::move(w), std::move(s));
}

void predicted_tree(const TangleExpr& F, LabeledTree& T, int parent) {
  int id = (int)T.label.size();
  int w = F.n;
  if (F.kind == NodeKind::band) {
    w = 0;
    for (int x : F.weights) w += x;
  }
  T.label.push_back("B:" + std::to_string(w));
  if (parent >= 0) T.edges.push_back({parent, id});
  for (const TangleExpr& S : F.slots) predicted_tree(S, T, id);
}

std::string predicted_canon(const TangleExpr& F) {
  LabeledTree T;
  predicted_tree(F, T, -1);
  return tree_canonical(T);
}

// All flype moves legal on the current tree, as (path, pos, leftward).
void legal_flypes(const TangleExpr& F, std::vector<int>& path,
                  std::vector<FlypeMove>& out) {
  if (F.kind == NodeKind::band) {
    int k = (int)F.slots.size();
    for (int pos = 0; pos <= k; ++pos) {
      if (F.weights[pos] == 0) continue;
      if (pos > 0) out.push_back({path, pos, true});
      if (pos < k) out.push_back({path, pos, false});
    }
  }
  for (size_t i = 0; i < F.slots.size(); ++i) {
    path.push_back((int)i);
    legal_flypes(F.slots[i], path, out);
    path.pop_back();
  }
}

}  // namespace

TEST_CASE("circle classes match a brute force edge-cut search") {
  std::vector<Diagram> corpus;
  corpus.push_back(closed("C(5)"));
  corpus.push_back(closed("C(2,2)"));
  corpus.push_back(closed("C(4,2)"));
  corpus.push_back(close(band({0, 0, 0, 0},
                              {parse_tangle("C(1,2)"), parse_tangle("C(1,2)"),
                               parse_tangle("C(3)")}),
                         Closure::numerator));
  corpus.push_back(close(band({2, 0}, {band({-3, 0}, {twist(2)})}),
                         Closure::numerator));
  corpus.push_back(closed_jewel("6*", unit_fills(6)));
  std::mt19937 rng(20411);
  for (int i = 0; i < 3; ++i) {
    int budget = 18;
    corpus.push_back(
        close(random_plumbing(rng, 0, 1, budget), Closure::numerator));
  }
  for (const Diagram& D : corpus) CHECK(impl_circles(D) == brute_circles(D));
}

TEST_CASE("routes follow the documented face chain") {
  for (const Diagram& D : {closed("C(2,2)"),
                           close(band({0, 0, 0, 0},
                                      {parse_tangle("C(1,2)"),
                                       parse_tangle("C(1,2)"),
                                       parse_tangle("C(3)")}),
                                 Closure::numerator)}) {
    auto face = faces(D);
    for (const auto& C : haseman_circles(D)) {
      std::set<int> edges, fs;
      for (int i = 0; i < 4; ++i) {
        int d = C.route[i];
        edges.insert(std::min(d, D.theta[d]));
        fs.insert(face[C.route[(i + 1) % 4]]);
        CHECK(face[C.route[(i + 1) % 4]] == face[D.theta[d]]);
      }
      CHECK(edges.size() == 4);
      CHECK(fs.size() == 4);
      int in = C.inside_count();
      CHECK(in >= 1);
      CHECK(in <= D.nv - 1);
    }
  }
}

TEST_CASE("class counts on anchor diagrams") {
  CHECK(haseman_circles(closed("C(5)")).size() == 10);
  CHECK(haseman_circles(closed("C(2,2)")).size() == 5);
  CHECK(haseman_circles(closed("C(4,2)")).size() == 12);
  CHECK(haseman_circles(closed_jewel("6*", unit_fills(6))).size() == 6);
  CHECK(haseman_circles(closed_jewel("J(3,4)", unit_fills(8))).size() == 8);
}

TEST_CASE("torus rows and closed jewels have an empty family") {
  for (int m = 2; m <= 7; ++m) {
    Diagram d = close(twist(m), Closure::numerator);
    CHECK(canonical_family(d).empty());
    auto T = structure_tree(d);
    REQUIRE(T.pieces.size() == 1);
    CHECK(T.pieces[0].kind == PieceKind::band);
    CHECK(T.pieces[0].weight == m);
    CHECK(T.arborescent);
  }
  for (const char* tpl : {"6*", "J(3,3)", "J(3,4)", "J(4,3)"}) {
    JewelTemplate J = jewel_template(tpl);
    Diagram d = closed_jewel(tpl, unit_fills(J.holes));
    CHECK(canonical_family(d).empty());
    auto T = structure_tree(d);
    REQUIRE(T.pieces.size() == 1);
    CHECK(T.pieces[0].kind == PieceKind::jewel);
    CHECK_FALSE(T.arborescent);
  }
  // J(3,3) is the octahedron: same closed diagram as 6* up to relabeling
  CHECK(tree_canon(structure_tree(closed_jewel("J(3,3)", unit_fills(6)))) ==
        tree_canon(structure_tree(closed_jewel("6*", unit_fills(6)))));
}

TEST_CASE("plumbing closures read back their own tree") {
  std::mt19937 rng(77013);
  for (int it = 0; it < 40; ++it) {
    int budget = 26;
    TangleExpr F = random_plumbing(rng, 0, it % 2 ? 1 : -1, budget);
    Diagram d = close(F, Closure::numerator);
    CAPTURE(tangle_word(F));
    REQUIRE(alternating(d));
    auto T = structure_tree(d);
    CHECK(T.arborescent);
    CHECK(tree_canon(T) == predicted_canon(F));
    int total = 0;
    for (const auto& P : T.pieces) total += (int)P.crossings.size();
    CHECK(total == d.nv);
  }
}

TEST_CASE("the labeled tree is a flype invariant") {
  std::mt19937 rng(90217);
  for (int it = 0; it < 20; ++it) {
    int budget = 22;
    TangleExpr F = random_plumbing(rng, 0, 1, budget);
    std::string want = tree_canon(structure_tree(close(F, Closure::numerator)));
    for (int script = 0; script < 4; ++script) {
      TangleExpr G = F;
      int moves = 1 + (int)(rng() % 6);
      for (int k = 0; k < moves; ++k) {
        std::vector<FlypeMove> legal;
        std::vector<int> path;
        legal_flypes(G, path, legal);
        if (legal.empty()) break;
        G = apply_flypes(G, {legal[rng() % legal.size()]});
      }
      Diagram d = close(G, Closure::numerator);
      CAPTURE(tangle_word(G));
      REQUIRE(alternating(d));
      CHECK(tree_canon(structure_tree(d)) == want);
    }
  }
}

TEST_CASE("rational arms expand to their continued fraction chains") {
  Diagram mont = close(band({0, 0, 0, 0},
                            {parse_tangle("C(1,2)"), parse_tangle("C(1,2)"),
                             parse_tangle("C(3)")}),
                       Closure::numerator);
  CHECK(tree_canon(structure_tree(mont)) ==
        "(B:0(B:1(B:-2))(B:1(B:-2))(B:3))");
  CHECK(tree_canon(structure_tree(closed("C(2,2)"))) == "E(B:-2)(B:2)");
  Diagram nested = close(band({2, 0}, {band({-3, 0}, {twist(2)})}),
                         Closure::numerator);
  CHECK(tree_canon(structure_tree(nested)) == "(B:-3(B:2)(B:2))");
}

TEST_CASE("filled jewels cut into a jewel piece with pendant arms") {
  std::vector<TangleExpr> fills;
  fills.push_back(parse_tangle("C(2,2)"));
  for (int h = 1; h < 6; ++h) fills.push_back(twist(1));
  Diagram d = closed_jewel("6*", std::move(fills));
  auto T = structure_tree(d);
  REQUIRE(T.circles.size() == 2);
  REQUIRE(T.pieces.size() == 3);
  int jewels = 0, bands = 0;
  for (const auto& P : T.pieces) {
    if (P.kind == PieceKind::jewel) {
      ++jewels;
      CHECK(P.crossings.size() == 5);
      CHECK(P.boundary.size() == 1);
      CHECK(piece_label(P).substr(0, 2) == "J:");
    } else {
      ++bands;
      CHECK(std::abs(P.weight) == 2);
    }
  }
  CHECK(jewels == 1);
  CHECK(bands == 2);
  CHECK_FALSE(T.arborescent);
}

TEST_CASE("explicit families expose the piece trichotomy") {
  Diagram d = closed("C(2,2)");
  auto all = haseman_circles(d);
  auto one_crossing = std::find_if(all.begin(), all.end(), [](const auto& C) {
    return C.inside_count() == 1;
  });
  REQUIRE(one_crossing != all.end());
  std::vector<HasemanCircle> fam = {*one_crossing};
  auto pieces = cut_pieces(d, fam);
  REQUIRE(pieces.size() == 2);
  for (const auto& P : pieces) {
    if (P.kind == PieceKind::singleton) {
      CHECK(P.crossings.size() == 1);
      CHECK(classify_piece(d, fam, P) == PieceKind::singleton);
    } else {
      // three crossings against one cap: still decomposable, so the strict
      // trichotomy refuses it
      CHECK_THROWS_AS(classify_piece(d, fam, P), decompose_error);
    }
  }
  // ...and the canonical family never isolates a single crossing
  for (const auto& C : canonical_family(d)) CHECK(C.inside_count() > 1);
  // on a canonical family the stored kind and the trichotomy agree
  Diagram mont = close(band({0, 0, 0, 0},
                            {parse_tangle("C(1,2)"), parse_tangle("C(1,2)"),
                             parse_tangle("C(3)")}),
                       Closure::numerator);
  auto mfam = canonical_family(mont);
  for (const auto& P : cut_pieces(mont, mfam))
    CHECK(classify_piece(mont, mfam, P) == P.kind);
}

TEST_CASE("inputs outside the alternating prime world are refused") {
  CHECK_THROWS_WITH_AS(haseman_circles(closed("P(1,3)")),
                       "diagram not alternating", decompose_error);
  CHECK_THROWS_WITH_AS(canonical_family(close(twist(1), Closure::numerator)),
                       "diagram not reduced", decompose_error);
  CHECK_THROWS_WITH_AS(canonical_family(render(twist(3))),
                       "diagram has boundary legs", decompose_error);
  // connected sum of two trefoil rows across a two-edge cut
  Diagram s;
  for (int v = 0; v < 6; ++v) s.add_vertex();
  for (int v = 0; v < 6; ++v) s.set_over(v, true);
  s.join(0, 5);
  s.join(4, 9);
  s.join(3, 6);
  s.join(7, 10);
  s.join(8, 1);
  s.join(12, 17);
  s.join(16, 21);
  s.join(15, 18);
  s.join(19, 22);
  s.join(20, 13);
  s.join(2, 23);
  s.join(11, 14);
  REQUIRE(is_closed(s));
  REQUIRE(connected(s));
  REQUIRE(planar(s));
  CHECK_THROWS_WITH_AS(canonical_family(s), "diagram not prime",
                       decompose_error);
}

TEST_CASE("dot rendering mentions every piece") {
  auto T = structure_tree(close(band({0, 0, 0, 0},
                                     {parse_tangle("C(1,2)"),
                                      parse_tangle("C(1,2)"),
                                      parse_tangle("C(3)")}),
                                Closure::numerator));
  std::string dot = tree_dot(T);
  CHECK(dot.find("B:a=0") != std::string::npos);
  CHECK(dot.find("B:a=3") != std::string::npos);
  CHECK(dot.find("c0") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '\n') >=
        (long)(T.pieces.size() + T.circles.size()));
}
