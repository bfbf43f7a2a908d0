#include "altk/generators.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <queue>
#include <set>
#include <string>

namespace altk {

namespace {

int append_diagram(Diagram& dst, const Diagram& src) {
  int off = dst.darts();
  for (int d = 0; d < src.darts(); ++d) {
    int t = src.theta[d];
    dst.theta.push_back(t >= 0 ? t + off : t);
    dst.over.push_back(src.over[d]);
  }
  dst.cap.insert(dst.cap.end(), src.cap.begin(), src.cap.end());
  dst.nv += src.nv;
  dst.loose_loops += src.loose_loops;
  return off;
}

// Boundary legs of a rendered tangle, unmarked so the darts can be joined.
std::array<int, 4> take_legs(Diagram& D) {
  std::array<int, 4> leg = {-1, -1, -1, -1};
  for (int d = 0; d < D.darts(); ++d) {
    int t = D.theta[d];
    if (t >= -4 && t <= -1) {
      leg[~t] = d;
      D.theta[d] = Diagram::unset;
    }
  }
  for (int c = 0; c < 4; ++c)
    if (leg[c] < 0) throw generator_error("tangle is missing a boundary leg");
  return leg;
}

// reflect() relabels slot s to (4-s)%4; this lifts a dart through it
int reflected(int d) { return 4 * (d / 4) + (4 - d % 4) % 4; }

// north-south flip: the dart relabeling of a reflection through the
// horizontal axis (slots 0<->3, 1<->2)
int flipped_ns(int d) { return 4 * (d / 4) + 3 - d % 4; }

// The same tangle diagram relabeled dart by dart.  Unlike re-rendering a
// transformed expression this keeps the drawing itself, so assemblies that
// need an exact symmetry stay exactly symmetric.
Diagram relabel_darts(const Diagram& A, int (*m)(int)) {
  Diagram B;
  B.nv = A.nv;
  B.loose_loops = A.loose_loops;
  B.cap = A.cap;
  B.theta.assign(A.darts(), Diagram::unset);
  B.over.assign(A.darts(), 0);
  for (int d = 0; d < A.darts(); ++d) {
    int t = A.theta[d];
    B.theta[m(d)] = t >= 0 ? m(t) : t;
    B.over[m(d)] = A.over[d];
  }
  return B;
}

// Starting at a boundary leg, follow the strand to the leg where it exits.
int peer_leg(const Diagram& D, int d0) {
  int d = d0;
  for (;;) {
    int t = D.theta[opp(d)];
    if (t == Diagram::unset) throw generator_error("strand runs off an unjoined dart");
    if (t < 0) return ~t;
    d = t;
  }
}

GeneratedKnot finish(Diagram D, std::string name, std::string label,
                     std::optional<TangleExpr> core) {
  check_valid(D);
  if (!is_closed(D) || !connected(D))
    throw generator_error(name + ": assembly left an open or split diagram");
  if (!planar(D)) throw generator_error(name + ": diagram is not planar");
  if (component_count(D) != 1) throw generator_error(name + " closes into a link");
  if (!alternating(D)) throw generator_error(name + " is not alternating");
  if (!nugatory_crossings(D).empty()) throw generator_error(name + " is not reduced");
  if (!prime(D)) throw generator_error(name + " is not prime");
  GeneratedKnot K;
  K.diagram = std::move(D);
  K.name = std::move(name);
  K.label = std::move(label);
  K.core = std::move(core);
  return K;
}

// ---- flype orbit scan for the splice condition ------------------------------

void collect_flypes(const TangleExpr& F, std::vector<int>& path,
                    std::vector<FlypeMove>& out) {
  if (F.kind == NodeKind::pole) {
    out.push_back({path, 0, false});
  } else if (F.kind == NodeKind::band) {
    int k = (int)F.slots.size();
    for (int pos = 0; pos <= k; ++pos) {
      if (F.weights[pos] == 0) continue;
      if (pos > 0) out.push_back({path, pos, true});
      if (pos < k) out.push_back({path, pos, false});
    }
  }
  for (size_t i = 0; i < F.slots.size(); ++i) {
    path.push_back((int)i);
    collect_flypes(F.slots[i], path, out);
    path.pop_back();
  }
}

// True when some flype image of F is syntactically equal to its own half
// turn, i.e. the half-turn symmetry is visible on one of F's diagrams.
bool star_visible_in_orbit(const TangleExpr& F) {
  std::set<std::string> seen;
  std::queue<TangleExpr> work;
  auto push = [&](const TangleExpr& X) {
    if (seen.insert(tangle_word(X)).second) work.push(X);
  };
  push(F);
  while (!work.empty()) {
    if (seen.size() > 4096) throw generator_error("flype orbit too large to scan");
    TangleExpr X = std::move(work.front());
    work.pop();
    if (X == transform_tangle(X, Transform::star)) return true;
    std::vector<FlypeMove> moves;
    std::vector<int> path;
    collect_flypes(X, path, moves);
    for (const FlypeMove& mv : moves) push(apply_flypes(X, {mv}));
  }
  return false;
}

// ---- named fillings ----------------------------------------------------------

void require_filling(const TangleExpr& G) {
  if (!opposite_strands(G))
    throw generator_error("filling must join opposite boundary points");
  if (equivalent(G, G, EqMode::v))
    throw generator_error("filling is flype-equivalent to its vertical flip");
}

void require_splice(const TangleExpr& F) {
  if (!equivalent(F, F, EqMode::star))
    throw generator_error("splice tangle is not flype-equivalent to its half turn");
  if (star_visible_in_orbit(F))
    throw generator_error("a flype image of the splice tangle equals its own half turn");
}

// Fill the holes of a jewel pattern with literal copies of one rendered
// tangle: plain copies in the odd holes, north-south flipped relabels in the
// even ones.  take_legs must already have cleared G0's marks.  Returns the
// dart feeding each hole's compass slot.
std::vector<std::array<int, 4>> place_fills(Diagram& D, const JewelTemplate& T,
                                            const Diagram& G0,
                                            const std::array<int, 4>& leg) {
  std::vector<std::array<int, 4>> port(T.holes);
  Diagram flip = relabel_darts(G0, flipped_ns);
  for (int h = 0; h < T.holes; ++h) {
    bool flip_this = h % 2 == 0;
    int off = append_diagram(D, flip_this ? flip : G0);
    for (int c = 0; c < 4; ++c)
      port[h][c] = (flip_this ? flipped_ns(leg[3 - c]) : leg[c]) + off;
  }
  return port;
}

// J(3,v) filled with G away from the centre and its flipped copy towards it;
// the meander circle separates the two rings.  The copies are dart
// relabelings of one drawing, so the reflection through the meander sphere
// is an exact dart map of the result, not just a flype class.
Diagram ringed_diagram(int v, const TangleExpr& G) {
  const JewelTemplate& T = jewel_template("J(3," + std::to_string(v) + ")");
  Diagram G0 = render(G);
  std::array<int, 4> leg = take_legs(G0);
  Diagram D;
  std::vector<std::array<int, 4>> port = place_fills(D, T, G0, leg);
  for (int a = 0; a < 4 * T.holes; ++a) {
    int b = T.adj[a];
    if (b < a) continue;
    D.join(port[a / 4][a % 4], port[b / 4][b % 4]);
  }
  repaint_alternating(D);
  return D;
}

// The J(3,2) pattern with mirror-paired hole fillings, a copy of F spliced
// across the central bigon and a reflected copy across the outer bigon.  The
// two splice sites are the fixed regions of the quarter-turn symmetry; the
// half turn maps each site to itself acting on the tangle by its half turn.
Diagram spliced_diagram(const TangleExpr& F, const TangleExpr& G) {
  const JewelTemplate& T = jewel_template("J(3,2)");
  // inner strand forms the central bigon, outer strand the one at infinity
  if (T.adj[2] != 11 || T.adj[3] != 10 || T.adj[5] != 12 || T.adj[4] != 13)
    throw generator_error("turban template changed under the splice");

  Diagram D;
  Diagram G0 = render(G);
  std::array<int, 4> leg = take_legs(G0);
  std::vector<std::array<int, 4>> port = place_fills(D, T, G0, leg);
  for (int a = 0; a < 4 * T.holes; ++a) {
    int b = T.adj[a];
    if (b < a) continue;
    bool central = (a == 2 && b == 11) || (a == 3 && b == 10);
    bool outer = (a == 5 && b == 12) || (a == 4 && b == 13);
    if (central || outer) continue;
    D.join(port[a / 4][a % 4], port[b / 4][b % 4]);
  }

  Diagram A = render(F);
  std::array<int, 4> fa = take_legs(A);
  Diagram B = reflect(A);
  std::array<int, 4> fb;
  for (int c = 0; c < 4; ++c) fb[c] = reflected(fa[c]);

  int offA = append_diagram(D, A);
  // central bigon, F with its north towards hole 0
  D.join(port[0][2], fa[1] + offA);  // h0.SW - F.NW
  D.join(fa[2] + offA, port[2][3]);  // F.SW - h2.SE
  D.join(port[2][2], fa[3] + offA);  // h2.SW - F.SE
  D.join(fa[0] + offA, port[0][3]);  // F.NE - h0.SE

  int offB = append_diagram(D, B);
  // outer bigon, the reflected copy placed by the quarter turn
  D.join(port[3][1], fb[1] + offB);  // h3.NW - B.SW
  D.join(fb[2] + offB, port[1][0]);  // B.NW - h1.NE
  D.join(port[1][1], fb[3] + offB);  // h1.NW - B.NE
  D.join(fb[0] + offB, port[3][0]);  // B.SE - h3.NE

  repaint_alternating(D);
  return D;
}

// ---- dasbach-hougardy --------------------------------------------------------

TangleExpr dh_core(const TangleExpr& F1, const TangleExpr& F2, bool extra) {
  TangleExpr body = band({0, extra ? 1 : 0, 0}, {F1, F2});
  return transform_tangle(body, Transform::add_north);
}

std::string dh_label(const TangleExpr& F1, const TangleExpr& F2, bool extra) {
  auto key = [](const std::string& a, const std::string& b, bool e) {
    return (a <= b ? a + "|" + b : b + "|" + a) + (e ? "|x" : "");
  };
  static const std::map<std::string, std::string> table = [&key] {
    auto w = [](const char* s) { return tangle_word(parse_tangle(s)); };
    std::map<std::string, std::string> m;
    m[key(w("C(1,2)"), w("C(3)"), false)] = "14-10435(a)";
    m[key(w("C(1,2)"), w("C(1,1,2)"), false)] = "16-178893(a)";
    m[key(w("C(1,2)"), w("C(2,2)"), false)] = "16-125918(a)";
    m[key(w("C(3)"), w("C(1,1,2)"), false)] = "16-223267(a)";
    m[key(w("C(3)"), w("C(2,2)"), false)] = "16-223382(a)";
    m[key(w("C(1,2)"), w("C(3)"), true)] = "16-220003(a)";
    return m;
  }();
  auto it = table.find(key(tangle_word(F1), tangle_word(F2), extra));
  return it == table.end() ? "" : it->second;
}

// Conway words C(a1,...,ak) with entries >= 1, final entry >= 2, sum c.
void rational_words(int c, std::vector<int>& acc, std::vector<std::string>& out) {
  if (c == 0) {
    if (acc.empty() || acc.back() < 2) return;
    std::string w = "C(";
    for (size_t i = 0; i < acc.size(); ++i)
      w += (i ? "," : "") + std::to_string(acc[i]);
    out.push_back(w + ")");
    return;
  }
  for (int a = 1; a <= c; ++a) {
    acc.push_back(a);
    rational_words(c - a, acc, out);
    acc.pop_back();
  }
}

std::vector<std::string> rational_words(int c) {
  std::vector<int> acc;
  std::vector<std::string> out;
  rational_words(c, acc, out);
  return out;
}

std::string spec_name(const FamilySpec& spec) {
  using Family = FamilySpec::Family;
  switch (spec.family) {
    case Family::figure8: return "figure8";
    case Family::torus2: return "torus2(" + std::to_string(spec.v) + ")";
    case Family::turban:
      return "turban(" + std::to_string(spec.u) + "," + std::to_string(spec.v) + ")";
    case Family::mirror_turban:
      return "mirror_turban(" + std::to_string(spec.v) + ", " +
             tangle_word(spec.tangles[0]) + ")";
    case Family::spliced_turban: {
      std::string s = "spliced_turban(" + tangle_word(spec.tangles[0]);
      if (spec.tangles.size() > 1) s += ", " + tangle_word(spec.tangles[1]);
      return s + ")";
    }
    case Family::dasbach_hougardy:
      return "dh(" + tangle_word(spec.tangles[0]) + ", " +
             tangle_word(spec.tangles[1]) + (spec.extra_central ? ", extra)" : ")");
  }
  throw generator_error("corrupt family spec");
}

}  // namespace

Turban turban(int u, int v) {
  if (u < 2 || v < 2) throw generator_error("turban needs u >= 2 and v >= 2");
  Turban T;
  T.pattern = &jewel_template("J(" + std::to_string(u) + "," + std::to_string(v) + ")");
  T.is_jewel = u >= 3 && v >= 3;
  T.inside_sigma.assign(T.pattern->holes, 0);
  for (int h = 0; h < T.pattern->holes; ++h)
    T.inside_sigma[h] = h % (u - 1) == 0;  // innermost braid ring
  return T;
}

bool opposite_strands(const TangleExpr& G) {
  Diagram D = render(G);
  if (leg_count(D) != 4) return false;
  std::array<int, 4> leg{};
  for (int d = 0; d < D.darts(); ++d)
    if (D.theta[d] >= -4 && D.theta[d] <= -1) leg[~D.theta[d]] = d;
  return peer_leg(D, leg[0]) == 2 && peer_leg(D, leg[1]) == 3;
}

const TangleExpr& asymmetric_filling() {
  static const TangleExpr G = [] {
    // Rational tangles never qualify: they are flype-equivalent to all their
    // half turns.  The candidates are two-arm sums; the boundary connects
    // opposite points when one arm has odd/odd fraction and the other
    // odd/even, and unequal arms break the vertical symmetry.
    const char* words[] = {
        "B[0,0,0](C(3),C(1,2))",
        "B[0,0,0](C(1,2),C(3))",
        "B[0,0,0](C(3),C(2,2))",
        "B[0,0,0](C(2,2),C(3))",
        "B[0,0,0](C(5),C(1,2))",
        "B[0,0,0](C(1,1,3),C(1,2))",
        "B[0,0,0,0](C(3),C(3),C(5))",
    };
    for (const char* w : words) {
      TangleExpr g = parse_tangle(w);
      if (opposite_strands(g) && !equivalent(g, g, EqMode::v)) return g;
    }
    throw generator_error("no stock filling among the candidates");
  }();
  return G;
}

Diagram mirror_closure(const TangleExpr& F) {
  Diagram A = render(F);
  if (leg_count(A) != 4) throw generator_error("mirror closure needs an open tangle");
  std::array<int, 4> a = take_legs(A);
  Diagram B = reflect(A);  // the partner is drawn reflected; repaint mirrors it
  Diagram D = A;
  int off = append_diagram(D, B);
  // the four strands of the gluing circle: NE-NW, NW-NE, SW-SE, SE-SW
  D.join(a[0], reflected(a[3]) + off);
  D.join(a[1], reflected(a[0]) + off);
  D.join(a[2], reflected(a[1]) + off);
  D.join(a[3], reflected(a[2]) + off);
  repaint_alternating(D);
  return D;
}

FamilySpec figure8_spec() {
  FamilySpec s;
  s.family = FamilySpec::Family::figure8;
  return s;
}

FamilySpec torus2_spec(int m) {
  FamilySpec s;
  s.family = FamilySpec::Family::torus2;
  s.v = m;
  return s;
}

FamilySpec turban_spec(int u, int v) {
  FamilySpec s;
  s.family = FamilySpec::Family::turban;
  s.u = u;
  s.v = v;
  return s;
}

FamilySpec mirror_turban_spec(int v, TangleExpr filling) {
  FamilySpec s;
  s.family = FamilySpec::Family::mirror_turban;
  s.u = 3;
  s.v = v;
  s.tangles.push_back(std::move(filling));
  return s;
}

FamilySpec spliced_turban_spec(TangleExpr splice) {
  FamilySpec s;
  s.family = FamilySpec::Family::spliced_turban;
  s.u = 3;
  s.v = 2;
  s.tangles.push_back(std::move(splice));
  return s;
}

FamilySpec spliced_turban_spec(TangleExpr splice, TangleExpr filling) {
  FamilySpec s;
  s.family = FamilySpec::Family::spliced_turban;
  s.u = 3;
  s.v = 2;
  s.tangles.push_back(std::move(splice));
  s.tangles.push_back(std::move(filling));
  return s;
}

FamilySpec dh_spec(TangleExpr F1, TangleExpr F2, bool extra_central) {
  FamilySpec s;
  s.family = FamilySpec::Family::dasbach_hougardy;
  s.tangles.push_back(std::move(F1));
  s.tangles.push_back(std::move(F2));
  s.extra_central = extra_central;
  return s;
}

GeneratedKnot build(const FamilySpec& spec) {
  using Family = FamilySpec::Family;
  std::string name = spec_name(spec);
  switch (spec.family) {
    case Family::figure8: {
      TangleExpr core = parse_tangle("C(2,2)");
      return finish(close(core, Closure::numerator), name, "", core);
    }
    case Family::torus2: {
      if (spec.v < 2) throw generator_error("torus row needs at least two crossings");
      TangleExpr core = twist(spec.v);
      return finish(close(core, Closure::numerator), name, "", core);
    }
    case Family::turban: {
      Turban T = turban(spec.u, spec.v);
      std::vector<TangleExpr> fills(T.pattern->holes, twist(1));
      TangleExpr core = jewel(T.pattern->name, std::move(fills));
      Diagram D = render(core);
      repaint_alternating(D);
      return finish(std::move(D), name, "", core);
    }
    case Family::mirror_turban: {
      // one row wraps each strand straight back into its own hole ring and
      // the fills pinch off as connect summands, so start at two
      if (spec.v < 2) throw generator_error("mirror turban needs at least two rows");
      const TangleExpr& G = spec.tangles.at(0);
      require_filling(G);
      std::vector<TangleExpr> fills;
      for (int h = 0; h < 2 * spec.v; ++h)
        fills.push_back(h % 2 == 0 ? transform_tangle(G, Transform::h) : G);
      TangleExpr core = jewel("J(3," + std::to_string(spec.v) + ")", std::move(fills));
      return finish(ringed_diagram(spec.v, G), name, "", core);
    }
    case Family::spliced_turban: {
      const TangleExpr& F = spec.tangles.at(0);
      const TangleExpr& G =
          spec.tangles.size() > 1 ? spec.tangles[1] : asymmetric_filling();
      require_splice(F);
      require_filling(G);
      return finish(spliced_diagram(F, G), name, "", std::nullopt);
    }
    case Family::dasbach_hougardy: {
      TangleExpr core =
          dh_core(spec.tangles.at(0), spec.tangles.at(1), spec.extra_central);
      return finish(mirror_closure(core), name,
                    dh_label(spec.tangles[0], spec.tangles[1], spec.extra_central),
                    core);
    }
  }
  throw generator_error("corrupt family spec");
}

std::vector<FamilySpec> dh_census(int c_max) {
  if (c_max < 14) throw generator_error("census starts at 14 crossings");
  std::vector<std::pair<int, FamilySpec>> found;
  for (int extra = 0; extra <= 1; ++extra)
    for (int c1 = 3; 2 * (2 * c1 + 1 + extra) <= c_max; ++c1)
      for (int c2 = c1; 2 * (c1 + c2 + 1 + extra) <= c_max; ++c2)
        for (const std::string& w1 : rational_words(c1))
          for (const std::string& w2 : rational_words(c2)) {
            if (c1 == c2 && w2 < w1) continue;
            FamilySpec spec = dh_spec(parse_tangle(w1), parse_tangle(w2), extra != 0);
            // a matching pair would make the closure symmetric on sight
            if (equivalent(spec.tangles[0], spec.tangles[1], EqMode::flype)) continue;
            try {
              build(spec);
            } catch (const generator_error&) {
              continue;  // links and degenerate closures drop out
            }
            found.emplace_back(2 * (c1 + c2 + 1 + extra), std::move(spec));
          }
  std::stable_sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
    return x.first != y.first ? x.first < y.first
                              : spec_name(x.second) < spec_name(y.second);
  });
  std::vector<FamilySpec> out;
  for (auto& [c, spec] : found) out.push_back(std::move(spec));
  return out;
}

}  // namespace altk
