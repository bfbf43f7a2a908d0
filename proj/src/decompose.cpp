#include "altk/decompose.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include "altk/equivalence.hpp"
#include "altk/iso.hpp"

namespace altk {

bool operator==(const HasemanCircle& a, const HasemanCircle& b) {
  return a.inside == b.inside;
}

bool operator<(const HasemanCircle& a, const HasemanCircle& b) {
  int ca = a.inside_count(), cb = b.inside_count();
  if (ca != cb) return ca < cb;
  return a.inside < b.inside;
}

namespace {

void require_decomposable(const Diagram& D) {
  check_valid(D);
  if (!is_closed(D)) throw decompose_error("diagram has boundary legs");
  if (D.nv == 0) throw decompose_error("crossingless diagram");
  for (int v = 0; v < D.nv; ++v)
    if (D.cap[v]) throw decompose_error("diagram has cap vertices");
  if (!connected(D)) throw decompose_error("diagram not connected");
  if (!planar(D)) throw decompose_error("diagram not planar");
  if (!nugatory_crossings(D).empty()) throw decompose_error("diagram not reduced");
  if (!prime(D)) throw decompose_error("diagram not prime");
  // the canonical family is only unique for alternating diagrams
  if (!alternating(D)) throw decompose_error("diagram not alternating");
}

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

std::vector<std::vector<int>> face_dart_lists(const Diagram& D,
                                              const std::vector<int>& face,
                                              int nf) {
  std::vector<std::vector<int>> out(nf);
  for (int d = 0; d < D.darts(); ++d) out[face[d]].push_back(d);
  return out;
}

int edge_id(const Diagram& D, int d) { return std::min(d, D.theta[d]); }

// Crossing partition induced by the circle: walk every face boundary and
// merge consecutive corners whenever the edge segment between them carries
// no cut point.  A separating simple circle yields exactly two classes.
std::vector<char> side_partition(const Diagram& D,
                                 const std::array<int, 4>& route) {
  std::vector<char> cut(D.darts(), 0);
  for (int a : route) cut[a] = cut[D.theta[a]] = 1;
  Dsu dsu(D.nv);
  std::vector<char> seen(D.darts(), 0);
  for (int d0 = 0; d0 < D.darts(); ++d0) {
    if (seen[d0]) continue;
    int d = d0;
    do {
      seen[d] = 1;
      int dn = sigma(D.theta[d]);
      if (!cut[d]) dsu.unite(vertex_of(d), vertex_of(dn));
      d = dn;
    } while (d != d0);
  }
  // exactly two classes, both nonempty, crossing 0 outside
  int r0 = dsu.find(0), r1 = -1;
  std::vector<char> inside(D.nv, 0);
  for (int v = 0; v < D.nv; ++v) {
    int r = dsu.find(v);
    if (r == r0) continue;
    if (r1 == -1) r1 = r;
    if (r != r1) throw decompose_error("side partition failed");
    inside[v] = 1;
  }
  if (r1 == -1) throw decompose_error("side partition failed");
  return inside;
}

std::array<int, 4> normalize_route(const Diagram& D,
                                   const std::array<int, 4>& r) {
  std::array<int, 4> best = r;
  std::array<int, 4> rev = {D.theta[r[3]], D.theta[r[2]], D.theta[r[1]],
                            D.theta[r[0]]};
  for (int k = 0; k < 4; ++k) {
    std::array<int, 4> a, b;
    for (int i = 0; i < 4; ++i) {
      a[i] = r[(i + k) % 4];
      b[i] = rev[(i + k) % 4];
    }
    if (a < best) best = a;
    if (b < best) best = b;
  }
  return best;
}

// Which side of the circle the forward face-orbit walk paints: walk the face
// between cut points 0 and 1 from the entry dart to the exit dart; the
// corners passed all lie on one side.  Returns that side's inside flag.
bool plus_walk_inside(const Diagram& D, const HasemanCircle& C) {
  int d = D.theta[C.route[0]];
  int b = C.route[1];
  int side = -1;
  for (int guard = 0; guard <= D.darts(); ++guard) {
    d = sigma(D.theta[d]);
    int s = C.inside[vertex_of(d)] ? 1 : 0;
    if (side == -1)
      side = s;
    else if (side != s)
      throw decompose_error("circle walk straddles the partition");
    if (d == b) return side == 1;
  }
  throw decompose_error("circle route is not a face chain");
}

bool subset_of(const std::vector<char>& a, const std::vector<char>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

bool disjoint_from(const std::vector<char>& a, const std::vector<char>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

}  // namespace

std::vector<HasemanCircle> haseman_circles(const Diagram& D) {
  require_decomposable(D);
  int nf = 0;
  auto face = faces(D, &nf);
  auto fl = face_dart_lists(D, face, nf);
  std::map<std::vector<char>, HasemanCircle> classes;
  for (int a1 = 0; a1 < D.darts(); ++a1) {
    int f0 = face[a1], f1 = face[D.theta[a1]];
    if (f1 == f0) continue;
    for (int a2 : fl[f1]) {
      int f2 = face[D.theta[a2]];
      if (f2 == f0 || f2 == f1) continue;
      for (int a3 : fl[f2]) {
        int f3 = face[D.theta[a3]];
        if (f3 == f0 || f3 == f1 || f3 == f2) continue;
        for (int a4 : fl[f3]) {
          if (face[D.theta[a4]] != f0) continue;
          std::array<int, 4> route = {a1, a2, a3, a4};
          auto inside = side_partition(D, route);
          auto norm = normalize_route(D, route);
          auto it = classes.find(inside);
          if (it == classes.end()) {
            HasemanCircle c;
            c.route = norm;
            c.inside = inside;
            classes.emplace(std::move(inside), std::move(c));
          } else if (norm < it->second.route) {
            it->second.route = norm;
          }
        }
      }
    }
  }
  std::vector<HasemanCircle> out;
  out.reserve(classes.size());
  for (auto& [k, c] : classes) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Laminar bookkeeping for a family: parents, children, and the piece each
// crossing belongs to (the node piece of the smallest circle containing it).
struct FamilyCut {
  std::vector<int> parent;                 // per circle, -1 = outermost
  std::vector<std::vector<int>> children;  // per circle
  std::vector<int> roots;
  std::vector<int> piece_of_vertex;  // 0 = outer piece, 1+i = node of circle i
};

FamilyCut laminar_cut(const Diagram& D,
                      const std::vector<HasemanCircle>& fam) {
  int n = (int)fam.size();
  for (int i = 0; i < n; ++i) {
    if ((int)fam[i].inside.size() != D.nv || fam[i].inside_count() == 0 ||
        fam[i].inside[0])
      throw decompose_error("malformed family circle");
    for (int j = i + 1; j < n; ++j) {
      if (fam[i].inside == fam[j].inside)
        throw decompose_error("family contains parallel circles");
      if (!subset_of(fam[i].inside, fam[j].inside) &&
          !subset_of(fam[j].inside, fam[i].inside) &&
          !disjoint_from(fam[i].inside, fam[j].inside))
        throw decompose_error("family circles cannot be made disjoint");
    }
  }
  FamilyCut fc;
  fc.parent.assign(n, -1);
  fc.children.assign(n, {});
  for (int i = 0; i < n; ++i) {
    int best = -1, bestc = INT_MAX;
    for (int j = 0; j < n; ++j) {
      if (j == i || fam[i].inside == fam[j].inside) continue;
      if (!subset_of(fam[i].inside, fam[j].inside)) continue;
      int c = fam[j].inside_count();
      if (c < bestc) {
        bestc = c;
        best = j;
      }
    }
    fc.parent[i] = best;
    if (best == -1)
      fc.roots.push_back(i);
    else
      fc.children[best].push_back(i);
  }
  fc.piece_of_vertex.assign(D.nv, 0);
  for (int v = 0; v < D.nv; ++v) {
    int best = -1, bestc = INT_MAX;
    for (int i = 0; i < n; ++i) {
      if (!fam[i].inside[v]) continue;
      int c = fam[i].inside_count();
      if (c < bestc) {
        bestc = c;
        best = i;
      }
    }
    fc.piece_of_vertex[v] = best == -1 ? 0 : 1 + best;
  }
  return fc;
}

// Cap slot for cut point `pos` of a circle, seen from a piece on the given
// side.  Seen from the side the forward walk paints, the cut points run
// counterclockwise in route order; from the other side the order reverses.
int cap_slot(bool piece_inside, bool walk_inside, int pos) {
  return piece_inside == walk_inside ? (4 - pos) % 4 : pos;
}

int sign_of_run_crossing(const Diagram& C, int v, int split) {
  return C.over[4 * v + (split + 1) % 4] ? 1 : -1;
}

// Recognize the capped piece as a single cyclic row of crossings and caps
// joined by parallel edge pairs at adjacent slots; fill the cyclic vertex
// order.  This is exactly the shape of a twisted band diagram.
bool row_structure(const Diagram& C, std::vector<int>* cycle,
                   std::vector<int>* split_out) {
  int n = C.nv;
  if (n == 0) return false;
  if (n == 1) return false;
  auto pair_partner = [&](int v, int s) -> int {
    int d1 = 4 * v + s, d2 = 4 * v + (s + 1) % 4;
    int w = C.theta[d1] / 4;
    if (w == v || C.theta[d2] / 4 != w) return -1;
    int ta = C.theta[d2] % 4, tb = C.theta[d1] % 4;
    return tb == (ta + 1) % 4 ? w : -1;
  };
  if (n == 2) {
    // two vertices with four parallel edges: the closed length-2 row
    for (int s = 0; s < 4; ++s)
      if (C.theta[s] / 4 != 1) return false;
    std::array<int, 2> sp;
    for (int v = 0; v < 2; ++v) {
      sp[v] = -1;
      for (int s = 0; s < 2; ++s)
        if (pair_partner(v, s) == 1 - v && pair_partner(v, s + 2) == 1 - v)
          sp[v] = s;
      if (sp[v] < 0) return false;
    }
    *cycle = {0, 1};
    *split_out = {sp[0], sp[1]};
    return true;
  }
  std::vector<int> split(n, -1);
  for (int v = 0; v < n; ++v) {
    for (int s = 0; s < 2; ++s)
      if (pair_partner(v, s) >= 0 && pair_partner(v, s + 2) >= 0) {
        split[v] = s;
        break;
      }
    if (split[v] < 0) return false;
  }
  // walk the cycle pair-by-pair; entering through one pair, leave by the other
  std::vector<char> seen(n, 0);
  std::vector<int> order;
  int v = 0;
  int leave = split[0];  // leave through pair (split, split+1) first
  for (int k = 0; k < n; ++k) {
    order.push_back(v);
    seen[v] = 1;
    int w = C.theta[4 * v + leave] / 4;
    int ta = C.theta[4 * v + (leave + 1) % 4] % 4;
    // w's pair containing slot ta is the one we entered through
    int enter = (ta == split[w] || ta == (split[w] + 1) % 4)
                    ? split[w]
                    : (split[w] + 2) % 4;
    if (k + 1 < n) {
      if (seen[w]) return false;
    } else {
      if (w != 0) return false;
    }
    v = w;
    leave = (enter + 2) % 4;
  }
  *cycle = order;
  *split_out = split;
  return true;
}

// Read the cyclic gap weights of a recognized row.  Fails when a run mixes
// crossing signs or the twisted-band hypotheses are violated.
bool band_weights(const Diagram& C, std::vector<int>* gaps, int* weight) {
  std::vector<int> cycle, split;
  if (!row_structure(C, &cycle, &split)) return false;
  int n = (int)cycle.size();
  std::vector<int> cap_pos;
  for (int k = 0; k < n; ++k)
    if (C.cap[cycle[k]]) cap_pos.push_back(k);
  std::vector<int> g;
  if (cap_pos.empty()) {
    int sum = 0, cnt = 0;
    for (int k = 0; k < n; ++k) {
      sum += sign_of_run_crossing(C, cycle[k], split[cycle[k]]);
      ++cnt;
    }
    if (std::abs(sum) != cnt) return false;
    g = {sum};
  } else {
    // rotate so the first cap holds the cycle start; first cap = lowest id
    int start = cap_pos[0];
    for (int k : cap_pos)
      if (cycle[k] < cycle[start]) start = k;
    int caps = (int)cap_pos.size();
    g.assign(caps, 0);
    int gi = -1, run = 0;
    bool bad = false;
    for (int k = 0; k < n; ++k) {
      int v = cycle[(start + k) % n];
      if (C.cap[v]) {
        if (gi >= 0 && std::abs(g[gi]) != run) bad = true;
        ++gi;
        run = 0;
      } else {
        g[gi] += sign_of_run_crossing(C, v, split[v]);
        ++run;
      }
    }
    if (std::abs(g[gi]) != run) bad = true;
    if (bad) return false;
  }
  int caps = (int)cap_pos.size();
  if (caps == 1 && std::abs(g[0]) < 2) return false;
  if (caps == 2 && g[0] == 0 && g[1] == 0) return false;
  int sgn = 0;
  for (int x : g) {
    if (x == 0) continue;
    if (sgn == 0) sgn = x > 0 ? 1 : -1;
    if ((x > 0 ? 1 : -1) != sgn) return false;
  }
  *gaps = g;
  *weight = std::accumulate(g.begin(), g.end(), 0);
  return true;
}

}  // namespace

std::vector<Piece> cut_pieces(const Diagram& D,
                              const std::vector<HasemanCircle>& fam) {
  require_decomposable(D);
  auto fc = laminar_cut(D, fam);
  int n = (int)fam.size();

  std::vector<char> walk_in(n, 0);
  std::vector<std::array<int, 4>> cut_edge(n);
  for (int i = 0; i < n; ++i) {
    walk_in[i] = plus_walk_inside(D, fam[i]);
    for (int j = 0; j < 4; ++j) cut_edge[i][j] = edge_id(D, fam[i].route[j]);
  }

  std::vector<Piece> pieces(n + 1);
  for (int p = 0; p <= n; ++p) {
    for (int v = 0; v < D.nv; ++v)
      if (fc.piece_of_vertex[v] == p) pieces[p].crossings.push_back(v);
    if (p == 0) {
      pieces[p].boundary = fc.roots;
      pieces[p].parent = -1;
      std::sort(pieces[p].boundary.begin(), pieces[p].boundary.end());
    } else {
      pieces[p].boundary = fc.children[p - 1];
      pieces[p].boundary.push_back(p - 1);
      std::sort(pieces[p].boundary.begin(), pieces[p].boundary.end());
      for (size_t b = 0; b < pieces[p].boundary.size(); ++b)
        if (pieces[p].boundary[b] == p - 1) pieces[p].parent = (int)b;
    }
  }

  // capped-diagram scaffolding
  std::vector<std::vector<int>> vmap(n + 1);
  for (int p = 0; p <= n; ++p) {
    Piece& P = pieces[p];
    vmap[p].assign(D.nv, -1);
    for (int v : P.crossings) {
      int id = P.capped.add_vertex();
      for (int s = 0; s < 4; ++s) P.capped.over[4 * id + s] = D.over[4 * v + s];
      vmap[p][v] = id;
    }
    for (size_t b = 0; b < P.boundary.size(); ++b)
      P.cap_of.push_back(P.capped.add_vertex(true));
  }
  auto cap_vertex = [&](int p, int circ) {
    const Piece& P = pieces[p];
    for (size_t b = 0; b < P.boundary.size(); ++b)
      if (P.boundary[b] == circ) return P.cap_of[b];
    throw decompose_error("segment touches a circle outside its piece");
  };

  // split every edge at its cut points and join the resulting ports within
  // the piece each segment runs through
  std::vector<std::vector<std::pair<int, int>>> joins(n + 1);
  for (int d = 0; d < D.darts(); ++d) {
    if (D.theta[d] < d) continue;
    int dt = D.theta[d];
    int u = vertex_of(d);
    int e = edge_id(D, d);
    struct Cut {
      int circ, pos, uside;
    };
    std::vector<Cut> cuts;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < 4; ++j)
        if (cut_edge[i][j] == e) {
          int us = fam[i].inside[u] ? fam[i].inside_count()
                                    : D.nv - fam[i].inside_count();
          cuts.push_back({i, j, us});
        }
    std::sort(cuts.begin(), cuts.end(),
              [](const Cut& a, const Cut& b) { return a.uside < b.uside; });
    int m = (int)cuts.size();
    for (int t = 0; t <= m; ++t) {
      int best = -1, bestc = INT_MAX;
      for (int i = 0; i < n; ++i) {
        int pos = -1;
        for (int q = 0; q < m; ++q)
          if (cuts[q].circ == i) pos = q + 1;
        bool contains =
            pos > 0 ? ((t < pos) == (fam[i].inside[u] != 0)) : fam[i].inside[u];
        if (contains && fam[i].inside_count() < bestc) {
          bestc = fam[i].inside_count();
          best = i;
        }
      }
      int p = best == -1 ? 0 : 1 + best;
      auto port = [&](bool left) -> int {
        if (left ? t == 0 : t == m) {
          int dd = left ? d : dt;
          if (vmap[p][vertex_of(dd)] < 0)
            throw decompose_error("edge segment landed in the wrong piece");
          return 4 * vmap[p][vertex_of(dd)] + dd % 4;
        }
        const Cut& c = left ? cuts[t - 1] : cuts[t];
        bool piece_inside = (best == c.circ);
        return 4 * cap_vertex(p, c.circ) +
               cap_slot(piece_inside, walk_in[c.circ], c.pos);
      };
      joins[p].push_back({port(true), port(false)});
    }
  }

  for (int p = 0; p <= n; ++p) {
    Piece& P = pieces[p];
    for (auto [a, b] : joins[p]) P.capped.join(a, b);
    check_valid(P.capped);
    if (!is_closed(P.capped) || !connected(P.capped) || !planar(P.capped))
      throw decompose_error("piece assembly produced a bad map");
    if (P.crossings.size() == 1 && P.boundary.size() == 1)
      P.kind = PieceKind::singleton;
    else if (band_weights(P.capped, &P.gaps, &P.weight))
      P.kind = PieceKind::band;
    else
      P.kind = PieceKind::jewel;
  }
  return pieces;
}

namespace {

// Candidate circles that keep a non-band piece honest: a jewel must contain
// no incompressible circle other than boundary-parallel and singleton ones.
std::vector<int> eligible_in_piece(const Diagram& D,
                                   const std::vector<HasemanCircle>& all,
                                   const std::vector<HasemanCircle>& fam,
                                   const Piece& P) {
  std::vector<int> out;
  int nv = D.nv;
  for (int k = 0; k < (int)all.size(); ++k) {
    const auto& K = all[k];
    bool in_family = false;
    for (const auto& f : fam) in_family |= (f.inside == K.inside);
    if (in_family) continue;
    // far side of each boundary circle must sit fully on one side of K
    bool ok = true;
    int holesA = 0, holesB = 0;
    for (size_t b = 0; b < P.boundary.size() && ok; ++b) {
      const auto& ins = fam[P.boundary[b]].inside;
      bool comp = ((int)b == P.parent);  // far side of the parent circle
      bool any_in = false, any_out = false;
      for (int v = 0; v < nv; ++v) {
        bool far = comp ? !ins[v] : ins[v];
        if (!far) continue;
        (K.inside[v] ? any_in : any_out) = true;
      }
      if (any_in && any_out)
        ok = false;
      else if (any_in)
        ++holesA;
      else
        ++holesB;
    }
    if (!ok) continue;
    int crA = 0;
    for (int v : P.crossings) crA += K.inside[v] ? 1 : 0;
    int crB = (int)P.crossings.size() - crA;
    bool bp = (crA == 0 && holesA == 1) || (crB == 0 && holesB == 1);
    bool singleton = (crA == 1 && holesA == 0) || (crB == 1 && holesB == 0);
    if (!bp && !singleton) out.push_back(k);
  }
  return out;
}

bool family_admissible(const Diagram& D, const std::vector<HasemanCircle>& all,
                       const std::vector<HasemanCircle>& fam) {
  auto pieces = cut_pieces(D, fam);
  for (const auto& P : pieces) {
    if (P.kind == PieceKind::singleton) return false;
    if (P.kind == PieceKind::band) continue;
    if (!eligible_in_piece(D, all, fam, P).empty()) return false;
  }
  return true;
}

std::vector<int> build_family(const Diagram& D,
                              const std::vector<HasemanCircle>& all,
                              const std::vector<int>& pref) {
  std::vector<int> rank(all.size());
  for (size_t i = 0; i < pref.size(); ++i) rank[pref[i]] = (int)i;
  std::vector<int> chosen;
  auto materialize = [&](const std::vector<int>& idx) {
    std::vector<HasemanCircle> fam;
    for (int i : idx) fam.push_back(all[i]);
    return fam;
  };
  // refinement: while some piece is neither band nor jewel, cut deeper
  for (;;) {
    auto fam = materialize(chosen);
    auto pieces = cut_pieces(D, fam);
    int pick = -1;
    for (const auto& P : pieces) {
      if (P.kind != PieceKind::jewel) continue;
      for (int k : eligible_in_piece(D, all, fam, P))
        if (pick == -1 || rank[k] < rank[pick]) pick = k;
    }
    if (pick == -1) break;
    chosen.push_back(pick);
  }
  // greedy deletion to a minimal admissible family
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> order = chosen;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return rank[a] < rank[b]; });
    for (int k : order) {
      std::vector<int> rest;
      for (int i : chosen)
        if (i != k) rest.push_back(i);
      if (family_admissible(D, all, materialize(rest))) {
        chosen = rest;
        changed = true;
        break;
      }
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace

std::vector<HasemanCircle> canonical_family(const Diagram& D) {
  auto all = haseman_circles(D);
  std::vector<int> natural(all.size());
  std::iota(natural.begin(), natural.end(), 0);
  auto a = build_family(D, all, natural);

  // uniqueness cross-check under an unrelated enumeration order
  std::vector<int> shuffled = natural;
  std::mt19937 rng(0x9e3779b9u);
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  auto b = build_family(D, all, shuffled);
  if (a != b) throw decompose_error("minimal family is not unique");

  std::vector<HasemanCircle> out;
  for (int i : a) out.push_back(all[i]);
  return out;
}

PieceKind classify_piece(const Diagram& D,
                         const std::vector<HasemanCircle>& family,
                         const Piece& P) {
  if (P.crossings.size() == 1 && P.boundary.size() == 1)
    return PieceKind::singleton;
  std::vector<int> g;
  int w;
  if (band_weights(P.capped, &g, &w)) return PieceKind::band;
  auto all = haseman_circles(D);
  if (!eligible_in_piece(D, all, family, P).empty())
    throw decompose_error("piece is neither singleton, band nor jewel");
  return PieceKind::jewel;
}

StructureTree structure_tree(const Diagram& D) {
  StructureTree T;
  T.circles = canonical_family(D);
  T.pieces = cut_pieces(D, T.circles);
  T.arborescent = true;
  for (const auto& P : T.pieces) {
    if (P.kind == PieceKind::singleton)
      throw decompose_error("canonical family produced a singleton");
    if (P.kind == PieceKind::jewel) T.arborescent = false;
  }
  T.ends.assign(T.circles.size(), {-1, -1});
  for (int p = 0; p < (int)T.pieces.size(); ++p)
    for (int b : T.pieces[p].boundary) {
      if (T.ends[b].first == -1)
        T.ends[b].first = p;
      else
        T.ends[b].second = p;
    }
  for (auto [x, y] : T.ends)
    if (x == -1 || y == -1) throw decompose_error("circle misses a piece");
  return T;
}

std::string piece_label(const Piece& P) {
  if (P.kind == PieceKind::singleton) return "S";
  if (P.kind == PieceKind::band) return "B:" + std::to_string(P.weight);
  // fingerprint stable under flypes: minimize over reflection and mirror
  std::string fp = canonical_code(P.capped);
  Diagram r = reflect(P.capped);
  Diagram m = mirror(P.capped);
  Diagram rm = reflect(m);
  fp = std::min(fp, canonical_code(r));
  fp = std::min(fp, canonical_code(m));
  fp = std::min(fp, canonical_code(rm));
  return "J:" + fp;
}

std::string tree_canon(const StructureTree& T) {
  LabeledTree t;
  for (const auto& P : T.pieces) t.label.push_back(piece_label(P));
  for (auto e : T.ends) t.edges.push_back(e);
  return tree_canonical(t);
}

std::string tree_dot(const StructureTree& T) {
  std::ostringstream os;
  os << "graph tree {\n";
  for (int p = 0; p < (int)T.pieces.size(); ++p) {
    const Piece& P = T.pieces[p];
    if (P.kind == PieceKind::band) {
      os << "  p" << p << " [shape=box,label=\"B:a=" << P.weight << "\"];\n";
    } else {
      std::string fp = piece_label(P).substr(2);
      if (fp.size() > 16) fp = fp.substr(0, 16) + "..";
      os << "  p" << p << " [shape=diamond,label=\"J:" << fp << "\"];\n";
    }
  }
  for (int c = 0; c < (int)T.ends.size(); ++c)
    os << "  p" << T.ends[c].first << " -- p" << T.ends[c].second
       << " [label=\"c" << c << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace altk
