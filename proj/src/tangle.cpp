#include "altk/tangle.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <queue>
#include <utility>

namespace altk {

namespace {

int sign_of(int x) { return x > 0 ? 1 : x < 0 ? -1 : 0; }

TangleExpr pole(bool north, int sigma, TangleExpr child) {
  TangleExpr e;
  e.kind = NodeKind::pole;
  e.north = north;
  e.n = sigma;
  e.slots.push_back(std::move(child));
  return e;
}

enum class Role { root, band_slot, pole_child, jewel_slot };

void validate_rec(const TangleExpr& F, Role role) {
  switch (F.kind) {
    case NodeKind::twist:
      if (F.n == 0) throw tangle_error("twist of zero crossings");
      if ((role == Role::band_slot || role == Role::pole_child) && std::abs(F.n) < 2)
        throw tangle_error("a bare crossing can only fill a jewel hole");
      return;
    case NodeKind::band: {
      if (F.slots.empty()) throw tangle_error("band without slots");
      if (F.weights.size() != F.slots.size() + 1)
        throw tangle_error("band weight count must be slot count + 1");
      if (F.slots.size() == 1 && F.weights[0] == 0 && F.weights[1] == 0)
        throw tangle_error("one-slot band needs a nonzero weight");
      int s = 0;
      for (int w : F.weights) {
        if (w == 0) continue;
        if (s == 0) s = sign_of(w);
        if (s != sign_of(w)) throw tangle_error("band weights with mixed signs");
      }
      for (const TangleExpr& S : F.slots) validate_rec(S, Role::band_slot);
      return;
    }
    case NodeKind::pole:
      if (F.n != 1 && F.n != -1) throw tangle_error("pole crossing sign must be +-1");
      if (F.slots.size() != 1) throw tangle_error("pole needs exactly one child");
      validate_rec(F.slots[0], Role::pole_child);
      return;
    case NodeKind::jewel: {
      if (role != Role::root)
        throw tangle_error("a filled jewel is closed and can only sit at the root");
      const JewelTemplate& T = jewel_template(F.tpl);
      if ((int)F.slots.size() != T.holes)
        throw tangle_error("jewel filling count differs from the hole count");
      if ((int)F.turns.size() != T.holes)
        throw tangle_error("jewel turn count differs from the hole count");
      for (int q : F.turns)
        if (q < 0 || q > 3) throw tangle_error("jewel turns are quarter turns 0..3");
      for (const TangleExpr& S : F.slots) validate_rec(S, Role::jewel_slot);
      return;
    }
  }
  throw tangle_error("corrupt tangle node");
}

// ---- rendering ------------------------------------------------------------

// Assembly fragment: legs are tracked as dart ids and stay theta-unset until
// render() marks them, so append() only ever shifts real edges.
struct Frag {
  Diagram d;
  std::array<int, 4> leg{-1, -1, -1, -1};
  bool closed = false;
};

int append(Diagram& D, const Diagram& src) {
  int off = D.darts();
  D.theta.reserve(D.theta.size() + src.theta.size());
  for (int t : src.theta)
    D.theta.push_back(t == Diagram::unset ? Diagram::unset : t + off);
  D.over.insert(D.over.end(), src.over.begin(), src.over.end());
  D.cap.insert(D.cap.end(), src.cap.begin(), src.cap.end());
  D.nv += src.nv;
  D.loose_loops += src.loose_loops;
  return off;
}

// |w| crossings in a horizontal row; w > 0 puts the {NE,SW} diagonal on top
Frag ht(int w) {
  Frag f;
  int m = std::abs(w);
  for (int i = 0; i < m; ++i) {
    f.d.add_vertex();
    f.d.set_over(i, w > 0);
  }
  for (int i = 0; i + 1 < m; ++i) {
    f.d.join(4 * i + 0, 4 * (i + 1) + 1);
    f.d.join(4 * i + 3, 4 * (i + 1) + 2);
  }
  f.leg = {4 * (m - 1) + 0, 1, 2, 4 * (m - 1) + 3};
  return f;
}

int rot_dart(int d) { return 4 * (d / 4) + (d % 4 + 1) % 4; }

// quarter turn counterclockwise; over/under rides along with each strand
Frag rot90(const Frag& s) {
  Frag f;
  f.d.nv = s.d.nv;
  f.d.theta.assign(s.d.darts(), Diagram::unset);
  f.d.over.assign(s.d.darts(), 0);
  f.d.cap = s.d.cap;
  f.d.loose_loops = s.d.loose_loops;
  for (int t = 0; t < s.d.darts(); ++t) {
    if (s.d.theta[t] != Diagram::unset) f.d.theta[rot_dart(t)] = rot_dart(s.d.theta[t]);
    f.d.over[rot_dart(t)] = s.d.over[t];
  }
  for (int c = 0; c < 4; ++c) f.leg[(c + 1) % 4] = rot_dart(s.leg[c]);
  return f;
}

Frag hglue(Frag a, Frag b) {
  int off = append(a.d, b.d);
  a.d.join(a.leg[0], b.leg[1] + off);
  a.d.join(a.leg[3], b.leg[2] + off);
  a.leg = {b.leg[0] + off, a.leg[1], a.leg[2], b.leg[3] + off};
  return a;
}

Frag vglue(Frag top, Frag bot) {
  int off = append(top.d, bot.d);
  top.d.join(top.leg[2], bot.leg[1] + off);
  top.d.join(top.leg[3], bot.leg[0] + off);
  top.leg = {top.leg[0], top.leg[1], bot.leg[2] + off, bot.leg[3] + off};
  return top;
}

Frag render_frag(const TangleExpr& F) {
  switch (F.kind) {
    case NodeKind::twist:
      return ht(F.n);
    case NodeKind::band: {
      Frag acc;
      bool have = false;
      auto push = [&](Frag p) {
        acc = have ? hglue(std::move(acc), std::move(p)) : std::move(p);
        have = true;
      };
      for (size_t i = 0; i < F.weights.size(); ++i) {
        if (F.weights[i] != 0) push(ht(F.weights[i]));
        if (i < F.slots.size()) push(rot90(render_frag(F.slots[i])));
      }
      return acc;
    }
    case NodeKind::pole: {
      Frag x;
      x.d.add_vertex();
      x.d.set_over(0, F.n < 0);
      x.leg = {0, 1, 2, 3};
      Frag c = render_frag(F.slots[0]);
      return F.north ? vglue(std::move(x), std::move(c))
                     : vglue(std::move(c), std::move(x));
    }
    case NodeKind::jewel: {
      const JewelTemplate& T = jewel_template(F.tpl);
      Frag f;
      f.closed = true;
      std::vector<std::array<int, 4>> port(T.holes);
      for (int h = 0; h < T.holes; ++h) {
        Frag s = render_frag(F.slots[h]);
        for (int q = 0; q < F.turns[h]; ++q) s = rot90(s);
        int off = append(f.d, s.d);
        for (int c = 0; c < 4; ++c) port[h][c] = s.leg[c] + off;
      }
      for (int a = 0; a < 4 * T.holes; ++a)
        if (T.adj[a] > a)
          f.d.join(port[a / 4][a % 4], port[T.adj[a] / 4][T.adj[a] % 4]);
      return f;
    }
  }
  throw tangle_error("corrupt tangle node");
}

}  // namespace

TangleExpr twist(int n) {
  TangleExpr e;
  e.n = n;
  return e;
}

TangleExpr band(std::vector<int> weights, std::vector<TangleExpr> slots) {
  if (slots.empty()) {
    if (weights.size() != 1)
      throw tangle_error("band weight count must be slot count + 1");
    return twist(weights[0]);
  }
  TangleExpr e;
  e.kind = NodeKind::band;
  e.weights = std::move(weights);
  e.slots = std::move(slots);
  return e;
}

TangleExpr jewel(const std::string& tpl, std::vector<TangleExpr> slots) {
  const JewelTemplate& T = jewel_template(tpl);
  TangleExpr e;
  e.kind = NodeKind::jewel;
  e.tpl = T.name;
  e.turns.assign(T.holes, 0);
  e.slots = std::move(slots);
  return e;
}

void validate_tangle(const TangleExpr& F) { validate_rec(F, Role::root); }

int crossing_total(const TangleExpr& F) {
  int c = F.kind == NodeKind::twist ? std::abs(F.n) : F.kind == NodeKind::pole ? 1 : 0;
  for (int w : F.weights) c += std::abs(w);
  for (const TangleExpr& S : F.slots) c += crossing_total(S);
  return c;
}

bool rational(const TangleExpr& F) {
  switch (F.kind) {
    case NodeKind::twist: return true;
    case NodeKind::pole: return rational(F.slots[0]);
    case NodeKind::band: return F.slots.size() == 1 && rational(F.slots[0]);
    case NodeKind::jewel: return false;
  }
  return false;
}

int complexity(const TangleExpr& F) {
  if (F.kind != NodeKind::jewel && rational(F)) return 1;
  int c = 1;
  for (const TangleExpr& S : F.slots) c += complexity(S);
  return c;
}

Diagram render(const TangleExpr& F) {
  validate_tangle(F);
  Frag f = render_frag(F);
  if (!f.closed)
    for (int c = 0; c < 4; ++c) f.d.mark_leg(f.leg[c], c);
  check_valid(f.d);
  return std::move(f.d);
}

Diagram close(const TangleExpr& F, Closure mode) {
  validate_tangle(F);
  Frag f = render_frag(F);
  if (!f.closed) {
    if (mode == Closure::numerator) {
      f.d.join(f.leg[1], f.leg[0]);
      f.d.join(f.leg[2], f.leg[3]);
    } else {
      f.d.join(f.leg[1], f.leg[2]);
      f.d.join(f.leg[0], f.leg[3]);
    }
  }
  check_valid(f.d);
  return std::move(f.d);
}

TangleExpr transform_tangle(const TangleExpr& F, Transform t) {
  if (t == Transform::add_north || t == Transform::add_south) {
    if (F.kind == NodeKind::jewel) throw tangle_error("cannot decorate a closed diagram");
    // pick the crossing sign that extends an alternating child's alternation
    Frag f = render_frag(F);
    int sigma;
    if (t == Transform::add_north) {
      bool o0 = f.d.over[f.leg[0]] != 0, o1 = f.d.over[f.leg[1]] != 0;
      sigma = (o0 != o1) ? (o1 ? 1 : -1) : 1;
    } else {
      bool o2 = f.d.over[f.leg[2]] != 0, o3 = f.d.over[f.leg[3]] != 0;
      sigma = (o2 != o3) ? (o2 ? -1 : 1) : 1;
    }
    return pole(t == Transform::add_north, sigma, F);
  }
  switch (F.kind) {
    case NodeKind::twist:
      return F;
    case NodeKind::band: {
      TangleExpr e = F;
      if (t == Transform::h) {
        for (TangleExpr& S : e.slots) S = transform_tangle(S, Transform::v);
      } else {
        std::reverse(e.weights.begin(), e.weights.end());
        std::reverse(e.slots.begin(), e.slots.end());
        Transform inner = (t == Transform::v) ? Transform::h : Transform::star;
        for (TangleExpr& S : e.slots) S = transform_tangle(S, inner);
      }
      return e;
    }
    case NodeKind::pole: {
      TangleExpr e = F;
      if (t != Transform::v) e.north = !e.north;
      e.slots[0] = transform_tangle(F.slots[0], t);
      return e;
    }
    case NodeKind::jewel:
      throw tangle_error("transform of a closed diagram");
  }
  throw tangle_error("corrupt tangle node");
}

// ---- canonical form --------------------------------------------------------

TangleExpr canonicalize(const TangleExpr& F) {
  switch (F.kind) {
    case NodeKind::twist:
      return F;
    case NodeKind::band: {
      int k = (int)F.slots.size();
      TangleExpr e;
      e.kind = NodeKind::band;
      e.weights.assign(k + 1, 0);
      for (int w : F.weights) e.weights[0] += w;
      // a crossing flyping west across a slot turns the filling by v; slot j
      // is crossed once per crossing east of it
      e.slots.resize(k);
      int east = 0;
      std::vector<int> par(k);
      for (int j = k; j-- > 0;) {
        east += std::abs(F.weights[j + 1]);
        par[j] = east & 1;
      }
      for (int j = 0; j < k; ++j) {
        TangleExpr s = F.slots[j];
        if (par[j]) s = transform_tangle(s, Transform::v);
        e.slots[j] = canonicalize(s);
      }
      return e;
    }
    case NodeKind::pole: {
      TangleExpr c = F.slots[0];
      if (!F.north) c = transform_tangle(c, Transform::v);
      return pole(true, F.n, canonicalize(c));
    }
    case NodeKind::jewel: {
      for (int q : F.turns)
        if (q) throw tangle_error("canonical form with quarter-turned fillings is unsupported");
      const JewelTemplate& T = jewel_template(F.tpl);
      static const Transform tcode[4] = {Transform::h, Transform::h, Transform::v,
                                         Transform::star};
      TangleExpr best;
      std::string best_key;
      auto consider = [&](const JewelSym* g) {
        TangleExpr cand;
        cand.kind = NodeKind::jewel;
        cand.tpl = F.tpl;
        cand.turns.assign(T.holes, 0);
        cand.slots.resize(T.holes);
        for (int i = 0; i < T.holes; ++i) {
          TangleExpr s = F.slots[i];
          if (g && g->t[i]) s = transform_tangle(s, tcode[g->t[i]]);
          cand.slots[g ? g->perm[i] : i] = canonicalize(s);
        }
        std::string key = tangle_word(cand);
        if (best_key.empty() || key < best_key) {
          best_key = std::move(key);
          best = std::move(cand);
        }
      };
      consider(nullptr);
      for (const JewelSym& g : T.syms)
        if (!g.mirror) consider(&g);
      return best;
    }
  }
  throw tangle_error("corrupt tangle node");
}

namespace {

bool has_incomplete_jewel(const TangleExpr& F) {
  if (F.kind == NodeKind::jewel && !jewel_template(F.tpl).syms_complete) return true;
  for (const TangleExpr& S : F.slots)
    if (has_incomplete_jewel(S)) return true;
  return false;
}

}  // namespace

bool equivalent(const TangleExpr& F, const TangleExpr& G, EqMode mode) {
  TangleExpr g = G;
  switch (mode) {
    case EqMode::flype: break;
    case EqMode::star: g = transform_tangle(g, Transform::star); break;
    case EqMode::h: g = transform_tangle(g, Transform::h); break;
    case EqMode::v: g = transform_tangle(g, Transform::v); break;
  }
  if (canonicalize(F) == canonicalize(g)) return true;
  if (has_incomplete_jewel(F) || has_incomplete_jewel(G))
    throw tangle_error("jewel template has unexpressible symmetries; inequality is undecidable");
  return false;
}

TangleExpr apply_flypes(const TangleExpr& F, const std::vector<FlypeMove>& script) {
  TangleExpr cur = F;
  for (const FlypeMove& mv : script) {
    TangleExpr* node = &cur;
    for (int step : mv.path) {
      if (step < 0 || step >= (int)node->slots.size())
        throw tangle_error("flype path leaves the tree");
      node = &node->slots[step];
    }
    if (node->kind == NodeKind::pole) {
      node->north = !node->north;
      node->slots[0] = transform_tangle(node->slots[0], Transform::v);
    } else if (node->kind == NodeKind::band) {
      int k = (int)node->slots.size();
      if (mv.pos < 0 || mv.pos > k)
        throw tangle_error("flype weight position out of range");
      int& src = node->weights[mv.pos];
      if (src == 0) throw tangle_error("no crossing to flype at this weight position");
      int dst = mv.leftward ? mv.pos - 1 : mv.pos + 1;
      if (dst < 0 || dst > k)
        throw tangle_error("flype would push a crossing off the band");
      int slot = mv.leftward ? mv.pos - 1 : mv.pos;
      int sg = sign_of(src);
      src -= sg;
      node->weights[dst] += sg;
      node->slots[slot] = transform_tangle(node->slots[slot], Transform::v);
    } else {
      throw tangle_error("flype move addresses a twist or a closed jewel");
    }
  }
  validate_tangle(cur);
  return cur;
}

// ---- words ------------------------------------------------------------------

namespace {

bool chain_weights(const TangleExpr& F, std::vector<int>& xs) {
  std::vector<int> acc;
  const TangleExpr* p = &F;
  while (p->kind == NodeKind::band) {
    if (p->slots.size() != 1 || p->weights.size() != 2 || p->weights[1] != 0 ||
        p->weights[0] == 0)
      return false;
    acc.push_back(p->weights[0]);
    p = &p->slots[0];
  }
  if (p->kind != NodeKind::twist || std::abs(p->n) < 2) return false;
  acc.push_back(p->n);
  if (acc.size() < 2) return false;
  xs = std::move(acc);
  return true;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

std::string tangle_word(const TangleExpr& F) {
  switch (F.kind) {
    case NodeKind::twist:
      return std::to_string(F.n);
    case NodeKind::pole:
      return std::string(F.north ? "N" : "S") + (F.n > 0 ? "+" : "-") + " " +
             tangle_word(F.slots[0]);
    case NodeKind::band: {
      std::vector<int> xs;
      if (chain_weights(F, xs)) return "P(" + join_ints(xs) + ")";
      std::string s = "B[" + join_ints(F.weights) + "](";
      for (size_t i = 0; i < F.slots.size(); ++i) {
        if (i) s += ',';
        s += tangle_word(F.slots[i]);
      }
      return s + ")";
    }
    case NodeKind::jewel: {
      for (int q : F.turns)
        if (q) throw tangle_error("quarter-turned fillings have no word form");
      std::string s = "J{" + F.tpl + "}(";
      for (size_t i = 0; i < F.slots.size(); ++i) {
        if (i) s += ',';
        s += tangle_word(F.slots[i]);
      }
      return s + ")";
    }
  }
  throw tangle_error("corrupt tangle node");
}

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  void expect(char c) {
    if (peek() != c)
      throw tangle_error(std::string("expected '") + c + "' at position " +
                         std::to_string(i) + " of tangle word");
    ++i;
  }
  int integer() {
    skip();
    size_t j = i;
    if (j < s.size() && s[j] == '-') ++j;
    size_t k = j;
    while (k < s.size() && std::isdigit((unsigned char)s[k])) ++k;
    if (k == j) throw tangle_error("expected an integer at position " + std::to_string(i));
    long v = std::strtol(s.c_str() + i, nullptr, 10);
    if (v > 1000 || v < -1000) throw tangle_error("weight out of range in tangle word");
    i = k;
    return (int)v;
  }
  std::vector<int> ints(char closer) {
    std::vector<int> out;
    out.push_back(integer());
    while (peek() == ',') {
      ++i;
      out.push_back(integer());
    }
    expect(closer);
    return out;
  }
  std::vector<TangleExpr> exprs(char closer) {
    std::vector<TangleExpr> out;
    if (peek() == closer) {
      ++i;
      return out;
    }
    out.push_back(expr());
    while (peek() == ',') {
      ++i;
      out.push_back(expr());
    }
    expect(closer);
    return out;
  }
  static TangleExpr chain(const std::vector<int>& xs) {
    TangleExpr cur = twist(xs.back());
    for (size_t j = xs.size() - 1; j-- > 0;)
      cur = band({xs[j], 0}, {std::move(cur)});
    return cur;
  }
  TangleExpr expr() {
    char c = peek();
    switch (c) {
      case '*': ++i; return transform_tangle(expr(), Transform::star);
      case 'h': ++i; return transform_tangle(expr(), Transform::h);
      case 'v': ++i; return transform_tangle(expr(), Transform::v);
      case 'N':
      case 'S': {
        ++i;
        char sg = peek();
        if (sg != '+' && sg != '-')
          throw tangle_error("pole decoration needs a sign: N+ N- S+ S-");
        ++i;
        return pole(c == 'N', sg == '+' ? 1 : -1, expr());
      }
      case 'C': {
        ++i;
        expect('(');
        std::vector<int> a = ints(')');
        for (int x : a)
          if (x == 0) throw tangle_error("continued fraction entries must be nonzero");
        if (std::abs(a.back()) == 1)
          throw tangle_error("continued fraction must not end in a unit");
        std::vector<int> xs(a.size());
        for (size_t j = 0; j < a.size(); ++j) xs[j] = (j % 2 == 0) ? a[j] : -a[j];
        return chain(xs);
      }
      case 'P': {
        ++i;
        expect('(');
        std::vector<int> xs = ints(')');
        for (size_t j = 0; j + 1 < xs.size(); ++j)
          if (xs[j] == 0) throw tangle_error("interior plumbing weights must be nonzero");
        if (std::abs(xs.back()) < 2)
          throw tangle_error("last plumbing weight needs absolute value >= 2");
        return chain(xs);
      }
      case 'B': {
        ++i;
        expect('[');
        std::vector<int> w = ints(']');
        expect('(');
        std::vector<TangleExpr> slots = exprs(')');
        if (w.size() != slots.size() + 1)
          throw tangle_error("band weight count must be slot count + 1");
        return band(std::move(w), std::move(slots));
      }
      case 'J': {
        ++i;
        expect('{');
        size_t e = s.find('}', i);
        if (e == std::string::npos) throw tangle_error("unterminated jewel template name");
        std::string name = s.substr(i, e - i);
        while (!name.empty() && std::isspace((unsigned char)name.front())) name.erase(0, 1);
        while (!name.empty() && std::isspace((unsigned char)name.back())) name.pop_back();
        i = e + 1;
        expect('(');
        return jewel(name, exprs(')'));
      }
      default:
        if (c == '-' || std::isdigit((unsigned char)c)) return twist(integer());
        throw tangle_error("unexpected character in tangle word at position " +
                           std::to_string(i));
    }
  }
};

}  // namespace

TangleExpr parse_tangle(const std::string& text) {
  Parser p{text};
  TangleExpr e = p.expr();
  p.skip();
  if (p.i != text.size()) throw tangle_error("trailing input after tangle word");
  validate_tangle(e);
  return e;
}

// ---- jewel templates ---------------------------------------------------------

namespace {

// Closed u-strand braid of (sigma_1 ... sigma_{u-1})^v with each crossing cut
// out.  The braid chart runs bottom to top with north pointing at the chart's
// right edge, so bottom-left = SE, bottom-right = NE, top-left = SW,
// top-right = NW.
JewelTemplate make_turban(int u, int v) {
  JewelTemplate T;
  T.name = "J(" + std::to_string(u) + "," + std::to_string(v) + ")";
  T.holes = (u - 1) * v;
  T.adj.assign(4 * T.holes, -1);
  auto connect = [&T](int a, int b) {
    T.adj[a] = b;
    T.adj[b] = a;
  };
  std::vector<int> top(u, -1), first(u, -1);
  int h = 0;
  for (int r = 0; r < v; ++r)
    for (int j = 0; j + 1 < u; ++j, ++h) {
      if (top[j] < 0) first[j] = 4 * h + 3; else connect(top[j], 4 * h + 3);
      if (top[j + 1] < 0) first[j + 1] = 4 * h + 0; else connect(top[j + 1], 4 * h + 0);
      top[j] = 4 * h + 2;
      top[j + 1] = 4 * h + 1;
    }
  for (int j = 0; j < u; ++j) connect(top[j], first[j]);
  return T;
}

// Symmetries are computed from the gluing pattern: seed an image and a rigid
// corner map for hole 0, propagate across edges, keep consistent bijections.
// Orientation-preserving elements rotate every corner frame, reversing ones
// reflect it; frames that land on a diagonal reflection or a quarter rotation
// have no counterpart among {id,h,v,star} and mark the table incomplete.
void compute_syms(JewelTemplate& T) {
  int H = T.holes;
  T.syms.clear();
  T.syms_complete = true;
  for (int rev = 0; rev < 2; ++rev)
    for (int h0 = 0; h0 < H; ++h0)
      for (int r0 = 0; r0 < 4; ++r0) {
        std::vector<int> img(H, -1), cm(H, -1);
        img[0] = h0;
        cm[0] = r0;
        auto cmap = [&](int hole, int c) {
          return rev ? ((cm[hole] - c) % 4 + 4) % 4 : (cm[hole] + c) % 4;
        };
        std::queue<int> q;
        q.push(0);
        bool ok = true;
        int reached = 1;
        while (!q.empty() && ok) {
          int a = q.front();
          q.pop();
          for (int c = 0; c < 4 && ok; ++c) {
            int peer = T.adj[4 * a + c];
            int b = peer / 4, pc = peer % 4;
            int ipeer = T.adj[4 * img[a] + cmap(a, c)];
            int ib = ipeer / 4, ipc = ipeer % 4;
            if (img[b] == -1) {
              img[b] = ib;
              cm[b] = rev ? (ipc + pc) % 4 : ((ipc - pc) % 4 + 4) % 4;
              ++reached;
              q.push(b);
            } else if (img[b] != ib || cmap(b, pc) != ipc) {
              ok = false;
            }
          }
        }
        if (!ok || reached != H) continue;
        std::vector<char> hit(H, 0);
        for (int x : img) hit[x] = 1;
        if (std::count(hit.begin(), hit.end(), (char)1) != H) continue;
        JewelSym g;
        g.perm = img;
        g.mirror = rev != 0;
        g.t.resize(H);
        bool expressible = true;
        for (int i = 0; i < H && expressible; ++i) {
          int r = cm[i];
          int t = rev ? (r == 3 ? 1 : r == 1 ? 2 : -1) : (r == 0 ? 0 : r == 2 ? 3 : -1);
          if (t < 0)
            expressible = false;
          else
            g.t[i] = t;
        }
        if (!expressible) {
          T.syms_complete = false;
          continue;
        }
        T.syms.push_back(std::move(g));
      }
  bool has_id = false;
  for (const JewelSym& g : T.syms) {
    bool id = !g.mirror;
    for (int i = 0; i < H && id; ++i) id = g.perm[i] == i && g.t[i] == 0;
    has_id |= id;
  }
  if (!has_id) T.syms_complete = false;
}

}  // namespace

const JewelTemplate& jewel_template(const std::string& name) {
  static std::map<std::string, JewelTemplate> cache;
  std::string key = name == "6*" ? "J(3,3)" : name;
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  int u = 0, v = 0;
  bool turban = std::sscanf(key.c_str(), "J(%d,%d)", &u, &v) == 2 &&
                key == "J(" + std::to_string(u) + "," + std::to_string(v) + ")";
  if (!turban || u < 2 || v < 1 || (u - 1) * v > 64)
    throw tangle_error("unknown jewel template: " + name);
  JewelTemplate T = make_turban(u, v);
  compute_syms(T);
  return cache.emplace(key, std::move(T)).first->second;
}

}  // namespace altk
