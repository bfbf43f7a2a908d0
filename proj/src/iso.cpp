#include "altk/iso.hpp"

#include <algorithm>
#include <sstream>

namespace altk {

namespace {

// Map isos are rigid: once one dart image is chosen the rest is forced by
// propagating along sigma (slot rotation, possibly reversed) and theta.
// Returns false on any conflict.
bool try_anchor(const Diagram& A, const Diagram& B, int b0, bool reflect, bool mirror,
                std::vector<int>& f) {
  const int n = A.darts();
  f.assign(n, -1);
  std::vector<char> used(B.nv, 0);

  // Place vertex va so that f(4*va + sa) = b_dart; fills all four slots.
  auto place = [&](int va, int sa, int b_dart) -> bool {
    int wb = b_dart / 4;
    if (used[wb] || A.cap[va] != B.cap[wb]) return false;
    used[wb] = 1;
    int sb = b_dart % 4;
    for (int s = 0; s < 4; ++s) {
      int t = reflect ? (sb - (s - sa) + 8) % 4 : (sb + (s - sa) + 8) % 4;
      f[4 * va + s] = 4 * wb + t;
    }
    if (!A.cap[va]) {
      for (int s = 0; s < 4; ++s) {
        int d = 4 * va + s;
        bool oa = A.over[d], ob = B.over[f[d]];
        if ((oa != ob) != mirror) return false;
      }
    }
    return true;
  };

  if (!place(0, 0, b0)) return false;
  std::vector<int> stack = {0};
  int placed = 1;
  while (!stack.empty()) {
    int va = stack.back();
    stack.pop_back();
    for (int s = 0; s < 4; ++s) {
      int d = 4 * va + s;
      int e = A.theta[d];
      int g = B.theta[f[d]];
      if (e < 0) {
        if (g != e) return false;  // same leg id, or leg vs edge mismatch
        continue;
      }
      if (g < 0) return false;
      int ve = e / 4;
      if (f[e] == -1) {
        if (!place(ve, e % 4, g)) return false;
        stack.push_back(ve);
        ++placed;
      } else if (f[e] != g) {
        return false;
      }
    }
  }
  return placed == A.nv;  // fails only for disconnected inputs
}

void require_iso_ready(const Diagram& D) {
  check_valid(D);
  if (D.nv == 0) return;
  // a loose loop next to crossings has no recorded face, so the map is
  // underdetermined; only the all-loose case is meaningful
  if (D.loose_loops > 0) throw diagram_error("map isomorphism needs a connected diagram");
  // own reachability: loose loops ride along as a count, the dart graph
  // itself must be one piece
  std::vector<char> vis(D.nv, 0);
  std::vector<int> stack = {0};
  vis[0] = 1;
  int seen = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int s = 0; s < 4; ++s) {
      int e = D.theta[4 * v + s];
      if (e >= 0 && !vis[e / 4]) {
        vis[e / 4] = 1;
        stack.push_back(e / 4);
        ++seen;
      }
    }
  }
  if (seen != D.nv) throw diagram_error("map isomorphism needs a connected diagram");
}

}  // namespace

std::vector<MapIso> all_isos(const Diagram& A, const Diagram& B, bool reflect, bool mirror) {
  require_iso_ready(A);
  require_iso_ready(B);
  std::vector<MapIso> out;
  if (A.nv != B.nv || A.loose_loops != B.loose_loops) return out;
  if (A.nv == 0) {
    out.push_back({{}, reflect, mirror});
    return out;
  }
  std::vector<int> f;
  for (int b0 = 0; b0 < B.darts(); ++b0)
    if (try_anchor(A, B, b0, reflect, mirror, f)) out.push_back({f, reflect, mirror});
  return out;
}

std::optional<MapIso> find_iso(const Diagram& A, const Diagram& B, bool reflect, bool mirror) {
  require_iso_ready(A);
  require_iso_ready(B);
  if (A.nv != B.nv || A.loose_loops != B.loose_loops) return std::nullopt;
  if (A.nv == 0) return MapIso{{}, reflect, mirror};
  std::vector<int> f;
  for (int b0 = 0; b0 < B.darts(); ++b0)
    if (try_anchor(A, B, b0, reflect, mirror, f)) return MapIso{f, reflect, mirror};
  return std::nullopt;
}

bool iso_exists(const Diagram& A, const Diagram& B, bool reflect, bool mirror) {
  return find_iso(A, B, reflect, mirror).has_value();
}

std::vector<MapIso> automorphisms(const Diagram& D) {
  std::vector<MapIso> out;
  for (int r = 0; r < 2; ++r)
    for (int m = 0; m < 2; ++m) {
      auto part = all_isos(D, D, r, m);
      out.insert(out.end(), part.begin(), part.end());
    }
  return out;
}

MapIso compose(const MapIso& a, const MapIso& b) {
  if (a.f.size() != b.f.size()) throw diagram_error("composing isos of different diagrams");
  MapIso c;
  c.f.resize(b.f.size());
  for (size_t d = 0; d < b.f.size(); ++d) c.f[d] = a.f[b.f[d]];
  c.reflect = a.reflect != b.reflect;
  c.mirror = a.mirror != b.mirror;
  return c;
}

bool is_identity(const MapIso& a) {
  if (a.reflect || a.mirror) return false;
  for (size_t d = 0; d < a.f.size(); ++d)
    if (a.f[d] != (int)d) return false;
  return true;
}

int aut_order(const MapIso& a, int cap) {
  MapIso p = a;
  for (int n = 1; n <= cap; ++n) {
    if (is_identity(p)) return n;
    p = compose(a, p);
  }
  return 0;
}

// Deterministic relabel: breadth-first from the anchor dart, new vertex ids
// in discovery order, each vertex rotated so its discovery dart is slot 0.
static std::vector<long long> code_from(const Diagram& D, int a0) {
  const int n = D.darts();
  std::vector<int> p(n, -1);
  std::vector<int> order;  // old vertex ids in discovery order
  order.reserve(D.nv);
  auto place = [&](int v, int s_in) {
    int vid = (int)order.size();
    order.push_back(v);
    for (int s = 0; s < 4; ++s) p[4 * v + s] = 4 * vid + (s - s_in + 4) % 4;
  };
  place(a0 / 4, a0 % 4);
  for (size_t k = 0; k < order.size(); ++k) {
    int v = order[k];
    // visit neighbours in new slot order so discovery depends only on labels
    for (int t = 0; t < 4; ++t) {
      int s = -1;
      for (int u = 0; u < 4; ++u)
        if (p[4 * v + u] % 4 == t) s = u;
      int e = D.theta[4 * v + s];
      if (e >= 0 && p[e] == -1) place(e / 4, e % 4);
    }
  }
  std::vector<long long> code;
  code.push_back(D.nv);
  code.push_back(D.loose_loops);
  std::vector<int> inv(n);
  for (int d = 0; d < n; ++d) inv[p[d]] = d;
  for (int nd = 0; nd < n; ++nd) {
    int d = inv[nd];
    int t = D.theta[d];
    code.push_back(t >= 0 ? p[t] : t);
    code.push_back(D.cap[d / 4] ? 2 : (D.over[d] ? 1 : 0));
  }
  return code;
}

std::string canonical_code(const Diagram& D) {
  require_iso_ready(D);
  std::vector<long long> best;
  if (D.nv == 0) {
    best = {0, D.loose_loops};
  } else {
    for (int a0 = 0; a0 < D.darts(); ++a0) {
      auto c = code_from(D, a0);
      if (best.empty() || c < best) best = std::move(c);
    }
  }
  std::ostringstream os;
  for (size_t i = 0; i < best.size(); ++i) os << (i ? "," : "") << best[i];
  return os.str();
}

}  // namespace altk
