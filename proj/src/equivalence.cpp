#include "altk/equivalence.hpp"

#include <algorithm>
#include <stdexcept>

namespace altk {

std::vector<std::vector<int>> tree_adjacency(const LabeledTree& T) {
  int n = (int)T.label.size();
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : T.edges) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b)
      throw std::invalid_argument("bad tree edge");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

std::vector<int> tree_centers(const LabeledTree& T) {
  int n = (int)T.label.size();
  if (n == 0) return {};
  if (n == 1) return {0};
  auto adj = tree_adjacency(T);
  std::vector<int> deg(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    deg[v] = (int)adj[v].size();
    if (deg[v] <= 1) layer.push_back(v);
  }
  int alive = n;
  while (alive > 2) {
    std::vector<int> next;
    for (int v : layer) {
      --alive;
      for (int w : adj[v])
        if (--deg[w] == 1) next.push_back(w);
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

static std::string rooted_canon(const std::vector<std::vector<int>>& adj,
                                const std::vector<std::string>& label, int v,
                                int parent) {
  std::vector<std::string> subs;
  for (int w : adj[v])
    if (w != parent) subs.push_back(rooted_canon(adj, label, w, v));
  std::sort(subs.begin(), subs.end());
  std::string s = "(" + label[v];
  for (auto& t : subs) s += t;
  s += ")";
  return s;
}

std::string tree_canonical(const LabeledTree& T) {
  if (T.label.empty()) return "()";
  auto adj = tree_adjacency(T);
  auto c = tree_centers(T);
  if (c.size() == 1) return rooted_canon(adj, T.label, c[0], -1);
  std::string a = rooted_canon(adj, T.label, c[0], c[1]);
  std::string b = rooted_canon(adj, T.label, c[1], c[0]);
  if (b < a) std::swap(a, b);
  return "E" + a + b;
}

// Backtracking over vertices in BFS order from vertex 0; images must respect
// the already-placed neighbourhood, so the partial map always extends an
// isomorphism of induced subtrees.  Trees here are small (tens of vertices).
std::vector<std::vector<int>> tree_automorphisms(
    const LabeledTree& T, const std::function<bool(int, int)>& compat) {
  int n = (int)T.label.size();
  std::vector<std::vector<int>> out;
  if (n == 0) return out;
  auto adj = tree_adjacency(T);
  auto ok = [&](int v, int w) {
    if ((int)adj[v].size() != (int)adj[w].size()) return false;
    return compat ? compat(v, w) : T.label[v] == T.label[w];
  };
  std::vector<int> order;
  {
    std::vector<char> seen(n, 0);
    order.push_back(0);
    seen[0] = 1;
    for (size_t i = 0; i < order.size(); ++i)
      for (int w : adj[order[i]])
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
    if ((int)order.size() != n) throw std::invalid_argument("tree not connected");
  }
  std::vector<int> f(n, -1), used(n, 0);
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      out.push_back(f);
      return;
    }
    int v = order[k];
    for (int w = 0; w < n; ++w) {
      if (used[w] || !ok(v, w)) continue;
      bool fits = true;
      for (int u : adj[v]) {
        if (f[u] == -1) continue;
        bool edge = false;
        for (int x : adj[w]) edge |= (x == f[u]);
        if (!edge) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      f[v] = w;
      used[w] = 1;
      rec(k + 1);
      used[w] = 0;
      f[v] = -1;
    }
  };
  rec(0);
  return out;
}

}  // namespace altk
