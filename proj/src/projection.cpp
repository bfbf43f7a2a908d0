#include "altk/projection.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

namespace altk {

void check_valid(const Diagram& D) {
  size_t n = (size_t)D.darts();
  if (D.theta.size() != n || D.over.size() != n || D.cap.size() != (size_t)D.nv)
    throw diagram_error("field sizes disagree with vertex count");
  if (D.loose_loops < 0) throw diagram_error("negative loose loop count");
  std::vector<char> leg_seen;
  for (int d = 0; d < (int)n; ++d) {
    int t = D.theta[d];
    if (t == Diagram::unset) throw diagram_error("unpaired dart " + std::to_string(d));
    if (t < 0) {
      int leg = ~t;
      if ((size_t)leg >= leg_seen.size()) leg_seen.resize(leg + 1, 0);
      if (leg_seen[leg]++) throw diagram_error("duplicate boundary leg " + std::to_string(leg));
      continue;
    }
    if (t >= (int)n || t == d || D.theta[t] != d)
      throw diagram_error("theta is not a fixed-point-free involution at dart " + std::to_string(d));
  }
  for (size_t leg = 0; leg < leg_seen.size(); ++leg)
    if (!leg_seen[leg]) throw diagram_error("boundary legs are not consecutive from 0");
  for (int v = 0; v < D.nv; ++v) {
    if (D.cap[v]) continue;
    if (D.over[4 * v] != D.over[4 * v + 2] || D.over[4 * v + 1] != D.over[4 * v + 3] ||
        D.over[4 * v] == D.over[4 * v + 1])
      throw diagram_error("crossing " + std::to_string(v) + " lacks an over/under diagonal");
  }
}

bool is_closed(const Diagram& D) {
  for (int t : D.theta)
    if (t < 0 && t != Diagram::unset) return false;
  return true;
}

int leg_count(const Diagram& D) {
  int k = 0;
  for (int t : D.theta)
    if (t < 0 && t != Diagram::unset) ++k;
  return k;
}

int crossing_count(const Diagram& D) {
  int c = 0;
  for (int v = 0; v < D.nv; ++v) c += !D.cap[v];
  return c;
}

bool connected(const Diagram& D) {
  if (D.nv == 0) return D.loose_loops <= 1;
  if (D.loose_loops > 0) return false;
  std::vector<char> vis(D.darts(), 0);
  std::vector<int> stack = {0};
  vis[0] = 1;
  while (!stack.empty()) {
    int d = stack.back();
    stack.pop_back();
    int nb[2] = {sigma(d), D.theta[d]};
    for (int e : nb)
      if (e >= 0 && !vis[e]) {
        vis[e] = 1;
        stack.push_back(e);
      }
  }
  return std::find(vis.begin(), vis.end(), 0) == vis.end();
}

std::vector<int> faces(const Diagram& D, int* nfaces) {
  if (!is_closed(D)) throw diagram_error("faces need a closed diagram");
  std::vector<int> face(D.darts(), -1);
  int nf = 0;
  for (int d0 = 0; d0 < D.darts(); ++d0) {
    if (face[d0] != -1) continue;
    int d = d0;
    do {
      face[d] = nf;
      d = sigma(D.theta[d]);
    } while (d != d0);
    ++nf;
  }
  if (nfaces) *nfaces = nf;
  return face;
}

bool planar(const Diagram& D) {
  if (!is_closed(D)) throw diagram_error("planarity check needs a closed diagram");
  if (!connected(D)) throw diagram_error("planarity check needs a connected diagram");
  if (D.nv == 0) return true;
  int nf = 0;
  faces(D, &nf);
  return nf == D.nv + 2;  // V - E + F = 2 with E = 2V on a 4-valent map
}

bool alternating(const Diagram& D) {
  for (int d = 0; d < D.darts(); ++d) {
    int t = D.theta[d];
    if (t < 0) continue;
    if (D.cap[vertex_of(d)] || D.cap[vertex_of(t)]) continue;
    if (D.over[d] == D.over[t]) return false;
  }
  return true;
}

int component_count(const Diagram& D) {
  if (!is_closed(D)) throw diagram_error("component count needs a closed diagram");
  for (int v = 0; v < D.nv; ++v)
    if (D.cap[v]) throw diagram_error("component count is for cap-free diagrams");
  std::vector<char> vis(D.darts(), 0);
  int orbits = 0;
  for (int d0 = 0; d0 < D.darts(); ++d0) {
    if (vis[d0]) continue;
    int d = d0;
    do {
      vis[d] = 1;
      d = D.theta[opp(d)];
    } while (d != d0);
    ++orbits;
  }
  return orbits / 2 + D.loose_loops;
}

std::vector<int> nugatory_crossings(const Diagram& D) {
  std::vector<int> face = faces(D);
  std::vector<int> out;
  for (int v = 0; v < D.nv; ++v) {
    if (D.cap[v]) continue;
    if (face[4 * v] == face[4 * v + 2] || face[4 * v + 1] == face[4 * v + 3]) out.push_back(v);
  }
  return out;
}

namespace {

// vertices reachable with two edges removed; edges as dart pairs
int side_size(const Diagram& D, int cut1, int cut2, std::vector<char>& mark) {
  std::fill(mark.begin(), mark.end(), 0);
  std::vector<int> stack = {0};
  mark[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int s = 0; s < 4; ++s) {
      int d = 4 * v + s;
      if (d == cut1 || d == cut2 || D.theta[d] == cut1 || D.theta[d] == cut2) continue;
      int w = vertex_of(D.theta[d]);
      if (!mark[w]) {
        mark[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count;
}

}  // namespace

bool prime(const Diagram& D) {
  if (!is_closed(D)) throw diagram_error("primality check needs a closed diagram");
  if (crossing_count(D) <= 1) return true;
  std::vector<std::pair<int, int>> edges;
  for (int d = 0; d < D.darts(); ++d)
    if (D.theta[d] > d) edges.push_back({d, D.theta[d]});
  std::vector<char> mark(D.nv, 0);
  for (size_t i = 0; i < edges.size(); ++i) {
    if (vertex_of(edges[i].first) == vertex_of(edges[i].second)) continue;  // self-loop
    for (size_t j = i + 1; j < edges.size(); ++j) {
      if (vertex_of(edges[j].first) == vertex_of(edges[j].second)) continue;
      int reach = side_size(D, edges[i].first, edges[j].first, mark);
      if (reach == D.nv) continue;
      // both sides need a real crossing for the cut to be a connected sum
      int inside = 0, outside = 0;
      for (int v = 0; v < D.nv; ++v) (mark[v] ? inside : outside) += !D.cap[v];
      if (inside > 0 && outside > 0) return false;
    }
  }
  return true;
}

Diagram mirror(const Diagram& D) {
  Diagram M = D;
  for (int v = 0; v < M.nv; ++v)
    if (!M.cap[v])
      for (int s = 0; s < 4; ++s) M.over[4 * v + s] ^= 1;
  return M;
}

Diagram reflect(const Diagram& D) {
  auto r = [](int d) { return 4 * (d / 4) + (4 - d % 4) % 4; };
  Diagram R = D;
  for (int d = 0; d < D.darts(); ++d) {
    int t = D.theta[d];
    R.theta[r(d)] = (t >= 0) ? r(t) : t;
    R.over[r(d)] = D.over[d];
  }
  return R;
}

void repaint_alternating(Diagram& D) {
  if (!is_closed(D)) throw diagram_error("repaint needs a closed diagram");
  int nf = 0;
  auto face = faces(D, &nf);
  std::vector<int> col(nf, -1);
  col[face[0]] = 0;
  std::vector<int> st = {face[0]};
  while (!st.empty()) {
    int f = st.back();
    st.pop_back();
    for (int d = 0; d < D.darts(); ++d) {
      if (face[d] != f) continue;
      int g = face[D.theta[d]];
      if (col[g] == -1) {
        col[g] = 1 - col[f];
        st.push_back(g);
      }
    }
  }
  for (int d = 0; d < D.darts(); ++d) D.over[d] = (char)col[face[d]];
}

std::vector<char> orient(const Diagram& D) {
  if (!is_closed(D)) throw diagram_error("orientation needs a closed diagram");
  std::vector<char> out(D.darts(), 2);
  for (int d0 = 0; d0 < D.darts(); ++d0) {
    if (out[d0] != 2) continue;
    int d = d0;
    do {
      out[d] = 1;
      out[D.theta[d]] = 0;
      d = opp(D.theta[d]);
    } while (d != d0);
  }
  return out;
}

Diagram from_pd(const std::string& text) {
  Diagram D;
  size_t i = 0, n = text.size();
  auto skip = [&] { while (i < n && (std::isspace((unsigned char)text[i]) || text[i] == ',')) ++i; };
  skip();
  bool wrapped = false;
  if (i + 1 < n && (text[i] == 'P' || text[i] == 'p') && (text[i + 1] == 'D' || text[i + 1] == 'd')) {
    i += 2;
    skip();
    if (i >= n || text[i] != '[') throw diagram_error("expected [ after PD");
    ++i;
    wrapped = true;
  }
  std::vector<std::array<long, 4>> rows;
  while (true) {
    skip();
    if (i >= n) break;
    if (text[i] == ']') { ++i; break; }
    if (text[i] != 'X' && text[i] != 'x') throw diagram_error("expected crossing term X[...]");
    ++i;
    skip();
    char open = text[i];
    if (open != '[' && open != '(') throw diagram_error("expected bracket after X");
    char close = open == '[' ? ']' : ')';
    ++i;
    std::array<long, 4> row;
    for (int k = 0; k < 4; ++k) {
      skip();
      size_t used = 0;
      row[k] = std::stol(text.substr(i), &used);
      if (row[k] < 1) throw diagram_error("PD labels are positive");
      i += used;
    }
    skip();
    if (i >= n || text[i] != close) throw diagram_error("unterminated crossing term");
    ++i;
    rows.push_back(row);
  }
  skip();
  if (wrapped && i < n) throw diagram_error("trailing characters after PD[...]");
  if (rows.empty()) {
    D.loose_loops = 1;
    return D;
  }
  std::vector<std::vector<int>> where;
  for (size_t r = 0; r < rows.size(); ++r) {
    int v = D.add_vertex();
    D.set_over(v, false);  // slot 0 carries the under strand
    for (int s = 0; s < 4; ++s) {
      size_t lab = (size_t)rows[r][s];
      if (where.size() <= lab) where.resize(lab + 1);
      where[lab].push_back(4 * v + s);
    }
  }
  for (size_t lab = 1; lab < where.size(); ++lab) {
    if (where[lab].empty()) continue;
    if (where[lab].size() != 2)
      throw diagram_error("PD label " + std::to_string(lab) + " appears " +
                          std::to_string(where[lab].size()) + " times");
    D.join(where[lab][0], where[lab][1]);
  }
  check_valid(D);
  return D;
}

std::string to_pd(const Diagram& D) {
  if (!is_closed(D)) throw diagram_error("PD export needs a closed diagram");
  for (int v = 0; v < D.nv; ++v)
    if (D.cap[v]) throw diagram_error("PD export is for cap-free diagrams");
  if (D.nv == 0) return "PD[]";
  std::vector<char> out = orient(D);
  std::vector<int> label(D.darts(), 0);
  int next = 1;
  std::vector<char> seen(D.darts(), 0);
  for (int d0 = 0; d0 < D.darts(); ++d0) {
    if (seen[d0] || !out[d0]) continue;
    int d = d0;
    do {
      seen[d] = seen[D.theta[d]] = 1;
      label[d] = label[D.theta[d]] = next++;
      d = opp(D.theta[d]);
    } while (d != d0);
  }
  std::vector<std::array<int, 4>> rows;
  for (int v = 0; v < D.nv; ++v) {
    int u = -1;
    for (int s = 0; s < 4; ++s)
      if (!D.over[4 * v + s] && !out[4 * v + s]) u = 4 * v + s;
    if (u < 0) throw diagram_error("crossing without incoming under dart");
    rows.push_back({label[u], label[sigma(u)], label[opp(u)], label[sigma_inv(u)]});
  }
  std::sort(rows.begin(), rows.end());
  std::ostringstream os;
  os << "PD[";
  for (size_t r = 0; r < rows.size(); ++r) {
    if (r) os << ",";
    os << "X[" << rows[r][0] << "," << rows[r][1] << "," << rows[r][2] << "," << rows[r][3] << "]";
  }
  os << "]";
  return os.str();
}

std::string to_dot(const Diagram& D) {
  std::ostringstream os;
  os << "graph diagram {\n  node [shape=point];\n";
  for (int v = 0; v < D.nv; ++v)
    if (D.cap[v]) os << "  v" << v << " [shape=square,label=\"cap\"];\n";
  for (int d = 0; d < D.darts(); ++d) {
    int t = D.theta[d];
    if (t >= 0 && t > d)
      os << "  v" << vertex_of(d) << " -- v" << vertex_of(t) << " [taillabel=\"" << d % 4
         << (D.over[d] ? "o" : "u") << "\",headlabel=\"" << t % 4 << (D.over[t] ? "o" : "u")
         << "\"];\n";
    else if (t < 0)
      os << "  leg" << ~t << " [shape=plaintext]; v" << vertex_of(d) << " -- leg" << ~t << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace altk
