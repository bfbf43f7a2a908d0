#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace altk {

struct diagram_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A knot/tangle projection as a combinatorial map.  Vertex v owns darts
// 4v..4v+3 in counterclockwise rotation order; sigma is implicit in the dart
// numbering.  theta pairs dart ends into edges; a negative entry ~k marks the
// dart as free boundary leg k of a tangle.  Cap vertices are virtual 4-valent
// vertices used to close the four legs of a tangle so that faces, planarity
// and isomorphism work uniformly on closed maps; they carry no crossing.
struct Diagram {
  int nv = 0;
  std::vector<int> theta;
  std::vector<char> over;  // per dart; over[d] != over[sigma(d)] at a crossing
  std::vector<char> cap;   // per vertex
  int loose_loops = 0;     // crossingless unknot components

  int darts() const { return 4 * nv; }

  int add_vertex(bool is_cap = false) {
    theta.insert(theta.end(), 4, unset);
    over.insert(over.end(), 4, 0);
    cap.push_back(is_cap ? 1 : 0);
    return nv++;
  }

  // which diagonal pair of slots runs over: true = slots {0,2}
  void set_over(int v, bool slots02_over) {
    over[4 * v + 0] = over[4 * v + 2] = slots02_over;
    over[4 * v + 1] = over[4 * v + 3] = !slots02_over;
  }

  void join(int d1, int d2) {
    if (theta[d1] != unset || theta[d2] != unset)
      throw diagram_error("join on already paired dart");
    theta[d1] = d2;
    theta[d2] = d1;
  }

  void mark_leg(int d, int leg) { theta[d] = ~leg; }

  static constexpr int unset = INT32_MIN;
};

inline int sigma(int d) { return 4 * (d / 4) + (d % 4 + 1) % 4; }
inline int sigma_inv(int d) { return 4 * (d / 4) + (d % 4 + 3) % 4; }
inline int opp(int d) { return 4 * (d / 4) + (d % 4 + 2) % 4; }
inline int vertex_of(int d) { return d / 4; }

void check_valid(const Diagram& D);  // throws diagram_error
bool is_closed(const Diagram& D);    // no boundary legs
int leg_count(const Diagram& D);
int crossing_count(const Diagram& D);  // non-cap vertices
bool connected(const Diagram& D);

// Face orbits of d -> sigma(theta(d)) on a closed diagram.  Returns face ids
// per dart; nfaces receives the count.  Face of dart d is the face on the
// counterclockwise side of the corner (d, sigma d).
std::vector<int> faces(const Diagram& D, int* nfaces = nullptr);

bool planar(const Diagram& D);  // Euler check, closed + connected only
bool alternating(const Diagram& D);
int component_count(const Diagram& D);  // link components, closed only

// Crossings with two opposite corners on the same face; such a crossing can
// be removed by untwisting and the diagram is not minimal.
std::vector<int> nugatory_crossings(const Diagram& D);

// No 2-edge-cut with crossings on both sides (diagrams with <= 1 crossing
// count as prime).
bool prime(const Diagram& D);

Diagram mirror(const Diagram& D);   // flip all crossings, same shadow
Diagram reflect(const Diagram& D);  // reverse the rotation at every vertex

// Recolour the crossings so the diagram is alternating: faces 2-colour the
// sphere, and painting each dart by its face colour alternates along every
// strand.  Of the two alternating assignments this picks the one with dart 0
// on the under-strand.  Closed connected diagrams only.
void repaint_alternating(Diagram& D);

// Per-dart outgoing flags, one consistent orientation per link component,
// deterministic (smallest dart of each component is outgoing).
std::vector<char> orient(const Diagram& D);

Diagram from_pd(const std::string& text);
std::string to_pd(const Diagram& D);
std::string to_dot(const Diagram& D);

}  // namespace altk
