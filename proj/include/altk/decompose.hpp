#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "altk/projection.hpp"

namespace altk {

struct decompose_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A circle on the sphere meeting the diagram transversally in four points,
// one on each of four distinct edges.  route[i] is a dart of the i-th cut
// edge, oriented so the circle runs through face(theta(route[i])) =
// face(route[i+1]) between cut points i and i+1.  Such a circle is
// incompressible exactly when the four visited faces are pairwise distinct.
//
// An isotopy class is pinned down combinatorially by the induced partition
// of the crossings: inside[v] is true on the side not containing crossing 0,
// and the cut edge set is then forced (the four edges joining the sides).
struct HasemanCircle {
  std::array<int, 4> route{};
  std::vector<char> inside;

  int inside_count() const {
    int k = 0;
    for (char c : inside) k += (c != 0);
    return k;
  }
};

bool operator==(const HasemanCircle& a, const HasemanCircle& b);
bool operator<(const HasemanCircle& a, const HasemanCircle& b);

// All isotopy classes of incompressible Haseman circles, deterministically
// ordered.  Requires a closed, connected, planar, prime diagram with at
// least two crossings and no nugatory ones.
std::vector<HasemanCircle> haseman_circles(const Diagram& D);

enum class PieceKind { singleton, band, jewel };

// One diagram determined by a family of disjoint circles: the crossings
// between a circle and the circles immediately inside it, closed up with one
// cap vertex per boundary circle.
struct Piece {
  PieceKind kind = PieceKind::jewel;
  std::vector<int> crossings;  // original crossing ids, sorted (may be empty)
  std::vector<int> boundary;   // indices into the family, sorted
  std::vector<int> cap_of;     // capped-diagram cap vertex per boundary entry
  int parent = -1;             // boundary entry separating the piece from the
                               // root region, -1 for the outermost piece
  Diagram capped;
  std::vector<int> gaps;  // band only: signed crossing runs between caps,
                          // cyclic, starting at the lowest boundary entry
  int weight = 0;         // band only: sum of gaps
};

// Cut the diagram along a laminar family of circles.  Pieces come out in a
// deterministic order (outermost piece first, then by circle index); each
// capped diagram is validated to be closed, connected and planar.
std::vector<Piece> cut_pieces(const Diagram& D,
                              const std::vector<HasemanCircle>& family);

// Exact trichotomy for a piece cut out by `family`.  Throws decompose_error
// when the piece is none of the three kinds (a decomposition bug).
PieceKind classify_piece(const Diagram& D,
                         const std::vector<HasemanCircle>& family,
                         const Piece& P);

// The canonical Conway family: the unique minimal family of disjoint,
// pairwise non-parallel incompressible circles all of whose pieces are
// twisted bands or jewels.  Computed by refinement plus greedy deletion;
// uniqueness is cross-checked by re-running under a shuffled enumeration
// order and demanding the identical class set.
std::vector<HasemanCircle> canonical_family(const Diagram& D);

// Tree of the canonical pieces; edges are the family circles.
struct StructureTree {
  std::vector<HasemanCircle> circles;
  std::vector<Piece> pieces;
  std::vector<std::pair<int, int>> ends;  // per circle: the two pieces joined
  bool arborescent = false;               // no jewel piece
};

StructureTree structure_tree(const Diagram& D);

// Vertex label used in tree comparisons: "B:<weight>" for a twisted band,
// "J:<fingerprint>" for a jewel.  The fingerprint is the canonical code of
// the capped piece minimized over reflection and mirror, which makes it
// stable under flypes (a flype can hand a jewel to the far side of the
// sphere reflected and with all crossings switched, but never rearranges
// its interior).
std::string piece_label(const Piece& P);

// Canonical string of the labeled tree (AHU at the center); two closures
// have equal strings iff their structure trees agree.
std::string tree_canon(const StructureTree& T);

// DOT rendering: band vertices as boxes labeled "B:a=<w>", jewels as
// diamonds, edges labeled by circle id.
std::string tree_dot(const StructureTree& T);

}  // namespace altk
