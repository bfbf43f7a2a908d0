#pragma once

#include <string>
#include <vector>

#include "altk/projection.hpp"

namespace altk {

struct tangle_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Arborescent tangle expressions.
//
// A Band is a horizontal twisted band: |a1| crossings, then slot 1, then
// |a2| crossings, ... , slot k, |a_{k+1}| crossings.  Slots are plumbed,
// i.e. the filling is glued in turned by a quarter turn relative to the
// band, which is what makes nested bands realise continued fractions.
// A Pole carries one extra crossing at the north or south pole of its
// child (the +Q / Q+ decorations).  A Jewel instantiates a stored hole
// pattern with every hole filled; it renders closed and may only appear
// at the root of an expression.
enum class NodeKind { twist, band, pole, jewel };

struct TangleExpr {
  NodeKind kind = NodeKind::twist;
  int n = 0;           // twist: signed half-twist count; pole: crossing sign
  bool north = true;   // pole: crossing at the north pole?
  std::vector<int> weights;       // band: k+1 intermediate weights
  std::string tpl;                // jewel: template name
  std::vector<int> turns;         // jewel: quarter turns of each filling's north mark
  std::vector<TangleExpr> slots;  // band/jewel fillings; pole: exactly one child

  bool operator==(const TangleExpr&) const = default;
};

TangleExpr twist(int n);
// Collapses to a plain twist when there are no slots.
TangleExpr band(std::vector<int> weights, std::vector<TangleExpr> slots);
TangleExpr jewel(const std::string& tpl, std::vector<TangleExpr> slots);

// Structural hypotheses, checked recursively: weight count = slot count + 1;
// a slotless band needs |a1| >= 2; a one-slot band forbids both weights 0;
// nonzero weights of one band share a sign; band slots and pole children
// carry at least two crossings (a bare crossing is only a jewel filling);
// closed jewels sit at the root only.
void validate_tangle(const TangleExpr& F);

enum class Transform { star, h, v, add_north, add_south };

// star/h/v are the half turn and the two in-plane pi-rotations; they permute
// the boundary corners (star: NW<->SE, NE<->SW; h: NW<->SW, NE<->SE;
// v: NW<->NE, SW<->SE) and rewrite the tree to match.  add_north/add_south
// wrap the tangle with one pole crossing whose sign is chosen to keep an
// alternating child alternating.
TangleExpr transform_tangle(const TangleExpr& F, Transform t);

// Word grammar:
//   C(a1,...,au)            rational, continued-fraction entries
//   P(x1,...,xu)            the same chain in plumbing weights, x_i = (-1)^(i+1) a_i
//   B[a1,...,ak+1](T1,...,Tk)  band with fillings
//   J{name}(T1,...,Tm)      jewel template with all m holes filled
//   N+ T / S+ T             pole crossing (N- / S- select the other sign)
//   *T, hT, vT              transforms, applied at parse time
//   n                       bare integer: raw twist atom (jewel fillings)
// C words reject zero entries and a final entry of absolute value 1;
// P words reject interior zeros and |x_u| < 2.
TangleExpr parse_tangle(const std::string& text);
std::string tangle_word(const TangleExpr& F);

int crossing_total(const TangleExpr& F);
bool rational(const TangleExpr& F);
// Essential circle count: 1 for a maximal rational subtangle, else own
// boundary plus the slots' counts.
int complexity(const TangleExpr& F);

// Deterministic planar render.  Tangles get boundary legs 0=NE, 1=NW, 2=SW,
// 3=SE; a root jewel renders closed.
Diagram render(const TangleExpr& F);

enum class Closure { numerator, denominator };
// numerator joins NW-NE and SW-SE, denominator NW-SW and NE-SE.
Diagram close(const TangleExpr& F, Closure mode);

// One flype: move one crossing of a band across the adjacent slot (the slot
// turns half a turn about the transfer axis, v on the stored filling), or
// carry a pole crossing to the opposite pole.  path = child indices from
// the root; pos = weight index the crossing leaves.
struct FlypeMove {
  std::vector<int> path;
  int pos = 0;
  bool leftward = false;
};

TangleExpr apply_flypes(const TangleExpr& F, const std::vector<FlypeMove>& script);

// Flype-invariant normal form: per band all crossings gather at weight 1 and
// each slot turns by the parity of the crossings that passed over it; pole
// crossings normalise to the north; jewel fillings are minimised over the
// template's stored non-mirror symmetries.  Idempotent.
TangleExpr canonicalize(const TangleExpr& F);

enum class EqMode { flype, star, h, v };
// flype: equal canonical forms.  star/h/v: F against the transformed G, so
// equivalent(F, F, star) decides F ~ F*.  A jewel template without a stored
// symmetry table makes inequality undecidable: that case throws.
bool equivalent(const TangleExpr& F, const TangleExpr& G, EqMode mode);

// Jewel templates: patterns of 4-ended holes glued corner to corner.
// adj[4h+c] = peer corner id; corners 0=NE,1=NW,2=SW,3=SE in the hole's own
// compass, north pointing radially outward.  A symmetry maps hole i to
// perm[i] applying transform t[i] (0=id,1=h,2=v,3=star) to the filling;
// mirror marks the elements that carry the filled diagram to its mirror.
struct JewelSym {
  std::vector<int> perm;
  std::vector<int> t;
  bool mirror = false;
};

struct JewelTemplate {
  std::string name;
  int holes = 0;
  std::vector<int> adj;
  std::vector<JewelSym> syms;
  // false when some pattern symmetry needed a quarter turn or a diagonal
  // reflection of a filling, which {id,h,v,star} cannot express; equivalence
  // then refuses to report inequality for diagrams using this template
  bool syms_complete = true;
};

// Turbans "J(u,v)": the closed u-strand braid of the (u,v) torus link with
// every crossing cut out, (u-1)v holes.  "6*" is J(3,3).  Symmetries are
// computed from the gluing pattern; for u = 3 they form the dihedral action
// on the 2v holes.
const JewelTemplate& jewel_template(const std::string& name);

}  // namespace altk
