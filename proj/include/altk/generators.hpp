#pragma once

#include <optional>
#include <string>
#include <vector>

#include "altk/projection.hpp"
#include "altk/tangle.hpp"

namespace altk {

struct generator_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A turban pattern J(u,v) with the meander bookkeeping on top of the raw
// template: inside_sigma[h] marks the holes enclosed by the circle that
// weaves between the two innermost hole rings (for u = 3 these are exactly
// the holes of the inner ring).  Every hole's north points radially outward.
struct Turban {
  const JewelTemplate* pattern = nullptr;
  bool is_jewel = false;  // u >= 3 and v >= 3
  std::vector<char> inside_sigma;
};

Turban turban(int u, int v);

// Families of closed alternating knot diagrams.
//
//   figure8            the 4-crossing knot
//   torus2             torus2(m) closes a horizontal m-twist row, T(2,m)
//   turban             turban(u,v) with every hole filled by a single crossing
//   mirror_turban      J(3,v) with a tangle G in the holes outside the meander
//                      circle and its horizontal flip inside; the quarter-turn
//                      exchange of the two rings gives an order-2v symmetry
//                      site when v is the relevant power of two
//   spliced_turban     the mirror_turban on J(3,2) with one extra tangle F
//                      spliced across the central bigon and a reflected copy
//                      across the outer bigon, the two fixed regions of the
//                      quarter turn
//   dasbach_hougardy   mirror_closure of [F1, F2 plumbed on a horizontal band,
//                      one crossing in the north]; extra_central puts one more
//                      crossing on the band between the two fillings
struct FamilySpec {
  enum class Family {
    figure8,
    torus2,
    turban,
    mirror_turban,
    spliced_turban,
    dasbach_hougardy,
  };
  Family family = Family::figure8;
  int u = 0, v = 0;                // turban shape; torus2 stores m in v
  std::vector<TangleExpr> tangles; // mirror: {G}; spliced: {F[,G]}; dh: {F1,F2}
  bool extra_central = false;
};

FamilySpec figure8_spec();
FamilySpec torus2_spec(int m);
FamilySpec turban_spec(int u, int v);
FamilySpec mirror_turban_spec(int v, TangleExpr filling);
// The splice tangle must be flype-equivalent to its half turn but have no
// flype image that is syntactically equal to its own half turn; the hole
// filling defaults to asymmetric_filling().
FamilySpec spliced_turban_spec(TangleExpr splice);
FamilySpec spliced_turban_spec(TangleExpr splice, TangleExpr filling);
FamilySpec dh_spec(TangleExpr F1, TangleExpr F2, bool extra_central = false);

struct GeneratedKnot {
  Diagram diagram;               // closed, alternating, reduced, prime
  std::string name;              // family word, e.g. "dh(P(1,-2), 3)"
  std::string label;             // catalogue name when one is known
  std::optional<TangleExpr> core;  // the tangle the construction closes over
};

// Renders the family and validates the result: connected, alternating,
// reduced, prime, and a single component.  Multi-component specs (an even
// torus row, a filling that joins boundary points on the same side) throw.
GeneratedKnot build(const FamilySpec& spec);

// Glue F to a reflected mirror copy of itself along a circle through all
// four boundary points (the copy is the diagonal reflection, so the two
// Seifert arcs close up instead of doubling) and repaint alternating.  The
// closure is achiral by construction whenever F is flype-equivalent to its
// half turn F*.
Diagram mirror_closure(const TangleExpr& F);

// Condition for fillings: the two strands join opposite boundary points
// (NE to SW and NW to SE) as in a single crossing.  Fillings with this
// connectivity keep the filled turban a knot.
bool opposite_strands(const TangleExpr& G);

// The stock hole filling: the least-crossing alternating tangle that joins
// opposite boundary points and is not flype-equivalent to its vertical flip.
const TangleExpr& asymmetric_filling();

// All dasbach_hougardy specs with rational fillings and at most c_max
// crossings, both fillings of at least three crossings, links filtered out,
// deduplicated up to swapping the two fillings.
std::vector<FamilySpec> dh_census(int c_max);

}  // namespace altk
