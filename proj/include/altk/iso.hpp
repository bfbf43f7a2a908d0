#pragma once

#include <optional>
#include <string>
#include <vector>

#include "altk/projection.hpp"

namespace altk {

// A sphere homeomorphism carrying diagram A onto diagram B, recorded as the
// induced dart bijection.  reflect: the homeomorphism reverses the sphere's
// orientation, so the rotation order at every vertex flips.  mirror: over and
// under strands exchange (B is seen from the far side of the projection
// sphere).  Boundary legs must correspond by id; callers relabel legs first
// when a boundary permutation is intended.
struct MapIso {
  std::vector<int> f;  // dart d of A -> dart f[d] of B
  bool reflect = false;
  bool mirror = false;
};

// Every iso A -> B with the given flags; empty when none exists.  Requires
// both diagrams valid and the dart graph connected.
std::vector<MapIso> all_isos(const Diagram& A, const Diagram& B, bool reflect, bool mirror);
std::optional<MapIso> find_iso(const Diagram& A, const Diagram& B, bool reflect, bool mirror);
bool iso_exists(const Diagram& A, const Diagram& B, bool reflect, bool mirror);

// Self-isos, all four flag combinations together.
std::vector<MapIso> automorphisms(const Diagram& D);

MapIso compose(const MapIso& a, const MapIso& b);  // apply b, then a
bool is_identity(const MapIso& a);
// Smallest n >= 1 with a^n = id, or 0 if none within the cap.
int aut_order(const MapIso& a, int cap = 256);

// Label-independent serialization: two diagrams get equal codes exactly when
// an orientation-preserving, over/under-preserving, leg-id-preserving iso
// exists.  Minimised over start darts.
std::string canonical_code(const Diagram& D);

}  // namespace altk
