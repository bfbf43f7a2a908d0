#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "altk/decompose.hpp"
#include "altk/iso.hpp"
#include "altk/projection.hpp"

namespace altk {

struct achirality_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Relabeling of the structure tree that preserves adjacency, sends every
// twisted band of weight a to one of weight -a and every jewel to a jewel
// with the same fingerprint.  Any mirror symmetry of the knot must cast such
// a shadow on the tree, so an empty enumeration already proves chirality.
// Kind data is copied from the tree so the fixed locus can be read off the
// automorphism alone.
struct TreeAutomorphism {
  std::vector<int> piece_map;
  std::vector<int> circle_map;
  std::vector<char> piece_is_band;              // indexed like piece_map
  std::vector<std::array<int, 2>> circle_ends;  // pieces joined by each circle
};

// All weight-negating automorphisms, identity included when every band has
// weight zero (a tree of jewels).  Deterministic order.
std::vector<TreeAutomorphism> tree_automorphisms(const StructureTree& T);

// A weight-negating automorphism of a tree pins exactly one vertex or one
// edge (the center of its fixed subtree); an invariant edge must join two
// pieces of the same kind.  A fixed vertex is usually a jewel, but the
// decomposition here is finer than strictly necessary: crossingless hub
// pieces of weight zero can also sit at the center, reported as `band`.
enum class LocusKind { jewel, band, circle_jj, circle_bb };

struct FixedLocus {
  LocusKind kind = LocusKind::jewel;
  int piece = -1;   // jewel locus
  int circle = -1;  // circle locus
};

FixedLocus fixed_locus(const TreeAutomorphism& phi);

// ---- flype orbit ---------------------------------------------------------

// A projection together with the knot orientation carried through the flype
// isotopies from the orbit seed.  out[d] is true when dart d points away
// from its crossing along the carried direction.
struct OrientedProjection {
  Diagram diagram;
  std::vector<char> out;
};

// All single-flype images: for every incompressible circle and every
// crossing sitting on it with both its circle edges at cyclically adjacent
// cut positions, turn the far side over and carry the crossing across.
std::vector<OrientedProjection> flype_images(const OrientedProjection& P);

struct FlypeOrbit {
  std::vector<OrientedProjection> reps;  // sorted by canonical code
  bool complete = true;                  // false when the budget was hit
};

// Breadth-first enumeration memoized on canonical codes.  budget caps the
// number of distinct codes kept.
FlypeOrbit flype_orbit(const Diagram& D, long budget = 1000000);

// ---- classification ------------------------------------------------------

enum class ProjectionType { none, type_I, type_II };

struct AchiralityReport {
  bool plus_achiral = false;
  bool minus_achiral = false;
  // Smallest 2-power order among maps realizing the orientation-preserving
  // mirror symmetry; 0 when the knot is not +achiral.
  int order = 0;
  std::optional<FixedLocus> locus;
  ProjectionType projection_type = ProjectionType::none;

  // evidence
  std::vector<TreeAutomorphism> automorphisms;
  std::optional<Diagram> witness_projection;  // a self-mirror orbit member
  std::optional<MapIso> witness;              // its map onto its own mirror
  std::optional<MapIso> tait_involution;      // order-2 witness when -achiral
  long orbit_size = 0;
  int signature_value = 0;
  bool bracket_self_conjugate = false;
  std::vector<std::string> notes;
};

// Decides chirality / +achirality / -achirality of a reduced prime
// alternating knot diagram by scanning its flype orbit against the mirror
// image, with the tree automorphism and signature gates short-circuiting the
// chiral bulk.  Throws achirality_error on invalid input, on a budget
// overrun, and on any internal cross-check failure.
AchiralityReport classify(const Diagram& D, long budget = 1000000);

std::string report_text(const AchiralityReport& R);

// ---- minimal achiral projection search ------------------------------------

struct KjResult {
  enum class Outcome { found, not_found, inconclusive };
  Outcome outcome = Outcome::inconclusive;
  std::optional<Diagram> projection;  // self-mirror orbit member when found
  std::optional<MapIso> witness;
  long orbit_size = 0;
  // weaker necessary test per orbit member, aligned with code order: does
  // the black face graph match the white one as an abstract multigraph?
  std::vector<char> checkerboard;
  std::string reason;  // set when inconclusive
};

// Searches the flype orbit for a projection that is its own mirror image.
// Deterministic: the reported witness lives on the smallest canonical code.
// A budget overrun yields inconclusive, never not_found.
KjResult kj_check(const Diagram& D, long budget = 1000000);

}  // namespace altk
