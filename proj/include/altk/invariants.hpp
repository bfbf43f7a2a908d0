#pragma once

#include <string>
#include <vector>

#include "altk/projection.hpp"

namespace altk {

// Laurent polynomial in A with integer coefficients; c[k] multiplies
// A^(lo + k), zero is the empty vector.
struct Laurent {
  int lo = 0;
  std::vector<long long> c;
  bool zero() const { return c.empty(); }
  int hi() const { return lo + (int)c.size() - 1; }
};

bool operator==(const Laurent& a, const Laurent& b);
inline bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }
Laurent operator+(const Laurent& a, const Laurent& b);
Laurent operator-(const Laurent& a);
Laurent operator*(const Laurent& a, const Laurent& b);
Laurent lau_mono(long long coeff, int exp);
Laurent lau_conj(const Laurent& a);  // A -> 1/A
Laurent lau_delta();                 // -A^2 - A^-2, the loop value
std::string lau_str(const Laurent& a);

// The strand-level invariants below want an honest closed knot or link
// diagram: closed, cap-free, and connected (a bare unknot may instead be
// loose loops with no crossings).

int seifert_circles(const Diagram& D);
int seifert_h(const Diagram& D);  // crossings - circles + 1
int writhe(const Diagram& D);     // sum of crossing signs under orient()

// Signature via the checkerboard form with its orientation correction,
// computed exactly; both colour classes are evaluated and must agree.
int signature(const Diagram& D);

// Kauffman bracket, unreduced: the empty diagram gives 1, every closed
// loop contributes a factor of delta.
Laurent bracket(const Diagram& D);

// Bracket rescaled by (-A^3)^(-writhe).  Unlike the raw bracket this agrees
// across diagrams of the same knot with different crossing counts, so it is
// the right comparator when a rewrite changes the diagram.
Laurent normalized_bracket(const Diagram& D);

}  // namespace altk
