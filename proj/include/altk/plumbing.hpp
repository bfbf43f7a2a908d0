#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace altk {

// Reduced fraction p/q with q >= 0.  q == 0 encodes the infinite value
// (normalized to 1/0), which several word operations produce transiently.
struct Frac {
  long long p = 0;
  long long q = 1;

  bool infinite() const { return q == 0; }
  bool operator==(const Frac&) const = default;
};

struct undefined_fraction_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct word_op_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Frac make_frac(long long p, long long q);
std::string to_string(const Frac& f);

// A plumbing word P(z1,...,zw).  Entries are band weights; the associated
// continued fraction uses a_i = (-1)^(i+1) z_i, so sign bookkeeping between
// the P(...) and C(...) presentations is a pure parity flip.
using Word = std::vector<long long>;

Word cform_of(const Word& w);   // a_i = (-1)^(i+1) z_i, an involution
Frac cf_value(const Word& w);   // throws undefined_fraction_error if the value is infinite
Frac cf_pair(const Word& w);    // same evaluation, but returns 1/0 instead of throwing

// Insert a +-1 band at position i (1-based).  Interior insertion adjusts both
// neighbors; insertion after the last entry adjusts only the left neighbor.
// Fraction-preserving in both cases.
Word blow_up(const Word& w, int i, int sign);

// Remove the first interior or final zero entry:
//   (..., a, 0, b, ...) -> (..., a+b, ...)
//   (..., a, 0)         -> (...)
// A word whose only zero is leading has no absorbable zero and throws; see
// notes in the test file on why the leading position is excluded.
Word absorb_zero(const Word& w);

// Greedy even continued fraction of a finite value, returned as a plumbing
// word.  All entries even, except the last is odd iff p and q are both odd.
Word even_form(const Frac& f);

struct RewriteStep {
  enum Kind { BlowUp, AbsorbZero } kind;
  int pos;    // 1-based position the rule fired at
  int sign;   // blow-up sign, 0 for absorptions
  Word result;
};

struct RewriteChain {
  Word initial;
  std::vector<RewriteStep> steps;
  Word final_word;
};

// March the word to even form by local moves: absorb any interior/final zero
// first, otherwise blow up at the leftmost odd interior entry with the sign
// that rounds it away from zero.  Every step preserves cf_value; the endpoint
// agrees with even_form(cf_value(w)).
RewriteChain rewrite_chain(const Word& w);

std::string render_word(const Word& w, char letter = 'P');
std::string render_step(const Word& before, const RewriteStep& s);
Word parse_word(const std::string& text);  // accepts "P(3,-3,2,-2)", "C(...)" or bare "3,-3,2,-2"

}  // namespace altk
