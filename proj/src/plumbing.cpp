#include "altk/plumbing.hpp"

#include <cassert>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace altk {

namespace {

using i128 = __int128;

long long checked_ll(i128 v, const char* what) {
  if (v > (i128)INT64_MAX / 4 || v < (i128)INT64_MIN / 4)
    throw std::overflow_error(std::string("fraction overflow in ") + what);
  return (long long)v;
}

}  // namespace

Frac make_frac(long long p, long long q) {
  if (q == 0) return Frac{1, 0};
  if (q < 0) { p = -p; q = -q; }
  long long g = std::gcd(p < 0 ? -p : p, q);
  if (g > 1) { p /= g; q /= g; }
  return Frac{p, q};
}

std::string to_string(const Frac& f) {
  if (f.infinite()) return "inf";
  if (f.q == 1) return std::to_string(f.p);
  return std::to_string(f.p) + "/" + std::to_string(f.q);
}

Word cform_of(const Word& w) {
  Word a(w.size());
  for (size_t i = 0; i < w.size(); ++i) a[i] = (i % 2 == 0) ? w[i] : -w[i];
  return a;
}

// Evaluate a1 + 1/(a2 + 1/(... + 1/au)) projectively from the right:
// (p,q) <- (1,0), then (p,q) <- (a*p + q, p).  Zeros anywhere in the word
// need no special casing; an infinite total value surfaces as q == 0.
Frac cf_pair(const Word& w) {
  Word a = cform_of(w);
  i128 p = 1, q = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    i128 np = (i128)*it * p + q;
    q = p;
    p = np;
    if (p > (i128)1 << 100 || p < -((i128)1 << 100))
      throw std::overflow_error("continued fraction blow-up too large");
  }
  return make_frac(checked_ll(p, "cf_pair"), checked_ll(q, "cf_pair"));
}

Frac cf_value(const Word& w) {
  Frac f = cf_pair(w);
  if (f.infinite())
    throw undefined_fraction_error("continued fraction of " + render_word(w) + " is infinite");
  return f;
}

Word blow_up(const Word& w, int i, int sign) {
  if (sign != 1 && sign != -1) throw word_op_error("blow-up sign must be +1 or -1");
  if (i < 1 || (size_t)i > w.size()) throw word_op_error("blow-up position out of range");
  Word r;
  r.reserve(w.size() + 1);
  r.insert(r.end(), w.begin(), w.begin() + (i - 1));
  r.push_back(w[i - 1] + sign);
  r.push_back(sign);
  if ((size_t)i < w.size()) {
    r.push_back(w[i] + sign);
    r.insert(r.end(), w.begin() + i + 1, w.end());
  }
  return r;
}

Word absorb_zero(const Word& w) {
  size_t j = 1;
  while (j < w.size() && w[j] != 0) ++j;
  if (j >= w.size()) {
    if (!w.empty() && w[0] == 0)
      throw word_op_error("leading zero is not absorbable");
    throw word_op_error("no interior or final zero to absorb");
  }
  Word r;
  r.reserve(w.size());
  if (j + 1 == w.size()) {
    // (..., a, 0) -> (...): the band before a final zero unknots away with it
    r.insert(r.end(), w.begin(), w.begin() + (j - 1));
  } else {
    r.insert(r.end(), w.begin(), w.begin() + (j - 1));
    r.push_back(w[j - 1] + w[j + 1]);
    r.insert(r.end(), w.begin() + j + 2, w.end());
  }
  return r;
}

Word even_form(const Frac& f) {
  if (f.infinite()) throw undefined_fraction_error("even form of the infinite fraction");
  long long p = f.p, q = f.q;
  Word b;
  while (true) {
    if (q == 1) {
      b.push_back(p);
      break;
    }
    // nearest even integer to p/q; a tie would force q == 1
    long long m = p / (2 * q);
    if (p % (2 * q) < 0) --m;   // floor division
    long long rem = p - m * 2 * q;
    assert(rem != q);
    long long e = (rem < q) ? 2 * m : 2 * (m + 1);
    b.push_back(e);
    long long np = q, nq = p - e * q;
    if (nq < 0) { np = -np; nq = -nq; }
    p = np;
    q = nq;
  }
  return cform_of(b);  // b_j -> y_j = (-1)^(j+1) b_j
}

namespace {

// Direction that moves the front entry toward the greedy even continued
// fraction entry for the tail value at position i (0-based).  The blow-up can
// only shift the entry by one, but repeated steps plus absorptions converge
// on the greedy digit; rounding by the entry alone loops on words like P(1,2).
int greedy_sign(const Word& cur, size_t i) {
  Word tail(cur.begin() + i, cur.end());
  Frac x = cf_pair(tail);               // standalone value, a1 = +z_i
  long long ai = cur[i];
  long long e;
  if (x.infinite()) {
    e = ai + (ai > 0 ? 1 : -1);
  } else {
    long long m = x.p / (2 * x.q);
    if (x.p % (2 * x.q) < 0) --m;
    long long rem = x.p - m * 2 * x.q;
    if (rem < x.q) e = 2 * m;
    else if (rem > x.q) e = 2 * (m + 1);
    else e = (x.p / x.q > ai) ? x.p / x.q - 1
           : (x.p / x.q < ai) ? x.p / x.q + 1
                              : ai + (ai > 0 ? 1 : -1);
  }
  return e > ai ? 1 : -1;
}

}  // namespace

RewriteChain rewrite_chain(const Word& w) {
  Frac target = cf_pair(w);
  if (target.infinite())
    throw undefined_fraction_error("cannot rewrite a word with infinite fraction");
  RewriteChain chain;
  chain.initial = w;
  Word cur = w;

  auto absorb_logged = [&](size_t j) {
    Word next = absorb_zero(cur);
    chain.steps.push_back({RewriteStep::AbsorbZero, (int)j + 1, 0, next});
    cur = next;
  };

  // Pre-normalization: blow interior +-1 bands down (a blow-down is a blow-up
  // of opposite sign followed by the absorption of the zero it creates).  The
  // march below assumes digit gaps of one, which plain words with mixed +-1
  // entries can violate; each pass here shortens the word, so this terminates.
  while (true) {
    size_t j = 1;
    while (j < cur.size() && cur[j] != 0) ++j;
    if (j < cur.size()) { absorb_logged(j); continue; }
    size_t k = 1;
    while (k + 1 < cur.size() && cur[k] != 1 && cur[k] != -1) ++k;
    if (k + 1 >= cur.size()) break;
    int s = cur[k] > 0 ? -1 : 1;
    Word next = blow_up(cur, (int)k + 1, s);
    chain.steps.push_back({RewriteStep::BlowUp, (int)k + 1, s, next});
    cur = next;
  }

  std::set<Word> seen;
  for (int guard = 0; ; ++guard) {
    if (guard > 100000 || !seen.insert(cur).second)
      throw std::runtime_error("rewrite_chain failed to terminate on " + render_word(w));
    size_t j = 1;
    while (j < cur.size() && cur[j] != 0) ++j;
    if (j < cur.size()) {
      absorb_logged(j);
      continue;
    }
    size_t i = 0;
    while (i + 1 < cur.size() && cur[i] % 2 == 0) ++i;
    if (i + 1 >= cur.size()) {
      // Interior all even.  A +-1 tail is a blown-up end; undo it with an end
      // blow-up of opposite sign and the absorption that follows, otherwise
      // the word is in even form and we are done.
      if (cur.size() < 2 || (cur.back() != 1 && cur.back() != -1)) break;
      int s = cur.back() > 0 ? -1 : 1;
      Word next = blow_up(cur, (int)cur.size(), s);
      chain.steps.push_back({RewriteStep::BlowUp, (int)cur.size(), s, next});
      cur = next;
      continue;
    }
    // When the tail value at the front is already an integer the digit wants
    // to terminate the fraction, and pushing at the front ping-pongs; collapse
    // the tail from its rightmost odd interior entry instead.
    Word tail(cur.begin() + i, cur.end());
    Frac x = cf_pair(tail);
    size_t at = i;
    if (x.q <= 1 && tail.size() >= 2) {  // integer or infinite tail value
      at = cur.size() - 2;
      while (at > i && cur[at] % 2 == 0) --at;
    }
    int s = greedy_sign(cur, at);
    Word next = blow_up(cur, (int)at + 1, s);
    chain.steps.push_back({RewriteStep::BlowUp, (int)at + 1, s, next});
    cur = next;
  }
  chain.final_word = cur;
  return chain;
}

std::string render_word(const Word& w, char letter) {
  std::string s(1, letter);
  s += '(';
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  s += ')';
  return s;
}

std::string render_step(const Word& before, const RewriteStep& s) {
  std::ostringstream os;
  os << render_word(before);
  if (s.kind == RewriteStep::BlowUp)
    os << " --blowup(" << (s.sign > 0 ? '+' : '-') << "," << s.pos << ")--> ";
  else
    os << " --absorb(" << s.pos << ")--> ";
  os << render_word(s.result);
  return os.str();
}

Word parse_word(const std::string& text) {
  size_t i = 0, n = text.size();
  auto skip = [&] { while (i < n && std::isspace((unsigned char)text[i])) ++i; };
  skip();
  bool cform = false;
  if (i < n && (text[i] == 'P' || text[i] == 'p' || text[i] == 'C' || text[i] == 'c')) {
    cform = (text[i] == 'C' || text[i] == 'c');
    ++i;
    skip();
    if (i >= n || text[i] != '(') throw word_op_error("expected '(' after word letter");
    ++i;
  }
  Word w;
  while (true) {
    skip();
    if (i >= n) break;
    if (text[i] == ')') { ++i; break; }
    size_t used = 0;
    long long v;
    try {
      v = std::stoll(text.substr(i), &used);
    } catch (const std::exception&) {
      throw word_op_error("bad entry in word: " + text);
    }
    if (v > 1000000 || v < -1000000) throw word_op_error("word entry out of range");
    w.push_back(v);
    i += used;
    skip();
    if (i < n && text[i] == ',') ++i;
  }
  skip();
  if (i != n) throw word_op_error("trailing characters in word: " + text);
  if (w.empty()) throw word_op_error("empty word");
  return cform ? cform_of(w) : w;
}

}  // namespace altk
