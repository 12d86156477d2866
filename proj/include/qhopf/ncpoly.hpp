#pragma once

// Noncommutative polynomials over a Presentation.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qhopf/presentation.hpp"
#include "qhopf/qrat.hpp"

namespace qhopf {

class NCPoly {
 public:
  /// The zero polynomial.
  explicit NCPoly(const Presentation& p) : pres_(&p), terms_(WordLess{&p}) {}
  NCPoly(const Presentation& p, const QRat& scalar);

  /// c * w as a raw (possibly non-normal) term.
  static NCPoly monomial(const Presentation& p, Word w, const QRat& c = QRat(1));
  /// A single generator by name; throws UnknownGenerator.
  static NCPoly generator(const Presentation& p, std::string_view name);

  const Presentation& presentation() const { return *pres_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  QRat coeff(const Word& w) const;
  /// True when every stored word is a normal word.
  bool is_normal() const;

  void add_term(const Word& w, const QRat& c);

  NCPoly operator-() const;
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const QRat& s);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(NCPoly a, const QRat& s) { return a *= s; }
  friend NCPoly operator*(const QRat& s, NCPoly a) { return a *= s; }
  /// Algebra product; the result is in normal form.
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  NCPoly& operator*=(const NCPoly& o) { return *this = *this * o; }
  NCPoly pow(unsigned k) const;

  /// Equality in the algebra (normal forms compared term by term).
  friend bool operator==(const NCPoly& a, const NCPoly& b);

  /// Canonical text of the normal form, e.g. "b + q^-1 b^2 c".
  std::string to_string() const;

 private:
  const Presentation* pres_;
  Terms terms_;
};

NCPoly normalize(const NCPoly& x);
/// Anti-multiplicative involution; scalars are fixed. Throws
/// PresentationMismatch when the presentation has no star map.
NCPoly star(const NCPoly& x);
/// Common weight of all normal-form terms; nullopt for zero or mixed weights.
std::optional<int> weight(const NCPoly& x);
/// Splits the normal form into homogeneous parts.
std::map<int, NCPoly> weight_decomposition(const NCPoly& x);

/// The algebra morphism sending letter i to images[i], applied to x; the
/// result is normalized in `target`.
NCPoly substitute(const NCPoly& x, const Presentation& target, const std::vector<NCPoly>& images);

/// Raw text of stored terms without normalizing.
std::string terms_text(const Presentation& p, const Terms& t);

void require_same(const Presentation& a, const Presentation& b);

struct Divergence {
  Word word;
  std::string word_text;
  std::string rule_a;  // left-hand sides of the two rules whose reducts disagree
  std::string rule_b;
  std::string reduct_a;
  std::string reduct_b;
};

struct ConfluenceReport {
  std::string presentation;
  std::size_t words_checked = 0;
  std::vector<Divergence> divergences;
  bool ok() const { return divergences.empty(); }
};

/// Checks that every one-step reduct of every word of length <= max_len
/// reaches the same normal form. samples == 0 means exhaustive; otherwise
/// `samples` uniformly random words are drawn with the given seed.
ConfluenceReport check_confluence(const Presentation& p, int max_len, std::size_t samples = 0,
                                  std::uint64_t seed = 1);

}  // namespace qhopf
