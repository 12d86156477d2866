#pragma once

// Finitely presented *-algebras over Q(q): a letter alphabet, oriented
// rewrite rules and a star map. The built-in presentations are the quantum
// group SU_q(2), the Podles sphere, the quantum disc, the extended disc
// <z, s>, the isometry (Toeplitz) algebra <S>, and two copies of the circle.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qhopf/qrat.hpp"

namespace qhopf {

using Letter = std::uint8_t;
using Word = std::vector<Letter>;

struct LetterInfo {
  std::string name;  // ASCII, starred letters end in '\''
  int weight = 0;    // U(1)-weight under the right coaction
  int order_weight = 1;
  bool unitary = false;  // star(x) is the two-sided inverse of x
};

/// star(letter) = coeff * letter'.
struct StarImage {
  QRat coeff;
  Letter letter;
};

struct Rule {
  Word lhs;
  std::vector<std::pair<Word, QRat>> rhs;
};

class Presentation;

/// The declared word order: total order weight, then length, then
/// lexicographic in letter ids. Compatible with concatenation.
struct WordLess {
  const Presentation* pres = nullptr;
  bool operator()(const Word& a, const Word& b) const;
};

using Terms = std::map<Word, QRat, WordLess>;

class Presentation {
 public:
  /// Validates that every rule strictly decreases the word order and is
  /// weight-homogeneous; throws std::invalid_argument otherwise.
  Presentation(std::string name, std::vector<LetterInfo> letters,
               std::vector<std::optional<StarImage>> star, std::vector<Rule> rules);

  Presentation(const Presentation&) = delete;
  Presentation& operator=(const Presentation&) = delete;

  const std::string& name() const { return name_; }
  std::size_t size() const { return letters_.size(); }
  const LetterInfo& letter(Letter l) const { return letters_.at(l); }
  const std::vector<LetterInfo>& letters() const { return letters_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const std::optional<StarImage>& star(Letter l) const { return star_.at(l); }
  const std::vector<std::optional<StarImage>>& star_table() const { return star_; }
  bool has_star() const;

  std::optional<Letter> find_letter(std::string_view name) const;

  int compare(const Word& a, const Word& b) const;
  int weight(const Word& w) const;
  bool is_normal(const Word& w) const;

  /// A single rewrite step: apply `rule` at `position`.
  struct Match {
    std::size_t position;
    std::size_t rule;
  };
  std::vector<Match> matches(const Word& w) const;
  /// Result of one rewrite step as a linear combination of words.
  std::vector<std::pair<Word, QRat>> rewrite(const Word& w, const Match& m) const;

  /// Normal form of a word under the leftmost-first strategy (memoized).
  std::shared_ptr<const Terms> normal_form(const Word& w) const;

  std::string word_text(const Word& w) const;

 private:
  struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
  };

  std::string name_;
  std::vector<LetterInfo> letters_;
  std::vector<std::optional<StarImage>> star_;
  std::vector<Rule> rules_;
  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<Word, std::shared_ptr<const Terms>, WordHash> cache_;
};

// Built-in presentations (process-wide singletons).
const Presentation& suq2();       // a b c d
const Presentation& sphere();     // A B B'
const Presentation& disc();       // z z'
const Presentation& disc_ext();   // s z z'
const Presentation& isometry();   // S S'
const Presentation& circle();     // v v'  (O(U(1)))
const Presentation& laurent();    // u u'  (symbols on the circle)

/// Lookup by CLI selector: suq2, sphere, disc, discext, circle, isometry, laurent.
const Presentation& presentation_by_name(std::string_view selector);

}  // namespace qhopf
