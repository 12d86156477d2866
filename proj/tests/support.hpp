#pragma once

#include <cstdint>
#include <cstdlib>
#include <map>
#include <random>
#include <string>

#include "qhopf/ncpoly.hpp"

namespace testsupport {

inline std::uint64_t seed() {
  const char* s = std::getenv("QHOPF_SEED");
  return s && *s ? std::stoull(s) : 20240611ULL;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(seed());
  return g;
}

// Independent SU_q(2) normal forms: words are strings over "abcd",
// coefficients are Laurent polynomials in q with integer coefficients.
using Laurent = std::map<int, long long>;
using Naive = std::map<std::string, Laurent>;

inline void add_to(Naive& out, const std::string& w, const Laurent& c, int shift, long long sign) {
  Laurent& slot = out[w];
  for (const auto& [k, v] : c) {
    slot[k + shift] += sign * v;
    if (slot[k + shift] == 0) slot.erase(k + shift);
  }
  if (slot.empty()) out.erase(w);
}

inline Naive naive_normal_form(const std::string& word) {
  struct R {
    const char* lhs;
    int shift;            // coefficient q^shift on the swapped word
    const char* swapped;  // empty when the rule is of d a / a d type
  };
  static const R rules[] = {{"ab", 1, "ba"}, {"ac", 1, "ca"}, {"db", -1, "bd"},
                            {"dc", -1, "cd"}, {"cb", 0, "bc"}};
  Naive todo{{word, Laurent{{0, 1}}}}, done;
  while (!todo.empty()) {
    auto [w, c] = *todo.begin();
    todo.erase(todo.begin());
    bool rewritten = false;
    for (std::size_t i = 0; i + 1 < w.size() && !rewritten; ++i) {
      const std::string pair = w.substr(i, 2);
      for (const R& r : rules)
        if (pair == r.lhs) {
          add_to(todo, w.substr(0, i) + r.swapped + w.substr(i + 2), c, r.shift, 1);
          rewritten = true;
          break;
        }
      if (rewritten) break;
      if (pair == "da" || pair == "ad") {
        const std::string head = w.substr(0, i), tail = w.substr(i + 2);
        add_to(todo, head + tail, c, 0, 1);
        add_to(todo, head + "bc" + tail, c, pair == "da" ? -1 : 1, 1);
        rewritten = true;
      }
    }
    if (!rewritten) add_to(done, w, c, 0, 1);
  }
  return done;
}

inline qhopf::NCPoly to_poly(const Naive& n) {
  const qhopf::Presentation& p = qhopf::suq2();
  qhopf::NCPoly out(p);
  for (const auto& [w, c] : n) {
    qhopf::Word word;
    for (char ch : w) word.push_back(*p.find_letter(std::string(1, ch)));
    for (const auto& [k, v] : c) out.add_term(word, qhopf::QRat::q_power(k, mpq_class(static_cast<long>(v))));
  }
  return out;
}

inline std::string random_word(const std::string& alphabet, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), pick(0, alphabet.size() - 1);
  std::string w;
  const std::size_t n = len(rng());
  for (std::size_t i = 0; i < n; ++i) w += alphabet[pick(rng())];
  return w;
}

inline qhopf::NCPoly word_poly(const qhopf::Presentation& p, const std::string& letters) {
  qhopf::Word w;
  for (char ch : letters) w.push_back(*p.find_letter(std::string(1, ch)));
  return qhopf::NCPoly::monomial(p, w);
}

}  // namespace testsupport
