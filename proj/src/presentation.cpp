#include "qhopf/presentation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qhopf/errors.hpp"

namespace qhopf {

bool WordLess::operator()(const Word& a, const Word& b) const { return pres->compare(a, b) < 0; }

Presentation::Presentation(std::string name, std::vector<LetterInfo> letters,
                           std::vector<std::optional<StarImage>> star, std::vector<Rule> rules)
    : name_(std::move(name)),
      letters_(std::move(letters)),
      star_(std::move(star)),
      rules_(std::move(rules)) {
  if (star_.size() != letters_.size())
    throw std::invalid_argument(name_ + ": star table size mismatch");
  for (const Rule& r : rules_) {
    if (r.lhs.empty()) throw std::invalid_argument(name_ + ": empty left-hand side");
    for (Letter l : r.lhs)
      if (l >= letters_.size()) throw std::invalid_argument(name_ + ": letter out of range");
    const int w = weight(r.lhs);
    for (const auto& [word, coeff] : r.rhs) {
      if (compare(word, r.lhs) >= 0)
        throw std::invalid_argument(name_ + ": rule " + word_text(r.lhs) +
                                    " does not decrease the word order");
      if (weight(word) != w)
        throw std::invalid_argument(name_ + ": rule " + word_text(r.lhs) +
                                    " is not weight-homogeneous");
    }
  }
}

bool Presentation::has_star() const {
  return std::all_of(star_.begin(), star_.end(), [](const auto& s) { return s.has_value(); });
}

std::optional<Letter> Presentation::find_letter(std::string_view name) const {
  for (std::size_t i = 0; i < letters_.size(); ++i)
    if (letters_[i].name == name) return static_cast<Letter>(i);
  return std::nullopt;
}

int Presentation::compare(const Word& a, const Word& b) const {
  int wa = 0, wb = 0;
  for (Letter l : a) wa += letters_[l].order_weight;
  for (Letter l : b) wb += letters_[l].order_weight;
  if (wa != wb) return wa < wb ? -1 : 1;
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

int Presentation::weight(const Word& w) const {
  int s = 0;
  for (Letter l : w) s += letters_.at(l).weight;
  return s;
}

std::vector<Presentation::Match> Presentation::matches(const Word& w) const {
  std::vector<Match> out;
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    for (std::size_t r = 0; r < rules_.size(); ++r) {
      const Word& lhs = rules_[r].lhs;
      if (pos + lhs.size() > w.size()) continue;
      if (std::equal(lhs.begin(), lhs.end(), w.begin() + static_cast<std::ptrdiff_t>(pos)))
        out.push_back({pos, r});
    }
  }
  return out;
}

bool Presentation::is_normal(const Word& w) const {
  for (std::size_t pos = 0; pos < w.size(); ++pos)
    for (const Rule& r : rules_)
      if (pos + r.lhs.size() <= w.size() &&
          std::equal(r.lhs.begin(), r.lhs.end(), w.begin() + static_cast<std::ptrdiff_t>(pos)))
        return false;
  return true;
}

std::vector<std::pair<Word, QRat>> Presentation::rewrite(const Word& w, const Match& m) const {
  const Rule& r = rules_.at(m.rule);
  std::vector<std::pair<Word, QRat>> out;
  out.reserve(r.rhs.size());
  for (const auto& [word, coeff] : r.rhs) {
    Word nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(m.position));
    nw.insert(nw.end(), word.begin(), word.end());
    nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(m.position + r.lhs.size()),
              w.end());
    out.emplace_back(std::move(nw), coeff);
  }
  return out;
}

std::size_t Presentation::WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Letter l : w) h = (h ^ l) * 1099511628211ull;
  return h ^ w.size();
}

std::shared_ptr<const Terms> Presentation::normal_form(const Word& w) const {
  {
    std::lock_guard lock(cache_mutex_);
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
  }
  auto result = std::make_shared<Terms>(WordLess{this});
  const auto m = matches(w);
  if (m.empty()) {
    result->emplace(w, QRat(1));
  } else {
    for (const auto& [nw, coeff] : rewrite(w, m.front())) {
      for (const auto& [tw, tc] : *normal_form(nw)) {
        auto [it, inserted] = result->try_emplace(tw, coeff * tc);
        if (!inserted) {
          it->second += coeff * tc;
          if (it->second.is_zero()) result->erase(it);
        }
      }
    }
  }
  std::lock_guard lock(cache_mutex_);
  return cache_.try_emplace(w, std::move(result)).first->second;
}

std::string Presentation::word_text(const Word& w) const {
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const std::size_t k = j - i;
    const LetterInfo& info = letters_[w[i]];
    if (!first) os << ' ';
    first = false;
    if (info.unitary && info.name.size() > 1 && info.name.back() == '\'') {
      os << info.name.substr(0, info.name.size() - 1) << "^-" << k;
    } else {
      os << info.name;
      if (k > 1) os << '^' << k;
    }
    i = j;
  }
  return os.str();
}

// ---------------------------------------------------------------- registry

namespace {

QRat qp(int k, long c = 1) { return QRat::q_power(k, c); }

// a and d are moved to the right of b and c; normal words are b^j c^k a^i
// and b^j c^k d^l.
std::unique_ptr<Presentation> make_suq2() {
  enum : Letter { b, c, a, d };
  std::vector<LetterInfo> letters = {
      {"b", -1, 0, false}, {"c", +1, 0, false}, {"a", +1, 1, false}, {"d", -1, 1, false}};
  std::vector<std::optional<StarImage>> star = {
      StarImage{-qp(1), c}, StarImage{-qp(-1), b}, StarImage{QRat(1), d}, StarImage{QRat(1), a}};
  std::vector<Rule> rules = {
      {{a, b}, {{{b, a}, qp(1)}}},
      {{a, c}, {{{c, a}, qp(1)}}},
      {{d, b}, {{{b, d}, qp(-1)}}},
      {{d, c}, {{{c, d}, qp(-1)}}},
      {{c, b}, {{{b, c}, QRat(1)}}},
      {{d, a}, {{{}, QRat(1)}, {{b, c}, qp(-1)}}},
      {{a, d}, {{{}, QRat(1)}, {{b, c}, qp(1)}}},
  };
  return std::make_unique<Presentation>("suq2", std::move(letters), std::move(star),
                                        std::move(rules));
}

// B A = q^2 A B is the orientation compatible with rho_+ and with the
// embedding A = -q^{-1} b c, B = -b a.
std::unique_ptr<Presentation> make_sphere() {
  enum : Letter { A, B, Bs };
  std::vector<LetterInfo> letters = {{"A", 0, 1, false}, {"B", 0, 1, false}, {"B'", 0, 1, false}};
  std::vector<std::optional<StarImage>> star = {StarImage{QRat(1), A}, StarImage{QRat(1), Bs},
                                                StarImage{QRat(1), B}};
  std::vector<Rule> rules = {
      {{B, A}, {{{A, B}, qp(2)}}},
      {{Bs, A}, {{{A, Bs}, qp(-2)}}},
      {{Bs, B}, {{{A}, QRat(1)}, {{A, A}, QRat(-1)}}},
      {{B, Bs}, {{{A}, qp(2)}, {{A, A}, -qp(4)}}},
  };
  return std::make_unique<Presentation>("sphere", std::move(letters), std::move(star),
                                        std::move(rules));
}

std::unique_ptr<Presentation> make_disc() {
  enum : Letter { z, zs };
  std::vector<LetterInfo> letters = {{"z", 0, 1, false}, {"z'", 0, 1, false}};
  std::vector<std::optional<StarImage>> star = {StarImage{QRat(1), zs}, StarImage{QRat(1), z}};
  std::vector<Rule> rules = {
      {{zs, z}, {{{}, QRat(1) - qp(2)}, {{z, zs}, qp(2)}}},
  };
  return std::make_unique<Presentation>("disc", std::move(letters), std::move(star),
                                        std::move(rules));
}

std::unique_ptr<Presentation> make_disc_ext() {
  enum : Letter { s, z, zs };
  std::vector<LetterInfo> letters = {{"s", 0, 1, false}, {"z", 0, 1, false}, {"z'", 0, 1, false}};
  std::vector<std::optional<StarImage>> star = {StarImage{QRat(1), s}, StarImage{QRat(1), zs},
                                                StarImage{QRat(1), z}};
  std::vector<Rule> rules = {
      {{z, s}, {{{s, z}, qp(-1)}}},
      {{zs, s}, {{{s, zs}, qp(1)}}},
      {{z, zs}, {{{}, QRat(1)}, {{s, s}, QRat(-1)}}},
      {{zs, z}, {{{}, QRat(1)}, {{s, s}, -qp(2)}}},
  };
  return std::make_unique<Presentation>("discext", std::move(letters), std::move(star),
                                        std::move(rules));
}

std::unique_ptr<Presentation> make_isometry() {
  enum : Letter { S, Ss };
  std::vector<LetterInfo> letters = {{"S", 0, 1, false}, {"S'", 0, 1, false}};
  std::vector<std::optional<StarImage>> star = {StarImage{QRat(1), Ss}, StarImage{QRat(1), S}};
  std::vector<Rule> rules = {{{Ss, S}, {{{}, QRat(1)}}}};
  return std::make_unique<Presentation>("isometry", std::move(letters), std::move(star),
                                        std::move(rules));
}

std::unique_ptr<Presentation> make_circle(const std::string& pres_name, const std::string& g) {
  std::vector<LetterInfo> letters = {{g, +1, 1, true}, {g + "'", -1, 1, true}};
  std::vector<std::optional<StarImage>> star = {StarImage{QRat(1), 1}, StarImage{QRat(1), 0}};
  std::vector<Rule> rules = {{{0, 1}, {{{}, QRat(1)}}}, {{1, 0}, {{{}, QRat(1)}}}};
  return std::make_unique<Presentation>(pres_name, std::move(letters), std::move(star),
                                        std::move(rules));
}

}  // namespace

const Presentation& suq2() {
  static const auto p = make_suq2();
  return *p;
}
const Presentation& sphere() {
  static const auto p = make_sphere();
  return *p;
}
const Presentation& disc() {
  static const auto p = make_disc();
  return *p;
}
const Presentation& disc_ext() {
  static const auto p = make_disc_ext();
  return *p;
}
const Presentation& isometry() {
  static const auto p = make_isometry();
  return *p;
}
const Presentation& circle() {
  static const auto p = make_circle("circle", "v");
  return *p;
}
const Presentation& laurent() {
  static const auto p = make_circle("laurent", "u");
  return *p;
}

const Presentation& presentation_by_name(std::string_view selector) {
  if (selector == "suq2") return suq2();
  if (selector == "sphere") return sphere();
  if (selector == "disc") return disc();
  if (selector == "discext") return disc_ext();
  if (selector == "circle") return circle();
  if (selector == "isometry") return isometry();
  if (selector == "laurent") return laurent();
  throw PresentationMismatch("unknown algebra selector '" + std::string(selector) + "'");
}

}  // namespace qhopf
