#include "qhopf/ncpoly.hpp"

#include <random>
#include <sstream>

#include "qhopf/errors.hpp"

namespace qhopf {

void require_same(const Presentation& a, const Presentation& b) {
  if (&a != &b)
    throw PresentationMismatch("operands over different algebras: " + a.name() + " vs " +
                               b.name());
}

NCPoly::NCPoly(const Presentation& p, const QRat& scalar) : NCPoly(p) {
  add_term({}, scalar);
}

NCPoly NCPoly::monomial(const Presentation& p, Word w, const QRat& c) {
  for (Letter l : w)
    if (l >= p.size()) throw UnknownGenerator("letter id out of range for " + p.name());
  NCPoly r(p);
  r.add_term(w, c);
  return r;
}

NCPoly NCPoly::generator(const Presentation& p, std::string_view name) {
  auto l = p.find_letter(name);
  if (!l) throw UnknownGenerator("unknown generator '" + std::string(name) + "' for " + p.name());
  return monomial(p, {*l});
}

QRat NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? QRat() : it->second;
}

bool NCPoly::is_normal() const {
  for (const auto& [w, c] : terms_)
    if (!pres_->is_normal(w)) return false;
  return true;
}

void NCPoly::add_term(const Word& w, const QRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCPoly NCPoly::operator-() const {
  NCPoly r(*this);
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  require_same(*pres_, *o.pres_);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  require_same(*pres_, *o.pres_);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const QRat& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  require_same(*a.pres_, *b.pres_);
  NCPoly r(*a.pres_);
  Word buf;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      buf = wa;
      buf.insert(buf.end(), wb.begin(), wb.end());
      const QRat c = ca * cb;
      for (const auto& [w, k] : *a.pres_->normal_form(buf)) r.add_term(w, c * k);
    }
  }
  return r;
}

NCPoly NCPoly::pow(unsigned k) const {
  NCPoly r(*pres_, QRat(1));
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

bool operator==(const NCPoly& a, const NCPoly& b) {
  if (a.pres_ != b.pres_) return false;
  return normalize(a - b).is_zero();
}

std::string terms_text(const Presentation& p, const Terms& t) {
  if (t.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : t) {
    std::string term;
    if (w.empty()) {
      term = c.to_string();
    } else {
      const std::string word = p.word_text(w);
      if (c.is_one())
        term = word;
      else if ((-c).is_one())
        term = "-" + word;
      else
        term = c.to_string() + " " + word;
    }
    if (first) {
      out = term;
      first = false;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

std::string NCPoly::to_string() const { return terms_text(*pres_, normalize(*this).terms_); }

NCPoly normalize(const NCPoly& x) {
  if (x.is_normal()) return x;
  const Presentation& p = x.presentation();
  NCPoly r(p);
  for (const auto& [w, c] : x.terms())
    for (const auto& [nw, k] : *p.normal_form(w)) r.add_term(nw, c * k);
  return r;
}

NCPoly star(const NCPoly& x) {
  const Presentation& p = x.presentation();
  if (!p.has_star()) throw PresentationMismatch(p.name() + " has no star map");
  NCPoly r(p);
  for (const auto& [w, c] : x.terms()) {
    Word sw;
    sw.reserve(w.size());
    QRat coeff = c;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      const StarImage& img = *p.star(*it);
      coeff *= img.coeff;
      sw.push_back(img.letter);
    }
    r.add_term(sw, coeff);
  }
  return normalize(r);
}

std::optional<int> weight(const NCPoly& x) {
  const NCPoly n = normalize(x);
  std::optional<int> w;
  for (const auto& [word, c] : n.terms()) {
    const int k = n.presentation().weight(word);
    if (w && *w != k) return std::nullopt;
    w = k;
  }
  return w;
}

std::map<int, NCPoly> weight_decomposition(const NCPoly& x) {
  const NCPoly n = normalize(x);
  const Presentation& p = n.presentation();
  std::map<int, NCPoly> out;
  for (const auto& [word, c] : n.terms())
    out.try_emplace(p.weight(word), p).first->second.add_term(word, c);
  return out;
}

// ---------------------------------------------------------------- confluence

namespace {

NCPoly reduct_normal_form(const Presentation& p, const Word& w, const Presentation::Match& m) {
  NCPoly r(p);
  for (const auto& [nw, c] : p.rewrite(w, m))
    for (const auto& [tw, k] : *p.normal_form(nw)) r.add_term(tw, c * k);
  return r;
}

void check_word(const Presentation& p, const Word& w, ConfluenceReport& rep) {
  ++rep.words_checked;
  const auto ms = p.matches(w);
  if (ms.size() < 2) return;
  const NCPoly ref = reduct_normal_form(p, w, ms.front());
  for (std::size_t i = 1; i < ms.size(); ++i) {
    const NCPoly alt = reduct_normal_form(p, w, ms[i]);
    if (!normalize(ref - alt).is_zero()) {
      rep.divergences.push_back({w, p.word_text(w), p.word_text(p.rules()[ms.front().rule].lhs),
                                 p.word_text(p.rules()[ms[i].rule].lhs),
                                 terms_text(p, ref.terms()), terms_text(p, alt.terms())});
      return;
    }
  }
}

}  // namespace

ConfluenceReport check_confluence(const Presentation& p, int max_len, std::size_t samples,
                                  std::uint64_t seed) {
  ConfluenceReport rep;
  rep.presentation = p.name();
  const auto n = static_cast<Letter>(p.size());
  if (samples == 0) {
    for (int len = 0; len <= max_len; ++len) {
      Word w(static_cast<std::size_t>(len), 0);
      for (;;) {
        check_word(p, w, rep);
        int i = len - 1;
        while (i >= 0 && w[static_cast<std::size_t>(i)] == n - 1) w[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++w[static_cast<std::size_t>(i)];
      }
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> len_dist(0, max_len);
    std::uniform_int_distribution<int> letter_dist(0, n - 1);
    for (std::size_t s = 0; s < samples; ++s) {
      Word w(static_cast<std::size_t>(len_dist(rng)));
      for (auto& l : w) l = static_cast<Letter>(letter_dist(rng));
      check_word(p, w, rep);
    }
  }
  return rep;
}

NCPoly substitute(const NCPoly& x, const Presentation& target, const std::vector<NCPoly>& images) {
  const Presentation& src = x.presentation();
  if (images.size() != src.size())
    throw PresentationMismatch("substitution table size mismatch for " + src.name());
  for (const NCPoly& img : images) require_same(img.presentation(), target);
  NCPoly r(target);
  for (const auto& [w, c] : x.terms()) {
    NCPoly t(target, c);
    for (Letter l : w) {
      t = t * images[l];
      if (t.is_zero()) break;
    }
    r += t;
  }
  return normalize(r);
}

}  // namespace qhopf
