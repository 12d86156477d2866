#include "qhopf/hopf.hpp"

#include <algorithm>

#include "qhopf/errors.hpp"

namespace qhopf {

// ---------------------------------------------------------------- Tensor

Tensor Tensor::product(const NCPoly& x, const NCPoly& y) {
  Tensor t({&x.presentation(), &y.presentation()});
  for (const auto& [wx, cx] : x.terms())
    for (const auto& [wy, cy] : y.terms()) t.add({wx, wy}, cx * cy);
  return t;
}

Tensor Tensor::scalar(const QRat& c) {
  Tensor t({});
  if (!c.is_zero()) t.terms_.emplace(Key{}, c);
  return t;
}

void Tensor::add(const Key& words, const QRat& c) {
  if (c.is_zero()) return;
  if (words.size() != legs_.size()) throw PresentationMismatch("tensor rank mismatch");
  std::vector<std::shared_ptr<const Terms>> nfs;
  nfs.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) nfs.push_back(legs_[i]->normal_form(words[i]));
  Key key(words.size());
  auto rec = [&](auto&& self, std::size_t i, const QRat& coeff) -> void {
    if (i == words.size()) {
      auto [it, inserted] = terms_.try_emplace(key, coeff);
      if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
      }
      return;
    }
    for (const auto& [w, k] : *nfs[i]) {
      key[i] = w;
      self(self, i + 1, coeff * k);
    }
  };
  rec(rec, 0, c);
}

Tensor Tensor::operator-() const {
  Tensor r(*this);
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

Tensor& Tensor::operator+=(const Tensor& o) {
  if (legs_ != o.legs_) throw PresentationMismatch("tensor legs differ");
  for (const auto& [k, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) { return *this += -o; }

Tensor operator*(const QRat& s, const Tensor& t) {
  Tensor r(t.legs_);
  if (s.is_zero()) return r;
  r.terms_ = t.terms_;
  for (auto& [k, c] : r.terms_) c *= s;
  return r;
}

Tensor operator*(const Tensor& a, const Tensor& b) {
  if (a.legs_ != b.legs_) throw PresentationMismatch("tensor legs differ");
  Tensor r(a.legs_);
  Tensor::Key key(a.rank());
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      for (std::size_t i = 0; i < key.size(); ++i) {
        key[i] = ka[i];
        key[i].insert(key[i].end(), kb[i].begin(), kb[i].end());
      }
      r.add(key, ca * cb);
    }
  }
  return r;
}

Tensor Tensor::map_leg(std::size_t i, const std::vector<const Presentation*>& new_legs,
                       const std::function<Tensor(const Word&)>& f) const {
  std::vector<const Presentation*> legs(legs_.begin(), legs_.begin() + static_cast<long>(i));
  legs.insert(legs.end(), new_legs.begin(), new_legs.end());
  legs.insert(legs.end(), legs_.begin() + static_cast<long>(i) + 1, legs_.end());
  Tensor r(legs);
  for (const auto& [k, c] : terms_) {
    const Tensor img = f(k[i]);
    if (img.legs_ != new_legs) throw PresentationMismatch("map_leg: unexpected image legs");
    for (const auto& [ik, ic] : img.terms_) {
      Key key(k.begin(), k.begin() + static_cast<long>(i));
      key.insert(key.end(), ik.begin(), ik.end());
      key.insert(key.end(), k.begin() + static_cast<long>(i) + 1, k.end());
      r.add(key, c * ic);
    }
  }
  return r;
}

Tensor Tensor::contract(std::size_t i) const {
  require_same(*legs_.at(i), *legs_.at(i + 1));
  std::vector<const Presentation*> legs = legs_;
  legs.erase(legs.begin() + static_cast<long>(i) + 1);
  Tensor r(legs);
  for (const auto& [k, c] : terms_) {
    Key key = k;
    key[i].insert(key[i].end(), k[i + 1].begin(), k[i + 1].end());
    key.erase(key.begin() + static_cast<long>(i) + 1);
    r.add(key, c);
  }
  return r;
}

NCPoly Tensor::as_poly() const {
  if (rank() != 1) throw PresentationMismatch("as_poly on a tensor of rank != 1");
  NCPoly p(*legs_[0]);
  for (const auto& [k, c] : terms_) p.add_term(k[0], c);
  return p;
}

QRat Tensor::as_scalar() const {
  if (rank() != 0) throw PresentationMismatch("as_scalar on a tensor of rank != 0");
  return terms_.empty() ? QRat() : terms_.begin()->second;
}

std::string Tensor::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Key, QRat>*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [this](auto* x, auto* y) {
    for (std::size_t i = 0; i < legs_.size(); ++i) {
      const int c = legs_[i]->compare(x->first[i], y->first[i]);
      if (c) return c < 0;
    }
    return false;
  });
  std::string out;
  for (std::size_t n = 0; n < order.size(); ++n) {
    const auto& [key, c] = *order[n];
    std::string body;
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (i) body += " ⊗ ";
      body += key[i].empty() ? "1" : legs_[i]->word_text(key[i]);
    }
    std::string term;
    if (key.empty())
      term = c.to_string();
    else if (c.is_one())
      term = body;
    else if ((-c).is_one())
      term = "-" + body;
    else
      term = c.to_string() + " " + body;
    if (n == 0)
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

// ---------------------------------------------------------------- tables

namespace {

NCPoly gen(const Presentation& p, const char* name) { return NCPoly::generator(p, name); }

HopfStructure make_suq2_hopf() {
  const Presentation& p = suq2();
  const NCPoly a = gen(p, "a"), b = gen(p, "b"), c = gen(p, "c"), d = gen(p, "d");
  HopfStructure h{&p, {}, {}, {}};
  h.coproduct.assign(p.size(), Tensor({&p, &p}));
  h.counit.assign(p.size(), QRat());
  h.antipode.assign(p.size(), NCPoly(p));
  auto set = [&](const char* name, Tensor cop, long eps, NCPoly s) {
    const Letter l = *p.find_letter(name);
    h.coproduct[l] = std::move(cop);
    h.counit[l] = QRat(eps);
    h.antipode[l] = std::move(s);
  };
  using T = Tensor;
  set("a", T::product(a, a) + T::product(b, c), 1, d);
  set("b", T::product(a, b) + T::product(b, d), 0, -QRat::q_power(-1) * b);
  set("c", T::product(c, a) + T::product(d, c), 0, -QRat::q_power(1) * c);
  set("d", T::product(c, b) + T::product(d, d), 1, a);
  return h;
}

HopfStructure make_circle_hopf() {
  const Presentation& p = circle();
  const NCPoly v = gen(p, "v"), vi = gen(p, "v'");
  return HopfStructure{&p, {Tensor::product(v, v), Tensor::product(vi, vi)}, {1, 1}, {vi, v}};
}

}  // namespace

const HopfStructure& suq2_hopf() {
  static const HopfStructure h = make_suq2_hopf();
  return h;
}

const HopfStructure& circle_hopf() {
  static const HopfStructure h = make_circle_hopf();
  return h;
}

const HopfStructure& hopf_for(const Presentation& p) {
  if (&p == &suq2()) return suq2_hopf();
  if (&p == &circle()) return circle_hopf();
  throw PresentationMismatch("no Hopf structure on " + p.name());
}

// ---------------------------------------------------------------- maps

namespace {

Tensor unit_tensor(const Presentation& p) {
  Tensor t({&p, &p});
  t.add({{}, {}}, QRat(1));
  return t;
}

}  // namespace

Tensor coproduct(const HopfStructure& h, const NCPoly& x) {
  require_same(x.presentation(), *h.pres);
  Tensor r({h.pres, h.pres});
  for (const auto& [w, c] : x.terms()) {
    Tensor t = unit_tensor(*h.pres);
    for (Letter l : w) t = t * h.coproduct[l];
    r += c * t;
  }
  return r;
}

QRat counit(const HopfStructure& h, const NCPoly& x) {
  require_same(x.presentation(), *h.pres);
  QRat r;
  for (const auto& [w, c] : x.terms()) {
    QRat t = c;
    for (Letter l : w) t *= h.counit[l];
    r += t;
  }
  return r;
}

NCPoly antipode(const HopfStructure& h, const NCPoly& x) {
  require_same(x.presentation(), *h.pres);
  NCPoly r(*h.pres);
  for (const auto& [w, c] : x.terms()) {
    NCPoly t(*h.pres, c);
    for (auto it = w.rbegin(); it != w.rend(); ++it) t = t * h.antipode[*it];
    r += t;
  }
  return normalize(r);
}

Tensor coproduct(const NCPoly& x) { return coproduct(hopf_for(x.presentation()), x); }
QRat counit(const NCPoly& x) { return counit(hopf_for(x.presentation()), x); }
NCPoly antipode(const NCPoly& x) { return antipode(hopf_for(x.presentation()), x); }

HopfReport hopf_axiom_report(const HopfStructure& h) {
  const Presentation& p = *h.pres;
  HopfReport rep;
  rep.algebra = p.name();
  auto fail = [&](const char* axiom, const std::string& witness, const std::string& residual) {
    rep.failures.push_back({axiom, witness, residual});
  };
  auto cop_word = [&](const Word& w) { return coproduct(h, NCPoly::monomial(p, w)); };
  auto eps_word = [&](const Word& w) { return Tensor::scalar(counit(h, NCPoly::monomial(p, w))); };
  auto s_word = [&](const Word& w) {
    const NCPoly s = antipode(h, NCPoly::monomial(p, w));
    Tensor t({&p});
    for (const auto& [sw, c] : s.terms()) t.add({sw}, c);
    return t;
  };

  for (Letter l = 0; l < p.size(); ++l) {
    const std::string name = p.letter(l).name;
    const NCPoly x = NCPoly::monomial(p, {l});
    const Tensor dx = coproduct(h, x);

    ++rep.checks;
    const Tensor left = dx.map_leg(0, {&p, &p}, cop_word);
    const Tensor right = dx.map_leg(1, {&p, &p}, cop_word);
    if (!(left == right)) fail("coassociativity", name, (left - right).to_string());

    ++rep.checks;
    const NCPoly el = dx.map_leg(0, {}, eps_word).as_poly();
    if (!(el == x)) fail("counit-left", name, (el - x).to_string());
    ++rep.checks;
    const NCPoly er = dx.map_leg(1, {}, eps_word).as_poly();
    if (!(er == x)) fail("counit-right", name, (er - x).to_string());

    const NCPoly unit(p, counit(h, x));
    ++rep.checks;
    const NCPoly sl = dx.map_leg(0, {&p}, s_word).contract(0).as_poly();
    if (!(sl == unit)) fail("antipode-left", name, (sl - unit).to_string());
    ++rep.checks;
    const NCPoly sr = dx.map_leg(1, {&p}, s_word).contract(0).as_poly();
    if (!(sr == unit)) fail("antipode-right", name, (sr - unit).to_string());
  }

  for (const Rule& rule : p.rules()) {
    NCPoly rel = NCPoly::monomial(p, rule.lhs);
    for (const auto& [w, c] : rule.rhs) rel.add_term(w, -c);
    const std::string witness = p.word_text(rule.lhs);
    ++rep.checks;
    const Tensor d = coproduct(h, rel);
    if (!d.is_zero()) fail("coproduct-relation", witness, d.to_string());
    ++rep.checks;
    const QRat e = counit(h, rel);
    if (!e.is_zero()) fail("counit-relation", witness, e.to_string());
    ++rep.checks;
    const NCPoly s = antipode(h, rel);
    if (!s.is_zero()) fail("antipode-relation", witness, s.to_string());
  }
  return rep;
}

NCPoly circle_power(int n) {
  const Presentation& p = circle();
  return NCPoly::monomial(p, Word(static_cast<std::size_t>(std::abs(n)), n >= 0 ? 0 : 1));
}

NCPoly laurent_power(int n) {
  const Presentation& p = laurent();
  return NCPoly::monomial(p, Word(static_cast<std::size_t>(std::abs(n)), n >= 0 ? 0 : 1));
}

NCPoly project_pi(const NCPoly& x) {
  require_same(x.presentation(), suq2());
  const Presentation& c = circle();
  const Presentation& s = suq2();
  std::vector<NCPoly> images(s.size(), NCPoly(c));
  images[*s.find_letter("a")] = circle_power(1);
  images[*s.find_letter("d")] = circle_power(-1);
  return substitute(x, c, images);
}

std::map<int, NCPoly> coaction_R(const NCPoly& x) { return weight_decomposition(x); }

Tensor coaction_R_tensor(const NCPoly& x) {
  const Presentation& c = circle();
  return coproduct(x).map_leg(1, {&c}, [&](const Word& w) {
    const NCPoly v = project_pi(NCPoly::monomial(suq2(), w));
    Tensor t({&c});
    for (const auto& [vw, k] : v.terms()) t.add({vw}, k);
    return t;
  });
}

Tensor coaction_L(const NCPoly& x) {
  Tensor r({&circle(), &x.presentation()});
  for (const auto& [n, part] : weight_decomposition(x)) r += Tensor::product(circle_power(-n), part);
  return r;
}

NCPoly sphere_to_suq2(const NCPoly& x) {
  require_same(x.presentation(), sphere());
  const Presentation& s = suq2();
  const NCPoly b = gen(s, "b"), c = gen(s, "c"), a = gen(s, "a");
  const NCPoly A = -QRat::q_power(-1) * (b * c);
  const NCPoly B = -(b * a);
  return substitute(x, s, {A, B, star(B)});
}

}  // namespace qhopf
