#include "qhopf/qrat.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qhopf {

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(long c) {
  if (c != 0) c_.emplace_back(c);
}

QPoly::QPoly(const mpq_class& c) {
  if (c != 0) c_.push_back(c);
}

QPoly::QPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(const mpq_class& c, int degree) {
  QPoly p;
  if (c == 0) return p;
  p.c_.assign(static_cast<std::size_t>(degree) + 1, mpq_class(0));
  p.c_.back() = c;
  return p;
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpq_class QPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

int QPoly::q_valuation() const {
  int k = 0;
  while (k < static_cast<int>(c_.size()) && c_[static_cast<std::size_t>(k)] == 0) ++k;
  return c_.empty() ? 0 : k;
}

QPoly QPoly::operator-() const {
  QPoly r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const mpq_class& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> r(a.c_.size() + b.c_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(r));
}

QPoly QPoly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  QPoly r;
  r.c_.assign(static_cast<std::size_t>(k), mpq_class(0));
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

QPoly QPoly::unshifted(int k) const {
  if (is_zero() || k == 0) return *this;
  assert(k <= q_valuation());
  QPoly r;
  r.c_.assign(c_.begin() + k, c_.end());
  return r;
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  rem = a;
  quot = QPoly();
  if (a.degree() < b.degree()) return;
  std::vector<mpq_class> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), mpq_class(0));
  const mpq_class inv_lead = 1 / b.lead();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const int shift = rem.degree() - b.degree();
    const mpq_class f = rem.lead() * inv_lead;
    q[static_cast<std::size_t>(shift)] = f;
    for (int i = 0; i <= b.degree(); ++i)
      rem.c_[static_cast<std::size_t>(i + shift)] -= f * b.c_[static_cast<std::size_t>(i)];
    rem.trim();
  }
  quot = QPoly(std::move(q));
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly quot, rem;
    divmod(a, b, quot, rem);
    a = std::move(b);
    b = std::move(rem);
  }
  return a.monic();
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  QPoly r(*this);
  r *= 1 / lead();
  return r;
}

double QPoly::evaluate(double q) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + it->get_d();
  return acc;
}

mpq_class QPoly::evaluate(const mpq_class& q) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

namespace {

std::string q_part(int k) {
  if (k == 0) return "";
  if (k == 1) return "q";
  return "q^" + std::to_string(k);
}

// "c q^k" with the conventions shared by QPoly and QRat printing.
std::string monomial_text(const mpq_class& c, int k) {
  const std::string qp = q_part(k);
  if (qp.empty()) return c.get_str();
  if (c == 1) return qp;
  if (c == -1) return "-" + qp;
  return c.get_str() + " " + qp;
}

std::string join_signed(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::string& p = parts[i];
    if (i == 0) {
      out = p;
    } else if (!p.empty() && p[0] == '-') {
      out += " - " + p.substr(1);
    } else {
      out += " + " + p;
    }
  }
  return out;
}

}  // namespace

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) parts.push_back(monomial_text(c_[i], static_cast<int>(i)));
  return join_signed(parts);
}

// ---------------------------------------------------------------- QRat

QRat::QRat(long c) : num_(c), den_(1) {}

QRat::QRat(const mpq_class& c) : num_(c), den_(1) {}

QRat::QRat(const QPoly& num, const QPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("QRat with zero denominator");
  normalize();
}

QRat QRat::q_power(int k, const mpq_class& c) {
  QRat r(c);
  if (!r.is_zero()) r.shift_ = k;
  return r;
}

const QRat& QRat::q() {
  static const QRat value = q_power(1);
  return value;
}

bool QRat::is_one() const { return shift_ == 0 && num_ == QPoly(1) && den_ == QPoly(1); }

bool QRat::is_monomial(mpq_class* c, int* k) const {
  if (is_zero()) return false;
  if (num_.degree() != 0 || den_.degree() != 0) return false;
  if (c) *c = num_.lead();
  if (k) *k = shift_;
  return true;
}

bool QRat::is_constant() const {
  return is_zero() || (shift_ == 0 && num_.degree() == 0 && den_.degree() == 0);
}

QPoly QRat::numerator() const { return shift_ > 0 ? num_.shifted(shift_) : num_; }

QPoly QRat::denominator() const { return shift_ < 0 ? den_.shifted(-shift_) : den_; }

void QRat::normalize() {
  if (num_.is_zero()) {
    shift_ = 0;
    den_ = QPoly(1);
    return;
  }
  const int v = num_.q_valuation();
  if (v) {
    num_ = num_.unshifted(v);
    shift_ += v;
  }
  const int w = den_.q_valuation();
  if (w) {
    den_ = den_.unshifted(w);
    shift_ -= w;
  }
  if (den_.is_constant()) {
    num_ *= 1 / den_.lead();
    den_ = QPoly(1);
    return;
  }
  QPoly g = QPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    QPoly quot, rem;
    QPoly::divmod(num_, g, quot, rem);
    num_ = std::move(quot);
    QPoly::divmod(den_, g, quot, rem);
    den_ = std::move(quot);
  }
  const mpq_class inv = 1 / den_.lead();
  num_ *= inv;
  den_ *= inv;
}

QRat QRat::operator-() const {
  QRat r(*this);
  r.num_ = -r.num_;
  return r;
}

QRat& QRat::operator+=(const QRat& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int s = std::min(shift_, o.shift_);
  QPoly a = num_.shifted(shift_ - s);
  QPoly b = o.num_.shifted(o.shift_ - s);
  shift_ = s;
  if (den_ == o.den_) {
    num_ = a + b;
  } else {
    num_ = a * o.den_ + b * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

QRat& QRat::operator-=(const QRat& o) { return *this += -o; }

QRat& QRat::operator*=(const QRat& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = QRat();
  shift_ += o.shift_;
  num_ = num_ * o.num_;
  if (den_.is_constant() && o.den_.is_constant()) return *this;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

QRat QRat::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero scalar");
  QRat r;
  r.shift_ = -shift_;
  r.num_ = den_;
  r.den_ = num_;
  r.normalize();
  return r;
}

QRat& QRat::operator/=(const QRat& o) { return *this *= o.inverse(); }

QRat QRat::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  QRat result(1);
  QRat base(*this);
  while (k) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

double QRat::evaluate(double q) const {
  if (is_zero()) return 0.0;
  return std::pow(q, shift_) * num_.evaluate(q) / den_.evaluate(q);
}

mpq_class QRat::evaluate(const mpq_class& q) const {
  if (is_zero()) return 0;
  mpq_class p = 1;
  const mpq_class base = shift_ >= 0 ? q : mpq_class(1 / q);
  for (int i = 0; i < std::abs(shift_); ++i) p *= base;
  return p * num_.evaluate(q) / den_.evaluate(q);
}

std::string QRat::to_string() const {
  if (is_zero()) return "0";
  mpq_class c;
  int k = 0;
  if (is_monomial(&c, &k)) return monomial_text(c, k);
  const QPoly n = numerator();
  const QPoly d = denominator();
  if (d == QPoly(1)) return "(" + n.to_string() + ")";
  return "(" + n.to_string() + ")/(" + d.to_string() + ")";
}

std::string QRat::to_fraction_string() const {
  return "(" + numerator().to_string() + ")/(" + denominator().to_string() + ")";
}

}  // namespace qhopf
