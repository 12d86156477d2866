#include "qhopf/pullback.hpp"

#include <tuple>

#include "qhopf/errors.hpp"
#include "qhopf/hopf.hpp"
#include "qhopf/linalg.hpp"
#include "qhopf/oprep.hpp"

namespace qhopf {

// ---------------------------------------------------------------- GradedPair

GradedPair GradedPair::unit(const Presentation& p) {
  GradedPair g(p);
  g.add(0, NCPoly(p, QRat(1)), QRat(1));
  return g;
}

GradedPair GradedPair::single(int n, const NCPoly& t, const QRat& alpha) {
  GradedPair g(t.presentation());
  g.add(n, t, alpha);
  return g;
}

std::set<int> GradedPair::support() const {
  std::set<int> s;
  for (const auto& [n, c] : comps_) s.insert(n);
  return s;
}

Component GradedPair::at(int n) const {
  auto it = comps_.find(n);
  if (it == comps_.end()) return {NCPoly(*pres_), QRat()};
  return it->second;
}

void GradedPair::add(int n, const NCPoly& t, const QRat& alpha) {
  require_same(*pres_, t.presentation());
  auto it = comps_.find(n);
  if (it == comps_.end()) {
    Component c{normalize(t), alpha};
    if (!c.t.is_zero() || !c.alpha.is_zero()) comps_.emplace(n, std::move(c));
    return;
  }
  it->second.t = normalize(it->second.t + t);
  it->second.alpha += alpha;
  if (it->second.t.is_zero() && it->second.alpha.is_zero()) comps_.erase(it);
}

GradedPair GradedPair::operator-() const {
  GradedPair r(*pres_);
  for (const auto& [n, c] : comps_) r.comps_.emplace(n, Component{-c.t, -c.alpha});
  return r;
}

GradedPair& GradedPair::operator+=(const GradedPair& o) {
  require_same(*pres_, *o.pres_);
  for (const auto& [n, c] : o.comps_) add(n, c.t, c.alpha);
  return *this;
}

GradedPair& GradedPair::operator-=(const GradedPair& o) { return *this += -o; }

GradedPair operator*(const QRat& s, const GradedPair& x) {
  GradedPair r(*x.pres_);
  for (const auto& [n, c] : x.comps_) r.add(n, s * c.t, s * c.alpha);
  return r;
}

GradedPair operator*(const GradedPair& x, const GradedPair& y) {
  require_same(*x.pres_, *y.pres_);
  GradedPair r(*x.pres_);
  for (const auto& [m, cx] : x.comps_)
    for (const auto& [n, cy] : y.comps_) r.add(m + n, cx.t * cy.t, cx.alpha * cy.alpha);
  return r;
}

bool operator==(const GradedPair& x, const GradedPair& y) {
  if (x.pres_ != y.pres_ || x.comps_.size() != y.comps_.size()) return false;
  auto it = y.comps_.begin();
  for (const auto& [n, c] : x.comps_) {
    if (n != it->first || !(c.alpha == it->second.alpha) || !(c.t == it->second.t)) return false;
    ++it;
  }
  return true;
}

std::string GradedPair::to_string() const {
  if (comps_.empty()) return "0";
  std::string out = "{";
  bool first = true;
  for (const auto& [n, c] : comps_) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(n) + ": (" + c.t.to_string() + ", " + c.alpha.to_string() + ")";
  }
  return out + "}";
}

GradedPair star(const GradedPair& x) {
  GradedPair r(x.presentation());
  for (const auto& [n, c] : x.components()) r.add(-n, star(c.t), c.alpha);
  return r;
}

bool is_compatible(int n, const NCPoly& t, const QRat& alpha) {
  return symbol(t) == alpha * laurent_power(-n);
}

void validate_fibre(const GradedPair& x) {
  for (const auto& [n, c] : x.components())
    if (!is_compatible(n, c.t, c.alpha))
      throw IncompatiblePair(n, symbol(c.t).to_string(), c.alpha.to_string());
}

FibreElement make_fibre(const Presentation& p,
                        const std::vector<std::pair<int, Component>>& comps) {
  GradedPair g(p);
  for (const auto& [n, c] : comps) {
    if (!is_compatible(n, c.t, c.alpha))
      throw IncompatiblePair(n, symbol(c.t).to_string(), c.alpha.to_string());
    g.add(n, c.t, c.alpha);
  }
  return g;
}

namespace {

std::vector<GradedPair> iota_images() {
  const Presentation& de = disc_ext();
  const Presentation& su = suq2();
  const NCPoly zs = NCPoly::generator(de, "z'");
  const NCPoly s = NCPoly::generator(de, "s");
  const GradedPair ia = GradedPair::single(1, zs, QRat(1));
  const GradedPair ic = GradedPair::single(1, s, QRat());
  std::vector<GradedPair> images(su.size(), GradedPair(de));
  images[*su.find_letter("a")] = ia;
  images[*su.find_letter("c")] = ic;
  images[*su.find_letter("d")] = star(ia);
  images[*su.find_letter("b")] = -QRat::q() * star(ic);
  return images;
}

}  // namespace

FibreElement embed_iota(const NCPoly& x) {
  require_same(x.presentation(), suq2());
  static const std::vector<GradedPair> images = iota_images();
  const Presentation& de = disc_ext();
  GradedPair r(de);
  const NCPoly nx = normalize(x);
  for (const auto& [w, c] : nx.terms()) {
    GradedPair t = c * GradedPair::unit(de);
    for (Letter l : w) t = t * images[l];
    r += t;
  }
  return r;
}

bool ln_membership(const FibreElement& x, int n) {
  for (const auto& [k, c] : x.components())
    if (k != n) return false;
  return true;
}

NCPoly iso_psi(const FibreElement& x) {
  if (!ln_membership(x, 0)) throw PreconditionError("iso_psi needs an element of L_0");
  return x.at(0).t;
}

FibreElement iso_phi(const NCPoly& t) {
  const NCPoly sym = symbol(t);
  QRat alpha;
  for (const auto& [w, c] : sym.terms()) {
    if (!w.empty()) throw PreconditionError("iso_phi: symbol of t is not constant");
    alpha = c;
  }
  return GradedPair::single(0, t, alpha);
}

FibreElement iso_phi(const NCPoly& k, const QRat& alpha) {
  if (!symbol(k).is_zero()) throw PreconditionError("iso_phi: k is not compact");
  return GradedPair::single(0, k + NCPoly(k.presentation(), alpha), alpha);
}

// ---------------------------------------------------------------- FibreMatrix

FibreMatrix::FibreMatrix(const Presentation& p, std::size_t rows, std::size_t cols)
    : pres_(&p), rows_(rows), cols_(cols), data_(rows * cols, GradedPair(p)) {}

FibreMatrix FibreMatrix::identity(const Presentation& p, std::size_t n) {
  FibreMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = GradedPair::unit(p);
  return m;
}

FibreMatrix operator*(const FibreMatrix& a, const FibreMatrix& b) {
  require_same(*a.pres_, *b.pres_);
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  FibreMatrix r(*a.pres_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        r(i, j) += a(i, k) * b(k, j);
      }
  return r;
}

FibreMatrix operator+(const FibreMatrix& a, const FibreMatrix& b) {
  require_same(*a.pres_, *b.pres_);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  FibreMatrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
  return r;
}

FibreMatrix operator-(const FibreMatrix& a, const FibreMatrix& b) {
  FibreMatrix nb = b;
  for (auto& x : nb.data_) x = -x;
  return a + nb;
}

bool operator==(const FibreMatrix& a, const FibreMatrix& b) {
  if (a.pres_ != b.pres_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.data_.size(); ++i)
    if (!(a.data_[i] == b.data_[i])) return false;
  return true;
}

bool FibreMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

std::string FibreMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ", ";
      out += (*this)(i, j).to_string();
    }
  }
  return out + "]";
}

FibreMatrix star(const FibreMatrix& m) {
  FibreMatrix r(m.presentation(), m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(j, i) = star(m(i, j));
  return r;
}

FibreMatrix direct_sum(const FibreMatrix& a, const FibreMatrix& b) {
  require_same(a.presentation(), b.presentation());
  FibreMatrix r(a.presentation(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
  return r;
}

nlohmann::json to_json(const GradedPair& x) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& [n, c] : x.components())
    comps.push_back({{"N", n}, {"t", c.t.to_string()}, {"alpha", c.alpha.to_fraction_string()}});
  return {{"components", comps}};
}

nlohmann::json to_json(const FibreMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return {{"algebra", m.presentation().name()}, {"rows", rows}};
}

InjectivityResult iota_pbw_rank(int max_degree, const mpq_class& q) {
  const Presentation& su = suq2();
  const Letter a = *su.find_letter("a"), b = *su.find_letter("b"), c = *su.find_letter("c"),
               d = *su.find_letter("d");
  std::vector<Word> basis;
  for (int j = 0; j <= max_degree; ++j)
    for (int k = 0; j + k <= max_degree; ++k)
      for (int i = 0; j + k + i <= max_degree; ++i) {
        Word w(static_cast<std::size_t>(j), b);
        w.insert(w.end(), static_cast<std::size_t>(k), c);
        basis.push_back(w);
        basis.back().insert(basis.back().end(), static_cast<std::size_t>(i), a);
        if (i > 0) {
          w.insert(w.end(), static_cast<std::size_t>(i), d);
          basis.push_back(w);
        }
      }

  using Coord = std::tuple<int, bool, Word>;  // (N, is-scalar-leg, word)
  std::map<Coord, std::size_t> index;
  std::vector<std::map<std::size_t, mpq_class>> rows;
  for (const Word& w : basis) {
    std::map<std::size_t, mpq_class> row;
    const FibreElement img = embed_iota(NCPoly::monomial(su, w));
    for (const auto& [n, comp] : img.components()) {
      auto col = [&](Coord key) { return index.try_emplace(key, index.size()).first->second; };
      for (const auto& [tw, tc] : comp.t.terms()) row[col({n, false, tw})] += tc.evaluate(q);
      if (!comp.alpha.is_zero()) row[col({n, true, {}})] += comp.alpha.evaluate(q);
    }
    rows.push_back(std::move(row));
  }
  std::vector<std::vector<mpq_class>> dense(rows.size(),
                                            std::vector<mpq_class>(index.size(), mpq_class(0)));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [j, v] : rows[i]) dense[i][j] = v;
  return {basis.size(), rank_exact(std::move(dense))};
}

}  // namespace qhopf
