#include "qhopf/kconn.hpp"

#include <cmath>
#include <set>
#include <tuple>

#include "qhopf/errors.hpp"
#include "qhopf/hopf.hpp"
#include "qhopf/linalg.hpp"

namespace qhopf {

namespace {

const Presentation& iso() { return isometry(); }
NCPoly one(const Presentation& p) { return NCPoly(p, QRat(1)); }
NCPoly S_pow(int k) { return NCPoly::generator(iso(), "S").pow(static_cast<unsigned>(k)); }
NCPoly Sp_pow(int k) { return NCPoly::generator(iso(), "S'").pow(static_cast<unsigned>(k)); }

// Basis coordinates of A1 × A2: (weight, leg, word) with leg 0 the Toeplitz
// part and leg 1 the scalar part.
using Key = std::tuple<int, int, Word>;
using Expansion = std::vector<std::pair<Key, QRat>>;

Expansion expand(const GradedPair& x) {
  Expansion out;
  for (const auto& [n, c] : x.components()) {
    for (const auto& [w, k] : c.t.terms()) out.emplace_back(Key{n, 0, w}, k);
    if (!c.alpha.is_zero()) out.emplace_back(Key{n, 1, Word{}}, c.alpha);
  }
  return out;
}

// Elements of P ⊗ P, optionally tagged with an extra circle exponent.
class TensorSum {
 public:
  void add(const GradedPair& x, const GradedPair& y, int tag = 0, const QRat& s = QRat(1)) {
    const Expansion ex = expand(x), ey = expand(y);
    for (const auto& [kx, cx] : ex)
      for (const auto& [ky, cy] : ey) {
        auto key = std::make_tuple(kx, ky, tag);
        QRat& slot = m_[key];
        slot += s * cx * cy;
        if (slot.is_zero()) m_.erase(key);
      }
  }
  bool is_zero() const { return m_.empty(); }
  std::size_t size() const { return m_.size(); }

 private:
  std::map<std::tuple<Key, Key, int>, QRat> m_;
};

GradedPair restrict(const GradedPair& x, int n) {
  GradedPair out(x.presentation());
  auto it = x.components().find(n);
  if (it != x.components().end()) out.add(n, it->second.t, it->second.alpha);
  return out;
}

GradedPair drop(const GradedPair& x, int n) { return x - restrict(x, n); }

std::string membership_problem(const GradedPair& x, ConnDomain d) {
  for (const auto& [n, c] : x.components()) {
    switch (d) {
      case ConnDomain::fibre_product:
        if (!is_compatible(n, c.t, c.alpha))
          return "N=" + std::to_string(n) + ": symbol(" + c.t.to_string() + ") != " +
                 c.alpha.to_string() + " u^" + std::to_string(-n);
        break;
      case ConnDomain::toeplitz_leg:
        if (!c.alpha.is_zero()) return "scalar part in Toeplitz leg at N=" + std::to_string(n);
        break;
      case ConnDomain::circle_leg:
        if (!c.t.is_zero()) return "Toeplitz part in circle leg at N=" + std::to_string(n);
        break;
    }
  }
  return {};
}

std::string tensor_text(const GradedPair& x, const GradedPair& y) {
  return x.to_string() + " ⊗ " + y.to_string();
}

}  // namespace

GradedPair domain_unit(const Presentation& p, ConnDomain d) {
  GradedPair u(p);
  switch (d) {
    case ConnDomain::fibre_product: u.add(0, one(p), QRat(1)); break;
    case ConnDomain::toeplitz_leg: u.add(0, one(p), QRat(0)); break;
    case ConnDomain::circle_leg: u.add(0, NCPoly(p), QRat(1)); break;
  }
  return u;
}

StrongConn explicit_connection() {
  StrongConn l{"explicit", ConnDomain::fibre_product, &iso(), {}};
  l.eval = [](int n) -> ConnValue {
    const Presentation& p = iso();
    if (n == 0) return {{GradedPair::unit(p), GradedPair::unit(p)}};
    if (n < 0) {
      const int m = -n;
      return {{GradedPair::single(m, Sp_pow(m), 1), GradedPair::single(-m, S_pow(m), 1)}};
    }
    const NCPoly k = one(p) - S_pow(n) * Sp_pow(n);
    return {{GradedPair::single(-n, S_pow(n), 1), GradedPair::single(n, Sp_pow(n), 1)},
            {GradedPair::single(-n, k, 0), GradedPair::single(n, k, 0)}};
  };
  return l;
}

StrongConn trivial_toeplitz_connection() {
  StrongConn l{"trivial-toeplitz", ConnDomain::toeplitz_leg, &iso(), {}};
  l.eval = [](int n) -> ConnValue {
    const Presentation& p = iso();
    return {{GradedPair::single(-n, one(p), 0), GradedPair::single(n, one(p), 0)}};
  };
  return l;
}

StrongConn trivial_circle_connection() {
  StrongConn l{"trivial-circle", ConnDomain::circle_leg, &iso(), {}};
  l.eval = [](int n) -> ConnValue {
    const Presentation& p = iso();
    return {{GradedPair::single(-n, NCPoly(p), 1), GradedPair::single(n, NCPoly(p), 1)}};
  };
  return l;
}

std::vector<ConnCheck> ConnReport::failures() const {
  std::vector<ConnCheck> out;
  for (const ConnCheck& c : checks)
    if (!c.pass) out.push_back(c);
  return out;
}

ConnReport check_strong_connection(const StrongConn& l, int range) {
  if (range < 1) throw PreconditionError("range must be at least 1");
  const Presentation& p = *l.pres;
  const GradedPair unit = domain_unit(p, l.domain);
  ConnReport rep{l.name, range, {}};
  auto record = [&](const std::string& family, int n, std::string residual) {
    rep.checks.push_back({family, n, residual.empty(), std::move(residual)});
  };

  for (int n = -range; n <= range; ++n) {
    const ConnValue v = l(n);

    if (n == 0) {
      TensorSum diff;
      for (const ConnTerm& t : v) diff.add(t.left, t.right);
      diff.add(unit, unit, 0, QRat(-1));
      record("unital", n, diff.is_zero() ? "" : "l(e) - 1 ⊗ 1 = " + conn_value_text(v) + " - 1 ⊗ 1");
    }

    std::string member;
    for (const ConnTerm& t : v) {
      if (member.empty()) member = membership_problem(t.left, l.domain);
      if (member.empty()) member = membership_problem(t.right, l.domain);
    }
    record("membership", n, member);

    // Sum l<1> (l<2>)_k ⊗ v^k must be 1 ⊗ v^N.
    std::set<int> ks{n};
    for (const ConnTerm& t : v)
      for (int k : t.right.support()) ks.insert(k);
    std::string split;
    for (int k : ks) {
      GradedPair s(p);
      for (const ConnTerm& t : v) s += t.left * restrict(t.right, k);
      const GradedPair residual = (k == n ? unit : GradedPair(p)) - s;
      if (!residual.is_zero() && split.empty())
        split = "v^" + std::to_string(k) + ": " + residual.to_string();
    }
    record("splitting", n, split);

    TensorSum right, left;
    for (const ConnTerm& t : v) {
      for (int k : t.right.support())
        if (k != n) right.add(t.left, restrict(t.right, k), k);
      for (int k : t.left.support())
        if (k != -n) left.add(restrict(t.left, k), t.right, k);
    }
    std::string rtext, ltext;
    if (!right.is_zero())
      for (const ConnTerm& t : v)
        if (!drop(t.right, n).is_zero()) {
          rtext = tensor_text(t.left, drop(t.right, n)) + " off weight " + std::to_string(n);
          break;
        }
    if (!left.is_zero())
      for (const ConnTerm& t : v)
        if (!drop(t.left, -n).is_zero()) {
          ltext = tensor_text(drop(t.left, -n), t.right) + " off weight " + std::to_string(-n);
          break;
        }
    record("right-colinear", n, rtext);
    record("left-colinear", n, ltext);

    GradedPair total(p);
    for (const ConnTerm& t : v) total += t.left * t.right;
    const GradedPair cres = unit - total;
    record("counit", n, cres.is_zero() ? "" : cres.to_string());
  }
  return rep;
}

bool connections_agree(const StrongConn& l, const StrongConn& m, int n) {
  TensorSum d;
  for (const ConnTerm& t : l(n)) d.add(t.left, t.right);
  for (const ConnTerm& t : m(n)) d.add(t.left, t.right, 0, QRat(-1));
  return d.is_zero();
}

GradedSplittings toeplitz_lifts() {
  GradedSplittings s;
  auto lift = [](int n) {
    return n >= 0 ? GradedPair::single(n, Sp_pow(n), 0) : GradedPair::single(n, S_pow(-n), 0);
  };
  s.alpha_L12 = lift;
  s.alpha_R12 = lift;
  s.alpha_R21 = [](const GradedPair& x) {
    const Presentation& p = x.presentation();
    GradedPair out(p);
    for (const auto& [n, c] : x.components()) {
      if (!c.alpha.is_zero())
        throw NonGradedSplitting("alpha_R21 needs an element of the Toeplitz leg");
      const NCPoly sym = symbol(c.t) * laurent_power(n);
      QRat k;
      for (const auto& [w, coeff] : sym.terms()) {
        if (!w.empty())
          throw NonGradedSplitting("symbol of " + c.t.to_string() + " times u^" +
                                   std::to_string(n) + " is not constant");
        k = coeff;
      }
      out.add(n, NCPoly(p), k);
    }
    return out;
  };
  return s;
}

namespace {

GradedPair apply_lift(const std::function<GradedPair(int)>& f, const GradedPair& x) {
  GradedPair out(x.presentation());
  for (const auto& [n, c] : x.components()) {
    if (!c.t.is_zero()) throw NonGradedSplitting("lift applied outside the circle leg");
    const GradedPair y = f(n);
    for (const auto& [k, yc] : y.components()) {
      if (k != n) throw NonGradedSplitting("lift of v^" + std::to_string(n) + " has weight " +
                                           std::to_string(k));
      if (!yc.alpha.is_zero() || !is_compatible(n, yc.t, QRat(1)))
        throw NonGradedSplitting("lift of v^" + std::to_string(n) + " does not map onto 1 ⊗ v^" +
                                 std::to_string(n));
    }
    if (y.is_zero()) throw NonGradedSplitting("zero lift of v^" + std::to_string(n));
    out += c.alpha * y;
  }
  return out;
}

GradedPair apply_r21(const GradedSplittings& s, const GradedPair& x) {
  const GradedPair y = s.alpha_R21(x);
  for (const auto& [n, c] : y.components()) {
    if (!c.t.is_zero()) throw NonGradedSplitting("alpha_R21 must land in the circle leg");
    if (!x.components().count(n))
      throw NonGradedSplitting("alpha_R21 moved weight " + std::to_string(n));
  }
  return y;
}

}  // namespace

StrongConn combine_connections(const StrongConn& l1, const StrongConn& l2,
                               const GradedSplittings& s) {
  if (l1.domain != ConnDomain::toeplitz_leg || l2.domain != ConnDomain::circle_leg)
    throw PreconditionError("combine_connections needs a Toeplitz-leg and a circle-leg connection");
  require_same(*l1.pres, *l2.pres);
  StrongConn out{"combined", ConnDomain::fibre_product, l1.pres, {}};
  out.eval = [l1, l2, s](int n) -> ConnValue {
    const Presentation& p = *l1.pres;
    const ConnValue v1 = l1(n), v2 = l2(n);
    const GradedPair unit1 = domain_unit(p, ConnDomain::toeplitz_leg);
    ConnValue result;
    auto push = [&](const GradedPair& a, const GradedPair& b) {
      if (!a.is_zero() && !b.is_zero()) result.push_back({a, b});
    };

    GradedPair L(p);
    std::vector<ConnTerm> lifted;
    for (const ConnTerm& t : v2) {
      const GradedPair a = apply_lift(s.alpha_L12, t.left);
      const GradedPair b = apply_lift(s.alpha_R12, t.right);
      lifted.push_back({a, b});
      L += a * b;
      push(a + t.left, b + t.right);
    }

    // (id ⊗ (id + alpha_R21)) applied to l1 - l1*L + (alpha ⊗ alpha) l2, then
    // the convolution with eta1 eps - L multiplies the left legs.
    const GradedPair corr = unit1 - L;
    auto add_corrected = [&](const GradedPair& x, const GradedPair& y) {
      if (y.is_zero()) return;
      push(corr * x, y + apply_r21(s, y));
    };
    for (const ConnTerm& t : v1) add_corrected(t.left, t.right - t.right * L);
    for (const ConnTerm& t : lifted) add_corrected(t.left, t.right);
    return result;
  };
  return out;
}

nlohmann::json to_json(const ConnReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const ConnCheck& c : r.checks) {
    nlohmann::json j{{"name", c.family}, {"N", c.n}, {"pass", c.pass}};
    if (!c.pass) j["residual"] = c.residual;
    checks.push_back(j);
  }
  return {{"connection", r.connection},
          {"range", {-r.range, r.range}},
          {"ok", r.ok()},
          {"checks", checks}};
}

std::string conn_value_text(const ConnValue& v) {
  if (v.empty()) return "0";
  std::string out;
  for (const ConnTerm& t : v) {
    if (!out.empty()) out += " + ";
    out += tensor_text(t.left, t.right);
  }
  return out;
}

// ----------------------------------------------------------------- entwining

CircleTensor GradedEntwining::psi(int m, const GradedPair& p) const {
  CircleTensor out;
  for (const auto& [n, c] : p.components()) {
    auto [it, fresh] = out.try_emplace(m + n, p.presentation());
    it->second.add(n, c.t, c.alpha);
  }
  return out;
}

CircleTensor GradedEntwining::psi_inverse(const GradedPair& p, int k) const {
  CircleTensor out;
  for (const auto& [n, c] : p.components()) {
    auto [it, fresh] = out.try_emplace(k - n, p.presentation());
    it->second.add(n, c.t, c.alpha);
  }
  return out;
}

namespace {

template <class K>
bool same_map(const std::map<K, GradedPair>& a, const std::map<K, GradedPair>& b) {
  auto nonzero = [](const std::map<K, GradedPair>& m) {
    std::map<K, GradedPair> out;
    for (const auto& [k, v] : m)
      if (!v.is_zero()) out.emplace(k, v);
    return out;
  };
  const auto x = nonzero(a), y = nonzero(b);
  if (x.size() != y.size()) return false;
  for (const auto& [k, v] : x) {
    auto it = y.find(k);
    if (it == y.end() || !(it->second == v)) return false;
  }
  return true;
}

template <class K>
void accumulate_into(std::map<K, GradedPair>& m, const K& k, const GradedPair& v) {
  auto [it, fresh] = m.try_emplace(k, v.presentation());
  it->second += v;
}

}  // namespace

std::vector<EntwiningFailure> check_entwining(const std::vector<GradedPair>& data, int range) {
  const GradedEntwining e;
  std::vector<EntwiningFailure> fails;
  if (data.empty()) return fails;
  const Presentation& p = data.front().presentation();
  std::vector<GradedPair> xs = data;
  for (const GradedPair& x : data)
    for (const GradedPair& y : data) xs.push_back(x * y);

  for (int m = -range; m <= range; ++m) {
    if (!same_map(e.psi(m, GradedPair::unit(p)), CircleTensor{{m, GradedPair::unit(p)}}))
      fails.push_back({"unital", m, "1"});

    for (const GradedPair& x : data)
      for (const GradedPair& y : data) {
        CircleTensor rhs;
        for (const auto& [k, a] : e.psi(m, x))
          for (const auto& [j, b] : e.psi(k, y)) accumulate_into(rhs, j, a * b);
        if (!same_map(e.psi(m, x * y), rhs))
          fails.push_back({"multiplicative", m, x.to_string() + " * " + y.to_string()});
      }

    for (const GradedPair& x : xs) {
      std::map<std::pair<int, int>, GradedPair> lhs, rhs;
      for (const auto& [k, a] : e.psi(m, x)) accumulate_into(lhs, {k, k}, a);
      for (const auto& [k, a] : e.psi(m, x))
        for (const auto& [j, b] : e.psi(m, a)) accumulate_into(rhs, {j, k}, b);
      if (!same_map(lhs, rhs)) fails.push_back({"comultiplicative", m, x.to_string()});

      GradedPair sum(p);
      for (const auto& [k, a] : e.psi(m, x)) sum += a;
      if (!(sum == x)) fails.push_back({"counital", m, x.to_string()});

      CircleTensor back;
      for (const auto& [k, a] : e.psi(m, x))
        for (const auto& [j, b] : e.psi_inverse(a, k)) accumulate_into(back, j, b);
      if (!same_map(back, CircleTensor{{m, x}}))
        fails.push_back({"inverse", m, x.to_string()});
      CircleTensor fwd;
      for (const auto& [j, b] : e.psi_inverse(x, m))
        for (const auto& [k, a] : e.psi(j, b)) accumulate_into(fwd, k, a);
      if (!same_map(fwd, CircleTensor{{m, x}}))
        fails.push_back({"inverse", m, x.to_string()});
    }
  }
  return fails;
}

bool entwined_module_law(const GradedPair& x, const GradedPair& a) {
  const GradedEntwining e;
  CircleTensor lhs, rhs;
  const GradedPair xa = x * a;
  for (const auto& [k, c] : xa.components()) accumulate_into(lhs, k, GradedPair::single(k, c.t, c.alpha));
  for (const auto& [j, c] : x.components()) {
    const GradedPair xj = GradedPair::single(j, c.t, c.alpha);
    for (const auto& [k, b] : e.psi(j, a)) accumulate_into(rhs, k, xj * b);
  }
  return same_map(lhs, rhs);
}

GradedPair entwining_basis(int n) {
  return n >= 0 ? GradedPair::single(n, Sp_pow(n), 1) : GradedPair::single(n, S_pow(-n), 1);
}

// --------------------------------------------------------------------- Bass

namespace {

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
  const Presentation& p = a.at(0).at(0).presentation();
  PolyMatrix out(a.size(), std::vector<NCPoly>(b.at(0).size(), NCPoly(p)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b[0].size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

PolyMatrix mat_lin(const PolyMatrix& a, const QRat& s, const PolyMatrix& b) {
  PolyMatrix out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] = normalize(a[i][j] + s * b[i][j]);
  return out;
}

PolyMatrix mat_id(const Presentation& p, std::size_t n, const QRat& s = QRat(1)) {
  PolyMatrix out(n, std::vector<NCPoly>(n, NCPoly(p)));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = NCPoly(p, s);
  return out;
}

PolyMatrix mat_symbol(const PolyMatrix& a) {
  PolyMatrix out;
  for (const auto& row : a) {
    std::vector<NCPoly> r;
    for (const NCPoly& x : row) r.push_back(symbol(x));
    out.push_back(std::move(r));
  }
  return out;
}

bool mat_eq(const PolyMatrix& a, const PolyMatrix& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (!(a[i][j] == b[i][j])) return false;
  return true;
}

void require_square(const PolyMatrix& a, std::size_t n, const char* what) {
  if (a.size() != n) throw PreconditionError(std::string(what) + " must be square");
  for (const auto& row : a)
    if (row.size() != n) throw PreconditionError(std::string(what) + " must be square");
}

}  // namespace

FibreMatrix bass_idempotent(const PolyMatrix& c, const PolyMatrix& d) {
  const std::size_t n = c.size();
  if (n == 0) throw PreconditionError("empty lift matrix");
  require_square(c, n, "c");
  require_square(d, n, "d");
  const Presentation& p = c[0][0].presentation();
  for (const auto* m : {&c, &d})
    for (const auto& row : *m)
      for (const NCPoly& x : row) require_same(p, x.presentation());

  const PolyMatrix sc = mat_symbol(c), sd = mat_symbol(d);
  const PolyMatrix lid = mat_id(laurent(), n);
  if (!mat_eq(mat_mul(sc, sd), lid) || !mat_eq(mat_mul(sd, sc), lid))
    throw LiftInversionError("symbols of c and d are not mutually inverse");

  const PolyMatrix dc = mat_mul(d, c);
  const PolyMatrix e = mat_lin(mat_id(p, n), QRat(-1), dc);        // 1 - dc
  const PolyMatrix two = mat_lin(mat_id(p, n, QRat(2)), QRat(-1), dc);  // 2 - dc
  const PolyMatrix c2 = mat_mul(c, two);
  const PolyMatrix blocks[2][2] = {{mat_mul(c2, d), mat_mul(c2, e)},
                                   {mat_mul(e, d), mat_mul(e, e)}};

  FibreMatrix out(p, 2 * n, 2 * n);
  for (int bi = 0; bi < 2; ++bi)
    for (int bj = 0; bj < 2; ++bj)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const QRat alpha = (bi == 0 && bj == 0 && i == j) ? QRat(1) : QRat(0);
          GradedPair x(p);
          x.add(0, blocks[bi][bj][i][j], alpha);
          validate_fibre(x);
          out(bi * n + i, bj * n + j) = x;
        }
  if (!(out * out == out)) throw PreconditionError("Bass matrix is not idempotent");
  return out;
}

FibreMatrix bass_idempotent(const NCPoly& c, const NCPoly& d) {
  return bass_idempotent(PolyMatrix{{c}}, PolyMatrix{{d}});
}

TruncOp bass_idempotent(const TruncOp& c, const TruncOp& d, double tol) {
  const Eigen::Index n = c.rows();
  if (c.cols() != n || d.rows() != n || d.cols() != n)
    throw PreconditionError("c and d must be square of the same size");
  const TruncOp id = TruncOp::Identity(n, n);
  const TruncOp dc = d * c;
  const TruncOp e = id - dc;
  const TruncOp c2 = c * (2.0 * id - dc);
  TruncOp out(2 * n, 2 * n);
  out << c2 * d, c2 * e, e * d, e * e;
  const double err = norm(out * out - out);
  if (err > tol)
    throw PreconditionError("Bass matrix is not idempotent: ||p^2 - p|| = " + std::to_string(err));
  return out;
}

// -------------------------------------------------------------- projections

FibreMatrix projection_pN(int n) {
  const Presentation& p = iso();
  if (n == 0) return FibreMatrix::identity(p, 1);
  if (n < 0) {
    FibreMatrix out(p, 1, 1);
    out(0, 0) = GradedPair::single(0, S_pow(-n) * Sp_pow(-n), 1);
    return out;
  }
  FibreMatrix out(p, 2, 2);
  out(0, 0) = GradedPair::unit(p);
  out(1, 1) = GradedPair::single(0, one(p) - S_pow(n) * Sp_pow(n), 0);
  return out;
}

NCPoly ENMatrix::entry(std::size_t i, std::size_t k) const {
  return monomials.at(i) * star(monomials.at(k));
}

NCPoly ENMatrix::gram() const {
  const Presentation& p = monomials.front().presentation();
  NCPoly g(p);
  for (std::size_t k = 0; k < size(); ++k) g += lambda_sq[k] * (star(monomials[k]) * monomials[k]);
  return normalize(g);
}

ENMatrix projection_EN(int n, int bound) {
  if (std::abs(n) > bound)
    throw PreconditionError("|N| = " + std::to_string(std::abs(n)) + " exceeds the bound " +
                            std::to_string(bound));
  const Presentation& p = suq2();
  ENMatrix e{n, {}, {}};
  const int m = std::abs(n);
  for (int k = 0; k <= m; ++k) {
    const NCPoly x = n >= 0 ? NCPoly::generator(p, "b").pow(k) * NCPoly::generator(p, "d").pow(m - k)
                            : NCPoly::generator(p, "c").pow(k) * NCPoly::generator(p, "a").pow(m - k);
    e.monomials.push_back(x);
  }

  std::vector<NCPoly> grams;
  std::map<Word, std::size_t> rows{{Word{}, 0}};
  for (const NCPoly& x : e.monomials) {
    grams.push_back(normalize(star(x) * x));
    for (const auto& [w, c] : grams.back().terms()) rows.try_emplace(w, rows.size());
  }
  QMatrix a(rows.size(), std::vector<QRat>(grams.size()));
  std::vector<QRat> b(rows.size());
  b[0] = QRat(1);
  for (std::size_t k = 0; k < grams.size(); ++k)
    for (const auto& [w, c] : grams[k].terms()) a[rows.at(w)][k] = c;
  try {
    e.lambda_sq = solve_exact(a, b);
  } catch (const SingularSystem& err) {
    throw SingularSystem("E_N ansatz for N=" + std::to_string(n) + " (" +
                         std::to_string(rows.size()) + " equations, " +
                         std::to_string(grams.size()) + " unknowns): " + err.what());
  }
  if (!(e.gram() == NCPoly(p, QRat(1))))
    throw SingularSystem("E_N solve for N=" + std::to_string(n) + " does not give T*T = 1");
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t k = 0; k < e.size(); ++k) {
      const NCPoly x = e.entry(i, k);
      if (!x.is_zero() && weight(x) != std::optional<int>(0))
        throw PreconditionError("E_N entry (" + std::to_string(i) + "," + std::to_string(k) +
                                ") is not of weight 0");
    }
  return e;
}

// ------------------------------------------------------------------ pairing

namespace {

void require_weight0(const GradedPair& x) {
  for (int k : x.support())
    if (k != 0) throw PreconditionError("pairing needs weight-0 entries, found weight " +
                                        std::to_string(k));
}

TruncOp toeplitz_image(const GradedPair& x, double q, int dim) {
  require_weight0(x);
  if (x.is_zero()) return TruncOp::Zero(dim, dim);
  const NCPoly& t = x.at(0).t;
  return represent(t, {rep_kind_for(t.presentation()), q, dim});
}

TruncOp scalar_image(const GradedPair& x, double q, int dim) {
  require_weight0(x);
  return x.at(0).alpha.evaluate(q) * TruncOp::Identity(dim, dim);
}

TruncOp range_projection(double q, int dim) {
  const Presentation& p = iso();
  return represent(NCPoly::generator(p, "S") * NCPoly::generator(p, "S'"), {RepKind::shift, q, dim});
}

void require_truncation(double q, int dim) {
  if (!(q > 0.0 && q < 1.0)) throw PreconditionError("q must lie in (0, 1)");
  if (std::pow(q, 2 * dim) >= 1e-12)
    throw PreconditionError("dimension " + std::to_string(dim) + " too small: q^(2D) >= 1e-12");
}

PairingResult snap(double raw, double tol) {
  const double r = std::round(raw);
  return {raw, static_cast<long>(r), std::abs(raw - r) <= tol};
}

}  // namespace

KHomClass class_id_eps() { return {"id-eps", toeplitz_image, scalar_image}; }

KHomClass class_eps_eps0() {
  return {"eps-eps0", scalar_image, [](const GradedPair& x, double q, int dim) -> TruncOp {
            require_weight0(x);
            return x.at(0).alpha.evaluate(q) * range_projection(q, dim);
          }};
}

KHomClass khom_class_by_name(const std::string& name) {
  if (name == "id-eps") return class_id_eps();
  if (name == "eps-eps0") return class_eps_eps0();
  throw PreconditionError("unknown K-homology class '" + name + "'");
}

PairingResult index_pairing(const KHomClass& k, const FibreMatrix& p, double q, int dim,
                            double snap_tol) {
  require_truncation(q, dim);
  if (p.rows() != p.cols()) throw PreconditionError("projection must be square");
  if (!(p * p == p)) throw PreconditionError("non-idempotent input");
  double raw = 0.0;
  for (std::size_t i = 0; i < p.rows(); ++i) {
    const GradedPair& x = p(i, i);
    raw += trace(k.plus(x, q, dim) - k.minus(x, q, dim));
  }
  return snap(raw, snap_tol);
}

PairingResult index_pairing(const KHomClass& k, const ENMatrix& e, double q, int dim,
                            double snap_tol) {
  require_truncation(q, dim);
  if (!(e.gram() == NCPoly(suq2(), QRat(1)))) throw PreconditionError("non-idempotent input");
  double raw = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    const GradedPair x = embed_iota(e.entry(i, i));
    raw += e.lambda_sq[i].evaluate(q) * trace(k.plus(x, q, dim) - k.minus(x, q, dim));
  }
  return snap(raw, snap_tol);
}

}  // namespace qhopf
