#pragma once

// Z-graded fibre products: elements sum_N (t_N ⊗ v^N, alpha_N v^N) with t_N
// in a Toeplitz-type algebra (discext or isometry) and alpha_N in Q(q).

#include <map>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "qhopf/ncpoly.hpp"

namespace qhopf {

struct Component {
  NCPoly t;
  QRat alpha;
};

/// A graded pair without the compatibility condition (an element of the
/// product A1 × A2). Components are normalized; zero components are dropped.
class GradedPair {
 public:
  explicit GradedPair(const Presentation& p) : pres_(&p) {}
  static GradedPair unit(const Presentation& p);
  static GradedPair single(int n, const NCPoly& t, const QRat& alpha);

  const Presentation& presentation() const { return *pres_; }
  const std::map<int, Component>& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }
  std::set<int> support() const;
  /// Component N, or (0, 0) when absent.
  Component at(int n) const;

  void add(int n, const NCPoly& t, const QRat& alpha);

  GradedPair operator-() const;
  GradedPair& operator+=(const GradedPair& o);
  GradedPair& operator-=(const GradedPair& o);
  friend GradedPair operator+(GradedPair a, const GradedPair& b) { return a += b; }
  friend GradedPair operator-(GradedPair a, const GradedPair& b) { return a -= b; }
  friend GradedPair operator*(const QRat& s, const GradedPair& x);
  /// (x y)_N = sum_k x_k y_{N-k}, componentwise on both legs.
  friend GradedPair operator*(const GradedPair& x, const GradedPair& y);
  friend bool operator==(const GradedPair& x, const GradedPair& y);

  std::string to_string() const;

 private:
  const Presentation* pres_;
  std::map<int, Component> comps_;
};

/// (t ⊗ v^N, alpha v^N)^* = (t^* ⊗ v^{-N}, alpha v^{-N}); q is real.
GradedPair star(const GradedPair& x);

/// symbol(t) == alpha u^{-N}.
bool is_compatible(int n, const NCPoly& t, const QRat& alpha);
/// Throws IncompatiblePair for the first failing component.
void validate_fibre(const GradedPair& x);

/// Elements of the fibre product P are graded pairs that passed validation.
using FibreElement = GradedPair;
FibreElement make_fibre(const Presentation& p, const std::vector<std::pair<int, Component>>& comps);

/// The *-morphism O(SU_q(2)) -> P over the extended disc:
/// a -> (z* ⊗ v, v), c -> (s ⊗ v, 0), b = -q c*, d = a*.
FibreElement embed_iota(const NCPoly& x);

/// True iff the support of x lies in {N}.
bool ln_membership(const FibreElement& x, int n);

/// L_0 -> Toeplitz algebra, (t, alpha) -> t. Requires support in {0}.
NCPoly iso_psi(const FibreElement& x);
/// Inverse of iso_psi: t -> (t, alpha) with alpha the (constant) symbol of t.
FibreElement iso_phi(const NCPoly& t);
/// k + alpha -> (k + alpha, alpha) for compact k (symbol(k) = 0).
FibreElement iso_phi(const NCPoly& k, const QRat& alpha);

class FibreMatrix {
 public:
  FibreMatrix(const Presentation& p, std::size_t rows, std::size_t cols);
  static FibreMatrix identity(const Presentation& p, std::size_t n);

  const Presentation& presentation() const { return *pres_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  GradedPair& operator()(std::size_t i, std::size_t j) { return data_.at(i * cols_ + j); }
  const GradedPair& operator()(std::size_t i, std::size_t j) const {
    return data_.at(i * cols_ + j);
  }

  friend FibreMatrix operator*(const FibreMatrix& a, const FibreMatrix& b);
  friend FibreMatrix operator+(const FibreMatrix& a, const FibreMatrix& b);
  friend FibreMatrix operator-(const FibreMatrix& a, const FibreMatrix& b);
  friend bool operator==(const FibreMatrix& a, const FibreMatrix& b);
  bool is_zero() const;

  std::string to_string() const;

 private:
  const Presentation* pres_;
  std::size_t rows_, cols_;
  std::vector<GradedPair> data_;
};

/// Conjugate transpose.
FibreMatrix star(const FibreMatrix& m);
FibreMatrix direct_sum(const FibreMatrix& a, const FibreMatrix& b);

nlohmann::json to_json(const GradedPair& x);
nlohmann::json to_json(const FibreMatrix& m);

struct InjectivityResult {
  std::size_t words;
  std::size_t rank;
};
/// Rank of the images of all normal PBW words of degree <= max_degree under
/// embed_iota, with coefficients specialized at the rational value q.
InjectivityResult iota_pbw_rank(int max_degree, const mpq_class& q);

}  // namespace qhopf
