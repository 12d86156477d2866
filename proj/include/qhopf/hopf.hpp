#pragma once

// Hopf structure on O(SU_q(2)) and O(U(1)), the projection pi and the
// right U(1)-coaction.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qhopf/ncpoly.hpp"

namespace qhopf {

/// Finite sum of c * (w_1 ⊗ ... ⊗ w_k) with every leg in normal form.
class Tensor {
 public:
  using Key = std::vector<Word>;

  explicit Tensor(std::vector<const Presentation*> legs) : legs_(std::move(legs)) {}
  /// x ⊗ y.
  static Tensor product(const NCPoly& x, const NCPoly& y);
  /// A rank-0 tensor (a scalar).
  static Tensor scalar(const QRat& c);

  const std::vector<const Presentation*>& legs() const { return legs_; }
  std::size_t rank() const { return legs_.size(); }
  const std::map<Key, QRat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * (w_1 ⊗ ... ⊗ w_k), normalizing each leg.
  void add(const Key& words, const QRat& c);

  Tensor operator-() const;
  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const QRat& s, const Tensor& t);
  /// Legwise product.
  friend Tensor operator*(const Tensor& a, const Tensor& b);
  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.legs_ == b.legs_ && a.terms_ == b.terms_;
  }

  /// Replaces leg `i` of every term by the tensor f(word), whose legs are
  /// `new_legs`.
  Tensor map_leg(std::size_t i, const std::vector<const Presentation*>& new_legs,
                 const std::function<Tensor(const Word&)>& f) const;
  /// Multiplies legs i and i+1 together.
  Tensor contract(std::size_t i) const;
  /// For rank 1: the underlying polynomial.
  NCPoly as_poly() const;
  /// For rank 0: the underlying scalar.
  QRat as_scalar() const;

  std::string to_string() const;

 private:
  std::vector<const Presentation*> legs_;
  std::map<Key, QRat> terms_;
};

/// Generator tables of a Hopf algebra; extended multiplicatively (the
/// antipode anti-multiplicatively).
struct HopfStructure {
  const Presentation* pres;
  std::vector<Tensor> coproduct;
  std::vector<QRat> counit;
  std::vector<NCPoly> antipode;
};

const HopfStructure& suq2_hopf();
const HopfStructure& circle_hopf();
/// The built-in structure for x's algebra; throws PresentationMismatch.
const HopfStructure& hopf_for(const Presentation& p);

Tensor coproduct(const HopfStructure& h, const NCPoly& x);
QRat counit(const HopfStructure& h, const NCPoly& x);
NCPoly antipode(const HopfStructure& h, const NCPoly& x);
Tensor coproduct(const NCPoly& x);
QRat counit(const NCPoly& x);
NCPoly antipode(const NCPoly& x);

struct AxiomFailure {
  std::string axiom;
  std::string witness;   // generator or relation
  std::string residual;  // canonical text of lhs - rhs
};

struct HopfReport {
  std::string algebra;
  std::size_t checks = 0;
  std::vector<AxiomFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Coassociativity, both counit laws and both antipode convolution
/// identities on every generator, plus compatibility of Delta, epsilon and S
/// with every defining relation.
HopfReport hopf_axiom_report(const HopfStructure& h);

/// pi: SU_q(2) -> O(U(1)), a -> v, d -> v^{-1}, b, c -> 0.
NCPoly project_pi(const NCPoly& x);
/// Weight decomposition x = sum x_N with Delta_R(x_N) = x_N ⊗ v^N.
std::map<int, NCPoly> coaction_R(const NCPoly& x);
/// Delta_R as a tensor (id ⊗ pi) Delta, for cross-checking coaction_R.
Tensor coaction_R_tensor(const NCPoly& x);
/// Left coaction on weight-n elements: p -> v^{-n} ⊗ p.
Tensor coaction_L(const NCPoly& x);

/// v^n in O(U(1)) for any integer n.
NCPoly circle_power(int n);
/// u^n in the Laurent algebra of symbols.
NCPoly laurent_power(int n);

/// The sphere inside SU_q(2): A -> -q^{-1} b c, B -> -b a.
NCPoly sphere_to_suq2(const NCPoly& x);

}  // namespace qhopf
