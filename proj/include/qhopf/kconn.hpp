#pragma once

// Strong connections on the Z-graded fibre product over the isometry algebra,
// the Bass idempotent, the projections p_N and E_N, and their index pairings.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "qhopf/oprep.hpp"
#include "qhopf/pullback.hpp"

namespace qhopf {

struct ConnTerm {
  GradedPair left;
  GradedPair right;
};
using ConnValue = std::vector<ConnTerm>;

/// Where the legs of a connection live: the fibre product P, the Toeplitz
/// leg A1 (alpha = 0 everywhere) or the circle leg A2 (t = 0 everywhere).
enum class ConnDomain { fibre_product, toeplitz_leg, circle_leg };

struct StrongConn {
  std::string name;
  ConnDomain domain;
  const Presentation* pres;
  /// l(v^N).
  std::function<ConnValue(int)> eval;

  ConnValue operator()(int n) const { return eval(n); }
};

/// The unit of the domain: (1, 1), (1, 0) or (0, 1) at weight 0.
GradedPair domain_unit(const Presentation& p, ConnDomain d);

StrongConn explicit_connection();
/// l1(v^N) = (1 ⊗ v^-N) ⊗ (1 ⊗ v^N) on A1.
StrongConn trivial_toeplitz_connection();
/// l2(v^N) = v^-N ⊗ v^N on A2.
StrongConn trivial_circle_connection();

struct ConnCheck {
  std::string family;  // unital, membership, splitting, right-colinear, left-colinear, counit
  int n;
  bool pass;
  std::string residual;
};

struct ConnReport {
  std::string connection;
  int range = 0;
  std::vector<ConnCheck> checks;
  std::vector<ConnCheck> failures() const;
  bool ok() const { return failures().empty(); }
};

/// Exact check of the strong-connection axioms for |N| <= range.
ConnReport check_strong_connection(const StrongConn& l, int range);

/// Equality of l(v^N) and m(v^N) as elements of P ⊗ P.
bool connections_agree(const StrongConn& l, const StrongConn& m, int n);

/// Graded splitting data: lifts A2 -> A1 given on the basis v^N, and the
/// map from the part of A1 whose image lies in pi2(A2) back to A2.
struct GradedSplittings {
  std::function<GradedPair(int)> alpha_L12;
  std::function<GradedPair(int)> alpha_R12;
  std::function<GradedPair(const GradedPair&)> alpha_R21;
};

/// Lifts 1 ⊗ v^N -> S'^N ⊗ v^N and 1 ⊗ v^-N -> S^N ⊗ v^-N for N >= 0.
GradedSplittings toeplitz_lifts();

/// Glues connections on the two legs into a connection on P. Throws
/// NonGradedSplitting when a splitting leaves its graded component.
StrongConn combine_connections(const StrongConn& l1, const StrongConn& l2,
                               const GradedSplittings& s);

nlohmann::json to_json(const ConnReport& r);
std::string conn_value_text(const ConnValue& v);

// Graded entwining psi(v^m ⊗ p) = sum_n p_n ⊗ v^{m+n}. Elements of C ⊗ P and
// P ⊗ C are stored as maps from the circle exponent to the P leg.
using CircleTensor = std::map<int, GradedPair>;

struct GradedEntwining {
  CircleTensor psi(int m, const GradedPair& p) const;
  CircleTensor psi_inverse(const GradedPair& p, int k) const;
};

struct EntwiningFailure {
  std::string axiom;
  int m;
  std::string witness;
};

/// The four entwining axioms and psi^-1 psi = id = psi psi^-1 on v^m ⊗ x for
/// |m| <= range and x in `data` (and products of pairs from `data`).
std::vector<EntwiningFailure> check_entwining(const std::vector<GradedPair>& data, int range);
/// (xa)_(0) ⊗ (xa)_(1) = x_(0) psi(x_(1) ⊗ a).
bool entwined_module_law(const GradedPair& x, const GradedPair& a);
/// Homogeneous fibre elements {n: (S'^n, 1)} or {n: (S^|n|, 1)}.
GradedPair entwining_basis(int n);

/// Exact Bass idempotent over the isometry algebra from n x n lifts c, d.
/// Throws LiftInversionError unless symbol(c) symbol(d) = 1 = symbol(d) symbol(c).
using PolyMatrix = std::vector<std::vector<NCPoly>>;
FibreMatrix bass_idempotent(const PolyMatrix& c, const PolyMatrix& d);
FibreMatrix bass_idempotent(const NCPoly& c, const NCPoly& d);
/// Numeric version on truncated operators; throws PreconditionError when
/// ||p^2 - p|| exceeds tol.
TruncOp bass_idempotent(const TruncOp& c, const TruncOp& d, double tol = 1e-10);

FibreMatrix projection_pN(int n);

/// E_N = T T* with T = (lambda_k m_k)_k. Entries are kept as a squared
/// surd tag lambda_i^2 lambda_k^2 and an SU_q(2) polynomial.
struct ENMatrix {
  int n;
  std::vector<NCPoly> monomials;
  std::vector<QRat> lambda_sq;
  std::size_t size() const { return monomials.size(); }
  QRat tag(std::size_t i, std::size_t k) const { return lambda_sq[i] * lambda_sq[k]; }
  NCPoly entry(std::size_t i, std::size_t k) const;
  /// sum_k lambda_k^2 m_k* m_k, which must be 1.
  NCPoly gram() const;
};

ENMatrix projection_EN(int n, int bound = 6);

/// A K-homology class given by two representations of weight-0 fibre
/// elements on the truncated space.
struct KHomClass {
  std::string name;
  std::function<TruncOp(const GradedPair&, double q, int dim)> plus;
  std::function<TruncOp(const GradedPair&, double q, int dim)> minus;
};

KHomClass class_id_eps();
KHomClass class_eps_eps0();
KHomClass khom_class_by_name(const std::string& name);

struct PairingResult {
  double raw;
  long snapped;
  bool integral;
};

/// Tr((rho+ - rho-)(p)) over the matrix and the truncated space.
PairingResult index_pairing(const KHomClass& k, const FibreMatrix& p, double q, int dim,
                            double snap_tol = 1e-6);
PairingResult index_pairing(const KHomClass& k, const ENMatrix& e, double q, int dim,
                            double snap_tol = 1e-6);

}  // namespace qhopf
