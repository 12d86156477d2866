#include <doctest.h>

#include <cmath>

#include "qhopf/errors.hpp"
#include "qhopf/kconn.hpp"
#include "support.hpp"

using namespace qhopf;

namespace {

const Presentation& I() { return isometry(); }
NCPoly S(int k) { return NCPoly::generator(I(), "S").pow(k); }
NCPoly Sp(int k) { return NCPoly::generator(I(), "S'").pow(k); }

StrongConn without_compact_term() {
  StrongConn l = explicit_connection();
  auto full = l.eval;
  l.name = "corrupted";
  l.eval = [full](int n) {
    ConnValue v = full(n);
    if (n > 0) v.pop_back();
    return v;
  };
  return l;
}

// Gaussian binomial [n, k] in x = q^2, built by the Pascal rule.
QRat gaussian(int n, int k) {
  std::vector<std::vector<QRat>> t(n + 1, std::vector<QRat>(n + 1));
  const QRat x = QRat::q() * QRat::q();
  for (int i = 0; i <= n; ++i) {
    t[i][0] = QRat(1);
    t[i][i] = QRat(1);
    for (int j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + x.pow(j) * t[i - 1][j];
  }
  return t[n][k];
}

}  // namespace

TEST_CASE("explicit connection satisfies every axiom") {
  const ConnReport r = check_strong_connection(explicit_connection(), 8);
  CHECK(r.ok());
  std::set<std::string> families;
  for (const ConnCheck& c : r.checks) families.insert(c.family);
  CHECK(families == std::set<std::string>{"unital", "membership", "splitting", "right-colinear",
                                          "left-colinear", "counit"});
}

TEST_CASE("explicit connection values") {
  const StrongConn l = explicit_connection();
  CHECK(conn_value_text(l(0)) == "{0: (1, 1)} ⊗ {0: (1, 1)}");
  CHECK(conn_value_text(l(1)) ==
        "{-1: (S, 1)} ⊗ {1: (S', 1)} + {-1: (1 - S S', 0)} ⊗ {1: (1 - S S', 0)}");
  CHECK(conn_value_text(l(-2)) == "{2: (S'^2, 1)} ⊗ {-2: (S^2, 1)}");
  // (1 - S S*)^2 = 1 - S S*
  const NCPoly k = NCPoly(I(), 1) - S(1) * Sp(1);
  CHECK(k * k == k);
}

TEST_CASE("trivial leg connections pass") {
  CHECK(check_strong_connection(trivial_circle_connection(), 8).ok());
  CHECK(check_strong_connection(trivial_toeplitz_connection(), 8).ok());
}

TEST_CASE("dropping the compact term breaks the splitting") {
  const ConnReport r = check_strong_connection(without_compact_term(), 3);
  CHECK_FALSE(r.ok());
  bool found = false;
  for (const ConnCheck& c : r.failures()) {
    CHECK(c.n > 0);
    if (c.family == "splitting" && c.n == 1) {
      CHECK(c.residual == "v^1: {0: (1 - S S', 0)}");
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("membership failures are reported") {
  StrongConn l = explicit_connection();
  l.eval = [](int n) -> ConnValue {
    return {{GradedPair::single(-n, NCPoly(I(), 1), 1), GradedPair::single(n, NCPoly(I(), 1), 1)}};
  };
  const ConnReport r = check_strong_connection(l, 1);
  bool member = false;
  for (const ConnCheck& c : r.failures()) member = member || c.family == "membership";
  CHECK(member);
  CHECK_THROWS_AS(check_strong_connection(l, 0), PreconditionError);
}

TEST_CASE("combined connection") {
  const StrongConn c =
      combine_connections(trivial_toeplitz_connection(), trivial_circle_connection(), toeplitz_lifts());
  CHECK(check_strong_connection(c, 8).ok());
  CHECK(conn_value_text(c(0)) == "{0: (1, 1)} ⊗ {0: (1, 1)}");
  for (int n = -8; n <= 0; ++n) CHECK(connections_agree(c, explicit_connection(), n));
  // Independent term-by-term comparison at N = -1.
  const ConnValue v = c(-1);
  REQUIRE(v.size() == 1);
  CHECK(v[0].left == GradedPair::single(1, Sp(1), 1));
  CHECK(v[0].right == GradedPair::single(-1, S(1), 1));
  CHECK_FALSE(connections_agree(without_compact_term(), explicit_connection(), 1));
}

TEST_CASE("bad splittings are rejected") {
  GradedSplittings s = toeplitz_lifts();
  s.alpha_L12 = [](int n) { return GradedPair::single(n, NCPoly(I(), 1), 0); };
  const StrongConn c = combine_connections(trivial_toeplitz_connection(), trivial_circle_connection(), s);
  CHECK_THROWS_AS(c(2), NonGradedSplitting);
  CHECK_THROWS_AS(combine_connections(trivial_circle_connection(), trivial_toeplitz_connection(),
                                      toeplitz_lifts()),
                  PreconditionError);
}

TEST_CASE("graded entwining") {
  std::vector<GradedPair> data;
  for (int n = -6; n <= 6; ++n) data.push_back(entwining_basis(n));
  data.push_back(entwining_basis(2) + QRat::q() * entwining_basis(-3));
  CHECK(check_entwining(data, 6).empty());

  const GradedEntwining e;
  const auto t = e.psi(2, entwining_basis(3));
  REQUIRE(t.size() == 1);
  CHECK(t.begin()->first == 5);
  CHECK(e.psi_inverse(entwining_basis(-1), 0).begin()->first == 1);

  std::uniform_int_distribution<int> pick(-4, 4);
  for (int i = 0; i < 30; ++i) {
    const GradedPair x = entwining_basis(pick(testsupport::rng()));
    const GradedPair a = entwining_basis(pick(testsupport::rng()));
    CHECK(entwined_module_law(x, a));
  }
}

TEST_CASE("Bass idempotent collapses to p_-N") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(bass_idempotent(S(n), Sp(n)) == direct_sum(projection_pN(-n), FibreMatrix(I(), 1, 1)));
    CHECK(bass_idempotent(Sp(n), S(n)) == projection_pN(n));
  }
  FibreMatrix rank_one(I(), 2, 2);
  rank_one(0, 0) = GradedPair::unit(I());
  CHECK(bass_idempotent(NCPoly(I(), 1), NCPoly(I(), 1)) == rank_one);
}

TEST_CASE("Bass needs inverse symbols") {
  CHECK_THROWS_AS(bass_idempotent(S(1), S(1)), LiftInversionError);
  CHECK_THROWS_AS(bass_idempotent(S(2), Sp(1)), LiftInversionError);
  const PolyMatrix c{{S(1), NCPoly(I())}, {NCPoly(I()), Sp(2)}};
  const PolyMatrix d{{Sp(1), NCPoly(I())}, {NCPoly(I()), S(2)}};
  const FibreMatrix p = bass_idempotent(c, d);
  CHECK(p.rows() == 4);
  CHECK(p * p == p);
}

TEST_CASE("numeric Bass idempotent") {
  const int D = 24;
  std::normal_distribution<double> g(0.0, 0.3);
  for (int trial = 0; trial < 5; ++trial) {
    TruncOp c = TruncOp::Identity(2 * D, 2 * D);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) c(i, j) += g(testsupport::rng());
    const TruncOp d = c.inverse();
    const TruncOp p = bass_idempotent(c, d);
    CHECK(norm(p * p - p) <= 1e-10);
  }
  // Idempotent for any c, d; only the shapes can be wrong.
  const TruncOp c = 2.0 * TruncOp::Identity(4, 4);
  CHECK(norm(bass_idempotent(c, c) * bass_idempotent(c, c) - bass_idempotent(c, c)) <= 1e-10);
  CHECK_THROWS_AS(bass_idempotent(c, TruncOp::Identity(3, 3)), PreconditionError);
}

TEST_CASE("projections p_N") {
  CHECK(projection_pN(0) == FibreMatrix::identity(I(), 1));
  CHECK(projection_pN(-1).to_string() == "[{0: (S S', 1)}]");
  CHECK(projection_pN(2).to_string() == "[{0: (1, 1)}, 0; 0, {0: (1 - S^2 S'^2, 0)}]");
  for (int n = -6; n <= 6; ++n) {
    const FibreMatrix p = projection_pN(n);
    CHECK(p * p == p);
    CHECK(star(p) == p);
  }
}

TEST_CASE("E_N coefficients are Gaussian binomials") {
  const QRat q = QRat::q();
  for (int n = -6; n <= 6; ++n) {
    const ENMatrix e = projection_EN(n);
    const int m = std::abs(n);
    REQUIRE(e.size() == static_cast<std::size_t>(m + 1));
    for (int k = 0; k <= m; ++k) {
      const QRat expected = n >= 0 ? gaussian(m, k) * q.pow(-2 * k * (m - k)) : gaussian(m, k);
      CHECK(e.lambda_sq[k] == expected);
    }
    CHECK(e.gram() == NCPoly(suq2(), 1));
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t k = 0; k < e.size(); ++k) {
        const NCPoly x = e.entry(i, k);
        CHECK((x.is_zero() || weight(x) == 0));
      }
  }
  const ENMatrix e1 = projection_EN(1);
  CHECK(e1.lambda_sq == std::vector<QRat>{QRat(1), QRat(1)});
  CHECK(projection_EN(2).lambda_sq[1].to_string() == "(1 + q^2)/(q^2)");
  CHECK_THROWS_AS(projection_EN(7), PreconditionError);
}

TEST_CASE("E_N is numerically a projection away from the truncation edge") {
  const int D = 60;
  const double q = 0.5;
  for (int n : {-3, 2}) {
    const ENMatrix e = projection_EN(n);
    const int m = static_cast<int>(e.size());
    TruncOp big = TruncOp::Zero(m * D, m * D);
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < m; ++k) {
        const GradedPair x = embed_iota(e.entry(i, k));
        const double coeff = std::sqrt(e.tag(i, k).evaluate(q));
        if (!x.is_zero())
          big.block(i * D, k * D, D, D) = coeff * represent(x.at(0).t, {RepKind::mu_disc_ext, q, D});
      }
    const TruncOp sq = big * big - big;
    const TruncOp adj = big.transpose() - big;
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < m; ++k) {
        CHECK(corner_max(sq.block(i * D, k * D, D, D), D - 2 * std::abs(n) - 2) <= 1e-10);
        CHECK(corner_max(adj.block(i * D, k * D, D, D), D) <= 1e-12);
      }
  }
}

TEST_CASE("index pairings") {
  for (double q : {0.25, 0.5, 0.75})
    for (int n = -5; n <= 5; ++n) {
      const PairingResult a = index_pairing(class_id_eps(), projection_pN(n), q, 128);
      const PairingResult b = index_pairing(class_eps_eps0(), projection_pN(n), q, 128);
      CHECK(std::abs(a.raw - n) <= 1e-9);
      CHECK(a.snapped == n);
      CHECK(b.snapped == 1);
      CHECK(std::abs(b.raw - 1) <= 1e-9);
    }
  CHECK(index_pairing(class_id_eps(), FibreMatrix(I(), 1, 1), 0.5, 64).raw == 0.0);
}

TEST_CASE("pairing is additive under direct sums") {
  for (int m = -3; m <= 3; ++m)
    for (int n = -3; n <= 3; ++n) {
      const FibreMatrix p = direct_sum(projection_pN(m), projection_pN(n));
      CHECK(index_pairing(class_id_eps(), p, 0.5, 64).snapped == m + n);
      CHECK(index_pairing(class_eps_eps0(), p, 0.5, 64).snapped == 2);
    }
}

TEST_CASE("E_N pairs like p_-N") {
  for (int n = -4; n <= 4; ++n) {
    const PairingResult e = index_pairing(class_id_eps(), projection_EN(n), 0.5, 200);
    const PairingResult p = index_pairing(class_id_eps(), projection_pN(-n), 0.5, 200);
    CHECK(std::abs(e.raw - p.raw) <= 1e-6);
    CHECK(e.snapped == -n);
  }
}

TEST_CASE("pairing preconditions") {
  FibreMatrix two(I(), 1, 1);
  two(0, 0) = GradedPair::single(0, NCPoly(I(), 2), 2);
  CHECK_THROWS_AS(index_pairing(class_id_eps(), two, 0.5, 64), PreconditionError);
  CHECK_THROWS_AS(index_pairing(class_id_eps(), projection_pN(1), 0.9, 64), PreconditionError);
  CHECK_THROWS_AS(khom_class_by_name("id-id"), PreconditionError);
}

TEST_CASE("report json") {
  const auto j = to_json(check_strong_connection(without_compact_term(), 1));
  CHECK(j["ok"] == false);
  CHECK(j["range"][0] == -1);
  bool residual = false;
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("pass"));
    if (c["pass"] == false) residual = residual || c.contains("residual");
  }
  CHECK(residual);
}
