#include <doctest.h>

#include <cmath>

#include "qhopf/errors.hpp"
#include "qhopf/hopf.hpp"
#include "qhopf/oprep.hpp"
#include "support.hpp"

using namespace qhopf;
using testsupport::word_poly;

namespace {
NCPoly gen(const Presentation& p, const char* name) { return NCPoly::generator(p, name); }
}  // namespace

TEST_CASE("generator matrices follow the weighted shifts") {
  const double q = 0.5;
  const int D = 12;
  const RepSpec spec{RepKind::rho_suq2, q, D};
  const TruncOp a = represent(gen(suq2(), "a"), spec);
  const TruncOp c = represent(gen(suq2(), "c"), spec);
  const TruncOp b = represent(gen(suq2(), "b"), spec);
  CHECK(c(3, 3) == doctest::Approx(0.125));
  CHECK(a.col(0).cwiseAbs().maxCoeff() == 0.0);
  for (int n = 1; n < D; ++n) CHECK(a(n - 1, n) == doctest::Approx(std::sqrt(1 - std::pow(q, 2 * n))));
  for (int n = 0; n < D; ++n) CHECK(b(n, n) == doctest::Approx(-std::pow(q, n + 1)));
}

TEST_CASE("the defining relation is the identity on the interior") {
  const RepSpec spec{RepKind::rho_suq2, 0.3, 32};
  const Presentation& p = suq2();
  const NCPoly x = word_poly(p, "ad") - QRat::q() * word_poly(p, "bc");
  const TruncOp raw = letter_matrix(spec, *p.find_letter("a")) * letter_matrix(spec, *p.find_letter("d")) -
                      0.3 * letter_matrix(spec, *p.find_letter("b")) * letter_matrix(spec, *p.find_letter("c"));
  CHECK(corner_max(raw - TruncOp::Identity(32, 32), 31) < 1e-15);
  CHECK(corner_max(represent(x, spec) - TruncOp::Identity(32, 32), 32) < 1e-15);
}

TEST_CASE("homomorphism on random words") {
  const int D = 64;
  for (RepKind k : {RepKind::rho_suq2, RepKind::rho_plus_sphere, RepKind::mu_disc, RepKind::mu_disc_ext,
                    RepKind::shift}) {
    const RepSpec spec{k, 0.5, D};
    const Presentation& p = rep_presentation(k);
    std::string alphabet;
    for (Letter l = 0; l < p.size(); ++l) alphabet += static_cast<char>('0' + l);
    for (int i = 0; i < 40; ++i) {
      const std::string w = testsupport::random_word(alphabet, 5);
      Word word;
      TruncOp prod = TruncOp::Identity(D, D);
      for (char ch : w) {
        word.push_back(static_cast<Letter>(ch - '0'));
        prod = prod * letter_matrix(spec, word.back());
      }
      const TruncOp img = represent(NCPoly::monomial(p, word), spec);
      CHECK(corner_max(img - prod, D - 6) <= 1e-10);
    }
  }
}

TEST_CASE("the sphere representation is the restriction") {
  const int D = 40;
  const Presentation& sp = sphere();
  for (const char* g : {"A", "B", "B'"}) {
    const NCPoly x = gen(sp, g);
    const TruncOp plus = represent(x, {RepKind::rho_plus_sphere, 0.6, D});
    const TruncOp rho = represent(sphere_to_suq2(x), {RepKind::rho_suq2, 0.6, D});
    CHECK(corner_max(plus - rho, D - 2) < 1e-14);
  }
}

TEST_CASE("symbols") {
  const Presentation& dp = disc();
  const NCPoly z = gen(dp, "z"), zs = gen(dp, "z'");
  CHECK(symbol(z * z * zs).to_string() == "u");
  CHECK(symbol(NCPoly(dp, 1) - z * zs).is_zero());
  CHECK(symbol(gen(disc_ext(), "s")).is_zero());
  CHECK(symbol(gen(isometry(), "S'")).to_string() == "u^-1");
  CHECK_THROWS_AS(symbol(gen(suq2(), "a")), PresentationMismatch);
}

TEST_CASE("shift is an isometry") {
  const TruncOp s = represent(gen(isometry(), "S"), {RepKind::shift, 0.5, 16});
  CHECK(norm(s) == doctest::Approx(1.0));
  CHECK(trace(TruncOp::Identity(16, 16) - s * s.transpose()) == doctest::Approx(1.0));
}

TEST_CASE("elementary matrices approximate matrix units") {
  const int D = 64;
  for (double q : {0.25, 0.5, 0.75})
    for (int n = 0; n <= 8; ++n)
      for (int m = -n; n + std::abs(m) <= 8; ++m) {
        const TruncOp e = elementary_matrix(n, m, q, D);
        CHECK((e - matrix_unit(n + m, n, D)).cwiseAbs().maxCoeff() <= 1e-9);
      }
}

TEST_CASE("representation errors") {
  CHECK_THROWS_AS(elementary_matrix(3, 2, 0.5, 5), DimensionTooSmall);
  CHECK_THROWS_AS(elementary_matrix(-1, 0, 0.5, 16), PreconditionError);
  CHECK_THROWS_AS(elementary_matrix(1, -2, 0.5, 16), PreconditionError);
  CHECK_THROWS_AS(represent(gen(suq2(), "a"), {RepKind::rho_suq2, 1.5, 8}), PreconditionError);
  CHECK_THROWS_AS(represent(gen(disc(), "z"), {RepKind::rho_suq2, 0.5, 8}), PresentationMismatch);
  CHECK_THROWS_AS(rep_kind_from_name("pi"), PresentationMismatch);
}

TEST_CASE("matrix dump uses round-trippable digits") {
  TruncOp m(1, 2);
  m << 0.1, -2.0;
  CHECK(dump_matrix(m) == "0.10000000000000001 -2\n");
}
