// One line per acceptance criterion; exits non-zero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "qhopf/hopf.hpp"
#include "qhopf/kconn.hpp"
#include "qhopf/oprep.hpp"
#include "support.hpp"

using namespace qhopf;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o{false, ""};
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0 && secs > budget_s) {
    o.pass = false;
    o.detail += " (over the " + std::to_string(budget_s) + " s budget)";
  }
  if (!o.pass) ++failures;
  std::printf("[%s] %d %s: %s [%.3f s]\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs);
}

char buf[256];

}  // namespace

int main() {
  criterion(1, "winding-number pairing", 5.0, [] {
    double worst = 0;
    for (double q : {0.25, 0.5, 0.75})
      for (int n = -5; n <= 5; ++n)
        worst = std::max(worst, std::abs(index_pairing(class_id_eps(), projection_pN(n), q, 128).raw - n));
    std::snprintf(buf, sizeof buf, "max |<[(id,eps)],[p_N]> - N| = %.3g", worst);
    return Outcome{worst <= 1e-9, buf};
  });

  criterion(2, "rank pairing", 5.0, [] {
    double worst = 0;
    for (double q : {0.25, 0.5, 0.75})
      for (int n = -5; n <= 5; ++n)
        worst = std::max(worst, std::abs(index_pairing(class_eps_eps0(), projection_pN(n), q, 128).raw - 1));
    std::snprintf(buf, sizeof buf, "max |<[(eps,eps0)],[p_N]> - 1| = %.3g", worst);
    return Outcome{worst <= 1e-9, buf};
  });

  criterion(3, "E_N pairs like p_-N", 30.0, [] {
    double worst = 0;
    for (int n = -4; n <= 4; ++n) {
      const double e = index_pairing(class_id_eps(), projection_EN(n), 0.5, 200).raw;
      const double p = index_pairing(class_id_eps(), projection_pN(-n), 0.5, 200).raw;
      worst = std::max(worst, std::abs(e - p));
    }
    std::snprintf(buf, sizeof buf, "max difference %.3g at q=1/2, D=200", worst);
    return Outcome{worst <= 1e-6, buf};
  });

  criterion(4, "Bass collapse", 0, [] {
    const Presentation& p = isometry();
    for (int n = 1; n <= 6; ++n) {
      const FibreMatrix b = bass_idempotent(NCPoly::generator(p, "S").pow(n), NCPoly::generator(p, "S'").pow(n));
      if (!(b == direct_sum(projection_pN(-n), FibreMatrix(p, 1, 1))))
        return Outcome{false, "mismatch at N=" + std::to_string(n) + ": " + b.to_string()};
    }
    return Outcome{true, "exact equality for N = 1..6"};
  });

  criterion(5, "strong-connection certification", 0, [] {
    const StrongConn e = explicit_connection();
    const StrongConn c =
        combine_connections(trivial_toeplitz_connection(), trivial_circle_connection(), toeplitz_lifts());
    const ConnReport re = check_strong_connection(e, 8), rc = check_strong_connection(c, 8);
    if (!re.ok()) return Outcome{false, "explicit connection: " + re.failures().front().family};
    if (!rc.ok()) return Outcome{false, "combined connection: " + rc.failures().front().family};
    for (int n = 0; n >= -8; --n)
      if (!connections_agree(e, c, n)) return Outcome{false, "disagree at N=" + std::to_string(n)};
    return Outcome{true, std::to_string(re.checks.size() + rc.checks.size()) +
                             " exact checks, agreement at N = 0..-8"};
  });

  criterion(6, "rewriting soundness", 60.0, [] {
    std::size_t words = 0;
    for (const char* name : {"suq2", "sphere", "disc", "discext", "circle", "isometry", "laurent"}) {
      const ConfluenceReport r = check_confluence(presentation_by_name(name), 6);
      if (!r.ok()) return Outcome{false, std::string(name) + " diverges on " + r.divergences.front().word_text};
      words += r.words_checked;
    }
    const Presentation& p = suq2();
    const NCPoly a = NCPoly::generator(p, "a"), b = NCPoly::generator(p, "b"),
                 c = NCPoly::generator(p, "c"), d = NCPoly::generator(p, "d");
    const QRat q = QRat::q();
    const NCPoly one(p, 1);
    const NCPoly rels[] = {a * b - q * b * a, a * c - q * c * a, b * c - c * b,
                           b * d - q * d * b, c * d - q * d * c,
                           a * d - d * a - (q - q.inverse()) * b * c,
                           a * d - q * b * c - one, d * a - q.inverse() * b * c - one};
    for (const NCPoly& r : rels)
      if (!normalize(r).is_zero()) return Outcome{false, "relation residual " + r.to_string()};
    const HopfReport h = hopf_axiom_report(suq2_hopf()), hc = hopf_axiom_report(circle_hopf());
    if (!h.ok() || !hc.ok()) return Outcome{false, "Hopf axiom failure"};
    return Outcome{true, std::to_string(words) + " words confluent, 8 relations, " +
                             std::to_string(h.checks + hc.checks) + " Hopf checks"};
  });

  criterion(7, "representation fidelity", 0, [] {
    const int D = 64;
    const RepSpec spec{RepKind::rho_suq2, 0.5, D};
    const Presentation& p = suq2();
    double worst = 0;
    for (int i = 0; i < 200; ++i) {
      const std::string w = testsupport::random_word("abcd", 5);
      TruncOp prod = TruncOp::Identity(D, D);
      for (char ch : w) prod = prod * letter_matrix(spec, *p.find_letter(std::string(1, ch)));
      worst = std::max(worst, corner_max(represent(testsupport::word_poly(p, w), spec) - prod, D - 6));
    }
    std::snprintf(buf, sizeof buf, "max interior residual %.3g over 200 words", worst);
    return Outcome{worst <= 1e-10, buf};
  });

  criterion(8, "elementary matrices", 0, [] {
    const int D = 64;
    double worst = 0;
    for (double q : {0.25, 0.5, 0.75})
      for (int n = 0; n <= 8; ++n)
        for (int m = -n; n + std::abs(m) <= 8; ++m)
          worst = std::max(worst, (elementary_matrix(n, m, q, D) - matrix_unit(n + m, n, D)).cwiseAbs().maxCoeff());
    std::snprintf(buf, sizeof buf, "max error %.3g", worst);
    return Outcome{worst <= 1e-9, buf};
  });

  criterion(9, "E_N internal consistency", 0, [] {
    for (int n = -6; n <= 6; ++n) {
      const ENMatrix e = projection_EN(n);
      if (!(e.gram() == NCPoly(suq2(), 1))) return Outcome{false, "T*T != 1 at N=" + std::to_string(n)};
      for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t k = 0; k < e.size(); ++k) {
          const NCPoly x = e.entry(i, k);
          if (!x.is_zero() && weight(x) != 0) return Outcome{false, "entry weight at N=" + std::to_string(n)};
        }
    }
    return Outcome{true, "|N| <= 6 solved exactly, entries of weight 0"};
  });

  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
