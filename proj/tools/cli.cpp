#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qhopf/errors.hpp"
#include "qhopf/expr.hpp"
#include "qhopf/hopf.hpp"
#include "qhopf/kconn.hpp"
#include "qhopf/oprep.hpp"
#include "qhopf/pullback.hpp"

namespace qhopf::cli {

namespace {

using nlohmann::json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Config {
  std::string algebra = "suq2";
  std::string q_text = "1/2";
  mpq_class q_exact;
  double q = 0.5;
  int dim = 64;
  double tol = 1e-6;
  bool json = false;
  int range = 8;
  std::string dump;
};

// Accepts "3/4", "0.75" or "1".
mpq_class parse_rational(const std::string& s) {
  mpq_class r;
  const auto dot = s.find('.');
  try {
    if (dot == std::string::npos) {
      r = mpq_class(s, 10);
    } else {
      const std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
      if (frac.find_first_not_of("0123456789") != std::string::npos || frac.empty())
        throw std::invalid_argument(s);
      mpz_class den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
      const bool neg = !whole.empty() && whole[0] == '-';
      mpz_class w(whole.empty() || whole == "-" ? "0" : whole, 10);
      mpz_class f(frac, 10);
      r = mpq_class(abs(w) * den + f, den);
      if (neg) r = -r;
    }
  } catch (const std::invalid_argument&) {
    throw UsageError("cannot read '" + s + "' as a rational number");
  }
  r.canonicalize();
  return r;
}

void finish_config(Config& c) {
  c.q_exact = parse_rational(c.q_text);
  c.q = c.q_exact.get_d();
  if (!(c.q > 0.0 && c.q < 1.0)) throw UsageError("--q must lie strictly between 0 and 1");
  if (c.dim < 4) throw UsageError("--dim must be at least 4");
  if (c.range < 1) throw UsageError("--range must be at least 1");
}

std::string fmt(double x) {
  std::ostringstream s;
  s << std::setprecision(15) << x;
  return s.str();
}

void write_dump(const Config& c, const TruncOp& m) {
  if (c.dump.empty()) return;
  std::ofstream f(c.dump);
  if (!f) throw UsageError("cannot write " + c.dump);
  f << dump_matrix(m);
}

std::uint64_t seed_from_env() {
  const char* s = std::getenv("QHOPF_SEED");
  if (!s || !*s) return 1;
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw UsageError("QHOPF_SEED must be an unsigned integer");
  }
}

struct Ctx {
  Config cfg;
  std::ostream& out;
  std::ostream& err;
  const Presentation& pres() const { return presentation_by_name(cfg.algebra); }
  void emit(const json& j, const std::string& text) const {
    if (cfg.json)
      out << j.dump(2) << "\n";
    else
      out << text << "\n";
  }
};

int cmd_normalize(const Ctx& c, const std::string& src) {
  const NCPoly x = parse_poly(src, c.pres());
  c.emit({{"algebra", c.cfg.algebra}, {"input", src}, {"normal_form", x.to_string()}}, x.to_string());
  return 0;
}

int cmd_weight(const Ctx& c, const std::string& src) {
  const auto w = weight(parse_poly(src, c.pres()));
  json j{{"algebra", c.cfg.algebra}, {"input", src}};
  j["weight"] = w ? json(*w) : json(nullptr);
  c.emit(j, w ? std::to_string(*w) : "non-homogeneous");
  return 0;
}

int cmd_star(const Ctx& c, const std::string& src) {
  const NCPoly x = star(parse_poly(src, c.pres()));
  c.emit({{"algebra", c.cfg.algebra}, {"input", src}, {"star", x.to_string()}}, x.to_string());
  return 0;
}

int cmd_hopf_check(const Ctx& c) {
  const HopfReport r = hopf_axiom_report(hopf_for(c.pres()));
  json fails = json::array();
  std::string text = "hopf " + r.algebra + ": " + std::to_string(r.checks) + " checks, " +
                     std::to_string(r.failures.size()) + " failures";
  for (const AxiomFailure& f : r.failures) {
    fails.push_back({{"axiom", f.axiom}, {"witness", f.witness}, {"residual", f.residual}});
    text += "\n  " + f.axiom + " on " + f.witness + ": " + f.residual;
  }
  c.emit({{"algebra", r.algebra}, {"checks", r.checks}, {"ok", r.ok()}, {"failures", fails}}, text);
  return r.ok() ? 0 : 1;
}

int cmd_rep(const Ctx& c, const std::string& src, const std::string& kind_name) {
  const RepKind kind = kind_name.empty() ? rep_kind_for(c.pres()) : rep_kind_from_name(kind_name);
  const NCPoly x = parse_poly(src, rep_presentation(kind));
  const TruncOp m = represent(x, {kind, c.cfg.q, c.cfg.dim});
  write_dump(c.cfg, m);
  const double tr = trace(m), nm = norm(m), mx = m.cwiseAbs().maxCoeff();
  c.emit({{"kind", rep_kind_name(kind)},
          {"dim", c.cfg.dim},
          {"q", c.cfg.q},
          {"trace", tr},
          {"norm", nm},
          {"max_abs_entry", mx}},
         std::string(rep_kind_name(kind)) + " dim " + std::to_string(c.cfg.dim) + " q " +
             fmt(c.cfg.q) + ": trace " + fmt(tr) + ", norm " + fmt(nm) + ", max |entry| " + fmt(mx));
  return 0;
}

int cmd_symbol(const Ctx& c, const std::string& src) {
  const NCPoly s = symbol(parse_poly(src, c.pres()));
  c.emit({{"algebra", c.cfg.algebra}, {"input", src}, {"symbol", s.to_string()}}, s.to_string());
  return 0;
}

int cmd_elem(const Ctx& c, int n, int m) {
  const TruncOp e = elementary_matrix(n, m, c.cfg.q, c.cfg.dim);
  write_dump(c.cfg, e);
  const double error = (e - matrix_unit(n + m, n, c.cfg.dim)).cwiseAbs().maxCoeff();
  const bool ok = error <= c.cfg.tol;
  c.emit({{"n", n}, {"m", m}, {"q", c.cfg.q}, {"dim", c.cfg.dim}, {"max_error", error}, {"ok", ok}},
         "E(" + std::to_string(n + m) + "," + std::to_string(n) + ") max error " + fmt(error) +
             (ok ? "" : " exceeds tolerance"));
  return ok ? 0 : 1;
}

int cmd_fibre(const Ctx& c, const std::string& src, int degree) {
  const Presentation& su = suq2();
  json j;
  std::string text;
  bool ok = true;
  if (!src.empty()) {
    const NCPoly x = parse_poly(src, su);
    const FibreElement y = embed_iota(x);
    validate_fibre(y);
    json weights = json::array();
    for (int n : y.support()) weights.push_back(n);
    j = {{"input", src}, {"image", to_json(y)}, {"weights", weights}};
    text = "iota(" + x.to_string() + ") = " + y.to_string();
    for (int n : y.support()) text += "\n  component in L_" + std::to_string(n);
  } else {
    json images = json::object();
    for (const char* g : {"a", "b", "c", "d"}) {
      const FibreElement y = embed_iota(NCPoly::generator(su, g));
      validate_fibre(y);
      images[g] = to_json(y);
      text += std::string("iota(") + g + ") = " + y.to_string() + "\n";
    }
    json rels = json::array();
    for (const Rule& r : su.rules()) {
      NCPoly rhs(su);
      for (const auto& [w, k] : r.rhs) rhs.add_term(w, k);
      const bool hom = embed_iota(NCPoly::monomial(su, r.lhs)) == embed_iota(rhs);
      ok = ok && hom;
      rels.push_back({{"relation", su.word_text(r.lhs)}, {"holds", hom}});
      text += "relation " + su.word_text(r.lhs) + (hom ? ": ok\n" : ": FAILS\n");
    }
    bool star_ok = true;
    for (const char* g : {"a", "b", "c", "d"}) {
      const NCPoly x = NCPoly::generator(su, g);
      star_ok = star_ok && embed_iota(star(x)) == star(embed_iota(x));
    }
    ok = ok && star_ok;
    const InjectivityResult inj = iota_pbw_rank(degree, c.cfg.q_exact);
    ok = ok && inj.rank == inj.words;
    text += std::string("star compatible: ") + (star_ok ? "yes" : "no") + "\n";
    text += "PBW words of degree <= " + std::to_string(degree) + ": " + std::to_string(inj.words) +
            ", rank of images at q=" + c.cfg.q_exact.get_str() + ": " + std::to_string(inj.rank);
    j = {{"images", images},
         {"relations", rels},
         {"star_compatible", star_ok},
         {"injectivity", {{"degree", degree}, {"words", inj.words}, {"rank", inj.rank}}},
         {"ok", ok}};
  }
  c.emit(j, text);
  return ok ? 0 : 1;
}

StrongConn connection_by_name(const std::string& name) {
  if (name == "explicit") return explicit_connection();
  if (name == "combined")
    return combine_connections(trivial_toeplitz_connection(), trivial_circle_connection(),
                               toeplitz_lifts());
  if (name == "trivial-circle") return trivial_circle_connection();
  if (name == "trivial-toeplitz") return trivial_toeplitz_connection();
  throw UsageError("unknown connection '" + name + "'");
}

std::string report_text(const ConnReport& r) {
  std::string text = "connection " + r.connection + ", |N| <= " + std::to_string(r.range) + ": " +
                     std::to_string(r.checks.size()) + " checks, " +
                     std::to_string(r.failures().size()) + " failures";
  for (const ConnCheck& f : r.failures())
    text += "\n  " + f.family + " N=" + std::to_string(f.n) + ": " + f.residual;
  return text;
}

int cmd_conn_check(const Ctx& c, const std::string& name) {
  const ConnReport r = check_strong_connection(connection_by_name(name), c.cfg.range);
  c.emit(to_json(r), report_text(r));
  return r.ok() ? 0 : 1;
}

int cmd_conn_combine(const Ctx& c) {
  const StrongConn l = connection_by_name("combined");
  const StrongConn e = explicit_connection();
  const ConnReport r = check_strong_connection(l, c.cfg.range);
  bool agree = true;
  json values = json::array();
  std::string text;
  for (int n = -c.cfg.range; n <= c.cfg.range; ++n) {
    const bool same = connections_agree(l, e, n);
    agree = agree && same;
    const std::string v = conn_value_text(l(n));
    values.push_back({{"N", n}, {"value", v}, {"agrees_with_explicit", same}});
    text += "l(v^" + std::to_string(n) + ") = " + v + (same ? "" : "  [differs from explicit]") + "\n";
  }
  text += report_text(r);
  c.emit({{"values", values}, {"report", to_json(r)}, {"agrees_with_explicit", agree}}, text);
  return r.ok() && agree ? 0 : 1;
}

PolyMatrix read_poly_matrix(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) throw UsageError(std::string("matrix file needs \"") + key + "\"");
  PolyMatrix m;
  for (const json& row : j[key]) {
    std::vector<NCPoly> r;
    for (const json& e : row) r.push_back(parse_poly(e.get<std::string>(), isometry()));
    m.push_back(std::move(r));
  }
  return m;
}

int cmd_bass(const Ctx& c, const std::optional<int>& n, const std::string& file) {
  if (n.has_value() == !file.empty()) throw UsageError("bass needs exactly one of --N or --matrix");
  const Presentation& p = isometry();
  FibreMatrix b(p, 0, 0);
  json j;
  std::string text;
  bool ok = true;
  if (n) {
    const int k = std::abs(*n);
    const NCPoly S = NCPoly::generator(p, "S").pow(k), Sp = NCPoly::generator(p, "S'").pow(k);
    b = *n >= 0 ? bass_idempotent(S, Sp) : bass_idempotent(Sp, S);
    FibreMatrix expected = projection_pN(-*n);
    if (expected.rows() == 1) expected = direct_sum(expected, FibreMatrix(p, 1, 1));
    const bool same = b == expected;
    ok = same;
    j = {{"N", *n}, {"matrix", to_json(b)}, {"equals_pN", same}, {"pN", -*n}};
    text = b.to_string() + "\nequals p_" + std::to_string(-*n) + ": " + (same ? "yes" : "no");
  } else {
    std::ifstream f(file);
    if (!f) throw UsageError("cannot read " + file);
    json in;
    try {
      in = json::parse(f);
    } catch (const json::exception& e) {
      throw UsageError(std::string("bad matrix file: ") + e.what());
    }
    b = bass_idempotent(read_poly_matrix(in, "c"), read_poly_matrix(in, "d"));
    j = {{"matrix", to_json(b)}};
    text = b.to_string();
  }
  j["idempotent"] = true;
  c.emit(j, text + "\nidempotent: yes");
  return ok ? 0 : 1;
}

int cmd_proj(const Ctx& c, const std::optional<int>& pn, const std::optional<int>& en) {
  if (pn.has_value() == en.has_value()) throw UsageError("proj needs exactly one of --pN or --EN");
  if (pn) {
    const FibreMatrix p = projection_pN(*pn);
    const bool idem = p * p == p, sa = star(p) == p;
    c.emit({{"pN", *pn}, {"matrix", to_json(p)}, {"idempotent", idem}, {"self_adjoint", sa}},
           p.to_string() + "\nidempotent: " + (idem ? "yes" : "no") +
               ", self-adjoint: " + (sa ? "yes" : "no"));
    return idem && sa ? 0 : 1;
  }
  const ENMatrix e = projection_EN(*en);
  json lam = json::array(), entries = json::array();
  std::string text = "E_" + std::to_string(*en) + ", lambda^2 =";
  for (std::size_t k = 0; k < e.size(); ++k) {
    lam.push_back(e.lambda_sq[k].to_fraction_string());
    text += " " + e.lambda_sq[k].to_string();
  }
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t k = 0; k < e.size(); ++k) {
      const NCPoly x = e.entry(i, k);
      entries.push_back({{"row", i}, {"col", k}, {"surd_sq", e.tag(i, k).to_fraction_string()},
                         {"poly", x.to_string()}});
      text += "\n  (" + std::to_string(i) + "," + std::to_string(k) + ") sqrt(" +
              e.tag(i, k).to_string() + ") * (" + x.to_string() + ")";
    }
  const bool gram = e.gram() == NCPoly(suq2(), QRat(1));
  text += std::string("\nT*T = 1: ") + (gram ? "yes" : "no");
  c.emit({{"EN", *en}, {"lambda_sq", lam}, {"entries", entries}, {"gram_is_one", gram}}, text);
  return gram ? 0 : 1;
}

int cmd_pair(const Ctx& c, const std::string& cls, const std::string& proj) {
  const KHomClass k = khom_class_by_name(cls);
  const auto colon = proj.find(':');
  if (colon == std::string::npos) throw UsageError("--proj must look like pN:k or EN:k");
  const std::string kind = proj.substr(0, colon);
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(proj.substr(colon + 1), &used);
    if (used != proj.size() - colon - 1) throw std::invalid_argument(proj);
  } catch (const std::exception&) {
    throw UsageError("--proj must look like pN:k or EN:k");
  }
  PairingResult r;
  if (kind == "pN")
    r = index_pairing(k, projection_pN(n), c.cfg.q, c.cfg.dim, c.cfg.tol);
  else if (kind == "EN")
    r = index_pairing(k, projection_EN(n), c.cfg.q, c.cfg.dim, c.cfg.tol);
  else
    throw UsageError("--proj must look like pN:k or EN:k");
  c.emit({{"class", cls}, {"proj", proj}, {"q", c.cfg.q}, {"dim", c.cfg.dim}, {"raw", r.raw},
          {"snapped", r.snapped}, {"integral", r.integral}},
         "<[" + cls + "], [" + proj + "]> = " + std::to_string(r.snapped) + " (raw " + fmt(r.raw) +
             ")" + (r.integral ? "" : " not within tolerance of an integer"));
  return r.integral ? 0 : 1;
}

int cmd_confluence(const Ctx& c, int max_len, std::size_t samples) {
  const ConfluenceReport r = check_confluence(c.pres(), max_len, samples, seed_from_env());
  json divs = json::array();
  std::string text = "confluence " + r.presentation + ": " + std::to_string(r.words_checked) +
                     " words, " + std::to_string(r.divergences.size()) + " divergences";
  for (const Divergence& d : r.divergences) {
    divs.push_back({{"word", d.word_text}, {"rule_a", d.rule_a}, {"rule_b", d.rule_b},
                    {"reduct_a", d.reduct_a}, {"reduct_b", d.reduct_b}});
    text += "\n  " + d.word_text + ": " + d.reduct_a + " vs " + d.reduct_b;
  }
  c.emit({{"presentation", r.presentation}, {"words_checked", r.words_checked},
          {"ok", r.ok()}, {"divergences", divs}},
         text);
  return r.ok() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and numeric computations on quantum SU(2), its fibre-product model and K-theory",
               "qhopf"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--algebra", cfg.algebra, "suq2, sphere, disc, discext, circle, isometry, laurent");
  app.add_option("--q", cfg.q_text, "deformation parameter, decimal or fraction");
  app.add_option("--dim", cfg.dim, "truncation dimension D");
  app.add_option("--tol", cfg.tol, "tolerance for numeric checks and integer snapping");
  app.add_flag("--json", cfg.json, "JSON output");
  app.add_option("--range", cfg.range, "range |N| <= R for connection checks");
  app.add_option("--dump", cfg.dump, "write the computed matrix to this path");

  std::string expr, kind, conn = "explicit", cls, proj, matrix_file;
  int n = 0, m = 0, degree = 3, max_len = 6;
  std::size_t samples = 0;
  std::optional<int> bass_n, pn, en;

  auto* normalize_cmd = app.add_subcommand("normalize", "normal form of an expression");
  normalize_cmd->add_option("expr", expr)->required();
  auto* weight_cmd = app.add_subcommand("weight", "U(1)-weight of an expression");
  weight_cmd->add_option("expr", expr)->required();
  auto* star_cmd = app.add_subcommand("star", "adjoint of an expression");
  star_cmd->add_option("expr", expr)->required();
  auto* hopf_cmd = app.add_subcommand("hopf-check", "Hopf axiom report (suq2 or circle)");
  auto* rep_cmd = app.add_subcommand("rep", "truncated operator of an expression");
  rep_cmd->add_option("expr", expr)->required();
  rep_cmd->add_option("--kind", kind, "rho_suq2, rho_plus_sphere, mu_disc, mu_disc_ext, shift");
  auto* symbol_cmd = app.add_subcommand("symbol", "Toeplitz symbol of an expression");
  symbol_cmd->add_option("expr", expr)->required();
  auto* elem_cmd = app.add_subcommand("elem-matrix", "elementary matrix E(n+m, n) vs the matrix unit");
  elem_cmd->add_option("n", n)->required();
  elem_cmd->add_option("m", m)->required();
  auto* fibre_cmd = app.add_subcommand("fibre-check", "embedding of SU_q(2) into the fibre product");
  fibre_cmd->add_option("expr", expr);
  fibre_cmd->add_option("--degree", degree, "PBW degree for the injectivity rank");
  auto* conn_cmd = app.add_subcommand("conn-check", "strong-connection axioms");
  conn_cmd->add_option("--connection", conn, "explicit, combined, trivial-circle, trivial-toeplitz");
  auto* combine_cmd = app.add_subcommand("conn-combine", "glue the leg connections");
  auto* bass_cmd = app.add_subcommand("bass", "Bass idempotent from lifts");
  bass_cmd->add_option("--N", bass_n, "use c = S^N, d = S'^N");
  bass_cmd->add_option("--matrix", matrix_file, "JSON file {\"c\": [[...]], \"d\": [[...]]}");
  auto* proj_cmd = app.add_subcommand("proj", "projections p_N and E_N");
  proj_cmd->add_option("--pN", pn);
  proj_cmd->add_option("--EN", en);
  auto* pair_cmd = app.add_subcommand("pair", "index pairing");
  pair_cmd->add_option("--class", cls, "id-eps or eps-eps0")->required();
  pair_cmd->add_option("--proj", proj, "pN:k or EN:k")->required();
  auto* conf_cmd = app.add_subcommand("confluence", "local confluence of the rewriting rules");
  conf_cmd->add_option("--max-len", max_len, "longest word checked");
  conf_cmd->add_option("--samples", samples, "random words instead of all (0 = exhaustive)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    finish_config(cfg);
    const Ctx c{cfg, out, err};
    if (*normalize_cmd) return cmd_normalize(c, expr);
    if (*weight_cmd) return cmd_weight(c, expr);
    if (*star_cmd) return cmd_star(c, expr);
    if (*hopf_cmd) return cmd_hopf_check(c);
    if (*rep_cmd) return cmd_rep(c, expr, kind);
    if (*symbol_cmd) return cmd_symbol(c, expr);
    if (*elem_cmd) return cmd_elem(c, n, m);
    if (*fibre_cmd) return cmd_fibre(c, expr, degree);
    if (*conn_cmd) return cmd_conn_check(c, conn);
    if (*combine_cmd) return cmd_conn_combine(c);
    if (*bass_cmd) return cmd_bass(c, bass_n, matrix_file);
    if (*proj_cmd) return cmd_proj(c, pn, en);
    if (*pair_cmd) return cmd_pair(c, cls, proj);
    if (*conf_cmd) return cmd_confluence(c, max_len, samples);
  } catch (const IncompatiblePair& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const LiftInversionError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const SingularSystem& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const NonGradedSplitting& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace qhopf::cli
