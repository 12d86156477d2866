#include "qhopf/oprep.hpp"

#include <cmath>
#include <cstdio>

#include "qhopf/errors.hpp"

namespace qhopf {

namespace {

double w_one(int, double) { return 1.0; }
double w_lower(int n, double q) { return std::sqrt(1.0 - std::pow(q, 2 * n)); }
double w_raise(int n, double q) { return std::sqrt(1.0 - std::pow(q, 2 * (n + 1))); }
double w_qn(int n, double q) { return std::pow(q, n); }
double w_b(int n, double q) { return -std::pow(q, n + 1); }
double w_q2n(int n, double q) { return std::pow(q, 2 * n); }
double w_B(int n, double q) { return std::pow(q, n) * w_lower(n, q); }
double w_Bs(int n, double q) { return std::pow(q, n + 1) * w_raise(n, q); }

void require_q(double q) {
  if (!(q > 0.0 && q < 1.0)) throw PreconditionError("q must lie in (0, 1)");
}

}  // namespace

const Presentation& rep_presentation(RepKind kind) {
  switch (kind) {
    case RepKind::rho_suq2: return suq2();
    case RepKind::rho_plus_sphere: return sphere();
    case RepKind::mu_disc: return disc();
    case RepKind::mu_disc_ext: return disc_ext();
    case RepKind::shift: return isometry();
  }
  throw PresentationMismatch("unknown representation");
}

RepKind rep_kind_for(const Presentation& p) {
  if (&p == &suq2()) return RepKind::rho_suq2;
  if (&p == &sphere()) return RepKind::rho_plus_sphere;
  if (&p == &disc()) return RepKind::mu_disc;
  if (&p == &disc_ext()) return RepKind::mu_disc_ext;
  if (&p == &isometry()) return RepKind::shift;
  throw PresentationMismatch("no l2(N) representation for " + p.name());
}

RepKind rep_kind_from_name(std::string_view name) {
  if (name == "rho_suq2") return RepKind::rho_suq2;
  if (name == "rho_plus_sphere") return RepKind::rho_plus_sphere;
  if (name == "mu_disc") return RepKind::mu_disc;
  if (name == "mu_disc_ext") return RepKind::mu_disc_ext;
  if (name == "shift") return RepKind::shift;
  throw PresentationMismatch("unknown representation '" + std::string(name) + "'");
}

std::string_view rep_kind_name(RepKind kind) {
  switch (kind) {
    case RepKind::rho_suq2: return "rho_suq2";
    case RepKind::rho_plus_sphere: return "rho_plus_sphere";
    case RepKind::mu_disc: return "mu_disc";
    case RepKind::mu_disc_ext: return "mu_disc_ext";
    case RepKind::shift: return "shift";
  }
  return "?";
}

WeightedShift letter_action(RepKind kind, Letter l) {
  const std::string& name = rep_presentation(kind).letter(l).name;
  switch (kind) {
    case RepKind::rho_suq2:
      if (name == "a") return {-1, w_lower};
      if (name == "b") return {0, w_b};
      if (name == "c") return {0, w_qn};
      return {+1, w_raise};
    case RepKind::rho_plus_sphere:
      if (name == "A") return {0, w_q2n};
      if (name == "B") return {-1, w_B};
      return {+1, w_Bs};
    case RepKind::mu_disc:
    case RepKind::mu_disc_ext:
      if (name == "z") return {+1, w_raise};
      if (name == "z'") return {-1, w_lower};
      return {0, w_qn};
    case RepKind::shift:
      if (name == "S") return {+1, w_one};
      return {-1, w_one};
  }
  throw PresentationMismatch("unknown letter");
}

TruncOp letter_matrix(const RepSpec& spec, Letter l) {
  require_q(spec.q);
  const WeightedShift ws = letter_action(spec.kind, l);
  TruncOp m = TruncOp::Zero(spec.dim, spec.dim);
  for (int n = 0; n < spec.dim; ++n) {
    const int target = n + ws.offset;
    if (target >= 0 && target < spec.dim) m(target, n) = ws.weight(n, spec.q);
  }
  return m;
}

TruncOp represent(const NCPoly& x, const RepSpec& spec) {
  require_q(spec.q);
  if (spec.dim < 1) throw DimensionTooSmall("dimension must be positive");
  require_same(x.presentation(), rep_presentation(spec.kind));
  const NCPoly n = normalize(x);
  const int dim = spec.dim;
  std::vector<WeightedShift> actions;
  for (Letter l = 0; l < n.presentation().size(); ++l) actions.push_back(letter_action(spec.kind, l));
  TruncOp out = TruncOp::Zero(dim, dim);
  for (const auto& [w, c] : n.terms()) {
    const double coeff = c.evaluate(spec.q);
    for (int col = 0; col < dim; ++col) {
      int idx = col;
      double val = coeff;
      for (auto it = w.rbegin(); it != w.rend() && val != 0.0; ++it) {
        const WeightedShift& ws = actions[*it];
        val *= ws.weight(idx, spec.q);
        idx += ws.offset;
        if (idx < 0 || idx >= dim) val = 0.0;
      }
      if (val != 0.0) out(idx, col) += val;
    }
  }
  return out;
}

NCPoly symbol(const NCPoly& x) {
  const Presentation& p = x.presentation();
  if (&p != &disc() && &p != &disc_ext() && &p != &isometry())
    throw PresentationMismatch("symbol is defined on disc, discext and isometry, not " + p.name());
  const Presentation& l = laurent();
  std::vector<NCPoly> images;
  for (const LetterInfo& info : p.letters()) {
    if (info.name == "z" || info.name == "S")
      images.push_back(NCPoly::generator(l, "u"));
    else if (info.name == "z'" || info.name == "S'")
      images.push_back(NCPoly::generator(l, "u'"));
    else
      images.push_back(NCPoly(l));
  }
  return substitute(x, l, images);
}

TruncOp matrix_unit(int row, int col, int dim) {
  TruncOp m = TruncOp::Zero(dim, dim);
  m(row, col) = 1.0;
  return m;
}

TruncOp elementary_matrix(int n, int m, double q, int dim) {
  require_q(q);
  if (n < 0 || n + m < 0) throw PreconditionError("elementary_matrix needs n >= 0 and n + m >= 0");
  const int k = std::abs(m);
  if (dim <= n + k)
    throw DimensionTooSmall("dimension " + std::to_string(dim) + " must exceed n + |m| = " +
                            std::to_string(n + k));
  const Presentation& de = disc_ext();
  const RepSpec spec{RepKind::mu_disc_ext, q, dim};
  const NCPoly z = NCPoly::generator(de, "z");
  const NCPoly zs = NCPoly::generator(de, "z'");
  // y = 1 - z z* normalizes to s^2, so its image is diag(q^{2j}) to rounding.
  const Eigen::VectorXd y = represent(NCPoly(de, QRat(1)) - z * zs, spec).diagonal();

  auto chi = [&](int j) {
    const double target = std::pow(q, 2 * j);
    Eigen::VectorXd d = Eigen::VectorXd::Zero(dim);
    for (int i = 0; i < dim; ++i)
      if (std::abs(y(i) - target) <= 1e-6 * target) d(i) = 1.0;
    return d;
  };
  Eigen::VectorXd inv_abs = Eigen::VectorXd::Ones(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 1; j <= k; ++j) inv_abs(i) /= std::sqrt(1.0 - std::pow(q, 2 * j) * y(i));

  if (m >= 0) {
    const TruncOp zm = represent(z.pow(static_cast<unsigned>(k)), spec);
    return zm * inv_abs.asDiagonal() * chi(n).asDiagonal();
  }
  const TruncOp zsk = represent(zs.pow(static_cast<unsigned>(k)), spec);
  return chi(n - k).asDiagonal() * (inv_abs.asDiagonal() * zsk);
}

double trace(const TruncOp& t) { return t.trace(); }

double norm(const TruncOp& t) {
  if (t.size() == 0) return 0.0;
  Eigen::JacobiSVD<TruncOp> svd(t);
  return svd.singularValues()(0);
}

double corner_max(const TruncOp& t, int corner) {
  if (corner <= 0) return 0.0;
  return t.topLeftCorner(corner, corner).cwiseAbs().maxCoeff();
}

std::string dump_matrix(const TruncOp& t) {
  std::string out;
  char buf[40];
  for (Eigen::Index i = 0; i < t.rows(); ++i) {
    for (Eigen::Index j = 0; j < t.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", t(i, j));
      if (j) out += ' ';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace qhopf
