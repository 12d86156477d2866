#pragma once

// Truncated representations on l2(N), spanned by e_0 ... e_{D-1}, at a
// numeric q in (0, 1).

#include <Eigen/Dense>

#include <string>
#include <string_view>

#include "qhopf/ncpoly.hpp"

namespace qhopf {

using TruncOp = Eigen::MatrixXd;

enum class RepKind { rho_suq2, rho_plus_sphere, mu_disc, mu_disc_ext, shift };

struct RepSpec {
  RepKind kind;
  double q;
  int dim;
};

/// The algebra a representation is defined on.
const Presentation& rep_presentation(RepKind kind);
RepKind rep_kind_for(const Presentation& p);
RepKind rep_kind_from_name(std::string_view name);
std::string_view rep_kind_name(RepKind kind);

/// Every generator acts as a weighted shift e_n -> weight(n) e_{n + offset}.
struct WeightedShift {
  int offset;
  double (*weight)(int n, double q);
};
WeightedShift letter_action(RepKind kind, Letter l);

/// Truncated matrix of a single generator.
TruncOp letter_matrix(const RepSpec& spec, Letter l);

/// Image of normalize(x): each normal word is applied as a composite
/// weighted shift, so the result equals the product of truncated letter
/// matrices term by term.
TruncOp represent(const NCPoly& x, const RepSpec& spec);

/// Toeplitz symbol into the Laurent algebra: z, S -> u; z', S' -> u^{-1};
/// s -> 0. Accepts disc, discext and isometry elements.
NCPoly symbol(const NCPoly& x);

/// E_{n+m,n} built from y = 1 - z z*, chi_n(y) and |z^m|^{-1}; approximates
/// the matrix unit e_{n+m} e_n^*.
TruncOp elementary_matrix(int n, int m, double q, int dim);
TruncOp matrix_unit(int row, int col, int dim);

double trace(const TruncOp& t);
/// Operator 2-norm (largest singular value).
double norm(const TruncOp& t);
/// Max |entry| on the leading `corner` x `corner` block.
double corner_max(const TruncOp& t, int corner);

/// Row-major dump, 17 significant digits, one row per line.
std::string dump_matrix(const TruncOp& t);

}  // namespace qhopf
