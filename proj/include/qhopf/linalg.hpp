#pragma once

// Exact linear algebra over Q(q) and Q.

#include <gmpxx.h>

#include <vector>

#include "qhopf/qrat.hpp"

namespace qhopf {

using QMatrix = std::vector<std::vector<QRat>>;

/// Solves the (possibly overdetermined) system A x = b exactly. Throws
/// SingularSystem if the solution is not unique or the system is inconsistent.
std::vector<QRat> solve_exact(QMatrix a, std::vector<QRat> b);

/// Rank of a rational matrix by fraction-exact elimination.
std::size_t rank_exact(std::vector<std::vector<mpq_class>> m);

}  // namespace qhopf
