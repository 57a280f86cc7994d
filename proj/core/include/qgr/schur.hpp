#pragma once

#include "qgr/combinatorics.hpp"
#include "qgr/laurent.hpp"
#include "qgr/matrix.hpp"

namespace qgr {

/// Factorial Schur polynomial s_lambda(x|y) via the ratio of determinants
/// det((x_i|y)^{lambda_j+k-j}) / det((x_i|y)^{k-j}); the division is exact.
/// `xs` and `ys` are variable indices into the table.
LaurentPoly factorial_schur(const Partition& lam, const std::vector<std::size_t>& xs,
                            const std::vector<std::size_t>& ys, const VarTablePtr& table);

/// Divided difference (f - s_a f) / (x_a - x_{a+1}) acting on positions a,
/// a+1 of the listed x-variables (a is 1-based).
LaurentPoly divided_difference(const LaurentPoly& f, int a, const std::vector<std::size_t>& xs);

/// Double Schubert polynomial S_sigma(x;y), built from the staircase product
/// for the longest permutation by divided differences along a reduced word.
LaurentPoly double_schubert(const Perm& sigma, const std::vector<std::size_t>& xs,
                            const std::vector<std::size_t>& ys, const VarTablePtr& table);

/// Demazure divided difference (y_i f - y_{i+1} s_i f) / (y_i - y_{i+1}) in
/// the listed y-variables (i is 1-based).
LaurentPoly demazure(const LaurentPoly& f, int i, const std::vector<std::size_t>& ys);

/// Double Grothendieck polynomial for a partition inside k x (n-k), either
/// by the Demazure recursion from the top class or by the determinantal
/// formula; both routes agree.
enum class GrothendieckRoute { Recursion, Determinant };
LaurentPoly grothendieck(const Partition& lam, int k, int n,
                         const std::vector<std::size_t>& xs,
                         const std::vector<std::size_t>& ys, const VarTablePtr& table,
                         GrothendieckRoute route = GrothendieckRoute::Determinant);

/// Ordinary Schur polynomial s_lambda(x) (factorial with all y = 0).
LaurentPoly schur(const Partition& lam, const std::vector<std::size_t>& xs,
                  const VarTablePtr& table);

}  // namespace qgr
