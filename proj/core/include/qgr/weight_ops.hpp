#pragma once

#include "qgr/combinatorics.hpp"
#include "qgr/laurent.hpp"
#include "qgr/matrix.hpp"
#include "qgr/report.hpp"

namespace qgr {

/// Square matrix over z_1..z_n, kp, p1^{±1}, p2^{±1}, indexed by the
/// lexicographically ordered basis of the (k, n-k) weight space.
struct OperatorMatrix {
    int k = 0, n = 0;
    VarTablePtr table;
    Matrix<LaurentPoly> mat;

    std::size_t size() const { return mat.rows(); }
    std::vector<IndexSet> basis() const { return enumerate_index_sets(k, n); }
};

/// 4x4 matrix of R(u) = P + u e11⊗e22 on (C^2)^{⊗2} in the basis
/// (v1⊗v1, v1⊗v2, v2⊗v1, v2⊗v2).
Matrix<LaurentPoly> r_matrix(const LaurentPoly& u);

/// qKZ operator K_a restricted to the (k, n-k) weight space.
OperatorMatrix qkz_operator(int n, int k, int a);

/// Same operator assembled on the full 2^n tensor space and then cut down;
/// cross-check route for small n.
OperatorMatrix qkz_operator_via_full(int n, int k, int a);

/// Dynamical operator X_i (i = 1, 2) on the (k, n-k) weight space.
OperatorMatrix dynamical_operator(int n, int k, int i);

/// Basis bijection of the k-th Satake identification: position of the wedge
/// v_{[a_1]} ∧ ... ∧ v_{[a_k]} (lexicographic subsets) equals the position
/// of v_I with I_1 = {a_1..a_k}; returns that index map (identity).
std::vector<int> satake_theta(int k, int n);

enum class ExteriorMode { Multiplicative, Derivation };

/// Exterior power of an operator on the (1, n-1) space: matrix of k-minors
/// (multiplicative) or the Leibniz extension (derivation).
OperatorMatrix exterior_power_matrix(const OperatorMatrix& m, int k, ExteriorMode mode);

/// Exact checks of the discrete flatness and the joint-system compatibility
/// for all index pairs at the given (k, n).
Report verify_compatibility(int n, int k);

/// Exact checks that the Satake identification intertwines the exterior
/// powers with the weight-space operators (qKZ and dynamical).
Report verify_satake_gauge(int n, int k);

/// z_a -> z_a + kappa applied entrywise.
OperatorMatrix shift_z(const OperatorMatrix& m, int a);

/// p1 -> -p1 applied entrywise (sign twist used at even exterior levels).
OperatorMatrix negate_p1(const OperatorMatrix& m);

}  // namespace qgr
