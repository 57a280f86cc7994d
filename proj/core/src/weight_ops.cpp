#include "qgr/weight_ops.hpp"

#include <map>
#include <stdexcept>

namespace qgr {

namespace {

struct Vars {
    VarTablePtr table;
    std::vector<std::size_t> z;
    std::size_t kp, p1, p2;
};

Vars weight_vars(int n) {
    Vars v;
    v.table = weight_table(n);
    for (int i = 1; i <= n; ++i) v.z.push_back(v.table->index("z" + std::to_string(i)));
    v.kp = v.table->index("kp");
    v.p1 = v.table->index("p1");
    v.p2 = v.table->index("p2");
    return v;
}

// sparse vector in the weight-space basis, keyed by I_1 bitmask (bit i-1)
using SparseVec = std::map<std::uint32_t, LaurentPoly>;

void accumulate(SparseVec& v, std::uint32_t key, const LaurentPoly& c) {
    auto it = v.find(key);
    if (it == v.end()) {
        if (!c.is_zero()) v.emplace(key, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) v.erase(it);
    }
}

std::uint32_t mask_of(const IndexSet& I) {
    std::uint32_t m = 0;
    for (int i : I.first) m |= 1u << (i - 1);
    return m;
}

// R(u)^{(i,j)} action on the sparse vector; slots are 1-based. Bit set means
// the slot carries v_1.
SparseVec apply_r(const SparseVec& v, const LaurentPoly& u, int i, int j) {
    SparseVec out;
    const std::uint32_t bi = 1u << (i - 1), bj = 1u << (j - 1);
    for (const auto& [key, c] : v) {
        bool one_i = key & bi, one_j = key & bj;
        if (one_i == one_j) {
            accumulate(out, key, c);
        } else if (one_i && !one_j) {
            // v1 ⊗ v2 -> u * same + swapped
            accumulate(out, key, c * u);
            accumulate(out, (key & ~bi) | bj, c);
        } else {
            // v2 ⊗ v1 -> swapped
            accumulate(out, (key & ~bj) | bi, c);
        }
    }
    return out;
}

SparseVec apply_p(const SparseVec& v, const Vars& w, int slot) {
    SparseVec out;
    const std::uint32_t b = 1u << (slot - 1);
    LaurentPoly p1 = LaurentPoly::variable(w.table, w.p1);
    LaurentPoly p2 = LaurentPoly::variable(w.table, w.p2);
    for (const auto& [key, c] : v) accumulate(out, key, c * ((key & b) ? p1 : p2));
    return out;
}

LaurentPoly zdiff(const Vars& w, int a, int b, bool plus_kappa) {
    LaurentPoly r = LaurentPoly::variable(w.table, w.z[a - 1]) -
                    LaurentPoly::variable(w.table, w.z[b - 1]);
    if (plus_kappa) r = r + LaurentPoly::variable(w.table, w.kp);
    return r;
}

SparseVec apply_qkz_factors(const SparseVec& start, const Vars& w, int n, int a) {
    SparseVec v = start;
    for (int b = a + 1; b <= n; ++b) v = apply_r(v, zdiff(w, a, b, false), a, b);
    v = apply_p(v, w, a);
    for (int b = 1; b < a; ++b) v = apply_r(v, zdiff(w, a, b, true), a, b);
    return v;
}

OperatorMatrix from_columns(int k, int n, const Vars& w,
                            const std::vector<SparseVec>& cols,
                            const std::vector<IndexSet>& basis) {
    OperatorMatrix m;
    m.k = k;
    m.n = n;
    m.table = w.table;
    m.mat = Matrix<LaurentPoly>(basis.size(), basis.size(), LaurentPoly::zero(w.table));
    std::map<std::uint32_t, std::size_t> row_of;
    for (std::size_t r = 0; r < basis.size(); ++r) row_of[mask_of(basis[r])] = r;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (const auto& [key, val] : cols[c]) {
            auto it = row_of.find(key);
            if (it == row_of.end()) throw std::logic_error("operator leaves the weight space");
            m.mat.at(it->second, c) = val;
        }
    }
    return m;
}

}  // namespace

Matrix<LaurentPoly> r_matrix(const LaurentPoly& u) {
    const auto& table = u.table();
    LaurentPoly zero = LaurentPoly::zero(table);
    LaurentPoly one = LaurentPoly::constant(table, Rat(1));
    Matrix<LaurentPoly> m(4, 4, zero);
    m.at(0, 0) = one;
    m.at(1, 1) = u;
    m.at(1, 2) = one;
    m.at(2, 1) = one;
    m.at(3, 3) = one;
    return m;
}

OperatorMatrix qkz_operator(int n, int k, int a) {
    if (a < 1 || a > n || k < 0 || k > n || n < 1 || n > 12)
        throw std::invalid_argument("qkz_operator: bad range");
    Vars w = weight_vars(n);
    auto basis = enumerate_index_sets(k, n);
    std::vector<SparseVec> cols;
    for (const auto& I : basis) {
        SparseVec v;
        v.emplace(mask_of(I), LaurentPoly::constant(w.table, Rat(1)));
        cols.push_back(apply_qkz_factors(v, w, n, a));
    }
    return from_columns(k, n, w, cols, basis);
}

OperatorMatrix qkz_operator_via_full(int n, int k, int a) {
    if (n > 12) throw std::invalid_argument("qkz_operator_via_full: n too large");
    Vars w = weight_vars(n);
    // run every basis vector of the full tensor space through the factors,
    // then check weight blocks are preserved and cut out the (k, n-k) block
    auto basis = enumerate_index_sets(k, n);
    std::vector<SparseVec> cols(basis.size());
    for (std::uint32_t key = 0; key < (1u << n); ++key) {
        SparseVec v;
        v.emplace(key, LaurentPoly::constant(w.table, Rat(1)));
        SparseVec img = apply_qkz_factors(v, w, n, a);
        int weight = __builtin_popcount(key);
        for (const auto& [okey, val] : img)
            if (__builtin_popcount(okey) != weight)
                throw std::logic_error("qKZ operator broke the weight decomposition");
        if (weight == k) {
            // locate the column
            IndexSet I{k, n, {}};
            for (int i = 1; i <= n; ++i)
                if (key & (1u << (i - 1))) I.first.push_back(i);
            cols[index_position(I)] = img;
        }
    }
    return from_columns(k, n, w, cols, basis);
}

OperatorMatrix dynamical_operator(int n, int k, int i) {
    if (i != 1 && i != 2) throw std::invalid_argument("dynamical_operator: i must be 1 or 2");
    if (k < 0 || k > n || n < 1 || n > 12)
        throw std::invalid_argument("dynamical_operator: bad range");
    Vars w = weight_vars(n);
    auto basis = enumerate_index_sets(k, n);
    LaurentPoly q_ratio = LaurentPoly::variable(w.table, w.p2) *
                          LaurentPoly::variable(w.table, w.p1, -1);
    std::vector<SparseVec> cols;
    for (const auto& I : basis) {
        SparseVec v;
        std::uint32_t key = mask_of(I);
        // diagonal part: sum of z_a over slots holding v_1 (i = 1) or v_2
        LaurentPoly diag = LaurentPoly::zero(w.table);
        for (int s = 1; s <= n; ++s) {
            bool one = key & (1u << (s - 1));
            if ((i == 1) == one) diag = diag + LaurentPoly::variable(w.table, w.z[s - 1]);
        }
        accumulate(v, key, diag);
        if (i == 1) {
            // + Q^{a,a-1}_{1,2} for a = 2..n, + (p2/p1) Q^{1,n}_{1,2}
            for (int a = 2; a <= n; ++a)
                if ((key & (1u << (a - 1))) && !(key & (1u << (a - 2))))
                    accumulate(v, (key & ~(1u << (a - 1))) | (1u << (a - 2)),
                               LaurentPoly::constant(w.table, Rat(1)));
            if ((key & 1u) && !(key & (1u << (n - 1))))
                accumulate(v, (key & ~1u) | (1u << (n - 1)), q_ratio);
        } else {
            // - Q^{a,a+1}_{2,1} for a = 1..n-1, - (p2/p1) Q^{n,1}_{2,1}
            for (int a = 1; a < n; ++a)
                if (!(key & (1u << (a - 1))) && (key & (1u << a)))
                    accumulate(v, (key | (1u << (a - 1))) & ~(1u << a),
                               LaurentPoly::constant(w.table, Rat(-1)));
            if (!(key & (1u << (n - 1))) && (key & 1u))
                accumulate(v, (key | (1u << (n - 1))) & ~1u, -q_ratio);
        }
        cols.push_back(v);
    }
    return from_columns(k, n, w, cols, basis);
}

std::vector<int> satake_theta(int k, int n) {
    // lexicographic k-subsets of {1..n} and lexicographic I_1 agree position
    // by position, so the identification is the identity relabeling
    std::vector<int> map(binomial(n, k));
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = static_cast<int>(i);
    return map;
}

OperatorMatrix exterior_power_matrix(const OperatorMatrix& m, int k, ExteriorMode mode) {
    if (m.k != 1) throw std::invalid_argument("exterior_power_matrix: expects a level-1 operator");
    OperatorMatrix out;
    out.k = k;
    out.n = m.n;
    out.table = m.table;
    LaurentPoly zero = LaurentPoly::zero(m.table);
    out.mat = (mode == ExteriorMode::Multiplicative) ? exterior_minors(m.mat, k, zero)
                                                     : exterior_derivation(m.mat, k, zero);
    return out;
}

OperatorMatrix shift_z(const OperatorMatrix& m, int a) {
    OperatorMatrix out = m;
    std::size_t zi = m.table->index("z" + std::to_string(a));
    std::size_t kp = m.table->index("kp");
    LaurentPoly repl = LaurentPoly::variable(m.table, zi) + LaurentPoly::variable(m.table, kp);
    for (std::size_t r = 0; r < m.mat.rows(); ++r)
        for (std::size_t c = 0; c < m.mat.cols(); ++c)
            out.mat.at(r, c) = m.mat.at(r, c).substitute(zi, repl);
    return out;
}

OperatorMatrix negate_p1(const OperatorMatrix& m) {
    OperatorMatrix out = m;
    std::size_t p1 = m.table->index("p1");
    for (std::size_t r = 0; r < m.mat.rows(); ++r)
        for (std::size_t c = 0; c < m.mat.cols(); ++c) {
            LaurentPoly e = LaurentPoly::zero(m.table);
            for (const auto& [exps, coeff] : m.mat.at(r, c).terms()) {
                Rat cc = coeff;
                if (exps[p1] % 2 != 0) cc = -cc;
                e.add_term(exps, cc);
            }
            out.mat.at(r, c) = e;
        }
    return out;
}

Report verify_compatibility(int n, int k) {
    Report rep;
    rep.suite = "compatibility(" + std::to_string(k) + "," + std::to_string(n) + ")";
    Vars w = weight_vars(n);
    std::vector<OperatorMatrix> K(n + 1);
    for (int a = 1; a <= n; ++a) K[a] = qkz_operator(n, k, a);
    OperatorMatrix X1 = dynamical_operator(n, k, 1);
    OperatorMatrix X2 = dynamical_operator(n, k, 2);

    // discrete flatness: K_a(z + kappa e_b) K_b(z) = K_b(z + kappa e_a) K_a(z)
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            bool ok = shift_z(K[a], b).mat * K[b].mat == shift_z(K[b], a).mat * K[a].mat;
            rep.add("qkz-flatness a=" + std::to_string(a) + " b=" + std::to_string(b),
                    "qkz-discrete-flatness", ok);
        }

    // [X_i, X_j] = kappa p_i d/dp_i X_j - kappa p_j d/dp_j X_i
    auto euler_p = [&](const OperatorMatrix& m, std::size_t p) {
        OperatorMatrix out = m;
        LaurentPoly kp = LaurentPoly::variable(w.table, w.kp);
        for (std::size_t r = 0; r < m.mat.rows(); ++r)
            for (std::size_t c = 0; c < m.mat.cols(); ++c)
                out.mat.at(r, c) = m.mat.at(r, c).euler(p) * kp;
        return out;
    };
    {
        auto comm = X1.mat * X2.mat - X2.mat * X1.mat;
        auto rhs = euler_p(X2, w.p1).mat - euler_p(X1, w.p2).mat;
        rep.add("dyn-commutator", "dynamical-commutation", comm == rhs);
    }

    // kappa p_i d/dp_i K_a = X_i(z + kappa e_a) K_a - K_a X_i
    for (int a = 1; a <= n; ++a)
        for (int i = 1; i <= 2; ++i) {
            const OperatorMatrix& Xi = (i == 1) ? X1 : X2;
            auto lhs = euler_p(K[a], (i == 1) ? w.p1 : w.p2).mat;
            auto rhs = shift_z(Xi, a).mat * K[a].mat - K[a].mat * Xi.mat;
            rep.add("dyn-qkz a=" + std::to_string(a) + " i=" + std::to_string(i),
                    "dynamical-qkz-compatibility", lhs == rhs);
        }
    return rep;
}

Report verify_satake_gauge(int n, int k) {
    Report rep;
    rep.suite = "satake-gauge(" + std::to_string(k) + "," + std::to_string(n) + ")";
    Vars w = weight_vars(n);
    LaurentPoly p2pow = LaurentPoly::variable(w.table, w.p2, k - 1);

    for (int a = 1; a <= n; ++a) {
        OperatorMatrix K1 = qkz_operator(n, 1, a);
        if (k % 2 == 0) K1 = negate_p1(K1);  // K_a[z; (-1)^{k-1} p1, p2]
        auto lhs = exterior_power_matrix(K1, k, ExteriorMode::Multiplicative).mat;
        auto rhs = qkz_operator(n, k, a).mat.scale(p2pow);
        rep.add("qkz-exterior a=" + std::to_string(a), "satake-qkz-gauge", lhs == rhs);
    }
    for (int i = 1; i <= 2; ++i) {
        OperatorMatrix X = dynamical_operator(n, 1, i);
        if (k % 2 == 0) X = negate_p1(X);
        auto lhs = exterior_power_matrix(X, k, ExteriorMode::Derivation).mat;
        auto rhs = dynamical_operator(n, k, i).mat;
        if (i == 2) {
            // X~_2 = (X_2 + (k-1) sum z_a) via theta
            LaurentPoly sz = LaurentPoly::zero(w.table);
            for (auto zi : w.z) sz = sz + LaurentPoly::variable(w.table, zi);
            auto id = Matrix<LaurentPoly>::identity(rhs.rows(), LaurentPoly::zero(w.table),
                                                    LaurentPoly::constant(w.table, Rat(1)));
            rhs = rhs + id.scale(sz * Rat(k - 1));
        }
        rep.add("dyn-exterior i=" + std::to_string(i), "satake-dynamical-gauge", lhs == rhs);
    }
    return rep;
}

}  // namespace qgr
