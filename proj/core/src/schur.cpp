#include "qgr/schur.hpp"

#include <stdexcept>

namespace qgr {

namespace {

// (x|y)^p = prod_{a=1..p} (x - y_a)
LaurentPoly falling(const VarTablePtr& table, std::size_t x, const std::vector<std::size_t>& ys,
                    int p) {
    LaurentPoly r = LaurentPoly::constant(table, Rat(1));
    for (int a = 0; a < p; ++a) {
        if (a >= static_cast<int>(ys.size()))
            throw std::invalid_argument("factorial power exceeds y alphabet");
        r = r * (LaurentPoly::variable(table, x) - LaurentPoly::variable(table, ys[a]));
    }
    return r;
}

// K-theoretic bracket (x|y)^p = prod_{a=1..p} (1 - x/y_a)
LaurentPoly kbracket(const VarTablePtr& table, std::size_t x, const std::vector<std::size_t>& ys,
                     int p) {
    LaurentPoly r = LaurentPoly::constant(table, Rat(1));
    for (int a = 0; a < p; ++a) {
        LaurentPoly t = LaurentPoly::constant(table, Rat(1)) -
                        LaurentPoly::variable(table, x) * LaurentPoly::variable(table, ys[a], -1);
        r = r * t;
    }
    return r;
}

LaurentPoly poly_det(Matrix<LaurentPoly> m, const VarTablePtr& table) {
    LaurentPoly zero = LaurentPoly::zero(table);
    if (m.rows() <= 4) return m.det_cofactor(zero);
    LaurentPoly one = LaurentPoly::constant(table, Rat(1));
    return det_bareiss<LaurentPoly>(
        m, one,
        [](const LaurentPoly& a, const LaurentPoly& b) {
            auto q = a.exact_divide(b);
            if (!q) throw std::logic_error("Bareiss division not exact");
            return *q;
        },
        [](const LaurentPoly& p) { return p.is_zero(); });
}

}  // namespace

LaurentPoly factorial_schur(const Partition& lam, const std::vector<std::size_t>& xs,
                            const std::vector<std::size_t>& ys, const VarTablePtr& table) {
    const int k = static_cast<int>(xs.size());
    if (lam.length() > k) throw std::invalid_argument("factorial_schur: too many parts");
    if (k == 0) return LaurentPoly::constant(table, Rat(1));
    LaurentPoly zero = LaurentPoly::zero(table);
    Matrix<LaurentPoly> numm(k, k, zero);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            numm.at(i, j) = falling(table, xs[i], ys, lam.part(j) + k - (j + 1));
    LaurentPoly num = poly_det(numm, table);
    // Vandermonde denominator prod_{i<j}(x_i - x_j)
    LaurentPoly den = LaurentPoly::constant(table, Rat(1));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            den = den * (LaurentPoly::variable(table, xs[i]) - LaurentPoly::variable(table, xs[j]));
    auto q = num.exact_divide(den);
    if (!q) throw std::logic_error("factorial_schur: division not exact");
    return *q;
}

LaurentPoly divided_difference(const LaurentPoly& f, int a, const std::vector<std::size_t>& xs) {
    if (a < 1 || a >= static_cast<int>(xs.size()))
        throw std::invalid_argument("divided_difference: bad position");
    std::vector<std::size_t> vars{xs[a - 1], xs[a]};
    std::vector<std::size_t> images{xs[a], xs[a - 1]};
    LaurentPoly swapped = f.permute_vars(vars, images);
    LaurentPoly num = f - swapped;
    LaurentPoly den = LaurentPoly::variable(f.table(), xs[a - 1]) -
                      LaurentPoly::variable(f.table(), xs[a]);
    auto q = num.exact_divide(den);
    if (!q) throw std::logic_error("divided_difference: division not exact");
    return *q;
}

LaurentPoly double_schubert(const Perm& sigma, const std::vector<std::size_t>& xs,
                            const std::vector<std::size_t>& ys, const VarTablePtr& table) {
    const int n = sigma.n();
    if (static_cast<int>(xs.size()) < n || static_cast<int>(ys.size()) < n - 1)
        throw std::invalid_argument("double_schubert: alphabet too small");
    // staircase product for the longest permutation
    LaurentPoly top = LaurentPoly::constant(table, Rat(1));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; i + j <= n; ++j)
            top = top * (LaurentPoly::variable(table, xs[i - 1]) -
                         LaurentPoly::variable(table, ys[j - 1]));
    Perm w = sigma.inverse().compose(Perm::longest(n));
    // Delta_w = Delta_{a_1} ∘ ... ∘ Delta_{a_m} for w = s_{a_1}...s_{a_m};
    // the rightmost letter acts first
    auto word = w.reduced_word();
    LaurentPoly r = top;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        r = divided_difference(r, *it, xs);
    return r;
}

LaurentPoly demazure(const LaurentPoly& f, int i, const std::vector<std::size_t>& ys) {
    if (i < 1 || i >= static_cast<int>(ys.size()))
        throw std::invalid_argument("demazure: bad position");
    const auto& table = f.table();
    std::vector<std::size_t> vars{ys[i - 1], ys[i]};
    std::vector<std::size_t> images{ys[i], ys[i - 1]};
    LaurentPoly yi = LaurentPoly::variable(table, ys[i - 1]);
    LaurentPoly yj = LaurentPoly::variable(table, ys[i]);
    LaurentPoly num = yi * f - yj * f.permute_vars(vars, images);
    auto q = num.exact_divide(yi - yj);
    if (!q) throw std::logic_error("demazure: division not exact");
    return *q;
}

LaurentPoly grothendieck(const Partition& lam, int k, int n,
                         const std::vector<std::size_t>& xs,
                         const std::vector<std::size_t>& ys, const VarTablePtr& table,
                         GrothendieckRoute route) {
    if (!lam.fits(k, n - k)) throw std::invalid_argument("grothendieck: shape mismatch");
    if (route == GrothendieckRoute::Determinant) {
        if (k == 0) return LaurentPoly::constant(table, Rat(1));
        LaurentPoly zero = LaurentPoly::zero(table);
        Matrix<LaurentPoly> numm(k, k, zero);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                numm.at(i, j) = kbracket(table, xs[i], ys, lam.part(j) + k - (j + 1)) *
                                LaurentPoly::variable(table, xs[i], j);
        LaurentPoly num = poly_det(numm, table);
        LaurentPoly den = LaurentPoly::constant(table, Rat(1));
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                den = den * (LaurentPoly::variable(table, xs[j]) -
                             LaurentPoly::variable(table, xs[i]));
        auto q = num.exact_divide(den);
        if (!q) throw std::logic_error("grothendieck: division not exact");
        return *q;
    }
    // Demazure recursion from the top class prod (1 - x_i/y_j); each step
    // replaces some i+1 by i in the first-part set of the partition's
    // Grassmannian permutation.
    LaurentPoly top = LaurentPoly::constant(table, Rat(1));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n - k; ++j)
            top = top * (LaurentPoly::constant(table, Rat(1)) -
                         LaurentPoly::variable(table, xs[i]) *
                             LaurentPoly::variable(table, ys[j], -1));
    IndexSet target = index_of_partition(lam, k, n);
    std::vector<int> cur;  // I_1 of the top partition
    for (int i = n - k + 1; i <= n; ++i) cur.push_back(i);
    LaurentPoly g = top;
    // lower the set elementwise; each unit decrement is one Demazure step
    for (int pos = 0; pos < k; ++pos) {
        while (cur[pos] > target.first[pos]) {
            int i = cur[pos] - 1;  // replace i+1 by i
            g = demazure(g, i, ys);
            --cur[pos];
        }
    }
    return g;
}

LaurentPoly schur(const Partition& lam, const std::vector<std::size_t>& xs,
                  const VarTablePtr& table) {
    const int k = static_cast<int>(xs.size());
    if (k == 0) return LaurentPoly::constant(table, Rat(1));
    LaurentPoly zero = LaurentPoly::zero(table);
    Matrix<LaurentPoly> numm(k, k, zero);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            numm.at(i, j) = LaurentPoly::variable(table, xs[i]).pow(lam.part(j) + k - (j + 1));
    LaurentPoly num = poly_det(numm, table);
    LaurentPoly den = LaurentPoly::constant(table, Rat(1));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            den = den * (LaurentPoly::variable(table, xs[i]) - LaurentPoly::variable(table, xs[j]));
    auto q = num.exact_divide(den);
    if (!q) throw std::logic_error("schur: division not exact");
    return *q;
}

}  // namespace qgr
