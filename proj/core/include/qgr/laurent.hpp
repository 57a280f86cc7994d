#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qgr/rational.hpp"
#include "qgr/varset.hpp"

namespace qgr {

using ExpVec = std::vector<std::int32_t>;

/// Descending graded-lexicographic term order: higher total degree first,
/// ties broken lexicographically on the exponent vector. This is the
/// canonical emission order of the text grammar.
struct GradedLexDesc {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        long da = 0, db = 0;
        for (auto e : a) da += e;
        for (auto e : b) db += e;
        if (da != db) return da > db;
        return a > b;
    }
};

/// Sparse multivariate Laurent polynomial with exact rational coefficients.
/// Zero coefficients are never stored; negative exponents are allowed only
/// for variables flagged Laurent in the table. Immutable in spirit: all
/// operations return fresh values.
class LaurentPoly {
public:
    using TermMap = std::map<ExpVec, Rat, GradedLexDesc>;

    LaurentPoly() = default;
    explicit LaurentPoly(VarTablePtr table) : table_(std::move(table)) {}

    static LaurentPoly zero(VarTablePtr table) { return LaurentPoly(std::move(table)); }
    static LaurentPoly constant(VarTablePtr table, const Rat& c);
    static LaurentPoly variable(VarTablePtr table, std::size_t idx, int exp = 1);
    /// Single term c * prod v_i^{e_i}.
    static LaurentPoly monomial(VarTablePtr table, const ExpVec& exps, const Rat& c);

    const VarTablePtr& table() const { return table_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const;  // requires is_constant()
    std::size_t term_count() const { return terms_.size(); }
    long total_degree() const;  // max over terms; 0 for the zero polynomial
    int degree_in(std::size_t idx) const;
    int min_exponent(std::size_t idx) const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(const Rat& c) const;
    LaurentPoly pow(int e) const;  // negative e only for monomials
    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    /// Adds c * x^exps in place (internal building block; keeps invariants).
    void add_term(const ExpVec& exps, const Rat& c);

    /// Substitute variable idx by an arbitrary polynomial over the same
    /// table. Negative exponents of idx require `value` to be an invertible
    /// monomial.
    LaurentPoly substitute(std::size_t idx, const LaurentPoly& value) const;

    /// Simultaneous renaming z_i -> z_{perm[i]} on the listed variables;
    /// perm maps positions within `vars` (0-based into the vars list).
    LaurentPoly permute_vars(const std::vector<std::size_t>& vars,
                             const std::vector<std::size_t>& images) const;

    /// Set variable idx to a rational constant (must be nonzero if any term
    /// has a negative exponent there).
    LaurentPoly specialize(std::size_t idx, const Rat& c) const;

    /// Invert the listed variables: v -> v^{-1} (each must be Laurent).
    LaurentPoly invert_vars(const std::vector<std::size_t>& vars) const;

    /// Multiply every term by its exponent of variable idx (the Euler
    /// operator v d/dv; exact form of kappa p d/dp up to the kappa factor).
    LaurentPoly euler(std::size_t idx) const;

    /// Exact division; nullopt if the divisor does not divide exactly.
    std::optional<LaurentPoly> exact_divide(const LaurentPoly& divisor) const;

    /// Full rational evaluation. `values[i]` substitutes variable i.
    Rat eval(const std::vector<Rat>& values) const;
    std::complex<double> eval(const std::vector<std::complex<double>>& values) const;

    /// Canonical text per the repository grammar (deterministic, parseable).
    std::string text() const;
    /// Parses the grammar produced by text(); accepts parentheses and '/'.
    static LaurentPoly parse(const std::string& src, VarTablePtr table);

private:
    void check_same_table(const LaurentPoly& o) const;
    void check_exponent(const ExpVec& exps) const;

    VarTablePtr table_;
    TermMap terms_;
};

inline LaurentPoly operator*(const Rat& c, const LaurentPoly& p) { return p * c; }

}  // namespace qgr
