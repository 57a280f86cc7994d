#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qgr/laurent.hpp"

namespace qgr {

/// Affine-linear form sum a_i v_i + d with rational coefficients, normalized
/// so the coefficient vector is primitive-integer with the leading nonzero
/// coefficient positive. Two proportional forms compare equal; the dropped
/// scalar is returned by normalize() so callers can keep the fraction exact.
class LinearForm {
public:
    std::map<std::size_t, Rat> coeffs;  // variable index -> coefficient
    Rat constant{0};

    LinearForm() = default;
    static LinearForm diff(std::size_t a, std::size_t b) {
        LinearForm f;
        f.coeffs[a] = Rat(1);
        f.coeffs[b] = Rat(-1);
        return f;
    }
    static LinearForm var_plus(std::size_t a, const Rat& c) {
        LinearForm f;
        f.coeffs[a] = Rat(1);
        f.constant = c;
        return f;
    }

    /// Scale to the canonical representative; returns the factor s such that
    /// (old form) = s * (new form).
    Rat normalize();

    bool is_zero() const;
    LaurentPoly to_poly(const VarTablePtr& table) const;
    Rat eval(const std::vector<Rat>& values) const;
    bool operator==(const LinearForm& o) const {
        return coeffs == o.coeffs && constant == o.constant;
    }
    bool operator<(const LinearForm& o) const;
    std::string text(const VarTablePtr& table) const;
};

/// Rational function with a Laurent-polynomial numerator and a denominator
/// that is a multiset of linear forms. Maintains maximal cancellation: no
/// stored denominator factor divides the numerator.
class RestrictedRational {
public:
    RestrictedRational() = default;
    explicit RestrictedRational(LaurentPoly num) : num_(std::move(num)) {}
    RestrictedRational(LaurentPoly num, std::vector<std::pair<LinearForm, int>> den);

    static RestrictedRational zero(const VarTablePtr& table) {
        return RestrictedRational(LaurentPoly::zero(table));
    }
    static RestrictedRational one(const VarTablePtr& table) {
        return RestrictedRational(LaurentPoly::constant(table, Rat(1)));
    }

    const LaurentPoly& num() const { return num_; }
    const std::vector<std::pair<LinearForm, int>>& den() const { return den_; }
    const VarTablePtr& table() const { return num_.table(); }
    bool is_zero() const { return num_.is_zero(); }

    RestrictedRational operator-() const;
    RestrictedRational operator+(const RestrictedRational& o) const;
    RestrictedRational operator-(const RestrictedRational& o) const;
    RestrictedRational operator*(const RestrictedRational& o) const;
    RestrictedRational operator*(const Rat& c) const;
    /// Divide by a single linear form (appends to the denominator, then reduces).
    RestrictedRational div_form(const LinearForm& f, int mult = 1) const;
    /// Divide by a polynomial that must divide exactly; nullopt otherwise.
    std::optional<RestrictedRational> div_exact(const LaurentPoly& d) const;

    bool operator==(const RestrictedRational& o) const;
    bool operator!=(const RestrictedRational& o) const { return !(*this == o); }

    /// The value as a Laurent polynomial, if the denominator is empty.
    std::optional<LaurentPoly> as_poly() const;

    Rat eval(const std::vector<Rat>& values) const;
    std::complex<double> eval(const std::vector<std::complex<double>>& values) const;

    std::string text() const;

private:
    void reduce();

    LaurentPoly num_;
    std::vector<std::pair<LinearForm, int>> den_;  // sorted, multiplicities > 0
};

}  // namespace qgr
