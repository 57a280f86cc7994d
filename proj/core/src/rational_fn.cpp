#include "qgr/rational_fn.hpp"

#include <algorithm>
#include <sstream>

namespace qgr {

Rat LinearForm::normalize() {
    // drop zero entries
    for (auto it = coeffs.begin(); it != coeffs.end();) {
        if (qgr::is_zero(it->second))
            it = coeffs.erase(it);
        else
            ++it;
    }
    Rat lead = coeffs.empty() ? constant : coeffs.begin()->second;
    if (qgr::is_zero(lead)) return Rat(1);
    // scale so entries become coprime integers with positive leading one
    mpz_class num_gcd = 0, den_lcm = 1;
    auto fold = [&](const Rat& r) {
        mpz_class n = abs(r.get_num());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), r.get_den().get_mpz_t());
    };
    for (const auto& [i, c] : coeffs) fold(c);
    if (!qgr::is_zero(constant)) fold(constant);
    Rat scale(num_gcd, den_lcm);
    scale.canonicalize();
    if (sgn(lead) < 0) scale = -scale;
    for (auto& [i, c] : coeffs) c /= scale;
    constant /= scale;
    return scale;
}

bool LinearForm::is_zero() const {
    for (const auto& [i, c] : coeffs)
        if (!qgr::is_zero(c)) return false;
    return qgr::is_zero(constant);
}

LaurentPoly LinearForm::to_poly(const VarTablePtr& table) const {
    LaurentPoly p = LaurentPoly::constant(table, constant);
    for (const auto& [i, c] : coeffs)
        p = p + LaurentPoly::variable(table, i) * c;
    return p;
}

Rat LinearForm::eval(const std::vector<Rat>& values) const {
    Rat v = constant;
    for (const auto& [i, c] : coeffs) v += c * values.at(i);
    return v;
}

bool LinearForm::operator<(const LinearForm& o) const {
    if (coeffs != o.coeffs) return coeffs < o.coeffs;
    return constant < o.constant;
}

std::string LinearForm::text(const VarTablePtr& table) const { return to_poly(table).text(); }

RestrictedRational::RestrictedRational(LaurentPoly num,
                                       std::vector<std::pair<LinearForm, int>> den)
    : num_(std::move(num)), den_(std::move(den)) {
    Rat scale(1);
    for (auto& [f, m] : den_) {
        Rat s = f.normalize();
        for (int i = 0; i < m; ++i) scale *= s;
    }
    if (!qgr::is_zero(scale)) num_ = num_ * (Rat(1) / scale);
    reduce();
}

void RestrictedRational::reduce() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    std::sort(den_.begin(), den_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // merge equal factors
    std::vector<std::pair<LinearForm, int>> merged;
    for (auto& [f, m] : den_) {
        if (m <= 0) continue;
        if (!merged.empty() && merged.back().first == f)
            merged.back().second += m;
        else
            merged.emplace_back(f, m);
    }
    den_ = std::move(merged);
    // maximal cancellation by exact trial division
    for (auto& [f, m] : den_) {
        LaurentPoly fp = f.to_poly(num_.table());
        while (m > 0) {
            auto q = num_.exact_divide(fp);
            if (!q) break;
            num_ = *q;
            --m;
        }
    }
    den_.erase(std::remove_if(den_.begin(), den_.end(),
                              [](const auto& p) { return p.second == 0; }),
               den_.end());
}

RestrictedRational RestrictedRational::operator-() const {
    RestrictedRational r = *this;
    r.num_ = -r.num_;
    return r;
}

RestrictedRational RestrictedRational::operator+(const RestrictedRational& o) const {
    // common denominator: union with max multiplicities
    std::vector<std::pair<LinearForm, int>> common = den_;
    for (const auto& [f, m] : o.den_) {
        auto it = std::find_if(common.begin(), common.end(),
                               [&](const auto& p) { return p.first == f; });
        if (it == common.end())
            common.emplace_back(f, m);
        else
            it->second = std::max(it->second, m);
    }
    auto lift = [&](const RestrictedRational& r) {
        LaurentPoly p = r.num_;
        for (const auto& [f, m] : common) {
            int have = 0;
            for (const auto& [g, mm] : r.den_)
                if (g == f) have = mm;
            LaurentPoly fp = f.to_poly(p.table());
            for (int i = 0; i < m - have; ++i) p = p * fp;
        }
        return p;
    };
    RestrictedRational out(lift(*this) + lift(o), common);
    return out;
}

RestrictedRational RestrictedRational::operator-(const RestrictedRational& o) const {
    return *this + (-o);
}

RestrictedRational RestrictedRational::operator*(const RestrictedRational& o) const {
    std::vector<std::pair<LinearForm, int>> den = den_;
    den.insert(den.end(), o.den_.begin(), o.den_.end());
    return RestrictedRational(num_ * o.num_, std::move(den));
}

RestrictedRational RestrictedRational::operator*(const Rat& c) const {
    RestrictedRational r = *this;
    r.num_ = r.num_ * c;
    if (r.num_.is_zero()) r.den_.clear();
    return r;
}

RestrictedRational RestrictedRational::div_form(const LinearForm& f, int mult) const {
    std::vector<std::pair<LinearForm, int>> den = den_;
    den.emplace_back(f, mult);
    return RestrictedRational(num_, std::move(den));
}

std::optional<RestrictedRational> RestrictedRational::div_exact(const LaurentPoly& d) const {
    auto q = num_.exact_divide(d);
    if (!q) return std::nullopt;
    return RestrictedRational(*q, den_);
}

bool RestrictedRational::operator==(const RestrictedRational& o) const {
    // reduced forms are canonical up to nothing: cross-multiply instead
    return (*this - o).is_zero();
}

std::optional<LaurentPoly> RestrictedRational::as_poly() const {
    if (!den_.empty()) return std::nullopt;
    return num_;
}

Rat RestrictedRational::eval(const std::vector<Rat>& values) const {
    Rat v = num_.eval(values);
    for (const auto& [f, m] : den_) {
        Rat fv = f.eval(values);
        if (qgr::is_zero(fv)) throw std::invalid_argument("RestrictedRational::eval: pole");
        for (int i = 0; i < m; ++i) v /= fv;
    }
    return v;
}

std::complex<double> RestrictedRational::eval(
    const std::vector<std::complex<double>>& values) const {
    std::complex<double> v = num_.eval(values);
    for (const auto& [f, m] : den_) {
        std::complex<double> fv = rat_double(f.constant);
        for (const auto& [i, c] : f.coeffs) fv += rat_double(c) * values.at(i);
        for (int i = 0; i < m; ++i) v /= fv;
    }
    return v;
}

std::string RestrictedRational::text() const {
    if (den_.empty()) return num_.text();
    std::ostringstream out;
    out << "(" << num_.text() << ") / (";
    bool first = true;
    for (const auto& [f, m] : den_) {
        if (!first) out << "*";
        first = false;
        out << "(" << f.text(num_.table()) << ")";
        if (m != 1) out << "^" << m;
    }
    out << ")";
    return out.str();
}

}  // namespace qgr
