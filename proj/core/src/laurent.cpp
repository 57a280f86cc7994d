#include "qgr/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qgr {

LaurentPoly LaurentPoly::constant(VarTablePtr table, const Rat& c) {
    LaurentPoly p(std::move(table));
    if (!qgr::is_zero(c)) p.terms_[ExpVec(p.table_->size(), 0)] = c;
    return p;
}

LaurentPoly LaurentPoly::variable(VarTablePtr table, std::size_t idx, int exp) {
    LaurentPoly p(std::move(table));
    ExpVec e(p.table_->size(), 0);
    e.at(idx) = exp;
    p.check_exponent(e);
    p.terms_[e] = Rat(1);
    return p;
}

LaurentPoly LaurentPoly::monomial(VarTablePtr table, const ExpVec& exps, const Rat& c) {
    LaurentPoly p(std::move(table));
    p.check_exponent(exps);
    if (!qgr::is_zero(c)) p.terms_[exps] = c;
    return p;
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
}

Rat LaurentPoly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

long LaurentPoly::total_degree() const {
    long best = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        long d = 0;
        for (auto v : e) d += v;
        if (first || d > best) best = d, first = false;
    }
    return best;
}

int LaurentPoly::degree_in(std::size_t idx) const {
    int best = 0;
    for (const auto& [e, c] : terms_) best = std::max(best, static_cast<int>(e.at(idx)));
    return best;
}

int LaurentPoly::min_exponent(std::size_t idx) const {
    int best = 0;
    for (const auto& [e, c] : terms_) best = std::min(best, static_cast<int>(e.at(idx)));
    return best;
}

void LaurentPoly::check_same_table(const LaurentPoly& o) const {
    if (table_ == o.table_) return;
    if (!table_ || !o.table_ || !(*table_ == *o.table_))
        throw std::invalid_argument("LaurentPoly: mixed variable tables");
}

void LaurentPoly::check_exponent(const ExpVec& exps) const {
    if (exps.size() != table_->size())
        throw std::invalid_argument("LaurentPoly: exponent arity mismatch");
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i] < 0 && !table_->laurent(i))
            throw std::invalid_argument("LaurentPoly: negative exponent for non-Laurent variable " +
                                        table_->name(i));
}

void LaurentPoly::add_term(const ExpVec& exps, const Rat& c) {
    if (qgr::is_zero(c)) return;
    check_exponent(exps);
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
    } else {
        it->second += c;
        if (qgr::is_zero(it->second)) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(table_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    check_same_table(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    check_same_table(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_same_table(o);
    LaurentPoly r(table_);
    const std::size_t nv = table_->size();
    ExpVec e(nv);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < nv; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::operator*(const Rat& c) const {
    LaurentPoly r(table_);
    if (qgr::is_zero(c)) return r;
    for (const auto& [e, cc] : terms_) r.terms_[e] = cc * c;
    return r;
}

LaurentPoly LaurentPoly::pow(int e) const {
    if (e == 0) return constant(table_, Rat(1));
    if (e < 0) {
        if (terms_.size() != 1) throw std::invalid_argument("pow: negative power of non-monomial");
        const auto& [ex, c] = *terms_.begin();
        ExpVec inv(ex.size());
        for (std::size_t i = 0; i < ex.size(); ++i) inv[i] = -ex[i] * (-e);
        Rat ic = Rat(1) / c;
        Rat acc(1);
        for (int i = 0; i < -e; ++i) acc *= ic;
        return monomial(table_, inv, acc);
    }
    LaurentPoly base = *this, acc = constant(table_, Rat(1));
    int k = e;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = (k >>= 1) ? base * base : base;
    }
    return acc;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    check_same_table(o);
    return terms_ == o.terms_;
}

LaurentPoly LaurentPoly::substitute(std::size_t idx, const LaurentPoly& value) const {
    check_same_table(value);
    LaurentPoly r(table_);
    for (const auto& [e, c] : terms_) {
        ExpVec rest = e;
        int k = rest.at(idx);
        rest[idx] = 0;
        r = r + monomial(table_, rest, c) * value.pow(k);
    }
    return r;
}

LaurentPoly LaurentPoly::permute_vars(const std::vector<std::size_t>& vars,
                                      const std::vector<std::size_t>& images) const {
    if (vars.size() != images.size())
        throw std::invalid_argument("permute_vars: size mismatch");
    LaurentPoly r(table_);
    std::vector<bool> moved(table_->size(), false);
    for (auto v : vars) moved[v] = true;
    for (const auto& [e, c] : terms_) {
        ExpVec out(e.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (!moved[i]) out[i] = e[i];
        for (std::size_t i = 0; i < vars.size(); ++i) out[images[i]] += e[vars[i]];
        r.add_term(out, c);
    }
    return r;
}

LaurentPoly LaurentPoly::specialize(std::size_t idx, const Rat& c) const {
    LaurentPoly r(table_);
    for (const auto& [e, coeff] : terms_) {
        int k = e.at(idx);
        Rat factor(1);
        if (k > 0) {
            for (int i = 0; i < k; ++i) factor *= c;
        } else if (k < 0) {
            if (qgr::is_zero(c)) throw std::invalid_argument("specialize: 1/0");
            for (int i = 0; i < -k; ++i) factor /= c;
        }
        ExpVec ne = e;
        ne[idx] = 0;
        r.add_term(ne, coeff * factor);
    }
    return r;
}

LaurentPoly LaurentPoly::invert_vars(const std::vector<std::size_t>& vars) const {
    for (auto v : vars)
        if (!table_->laurent(v))
            throw std::invalid_argument("invert_vars: variable is not Laurent");
    LaurentPoly r(table_);
    for (const auto& [e, c] : terms_) {
        ExpVec ne = e;
        for (auto v : vars) ne[v] = -ne[v];
        r.add_term(ne, c);
    }
    return r;
}

LaurentPoly LaurentPoly::euler(std::size_t idx) const {
    LaurentPoly r(table_);
    for (const auto& [e, c] : terms_) r.add_term(e, c * Rat(e.at(idx)));
    return r;
}

std::optional<LaurentPoly> LaurentPoly::exact_divide(const LaurentPoly& divisor) const {
    check_same_table(divisor);
    if (divisor.is_zero()) return std::nullopt;
    const std::size_t nv = table_->size();
    // Shift both sides so every per-variable minimum exponent becomes zero;
    // Laurent monomial factors are units, and the per-variable minimum is a
    // valuation, so the shifted quotient lives in the nonnegative orthant.
    auto true_min = [nv](const LaurentPoly& p, std::size_t i) {
        bool first = true;
        int best = 0;
        for (const auto& [e, c] : p.terms_) {
            if (first || e[i] < best) best = e[i];
            first = false;
        }
        return best;
    };
    auto shifted = [nv](const LaurentPoly& p, const ExpVec& delta) {
        LaurentPoly r(p.table_);
        for (const auto& [e, c] : p.terms_) {
            ExpVec ne = e;
            for (std::size_t i = 0; i < nv; ++i) ne[i] += delta[i];
            r.terms_[ne] = c;
        }
        return r;
    };
    ExpVec shift_n(nv, 0), shift_d(nv, 0);
    for (std::size_t i = 0; i < nv; ++i) {
        shift_n[i] = -true_min(*this, i);
        shift_d[i] = -true_min(divisor, i);
    }
    LaurentPoly num = shifted(*this, shift_n);
    LaurentPoly den = shifted(divisor, shift_d);

    // After clearing, both operands live in the nonnegative orthant where
    // graded-lex is well-founded; quotient monomials must stay there too.
    LaurentPoly q(table_);
    const auto lead_d = *den.terms_.begin();
    LaurentPoly rem = num;
    while (!rem.is_zero()) {
        const auto lead_r = *rem.terms_.begin();
        ExpVec e(nv);
        for (std::size_t i = 0; i < nv; ++i) {
            e[i] = lead_r.first[i] - lead_d.first[i];
            if (e[i] < 0) return std::nullopt;
        }
        LaurentPoly t = monomial(table_, e, lead_r.second / lead_d.second);
        q = q + t;
        rem = rem - t * den;
    }
    // undo the clearing shifts: q * x^{shift_d - shift_n}, applied termwise
    // because the shift may be negative in a non-Laurent variable
    ExpVec undo(nv);
    for (std::size_t i = 0; i < nv; ++i) {
        undo[i] = shift_d[i] - shift_n[i];
        if (undo[i] < 0 && !table_->laurent(i) && true_min(q, i) + undo[i] < 0)
            return std::nullopt;
    }
    return shifted(q, undo);
}

Rat LaurentPoly::eval(const std::vector<Rat>& values) const {
    if (values.size() != table_->size()) throw std::invalid_argument("eval: arity mismatch");
    Rat total(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            int k = e[i];
            if (k == 0) continue;
            if (qgr::is_zero(values[i]) && k < 0) throw std::invalid_argument("eval: 1/0");
            Rat f(1);
            for (int j = 0; j < std::abs(k); ++j) f *= values[i];
            if (k > 0)
                t *= f;
            else
                t /= f;
        }
        total += t;
    }
    return total;
}

std::complex<double> LaurentPoly::eval(const std::vector<std::complex<double>>& values) const {
    if (values.size() != table_->size()) throw std::invalid_argument("eval: arity mismatch");
    std::complex<double> total = 0.0;
    for (const auto& [e, c] : terms_) {
        std::complex<double> t = rat_double(c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            int k = e[i];
            for (int j = 0; j < k; ++j) t *= values[i];
            for (int j = 0; j < -k; ++j) t /= values[i];
        }
        total += t;
    }
    return total;
}

std::string LaurentPoly::text() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat a = c;
        bool neg = sgn(a) < 0;
        if (neg) a = -a;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += table_->name(i);
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out << rat_text(a);
        } else {
            if (a != 1) out << rat_text(a) << "*";
            out << mono;
        }
    }
    return out.str();
}

namespace {

// Minimal recursive-descent parser for the canonical grammar:
//   expr := term (('+'|'-') term)*
//   term := unary (('*'|'/') unary)*      '/' only by constants
//   unary := '-' unary | atom ('^' int)?
//   atom := integer | variable | '(' expr ')'
struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    VarTablePtr table;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse error at " + std::to_string(pos) + ": " + what);
    }

    long integer() {
        skip();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return std::stol(s.substr(start, pos - start));
    }

    LaurentPoly atom() {
        skip();
        if (pos >= s.size()) fail("unexpected end");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            LaurentPoly e = expr();
            if (!eat(')')) fail("expected )");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return LaurentPoly::constant(table, Rat(integer()));
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            int idx = table->find(name);
            if (idx < 0) fail("unknown variable " + name);
            return LaurentPoly::variable(table, static_cast<std::size_t>(idx));
        }
        fail("unexpected character");
    }

    LaurentPoly unary() {
        skip();
        if (pos < s.size() && s[pos] == '-') {
            ++pos;
            return -unary();
        }
        LaurentPoly a = atom();
        skip();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            long e = integer();
            a = a.pow(static_cast<int>(e));
        }
        return a;
    }

    LaurentPoly term() {
        LaurentPoly a = unary();
        while (true) {
            skip();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                a = a * unary();
            } else if (pos < s.size() && s[pos] == '/') {
                ++pos;
                LaurentPoly d = unary();
                if (!d.is_constant() || qgr::is_zero(d.constant_value()))
                    fail("division restricted to nonzero constants");
                a = a * (Rat(1) / d.constant_value());
            } else {
                break;
            }
        }
        return a;
    }

    LaurentPoly expr() {
        LaurentPoly a = term();
        while (true) {
            skip();
            if (pos < s.size() && s[pos] == '+') {
                ++pos;
                a = a + term();
            } else if (pos < s.size() && s[pos] == '-') {
                ++pos;
                a = a - term();
            } else {
                break;
            }
        }
        return a;
    }
};

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& src, VarTablePtr table) {
    Parser p{src, 0, std::move(table)};
    LaurentPoly result = p.expr();
    p.skip();
    if (p.pos != src.size()) p.fail("trailing input");
    return result;
}

}  // namespace qgr
