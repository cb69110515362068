#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "phasepath/rational.hpp"

namespace phasepath {

/// Polynomial in hbar with Gaussian-rational coefficients, dense by power.
class HbarPoly {
public:
    HbarPoly() = default;
    HbarPoly(GaussianRational c) {  // NOLINT: implicit by design
        if (!c.is_zero()) coeffs_.push_back(std::move(c));
    }
    HbarPoly(Rational c) : HbarPoly(GaussianRational(std::move(c))) {}  // NOLINT
    HbarPoly(long long c) : HbarPoly(GaussianRational(c)) {}            // NOLINT

    static HbarPoly term(GaussianRational c, int hbar_power) {
        HbarPoly r;
        if (c.is_zero()) return r;
        r.coeffs_.resize(hbar_power + 1);
        r.coeffs_[hbar_power] = std::move(c);
        return r;
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    GaussianRational coeff(int power) const {
        return power <= degree() && power >= 0 ? coeffs_[power] : GaussianRational(0);
    }

    HbarPoly operator-() const {
        HbarPoly r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    HbarPoly& operator+=(const HbarPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    HbarPoly& operator-=(const HbarPoly& o) { return *this += -o; }

    friend HbarPoly operator+(HbarPoly a, const HbarPoly& b) { a += b; return a; }
    friend HbarPoly operator-(HbarPoly a, const HbarPoly& b) { a -= b; return a; }
    friend HbarPoly operator*(const HbarPoly& a, const HbarPoly& b) {
        HbarPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, GaussianRational(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        r.trim();
        return r;
    }
    HbarPoly& operator*=(const HbarPoly& o) { *this = *this * o; return *this; }

    friend bool operator==(const HbarPoly& a, const HbarPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const HbarPoly& a, const HbarPoly& b) { return !(a == b); }

    /// Complex conjugate with hbar kept real: conjugates each coefficient.
    HbarPoly conj() const {
        HbarPoly r(*this);
        for (auto& c : r.coeffs_) c = c.conj();
        return r;
    }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << coeffs_[i].str() << ")";
            if (i == 1) os << "*hbar";
            if (i > 1) os << "*hbar^" << i;
        }
        return os.str();
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<GaussianRational> coeffs_;
};

/// A word over the alphabet {q, p}: "qp" means the operator q-hat p-hat.
using Word = std::string;

/// Linear combination of noncommutative words in q-hat, p-hat. Words are
/// stored verbatim; normal_order produces the canonical representation.
class OperatorPoly {
public:
    OperatorPoly() = default;

    static OperatorPoly word(Word w, HbarPoly c = HbarPoly(1)) {
        OperatorPoly r;
        r.add(std::move(w), std::move(c));
        return r;
    }
    /// q^a p^b as a word (q's first).
    static OperatorPoly qp_power(int a, int b, HbarPoly c = HbarPoly(1)) {
        return word(Word(a, 'q') + Word(b, 'p'), std::move(c));
    }

    const std::map<Word, HbarPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(Word w, HbarPoly c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(std::move(w), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    OperatorPoly& operator+=(const OperatorPoly& o) {
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    OperatorPoly& operator-=(const OperatorPoly& o) {
        for (const auto& [w, c] : o.terms_) add(w, -c);
        return *this;
    }
    friend OperatorPoly operator+(OperatorPoly a, const OperatorPoly& b) { a += b; return a; }
    friend OperatorPoly operator-(OperatorPoly a, const OperatorPoly& b) { a -= b; return a; }
    friend OperatorPoly operator*(const OperatorPoly& a, const OperatorPoly& b) {
        OperatorPoly r;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) r.add(wa + wb, ca * cb);
        return r;
    }
    friend OperatorPoly operator*(OperatorPoly a, const HbarPoly& s) {
        OperatorPoly r;
        for (const auto& [w, c] : a.terms_) r.add(w, c * s);
        return r;
    }

private:
    std::map<Word, HbarPoly> terms_;
};

/// Operator in normal form: all q-hat factors precede all p-hat factors.
/// Keyed by (q-power, p-power).
class NormalForm {
public:
    using Key = std::pair<int, int>;

    NormalForm() = default;

    const std::map<Key, HbarPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(int qpow, int ppow, const HbarPoly& c) {
        if (c.is_zero()) return;
        Key k{qpow, ppow};
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    NormalForm& operator+=(const NormalForm& o) {
        for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
        return *this;
    }
    NormalForm& operator-=(const NormalForm& o) {
        for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
        return *this;
    }
    friend NormalForm operator+(NormalForm a, const NormalForm& b) { a += b; return a; }
    friend NormalForm operator-(NormalForm a, const NormalForm& b) { a -= b; return a; }
    friend NormalForm operator*(NormalForm a, const HbarPoly& s) {
        NormalForm r;
        for (const auto& [k, c] : a.terms_) r.add(k.first, k.second, c * s);
        return r;
    }

    friend bool operator==(const NormalForm& a, const NormalForm& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const NormalForm& a, const NormalForm& b) { return !(a == b); }

    OperatorPoly to_operator() const {
        OperatorPoly r;
        for (const auto& [k, c] : terms_) r += OperatorPoly::qp_power(k.first, k.second, c);
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (!first) os << "  +  ";
            first = false;
            os << "[" << c.str() << "]";
            if (k.first > 0) os << " q^" << k.first;
            if (k.second > 0) os << " p^" << k.second;
        }
        return os.str();
    }

private:
    std::map<Key, HbarPoly> terms_;
};

/// Rewrites every word into normal form using [q,p] = i hbar. A word is
/// consumed left to right; appending q to a normal term q^a p^b uses
///   q^a p^b q = q^{a+1} p^b - i hbar b q^a p^{b-1}.
inline NormalForm normal_order(const OperatorPoly& x) {
    const HbarPoly minus_ih = HbarPoly::term(GaussianRational(Rational(0), Rational(-1)), 1);
    NormalForm result;
    for (const auto& [word, coeff] : x.terms()) {
        std::map<NormalForm::Key, HbarPoly> state{{{0, 0}, coeff}};
        for (char op : word) {
            std::map<NormalForm::Key, HbarPoly> next;
            for (const auto& [key, c] : state) {
                auto [a, b] = key;
                if (op == 'p') {
                    next[{a, b + 1}] += c;
                } else if (op == 'q') {
                    next[{a + 1, b}] += c;
                    if (b > 0) next[{a, b - 1}] += c * minus_ih * HbarPoly(b);
                } else {
                    throw std::invalid_argument("normal_order: word letters must be 'q' or 'p'");
                }
            }
            state = std::move(next);
        }
        for (const auto& [key, c] : state) result.add(key.first, key.second, c);
    }
    return result;
}

/// An ordering rule as the exact expansion coefficients c_j of
/// f(u,v) = sum_j c_j (hbar u v)^j. Admissible rules have c_0 = 1.
struct OrderingRule {
    std::string name;
    std::vector<GaussianRational> coefficients;

    GaussianRational coeff(size_t j) const {
        return j < coefficients.size() ? coefficients[j] : GaussianRational(0);
    }

    /// f = exp(+i hbar u v / 2): maps q^m p^k to q^m p^k.
    static OrderingRule standard(int order) {
        return expansion("standard", GaussianRational(Rational(0), Rational(1, 2)), order);
    }
    /// f = exp(-i hbar u v / 2): maps q^m p^k to p^k q^m.
    static OrderingRule anti_standard(int order) {
        return expansion("anti-standard", GaussianRational(Rational(0), Rational(-1, 2)), order);
    }
    /// f = 1.
    static OrderingRule weyl(int order) {
        OrderingRule r{"weyl", std::vector<GaussianRational>(order + 1, GaussianRational(0))};
        r.coefficients[0] = GaussianRational(1);
        return r;
    }
    /// f = cos(hbar u v / 2).
    static OrderingRule symmetric(int order) {
        OrderingRule r{"symmetric", std::vector<GaussianRational>(order + 1, GaussianRational(0))};
        Rational fact(1);
        for (int j = 0; j <= order; ++j) {
            if (j > 0) fact *= Rational(j);
            if (j % 2 == 0)
                r.coefficients[j] = GaussianRational((j / 2) % 2 == 0 ? Rational(1) : Rational(-1)) *
                                    GaussianRational(Rational(1) / (Rational(2).pow(j) * fact));
        }
        return r;
    }
    /// f = 2 (hbar u v)^{-1} sin(hbar u v / 2).
    static OrderingRule born_jordan(int order) {
        OrderingRule r{"born-jordan", std::vector<GaussianRational>(order + 1, GaussianRational(0))};
        for (int j = 0; j <= order; j += 2) {
            Rational fact(1);
            for (int i = 2; i <= j + 1; ++i) fact *= Rational(i);
            r.coefficients[j] = GaussianRational((j / 2) % 2 == 0 ? Rational(1) : Rational(-1)) *
                                GaussianRational(Rational(1) / (Rational(2).pow(j) * fact));
        }
        return r;
    }
    /// f = cos(hbar u v / 2) + (hbar u v / 2) sin(hbar u v / 2): the rule
    /// induced by the mid-time phase-space prescription.
    static OrderingRule induced(int order) {
        OrderingRule cosr = symmetric(order);
        OrderingRule r{"induced", std::move(cosr.coefficients)};
        // (x/2) sin(x/2) = sum_n (-1)^n x^{2n+2} / (2^{2n+2} (2n+1)!)
        for (int n = 0; 2 * n + 2 <= order; ++n) {
            Rational fact(1);
            for (int i = 2; i <= 2 * n + 1; ++i) fact *= Rational(i);
            Rational c = Rational(1) / (Rational(2).pow(2 * n + 2) * fact);
            r.coefficients[2 * n + 2] += GaussianRational(n % 2 == 0 ? c : -c);
        }
        return r;
    }

private:
    /// Coefficients of exp(a * x): c_j = a^j / j!.
    static OrderingRule expansion(std::string name, const GaussianRational& a, int order) {
        OrderingRule r{std::move(name), {}};
        r.coefficients.resize(order + 1);
        GaussianRational c(1);
        r.coefficients[0] = c;
        for (int j = 1; j <= order; ++j) {
            c = c * a / GaussianRational(Rational(j));
            r.coefficients[j] = c;
        }
        return r;
    }
};

/// Applies f(u, v) exp(-(i hbar/2) d^2/dq dp) to the symbol q^m p^k and
/// reads the result as a normal-form operator. With D = d^2/dq dp acting on
/// monomials as falling factorials, the composite contributes at depth r:
///   hbar^r [m]_r [k]_r  sum_{j+s=r} c_j (-i/2)^s / s!   on  q^{m-r} p^{k-r}.
/// The sign convention (u, v) -> (-i d/dq, +i d/dp) is fixed by requiring
/// the standard rule to reproduce q^m p^k verbatim; the dual-pipeline tests
/// against explicit operator sums pin it for every rule.
inline NormalForm quantize(int m, int k, const OrderingRule& rule) {
    if (m < 0 || k < 0) throw std::invalid_argument("quantize: negative exponent");
    const int depth = std::min(m, k);
    if (static_cast<int>(rule.coefficients.size()) < depth + 1)
        throw std::invalid_argument("quantize: rule '" + rule.name + "' truncated below min(m,k)");

    const GaussianRational minus_i_half(Rational(0), Rational(-1, 2));
    NormalForm result;
    for (int r = 0; r <= depth; ++r) {
        Rational falling(1);
        for (int i = 0; i < r; ++i) falling *= Rational(m - i) * Rational(k - i);

        GaussianRational sum(0);
        Rational s_fact(1);
        for (int s = 0, j = r; s <= r; ++s, --j) {
            if (s > 0) s_fact *= Rational(s);
            sum += rule.coeff(j) * minus_i_half.pow(s) / GaussianRational(s_fact);
        }
        result.add(m - r, k - r, HbarPoly::term(GaussianRational(falling) * sum, r));
    }
    return result;
}

/// Normal form of H-hat = (p^k q^m + q^m p^k)/2 + (i hbar k m / 4) [p^{k-1}, q^{m-1}],
/// the operator induced by the mid-time path-integral prescription. The
/// commutator term is absent when either exponent is zero.
inline NormalForm induced_operator(int m, int k) {
    if (m < 0 || k < 0) throw std::invalid_argument("induced_operator: negative exponent");
    const HbarPoly half{GaussianRational(Rational(1, 2))};
    OperatorPoly sym = (OperatorPoly::word(Word(k, 'p') + Word(m, 'q')) +
                        OperatorPoly::word(Word(m, 'q') + Word(k, 'p'))) * half;
    OperatorPoly total = sym;
    if (m >= 1 && k >= 1) {
        HbarPoly factor = HbarPoly::term(
            GaussianRational(Rational(0), Rational(static_cast<long long>(k) * m, 4)), 1);
        OperatorPoly comm = OperatorPoly::word(Word(k - 1, 'p') + Word(m - 1, 'q')) -
                            OperatorPoly::word(Word(m - 1, 'q') + Word(k - 1, 'p'));
        total += comm * factor;
    }
    return normal_order(total);
}

struct InducedRuleReport {
    int m_max = 0;
    int k_max = 0;
    std::vector<std::vector<bool>> equal;  // [m][k]
    bool all_equal = true;
};

/// Checks quantize(m, k, induced rule) == induced_operator(m, k) on the whole
/// grid m <= m_max, k <= k_max.
inline InducedRuleReport verify_induced_rule(int m_max, int k_max) {
    OrderingRule rule = OrderingRule::induced(std::max(std::min(m_max, k_max), 0));
    InducedRuleReport report{m_max, k_max, {}, true};
    report.equal.assign(m_max + 1, std::vector<bool>(k_max + 1, false));
    for (int m = 0; m <= m_max; ++m)
        for (int k = 0; k <= k_max; ++k) {
            bool eq = quantize(m, k, rule) == induced_operator(m, k);
            report.equal[m][k] = eq;
            report.all_equal = report.all_equal && eq;
        }
    return report;
}

/// Adjoint: reverse each word, conjugate the coefficient (hbar real), and
/// renormalize. Returns the adjoint in normal form.
inline NormalForm adjoint(const NormalForm& x) {
    OperatorPoly reversed;
    for (const auto& [key, c] : x.terms())
        reversed += OperatorPoly::word(Word(key.second, 'p') + Word(key.first, 'q'), c.conj());
    return normal_order(reversed);
}

inline bool hermiticity_check(const NormalForm& x) { return adjoint(x) == x; }

/// Classical-limit admissibility: f -> 1 and df/dhbar -> 0 as hbar -> 0,
/// i.e. c_0 = 1 and c_1 = 0 in f = sum c_j (hbar u v)^j.
inline bool classical_limit_check(const OrderingRule& rule) {
    return rule.coeff(0) == GaussianRational(1) && rule.coeff(1) == GaussianRational(0);
}

}  // namespace phasepath
