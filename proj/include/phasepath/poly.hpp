#pragma once

#include <complex>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "phasepath/rational.hpp"

namespace phasepath {

/// Which of the two commuting symbols to act on.
enum class Var { q, p };

/// Polynomial in the commuting symbols q, p over a coefficient field R.
/// Terms are kept in a sorted map keyed by (deg_q, deg_p); zero coefficients
/// are never stored, so equality is structural.
template <typename R>
class Poly {
public:
    using Exponents = std::pair<int, int>;  // (deg_q, deg_p)
    using TermMap = std::map<Exponents, R>;

    Poly() = default;
    Poly(R constant) {  // NOLINT: implicit by design
        if (!constant.is_zero()) terms_[{0, 0}] = std::move(constant);
    }

    static Poly monomial(int deg_q, int deg_p, R coeff = R(1)) {
        if (deg_q < 0 || deg_p < 0) throw std::invalid_argument("Poly: negative exponent");
        Poly r;
        if (!coeff.is_zero()) r.terms_[{deg_q, deg_p}] = std::move(coeff);
        return r;
    }
    static Poly q() { return monomial(1, 0); }
    static Poly p() { return monomial(0, 1); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    R coeff(int deg_q, int deg_p) const {
        auto it = terms_.find({deg_q, deg_p});
        return it == terms_.end() ? R(0) : it->second;
    }

    int deg_q() const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e.first);
        return d;
    }
    int deg_p() const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e.second);
        return d;
    }

    Poly operator-() const {
        Poly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    Poly& operator+=(const Poly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    Poly& operator*=(const R& s) {
        if (s.is_zero()) { terms_.clear(); return *this; }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
        return r;
    }
    friend Poly operator*(Poly a, const R& s) { a *= s; return a; }
    friend Poly operator*(const R& s, Poly a) { a *= s; return a; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Exact partial derivative.
    Poly diff(Var v) const {
        Poly r;
        for (const auto& [e, c] : terms_) {
            if (v == Var::q && e.first > 0)
                r.add_term({e.first - 1, e.second}, c * R(e.first));
            else if (v == Var::p && e.second > 0)
                r.add_term({e.first, e.second - 1}, c * R(e.second));
        }
        return r;
    }

    /// Antiderivative in q (integration constant zero). Requires R to divide
    /// by integers, which both coefficient fields here do.
    Poly integrate_q() const {
        Poly r;
        for (const auto& [e, c] : terms_)
            r.add_term({e.first + 1, e.second}, c / R(e.first + 1));
        return r;
    }

    /// Keeps only terms with the given p-degree.
    Poly slice_deg_p(int deg) const {
        Poly r;
        for (const auto& [e, c] : terms_)
            if (e.second == deg) r.add_term(e, c);
        return r;
    }

    /// Exact evaluation at a rational point.
    R eval_exact(const R& q0, const R& p0) const {
        R acc(0);
        for (const auto& [e, c] : terms_) acc += c * q0.pow(e.first) * p0.pow(e.second);
        return acc;
    }

    std::complex<double> eval(std::complex<double> q0, std::complex<double> p0) const {
        std::complex<double> acc(0.0, 0.0);
        for (const auto& [e, c] : terms_) {
            std::complex<double> t = to_complex(c);
            for (int i = 0; i < e.first; ++i) t *= q0;
            for (int i = 0; i < e.second; ++i) t *= p0;
            acc += t;
        }
        return acc;
    }

    /// Maps coefficients into another field (e.g. Rational -> GaussianRational).
    template <typename S>
    Poly<S> cast() const {
        Poly<S> r;
        for (const auto& [e, c] : terms_) r.add_raw(e.first, e.second, S(c));
        return r;
    }

    void add_raw(int deg_q, int deg_p, R c) { add_term({deg_q, deg_p}, std::move(c)); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c << ")";
            if (e.first > 0) os << "*q^" << e.first;
            if (e.second > 0) os << "*p^" << e.second;
        }
        return os.str();
    }

private:
    void add_term(const Exponents& e, R c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TermMap terms_;
};

using PolyQP = Poly<Rational>;
using CPolyQP = Poly<GaussianRational>;

template <typename R>
Poly<R> poly_mul(const Poly<R>& a, const Poly<R>& b) { return a * b; }

template <typename R>
Poly<R> poly_diff(const Poly<R>& a, Var v) { return a.diff(v); }

}  // namespace phasepath
