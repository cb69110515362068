#pragma once

#include <complex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "phasepath/poly.hpp"

namespace phasepath {

/// Power series in tau truncated at a fixed order L, with Poly<R>
/// coefficients. Arithmetic never extends past L; mixing truncation orders
/// is an error rather than a silent resize.
template <typename R>
class Series {
public:
    using Coeff = Poly<R>;

    explicit Series(int order) : order_(check_order(order)), coeffs_(order + 1) {}
    Series(int order, std::vector<Coeff> coeffs) : order_(check_order(order)), coeffs_(std::move(coeffs)) {
        if (static_cast<int>(coeffs_.size()) != order_ + 1)
            throw std::invalid_argument("Series: coefficient count != order+1");
    }

    int order() const { return order_; }
    const Coeff& operator[](int l) const { return coeffs_.at(l); }
    Coeff& operator[](int l) { return coeffs_.at(l); }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    /// First tau power with a nonzero coefficient, or -1 if identically zero.
    int leading_order() const {
        for (int l = 0; l <= order_; ++l)
            if (!coeffs_[l].is_zero()) return l;
        return -1;
    }

    Series operator-() const {
        Series r(order_);
        for (int l = 0; l <= order_; ++l) r.coeffs_[l] = -coeffs_[l];
        return r;
    }
    Series& operator+=(const Series& o) {
        check_same_order(o);
        for (int l = 0; l <= order_; ++l) coeffs_[l] += o.coeffs_[l];
        return *this;
    }
    Series& operator-=(const Series& o) {
        check_same_order(o);
        for (int l = 0; l <= order_; ++l) coeffs_[l] -= o.coeffs_[l];
        return *this;
    }

    friend Series operator+(Series a, const Series& b) { a += b; return a; }
    friend Series operator-(Series a, const Series& b) { a -= b; return a; }

    /// Cauchy product truncated at the common order.
    friend Series operator*(const Series& a, const Series& b) {
        a.check_same_order(b);
        Series r(a.order_);
        for (int i = 0; i <= a.order_; ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (int j = 0; i + j <= a.order_; ++j) {
                if (b.coeffs_[j].is_zero()) continue;
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }
    Series& operator*=(const Series& o) { *this = *this * o; return *this; }

    friend Series operator*(Series a, const Coeff& c) {
        for (auto& x : a.coeffs_) x *= c;
        return a;
    }
    friend Series operator*(const Coeff& c, Series a) { return std::move(a) * c; }
    friend Series operator*(Series a, const R& s) {
        for (auto& x : a.coeffs_) x *= s;
        return a;
    }
    friend Series operator*(const R& s, Series a) { return std::move(a) * s; }

    friend bool operator==(const Series& a, const Series& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    /// d/dtau; the result has truncation order L-1.
    Series diff_tau() const {
        if (order_ == 0) throw std::invalid_argument("Series: diff_tau of order-0 series");
        Series r(order_ - 1);
        for (int l = 1; l <= order_; ++l) r.coeffs_[l - 1] = coeffs_[l] * R(l);
        return r;
    }

    /// Coefficient-wise partial derivative in q or p.
    Series diff(Var v) const {
        Series r(order_);
        for (int l = 0; l <= order_; ++l) r.coeffs_[l] = coeffs_[l].diff(v);
        return r;
    }

    Series truncate(int new_order) const {
        if (new_order > order_) throw std::invalid_argument("Series: truncate cannot extend");
        Series r(new_order);
        for (int l = 0; l <= new_order; ++l) r.coeffs_[l] = coeffs_[l];
        return r;
    }

    template <typename S>
    Series<S> cast() const {
        Series<S> r(order_);
        for (int l = 0; l <= order_; ++l) r[l] = coeffs_[l].template cast<S>();
        return r;
    }

    /// Numeric evaluation: Horner in tau, polynomial evaluation inside.
    std::complex<double> eval(std::complex<double> q0, std::complex<double> p0,
                              std::complex<double> tau0) const {
        std::complex<double> acc(0.0, 0.0);
        for (int l = order_; l >= 0; --l) acc = acc * tau0 + coeffs_[l].eval(q0, p0);
        return acc;
    }

    /// Exact evaluation of the tau^l coefficient polynomials at a rational
    /// phase-space point, returning the series in tau alone.
    std::vector<R> eval_coeffs_exact(const R& q0, const R& p0) const {
        std::vector<R> r(order_ + 1, R(0));
        for (int l = 0; l <= order_; ++l) r[l] = coeffs_[l].eval_exact(q0, p0);
        return r;
    }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (int l = 0; l <= order_; ++l) {
            if (coeffs_[l].is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << "[" << coeffs_[l].str() << "]";
            if (l > 0) os << "*tau^" << l;
        }
        if (first) os << "0";
        return os.str();
    }

private:
    static int check_order(int order) {
        if (order < 0) throw std::invalid_argument("Series: negative order");
        return order;
    }
    void check_same_order(const Series& o) const {
        if (order_ != o.order_)
            throw std::invalid_argument("Series: truncation order mismatch (" +
                                        std::to_string(order_) + " vs " + std::to_string(o.order_) + ")");
    }

    int order_;
    std::vector<Coeff> coeffs_;
};

using TauSeries = Series<Rational>;
using CTauSeries = Series<GaussianRational>;

template <typename R>
Series<R> series_mul(const Series<R>& a, const Series<R>& b) { return a * b; }

/// Square root by order-by-order coefficient matching. The constant-in-tau
/// coefficient must be the polynomial 1.
template <typename R>
Series<R> series_sqrt(const Series<R>& a) {
    if (a[0] != Poly<R>(R(1)))
        throw std::invalid_argument("series_sqrt: constant term must be 1");
    const int L = a.order();
    Series<R> s(L);
    s[0] = Poly<R>(R(1));
    const R half = R(1) / R(2);
    for (int n = 1; n <= L; ++n) {
        Poly<R> acc = a[n];
        for (int k = 1; k < n; ++k) acc -= s[k] * s[n - k];
        s[n] = acc * half;
    }
    return s;
}

/// Multiplicative inverse of a series with constant coefficient 1.
template <typename R>
Series<R> series_inverse(const Series<R>& a) {
    if (a[0] != Poly<R>(R(1)))
        throw std::invalid_argument("series_inverse: constant term must be 1");
    const int L = a.order();
    Series<R> b(L);
    b[0] = Poly<R>(R(1));
    for (int n = 1; n <= L; ++n) {
        Poly<R> acc;
        for (int k = 1; k <= n; ++k) acc += a[k] * b[n - k];
        b[n] = -acc;
    }
    return b;
}

template <typename R>
std::complex<double> series_eval(const Series<R>& a, std::complex<double> q0,
                                 std::complex<double> p0, std::complex<double> tau0) {
    return a.eval(q0, p0, tau0);
}

}  // namespace phasepath
