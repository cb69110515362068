#pragma once

#include <complex>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace phasepath {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Always reduced, denominator > 0.
/// Backed by boost::multiprecision::cpp_rational, which maintains both
/// invariants canonically.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : v_(n) {}  // NOLINT: implicit by design
    Rational(long long num, long long den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    }
    Rational(BigInt num, BigInt den) : v_(std::move(num), std::move(den)) {
        if (denominator() == 0) throw std::invalid_argument("Rational: zero denominator");
    }

    /// Parses "a", "a/b", or "-a/b".
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(BigInt(s), BigInt(1));
            return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
        } catch (const std::exception&) {
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        }
    }

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_ == 1; }
    int sign() const { return v_.sign(); }

    Rational operator-() const { return Rational(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }

    Rational pow(int e) const {
        if (e < 0) {
            if (is_zero()) throw std::domain_error("Rational: 0^negative");
            return (Rational(1) / *this).pow(-e);
        }
        Rational r(1), base(*this);
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    double to_double() const { return v_.convert_to<double>(); }

    std::string str() const {
        std::ostringstream os;
        os << v_;
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

private:
    using Backend = boost::multiprecision::cpp_rational;
    explicit Rational(Backend v) : v_(std::move(v)) {}
    Backend v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// Gaussian rational a + b·i with exact rational parts. Field operations
/// throughout; division by zero throws.
struct GaussianRational {
    Rational re, im;

    GaussianRational() = default;
    GaussianRational(long long n) : re(n) {}  // NOLINT: implicit by design
    GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_one() const { return re.is_one() && im.is_zero(); }
    GaussianRational conj() const { return {re, -im}; }

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational& operator+=(const GaussianRational& o) { re += o.re; im += o.im; return *this; }
    GaussianRational& operator-=(const GaussianRational& o) { re -= o.re; im -= o.im; return *this; }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational nre = re * o.re - im * o.im;
        Rational nim = re * o.im + im * o.re;
        re = std::move(nre);
        im = std::move(nim);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        Rational n = o.re * o.re + o.im * o.im;
        if (n.is_zero()) throw std::domain_error("GaussianRational: division by zero");
        Rational nre = (re * o.re + im * o.im) / n;
        Rational nim = (im * o.re - re * o.im) / n;
        re = std::move(nre);
        im = std::move(nim);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { a += b; return a; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { a -= b; return a; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { a *= b; return a; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { a /= b; return a; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    GaussianRational pow(int e) const {
        if (e < 0) return (GaussianRational(1) / *this).pow(-e);
        GaussianRational r(1), base(*this);
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    std::string str() const {
        if (im.is_zero()) return re.str();
        std::ostringstream os;
        if (!re.is_zero()) os << re.str() << (im.sign() > 0 ? "+" : "");
        os << im.str() << "i";
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& g) { return os << g.str(); }
};

inline std::complex<double> to_complex(const Rational& r) { return {r.to_double(), 0.0}; }
inline std::complex<double> to_complex(const GaussianRational& g) {
    return {g.re.to_double(), g.im.to_double()};
}

}  // namespace phasepath
