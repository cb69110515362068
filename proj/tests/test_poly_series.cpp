#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>

#include "phasepath/series.hpp"

using namespace phasepath;

namespace {

// Small random polynomials for property tests.
PolyQP random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, 3), num(-5, 5), den(1, 4), nterms(1, 4);
    PolyQP r;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i)
        r += PolyQP::monomial(deg(rng), deg(rng), Rational(num(rng), den(rng)));
    return r;
}

TauSeries random_series(std::mt19937& rng, int L, bool unit_constant) {
    TauSeries s(L);
    for (int l = 0; l <= L; ++l) s[l] = random_poly(rng);
    if (unit_constant) s[0] = PolyQP(Rational(1));
    return s;
}

}  // namespace

TEST_CASE("poly_mul basics") {
    PolyQP q = PolyQP::q(), p = PolyQP::p();
    CHECK(poly_mul(q, p) == PolyQP::monomial(1, 1));
    CHECK(poly_mul(PolyQP(Rational(1)), PolyQP::monomial(2, 1)) == PolyQP::monomial(2, 1));
    CHECK(poly_mul(q + p, q - p) == PolyQP::monomial(2, 0) - PolyQP::monomial(0, 2));
}

TEST_CASE("poly_mul ring laws", "[property]") {
    std::mt19937 rng(20260809);
    for (int trial = 0; trial < 50; ++trial) {
        PolyQP a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("poly_diff basics and Leibniz") {
    CHECK(poly_diff(PolyQP::monomial(3, 0), Var::q) == PolyQP::monomial(2, 0, Rational(3)));
    CHECK(poly_diff(PolyQP::monomial(1, 1), Var::p) == PolyQP::q());
    CHECK(poly_diff(PolyQP::monomial(0, 2), Var::q).is_zero());

    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        PolyQP a = random_poly(rng), b = random_poly(rng);
        for (Var v : {Var::q, Var::p})
            CHECK((a * b).diff(v) == a.diff(v) * b + a * b.diff(v));
    }
}

TEST_CASE("series_mul truncation semantics") {
    TauSeries one_plus(2), one_minus(2);
    one_plus[0] = PolyQP(Rational(1));
    one_plus[1] = PolyQP(Rational(1));
    one_minus[0] = PolyQP(Rational(1));
    one_minus[1] = PolyQP(Rational(-1));
    TauSeries prod = series_mul(one_plus, one_minus);
    CHECK(prod[0] == PolyQP(Rational(1)));
    CHECK(prod[1].is_zero());
    CHECK(prod[2] == PolyQP(Rational(-1)));

    TauSeries pq(3);
    pq[0] = PolyQP::monomial(1, 1);
    TauSeries one(3);
    one[0] = PolyQP(Rational(1));
    CHECK(series_mul(pq, one) == pq);

    // tau * tau at L = 1 truncates to zero
    TauSeries tau(1);
    tau[1] = PolyQP(Rational(1));
    CHECK(series_mul(tau, tau).is_zero());

    TauSeries other_order(2);
    CHECK_THROWS_AS(series_mul(tau, other_order), std::invalid_argument);
}

TEST_CASE("series_sqrt examples") {
    TauSeries one(2);
    one[0] = PolyQP(Rational(1));
    CHECK(series_sqrt(one) == one);

    // sqrt(1 + 2 tau) = 1 + tau - tau^2/2 + ...
    TauSeries a(2);
    a[0] = PolyQP(Rational(1));
    a[1] = PolyQP(Rational(2));
    TauSeries s = series_sqrt(a);
    CHECK(s[0] == PolyQP(Rational(1)));
    CHECK(s[1] == PolyQP(Rational(1)));
    CHECK(s[2] == PolyQP(Rational(-1, 2)));

    // sqrt(1 + q tau^2) = 1 + (q/2) tau^2 at L = 2
    TauSeries b(2);
    b[0] = PolyQP(Rational(1));
    b[2] = PolyQP::q();
    TauSeries sb = series_sqrt(b);
    CHECK(sb[1].is_zero());
    CHECK(sb[2] == PolyQP::monomial(1, 0, Rational(1, 2)));

    TauSeries bad(2);
    bad[0] = PolyQP(Rational(2));
    CHECK_THROWS_AS(series_sqrt(bad), std::invalid_argument);
}

TEST_CASE("series_sqrt squares back", "[property]") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        TauSeries a = random_series(rng, 6, true);
        TauSeries s = series_sqrt(a);
        CHECK(s * s == a);
    }
}

TEST_CASE("series_inverse inverts", "[property]") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        TauSeries a = random_series(rng, 6, true);
        TauSeries inv = series_inverse(a);
        TauSeries one(6);
        one[0] = PolyQP(Rational(1));
        CHECK(a * inv == one);
    }
}

TEST_CASE("series_eval examples") {
    using cplx = std::complex<double>;
    TauSeries pq(2);
    pq[0] = PolyQP::monomial(1, 1);
    CHECK(series_eval(pq, cplx(2), cplx(3), cplx(100)) == cplx(6));

    TauSeries tau2(2);
    tau2[2] = PolyQP(Rational(1));
    CHECK(series_eval(tau2, cplx(0), cplx(0), cplx(0, 1)) == cplx(-1));

    // pq - p^2 tau / 2 at q=p=tau=1 -> 1/2
    TauSeries s(2);
    s[0] = PolyQP::monomial(1, 1);
    s[1] = PolyQP::monomial(0, 2, Rational(-1, 2));
    CHECK(series_eval(s, cplx(1), cplx(1), cplx(1)) == cplx(0.5));
}

TEST_CASE("series_eval is multiplicative", "[property]") {
    using cplx = std::complex<double>;
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        TauSeries a = random_series(rng, 3, false), b = random_series(rng, 3, false);
        // evaluate the product at tau=0 so truncation does not bite
        cplx q0(0.7, 0.1), p0(-0.4, 0.2);
        cplx lhs = series_eval(a * b, q0, p0, cplx(0));
        cplx rhs = series_eval(a, q0, p0, cplx(0)) * series_eval(b, q0, p0, cplx(0));
        CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("gaussian-rational series sqrt round trip") {
    std::mt19937 rng(5);
    TauSeries a = random_series(rng, 5, true);
    CTauSeries ca = a.cast<GaussianRational>();
    CHECK(series_sqrt(ca) * series_sqrt(ca) == ca);
}
