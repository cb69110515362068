#pragma once

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "phasepath/series.hpp"

namespace phasepath {

/// One-dimensional conservative system H = p^2/2m + V(q) with polynomial V.
/// Mass and hbar are exact rational parameters fixed at construction.
struct Potential {
    PolyQP v;
    Rational mass;
    Rational hbar;

    Potential(PolyQP v_, Rational mass_, Rational hbar_ = Rational(1))
        : v(std::move(v_)), mass(std::move(mass_)), hbar(std::move(hbar_)) {
        if (v.deg_p() > 0) throw std::invalid_argument("Potential: V must not depend on p");
        if (!(mass > Rational(0))) throw std::invalid_argument("Potential: mass must be positive");
        if (!(hbar > Rational(0))) throw std::invalid_argument("Potential: hbar must be positive");
    }

    /// V as a polynomial in q from (degree, coefficient) pairs.
    static Potential from_coeffs(const std::vector<std::pair<int, Rational>>& coeffs,
                                 Rational mass_, Rational hbar_ = Rational(1)) {
        PolyQP v;
        for (const auto& [deg, c] : coeffs) v += PolyQP::monomial(deg, 0, c);
        return Potential(std::move(v), std::move(mass_), std::move(hbar_));
    }

    PolyQP hamiltonian() const {
        return PolyQP::monomial(0, 2, Rational(1) / (Rational(2) * mass)) + v;
    }
};

/// Taylor series in tau of the mixed-boundary generating function
/// J(q, p, tau). Coefficient conventions:
///   tau^0 : p q            (identity generator at zero elapsed time)
///   tau^1 : -p^2/2m - V(q) (minus the full Hamiltonian; the kinetic piece
///                           is absorbed here rather than displayed apart)
struct JacobiSeries {
    TauSeries j;
    Potential potential;
};

/// Solves d(J)/dtau + (1/2m)(dJ/dq)^2 + V = 0 order by order.
///
/// The tau^1 coefficient is set to -H directly; the recurrence
///   J_{l+1} = -[2(l+1)m]^{-1} sum_{k=0..l} (dJ_k/dq)(dJ_{l-k}/dq),  l >= 1
/// then generates all higher coefficients. Running the sum at l = 0 would
/// reproduce only the kinetic part of J_1, so the l = 0 step is the explicit
/// initialization, not a sum instance.
inline JacobiSeries compute_jacobi_series(const Potential& pot, int L) {
    if (L < 1) throw std::invalid_argument("compute_jacobi_series: L must be >= 1");
    TauSeries j(L);
    j[0] = PolyQP::monomial(1, 1);  // p q
    j[1] = -pot.hamiltonian();

    std::vector<PolyQP> dq(L + 1);
    dq[0] = j[0].diff(Var::q);
    dq[1] = j[1].diff(Var::q);

    const Rational m = pot.mass;
    for (int l = 1; l < L; ++l) {
        PolyQP acc;
        for (int k = 0; k <= l; ++k) acc += dq[k] * dq[l - k];
        Rational factor = Rational(-1) / (Rational(2) * Rational(l + 1) * m);
        j[l + 1] = acc * factor;
        dq[l + 1] = j[l + 1].diff(Var::q);
    }
    return {std::move(j), pot};
}

/// Residual of the Hamilton-Jacobi equation, dJ/dtau + (1/2m)(dJ/dq)^2 + V,
/// as an exact series of truncation order L-1. Zero for a series produced
/// by compute_jacobi_series.
inline TauSeries hj_residual(const JacobiSeries& js) {
    const int L = js.j.order();
    TauSeries dt = js.j.diff_tau();                       // order L-1
    TauSeries dq = js.j.diff(Var::q).truncate(L - 1);     // order L-1
    Rational inv2m = Rational(1) / (Rational(2) * js.potential.mass);
    TauSeries r = dt + (dq * dq) * inv2m;
    r[0] += js.potential.v;
    return r;
}

namespace detail {

/// Maclaurin coefficients of tan(x) and sec(x) to order n, generated from
/// tan' = 1 + tan^2 and sec' = sec*tan in exact rationals.
inline std::pair<std::vector<Rational>, std::vector<Rational>> tan_sec_coeffs(int n) {
    std::vector<Rational> t(n + 1, Rational(0)), s(n + 1, Rational(0));
    s[0] = Rational(1);
    for (int k = 0; k < n; ++k) {
        Rational tsq(0), st(0);
        for (int i = 0; i <= k; ++i) {
            tsq += t[i] * t[k - i];
            st += s[i] * t[k - i];
        }
        if (k == 0) tsq += Rational(1);
        t[k + 1] = tsq / Rational(k + 1);
        s[k + 1] = st / Rational(k + 1);
    }
    return {std::move(t), std::move(s)};
}

}  // namespace detail

/// Jacobi series of the harmonic oscillator V = m w^2 q^2 / 2 from its
/// closed form -p^2 tan(wt)/(2mw) + qp/cos(wt) - mw q^2 tan(wt)/2,
/// tau-expanded with exact rational coefficients.
inline JacobiSeries harmonic_closed_form(const Rational& m, const Rational& omega, int L,
                                         const Rational& hbar = Rational(1)) {
    auto [t, s] = detail::tan_sec_coeffs(L);

    TauSeries j(L);
    const PolyQP p2 = PolyQP::monomial(0, 2);
    const PolyQP qp = PolyQP::monomial(1, 1);
    const PolyQP q2 = PolyQP::monomial(2, 0);
    const Rational half(1, 2);

    for (int n = 0; n <= L; ++n) {
        PolyQP c;
        // tan(w tau)/w contributes w^{n-1} t_n; t_0 = 0 keeps this rational.
        if (n >= 1 && !t[n].is_zero()) {
            Rational tan_over_omega = t[n] * omega.pow(n - 1);
            c -= p2 * (tan_over_omega / (Rational(2) * m));
            c -= q2 * (half * m * omega.pow(n + 1) * t[n]);
        }
        if (!s[n].is_zero()) c += qp * (s[n] * omega.pow(n));
        j[n] = c;
    }

    PolyQP v = PolyQP::monomial(2, 0, half * m * omega * omega);
    return {std::move(j), Potential(std::move(v), m, hbar)};
}

/// Difference between the terms of leading p-degree in the Jacobi series and
/// their closed-form resummation (m/p) * integral_q^{q - p tau/m} V dq,
/// i.e. -sum_l (1/l!)(-p/m)^{l-1} V^{(l-1)}(q) tau^l. The tau^l coefficient
/// of J carries its highest momentum content at p-degree l-1 once the
/// kinetic term is set aside; the difference series must vanish identically.
inline TauSeries resummation_check(const Potential& pot, int L) {
    JacobiSeries js = compute_jacobi_series(pot, L);
    const Rational m = pot.mass;

    TauSeries diff(L);
    PolyQP v_deriv = pot.v;  // V^{(l-1)} at l = 1
    Rational factorial(1);
    for (int l = 1; l <= L; ++l) {
        PolyQP coeff = js.j[l];
        if (l == 1) coeff += PolyQP::monomial(0, 2, Rational(1) / (Rational(2) * m));
        PolyQP lhs = coeff.slice_deg_p(l - 1);

        factorial *= Rational(l);
        Rational scale = -(Rational(-1) / m).pow(l - 1) / factorial;
        PolyQP rhs = PolyQP::monomial(0, l - 1, scale) * v_deriv;

        diff[l] = lhs - rhs;
        v_deriv = v_deriv.diff(Var::q);
    }
    return diff;
}

/// Checks that the two-sided phase J(q'', p, +eps/2) - J(q', p, -eps/2)
/// reproduces p*(q''-q') at order eps^0 and -[H(q'',p)+H(q',p)]/2 at order
/// eps^1. Polynomial identity testing at exact rational sample points.
inline bool swap_relation_check(const JacobiSeries& js) {
    const PolyQP H = js.potential.hamiltonian();
    const Rational half(1, 2);

    const std::vector<std::array<Rational, 3>> samples = {
        {Rational(1), Rational(2), Rational(3)},
        {Rational(1, 2), Rational(-1, 3), Rational(5, 7)},
        {Rational(0), Rational(1), Rational(-2)},
        {Rational(3, 2), Rational(3, 2), Rational(1, 5)},
        {Rational(-7, 4), Rational(2, 9), Rational(11, 6)},
    };

    for (const auto& [q2, q1, p0] : samples) {
        // eps^0: J_0(q'') - J_0(q') == p (q'' - q')
        Rational lhs0 = js.j[0].eval_exact(q2, p0) - js.j[0].eval_exact(q1, p0);
        if (lhs0 != p0 * (q2 - q1)) return false;
        // eps^1: [J_1(q'') + J_1(q')]/2 == -[H(q'') + H(q')]/2
        Rational lhs1 = (js.j[1].eval_exact(q2, p0) + js.j[1].eval_exact(q1, p0)) * half;
        Rational rhs1 = -(H.eval_exact(q2, p0) + H.eval_exact(q1, p0)) * half;
        if (lhs1 != rhs1) return false;
    }
    return true;
}

}  // namespace phasepath
