#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

#include "phasepath/jacobi.hpp"

namespace phasepath {

/// Short-time mode F_p = norm * prefactor * exp(i*phase/hbar), where
/// prefactor is the series of (d^2 J / dq dp)^{1/2} with the constant
/// (2 pi hbar)^{-1/2} tracked separately as norm_constant (symbolically;
/// numeric value via norm_value()). At tau = 0 the mode reduces to the
/// momentum eigenfunction (2 pi hbar)^{-1/2} exp(i p q / hbar).
struct Mode {
    TauSeries prefactor;
    TauSeries phase;
    Potential potential;

    double norm_value() const {
        return 1.0 / std::sqrt(2.0 * 3.14159265358979323846 * potential.hbar.to_double());
    }
};

inline Mode build_mode(const JacobiSeries& js) {
    TauSeries mixed = js.j.diff(Var::q).diff(Var::p);
    // series_sqrt validates the unit leading coefficient and throws otherwise.
    return {series_sqrt(mixed), js.j, js.potential};
}

/// Leading behaviour of the Schrodinger-equation defect of a mode, reported
/// as the ratio to F_p itself.
struct ResidualReport {
    /// Sentinel for a residual that vanishes through the whole computed range.
    static constexpr int kZeroThroughOrder = std::numeric_limits<int>::max();

    int leading_order = kZeroThroughOrder;
    PolyQP leading_coefficient;
    TauSeries full_residual;

    bool identically_zero() const { return leading_order == kZeroThroughOrder; }
};

/// (i hbar d_t + (hbar^2/2m) d_q^2 - V) F_p = R * F_p with
/// R = (hbar^2/2m) W^{-1} d_q^2 W,  W = prefactor.
/// The exponential cancels because the phase solves Hamilton-Jacobi, so R is
/// an exact rational series.
inline ResidualReport schrodinger_residual(const Mode& mode) {
    const Rational& m = mode.potential.mass;
    const Rational& hbar = mode.potential.hbar;
    Rational scale = hbar * hbar / (Rational(2) * m);

    TauSeries w_inv = series_inverse(mode.prefactor);
    TauSeries d2w = mode.prefactor.diff(Var::q).diff(Var::q);
    TauSeries residual = (w_inv * d2w) * scale;

    ResidualReport report{ResidualReport::kZeroThroughOrder, PolyQP(), residual};
    int lead = residual.leading_order();
    if (lead >= 0) {
        report.leading_order = lead;
        report.leading_coefficient = residual[lead];
    }
    return report;
}

/// Independent residual pipeline: applies i hbar d_t + (hbar^2/2m) d_q^2 - V
/// to W exp(iJ/hbar) by formal differentiation, divides by the formal
/// exponential, and subtracts R*W from schrodinger_residual. The difference
/// is returned truncated at order L-2 and must vanish exactly.
inline CTauSeries residual_direct_check(const Mode& mode, const Potential& pot) {
    const int L = mode.phase.order();
    if (L < 2) throw std::invalid_argument("residual_direct_check: order too small");

    const GaussianRational ih(Rational(0), pot.hbar);          // i*hbar
    const GaussianRational inv_m(Rational(1) / pot.mass);
    const GaussianRational half = GaussianRational(Rational(1, 2));
    const GaussianRational h2_2m(pot.hbar * pot.hbar / (Rational(2) * pot.mass));

    CTauSeries w = mode.prefactor.cast<GaussianRational>();
    CTauSeries j = mode.phase.cast<GaussianRational>();
    CPolyQP v = pot.v.cast<GaussianRational>();

    const int M = L - 1;  // tau-derivatives are exact only to order L-1
    CTauSeries wt = w.diff_tau();                    // order L-1
    CTauSeries jt = j.diff_tau();                    // order L-1
    CTauSeries wq = w.diff(Var::q).truncate(M);
    CTauSeries jq = j.diff(Var::q).truncate(M);
    CTauSeries wqq = w.diff(Var::q).diff(Var::q).truncate(M);
    CTauSeries jqq = j.diff(Var::q).diff(Var::q).truncate(M);
    CTauSeries wm = w.truncate(M);

    // (i hbar d_t + (hbar^2/2m) d_q^2 - V)[W e^{iJ/h}] / e^{iJ/h}
    CTauSeries bracket = ih * wt - wm * jt + h2_2m * wqq
                       + (ih * inv_m) * (wq * jq)
                       + (ih * inv_m * half) * (wm * jqq)
                       - (inv_m * half) * (jq * jq) * wm
                       - v * wm;

    TauSeries ratio = schrodinger_residual(mode).full_residual;
    CTauSeries target = ratio.cast<GaussianRational>().truncate(M) * wm;

    return (bracket - target).truncate(L - 2);
}

}  // namespace phasepath
