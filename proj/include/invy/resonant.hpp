#pragma once

#include <array>

#include "invy/types.hpp"

namespace invy {

// Closed forms for the fully resonant drive (delta1 = delta2 = delta3 = 0):
// the characteristic cubic of the decaying subsystem, its roots, the
// partial-fraction weights of the triple-pole spectrum denominator and the
// spectral features they imply.

// Roots of the decay cubic and the partial-fraction weights of
// 1/prod_j(delta + i Lambda_j).  Ordering: the (most) real root first, then
// the conjugate pair with positive imaginary part second.  betas are only
// meaningful when degenerate == false.
struct CubicDecomposition {
    std::array<cplx, 3> roots{};
    std::array<cplx, 3> betas{};
    bool degenerate = false;  // some pair of roots closer than 1e-8*gamma2
    bool all_real = false;    // no conjugate pair
};

struct SpectralFeatures {
    double delta_lambda = 0.0;    // sideband offset, |Im Lambda2|
    double gamma_central = 0.0;   // |Re Lambda1|, half-width of the central line
    double gamma_sideband = 0.0;  // |Re Lambda2|, half-width of each sideband
    bool all_real = false;        // no conjugate pair: no sidebands to report
    bool resolved = false;        // delta_lambda > max(half-widths)
};

// Non-leading coefficients (c2, c1, c0) of the monic characteristic cubic
//   s^3 + c2 s^2 + c1 s + c0,
//   c2 = (gamma2+gamma3)/2
//   c1 = (|O12|^2+|O24|^2+|O23|^2+gamma2*gamma3)/4
//   c0 = (gamma3/2)(|O12|^2+|O24|^2)/4.
// Throws NotResonant when any detuning exceeds 1e-12.
std::array<double, 3> cubic_coefficients(const DriveParameters& drive, const DecayRates& decay);

// Numerically robust roots (trig/Cardano hybrid plus Newton polish).  A zero
// constant term yields an exact zero root, which keeps the gamma3 -> 0 limit
// sharp.  Real root first, conjugate pair (+Im) second.
std::array<cplx, 3> cubic_roots(const std::array<double, 3>& coeffs);

// Literal textbook Cardano evaluation (depressed cubic, y+- cube roots with
// the y+ y- = -p/3 pairing), kept as an independent cross-check of
// cubic_roots.  Branch choice is only unambiguous for positive discriminant.
std::array<cplx, 3> cardano_roots(const DriveParameters& drive, const DecayRates& decay);

// Weights such that 1/prod_j(x + i L_j) = sum_j beta_j/(x + i L_j).
// Throws DegenerateRoots when two roots are closer than `gap_tol`.
std::array<cplx, 3> partial_fractions(const std::array<cplx, 3>& roots, double gap_tol = 1e-8);

CubicDecomposition decompose(const DriveParameters& drive, const DecayRates& decay);

// Resonant S2 evaluated through the cubic roots; degenerate root sets fall
// back to direct polynomial-denominator evaluation and never fail for finite
// input.  Agrees with laplace::spectrum_s2 on resonant scenarios.
Spectrum resonant_spectrum_s2(const SpectrumGrid& grid, const Scenario& sc);
Spectrum resonant_spectrum_s2_serial(const SpectrumGrid& grid, const Scenario& sc);

// Sideband offset and half-widths from the roots.  all_real scenarios carry
// no sidebands and are flagged, not fatal.
SpectralFeatures spectral_features(const DriveParameters& drive, const DecayRates& decay);

// True when the ground-state superposition is stationary and decoupled:
// two-photon resonance, no excited amplitude, and O12 a1 + O24 a4 = 0.
bool dark_state_check(const DriveParameters& drive, const InitialAmplitudes& init);

// True when a1 = a4 = 0, which pins S2(0) = 0 exactly for resonant drives.
bool dark_line_check(const InitialAmplitudes& init);

}  // namespace invy
