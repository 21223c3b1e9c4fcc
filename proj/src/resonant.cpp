#include "invy/resonant.hpp"

#include <algorithm>
#include <cmath>

#include "invy/rational.hpp"

namespace invy {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
const cplx kImag{0.0, 1.0};

cplx horner_real(const std::array<double, 3>& k, cplx s) {
    // monic cubic s^3 + c2 s^2 + c1 s + c0
    return ((s + k[0]) * s + k[1]) * s + k[2];
}

cplx horner_real_deriv(const std::array<double, 3>& k, cplx s) {
    return (3.0 * s + 2.0 * k[0]) * s + k[1];
}

void newton_polish(const std::array<double, 3>& k, cplx& x) {
    for (int it = 0; it < 2; ++it) {
        const cplx d = horner_real_deriv(k, x);
        if (std::abs(d) < 1e-300) return;
        x -= horner_real(k, x) / d;
    }
}

// Stable roots of s^2 + b s + c with real b, c.
std::pair<cplx, cplx> quadratic_roots(double b, double c) {
    const double disc = b * b - 4.0 * c;
    if (disc >= 0.0) {
        const double r = std::sqrt(disc);
        const double u = -0.5 * (b + (b >= 0.0 ? r : -r));
        if (u == 0.0) return {cplx{0.0, 0.0}, cplx{0.0, 0.0}};
        return {cplx{u, 0.0}, cplx{c / u, 0.0}};
    }
    const double im = 0.5 * std::sqrt(-disc);
    return {cplx{-0.5 * b, im}, cplx{-0.5 * b, -im}};
}

// Order: most-real root first; conjugate pair symmetrized with +Im second.
// All-real sets are sorted by descending real part.
std::array<cplx, 3> canonicalize(std::array<cplx, 3> r, bool* all_real_out) {
    std::size_t real_idx = 0;
    for (std::size_t i = 1; i < 3; ++i)
        if (std::abs(r[i].imag()) < std::abs(r[real_idx].imag())) real_idx = i;
    std::swap(r[0], r[real_idx]);
    r[0] = cplx{r[0].real(), 0.0};

    const double scale = std::max({1.0, std::abs(r[0]), std::abs(r[1]), std::abs(r[2])});
    const bool pair = std::max(std::abs(r[1].imag()), std::abs(r[2].imag())) > 1e-12 * scale;
    if (pair) {
        const double re = 0.5 * (r[1].real() + r[2].real());
        const double im = 0.5 * (std::abs(r[1].imag()) + std::abs(r[2].imag()));
        r[1] = cplx{re, im};
        r[2] = cplx{re, -im};
    } else {
        r[1] = cplx{r[1].real(), 0.0};
        r[2] = cplx{r[2].real(), 0.0};
        std::sort(r.begin(), r.end(),
                  [](cplx a, cplx b) { return a.real() > b.real(); });
    }
    if (all_real_out) *all_real_out = !pair;
    return r;
}

// Numerator of the resonant C2~ after the common factor s is cancelled:
//   n2(s) = a2 s (s + gamma3/2) + (i O12 a1/2 + i O24 a4/2)(s + gamma3/2)
//           + (i O23* a3/2) s
Poly resonant_numerator(const Scenario& sc) {
    const cplx b = 0.5 * kImag * (sc.drive.omega12 * sc.init.a1 + sc.drive.omega24 * sc.init.a4);
    const cplx b3 = 0.5 * kImag * std::conj(sc.drive.omega23) * sc.init.a3;
    const double hg3 = 0.5 * sc.decay.gamma3;
    return Poly{{b * hg3, sc.init.a2 * hg3 + b + b3, sc.init.a2}};
}

Spectrum fill_resonant(const SpectrumGrid& grid, const Scenario& sc, bool parallel) {
    check_grid(grid);
    const auto coeffs = cubic_coefficients(sc.drive, sc.decay);
    const auto dec = decompose(sc.drive, sc.decay);
    const Poly num = resonant_numerator(sc);
    const Rational fallback{num, Poly{{cplx{coeffs[2], 0.0}, cplx{coeffs[1], 0.0},
                                       cplx{coeffs[0], 0.0}, cplx{1.0, 0.0}}}};
    const double pref = sc.decay.gamma2 / kTwoPi;

    Spectrum out;
    out.grid = grid;
    out.channel = Channel::S2;
    out.values.assign(static_cast<std::size_t>(grid.n_points), 0.0);

    const int n = grid.n_points;
#pragma omp parallel for schedule(static) if (parallel)
    for (int j = 0; j < n; ++j) {
        const cplx s{0.0, -grid.at(j)};
        cplx v;
        if (dec.degenerate) {
            v = fallback.eval(s);
        } else {
            const cplx den = (s - dec.roots[0]) * (s - dec.roots[1]) * (s - dec.roots[2]);
            const PolyEval nv = eval_with_scale(num, s);
            if (std::abs(den) == 0.0 || std::abs(nv.value) == 0.0) {
                // 0/0 only occurs at s = 0 when a root sits at the origin
                // (gamma3 = 0); the shared rational evaluator takes the limit.
                v = fallback.eval(s);
            } else {
                v = nv.value / den;
            }
        }
        out.values[static_cast<std::size_t>(j)] = pref * std::norm(v);
    }
    return out;
}

}  // namespace

std::array<double, 3> cubic_coefficients(const DriveParameters& drive, const DecayRates& decay) {
    if (!drive.resonant())
        throw NotResonant("cubic coefficients require delta1 = delta2 = delta3 = 0");
    const double o12 = std::norm(drive.omega12);
    const double o24 = std::norm(drive.omega24);
    const double o23 = std::norm(drive.omega23);
    return {0.5 * (decay.gamma2 + decay.gamma3),
            0.25 * (o12 + o24 + o23 + decay.gamma2 * decay.gamma3),
            0.5 * decay.gamma3 * 0.25 * (o12 + o24)};
}

std::array<cplx, 3> cubic_roots(const std::array<double, 3>& k) {
    const double c2 = k[0], c1 = k[1], c0 = k[2];
    std::array<cplx, 3> r;

    if (c0 == 0.0) {
        // exact zero root; the rest is a real quadratic
        auto [r1, r2] = quadratic_roots(c2, c1);
        r = {cplx{0.0, 0.0}, r1, r2};
    } else {
        const double p = c1 - c2 * c2 / 3.0;
        const double q = c0 - c2 * c1 / 3.0 + 2.0 * c2 * c2 * c2 / 27.0;
        const double shift = -c2 / 3.0;
        const double disc = 0.25 * q * q + p * p * p / 27.0;
        if (disc > 0.0) {
            // one real root + conjugate pair; pick the large cube root to
            // avoid cancellation
            const double sq = std::sqrt(disc);
            const double big = -0.5 * q + (q <= 0.0 ? sq : -sq);
            const double a = std::cbrt(big);
            const double b = (a == 0.0) ? 0.0 : -p / (3.0 * a);
            const double t1 = a + b;
            const double im = 0.5 * std::sqrt(3.0) * (a - b);
            r = {cplx{t1 + shift, 0.0}, cplx{-0.5 * t1 + shift, im}, cplx{-0.5 * t1 + shift, -im}};
        } else {
            // three real roots (p < 0 here)
            const double m = 2.0 * std::sqrt(-p / 3.0);
            const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
            const double theta = std::acos(arg) / 3.0;
            for (int i = 0; i < 3; ++i)
                r[static_cast<std::size_t>(i)] =
                    cplx{m * std::cos(theta - kTwoPi * i / 3.0) + shift, 0.0};
        }
        for (auto& x : r) newton_polish(k, x);
    }
    return canonicalize(r, nullptr);
}

std::array<cplx, 3> cardano_roots(const DriveParameters& drive, const DecayRates& decay) {
    const double o12 = std::norm(drive.omega12);
    const double o24 = std::norm(drive.omega24);
    const double o23 = std::norm(drive.omega23);
    const double g2 = decay.gamma2, g3 = decay.gamma3;
    const double sum = 0.25 * (o12 + o24 + o23 + g2 * g3);
    const double third = (g2 + g3) / 6.0;

    const double p = sum - (g2 + g3) * (g2 + g3) / 12.0;
    const double q = -third * sum + 0.5 * g3 * 0.25 * (o12 + o24) + 2.0 * third * third * third;
    const double disc = 0.25 * q * q + p * p * p / 27.0;

    cplx yp, ym;
    if (disc >= 0.0) {
        const double sq = std::sqrt(disc);
        yp = cplx{std::cbrt(-0.5 * q + sq), 0.0};
        ym = cplx{std::cbrt(-0.5 * q - sq), 0.0};
    } else {
        yp = std::pow(cplx{-0.5 * q, std::sqrt(-disc)}, 1.0 / 3.0);
        ym = (std::abs(yp) == 0.0) ? cplx{0.0, 0.0} : -p / (3.0 * yp);
    }

    const cplx s = yp + ym;
    const cplx d = 0.5 * std::sqrt(3.0) * kImag * (yp - ym);
    return {s - third, -0.5 * s - third + d, -0.5 * s - third - d};
}

std::array<cplx, 3> partial_fractions(const std::array<cplx, 3>& roots, double gap_tol) {
    const double scale =
        std::max({1.0, std::abs(roots[0]), std::abs(roots[1]), std::abs(roots[2])});
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            if (std::abs(roots[i] - roots[j]) <= gap_tol * scale)
                throw DegenerateRoots("partial fractions need pairwise distinct roots");

    std::array<cplx, 3> betas;
    for (std::size_t i = 0; i < 3; ++i) {
        cplx prod{1.0, 0.0};
        for (std::size_t j = 0; j < 3; ++j)
            if (j != i) prod *= kImag * (roots[j] - roots[i]);
        betas[i] = 1.0 / prod;
    }
    return betas;
}

CubicDecomposition decompose(const DriveParameters& drive, const DecayRates& decay) {
    CubicDecomposition out;
    out.roots = cubic_roots(cubic_coefficients(drive, decay));
    const double scale = std::max({1.0, std::abs(out.roots[0]), std::abs(out.roots[1]),
                                   std::abs(out.roots[2])});
    out.all_real = std::abs(out.roots[1].imag()) <= 1e-12 * scale;
    try {
        out.betas = partial_fractions(out.roots, 1e-8 * std::max(1.0, decay.gamma2));
    } catch (const DegenerateRoots&) {
        out.degenerate = true;
    }
    return out;
}

Spectrum resonant_spectrum_s2(const SpectrumGrid& grid, const Scenario& sc) {
    return fill_resonant(grid, sc, true);
}

Spectrum resonant_spectrum_s2_serial(const SpectrumGrid& grid, const Scenario& sc) {
    return fill_resonant(grid, sc, false);
}

SpectralFeatures spectral_features(const DriveParameters& drive, const DecayRates& decay) {
    const auto dec = decompose(drive, decay);
    SpectralFeatures f;
    f.all_real = dec.all_real;
    f.gamma_central = std::abs(dec.roots[0].real());
    f.gamma_sideband = std::abs(dec.roots[1].real());
    f.delta_lambda = dec.all_real ? 0.0 : std::abs(dec.roots[1].imag());
    f.resolved = !dec.all_real && f.delta_lambda > std::max(f.gamma_central, f.gamma_sideband);
    return f;
}

bool dark_state_check(const DriveParameters& drive, const InitialAmplitudes& init) {
    constexpr double tol = 1e-12;
    if (std::abs(drive.delta1 - drive.delta2) > tol) return false;  // two-photon resonance
    if (std::abs(init.a2) > tol || std::abs(init.a3) > tol) return false;
    return std::abs(drive.omega12 * init.a1 + drive.omega24 * init.a4) < tol;
}

bool dark_line_check(const InitialAmplitudes& init) {
    constexpr double tol = 1e-12;
    return std::abs(init.a1) <= tol && std::abs(init.a4) <= tol;
}

}  // namespace invy
