#pragma once

// Shared helpers for the test and acceptance binaries: scenario builders,
// deterministic random draws, independent Fourier quadrature, peak location
// and width measurement on sampled spectra.

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "invy/oracle.hpp"
#include "invy/types.hpp"

namespace testkit {

using invy::Channel;
using invy::cplx;
using invy::Scenario;
using invy::Spectrum;
using invy::SpectrumGrid;

inline Scenario make_scenario(cplx o12, cplx o24, cplx o23, double d1, double d2, double d3,
                              double g2, double g3, cplx a1, cplx a2, cplx a3, cplx a4) {
    invy::DriveParameters dr;
    dr.omega12 = o12;
    dr.omega24 = o24;
    dr.omega23 = o23;
    dr.delta1 = d1;
    dr.delta2 = d2;
    dr.delta3 = d3;
    return invy::validate_scenario(dr, {g2, g3}, {a1, a2, a3, a4});
}

inline Scenario resonant_scenario(double o12, double o24, double o23, double g3, cplx a1,
                                  cplx a2, cplx a3, cplx a4) {
    return make_scenario(o12, o24, o23, 0.0, 0.0, 0.0, 1.0, g3, a1, a2, a3, a4);
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    }
    cplx phase_complex(double mag) {
        const double ph = uniform(0.0, 2.0 * 3.14159265358979323846);
        return mag * cplx{std::cos(ph), std::sin(ph)};
    }
    cplx ball() { return {uniform(-1.0, 1.0), uniform(-1.0, 1.0)}; }

    // normalized 4-level state; `ground_only` keeps a2 = a3 = 0
    std::array<cplx, 4> state(bool ground_only) {
        std::array<cplx, 4> a{ball(), ground_only ? cplx{} : ball(),
                              ground_only ? cplx{} : ball(), ball()};
        double n = 0.0;
        for (const auto& z : a) n += std::norm(z);
        const double inv = 1.0 / std::sqrt(n);
        for (auto& z : a) z *= inv;
        return a;
    }
};

// Plain trapezoid Fourier transform of one stored amplitude, independent of
// the library's rotation-recurrence kernel.
inline cplx fourier_at(const invy::AmplitudeTrajectory& traj, const std::vector<cplx>& c,
                       double phi) {
    const double h = traj.sample_dt;
    cplx acc{0.0, 0.0};
    for (std::size_t t = 0; t < c.size(); ++t) {
        const cplx w = std::exp(cplx{0.0, phi * traj.times[t]});
        const double weight = (t == 0 || t + 1 == c.size()) ? 0.5 : 1.0;
        acc += weight * w * c[t];
    }
    return h * acc;
}

inline double peak_value(const Spectrum& s) {
    return *std::max_element(s.values.begin(), s.values.end());
}

// Deviation between two spectra on the same grid, normalized by the larger
// peak so identically-zero spectra compare cleanly.
inline double normalized_deviation(const Spectrum& a, const Spectrum& b) {
    const double peak = std::max({peak_value(a), peak_value(b), 1e-300});
    double worst = 0.0;
    for (std::size_t j = 0; j < a.values.size(); ++j)
        worst = std::max(worst, std::abs(a.values[j] - b.values[j]));
    return worst / peak;
}

// Indices of strict interior local maxima.
inline std::vector<int> local_maxima(const Spectrum& s) {
    std::vector<int> out;
    for (int j = 1; j + 1 < static_cast<int>(s.values.size()); ++j)
        if (s.values[j] > s.values[j - 1] && s.values[j] > s.values[j + 1]) out.push_back(j);
    return out;
}

// Sub-grid peak position via parabolic interpolation through the sample
// triple around index j.
inline double refine_peak(const Spectrum& s, int j) {
    if (j <= 0 || j + 1 >= static_cast<int>(s.values.size())) return s.grid.at(j);
    const double ym = s.values[j - 1], y0 = s.values[j], yp = s.values[j + 1];
    const double denom = ym - 2.0 * y0 + yp;
    if (denom == 0.0) return s.grid.at(j);
    const double off = 0.5 * (ym - yp) / denom;
    return s.grid.at(j) + off * s.grid.spacing();
}

// Location of the local maximum closest to `target`, parabolic-refined;
// NaN when the spectrum has no interior maxima.
inline double nearest_peak(const Spectrum& s, double target) {
    const auto peaks = local_maxima(s);
    if (peaks.empty()) return std::nan("");
    int best = peaks.front();
    for (int j : peaks)
        if (std::abs(s.grid.at(j) - target) < std::abs(s.grid.at(best) - target)) best = j;
    return refine_peak(s, best);
}

// Full width at half maximum of the peak nearest delta = 0, by linear
// interpolation of the half-max crossings.
inline double central_fwhm(const Spectrum& s) {
    const int n = static_cast<int>(s.values.size());
    int c = 0;
    for (int j = 0; j < n; ++j)
        if (std::abs(s.grid.at(j)) < std::abs(s.grid.at(c))) c = j;
    const double half = 0.5 * s.values[c];
    int lo = c, hi = c;
    while (lo > 0 && s.values[lo] > half) --lo;
    while (hi + 1 < n && s.values[hi] > half) ++hi;
    auto cross = [&](int a, int b) {
        const double ya = s.values[a], yb = s.values[b];
        if (ya == yb) return s.grid.at(a);
        return s.grid.at(a) + (half - ya) / (yb - ya) * (s.grid.at(b) - s.grid.at(a));
    };
    return cross(hi - 1, hi) - cross(lo + 1, lo);
}

// Trapezoid integral of a sampled spectrum over its grid.
inline double integrate(const Spectrum& s) {
    double acc = 0.0;
    for (std::size_t j = 0; j + 1 < s.values.size(); ++j)
        acc += 0.5 * (s.values[j] + s.values[j + 1]);
    return acc * s.grid.spacing();
}

}  // namespace testkit
