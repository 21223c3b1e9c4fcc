#pragma once

#include <complex>
#include <vector>

#include "invy/errors.hpp"

namespace invy {

using cplx = std::complex<double>;

// All frequencies (Rabi couplings, detunings, decay rates, grid offsets) are
// dimensionless multiples of the decay rate of level |2>. The CLI owns the
// single conversion constant used for axis labels.
inline constexpr double kDefaultGammaMHz = 6.0;

// Three coherent drives: omega12 couples |1>-|2>, omega24 couples |2>-|4>,
// omega23 couples |2>-|3>.  deltaN is the detuning of laser N.
struct DriveParameters {
    cplx omega12{0.0, 0.0};
    cplx omega24{0.0, 0.0};
    cplx omega23{0.0, 0.0};
    double delta1 = 0.0;
    double delta2 = 0.0;
    double delta3 = 0.0;

    bool resonant(double tol = 1e-12) const;
};

struct DecayRates {
    double gamma2 = 1.0;  // > 0, defines the frequency unit
    double gamma3 = 1.0;  // >= 0; zero turns |3> into a metastable level
};

// Bare-state amplitudes at t = 0.  |a1|^2+|a2|^2+|a3|^2+|a4|^2 must be 1.
struct InitialAmplitudes {
    cplx a1{0.0, 0.0};
    cplx a2{0.0, 0.0};
    cplx a3{0.0, 0.0};
    cplx a4{0.0, 0.0};

    double norm2() const;
};

struct Scenario {
    DriveParameters drive;
    DecayRates decay;
    InitialAmplitudes init;
};

// Checks finiteness, rate signs and the initial-state norm.  A norm off by
// more than 1e-9 is rejected; smaller drift is rescaled so the stored state
// satisfies the 1e-12 invariant.  Throws NonFiniteParameter, NegativeRate or
// NonNormalizedInitialState.
Scenario validate_scenario(const DriveParameters& drive, const DecayRates& decay,
                           const InitialAmplitudes& init);

enum class Channel { S2, S3 };

// Uniform grid of emission detunings (delta_k for S2, delta_q for S3).
struct SpectrumGrid {
    double delta_min = -10.0;
    double delta_max = 10.0;
    int n_points = 2001;

    double spacing() const { return (delta_max - delta_min) / (n_points - 1); }
    double at(int j) const { return delta_min + j * spacing(); }
};

// Throws Error unless delta_min < delta_max and n_points >= 2.
void check_grid(const SpectrumGrid& grid);

struct Spectrum {
    SpectrumGrid grid;
    Channel channel = Channel::S2;
    std::vector<double> values;
};

}  // namespace invy
