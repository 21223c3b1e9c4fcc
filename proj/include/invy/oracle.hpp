#pragma once

#include <utility>
#include <vector>

#include "invy/types.hpp"

namespace invy {

// Independent ground truth: fixed-step 4th-order integration of the coupled
// amplitude equations in the rotated frame,
//   C1' = i O12*/2 C2
//   C2' = (i d1 - g2/2) C2 + i O12/2 C1 + i O23*/2 C3 + i O24/2 C4
//   C3' = (i(d1+d3) - g3/2) C3 + i O23/2 C2
//   C4' = i(d1-d2) C4 + i O24*/2 C2
// followed by direct Fourier quadrature of the stored trajectory.

struct AmplitudeTrajectory {
    double sample_dt = 0.0;  // spacing of the stored samples
    std::vector<double> times;
    std::vector<cplx> c1, c2, c3, c4;
    bool c2_converged = false;  // |C2| fell below 1e-8 at the end
    bool c3_converged = false;

    double final_norm2() const;
};

// Integrates over [0, ~t_end] with step dt, storing every store_stride-th
// step (endpoints always included).  Throws StepTooLarge when
// dt * max(gamma, |Omega|, |delta|) >= 0.1 and Error if the stored norm ever
// grows by more than 1e-9 between samples.
AmplitudeTrajectory integrate_amplitudes(const Scenario& sc, double t_end, double dt,
                                         int store_stride = 1);

// Trapezoidal Fourier reconstruction of the emission spectrum:
//   S2: (gamma2/2pi) |int e^{i(delta_j - d1) t} C2(t) dt|^2
//   S3: (gamma3/2pi) |int e^{i(delta_j - d1 - d3) t} C3(t) dt|^2
// Requires the relevant amplitude to have decayed (NotConverged otherwise).
// Grid points are independent; the default kernel parallelizes over them and
// the _serial twin is the bitwise-identical reference.
Spectrum spectrum_from_trajectory(const AmplitudeTrajectory& traj, const Scenario& sc,
                                  const SpectrumGrid& grid, Channel channel);
Spectrum spectrum_from_trajectory_serial(const AmplitudeTrajectory& traj, const Scenario& sc,
                                         const SpectrumGrid& grid, Channel channel);

// (|C1|^2, |C4|^2) at the end of a converged trajectory.
std::pair<double, double> trapped_population(const AmplitudeTrajectory& traj);

// Picks the step from the stiffness scale and extends the horizon (doubling,
// starting from the resonant decay rates when available) until the excited
// amplitudes have decayed.  gamma3 = 0 scenarios legitimately trap population
// in |3>; C3 convergence is then not awaited.
AmplitudeTrajectory oracle_trajectory(const Scenario& sc, double t_floor = 0.0);

// One-call oracle spectrum via oracle_trajectory.
Spectrum oracle_spectrum(const Scenario& sc, const SpectrumGrid& grid, Channel channel);

}  // namespace invy
