#pragma once

#include "invy/rational.hpp"
#include "invy/types.hpp"

namespace invy {

// Laplace-domain amplitudes of the driven four-level system.  The closed
// forms are kept as pole-cleared polynomial ratios (numerator and denominator
// multiplied through by the inner-pole factors) so removable singularities --
// resonant drives, matching detunings, gamma3 = 0 -- evaluate finitely.

// \tilde C_2(s): cubic numerator over quartic denominator.
Rational c2_transform(const Scenario& sc);
// \tilde C_3(s): quartic numerator over quintic denominator.
Rational c3_transform(const Scenario& sc);

cplx evaluate_c2_tilde(cplx s, const Scenario& sc);
cplx evaluate_c3_tilde(cplx s, const Scenario& sc);

// Emission spectra sampled on the grid:
//   S2: values[j] = (gamma2/2pi) |C2~(-i(delta_j - delta1))|^2
//   S3: values[j] = (gamma3/2pi) |C3~(-i(delta_j - delta1 - delta3))|^2
// Grid points are independent; the default kernels run the loop with OpenMP.
// The _serial twins are the reference implementation kept for tests and
// benchmarks; results are bitwise identical.
Spectrum spectrum_s2(const SpectrumGrid& grid, const Scenario& sc);
Spectrum spectrum_s3(const SpectrumGrid& grid, const Scenario& sc);
Spectrum spectrum_s2_serial(const SpectrumGrid& grid, const Scenario& sc);
Spectrum spectrum_s3_serial(const SpectrumGrid& grid, const Scenario& sc);

}  // namespace invy
