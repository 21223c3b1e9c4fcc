#include "invy/types.hpp"

#include <cmath>

namespace invy {

namespace {

bool finite(double x) { return std::isfinite(x); }
bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

bool DriveParameters::resonant(double tol) const {
    return std::abs(delta1) <= tol && std::abs(delta2) <= tol && std::abs(delta3) <= tol;
}

double InitialAmplitudes::norm2() const {
    return std::norm(a1) + std::norm(a2) + std::norm(a3) + std::norm(a4);
}

Scenario validate_scenario(const DriveParameters& drive, const DecayRates& decay,
                           const InitialAmplitudes& init) {
    if (!finite(drive.omega12) || !finite(drive.omega24) || !finite(drive.omega23) ||
        !finite(drive.delta1) || !finite(drive.delta2) || !finite(drive.delta3))
        throw NonFiniteParameter("drive parameters must be finite");
    if (!finite(decay.gamma2) || !finite(decay.gamma3))
        throw NonFiniteParameter("decay rates must be finite");
    if (!finite(init.a1) || !finite(init.a2) || !finite(init.a3) || !finite(init.a4))
        throw NonFiniteParameter("initial amplitudes must be finite");

    if (decay.gamma2 <= 0.0)
        throw NegativeRate("gamma2 must be > 0 (it sets the frequency unit)");
    if (decay.gamma3 < 0.0) throw NegativeRate("gamma3 must be >= 0");

    Scenario out{drive, decay, init};
    const double n2 = init.norm2();
    if (std::abs(n2 - 1.0) > 1e-9)
        throw NonNormalizedInitialState("initial state norm^2 = " + std::to_string(n2) +
                                        ", must equal 1");
    if (std::abs(n2 - 1.0) > 1e-12) {
        const double inv = 1.0 / std::sqrt(n2);
        out.init.a1 *= inv;
        out.init.a2 *= inv;
        out.init.a3 *= inv;
        out.init.a4 *= inv;
    }
    return out;
}

void check_grid(const SpectrumGrid& grid) {
    if (!std::isfinite(grid.delta_min) || !std::isfinite(grid.delta_max))
        throw Error("grid bounds must be finite");
    if (!(grid.delta_min < grid.delta_max))
        throw Error("grid requires delta_min < delta_max");
    if (grid.n_points < 2) throw Error("grid requires at least 2 points");
}

}  // namespace invy
