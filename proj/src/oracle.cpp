#include "invy/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "invy/resonant.hpp"

namespace invy {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kConvergedAmp = 1e-8;
const cplx kImag{0.0, 1.0};

using State = std::array<cplx, 4>;

struct SystemMatrix {
    // row-wise action of the (constant) evolution matrix
    cplx m12, m21, m22, m23, m24, m32, m33, m42, m44;

    explicit SystemMatrix(const Scenario& sc) {
        const auto& d = sc.drive;
        m12 = 0.5 * kImag * std::conj(d.omega12);
        m21 = 0.5 * kImag * d.omega12;
        m22 = cplx{-0.5 * sc.decay.gamma2, d.delta1};
        m23 = 0.5 * kImag * std::conj(d.omega23);
        m24 = 0.5 * kImag * d.omega24;
        m32 = 0.5 * kImag * d.omega23;
        m33 = cplx{-0.5 * sc.decay.gamma3, d.delta1 + d.delta3};
        m42 = 0.5 * kImag * std::conj(d.omega24);
        m44 = cplx{0.0, d.delta1 - d.delta2};
    }

    State apply(const State& c) const {
        return {m12 * c[1], m21 * c[0] + m22 * c[1] + m23 * c[2] + m24 * c[3],
                m32 * c[1] + m33 * c[2], m42 * c[1] + m44 * c[3]};
    }
};

State axpy(const State& a, double k, const State& b) {
    return {a[0] + k * b[0], a[1] + k * b[1], a[2] + k * b[2], a[3] + k * b[3]};
}

double norm2(const State& c) {
    return std::norm(c[0]) + std::norm(c[1]) + std::norm(c[2]) + std::norm(c[3]);
}

double stiffness_scale(const Scenario& sc) {
    return std::max({sc.decay.gamma2, sc.decay.gamma3, std::abs(sc.drive.omega12),
                     std::abs(sc.drive.omega24), std::abs(sc.drive.omega23),
                     std::abs(sc.drive.delta1), std::abs(sc.drive.delta2),
                     std::abs(sc.drive.delta3), 1.0});
}

Spectrum fill_from_trajectory(const AmplitudeTrajectory& traj, const SpectrumGrid& grid,
                              Channel channel, double shift, double prefactor,
                              const std::vector<cplx>& c, bool parallel) {
    check_grid(grid);
    Spectrum out;
    out.grid = grid;
    out.channel = channel;
    out.values.assign(static_cast<std::size_t>(grid.n_points), 0.0);

    const double h = traj.sample_dt;
    const std::size_t m = c.size();
    const int n = grid.n_points;
#pragma omp parallel for schedule(static) if (parallel)
    for (int j = 0; j < n; ++j) {
        const double phi = grid.at(j) - shift;
        const cplx rot = std::exp(cplx{0.0, phi * h});
        // trapezoid weights: half at both ends, the phase advanced by a
        // single rotation per sample
        cplx acc = 0.5 * c[0];
        cplx ph{1.0, 0.0};
        for (std::size_t t = 1; t + 1 < m; ++t) {
            ph *= rot;
            acc += ph * c[t];
        }
        if (m > 1) {
            ph *= rot;
            acc += 0.5 * ph * c[m - 1];
        }
        out.values[static_cast<std::size_t>(j)] = prefactor * std::norm(h * acc);
    }
    return out;
}

}  // namespace

double AmplitudeTrajectory::final_norm2() const {
    return std::norm(c1.back()) + std::norm(c2.back()) + std::norm(c3.back()) +
           std::norm(c4.back());
}

AmplitudeTrajectory integrate_amplitudes(const Scenario& sc, double t_end, double dt,
                                         int store_stride) {
    if (!(t_end > 0.0) || !(dt > 0.0)) throw Error("integration needs t_end > 0 and dt > 0");
    if (store_stride < 1) throw Error("store_stride must be >= 1");
    if (dt * stiffness_scale(sc) >= 0.1)
        throw StepTooLarge("dt * max(gamma, |Omega|, |delta|) must stay below 0.1");

    const SystemMatrix mat(sc);
    long n_steps = std::lround(std::ceil(t_end / dt));
    const long rem = n_steps % store_stride;
    if (rem != 0) n_steps += store_stride - rem;
    const long n_samples = n_steps / store_stride + 1;
    const double sample_dt = dt * store_stride;

    AmplitudeTrajectory traj;
    traj.sample_dt = sample_dt;
    traj.times.reserve(static_cast<std::size_t>(n_samples));
    traj.c1.reserve(static_cast<std::size_t>(n_samples));
    traj.c2.reserve(static_cast<std::size_t>(n_samples));
    traj.c3.reserve(static_cast<std::size_t>(n_samples));
    traj.c4.reserve(static_cast<std::size_t>(n_samples));

    State c{sc.init.a1, sc.init.a2, sc.init.a3, sc.init.a4};
    double prev_norm = norm2(c);
    auto store = [&](long sample_idx, const State& st) {
        traj.times.push_back(sample_idx * sample_dt);
        traj.c1.push_back(st[0]);
        traj.c2.push_back(st[1]);
        traj.c3.push_back(st[2]);
        traj.c4.push_back(st[3]);
        const double n = norm2(st);
        if (n > prev_norm + 1e-9)
            throw Error("total norm grew during integration; step too large for stability");
        prev_norm = n;
    };
    store(0, c);

    const double h = dt;
    for (long step = 1; step <= n_steps; ++step) {
        const State k1 = mat.apply(c);
        const State k2 = mat.apply(axpy(c, 0.5 * h, k1));
        const State k3 = mat.apply(axpy(c, 0.5 * h, k2));
        const State k4 = mat.apply(axpy(c, h, k3));
        for (std::size_t i = 0; i < 4; ++i)
            c[i] += (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        if (step % store_stride == 0) store(step / store_stride, c);
    }

    traj.c2_converged = std::abs(traj.c2.back()) < kConvergedAmp;
    traj.c3_converged = std::abs(traj.c3.back()) < kConvergedAmp;
    return traj;
}

Spectrum spectrum_from_trajectory(const AmplitudeTrajectory& traj, const Scenario& sc,
                                  const SpectrumGrid& grid, Channel channel) {
    if (channel == Channel::S2) {
        if (!traj.c2_converged) throw NotConverged("C2 has not decayed below 1e-8");
        return fill_from_trajectory(traj, grid, channel, sc.drive.delta1,
                                    sc.decay.gamma2 / kTwoPi, traj.c2, true);
    }
    if (!traj.c3_converged) throw NotConverged("C3 has not decayed below 1e-8");
    return fill_from_trajectory(traj, grid, channel, sc.drive.delta1 + sc.drive.delta3,
                                sc.decay.gamma3 / kTwoPi, traj.c3, true);
}

Spectrum spectrum_from_trajectory_serial(const AmplitudeTrajectory& traj, const Scenario& sc,
                                         const SpectrumGrid& grid, Channel channel) {
    if (channel == Channel::S2) {
        if (!traj.c2_converged) throw NotConverged("C2 has not decayed below 1e-8");
        return fill_from_trajectory(traj, grid, channel, sc.drive.delta1,
                                    sc.decay.gamma2 / kTwoPi, traj.c2, false);
    }
    if (!traj.c3_converged) throw NotConverged("C3 has not decayed below 1e-8");
    return fill_from_trajectory(traj, grid, channel, sc.drive.delta1 + sc.drive.delta3,
                                sc.decay.gamma3 / kTwoPi, traj.c3, false);
}

std::pair<double, double> trapped_population(const AmplitudeTrajectory& traj) {
    if (!traj.c2_converged || !traj.c3_converged)
        throw NotConverged("trapped populations need a fully decayed trajectory");
    return {std::norm(traj.c1.back()), std::norm(traj.c4.back())};
}

AmplitudeTrajectory oracle_trajectory(const Scenario& sc, double t_floor) {
    const double dt = 0.01 / stiffness_scale(sc);
    const int base_stride = std::max(1, static_cast<int>(std::floor(0.005 / dt)));

    double horizon = 150.0;
    if (sc.drive.resonant()) {
        // the cubic roots are the decay eigenvalues of the excited subsystem;
        // e^-25 leaves two orders of margin below the 1e-8 convergence gate
        const auto roots = cubic_roots(cubic_coefficients(sc.drive, sc.decay));
        double min_rate = 0.0;
        for (const auto& r : roots) {
            const double rate = std::abs(r.real());
            if (rate > 1e-9 && (min_rate == 0.0 || rate < min_rate)) min_rate = rate;
        }
        if (min_rate > 0.0) horizon = 25.0 / min_rate;
    }
    horizon = std::clamp(std::max(horizon, t_floor), 50.0, 20000.0);

    const bool await_c3 = sc.decay.gamma3 > 0.0;
    constexpr double cap = 20000.0;
    constexpr double max_samples = 2.0e6;  // keeps very long horizons bounded in memory
    for (;;) {
        int stride = base_stride;
        const double projected = horizon / (dt * stride);
        if (projected > max_samples)
            stride = static_cast<int>(std::ceil(horizon / (dt * max_samples)));
        AmplitudeTrajectory traj = integrate_amplitudes(sc, horizon, dt, stride);
        if (traj.c2_converged && (!await_c3 || traj.c3_converged)) return traj;
        if (horizon >= cap) return traj;
        horizon = std::min(2.0 * horizon, cap);
    }
}

Spectrum oracle_spectrum(const Scenario& sc, const SpectrumGrid& grid, Channel channel) {
    return spectrum_from_trajectory(oracle_trajectory(sc), sc, grid, channel);
}

}  // namespace invy
