#include "invy/laplace.hpp"

#include <cmath>

namespace invy {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
const cplx kImag{0.0, 1.0};

// Inner poles of the coupled system seen from C2: the C1 channel contributes
// s = 0, the C4 channel s = i(delta1 - delta2), the C3 channel
// s = i(delta1 + delta3) - gamma3/2.
struct InnerPoles {
    cplx q1, q4, q3;
};

InnerPoles inner_poles(const Scenario& sc) {
    return {cplx{0.0, 0.0}, cplx{0.0, sc.drive.delta1 - sc.drive.delta2},
            cplx{-0.5 * sc.decay.gamma3, sc.drive.delta1 + sc.drive.delta3}};
}

Poly linear(cplx root) { return Poly{{-root, cplx{1.0, 0.0}}}; }

double spectrum_value(const Rational& r, cplx s, double prefactor, std::size_t j) {
    const cplx v = r.eval(s, j);
    return prefactor * std::norm(v);
}

Spectrum fill_spectrum(const Rational& r, const SpectrumGrid& grid, Channel channel, double shift,
                       double prefactor, bool parallel) {
    check_grid(grid);
    Spectrum out;
    out.grid = grid;
    out.channel = channel;
    out.values.assign(static_cast<std::size_t>(grid.n_points), 0.0);

    std::size_t bad = SingularEvaluation::kNoIndex;
    const int n = grid.n_points;
#pragma omp parallel for schedule(static) if (parallel)
    for (int j = 0; j < n; ++j) {
        const cplx s{0.0, -(grid.at(j) - shift)};
        try {
            out.values[static_cast<std::size_t>(j)] =
                spectrum_value(r, s, prefactor, static_cast<std::size_t>(j));
        } catch (const SingularEvaluation&) {
#pragma omp critical
            if (bad == SingularEvaluation::kNoIndex || static_cast<std::size_t>(j) < bad)
                bad = static_cast<std::size_t>(j);
        }
    }
    if (bad != SingularEvaluation::kNoIndex)
        throw SingularEvaluation("spectrum evaluation hit a pole at grid index " +
                                     std::to_string(bad),
                                 bad);
    return out;
}

}  // namespace

Rational c2_transform(const Scenario& sc) {
    const auto& dr = sc.drive;
    const auto& in = sc.init;
    const auto [q1, q4, q3] = inner_poles(sc);

    const cplx b1 = 0.5 * kImag * dr.omega12 * in.a1;
    const cplx b3 = 0.5 * kImag * std::conj(dr.omega23) * in.a3;
    const cplx b4 = 0.5 * kImag * dr.omega24 * in.a4;
    const double g1 = 0.25 * std::norm(dr.omega12);
    const double g3 = 0.25 * std::norm(dr.omega23);
    const double g4 = 0.25 * std::norm(dr.omega24);

    const Poly l1 = linear(q1);
    const Poly l4 = linear(q4);
    const Poly l3 = linear(q3);
    const Poly l43 = l4 * l3;
    const Poly l14 = l1 * l4;
    const Poly l13 = l1 * l3;
    const Poly p = l1 * l43;

    // base(s) = s + gamma2/2 - i delta1
    const Poly base{{cplx{0.5 * sc.decay.gamma2, -dr.delta1}, cplx{1.0, 0.0}}};

    Rational r;
    r.num = in.a2 * p + b1 * l43 + b3 * l14 + b4 * l13;
    r.den = base * p + cplx{g1, 0.0} * l43 + cplx{g4, 0.0} * l13 + cplx{g3, 0.0} * l14;
    return r;
}

Rational c3_transform(const Scenario& sc) {
    const Rational c2 = c2_transform(sc);
    const cplx q3 = inner_poles(sc).q3;
    const cplx w = 0.5 * kImag * sc.drive.omega23;

    Rational r;
    r.num = sc.init.a3 * c2.den + w * c2.num;
    r.den = linear(q3) * c2.den;
    return r;
}

cplx evaluate_c2_tilde(cplx s, const Scenario& sc) { return c2_transform(sc).eval(s); }

cplx evaluate_c3_tilde(cplx s, const Scenario& sc) { return c3_transform(sc).eval(s); }

Spectrum spectrum_s2(const SpectrumGrid& grid, const Scenario& sc) {
    return fill_spectrum(c2_transform(sc), grid, Channel::S2, sc.drive.delta1,
                         sc.decay.gamma2 / kTwoPi, true);
}

Spectrum spectrum_s3(const SpectrumGrid& grid, const Scenario& sc) {
    return fill_spectrum(c3_transform(sc), grid, Channel::S3,
                         sc.drive.delta1 + sc.drive.delta3, sc.decay.gamma3 / kTwoPi, true);
}

Spectrum spectrum_s2_serial(const SpectrumGrid& grid, const Scenario& sc) {
    return fill_spectrum(c2_transform(sc), grid, Channel::S2, sc.drive.delta1,
                         sc.decay.gamma2 / kTwoPi, false);
}

Spectrum spectrum_s3_serial(const SpectrumGrid& grid, const Scenario& sc) {
    return fill_spectrum(c3_transform(sc), grid, Channel::S3,
                         sc.drive.delta1 + sc.drive.delta3, sc.decay.gamma3 / kTwoPi, false);
}

}  // namespace invy
