#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "invy/errors.hpp"

namespace invy {

using cplx = std::complex<double>;

// Dense complex polynomial, coefficients in ascending powers of s.
struct Poly {
    std::vector<cplx> c;

    Poly() = default;
    explicit Poly(std::vector<cplx> coeffs) : c(std::move(coeffs)) {}

    std::size_t degree() const { return c.empty() ? 0 : c.size() - 1; }
};

inline Poly operator*(const Poly& a, const Poly& b) {
    if (a.c.empty() || b.c.empty()) return Poly{};
    Poly out;
    out.c.assign(a.c.size() + b.c.size() - 1, cplx{});
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
    return out;
}

inline Poly operator*(cplx k, const Poly& p) {
    Poly out = p;
    for (auto& x : out.c) x *= k;
    return out;
}

inline Poly operator+(const Poly& a, const Poly& b) {
    Poly out;
    out.c.assign(std::max(a.c.size(), b.c.size()), cplx{});
    for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) out.c[i] += b.c[i];
    return out;
}

inline Poly derivative(const Poly& p) {
    Poly out;
    if (p.c.size() <= 1) {
        out.c.assign(1, cplx{});
        return out;
    }
    out.c.resize(p.c.size() - 1);
    for (std::size_t i = 1; i < p.c.size(); ++i) out.c[i - 1] = static_cast<double>(i) * p.c[i];
    return out;
}

struct PolyEval {
    cplx value;
    double scale;  // sum of |c_i| |s|^i, the magnitude the Horner pass saw
};

inline PolyEval eval_with_scale(const Poly& p, cplx s) {
    if (p.c.empty()) return {cplx{}, 0.0};
    const double as = std::abs(s);
    cplx v = p.c.back();
    double sc = std::abs(p.c.back());
    for (std::size_t i = p.c.size() - 1; i-- > 0;) {
        v = v * s + p.c[i];
        sc = sc * as + std::abs(p.c[i]);
    }
    return {v, sc};
}

// Ratio of two polynomials with removable singularities resolved by repeated
// differentiation: when numerator and denominator both vanish at s (relative
// to what their Horner passes accumulated) the limit is taken via their
// derivatives.  A vanishing denominator against a non-vanishing numerator is
// a genuine pole and raises SingularEvaluation.
struct Rational {
    Poly num;
    Poly den;

    static constexpr double kSingularTol = 1e-14;

    cplx eval(cplx s, std::size_t grid_index = SingularEvaluation::kNoIndex) const {
        Poly n = num;
        Poly d = den;
        for (int pass = 0; pass < 16; ++pass) {
            const PolyEval dv = eval_with_scale(d, s);
            if (std::abs(dv.value) > kSingularTol * dv.scale) {
                const PolyEval nv = eval_with_scale(n, s);
                return nv.value / dv.value;
            }
            const PolyEval nv = eval_with_scale(n, s);
            if (std::abs(nv.value) > kSingularTol * nv.scale)
                throw SingularEvaluation("pole of the cleared rational form hit during evaluation",
                                         grid_index);
            if (d.c.size() <= 1)
                throw SingularEvaluation("denominator vanishes identically at evaluation point",
                                         grid_index);
            n = derivative(n);
            d = derivative(d);
        }
        throw SingularEvaluation("removable-singularity resolution did not terminate", grid_index);
    }
};

}  // namespace invy
