// Acceptance suite: one line per criterion, PASS/FAIL with details.
// argv[1] is the CLI binary path (used by the determinism criterion).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "invy/laplace.hpp"
#include "invy/oracle.hpp"
#include "invy/presets.hpp"
#include "invy/resonant.hpp"
#include "invy/scenario_io.hpp"
#include "support.hpp"

using namespace invy;
namespace fs = std::filesystem;
using clock_type = std::chrono::steady_clock;

namespace {

int g_failed = 0;
int g_defect_failed = 0;

void report(int num, const char* label, bool ok, const std::string& detail,
            bool known_defect = false) {
    std::printf("%s  criterion %2d: %s  (%s)\n", ok ? "PASS" : "FAIL", num, label,
                detail.c_str());
    std::fflush(stdout);
    if (!ok) {
        if (known_defect)
            ++g_defect_failed;
        else
            ++g_failed;
    }
}

std::string fmt(double v, const char* f = "%.3g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

Scenario preset_scenario(const char* name) { return preset_run_config(name).scenario; }

// ---------------------------------------------------------------- criterion 1
void criterion_dark_line() {
    bool ok = true;
    std::string detail;
    const SpectrumGrid grid{-5.0, 5.0, 2001};
    for (const char* name : {"fig2a", "fig2b", "fig2c"}) {
        const auto sc = preset_scenario(name);
        const auto s = spectrum_s2(grid, sc);
        const double center = s.values[1000];
        const auto peaks = testkit::local_maxima(s);
        const bool this_ok = center < 1e-20 && peaks.size() == 2;
        ok = ok && this_ok;
        detail += std::string(name) + ": S2(0)=" + fmt(center, "%.1e") + ", " +
                  std::to_string(peaks.size()) + " maxima; ";
    }
    report(1, "dark line at resonance with two components (Fig. 2a-c)", ok, detail);
}

// ---------------------------------------------------------------- criterion 2
void criterion_dark_state() {
    const auto sc = preset_scenario("fig2d");
    const auto s = spectrum_s2(SpectrumGrid{-10.0, 10.0, 2001}, sc);
    double worst = 0.0;
    for (double v : s.values) worst = std::max(worst, v);
    const auto traj = oracle_trajectory(sc);
    const auto [p1, p4] = trapped_population(traj);
    const bool ok =
        worst < 1e-20 && std::abs(p1 - 0.5) <= 1e-6 && std::abs(p4 - 0.5) <= 1e-6;
    report(2, "dark state: zero spectrum, trapped populations (Fig. 2d)", ok,
           "max S2=" + fmt(worst, "%.1e") + ", p1=" + fmt(p1, "%.8f") +
               ", p4=" + fmt(p4, "%.8f"));
}

// ---------------------------------------------------------------- criterion 3
void criterion_oracle_equivalence() {
    const auto t0 = clock_type::now();
    double worst = 0.0;
    std::string worst_case;
    int compared = 0;

    auto compare = [&](const Scenario& sc, const SpectrumGrid& grid, const std::string& tag) {
        const auto traj = oracle_trajectory(sc);
        {
            const auto a = spectrum_s2(grid, sc);
            const auto o = spectrum_from_trajectory(traj, sc, grid, Channel::S2);
            const double d = testkit::normalized_deviation(a, o);
            if (d > worst) {
                worst = d;
                worst_case = tag + "/s2";
            }
            ++compared;
        }
        if (sc.decay.gamma3 > 0.0) {
            const auto a = spectrum_s3(grid, sc);
            const auto o = spectrum_from_trajectory(traj, sc, grid, Channel::S3);
            const double d = testkit::normalized_deviation(a, o);
            if (d > worst) {
                worst = d;
                worst_case = tag + "/s3";
            }
            ++compared;
        }
    };

    for (const auto& p : presets()) compare(preset_scenario(p.name), {-10.0, 10.0, 401}, p.name);

    // 25 resonant + 25 detuned random scenarios; detunings keep the
    // two-photon condition well split, otherwise the quasi-dark ground
    // superposition decays at (d1-d2)^2-suppressed rates and the horizon
    // (and quadrature cost) explodes
    testkit::Rng rng(987654321);
    for (int k = 0; k < 50; ++k) {
        const auto a = rng.state(false);
        double d1 = 0.0, d2 = 0.0, d3 = 0.0;
        if (k >= 25) {
            d1 = rng.uniform(-1.0, 1.0);
            d2 = d1 - (rng.uniform(0.0, 1.0) < 0.5 ? 1.0 : -1.0) * rng.uniform(0.7, 1.5);
            d3 = rng.uniform(-1.0, 1.0);
        }
        const auto sc = testkit::make_scenario(
            rng.phase_complex(rng.uniform(1.0, 2.5)), rng.phase_complex(rng.uniform(1.0, 2.5)),
            rng.phase_complex(rng.uniform(1.0, 2.5)), d1, d2, d3, 1.0, rng.uniform(0.4, 1.2),
            a[0], a[1], a[2], a[3]);
        compare(sc, {-10.0, 10.0, 401}, "random" + std::to_string(k));
    }

    const double seconds = std::chrono::duration<double>(clock_type::now() - t0).count();
    const bool ok = worst < 1e-3 && seconds < 60.0;
    report(3, "analytic-oracle equivalence, presets + 50 random scenarios", ok,
           std::to_string(compared) + " spectra, worst dev " + fmt(worst, "%.2e") + " (" +
               worst_case + "), " + fmt(seconds, "%.1f") + " s");
}

// ---------------------------------------------------------------- criterion 4
void criterion_cubic_validity() {
    testkit::Rng rng(2024);
    double worst_residual = 0.0, worst_vieta = 0.0;
    for (int rep = 0; rep < 1000; ++rep) {
        const double g3 = rng.uniform(0.0, 2.0);
        DriveParameters d;
        d.omega12 = rng.uniform(0.0, 5.0);
        d.omega24 = rng.uniform(0.0, 5.0);
        d.omega23 = rng.uniform(0.0, 5.0);
        const auto k = cubic_coefficients(d, {1.0, g3});
        const auto roots = cubic_roots(k);
        cplx sum{0.0, 0.0};
        for (const auto& r : roots) {
            const cplx res = ((r + k[0]) * r + k[1]) * r + k[2];
            worst_residual = std::max(worst_residual, std::abs(res));
            sum += r;
        }
        worst_vieta = std::max(worst_vieta, std::abs(sum + 0.5 * (1.0 + g3)));
    }
    const bool ok = worst_residual < 1e-10 && worst_vieta < 1e-10;
    report(4, "cubic roots: residuals and Vieta sum, 1000 random sets", ok,
           "worst residual " + fmt(worst_residual, "%.2e") + ", worst Vieta " +
               fmt(worst_vieta, "%.2e"));
}

// ---------------------------------------------------------------- criterion 5
void criterion_partial_fractions() {
    testkit::Rng rng(5150);
    double worst_id = 0.0, worst_rec = 0.0;
    int raw = 0, conditioned = 0, degenerate = 0;
    bool fallback_ok = true;

    for (int rep = 0; rep < 1000; ++rep) {
        const double g3 = rng.uniform(0.0, 2.0);
        DriveParameters d;
        d.omega12 = rng.uniform(0.0, 5.0);
        d.omega24 = rng.uniform(0.0, 5.0);
        d.omega23 = rng.uniform(0.0, 5.0);
        const auto dec = decompose(d, {1.0, g3});
        double gap = 1e300;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                gap = std::min(gap, std::abs(dec.roots[i] - dec.roots[j]));

        if (dec.degenerate) {
            ++degenerate;
            // fallback path must produce a finite spectrum without error
            try {
                const auto sc = testkit::resonant_scenario(std::abs(d.omega12),
                                                           std::abs(d.omega24),
                                                           std::abs(d.omega23), g3, 0, 1, 0, 0);
                const auto s = resonant_spectrum_s2(SpectrumGrid{-5, 5, 101}, sc);
                for (double v : s.values)
                    if (!std::isfinite(v)) fallback_ok = false;
            } catch (const std::exception&) {
                fallback_ok = false;
            }
            continue;
        }

        cplx s0{}, s1{}, s2{};
        double beta_scale = 0.0;
        for (int i = 0; i < 3; ++i) {
            const cplx il = cplx{0, 1} * dec.roots[i];
            s0 += dec.betas[i];
            s1 += dec.betas[i] * il;
            s2 += dec.betas[i] * il * il;
            beta_scale = std::max(beta_scale, std::abs(dec.betas[i]) * std::max(1.0, std::norm(il)));
        }
        const double id_err = std::max({std::abs(s0), std::abs(s1), std::abs(s2 - 1.0)});
        if (gap >= 1e-5) {
            ++raw;
            worst_id = std::max(worst_id, id_err);
        } else {
            ++conditioned;  // rounding in beta ~ 1/gap^2 dominates; scale the bound
            if (id_err > 1e-12 * beta_scale) worst_id = std::max(worst_id, id_err);
        }

        for (int pt = 0; pt < 5; ++pt) {
            const double x = rng.uniform(-10.0, 10.0);
            cplx prod{1.0, 0.0}, sum{0.0, 0.0};
            for (int i = 0; i < 3; ++i) {
                prod *= (x + cplx{0, 1} * dec.roots[i]);
                sum += dec.betas[i] / (x + cplx{0, 1} * dec.roots[i]);
            }
            worst_rec = std::max(worst_rec, std::abs(sum - 1.0 / prod) * std::abs(prod));
        }
    }

    // dedicated well-separated reconstruction at 100 points
    const std::array<cplx, 3> fixed{cplx{-0.3, 0.0}, cplx{-0.8, 1.9}, cplx{-0.8, -1.9}};
    const auto betas = partial_fractions(fixed);
    for (int pt = 0; pt < 100; ++pt) {
        const double x = rng.uniform(-12.0, 12.0);
        cplx prod{1.0, 0.0}, sum{0.0, 0.0};
        for (int i = 0; i < 3; ++i) {
            prod *= (x + cplx{0, 1} * fixed[i]);
            sum += betas[i] / (x + cplx{0, 1} * fixed[i]);
        }
        worst_rec = std::max(worst_rec, std::abs(sum - 1.0 / prod) * std::abs(prod));
    }

    const bool ok = worst_id < 1e-10 && worst_rec < 1e-10 && fallback_ok;
    report(5, "partial-fraction identities, reconstruction, degenerate fallback", ok,
           "worst identity " + fmt(worst_id, "%.2e") + ", worst reconstruction " +
               fmt(worst_rec, "%.2e") + ", draws raw/conditioned/degenerate " +
               std::to_string(raw) + "/" + std::to_string(conditioned) + "/" +
               std::to_string(degenerate));
}

// ---------------------------------------------------------------- criterion 6
void criterion_sideband_positions() {
    bool pos_ok = true;
    std::string pos_detail;
    const SpectrumGrid grid{-10.0, 10.0, 201};
    for (const char* name : {"fig3c", "fig3d", "fig3e", "fig3f"}) {
        const auto sc = preset_scenario(name);
        const auto f = spectral_features(sc.drive, sc.decay);
        const auto s = resonant_spectrum_s2(grid, sc);
        const double pp = testkit::nearest_peak(s, f.delta_lambda);
        const double pm = testkit::nearest_peak(s, -f.delta_lambda);
        const double err = std::max(std::abs(pp - f.delta_lambda), std::abs(pm + f.delta_lambda));
        pos_ok = pos_ok && err <= grid.spacing();
        pos_detail += std::string(name) + " off-by " + fmt(err, "%.3f") + "; ";
    }
    report(6, "sideband peaks land at +-delta_lambda (Fig. 3c-f)", pos_ok,
           pos_detail + "grid step " + fmt(grid.spacing(), "%.2f"));
}

// The literal width-ordering clause of criterion 6, implemented exactly as
// stated and expected to fail: the fig3c parameter set itself is a
// counterexample (conjugate pair, resolved sidebands, Gamma1 > Gamma2).
// Ordering holds iff the depressed-cubic shift q <= 0, which generic
// parameters violate.  A dedicated WILL_FAIL ctest entry re-runs this clause
// so a change in its outcome is flagged either way.
bool width_ordering_clause(bool known_defect) {
    testkit::Rng rng(2024);
    int pairs = 0, violations = 0;
    std::string example;
    for (int rep = 0; rep < 20000 && pairs < 1000; ++rep) {
        const double g3 = rng.uniform(0.0, 2.0);
        DriveParameters d;
        d.omega12 = rng.uniform(0.0, 5.0);
        d.omega24 = rng.uniform(0.0, 5.0);
        d.omega23 = rng.uniform(0.0, 5.0);
        const auto f = spectral_features(d, {1.0, g3});
        if (f.all_real) continue;
        ++pairs;
        if (f.gamma_sideband < f.gamma_central - 1e-12) {
            ++violations;
            if (example.empty())
                example = "e.g. O=(" + fmt(std::abs(d.omega12), "%.2f") + "," +
                          fmt(std::abs(d.omega24), "%.2f") + "," + fmt(std::abs(d.omega23), "%.2f") +
                          "), g3=" + fmt(g3, "%.2f") + ": G1=" + fmt(f.gamma_central, "%.3f") +
                          " > G2=" + fmt(f.gamma_sideband, "%.3f");
        }
    }
    report(6, "width ordering Gamma2 >= Gamma1 on 1000 conjugate-pair draws [known "
              "defect: false for generic parameters, incl. the fig3c preset]",
           violations == 0,
           std::to_string(violations) + "/" + std::to_string(pairs) + " violations; " + example,
           known_defect);
    return violations == 0;
}

// ---------------------------------------------------------------- criterion 7
void criterion_trends() {
    // Omega23 sweep at fig3e base: central prominence up, width down.
    // The absolute central height (gamma2/2pi)|O12/2|^2 (g3^2/4)/c0^2 is
    // exactly Omega23-independent, so prominence is measured against the
    // sideband height.
    const SpectrumGrid grid{-10.0, 10.0, 4001};
    std::vector<double> ratio, side, width;
    for (double o23 : {1.0, 2.0, 4.0}) {
        const auto sc = testkit::resonant_scenario(0.5, 2.0, o23, 1.0, 1, 0, 0, 0);
        const auto f = spectral_features(sc.drive, sc.decay);
        const auto s = resonant_spectrum_s2(grid, sc);
        const double central = s.values[2000];
        const int j = static_cast<int>(std::lround((f.delta_lambda - grid.delta_min) / grid.spacing()));
        const double sideband = s.values[static_cast<std::size_t>(j)];
        ratio.push_back(central / sideband);
        side.push_back(sideband);
        width.push_back(2.0 * f.gamma_central);
    }
    const bool sweep_ok = ratio[0] < ratio[1] && ratio[1] < ratio[2] && side[0] > side[1] &&
                          side[1] > side[2] && width[0] > width[1] && width[1] > width[2];

    std::vector<double> w3;
    for (double g3 : {1.0, 0.5, 0.1, 0.0})
        w3.push_back(2.0 * spectral_features(preset_scenario("fig3e").drive, {1.0, g3})
                               .gamma_central);
    const bool g3_ok = w3[0] > w3[1] && w3[1] > w3[2] && w3[2] > 0.0 && w3[3] == 0.0;

    report(7, "line-narrowing trends: Omega23 sweep and gamma3 sweep", sweep_ok && g3_ok,
           "central/sideband ratio " + fmt(ratio[0]) + "->" + fmt(ratio[1]) + "->" +
               fmt(ratio[2]) + ", 2|G1| " + fmt(width[0]) + "->" + fmt(width[1]) + "->" +
               fmt(width[2]) + "; gamma3 sweep 2|G1| " + fmt(w3[0]) + "->" + fmt(w3[1]) + "->" +
               fmt(w3[2]) + "->" + fmt(w3[3]));
}

// ---------------------------------------------------------------- criterion 8
void criterion_conservation() {
    testkit::Rng rng(777);
    const SpectrumGrid wide{-40.0, 40.0, 4001};
    double worst_total = 0.0, worst_formula = 0.0;
    for (int k = 0; k < 20; ++k) {
        Scenario sc;
        bool check_formula = false;
        if (k < 6) {  // resonant, random ground superposition
            const auto a = rng.state(true);
            sc = testkit::make_scenario(rng.phase_complex(rng.uniform(0.8, 2.0)),
                                        rng.phase_complex(rng.uniform(0.8, 2.0)),
                                        rng.phase_complex(rng.uniform(0.8, 2.0)), 0, 0, 0, 1.0,
                                        rng.uniform(0.6, 1.5), a[0], 0, 0, a[3]);
        } else if (k < 10) {  // detuned ground superposition, two-photon split
            const auto a = rng.state(true);
            const double d1 = rng.uniform(-0.5, 0.5);
            const double d2 =
                d1 - (rng.uniform(0.0, 1.0) < 0.5 ? 1.0 : -1.0) * rng.uniform(0.8, 1.2);
            sc = testkit::make_scenario(rng.phase_complex(rng.uniform(0.8, 1.5)),
                                        rng.phase_complex(rng.uniform(0.8, 1.5)),
                                        rng.phase_complex(rng.uniform(0.8, 1.5)), d1, d2,
                                        rng.uniform(-0.5, 0.5), 1.0, rng.uniform(0.6, 1.5),
                                        a[0], 0, 0, a[3]);
        } else {  // resonant, prepared in |1>
            sc = testkit::make_scenario(rng.phase_complex(rng.uniform(0.8, 2.0)),
                                        rng.phase_complex(rng.uniform(0.8, 2.0)),
                                        rng.phase_complex(rng.uniform(0.8, 2.0)), 0, 0, 0, 1.0,
                                        rng.uniform(0.6, 1.5), 1, 0, 0, 0);
            check_formula = true;
        }
        const auto traj = oracle_trajectory(sc);
        const auto [p1, p4] = trapped_population(traj);
        const double total = testkit::integrate(spectrum_s2(wide, sc)) +
                             testkit::integrate(spectrum_s3(wide, sc)) + p1 + p4;
        worst_total = std::max(worst_total, std::abs(total - 1.0));
        if (check_formula) {
            const double want = std::norm(sc.drive.omega24) /
                                (std::norm(sc.drive.omega12) + std::norm(sc.drive.omega24));
            worst_formula = std::max(worst_formula, std::abs(p1 + p4 - want));
        }
    }
    const bool ok = worst_total <= 1e-3 && worst_formula <= 1e-3;
    report(8, "conservation: spectra + trapped populations = 1; dark-projection formula", ok,
           "worst |total-1| " + fmt(worst_total, "%.2e") + ", worst formula dev " +
               fmt(worst_formula, "%.2e"));
}

// ---------------------------------------------------------------- criterion 9
void criterion_lambda_comparison() {
    const SpectrumGrid grid{-10.0, 10.0, 2001};
    const auto lam = preset_scenario("fig4-lambda");
    const auto why = preset_scenario("fig4");
    const auto n_lam = testkit::local_maxima(spectrum_s2(grid, lam)).size();
    const auto n_y = testkit::local_maxima(spectrum_s2(grid, why)).size();
    const auto f = spectral_features(why.drive, why.decay);
    const double sep = 2.0 * f.delta_lambda;
    const double dev24 = std::abs(sep - std::abs(why.drive.omega24)) / std::abs(why.drive.omega24);
    const double dev23 = std::abs(sep - std::abs(why.drive.omega23)) / std::abs(why.drive.omega23);
    const bool ok = n_lam == 2 && n_y == 3 && dev24 > 0.10 && dev23 > 0.10;
    report(9, "Lambda-scheme comparison (Fig. 4): peak counts and sideband separation", ok,
           "lambda peaks " + std::to_string(n_lam) + ", inverted-Y peaks " + std::to_string(n_y) +
               ", 2*delta_lambda=" + fmt(sep, "%.3f") + " vs O24 " + fmt(dev24 * 100, "%.0f") +
               "% / O23 " + fmt(dev23 * 100, "%.0f") + "%");
}

// --------------------------------------------------------------- criterion 10
std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void criterion_determinism(const std::string& cli) {
    const fs::path dir = fs::current_path() / "acceptance_tmp";
    fs::remove_all(dir);
    fs::create_directories(dir);

    const fs::path scen = dir / "scenario.json";
    std::ofstream(scen) << R"({"drive": {"omega12": [1.5, 30], "omega24": [2, 0],
        "omega23": [3, 120], "delta1": 0.4, "delta2": -0.3, "delta3": 0.2},
        "decay": {"gamma3": 0.8}, "initial": {"a1": [0.6, 0], "a4": [0.8, 45]},
        "grid": {"min": -12, "max": 12, "points": 1501}})";

    auto run = [&](const std::string& env, const std::string& args, const fs::path& out) {
        const std::string cmd = env + (env.empty() ? "" : " ") + "\"" + cli + "\" " + args +
                                " --output " + out.string() + " > /dev/null 2>&1";
        return std::system(cmd.c_str()) == 0;
    };

    bool ok = true;
    ok &= run("OMP_NUM_THREADS=2", "run --preset fig3e", dir / "a1.txt");
    ok &= run("OMP_NUM_THREADS=2", "run --preset fig3e", dir / "a2.txt");
    ok &= run("OMP_NUM_THREADS=1", "run --preset fig3e", dir / "a3.txt");
    ok &= run("OMP_NUM_THREADS=2", "run --scenario " + scen.string() + " --channel s3",
              dir / "b1.txt");
    ok &= run("OMP_NUM_THREADS=1", "run --scenario " + scen.string() + " --channel s3",
              dir / "b2.txt");
    const bool bytes_ok = slurp(dir / "a1.txt") == slurp(dir / "a2.txt") &&
                          slurp(dir / "a1.txt") == slurp(dir / "a3.txt") &&
                          slurp(dir / "b1.txt") == slurp(dir / "b2.txt") &&
                          !slurp(dir / "a1.txt").empty() && !slurp(dir / "b1.txt").empty();
    report(10, "CLI determinism across reruns and thread counts", ok && bytes_ok,
           bytes_ok ? "all outputs byte-identical" : "byte mismatch between runs");
}

}  // namespace

void guarded(int num, const char* label, void (*fn)()) {
    try {
        fn();
    } catch (const std::exception& e) {
        report(num, label, false, std::string("unexpected exception: ") + e.what());
    }
}

int main(int argc, char** argv) {
    const std::string arg = argc > 1 ? argv[1] : "";

    if (arg == "--width-ordering") {
        // standalone run of the defective clause; registered WILL_FAIL so the
        // suite notices if its outcome ever flips
        std::printf("acceptance: width-ordering clause of criterion 6 (expected to fail)\n");
        return width_ordering_clause(false) ? 0 : 1;
    }

    const std::string cli = arg;
    std::printf("acceptance suite\n----------------\n");
    const auto t0 = clock_type::now();

    guarded(1, "dark line", criterion_dark_line);
    guarded(2, "dark state", criterion_dark_state);
    guarded(3, "analytic-oracle equivalence", criterion_oracle_equivalence);
    guarded(4, "cubic validity", criterion_cubic_validity);
    guarded(5, "partial fractions", criterion_partial_fractions);
    guarded(6, "sideband geometry", criterion_sideband_positions);
    width_ordering_clause(true);
    guarded(7, "line-narrowing trends", criterion_trends);
    guarded(8, "conservation", criterion_conservation);
    guarded(9, "Lambda-scheme comparison", criterion_lambda_comparison);
    if (!cli.empty()) {
        try {
            criterion_determinism(cli);
        } catch (const std::exception& e) {
            report(10, "CLI determinism", false, std::string("unexpected exception: ") + e.what());
        }
    } else {
        report(10, "CLI determinism", false, "no CLI path supplied");
    }

    const double seconds = std::chrono::duration<double>(clock_type::now() - t0).count();
    std::printf("----------------\n%d unexpected criterion failure(s); %d known-defect clause "
                "failure(s) (tracked by the acceptance_width_ordering WILL_FAIL test); %.1f s "
                "total\n",
                g_failed, g_defect_failed, seconds);
    return g_failed == 0 ? 0 : 1;
}
