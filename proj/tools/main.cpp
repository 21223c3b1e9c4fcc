// Command-line front end: scenario ingestion, figure presets, spectrum
// export, feature reports and time-domain cross-checks.
//
// Exit codes: 0 success, 2 parse/validation failure, 3 oracle deviation
// above --tolerance, 4 internal singularity.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "invy/laplace.hpp"
#include "invy/oracle.hpp"
#include "invy/presets.hpp"
#include "invy/resonant.hpp"
#include "invy/scenario_io.hpp"

namespace {

using namespace invy;

constexpr int kExitBadInput = 2;
constexpr int kExitDeviation = 3;
constexpr int kExitSingular = 4;

struct CommonOpts {
    std::string scenario_path;
    std::string preset;
    double gamma_mhz = kDefaultGammaMHz;
};

std::string fmt(double v, const char* f = "%.17g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

std::string fmt_polar(const nlohmann::json& pair) {
    return fmt(pair[0].get<double>()) + " @ " + fmt(pair[1].get<double>()) + " deg";
}

RunConfig resolve_config(const CommonOpts& opts) {
    if (!opts.preset.empty() && !opts.scenario_path.empty())
        throw Error("--preset and --scenario are mutually exclusive");
    if (!opts.preset.empty()) return preset_run_config(opts.preset);
    if (!opts.scenario_path.empty()) return load_run_config(opts.scenario_path);
    throw Error("one of --preset or --scenario is required");
}

double normalized_deviation(const Spectrum& a, const Spectrum& b) {
    double peak = 1e-300;
    for (double v : a.values) peak = std::max(peak, v);
    for (double v : b.values) peak = std::max(peak, v);
    double worst = 0.0;
    for (std::size_t j = 0; j < a.values.size(); ++j)
        worst = std::max(worst, std::abs(a.values[j] - b.values[j]));
    return worst / peak;
}

void write_svg(const std::string& path, const Spectrum& s, const std::string& title,
               double gamma_mhz) {
    const int w = 860, h = 520, ml = 70, mr = 20, mt = 40, mb = 60;
    const int pw = w - ml - mr, ph = h - mt - mb;
    double vmax = 0.0;
    for (double v : s.values) vmax = std::max(vmax, v);
    if (vmax <= 0.0) vmax = 1.0;

    std::ofstream f(path);
    if (!f) throw Error("cannot write render file \"" + path + "\"");
    f << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    f << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
    f << "<text x=\"" << ml << "\" y=\"24\" font-family=\"monospace\" font-size=\"14\">" << title
      << "</text>\n";
    f << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"black\"/>\n";

    for (int k = 0; k <= 4; ++k) {
        const double dx = s.grid.delta_min + k * (s.grid.delta_max - s.grid.delta_min) / 4.0;
        const int px = ml + k * pw / 4;
        f << "<line x1=\"" << px << "\" y1=\"" << mt + ph << "\" x2=\"" << px << "\" y2=\""
          << mt + ph + 5 << "\" stroke=\"black\"/>\n";
        f << "<text x=\"" << px << "\" y=\"" << mt + ph + 20
          << "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">"
          << fmt(dx, "%.4g") << "</text>\n";
    }
    f << "<text x=\"" << ml + pw / 2 << "\" y=\"" << h - 12
      << "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">emission detuning "
         "[gamma]  (gamma = "
      << fmt(gamma_mhz, "%.4g") << " MHz)</text>\n";
    for (int k = 0; k <= 4; ++k) {
        const double vy = vmax * k / 4.0;
        const int py = mt + ph - k * ph / 4;
        f << "<line x1=\"" << ml - 5 << "\" y1=\"" << py << "\" x2=\"" << ml << "\" y2=\"" << py
          << "\" stroke=\"black\"/>\n";
        f << "<text x=\"" << ml - 8 << "\" y=\"" << py + 4
          << "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"end\">" << fmt(vy, "%.3g")
          << "</text>\n";
    }

    f << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.2\" points=\"";
    for (int j = 0; j < s.grid.n_points; ++j) {
        const double x = ml + (s.grid.at(j) - s.grid.delta_min) /
                                  (s.grid.delta_max - s.grid.delta_min) * pw;
        const double y = mt + ph - s.values[static_cast<std::size_t>(j)] / vmax * ph;
        f << fmt(x, "%.2f") << "," << fmt(y, "%.2f") << " ";
    }
    f << "\"/>\n</svg>\n";
}

Spectrum compute_spectrum(const RunConfig& cfg) {
    return cfg.channel == Channel::S2 ? spectrum_s2(cfg.grid, cfg.scenario)
                                      : spectrum_s3(cfg.grid, cfg.scenario);
}

struct GridOverride {
    std::optional<double> min, max;
    std::optional<int> points;
    bool any() const { return min || max || points; }
};

int cmd_run(const CommonOpts& opts, const GridOverride& gover,
            const std::string* channel_override, bool oracle, double tolerance,
            const std::string& output, const std::string& render) {
    RunConfig cfg = resolve_config(opts);
    if (gover.any()) {
        if (gover.min) cfg.grid.delta_min = *gover.min;
        if (gover.max) cfg.grid.delta_max = *gover.max;
        if (gover.points) cfg.grid.n_points = *gover.points;
        check_grid(cfg.grid);
        cfg.canonical["grid"] = {{"min", cfg.grid.delta_min},
                                {"max", cfg.grid.delta_max},
                                {"points", cfg.grid.n_points}};
    }
    if (channel_override) {
        cfg.channel = *channel_override == "s3" ? Channel::S3 : Channel::S2;
        cfg.canonical["channel"] = *channel_override;
    }

    const Spectrum result = compute_spectrum(cfg);
    const bool dark = dark_state_check(cfg.scenario.drive, cfg.scenario.init);

    std::optional<double> deviation;
    if (oracle) {
        const Spectrum numeric = oracle_spectrum(cfg.scenario, cfg.grid, cfg.channel);
        deviation = normalized_deviation(result, numeric);
    }

    std::ostringstream out;
    const auto& c = cfg.canonical;
    out << "# invy spectrum\n";
    out << "# channel: " << c["channel"].get<std::string>() << "\n";
    out << "# hash: " << hash_hex(cfg.hash()) << "\n";
    out << "# gamma_mhz: " << fmt(opts.gamma_mhz) << "\n";
    out << "# grid: min=" << fmt(cfg.grid.delta_min) << " max=" << fmt(cfg.grid.delta_max)
        << " points=" << cfg.grid.n_points << "\n";
    out << "# omega12: " << fmt_polar(c["drive"]["omega12"]) << "\n";
    out << "# omega24: " << fmt_polar(c["drive"]["omega24"]) << "\n";
    out << "# omega23: " << fmt_polar(c["drive"]["omega23"]) << "\n";
    out << "# delta: " << fmt(c["drive"]["delta1"].get<double>()) << " "
        << fmt(c["drive"]["delta2"].get<double>()) << " "
        << fmt(c["drive"]["delta3"].get<double>()) << "\n";
    out << "# gamma2: " << fmt(c["decay"]["gamma2"].get<double>())
        << "  gamma3: " << fmt(c["decay"]["gamma3"].get<double>()) << "\n";
    for (const char* key : {"a1", "a2", "a3", "a4"})
        out << "# " << key << ": " << fmt_polar(c["initial"][key]) << "\n";
    if (dark) out << "# note: dark state detected; emission fully suppressed\n";
    if (deviation) out << "# oracle_max_rel_dev: " << fmt(*deviation, "%.6e") << "\n";
    out << "# scenario: " << cfg.canonical_text() << "\n";
    out << "# columns: delta[gamma] value[1/gamma]\n";
    for (int j = 0; j < cfg.grid.n_points; ++j) {
        char line[80];
        std::snprintf(line, sizeof line, "%.16e %.16e\n", cfg.grid.at(j),
                      result.values[static_cast<std::size_t>(j)]);
        out << line;
    }

    if (output.empty()) {
        std::cout << out.str();
    } else {
        std::ofstream f(output, std::ios::binary);
        if (!f) throw Error("cannot write output file \"" + output + "\"");
        f << out.str();
        std::cout << "wrote " << output << " (" << cfg.grid.n_points << " points, hash "
                  << hash_hex(cfg.hash()) << ")\n";
    }
    if (!render.empty()) {
        const std::string title = std::string(cfg.channel == Channel::S2 ? "S2" : "S3") +
                                  " spectrum, hash " + hash_hex(cfg.hash());
        write_svg(render, result, title, opts.gamma_mhz);
        std::cout << "rendered " << render << "\n";
    }
    if (dark) std::cout << "dark state detected: spectrum is identically zero\n";
    if (deviation) {
        std::cout << "oracle max relative deviation: " << fmt(*deviation, "%.6e") << "\n";
        if (*deviation > tolerance) {
            std::cerr << "oracle deviation " << fmt(*deviation, "%.3e") << " exceeds tolerance "
                      << fmt(tolerance, "%.3e") << "\n";
            return kExitDeviation;
        }
    }
    return 0;
}

int cmd_features(const CommonOpts& opts, bool oracle) {
    RunConfig cfg = resolve_config(opts);
    const Scenario& sc = cfg.scenario;
    std::cout << "scenario hash: " << hash_hex(cfg.hash()) << "\n";
    std::cout << "dark line (a1=a4=0): " << (dark_line_check(sc.init) ? "true" : "false") << "\n";
    std::cout << "dark state: " << (dark_state_check(sc.drive, sc.init) ? "true" : "false")
              << "\n";

    if (!sc.drive.resonant()) {
        std::cerr << "features: closed-form features need resonant drives "
                     "(delta1 = delta2 = delta3 = 0)\n";
        return kExitBadInput;
    }

    const auto dec = decompose(sc.drive, sc.decay);
    for (int i = 0; i < 3; ++i) {
        const cplx r = dec.roots[static_cast<std::size_t>(i)];
        std::cout << "root " << i + 1 << ": " << fmt(r.real(), "%.12g") << " "
                  << (r.imag() >= 0 ? "+" : "-") << " " << fmt(std::abs(r.imag()), "%.12g")
                  << "i\n";
    }
    if (dec.degenerate || dec.all_real) {
        std::cout << "degenerate roots; no sideband features\n";
    } else {
        const auto f = spectral_features(sc.drive, sc.decay);
        const double mhz = opts.gamma_mhz;
        std::cout << "sideband offset delta_lambda: " << fmt(f.delta_lambda, "%.10g")
                  << " gamma (" << fmt(f.delta_lambda * mhz, "%.6g") << " MHz)\n";
        std::cout << "central width 2|Gamma1|: " << fmt(2.0 * f.gamma_central, "%.10g")
                  << " gamma (" << fmt(2.0 * f.gamma_central * mhz, "%.6g") << " MHz)\n";
        std::cout << "sideband width 2|Gamma2|: " << fmt(2.0 * f.gamma_sideband, "%.10g")
                  << " gamma (" << fmt(2.0 * f.gamma_sideband * mhz, "%.6g") << " MHz)\n";
        std::cout << "sidebands resolved (delta_lambda > max width): "
                  << (f.resolved ? "yes" : "no") << "\n";
        std::cout << "subnatural central line (2|Gamma1| < gamma): "
                  << (2.0 * f.gamma_central < sc.decay.gamma2 ? "yes" : "no") << "\n";
    }

    const double denom = std::norm(sc.drive.omega12) + std::norm(sc.drive.omega24);
    const bool ground = std::abs(sc.init.a2) < 1e-12 && std::abs(sc.init.a3) < 1e-12;
    if (oracle) {
        auto traj = oracle_trajectory(sc);
        auto [p1, p4] = trapped_population(traj);
        std::cout << "trapped population (oracle): p1=" << fmt(p1, "%.8g")
                  << " p4=" << fmt(p4, "%.8g") << " total=" << fmt(p1 + p4, "%.8g") << "\n";
    } else if (ground) {
        const double trapped =
            denom > 0.0 ? std::norm(std::conj(sc.drive.omega24) * sc.init.a1 -
                                    std::conj(sc.drive.omega12) * sc.init.a4) /
                              denom
                        : std::norm(sc.init.a1) + std::norm(sc.init.a4);
        std::cout << "trapped population (dark-projection estimate): " << fmt(trapped, "%.8g")
                  << "\n";
    } else {
        std::cout << "trapped population: n/a without --oracle for excited-state preparations\n";
    }
    return 0;
}

int cmd_list_presets() {
    std::printf("%-14s %-18s %s\n", "name", "figure", "parameters");
    for (const auto& p : presets()) std::printf("%-14s %-18s %s\n", p.name, p.figure, p.label);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spontaneous-emission spectra of a three-field-driven inverted-Y atom"};
    app.require_subcommand(1);

    CommonOpts run_opts, feat_opts;
    SpectrumGrid grid;
    std::string channel;
    bool run_oracle = false, feat_oracle = false;
    double tolerance = 1e-3;
    std::string output, render;

    auto* run = app.add_subcommand("run", "compute a spectrum and export it");
    run->add_option("--scenario", run_opts.scenario_path, "scenario JSON (or exported spectrum)");
    run->add_option("--preset", run_opts.preset, "named preset (see list-presets)");
    auto* gmin = run->add_option("--grid-min", grid.delta_min, "lowest emission detuning [gamma]");
    auto* gmax = run->add_option("--grid-max", grid.delta_max, "highest emission detuning [gamma]");
    auto* gpts = run->add_option("--points", grid.n_points, "number of grid points");
    run->add_option("--channel", channel, "s2 (level |2>) or s3 (level |3>)")
        ->check(CLI::IsMember({"s2", "s3"}));
    run->add_flag("--oracle", run_oracle, "cross-check against the time-domain integration");
    run->add_option("--tolerance", tolerance, "oracle deviation gate (default 1e-3)");
    run->add_option("--output", output, "write the spectrum here instead of stdout");
    run->add_option("--render", render, "write an SVG plot");
    run->add_option("--gamma-mhz", run_opts.gamma_mhz, "gamma in MHz, axis labels only");

    auto* feat = app.add_subcommand("features", "report roots, widths and dark-state flags");
    feat->add_option("--scenario", feat_opts.scenario_path, "scenario JSON");
    feat->add_option("--preset", feat_opts.preset, "named preset");
    feat->add_flag("--oracle", feat_oracle, "measure trapped populations by integration");
    feat->add_option("--gamma-mhz", feat_opts.gamma_mhz, "gamma in MHz, labels only");

    auto* list = app.add_subcommand("list-presets", "show the built-in parameter sets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitBadInput;
    }

    try {
        if (run->parsed()) {
            GridOverride gover;
            if (gmin->count()) gover.min = grid.delta_min;
            if (gmax->count()) gover.max = grid.delta_max;
            if (gpts->count()) gover.points = grid.n_points;
            return cmd_run(run_opts, gover, channel.empty() ? nullptr : &channel, run_oracle,
                           tolerance, output, render);
        }
        if (feat->parsed()) return cmd_features(feat_opts, feat_oracle);
        if (list->parsed()) return cmd_list_presets();
    } catch (const SingularEvaluation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSingular;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return 0;
}
