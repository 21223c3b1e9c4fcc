#include "invy/scenario_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "invy/presets.hpp"

namespace invy {

namespace {

using nlohmann::json;

constexpr double kDegToRad = 3.1415926535897932384626433832795 / 180.0;

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const char* where) {
    for (const auto& item : obj.items()) {
        bool ok = false;
        for (const char* k : allowed)
            if (item.key() == k) ok = true;
        if (!ok) throw Error(std::string("unknown key \"") + item.key() + "\" in " + where);
    }
}

double get_number(const json& obj, const char* key, double fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number()) throw Error(std::string("key \"") + key + "\" must be a number");
    return v.get<double>();
}

json get_pair(const json& obj, const char* key, json fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        throw Error(std::string("key \"") + key +
                    "\" must be a [magnitude, phase-degrees] pair");
    if (v[0].get<double>() < 0.0)
        throw Error(std::string("key \"") + key + "\": magnitude must be >= 0");
    return v;
}

// Overlays `over` onto `base` one leaf at a time.
json merge(json base, const json& over) {
    for (const auto& item : over.items()) {
        if (item.value().is_object() && base.contains(item.key()) &&
            base[item.key()].is_object())
            base[item.key()] = merge(base[item.key()], item.value());
        else
            base[item.key()] = item.value();
    }
    return base;
}

json canonical_complex(const json& section, const char* key) {
    return get_pair(section, key, json::array({0.0, 0.0}));
}

// Builds the fully explicit, sorted-key document from a raw user object.
json canonicalize(const json& in) {
    reject_unknown_keys(in, {"preset", "drive", "decay", "initial", "grid", "channel"},
                        "scenario");

    json doc = in;
    if (doc.contains("preset")) {
        if (!doc["preset"].is_string()) throw Error("key \"preset\" must be a string");
        const Preset* p = find_preset(doc["preset"].get<std::string>());
        if (!p) throw Error("unknown preset \"" + doc["preset"].get<std::string>() + "\"");
        doc.erase("preset");
        doc = merge(json::parse(p->config), doc);
    }

    const json drive_in = doc.value("drive", json::object());
    const json decay_in = doc.value("decay", json::object());
    const json init_in = doc.value("initial", json::object());
    const json grid_in = doc.value("grid", json::object());
    reject_unknown_keys(drive_in,
                        {"omega12", "omega24", "omega23", "delta1", "delta2", "delta3"},
                        "drive");
    reject_unknown_keys(decay_in, {"gamma2", "gamma3"}, "decay");
    reject_unknown_keys(init_in, {"a1", "a2", "a3", "a4"}, "initial");
    reject_unknown_keys(grid_in, {"min", "max", "points"}, "grid");

    json out;
    out["drive"] = {{"omega12", canonical_complex(drive_in, "omega12")},
                    {"omega24", canonical_complex(drive_in, "omega24")},
                    {"omega23", canonical_complex(drive_in, "omega23")},
                    {"delta1", get_number(drive_in, "delta1", 0.0)},
                    {"delta2", get_number(drive_in, "delta2", 0.0)},
                    {"delta3", get_number(drive_in, "delta3", 0.0)}};
    out["decay"] = {{"gamma2", get_number(decay_in, "gamma2", 1.0)},
                    {"gamma3", get_number(decay_in, "gamma3", 1.0)}};
    out["initial"] = {{"a1", canonical_complex(init_in, "a1")},
                      {"a2", canonical_complex(init_in, "a2")},
                      {"a3", canonical_complex(init_in, "a3")},
                      {"a4", canonical_complex(init_in, "a4")}};
    const double pts = get_number(grid_in, "points", 2001.0);
    if (!(pts >= 2.0) || pts != std::floor(pts) || pts > 1e7)
        throw Error("key \"points\" must be an integer >= 2");
    out["grid"] = {{"min", get_number(grid_in, "min", -10.0)},
                   {"max", get_number(grid_in, "max", 10.0)},
                   {"points", static_cast<std::int64_t>(pts)}};
    std::string channel = doc.value("channel", "s2");
    if (channel != "s2" && channel != "s3") throw Error("channel must be \"s2\" or \"s3\"");
    out["channel"] = channel;
    return out;
}

cplx field(const json& section, const char* key) {
    const json& p = section.at(key);
    return polar_value(p[0].get<double>(), p[1].get<double>());
}

RunConfig from_canonical(json doc) {
    RunConfig cfg;
    const json& dr = doc.at("drive");
    const json& de = doc.at("decay");
    const json& in = doc.at("initial");
    const json& gr = doc.at("grid");

    DriveParameters drive;
    drive.omega12 = field(dr, "omega12");
    drive.omega24 = field(dr, "omega24");
    drive.omega23 = field(dr, "omega23");
    drive.delta1 = dr.at("delta1").get<double>();
    drive.delta2 = dr.at("delta2").get<double>();
    drive.delta3 = dr.at("delta3").get<double>();

    DecayRates decay{de.at("gamma2").get<double>(), de.at("gamma3").get<double>()};
    InitialAmplitudes init{field(in, "a1"), field(in, "a2"), field(in, "a3"), field(in, "a4")};

    cfg.scenario = validate_scenario(drive, decay, init);
    cfg.grid = SpectrumGrid{gr.at("min").get<double>(), gr.at("max").get<double>(),
                            gr.at("points").get<int>()};
    check_grid(cfg.grid);
    cfg.channel = doc.at("channel").get<std::string>() == "s3" ? Channel::S3 : Channel::S2;
    cfg.canonical = std::move(doc);
    return cfg;
}

}  // namespace

cplx polar_value(double magnitude, double phase_deg) {
    double r = std::fmod(phase_deg, 360.0);
    if (r < 0.0) r += 360.0;
    if (r == 0.0) return {magnitude, 0.0};
    if (r == 90.0) return {0.0, magnitude};
    if (r == 180.0) return {-magnitude, 0.0};
    if (r == 270.0) return {0.0, -magnitude};
    const double rad = r * kDegToRad;
    return {magnitude * std::cos(rad), magnitude * std::sin(rad)};
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hash_hex(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::uint64_t RunConfig::hash() const { return fnv1a64(canonical_text()); }

RunConfig parse_run_config(const std::string& text) {
    std::string body = text;
    // exported spectrum files are re-ingestable through their header line
    const auto first = body.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && body[first] == '#') {
        const std::string tag = "# scenario: ";
        std::istringstream is(body);
        std::string line;
        std::string found;
        while (std::getline(is, line))
            if (line.rfind(tag, 0) == 0) {
                found = line.substr(tag.size());
                break;
            }
        if (found.empty()) throw Error("no \"# scenario:\" header line in spectrum file");
        body = found;
    }
    json doc;
    try {
        doc = json::parse(body);
    } catch (const json::exception& e) {
        throw Error(std::string("scenario JSON parse error: ") + e.what());
    }
    if (!doc.is_object()) throw Error("scenario document must be a JSON object");
    return from_canonical(canonicalize(doc));
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error("cannot open scenario file \"" + path + "\"");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_run_config(ss.str());
}

RunConfig preset_run_config(std::string_view name) {
    const Preset* p = find_preset(name);
    if (!p) throw Error("unknown preset \"" + std::string(name) + "\"");
    return parse_run_config(p->config);
}

}  // namespace invy
