#include "ewalk/runconfig.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>

#include "ewalk/csv.hpp"

namespace ewalk {

namespace {

struct KindInfo {
    ExperimentKind kind;
    const char* name;
    std::set<std::string, std::less<>> keys;
};

const std::vector<KindInfo>& kind_table() {
    static const std::vector<KindInfo> table = {
        {ExperimentKind::bloch, "bloch", {"m", "theta", "n", "steps", "stride"}},
        {ExperimentKind::sbo, "sbo",
         {"m", "theta", "n", "steps", "delta_omega", "phi"}},
        {ExperimentKind::resonant_drift, "resonant_drift",
         {"m", "theta", "n", "steps", "phi"}},
        {ExperimentKind::velocity_curve, "velocity_curve",
         {"m", "theta", "n", "steps", "phi_points", "fit_offset"}},
        {ExperimentKind::velocity_map, "velocity_map",
         {"m", "n", "steps", "theta_points", "phi_points"}},
        {ExperimentKind::crossover_scan, "crossover_scan",
         {"m", "theta", "n", "steps", "phi", "detuning_min", "detuning_max",
          "detuning_points"}},
        {ExperimentKind::density, "density",
         {"m", "theta", "n", "steps", "delta_omega", "stride"}},
    };
    return table;
}

const KindInfo& info_for(ExperimentKind kind) {
    for (const auto& info : kind_table())
        if (info.kind == kind) return info;
    throw std::logic_error("unknown experiment kind");
}

void apply_kind_defaults(ExperimentConfig& c) {
    switch (c.kind) {
        case ExperimentKind::bloch:
            c.n_sites = 1000; c.steps = 1000; break;
        case ExperimentKind::sbo:
            c.n_sites = 1000; c.steps = 20000; break;
        case ExperimentKind::resonant_drift:
        case ExperimentKind::velocity_curve:
        case ExperimentKind::velocity_map:
            c.n_sites = 2000; c.steps = 0; break;
        case ExperimentKind::crossover_scan:
            c.n_sites = 2500; c.steps = 0; break;
        case ExperimentKind::density:
            c.n_sites = 1000; c.steps = 1000; break;
    }
}

void resolve_auto_fields(ExperimentConfig& c) {
    if (c.steps == 0) {
        switch (c.kind) {
            case ExperimentKind::resonant_drift:
            case ExperimentKind::velocity_curve:
            case ExperimentKind::velocity_map:
                c.steps = std::size_t(std::llround(30.0 * c.m));
                break;
            case ExperimentKind::crossover_scan:
                c.steps = 40 * c.n_sites;
                break;
            default:
                break;
        }
    }
    if (c.kind == ExperimentKind::crossover_scan) {
        const double omega_b = 2.0 * M_PI / c.m;
        if (c.detuning_min == 0.0) c.detuning_min = 0.10 * omega_b;
        if (c.detuning_max == 0.0) c.detuning_max = 0.65 * omega_b;
    }
}

double parse_double(std::string_view value, std::size_t line, std::size_t col,
                    const std::string& key) {
    double out;
    const auto [ptr, ec] =
        std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw ConfigError(line, col,
                          key + ": expected a number, got '" +
                              std::string(value) + "'");
    return out;
}

std::size_t parse_size(std::string_view value, std::size_t line,
                       std::size_t col, const std::string& key) {
    std::size_t out;
    const auto [ptr, ec] =
        std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw ConfigError(line, col,
                          key + ": expected a non-negative integer, got '" +
                              std::string(value) + "'");
    return out;
}

bool parse_bool(std::string_view value, std::size_t line, std::size_t col,
                const std::string& key) {
    if (value == "true") return true;
    if (value == "false") return false;
    throw ConfigError(line, col,
                      key + ": expected true or false, got '" +
                          std::string(value) + "'");
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

void domain_check(const ExperimentConfig& c) {
    auto fail = [](const std::string& msg) { throw ConfigError(0, 0, msg); };
    if (!(c.m > 0.0) || !std::isfinite(c.m))
        fail("m: must be a positive finite number");
    if (!(c.theta >= 0.0 && c.theta <= M_PI)) fail("theta: must lie in [0, pi]");
    if (!std::isfinite(c.phi)) fail("phi: must be finite");
    if (c.n_sites < 3) fail("n: need at least 3 sites");
    if (c.stride == 0) fail("stride: must be at least 1");
    const double omega_b = 2.0 * M_PI / c.m;
    switch (c.kind) {
        case ExperimentKind::sbo:
        case ExperimentKind::density:
            if (!(c.delta_omega > 0.0) || !std::isfinite(c.delta_omega))
                fail("delta_omega: must be positive");
            break;
        case ExperimentKind::velocity_curve:
            if (c.phi_points < 2) fail("phi_points: need at least 2");
            break;
        case ExperimentKind::velocity_map:
            if (c.phi_points < 1) fail("phi_points: need at least 1");
            if (c.theta_points < 1) fail("theta_points: need at least 1");
            break;
        case ExperimentKind::crossover_scan:
            if (!(c.detuning_min > 0.0 && c.detuning_min < omega_b))
                fail("detuning_min: must lie in (0, omega_B)");
            if (!(c.detuning_max > c.detuning_min && c.detuning_max < omega_b))
                fail("detuning_max: must lie in (detuning_min, omega_B)");
            if (c.detuning_points < 2) fail("detuning_points: need at least 2");
            break;
        default:
            break;
    }
    if (c.kind != ExperimentKind::resonant_drift &&
        c.kind != ExperimentKind::velocity_curve &&
        c.kind != ExperimentKind::velocity_map && c.steps < 2)
        fail("steps: need at least 2");
}

}  // namespace

const char* to_string(ExperimentKind kind) { return info_for(kind).name; }

std::vector<std::string> experiment_names() {
    std::vector<std::string> names;
    for (const auto& info : kind_table()) names.emplace_back(info.name);
    return names;
}

ExperimentConfig parse_config(std::string_view text) {
    std::map<std::string, std::pair<std::string, std::pair<std::size_t, std::size_t>>>
        entries;  // key -> (value, (line, col))
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, eol - pos);
        ++line_no;
        pos = eol + 1;

        if (const std::size_t hash = line.find('#'); hash != line.npos)
            line = line.substr(0, hash);
        if (trim(line).empty()) {
            if (eol == text.size()) break;
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == line.npos)
            throw ConfigError(line_no, 1, "expected 'key = value'");
        const std::string key{trim(line.substr(0, eq))};
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError(line_no, 1, "missing key before '='");
        if (value.empty())
            throw ConfigError(line_no, eq + 2, key + ": missing value");
        if (entries.count(key))
            throw ConfigError(line_no, 1, key + ": duplicate key");
        const std::size_t value_col = line.find_first_not_of(" \t", eq + 1) + 1;
        entries[key] = {std::string(value), {line_no, value_col}};
        if (eol == text.size()) break;
    }

    const auto experiment = entries.find("experiment");
    if (experiment == entries.end())
        throw ConfigError(0, 0, "experiment: missing required key");

    ExperimentConfig config;
    bool known = false;
    for (const auto& info : kind_table())
        if (experiment->second.first == info.name) {
            config.kind = info.kind;
            known = true;
        }
    if (!known)
        throw ConfigError(experiment->second.second.first,
                          experiment->second.second.second,
                          "experiment: unknown experiment '" +
                              experiment->second.first + "'");
    apply_kind_defaults(config);

    const KindInfo& info = info_for(config.kind);
    for (const auto& [key, entry] : entries) {
        if (key == "experiment") continue;
        const auto& [value, where] = entry;
        const auto [line, col] = where;
        if (!info.keys.count(key))
            throw ConfigError(line, 1,
                              key + ": unknown key for experiment '" +
                                  std::string(info.name) + "'");
        if (key == "m") config.m = parse_double(value, line, col, key);
        else if (key == "theta") config.theta = parse_double(value, line, col, key);
        else if (key == "phi") config.phi = parse_double(value, line, col, key);
        else if (key == "delta_omega")
            config.delta_omega = parse_double(value, line, col, key);
        else if (key == "n") config.n_sites = parse_size(value, line, col, key);
        else if (key == "steps") config.steps = parse_size(value, line, col, key);
        else if (key == "stride") config.stride = parse_size(value, line, col, key);
        else if (key == "phi_points")
            config.phi_points = parse_size(value, line, col, key);
        else if (key == "theta_points")
            config.theta_points = parse_size(value, line, col, key);
        else if (key == "fit_offset")
            config.fit_offset = parse_bool(value, line, col, key);
        else if (key == "detuning_min")
            config.detuning_min = parse_double(value, line, col, key);
        else if (key == "detuning_max")
            config.detuning_max = parse_double(value, line, col, key);
        else if (key == "detuning_points")
            config.detuning_points = parse_size(value, line, col, key);
    }

    if (!(config.m > 0.0) || !std::isfinite(config.m))
        throw ConfigError(0, 0, "m: must be a positive finite number");
    resolve_auto_fields(config);
    domain_check(config);
    return config;
}

std::string serialize_config(const ExperimentConfig& config) {
    const KindInfo& info = info_for(config.kind);
    std::string out = "experiment = " + std::string(info.name) + "\n";
    auto put = [&](const char* key, const std::string& value) {
        if (info.keys.count(key))
            out += std::string(key) + " = " + value + "\n";
    };
    put("m", format_double(config.m));
    put("theta", format_double(config.theta));
    put("phi", format_double(config.phi));
    put("delta_omega", format_double(config.delta_omega));
    put("n", std::to_string(config.n_sites));
    put("steps", std::to_string(config.steps));
    put("stride", std::to_string(config.stride));
    put("phi_points", std::to_string(config.phi_points));
    put("theta_points", std::to_string(config.theta_points));
    put("fit_offset", config.fit_offset ? "true" : "false");
    put("detuning_min", format_double(config.detuning_min));
    put("detuning_max", format_double(config.detuning_max));
    put("detuning_points", std::to_string(config.detuning_points));
    return out;
}

}  // namespace ewalk
