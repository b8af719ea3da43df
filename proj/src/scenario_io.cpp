#include "gridfreq/scenario_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string_view>

#include <json.hpp>

#include "gridfreq/errors.hpp"

namespace gridfreq {

using json = nlohmann::json;

int parse_time_of_day(const std::string& hhmm) {
    const auto colon = hhmm.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= hhmm.size()) {
        throw ParseError("invalid time of day '" + hhmm + "' (expected HH:MM)");
    }
    const auto digits = [](std::string_view s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
            return std::isdigit(c) != 0;
        });
    };
    const std::string hh = hhmm.substr(0, colon);
    const std::string mm = hhmm.substr(colon + 1);
    if (!digits(hh) || !digits(mm) || mm.size() != 2 || hh.size() > 2) {
        throw ParseError("invalid time of day '" + hhmm + "' (expected HH:MM)");
    }
    const int h = std::stoi(hh);
    const int m = std::stoi(mm);
    if (h > 23 || m > 59) {
        throw ParseError("invalid time of day '" + hhmm + "' (hours 00-23, minutes 00-59)");
    }
    return h * 60 + m;
}

std::string format_time_of_day(int minutes) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%02d:%02d", minutes / 60, minutes % 60);
    return buf;
}

namespace {

std::string location_of(const std::string& text, size_t byte) {
    size_t line = 1, col = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json parse_document(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(origin + ": syntax error at " + location_of(text, e.byte) + ": " +
                         e.what());
    }
}

bool whitespace_only(const std::string& text) {
    return std::all_of(text.begin(), text.end(),
                       [](unsigned char c) { return std::isspace(c) != 0; });
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string join_path(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

// Collects every problem instead of stopping at the first.
struct Reader {
    std::vector<std::string>& errs;

    void reject_unknown(const json& obj, const std::string& path,
                        std::initializer_list<std::string_view> known) {
        for (const auto& item : obj.items()) {
            if (std::find(known.begin(), known.end(), item.key()) == known.end()) {
                errs.push_back(join_path(path, item.key()) + ": unknown key");
            }
        }
    }

    const json* object(const json& parent, const char* key, const std::string& path) {
        if (!parent.contains(key)) return nullptr;
        const json& j = parent.at(key);
        if (!j.is_object()) {
            errs.push_back(join_path(path, key) + ": expected an object");
            return nullptr;
        }
        return &j;
    }

    void number(const json& obj, const char* key, const std::string& path, double& out) {
        if (!obj.contains(key)) return;
        const json& j = obj.at(key);
        if (!j.is_number()) {
            errs.push_back(join_path(path, key) + ": expected a number");
            return;
        }
        out = j.get<double>();
    }

    void integer(const json& obj, const char* key, const std::string& path, int& out) {
        if (!obj.contains(key)) return;
        const json& j = obj.at(key);
        if (!j.is_number_integer()) {
            errs.push_back(join_path(path, key) + ": expected an integer");
            return;
        }
        out = j.get<int>();
    }

    void boolean(const json& obj, const char* key, const std::string& path, bool& out) {
        if (!obj.contains(key)) return;
        const json& j = obj.at(key);
        if (!j.is_boolean()) {
            errs.push_back(join_path(path, key) + ": expected true or false");
            return;
        }
        out = j.get<bool>();
    }

    void time(const json& obj, const char* key, const std::string& path, int& out) {
        if (!obj.contains(key)) return;
        const json& j = obj.at(key);
        if (!j.is_string()) {
            errs.push_back(join_path(path, key) + ": expected a \"HH:MM\" string");
            return;
        }
        try {
            out = parse_time_of_day(j.get<std::string>());
        } catch (const ParseError& e) {
            errs.push_back(join_path(path, key) + ": " + e.what());
        }
    }
};

GenerationMix parse_mix(const json& j, const std::string& path, Reader& r) {
    GenerationMix mix;
    r.reject_unknown(j, path, {"sources"});
    if (!j.contains("sources")) {
        r.errs.push_back(join_path(path, "sources") + ": missing");
        return default_generation_mix();
    }
    const json& arr = j.at("sources");
    if (!arr.is_array()) {
        r.errs.push_back(join_path(path, "sources") + ": expected an array");
        return default_generation_mix();
    }
    for (size_t i = 0; i < arr.size(); ++i) {
        const std::string p = join_path(path, "sources[" + std::to_string(i) + "]");
        const json& e = arr[i];
        if (!e.is_object()) {
            r.errs.push_back(p + ": expected an object");
            continue;
        }
        r.reject_unknown(e, p, {"name", "inertia_constant", "power_output"});
        GenerationSource src;
        if (e.contains("name") && e.at("name").is_string()) {
            src.name = e.at("name").get<std::string>();
        } else {
            r.errs.push_back(p + ".name: expected a string");
        }
        r.number(e, "inertia_constant", p, src.inertia_constant);
        r.number(e, "power_output", p, src.power_output);
        mix.sources.push_back(std::move(src));
    }
    return mix;
}

const std::string kStrategyNames = "immediate, delayed, constant";

bool strategy_from_name(const std::string& name, ChargingStrategy& out) {
    if (name == "immediate") {
        out = ChargingStrategy::immediate();
    } else if (name == "delayed") {
        out = ChargingStrategy::delayed();
    } else if (name == "constant") {
        out = ChargingStrategy::constant_minimum();
    } else {
        return false;
    }
    return true;
}

ChargingStrategy parse_strategy(const json& j, const std::string& path, Reader& r) {
    ChargingStrategy st = ChargingStrategy::immediate();
    if (j.is_string()) {
        if (!strategy_from_name(j.get<std::string>(), st)) {
            r.errs.push_back(path + ": unknown strategy '" + j.get<std::string>() +
                             "' (expected " + kStrategyNames + ")");
        }
        return st;
    }
    if (!j.is_object()) {
        r.errs.push_back(path + ": expected a strategy name or an object");
        return st;
    }
    r.reject_unknown(j, path, {"kind", "charge_power", "window_start", "window_end"});
    if (j.contains("kind")) {
        const json& kind = j.at("kind");
        if (!kind.is_string() || !strategy_from_name(kind.get<std::string>(), st)) {
            r.errs.push_back(join_path(path, "kind") + ": expected one of " + kStrategyNames);
        }
    }
    r.number(j, "charge_power", path, st.charge_power_kw);
    r.time(j, "window_start", path, st.window_start_min);
    r.time(j, "window_end", path, st.window_end_min);
    return st;
}

FleetMode parse_mode(const json& j, const std::string& path, Reader& r) {
    if (j.is_string()) {
        const std::string v = j.get<std::string>();
        if (v == "none") return FleetMode::None;
        if (v == "v1g") return FleetMode::V1G;
        if (v == "v2g") return FleetMode::V2G;
    }
    r.errs.push_back(path + ": expected \"none\", \"v1g\" or \"v2g\"");
    return FleetMode::None;
}

Scenario build_scenario(const json& root, std::vector<std::string>& errs) {
    Scenario sc;
    Reader r{errs};

    if (!root.is_object()) {
        errs.push_back("document: expected a top-level object");
        return sc;
    }
    r.reject_unknown(root, "",
                     {"mix", "h_override", "governor", "fleet", "disturbance", "simulation"});

    if (const json* mix = r.object(root, "mix", "")) sc.mix = parse_mix(*mix, "mix", r);

    if (root.contains("h_override")) {
        const json& h = root.at("h_override");
        if (h.is_number()) {
            sc.h_override_s = h.get<double>();
        } else {
            errs.push_back("h_override: expected a number");
        }
    }

    if (const json* g = r.object(root, "governor", "")) {
        r.reject_unknown(*g, "governor",
                         {"droop_enabled", "droop_r", "t_governor", "t_turbine", "damping_d"});
        r.boolean(*g, "droop_enabled", "governor", sc.governor.droop_enabled);
        r.number(*g, "droop_r", "governor", sc.governor.droop_r);
        r.number(*g, "t_governor", "governor", sc.governor.t_governor);
        r.number(*g, "t_turbine", "governor", sc.governor.t_turbine);
        r.number(*g, "damping_d", "governor", sc.governor.damping_d);
    }

    if (const json* f = r.object(root, "fleet", "")) {
        r.reject_unknown(*f, "fleet",
                         {"vehicle_count", "strategy", "battery", "mode", "participation",
                          "v2g_discharge_power", "actuation_lag"});
        r.integer(*f, "vehicle_count", "fleet", sc.fleet.vehicle_count);
        if (f->contains("strategy")) {
            sc.fleet.strategy = parse_strategy(f->at("strategy"), "fleet.strategy", r);
        }
        if (const json* b = r.object(*f, "battery", "fleet")) {
            r.reject_unknown(*b, "fleet.battery",
                             {"capacity", "initial_soc", "charge_efficiency"});
            r.number(*b, "capacity", "fleet.battery", sc.fleet.battery.capacity_kwh);
            r.number(*b, "initial_soc", "fleet.battery", sc.fleet.battery.initial_soc);
            r.number(*b, "charge_efficiency", "fleet.battery",
                     sc.fleet.battery.charge_efficiency);
        }
        if (f->contains("mode")) sc.fleet.mode = parse_mode(f->at("mode"), "fleet.mode", r);
        r.number(*f, "participation", "fleet", sc.fleet.participation);
        r.number(*f, "v2g_discharge_power", "fleet", sc.fleet.v2g_discharge_power_kw);
        r.number(*f, "actuation_lag", "fleet", sc.fleet.actuation_lag_s);
    }

    if (const json* d = r.object(root, "disturbance", "")) {
        r.reject_unknown(*d, "disturbance", {"magnitude", "apply_time"});
        r.number(*d, "magnitude", "disturbance", sc.disturbance.magnitude_mw);
        r.number(*d, "apply_time", "disturbance", sc.disturbance.apply_time_s);
    }

    if (const json* s = r.object(root, "simulation", "")) {
        r.reject_unknown(*s, "simulation",
                         {"trigger_threshold", "time_of_day", "horizon", "dt"});
        r.number(*s, "trigger_threshold", "simulation", sc.trigger_threshold_hz);
        r.time(*s, "time_of_day", "simulation", sc.sim_time_of_day_min);
        r.number(*s, "horizon", "simulation", sc.horizon_s);
        r.number(*s, "dt", "simulation", sc.dt_s);
    }

    return sc;
}

} // namespace

Scenario parse_scenario_text(const std::string& text, const std::string& origin) {
    if (whitespace_only(text)) return Scenario{}; // pure defaults

    const json root = parse_document(text, origin);
    std::vector<std::string> errs;
    Scenario sc = build_scenario(root, errs);
    for (auto& v : sc.validate()) errs.push_back(std::move(v));
    if (!errs.empty()) throw ValidationError(std::move(errs));
    return sc;
}

Scenario parse_scenario(const std::filesystem::path& path) {
    return parse_scenario_text(read_file(path), path.string());
}

namespace {

std::string strategy_name(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::Immediate: return "immediate";
        case StrategyKind::Delayed: return "delayed";
        case StrategyKind::ConstantMinimum: return "constant";
    }
    return "immediate";
}

std::string mode_name(FleetMode mode) {
    switch (mode) {
        case FleetMode::None: return "none";
        case FleetMode::V1G: return "v1g";
        case FleetMode::V2G: return "v2g";
    }
    return "none";
}

json mix_to_json(const GenerationMix& mix) {
    json sources = json::array();
    for (const auto& s : mix.sources) {
        sources.push_back({{"name", s.name},
                           {"inertia_constant", s.inertia_constant},
                           {"power_output", s.power_output}});
    }
    return {{"sources", std::move(sources)}};
}

} // namespace

std::string serialize_scenario(const Scenario& sc) {
    json root;
    root["mix"] = mix_to_json(sc.mix);
    if (sc.h_override_s) root["h_override"] = *sc.h_override_s;
    root["governor"] = {{"droop_enabled", sc.governor.droop_enabled},
                        {"droop_r", sc.governor.droop_r},
                        {"t_governor", sc.governor.t_governor},
                        {"t_turbine", sc.governor.t_turbine},
                        {"damping_d", sc.governor.damping_d}};
    root["fleet"] = {
        {"vehicle_count", sc.fleet.vehicle_count},
        {"strategy",
         {{"kind", strategy_name(sc.fleet.strategy.kind)},
          {"charge_power", sc.fleet.strategy.charge_power_kw},
          {"window_start", format_time_of_day(sc.fleet.strategy.window_start_min)},
          {"window_end", format_time_of_day(sc.fleet.strategy.window_end_min)}}},
        {"battery",
         {{"capacity", sc.fleet.battery.capacity_kwh},
          {"initial_soc", sc.fleet.battery.initial_soc},
          {"charge_efficiency", sc.fleet.battery.charge_efficiency}}},
        {"mode", mode_name(sc.fleet.mode)},
        {"participation", sc.fleet.participation},
        {"v2g_discharge_power", sc.fleet.v2g_discharge_power_kw},
        {"actuation_lag", sc.fleet.actuation_lag_s}};
    root["disturbance"] = {{"magnitude", sc.disturbance.magnitude_mw},
                           {"apply_time", sc.disturbance.apply_time_s}};
    root["simulation"] = {{"trigger_threshold", sc.trigger_threshold_hz},
                          {"time_of_day", format_time_of_day(sc.sim_time_of_day_min)},
                          {"horizon", sc.horizon_s},
                          {"dt", sc.dt_s}};
    return root.dump(2) + "\n";
}

DailyProfile parse_daily_profile_text(const std::string& text, const std::string& origin) {
    const json root = parse_document(text, origin);
    std::vector<std::string> errs;
    Reader r{errs};
    DailyProfile profile;

    if (!root.is_object()) {
        throw ValidationError({"document: expected a top-level object"});
    }
    r.reject_unknown(root, "", {"description", "entries"});
    if (!root.contains("entries") || !root.at("entries").is_array()) {
        errs.push_back("entries: expected an array of 96 entries");
        throw ValidationError(std::move(errs));
    }
    const json& arr = root.at("entries");
    for (size_t i = 0; i < arr.size(); ++i) {
        const std::string p = "entries[" + std::to_string(i) + "]";
        const json& e = arr[i];
        DailyEntry entry;
        if (!e.is_object()) {
            errs.push_back(p + ": expected an object");
            continue;
        }
        r.reject_unknown(e, p, {"time", "sources"});
        r.time(e, "time", p, entry.time_of_day_min);
        if (e.contains("sources")) {
            json wrapper = {{"sources", e.at("sources")}};
            entry.mix = parse_mix(wrapper, p, r);
        } else {
            errs.push_back(p + ".sources: missing");
        }
        profile.entries.push_back(std::move(entry));
    }

    if (profile.entries.size() != kDailyProfileEntries) {
        errs.push_back("entries: has " + std::to_string(profile.entries.size()) +
                       " entries, expected " + std::to_string(kDailyProfileEntries));
    } else {
        for (size_t i = 0; i < profile.entries.size(); ++i) {
            const int expected = static_cast<int>(i) * 15;
            if (profile.entries[i].time_of_day_min != expected) {
                errs.push_back("entries[" + std::to_string(i) + "].time: expected " +
                               format_time_of_day(expected) + " (15-minute slots from 00:00)");
            }
        }
    }
    if (!errs.empty()) throw ValidationError(std::move(errs));
    return profile;
}

DailyProfile parse_daily_profile(const std::filesystem::path& path) {
    return parse_daily_profile_text(read_file(path), path.string());
}

std::string serialize_daily_profile(const DailyProfile& profile) {
    json entries = json::array();
    for (const auto& e : profile.entries) {
        json entry = {{"time", format_time_of_day(e.time_of_day_min)}};
        entry["sources"] = mix_to_json(e.mix)["sources"];
        entries.push_back(std::move(entry));
    }
    json root = {{"entries", std::move(entries)}};
    return root.dump(2) + "\n";
}

} // namespace gridfreq
