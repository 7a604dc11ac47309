#include "etainv/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "etainv/errors.hpp"

namespace etainv {

namespace {

using nlohmann::json;

void check_keys(const json& obj, const std::set<std::string>& allowed,
                const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!allowed.count(it.key())) {
            throw config_error(where + "." + it.key(),
                               "unknown key '" + it.key() + "' in " + where);
        }
    }
}

int get_int(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.contains(key)) {
        throw config_error(where + "." + key, "missing required field '" + key + "'");
    }
    if (!obj[key].is_number_integer()) {
        throw config_error(where + "." + key, "field '" + key + "' must be an integer");
    }
    return obj[key].get<int>();
}

double get_num(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.contains(key)) {
        throw config_error(where + "." + key, "missing required field '" + key + "'");
    }
    if (!obj[key].is_number()) {
        throw config_error(where + "." + key, "field '" + key + "' must be a number");
    }
    return obj[key].get<double>();
}

std::vector<int> get_sign_list(const json& obj, const std::string& key, int expect_len,
                               const std::string& where) {
    if (!obj.contains(key)) {
        throw config_error(where + "." + key, "missing required field '" + key + "'");
    }
    if (!obj[key].is_array()) {
        throw config_error(where + "." + key, "field '" + key + "' must be an array");
    }
    std::vector<int> out;
    for (const auto& v : obj[key]) {
        if (!v.is_number_integer() || (v.get<int>() != 1 && v.get<int>() != -1)) {
            throw config_error(where + "." + key,
                               "entries of '" + key + "' must be +1 or -1");
        }
        out.push_back(v.get<int>());
    }
    if (static_cast<int>(out.size()) != expect_len) {
        std::ostringstream msg;
        msg << "field '" << key << "' must have length " << expect_len << ", got "
            << out.size();
        throw config_error(where + "." + key, msg.str());
    }
    return out;
}

}  // namespace

SurfaceConfig parse_surface_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw config_error("<root>", std::string("JSON parse error: ") + e.what());
    }
    if (!root.is_object()) {
        throw config_error("<root>", "top-level JSON value must be an object");
    }
    check_keys(root, {"genus", "cusps", "spin", "hyperbolic_classes"}, "config");

    SurfaceConfig cfg;
    cfg.surface.genus = get_int(root, "genus", "config");
    cfg.surface.kappa = get_int(root, "cusps", "config");
    if (cfg.surface.genus < 0) throw config_error("config.genus", "genus must be >= 0");
    if (cfg.surface.kappa < 0) throw config_error("config.cusps", "cusps must be >= 0");

    if (!root.contains("spin") || !root["spin"].is_object()) {
        throw config_error("config.spin", "missing or non-object 'spin'");
    }
    const json& spin = root["spin"];
    check_keys(spin, {"x", "y", "h", "k"}, "config.spin");
    cfg.surface.spin.eps_x = get_sign_list(spin, "x", cfg.surface.genus, "config.spin");
    cfg.surface.spin.eps_y = get_sign_list(spin, "y", cfg.surface.genus, "config.spin");
    cfg.surface.spin.eps_h = get_sign_list(spin, "h", cfg.surface.kappa, "config.spin");
    const int k = get_int(spin, "k", "config.spin");
    if (k != 1 && k != -1) throw config_error("config.spin.k", "k must be +1 or -1");
    cfg.surface.spin.eps_k = k;

    if (root.contains("hyperbolic_classes")) {
        if (!root["hyperbolic_classes"].is_array()) {
            throw config_error("config.hyperbolic_classes", "must be an array");
        }
        int idx = 0;
        for (const auto& c : root["hyperbolic_classes"]) {
            std::ostringstream where;
            where << "config.hyperbolic_classes[" << idx << "]";
            if (!c.is_object()) throw config_error(where.str(), "must be an object");
            check_keys(c, {"u", "chi_trace", "index"}, where.str());
            HyperbolicClass h;
            h.u = get_num(c, "u", where.str());
            h.chi_trace = get_num(c, "chi_trace", where.str());
            h.index = get_int(c, "index", where.str());
            if (!(h.u > 0.0)) throw config_error(where.str() + ".u", "u must be > 0");
            if (h.index < 1) throw config_error(where.str() + ".index", "index must be >= 1");
            cfg.classes.push_back(h);
            ++idx;
        }
    }

    try {
        cfg.surface.validate();
    } catch (const std::exception& e) {
        throw config_error("config", e.what());
    }
    return cfg;
}

SurfaceConfig load_surface_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw config_error("config", "cannot open config file: " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_surface_config(ss.str());
}

}  // namespace etainv
