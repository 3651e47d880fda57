#include "chfif/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace chfif {

namespace {

using nlohmann::json;

std::vector<double> number_list(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array()) {
        raise(Errc::config_parse, std::string("missing or non-array key \"") + key + "\"");
    }
    std::vector<double> out;
    out.reserve(j[key].size());
    for (const auto& v : j[key]) {
        if (!v.is_number()) {
            raise(Errc::config_parse, std::string("non-numeric entry under \"") + key + "\"");
        }
        out.push_back(v.get<double>());
    }
    return out;
}

SplitOverrides parse_overrides(const json& j) {
    SplitOverrides ov;
    auto field = [&](const char* key, double& slot) {
        if (!j.contains(key) || !j[key].is_number()) {
            raise(Errc::config_parse,
                  std::string("insertion overrides need numeric \"") + key + "\"");
        }
        slot = j[key].get<double>();
    };
    field("alpha_l", ov.alpha_l);
    field("alpha_r", ov.alpha_r);
    field("beta_l", ov.beta_l);
    field("beta_r", ov.beta_r);
    field("gamma_l", ov.gamma_l);
    field("gamma_r", ov.gamma_r);
    return ov;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        raise(Errc::config_parse, e.what());
    }
    if (!j.is_object()) raise(Errc::config_parse, "top level must be an object");

    RunConfig cfg;
    if (!j.contains("data") || !j["data"].is_array()) {
        raise(Errc::config_parse, "missing or non-array key \"data\"");
    }
    for (const auto& row : j["data"]) {
        if (!row.is_array() || row.size() != 3 || !row[0].is_number() || !row[1].is_number() ||
            !row[2].is_number()) {
            raise(Errc::config_parse, "each data entry must be a [x, y, z] number triple");
        }
        cfg.data.push_back({row[0].get<double>(), row[1].get<double>(), row[2].get<double>()});
    }
    cfg.alpha = number_list(j, "alpha");
    cfg.beta = number_list(j, "beta");
    cfg.gamma = number_list(j, "gamma");

    if (j.contains("insertion")) {
        const json& ins = j["insertion"];
        if (!ins.is_object() || !ins.contains("x") || !ins.contains("y") || !ins.contains("z") ||
            !ins["x"].is_number() || !ins["y"].is_number() || !ins["z"].is_number()) {
            raise(Errc::config_parse, "insertion needs numeric x, y, z");
        }
        InsertionConfig ic;
        ic.x = ins["x"].get<double>();
        ic.y = ins["y"].get<double>();
        ic.z = ins["z"].get<double>();
        if (ins.contains("overrides")) ic.overrides = parse_overrides(ins["overrides"]);
        cfg.insertion = ic;
    }
    if (j.contains("depth")) {
        if (!j["depth"].is_number_integer()) raise(Errc::config_parse, "depth must be an integer");
        cfg.depth = j["depth"].get<int>();
    }
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer()) {
            raise(Errc::config_parse, "seed must be an integer");
        }
        cfg.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("output_csv")) {
        if (!j["output_csv"].is_string()) raise(Errc::config_parse, "output_csv must be a string");
        cfg.output_csv = j["output_csv"].get<std::string>();
    }
    if (j.contains("output_svg")) {
        if (!j["output_svg"].is_string()) raise(Errc::config_parse, "output_svg must be a string");
        cfg.output_svg = j["output_svg"].get<std::string>();
    }
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Errc::io_failure, "cannot open config " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

ChfifSystem system_from_config(const RunConfig& cfg) {
    return build_system(validate_data(cfg.data), IfsParameters{cfg.alpha, cfg.beta, cfg.gamma});
}

}  // namespace chfif
