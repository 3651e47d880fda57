#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "chfif/insertion.hpp"
#include "chfif/model.hpp"

namespace chfif {

struct InsertionConfig {
    double x = 0.0, y = 0.0, z = 0.0;
    std::optional<SplitOverrides> overrides;
};

/// Decoded run configuration. Structural / type problems raise config_parse;
/// constraint violations surface later when the core types are built.
struct RunConfig {
    std::vector<Point3> data;
    std::vector<double> alpha, beta, gamma;
    std::optional<InsertionConfig> insertion;
    int depth = 10;
    std::uint64_t seed = 0;
    std::optional<std::string> output_csv;
    std::optional<std::string> output_svg;
};

RunConfig load_config(const std::filesystem::path& path);
RunConfig parse_config(const std::string& text);

/// Builds the validated system from the config's data and parameters.
ChfifSystem system_from_config(const RunConfig& cfg);

}  // namespace chfif
