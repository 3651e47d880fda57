#pragma once

#include <filesystem>

#include "chfif/refinement.hpp"

namespace chfif {

/// Standalone 800x600 SVG with the chosen component of `pre` as a blue
/// polyline (#0000ff) and, when given, `post` in black (#000000). Linear axes
/// fit the data range plus a 5% margin. Output bytes are a pure function of
/// the inputs. Throws range_mismatch when the two samples do not share an
/// x-range, io_failure on write errors.
void emit_svg(const SampledFunction& pre, const SampledFunction* post,
              const std::filesystem::path& path, Component component = Component::f1,
              int width = 800, int height = 600);

}  // namespace chfif
