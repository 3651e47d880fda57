#pragma once

#include <filesystem>

#include "chfif/refinement.hpp"

namespace chfif {

/// Writes `x,f1,f2` rows, LF endings, shortest numerals that parse back
/// bit-identically. Throws io_failure; an empty sample is rejected before any
/// file is created.
void emit_csv(const SampledFunction& samples, const std::filesystem::path& path);

/// Inverse of emit_csv (error_bound is not part of the format and comes back 0).
SampledFunction parse_csv(const std::filesystem::path& path);

}  // namespace chfif
