#pragma once

#include <stdexcept>
#include <string>

namespace chfif {

enum class Errc {
    non_increasing_abscissae,
    too_few_points,
    non_finite_value,
    parameter_constraint_violation,
    length_mismatch,
    index_out_of_range,
    abscissa_out_of_domain,
    depth_too_large,
    abscissa_collision,
    evaluation_too_coarse,
    degenerate_ordinates,
    hypothesis_not_met,
    degenerate_logarithm,
    degenerate_scales,
    grid_too_coarse,
    range_mismatch,
    config_parse,
    io_failure,
};

constexpr const char* errc_name(Errc c) {
    switch (c) {
        case Errc::non_increasing_abscissae: return "non-increasing-abscissae";
        case Errc::too_few_points: return "too-few-points";
        case Errc::non_finite_value: return "non-finite-value";
        case Errc::parameter_constraint_violation: return "parameter-constraint-violation";
        case Errc::length_mismatch: return "length-mismatch";
        case Errc::index_out_of_range: return "index-out-of-range";
        case Errc::abscissa_out_of_domain: return "abscissa-out-of-domain";
        case Errc::depth_too_large: return "depth-too-large";
        case Errc::abscissa_collision: return "abscissa-collision";
        case Errc::evaluation_too_coarse: return "evaluation-too-coarse";
        case Errc::degenerate_ordinates: return "degenerate-ordinates";
        case Errc::hypothesis_not_met: return "hypothesis-not-met";
        case Errc::degenerate_logarithm: return "degenerate-logarithm";
        case Errc::degenerate_scales: return "degenerate-scales";
        case Errc::grid_too_coarse: return "grid-too-coarse";
        case Errc::range_mismatch: return "range-mismatch";
        case Errc::config_parse: return "config-parse";
        case Errc::io_failure: return "io-failure";
    }
    return "unknown";
}

/// Library-wide exception. `what()` is a single line naming the violated
/// constraint, suitable for machine-parseable diagnostics.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& detail) { throw Error(code, detail); }

}  // namespace chfif
