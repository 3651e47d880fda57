#include "chfif/csv.hpp"

#include <charconv>
#include <fstream>
#include <string>
#include <system_error>

namespace chfif {

namespace {

// Shortest decimal form that parses back to the same double.
std::string shortest(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

double parse_field(const std::string& text, std::size_t begin, std::size_t end,
                   const std::filesystem::path& path) {
    double v = 0.0;
    const auto res = std::from_chars(text.data() + begin, text.data() + end, v);
    if (res.ec != std::errc{} || res.ptr != text.data() + end) {
        raise(Errc::io_failure, "bad numeral in " + path.string());
    }
    return v;
}

}  // namespace

void emit_csv(const SampledFunction& samples, const std::filesystem::path& path) {
    if (samples.size() == 0) {
        raise(Errc::too_few_points, "refusing to write an empty sample to " + path.string());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(Errc::io_failure, "cannot open " + path.string() + " for writing");
    out << "x,f1,f2\n";
    for (std::size_t i = 0; i < samples.size(); ++i) {
        out << shortest(samples.grid[i]) << ',' << shortest(samples.f1_values[i]) << ','
            << shortest(samples.f2_values[i]) << '\n';
    }
    if (!out.flush()) raise(Errc::io_failure, "write to " + path.string() + " failed");
}

SampledFunction parse_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Errc::io_failure, "cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line) || line != "x,f1,f2") {
        raise(Errc::io_failure, "missing x,f1,f2 header in " + path.string());
    }
    SampledFunction out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::size_t c1 = line.find(',');
        const std::size_t c2 = line.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos) {
            raise(Errc::io_failure, "malformed row in " + path.string());
        }
        out.grid.push_back(parse_field(line, 0, c1, path));
        out.f1_values.push_back(parse_field(line, c1 + 1, c2, path));
        out.f2_values.push_back(parse_field(line, c2 + 1, line.size(), path));
    }
    return out;
}

}  // namespace chfif
