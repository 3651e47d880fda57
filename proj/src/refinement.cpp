#include "chfif/refinement.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "chfif/kernels.hpp"

namespace chfif {

RefineLimits RefineLimits::from_env() {
    RefineLimits lim;
    if (const char* raw = std::getenv("CHFIF_MAX_POINTS")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(raw, &end, 10);
        if (end != raw && *end == '\0' && v > 0) lim.max_points = static_cast<std::size_t>(v);
    }
    return lim;
}

double dedup_tolerance(const ChfifSystem& sys) { return 1e-12 * sys.span(); }

namespace {

// Union of the previous round with its images. Previous points win on
// coincident abscissae, which keeps the rounds nested bit for bit and the
// original nodes exact at every depth.
std::vector<Point3> merge_rounds(const std::vector<Point3>& prev,
                                 const std::vector<Point3>& images, double tol) {
    std::vector<Point3> merged;
    merged.reserve(images.size() + prev.size() / 2);
    std::size_t ia = 0, ib = 0;
    auto push = [&](const Point3& pt, bool consume_images) {
        merged.push_back(pt);
        if (consume_images) {
            while (ib < images.size() && std::abs(images[ib].x - pt.x) <= tol) ++ib;
        }
    };
    while (ia < prev.size() || ib < images.size()) {
        if (ia >= prev.size()) {
            const Point3 pt = images[ib++];
            push(pt, true);
        } else if (ib >= images.size()) {
            push(prev[ia++], false);
        } else if (std::abs(prev[ia].x - images[ib].x) <= tol) {
            push(prev[ia++], true);
        } else if (prev[ia].x < images[ib].x) {
            push(prev[ia++], false);
        } else {
            const Point3 pt = images[ib++];
            push(pt, true);
        }
    }
    return merged;
}

void check_budget(const ChfifSystem& sys, int depth, const RefineLimits& limits) {
    if (depth < 0) raise(Errc::depth_too_large, "depth must be non-negative");
    if (depth > limits.max_depth) {
        raise(Errc::depth_too_large, "depth " + std::to_string(depth) +
                                         " exceeds the configured maximum " +
                                         std::to_string(limits.max_depth));
    }
    // |Delta^j| grows like N^(j+1) + 1
    const double projected = std::pow(static_cast<double>(sys.map_count()), depth + 1) + 1.0;
    if (projected > static_cast<double>(limits.max_points)) {
        raise(Errc::depth_too_large,
              "depth " + std::to_string(depth) + " needs about " +
                  std::to_string(static_cast<unsigned long long>(projected)) +
                  " points, limit is " + std::to_string(limits.max_points) +
                  " (CHFIF_MAX_POINTS)");
    }
}

}  // namespace

RefinedPointSet refine(const ChfifSystem& sys, int depth, const RefineLimits& limits) {
    check_budget(sys, depth, limits);
    const double tol = dedup_tolerance(sys);

    RefinedPointSet result;
    result.depth = depth;
    result.points = sys.data().points();
    std::vector<Point3> images;
    for (int round = 0; round < depth; ++round) {
        kernels::map_images_parallel(sys, result.points, images);
        result.points = merge_rounds(result.points, images, tol);
        if (result.points.size() > limits.max_points) {
            raise(Errc::depth_too_large, "refinement exceeded the point budget of " +
                                             std::to_string(limits.max_points));
        }
    }
    return result;
}

SampledFunction sample_graph(const ChfifSystem& sys, int depth, const RefineLimits& limits) {
    const RefinedPointSet refined = refine(sys, depth, limits);
    SampledFunction out;
    out.grid.reserve(refined.points.size());
    out.f1_values.reserve(refined.points.size());
    out.f2_values.reserve(refined.points.size());
    for (const Point3& pt : refined.points) {
        out.grid.push_back(pt.x);
        out.f1_values.push_back(pt.y);
        out.f2_values.push_back(pt.z);
    }
    out.error_bound = sys.certified_error_bound(depth);
    return out;
}

}  // namespace chfif
