// Command-line front end: builds systems from a JSON config, runs insertion
// and the smoothness/dimension analyses, and emits CSV/SVG curve data.
//
// Exit codes: 0 success, 2 validation failure, 64 usage error, 65 config
// parse error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "chfif/boxcount.hpp"
#include "chfif/config.hpp"
#include "chfif/csv.hpp"
#include "chfif/evaluate.hpp"
#include "chfif/insertion.hpp"
#include "chfif/modulus.hpp"
#include "chfif/smoothness.hpp"
#include "chfif/svg.hpp"

namespace {

using namespace chfif;

constexpr int kExitValidation = 2;
constexpr int kExitUsage = 64;
constexpr int kExitConfig = 65;

struct Options {
    std::string config_path;
    bool check = false;
    bool classify = false;
    double x = 0.0, y = 0.0, z = 0.0;
    bool has_x = false, has_y = false, has_z = false;
    int depth = -1;  // -1: use config depth
    double tol = 1e-6;
    std::string format = "csv";
    std::string out_path;
    std::string component = "f1";
    double min_scale = 1.0 / 1024.0;
    double max_scale = 1.0 / 8.0;
    int levels = 8;
};

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

Component component_of(const std::string& name) {
    if (name == "f1") return Component::f1;
    if (name == "f2") return Component::f2;
    throw CLI::ValidationError("--component", "must be f1 or f2");
}

InsertionSpec spec_from(const ChfifSystem& sys, const RunConfig& cfg, const Options& opt) {
    double x = opt.has_x ? opt.x : 0.0;
    double y = opt.has_y ? opt.y : 0.0;
    double z = opt.has_z ? opt.z : 0.0;
    std::optional<SplitOverrides> overrides;
    if (cfg.insertion) {
        if (!opt.has_x) x = cfg.insertion->x;
        if (!opt.has_y) y = cfg.insertion->y;
        if (!opt.has_z) z = cfg.insertion->z;
        overrides = cfg.insertion->overrides;
    } else if (!(opt.has_x && opt.has_y && opt.has_z)) {
        raise(Errc::config_parse, "no insertion point: give --x/--y/--z or an insertion block");
    }
    return make_insertion_spec(sys, x, y, z, overrides);
}

void print_indices(const char* tag, const SmoothnessIndices& idx, const SmoothnessClass& cls) {
    std::cout << tag << " Omega=" << fmt(idx.Omega) << " Gamma=" << fmt(idx.Gamma)
              << " Theta=" << fmt(idx.Theta) << " class=" << to_string(cls.kind)
              << " delta=" << fmt(cls.delta) << "\n";
}

void print_bounds(const char* tag, const DimensionBounds& b) {
    std::cout << tag << " variant=" << (b.variant == BoundVariant::alpha_sum ? "alpha" : "gamma")
              << " lower=" << fmt(b.lower) << " upper=" << fmt(b.upper)
              << " applicable=" << (b.applicable ? "yes" : "no") << " (" << b.reason << ")\n";
}

int cmd_construct(const RunConfig& cfg, const Options& opt) {
    const ChfifSystem sys = system_from_config(cfg);
    std::cout << "maps: " << sys.map_count() << "\n";
    if (opt.check) {
        std::cout << "join-up residual: " << fmt(sys.join_up_residual()) << "\n";
    }
    return 0;
}

int cmd_evaluate(const RunConfig& cfg, const Options& opt) {
    if (!opt.has_x) raise(Errc::config_parse, "evaluate needs --x");
    const ChfifSystem sys = system_from_config(cfg);
    const int depth = opt.depth > 0 ? opt.depth : 60;
    const EvalResult r = evaluate_at(sys, opt.x, depth);
    std::cout << "x,f1,f2,error_bound\n"
              << fmt(opt.x) << ',' << fmt(r.f1) << ',' << fmt(r.f2) << ',' << fmt(r.error_bound)
              << "\n";
    return 0;
}

int cmd_insert(const RunConfig& cfg, const Options& opt) {
    const ChfifSystem sys = system_from_config(cfg);
    const InsertionSpec spec = spec_from(sys, cfg, opt);
    if (opt.classify) {
        const InsertionClassification cls =
            classify_insertion(sys, spec.x_hat, spec.y_hat, spec.z_hat, opt.tol);
        std::cout << to_string(cls.kind) << "\n";
        return 0;
    }
    const ChfifSystem inserted = insert(sys, spec);
    std::cout << "maps: " << inserted.map_count() << "\n";
    std::cout << "join-up residual: " << fmt(inserted.join_up_residual()) << "\n";
    std::cout << "split-L residual: " << fmt(split_L_identity_check(sys, spec)) << "\n";
    return 0;
}

int cmd_classify(const RunConfig& cfg, const Options&) {
    const ChfifSystem sys = system_from_config(cfg);
    const LipschitzData lip = lipschitz_of_affine(sys);
    const SmoothnessIndices idx = compute_indices(sys, lip);
    print_indices("pre:", idx, classify_smoothness(idx, lip));
    if (cfg.insertion) {
        const InsertionSpec spec = make_insertion_spec(
            sys, cfg.insertion->x, cfg.insertion->y, cfg.insertion->z, cfg.insertion->overrides);
        const ChfifSystem inserted = insert(sys, spec);
        const LipschitzData lip_post = lip.with_split(spec.k);
        const SmoothnessIndices post = compute_indices(inserted, lip_post);
        print_indices("post:", post, classify_smoothness(post, lip_post));
    }
    return 0;
}

int cmd_bounds(const RunConfig& cfg, const Options&) {
    const ChfifSystem sys = system_from_config(cfg);
    const LipschitzData lip = lipschitz_of_affine(sys);
    const SmoothnessIndices idx = compute_indices(sys, lip);
    for (const DimensionBounds& b : dimension_bounds_all(sys, idx, lip)) print_bounds("pre:", b);
    if (cfg.insertion) {
        const InsertionSpec spec = make_insertion_spec(
            sys, cfg.insertion->x, cfg.insertion->y, cfg.insertion->z, cfg.insertion->overrides);
        const ChfifSystem inserted = insert(sys, spec);
        const LipschitzData lip_post = lip.with_split(spec.k);
        const SmoothnessIndices post = compute_indices(inserted, lip_post);
        for (const DimensionBounds& b : dimension_bounds_all(inserted, post, lip_post)) {
            print_bounds("post:", b);
        }
    }
    return 0;
}

int cmd_compare(const RunConfig& cfg, const Options&) {
    const ChfifSystem sys = system_from_config(cfg);
    if (!cfg.insertion) raise(Errc::config_parse, "compare needs an insertion block");
    const InsertionSpec spec = make_insertion_spec(sys, cfg.insertion->x, cfg.insertion->y,
                                                   cfg.insertion->z, cfg.insertion->overrides);
    const ChfifSystem inserted = insert(sys, spec);
    const LipschitzData lip = lipschitz_of_affine(sys);
    const LipschitzData lip_post = lip.with_split(spec.k);
    const SmoothnessIndices pre = compute_indices(sys, lip);
    const SmoothnessIndices post = compute_indices(inserted, lip_post);
    const SmoothnessClass pre_cls = classify_smoothness(pre, lip);
    const SmoothnessClass post_cls = classify_smoothness(post, lip_post);
    print_indices("pre:", pre, pre_cls);
    print_indices("post:", post, post_cls);
    std::cout << "smoothness: " << to_string(compare_smoothness(pre, pre_cls, post, post_cls))
              << "\n";

    const DimensionBounds pre_b = dimension_bounds(sys, pre, lip);
    const DimensionBounds post_b = dimension_bounds(inserted, post, lip_post);
    print_bounds("pre:", pre_b);
    print_bounds("post:", post_b);
    const BoundsComparison cmp = compare_bounds(pre_b, post_b);
    std::cout << "bounds: upper_shrank=" << (cmp.upper_shrank ? "yes" : "no")
              << " lower_grew=" << (cmp.lower_grew ? "yes" : "no")
              << " upper_margin=" << fmt(cmp.upper_margin)
              << " lower_margin=" << fmt(cmp.lower_margin) << "\n";
    return 0;
}

int cmd_render(const RunConfig& cfg, const Options& opt) {
    const ChfifSystem sys = system_from_config(cfg);
    const int depth = opt.depth >= 0 ? opt.depth : cfg.depth;
    const SampledFunction pre = sample_graph(sys, depth);
    const Component comp = component_of(opt.component);

    if (opt.format == "csv") {
        std::string path = opt.out_path;
        if (path.empty() && cfg.output_csv) path = *cfg.output_csv;
        if (path.empty()) raise(Errc::config_parse, "render needs --out or output_csv");
        emit_csv(pre, path);
        std::cout << "wrote " << path << " (" << pre.size() << " rows)\n";
        return 0;
    }
    if (opt.format == "svg") {
        std::string path = opt.out_path;
        if (path.empty() && cfg.output_svg) path = *cfg.output_svg;
        if (path.empty()) raise(Errc::config_parse, "render needs --out or output_svg");
        std::optional<SampledFunction> post;
        if (cfg.insertion) {
            const InsertionSpec spec = make_insertion_spec(
                sys, cfg.insertion->x, cfg.insertion->y, cfg.insertion->z,
                cfg.insertion->overrides);
            post = sample_graph(insert(sys, spec), depth);
        }
        emit_svg(pre, post ? &*post : nullptr, path, comp);
        std::cout << "wrote " << path << "\n";
        return 0;
    }
    throw CLI::ValidationError("--format", "must be csv or svg");
}

int cmd_boxdim(const RunConfig& cfg, const Options& opt) {
    const ChfifSystem sys = system_from_config(cfg);
    const int depth = opt.depth >= 0 ? opt.depth : cfg.depth;
    const SampledFunction s = sample_graph(sys, depth);
    const std::vector<double>& vals =
        component_of(opt.component) == Component::f1 ? s.f1_values : s.f2_values;

    // normalize the graph to the unit square
    const double x_lo = s.grid.front(), x_hi = s.grid.back();
    double v_lo = vals[0], v_hi = vals[0];
    for (double v : vals) {
        v_lo = std::min(v_lo, v);
        v_hi = std::max(v_hi, v);
    }
    const double v_span = v_hi > v_lo ? v_hi - v_lo : 1.0;
    std::vector<double> xs(s.size()), ys(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        xs[i] = (s.grid[i] - x_lo) / (x_hi - x_lo);
        ys[i] = (vals[i] - v_lo) / v_span;
    }
    const BoxCountEstimate est = box_dimension(xs, ys, opt.min_scale, opt.max_scale, opt.levels);
    std::cout << "slope: " << fmt(est.slope) << "\n";
    std::cout << "r2: " << fmt(est.fit_r2) << "\n";
    for (std::size_t i = 0; i < est.scales.size(); ++i) {
        std::cout << "scale " << fmt(est.scales[i]) << " boxes " << est.counts[i] << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coalescence hidden-variable fractal interpolation toolkit"};
    app.require_subcommand(1);

    Options opt;
    std::string command;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", opt.config_path, "JSON config path")->required();
        sub->callback([&, sub]() { command = sub->get_name(); });
    };

    CLI::App* construct = app.add_subcommand("construct", "build and validate a system");
    add_common(construct);
    construct->add_flag("--check", opt.check, "print the join-up residual");

    CLI::App* evaluate = app.add_subcommand("evaluate", "evaluate f at an abscissa");
    add_common(evaluate);
    evaluate->add_option("--x", opt.x, "abscissa")->required();
    evaluate->add_option("--depth", opt.depth, "evaluation depth (default 60)");
    evaluate->callback([&]() {
        command = "evaluate";
        opt.has_x = true;
    });

    CLI::App* insert_cmd = app.add_subcommand("insert", "insert a point");
    add_common(insert_cmd);
    insert_cmd->add_option("--x", opt.x, "inserted abscissa")->each([&](const std::string&) {
        opt.has_x = true;
    });
    insert_cmd->add_option("--y", opt.y, "inserted primary ordinate")->each([&](const std::string&) {
        opt.has_y = true;
    });
    insert_cmd->add_option("--z", opt.z, "inserted hidden ordinate")->each([&](const std::string&) {
        opt.has_z = true;
    });
    insert_cmd->add_flag("--classify", opt.classify, "print the insertion kind and stop");
    insert_cmd->add_option("--tol", opt.tol, "knot tolerance (default 1e-6)");

    CLI::App* classify = app.add_subcommand("classify", "smoothness indices and class");
    add_common(classify);

    CLI::App* bounds = app.add_subcommand("bounds", "fractal-dimension bounds");
    add_common(bounds);

    CLI::App* compare = app.add_subcommand("compare", "pre/post insertion comparison");
    add_common(compare);

    CLI::App* render = app.add_subcommand("render", "emit curve data");
    add_common(render);
    render->add_option("--depth", opt.depth, "refinement depth (default from config)");
    render->add_option("--format", opt.format, "csv or svg");
    render->add_option("--out", opt.out_path, "output path");
    render->add_option("--component", opt.component, "f1 or f2");

    CLI::App* boxdim = app.add_subcommand("boxdim", "box-counting dimension estimate");
    add_common(boxdim);
    boxdim->add_option("--depth", opt.depth, "refinement depth (default from config)");
    boxdim->add_option("--component", opt.component, "f1 or f2");
    boxdim->add_option("--min-scale", opt.min_scale, "finest box size");
    boxdim->add_option("--max-scale", opt.max_scale, "coarsest box size");
    boxdim->add_option("--levels", opt.levels, "max number of dyadic scales");

    try {
        app.parse(argc, argv);

        const chfif::RunConfig cfg = chfif::load_config(opt.config_path);
        if (command == "construct") return cmd_construct(cfg, opt);
        if (command == "evaluate") return cmd_evaluate(cfg, opt);
        if (command == "insert") return cmd_insert(cfg, opt);
        if (command == "classify") return cmd_classify(cfg, opt);
        if (command == "bounds") return cmd_bounds(cfg, opt);
        if (command == "compare") return cmd_compare(cfg, opt);
        if (command == "render") return cmd_render(cfg, opt);
        if (command == "boxdim") return cmd_boxdim(cfg, opt);
        std::cerr << "chfif: usage: unknown command\n";
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "chfif: usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const chfif::Error& e) {
        switch (e.code()) {
            case chfif::Errc::config_parse:
                std::cerr << "chfif: config: " << e.what() << "\n";
                return kExitConfig;
            case chfif::Errc::io_failure:
                std::cerr << "chfif: io: " << e.what() << "\n";
                return 1;
            default:
                std::cerr << "chfif: validation: " << e.what() << "\n";
                return kExitValidation;
        }
    } catch (const std::exception& e) {
        std::cerr << "chfif: internal: " << e.what() << "\n";
        return 1;
    }
}
