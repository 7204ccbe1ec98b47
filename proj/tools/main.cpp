#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "jseg/amalgam.hpp"
#include "jseg/certify.hpp"
#include "jseg/io.hpp"
#include "jseg/limits.hpp"
#include "jseg/tree.hpp"

namespace {

// 0 success, 1 failed verification or exhausted budget, 2 usage error.
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

jseg::Limits load_limits(const std::string& config_path) {
    if (config_path.empty())
        return jseg::default_limits();
    return jseg::parse_limits_file(config_path);
}

int run_verify(long long i_min, long long i_max, unsigned long long seed,
               const std::string& format, const std::string& config_path) {
    jseg::Limits limits = load_limits(config_path);
    jseg::Report report = jseg::certify_range(i_min, i_max, seed, limits);
    if (format == "json")
        std::cout << jseg::to_json(report);
    else
        std::cout << jseg::to_text(report);
    return report.all_pass ? 0 : kExitFail;
}

int run_eval(const std::string& expr) {
    std::cout << jseg::eval_element(expr) << "\n";
    return 0;
}

int run_reduce(const std::string& expr) {
    std::cout << jseg::to_string(jseg::reduce(jseg::parse_word(expr))) << "\n";
    return 0;
}

int run_classify(const std::string& expr) {
    jseg::Classification c = jseg::classify(jseg::parse_word(expr));
    if (c.kind == jseg::Classification::Kind::loxodromic)
        std::cout << "loxodromic " << c.translation_length << "\n";
    else
        std::cout << "elliptic\n";
    return 0;
}

int run_tree_ball(long long level, long long radius, const std::string& out_path,
                  const std::string& config_path) {
    jseg::Limits limits = load_limits(config_path);
    jseg::Ball ball = jseg::build_ball(level, radius, limits);
    std::string text = jseg::export_ball(ball);
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot open " << out_path << "\n";
        return kExitFail;
    }
    out << text;
    return 0;
}

int run_census(long long level, long long distance, const std::string& config_path) {
    jseg::Limits limits = load_limits(config_path);
    std::cout << jseg::joint_stabilizer_census(level, distance, limits) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"segment amalgam and tree certification toolkit"};
    app.require_subcommand(1);

    long long i_min = 2, i_max = 6;
    unsigned long long seed = 0;
    std::string format = "text";
    std::string config_path;
    CLI::App* verify = app.add_subcommand("verify", "run the per-level certification suite");
    verify->add_option("--i-min", i_min, "first level (>= 2)");
    verify->add_option("--i-max", i_max, "last level");
    verify->add_option("--seed", seed, "seed for the sampled cross-checks");
    verify->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--config", config_path, "resource limits file");

    std::string eval_expr;
    CLI::App* eval = app.add_subcommand("eval", "evaluate an element expression");
    eval->add_option("expr", eval_expr, "permutation, vmap, g@.. or w@.. expression")
        ->required();

    std::string reduce_expr;
    CLI::App* reduce = app.add_subcommand("reduce", "reduce a word to normal form");
    reduce->add_option("expr", reduce_expr, "w@.. expression")->required();

    std::string classify_expr;
    CLI::App* classify = app.add_subcommand("classify", "elliptic or loxodromic");
    classify->add_option("expr", classify_expr, "w@.. expression")->required();

    long long ball_level = 1, ball_radius = 1;
    std::string ball_out;
    CLI::App* tree_ball = app.add_subcommand("tree-ball", "export a ball of the tree");
    tree_ball->add_option("--i", ball_level, "segment level")->required();
    tree_ball->add_option("--radius", ball_radius, "ball radius")->required();
    tree_ball->add_option("--out", ball_out, "output file (stdout when absent)");
    tree_ball->add_option("--config", config_path, "resource limits file");

    long long census_level = 1, census_distance = 0;
    CLI::App* census = app.add_subcommand("census", "joint stabilizer census along a geodesic");
    census->add_option("--i", census_level, "segment level")->required();
    census->add_option("--distance", census_distance, "geodesic length")->required();
    census->add_option("--config", config_path, "resource limits file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify->parsed())
            return run_verify(i_min, i_max, seed, format, config_path);
        if (eval->parsed())
            return run_eval(eval_expr);
        if (reduce->parsed())
            return run_reduce(reduce_expr);
        if (classify->parsed())
            return run_classify(classify_expr);
        if (tree_ball->parsed())
            return run_tree_ball(ball_level, ball_radius, ball_out, config_path);
        if (census->parsed())
            return run_census(census_level, census_distance, config_path);
    } catch (const jseg::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
