#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "shadowgauge/bodies.hpp"
#include "shadowgauge/constants.hpp"
#include "shadowgauge/error.hpp"
#include "suite.hpp"

namespace fs = std::filesystem;
using namespace shadowgauge;
using namespace shadowgauge::cli;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_input = 2;

// "1e-6" sets both tolerances; "closed_form=1e-7,heuristic=1e-4" sets them separately.
void apply_tol(SuiteConfig& cfg, const std::string& text)
{
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        std::size_t used = 0;
        const std::string value = eq == std::string::npos ? item : item.substr(eq + 1);
        double v = 0.0;
        try {
            v = std::stod(value, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != value.size() || !(v > 0.0) || !(v < 1.0))
            throw Error(Errc::invalid_argument, "bad --tol value \"" + item + "\"");
        if (eq == std::string::npos) {
            cfg.tol_closed_form = v;
            cfg.tol_heuristic = v;
        } else if (item.substr(0, eq) == "closed_form") {
            cfg.tol_closed_form = v;
        } else if (item.substr(0, eq) == "heuristic") {
            cfg.tol_heuristic = v;
        } else {
            throw Error(Errc::invalid_argument, "unknown tolerance \"" + item.substr(0, eq) + "\"");
        }
    }
}

std::vector<fs::path> expand(const std::vector<std::string>& inputs)
{
    std::vector<fs::path> files;
    for (const auto& in : inputs) {
        const fs::path p(in);
        if (fs::is_directory(p)) {
            std::vector<fs::path> found;
            for (const auto& entry : fs::directory_iterator(p))
                if (entry.is_regular_file() && entry.path().extension() == ".json")
                    found.push_back(entry.path());
            std::sort(found.begin(), found.end());
            files.insert(files.end(), found.begin(), found.end());
        } else {
            files.push_back(p);
        }
    }
    return files;
}

void emit(const std::string& text, const std::string& out)
{
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary | std::ios::trunc);
    f << text;
    if (!f)
        throw Error(Errc::invalid_argument, "cannot write " + out);
}

std::string fmt(const char* pattern, double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, x);
    return buf;
}

std::string constants_table(int n_max, Format format, bool text)
{
    std::ostringstream out;
    if (text)
        out << "   n          |B^n|            c_n     c_n - 1/sqrt(e)\n";
    else if (format == Format::csv)
        out << "n,ball_volume,cn,cn_minus_inv_sqrt_e\n";
    nlohmann::json rows = nlohmann::json::array();
    for (int n = 2; n <= n_max; ++n) {
        const double b = unit_ball_volume(n);
        const double c = cn(n);
        const double gap = c - inv_sqrt_e;
        if (text)
            out << fmt("%4.0f", n) << fmt(" %14.8f", b) << fmt(" %14.8f", c) << fmt(" %19.8f", gap) << '\n';
        else if (format == Format::csv)
            out << n << ',' << fmt("%.17g", b) << ',' << fmt("%.17g", c) << ',' << fmt("%.17g", gap) << '\n';
        else
            rows.push_back({{"n", n}, {"ball_volume", b}, {"cn", c}, {"cn_minus_inv_sqrt_e", gap}});
    }
    if (!text && format == Format::json)
        out << rows.dump(2) << '\n';
    return out.str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Shadow inequalities for projection bodies of zonotopes and other symmetric convex bodies"};
    app.require_subcommand(1);

    SuiteConfig cfg;
    std::string format_name = "json";
    const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}};

    auto* gen = app.add_subcommand("gen", "Write seeded random zonotopes and fixture bodies as JSON files");
    gen->add_option("--dim", cfg.dim, "Ambient dimension")->check(CLI::Range(2, 12));
    gen->add_option("--bodies", cfg.body_count, "Number of random zonotopes")->check(CLI::PositiveNumber);
    gen->add_option("--generators", cfg.generator_count, "Generators per random zonotope");
    gen->add_option("--seed", cfg.seed, "Generator seed");
    std::string gen_out = "bodies";
    gen->add_option("--out", gen_out, "Output directory");

    auto* verify = app.add_subcommand("verify", "Run the inequality checks on body files");
    std::vector<std::string> inputs;
    verify->add_option("inputs", inputs, "Body files or directories of *.json")->required();
    verify->add_option("--coarse-samples", cfg.coarse_samples, "Coarse sphere samples (0 = dimension default)")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--restarts", cfg.restarts, "Local refinement restarts")->check(CLI::PositiveNumber);
    std::string tol_text;
    verify->add_option("--tol", tol_text, "Relative tolerance: X, or closed_form=X,heuristic=Y");
    verify->add_flag("--with-oracle", cfg.with_oracle, "Add Monte Carlo agreement rows");
    verify->add_option("--seed", cfg.seed, "Seed for the Monte Carlo oracles");
    verify->add_option("--out", cfg.output_path, "Report file (default stdout)");
    verify->add_option("--format", format_name, "Report format")->check(CLI::IsMember({"json", "csv"}));

    auto* consts = app.add_subcommand("constants", "Tabulate |B^n|, c_n and c_n - 1/sqrt(e)");
    int n_max = 10;
    consts->add_option("--n-max,n_max", n_max, "Largest dimension");
    std::string consts_format;
    consts->add_option("--format", consts_format, "json or csv (default: aligned table)")
        ->check(CLI::IsMember({"json", "csv"}));
    std::string consts_out;
    consts->add_option("--out", consts_out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_input;
    }

    try {
        if (*gen) {
            if (cfg.generator_count > default_generator_cap)
                throw Error(Errc::generator_cap_exceeded,
                            "--generators " + std::to_string(cfg.generator_count) + " exceeds the cap of " +
                                std::to_string(default_generator_cap));
            if (cfg.generator_count < cfg.dim)
                throw Error(Errc::invalid_argument, "--generators must be at least --dim");
            const auto written = generate_suite(cfg, gen_out);
            std::cerr << "wrote " << written.size() << " bodies to " << gen_out << '\n';
            return exit_ok;
        }
        if (*verify) {
            cfg.format = formats.at(format_name);
            if (!tol_text.empty())
                apply_tol(cfg, tol_text);
            const auto files = expand(inputs);
            if (files.empty())
                throw Error(Errc::invalid_argument, "no body files found");
            const SuiteResult result = run_suite(cfg, files);
            emit(cfg.format == Format::json ? suite_to_json(result).dump(2) + "\n" : suite_to_csv(result),
                 cfg.output_path);
            for (const auto& e : result.errors)
                std::cerr << "error: " << e.file << ": " << e.message << '\n';
            std::cerr << result.passed << " passed, " << result.failed << " failed, " << result.not_applicable
                      << " not applicable\n";
            if (!result.errors.empty())
                return exit_input;
            return result.failed > 0 ? exit_failure : exit_ok;
        }
        if (n_max < 2)
            throw Error(Errc::invalid_argument, "n_max must be at least 2");
        const Format f = consts_format.empty() ? Format::json : formats.at(consts_format);
        emit(constants_table(n_max, f, consts_format.empty()), consts_out);
        return exit_ok;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
}
