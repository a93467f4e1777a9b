#include "suite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "shadowgauge/calculus.hpp"
#include "shadowgauge/error.hpp"
#include "shadowgauge/generate.hpp"
#include "shadowgauge/io.hpp"
#include "shadowgauge/oracle.hpp"
#include "shadowgauge/parallel.hpp"

namespace shadowgauge::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr std::int64_t oracle_samples = 200000;

void write_json(const fs::path& path, const json& j)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << j.dump(2) << '\n';
    if (!out)
        throw Error(Errc::invalid_argument, "cannot write " + path.string());
}

CheckOptions options_for(const SuiteConfig& cfg)
{
    CheckOptions o;
    o.search.coarse_samples = cfg.coarse_samples;
    o.search.restarts = cfg.restarts;
    if (cfg.tol_closed_form)
        o.tol_closed_form = *cfg.tol_closed_form;
    if (cfg.tol_heuristic)
        o.tol_heuristic = *cfg.tol_heuristic;
    return o;
}

CheckReport degenerate(CheckName name, const std::string& why)
{
    CheckReport r;
    r.name = name;
    r.verdict = Verdict::not_applicable;
    r.note = why;
    return r;
}

CheckReport oracle_row(CheckName name, const Estimate& est, double exact)
{
    CheckReport r;
    r.name = name;
    r.lhs = est.value;
    r.rhs = exact;
    r.gap = est.value - exact;
    r.passed = std::abs(r.gap) <= 3.0 * est.std_error;
    r.verdict = r.passed ? Verdict::passed : Verdict::failed;
    r.tolerances.tol_rel = 3.0 * est.std_error / std::abs(exact);
    r.note = "monte carlo, 3 standard errors";
    return r;
}

struct Loaded {
    std::string name;
    Body body;
};

std::vector<Row> zonotope_rows(const Loaded& item, const SuiteConfig& cfg, std::uint64_t oracle_seed)
{
    const auto& l = item.body.as<Zonotope>();
    const CheckOptions opts = options_for(cfg);
    std::vector<Row> rows;
    auto add = [&](std::string against, CheckReport r) {
        rows.push_back(Row{item.name, std::move(against), std::move(r)});
    };

    if (!l.is_full_rank()) {
        const std::string why = "degenerate body: generators have rank " + std::to_string(l.rank()) + " < " +
                                std::to_string(l.dim());
        add("", degenerate(CheckName::hyperplane, why));
        if (l.dim() >= 3)
            add("", degenerate(CheckName::surface_hyperplane, why));
        add("0.5L", degenerate(CheckName::separation, why));
        return rows;
    }

    add("", hyperplane_check(Body(l), opts));
    if (l.dim() >= 3)
        add("", surface_hyperplane_check(Body(l), opts));

    std::vector<std::pair<std::string, Body>> inner;
    inner.emplace_back("0.5L", Body(l).scaled(0.5));
    inner.emplace_back("0.9L", Body(l).scaled(0.9));
    if (l.dim() >= 2 && l.dim() <= 12) {
        const HRep hrep = zonotope_facets(l);
        double s = std::numeric_limits<double>::infinity();
        for (int k = 0; k < l.dim(); ++k)
            s = std::min(s, radial(hrep, Vector::Unit(l.dim(), k)));
        inner.emplace_back("cross_polytope(" + json(0.5 * s).dump() + ")", make_cross_polytope(l.dim(), 0.5 * s));
    }
    for (const auto& [label, k] : inner) {
        add(label, separation_check(k, l, opts));
        add(label, volume_difference_check(k, l, opts));
    }

    if (cfg.with_oracle) {
        add("", oracle_row(CheckName::oracle_volume, mc_volume(l, oracle_samples, oracle_seed), volume(Body(l)).value));
        add("", oracle_row(CheckName::oracle_surface_area, cauchy_surface_area(Body(l), oracle_samples, oracle_seed),
                           surface_area(Body(l))));
    }
    return rows;
}

std::vector<Row> ball_rows(const Loaded& item, const SuiteConfig& cfg)
{
    const CheckOptions opts = options_for(cfg);
    std::vector<Row> rows;
    rows.push_back(Row{item.name, "", hyperplane_check(item.body, opts)});
    const int n = item.body.dim();
    if (n >= 3) {
        rows.push_back(Row{item.name, "", surface_hyperplane_check(item.body, opts)});
        rows.push_back(Row{item.name, "", ball_equality_check(n)});
    }
    return rows;
}

std::vector<Row> facet_rows(const Loaded& item, const std::vector<const Loaded*>& partners, const SuiteConfig& cfg,
                            std::uint64_t oracle_seed)
{
    const CheckOptions opts = options_for(cfg);
    std::vector<Row> rows;
    for (const Loaded* p : partners) {
        const auto& l = p->body.as<Zonotope>();
        if (l.dim() != item.body.dim() || !l.is_full_rank())
            continue;
        rows.push_back(Row{item.name, p->name, separation_check(item.body, l, opts)});
    }
    if (cfg.with_oracle)
        rows.push_back(Row{item.name, "",
                           oracle_row(CheckName::oracle_surface_area,
                                      cauchy_surface_area(item.body, oracle_samples, oracle_seed),
                                      surface_area(item.body))});
    return rows;
}

std::string fmt(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

} // namespace

std::vector<fs::path> generate_suite(const SuiteConfig& cfg, const fs::path& dir)
{
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw Error(Errc::invalid_argument, "cannot create " + dir.string() + ": " + ec.message());

    std::vector<fs::path> written;
    auto emit = [&](const std::string& name, const json& j) {
        const fs::path p = dir / name;
        write_json(p, j);
        written.push_back(p);
    };

    for (int i = 0; i < cfg.body_count; ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "zonotope_%03d.json", i);
        const Zonotope z = random_zonotope(cfg.dim, static_cast<std::size_t>(cfg.generator_count), cfg.seed,
                                           static_cast<std::uint64_t>(i));
        emit(name, body_to_json(Body(z)));
    }

    emit("cube.json", body_to_json(Body(make_cube(cfg.dim))));
    std::vector<double> half(static_cast<std::size_t>(cfg.dim), 1.0);
    half.back() = 0.5;
    emit("box.json", body_to_json(Body(make_box(half))));
    emit("cross_polytope.json", cross_polytope_json(cfg.dim, 1.0));
    emit("ball.json", body_to_json(Ball(cfg.dim, 1.0)));
    return written;
}

SuiteResult run_suite(const SuiteConfig& cfg, const std::vector<fs::path>& files)
{
    SuiteResult result;
    std::vector<Loaded> loaded;
    for (const auto& f : files) {
        try {
            std::ifstream in(f, std::ios::binary);
            if (!in)
                throw Error(Errc::parse_error, "cannot open file");
            json j;
            try {
                j = json::parse(in);
            } catch (const json::exception& e) {
                throw Error(Errc::parse_error, e.what());
            }
            loaded.push_back(Loaded{f.filename().string(), body_from_json(j)});
        } catch (const Error& e) {
            result.errors.push_back(FileError{f.string(), e.what()});
        }
    }

    std::vector<const Loaded*> zonotopes;
    for (const auto& item : loaded)
        if (item.body.is<Zonotope>())
            zonotopes.push_back(&item);

    std::vector<std::vector<Row>> per_body(loaded.size());
    std::vector<std::string> failures(loaded.size());
    parallel_chunks(static_cast<std::int64_t>(loaded.size()), static_cast<int>(loaded.size()),
                    [&](std::int64_t begin, std::int64_t end, int) {
                        for (std::int64_t i = begin; i < end; ++i) {
                            const auto idx = static_cast<std::size_t>(i);
                            const Loaded& item = loaded[idx];
                            const std::uint64_t oracle_seed = cfg.seed * 1000003u + idx;
                            try {
                                if (item.body.is<Zonotope>())
                                    per_body[idx] = zonotope_rows(item, cfg, oracle_seed);
                                else if (item.body.is<Ball>())
                                    per_body[idx] = ball_rows(item, cfg);
                                else
                                    per_body[idx] = facet_rows(item, zonotopes, cfg, oracle_seed);
                            } catch (const Error& e) {
                                failures[idx] = e.what();
                            }
                        }
                    });

    for (std::size_t i = 0; i < loaded.size(); ++i) {
        if (!failures[i].empty())
            result.errors.push_back(FileError{loaded[i].name, failures[i]});
        for (auto& row : per_body[i]) {
            switch (row.report.verdict) {
            case Verdict::passed: ++result.passed; break;
            case Verdict::failed: ++result.failed; break;
            case Verdict::not_applicable: ++result.not_applicable; break;
            }
            result.rows.push_back(std::move(row));
        }
    }
    return result;
}

json suite_to_json(const SuiteResult& result)
{
    json reports = json::array();
    for (const auto& row : result.rows) {
        json j = report_to_json(row.report);
        j["body"] = row.body;
        if (!row.against.empty())
            j["against"] = row.against;
        reports.push_back(std::move(j));
    }
    json errors = json::array();
    for (const auto& e : result.errors)
        errors.push_back({{"file", e.file}, {"message", e.message}});
    return {{"reports", std::move(reports)},
            {"summary", {{"passed", result.passed}, {"failed", result.failed},
                         {"not_applicable", result.not_applicable}}},
            {"errors", std::move(errors)}};
}

std::string suite_to_csv(const SuiteResult& result)
{
    std::ostringstream out;
    out << "body,against,name,lhs,rhs,gap,epsilon_star,witness_xi,passed,verdict,tol_rel,coarse_samples,restarts,"
           "shrink_tol,refined,note\n";
    for (const auto& row : result.rows) {
        const auto& r = row.report;
        std::string witness;
        if (r.witness_xi) {
            for (int k = 0; k < r.witness_xi->dim(); ++k) {
                if (k)
                    witness += ';';
                witness += fmt((*r.witness_xi)[k]);
            }
        }
        out << csv_field(row.body) << ',' << csv_field(row.against) << ',' << to_string(r.name) << ','
            << fmt(r.lhs) << ',' << fmt(r.rhs) << ',' << fmt(r.gap) << ','
            << (r.epsilon_star ? fmt(*r.epsilon_star) : "") << ',' << witness << ','
            << (r.passed ? "true" : "false") << ',' << to_string(r.verdict) << ',' << fmt(r.tolerances.tol_rel)
            << ',' << r.tolerances.coarse_samples << ',' << r.tolerances.restarts << ','
            << fmt(r.tolerances.shrink_tol) << ',' << (r.tolerances.refined ? "true" : "false") << ','
            << csv_field(r.note) << '\n';
    }
    for (const auto& e : result.errors)
        out << "# error," << csv_field(e.file) << ',' << csv_field(e.message) << '\n';
    return out.str();
}

} // namespace shadowgauge::cli
