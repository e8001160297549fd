// mostad: run MOSTA/D campaigns, dump fronts, print tables, cache reference fronts.

#include <algorithm>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "mostad/harness.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;

std::vector<mostad::RunRecord> load_cells(const fs::path& results)
{
    const auto dir = results / "cells";
    if (!fs::is_directory(dir)) {
        throw mostad::ConfigError("no campaign results under " + results.string());
    }
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir)) {
        if (e.path().extension() == ".json") {
            files.push_back(e.path());
        }
    }
    std::sort(files.begin(), files.end());
    std::vector<mostad::RunRecord> records;
    for (const auto& f : files) {
        std::ifstream in(f);
        records.push_back(nlohmann::json::parse(in).get<mostad::RunRecord>());
    }
    return records;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"MOSTA/D multi-objective optimizer and experiment runner"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "run a campaign");
    std::string config_path;
    mostad::CampaignConfig campaign;
    std::string problem;
    std::vector<std::string> algos;
    bool quiet = false;
    run->add_option("--config", config_path, "JSON campaign file");
    run->add_option("--problem", problem, "problem name, or a comma separated list");
    run->add_option("--algo", algos, "mostad and/or mostad-tcheby")->delimiter(',');
    auto* runs_opt = run->add_option("--runs", campaign.runs, "independent runs per cell");
    auto* seed_opt = run->add_option("--seed", campaign.base_seed, "base seed");
    auto* evals_opt = run->add_option("--evals", campaign.max_evals, "evaluation budget per run");
    auto* pop_opt = run->add_option("--population", campaign.population, "population size");
    auto* out_opt = run->add_option("--out", campaign.output_dir, "output directory");
    auto* jobs_opt = run->add_option("--jobs", campaign.jobs, "parallel cells");
    auto* cache_opt = run->add_option("--cache", campaign.reference_dir, "reference front cache");
    run->add_flag("--quiet", quiet, "no per-run progress");

    // fronts
    auto* fronts = app.add_subcommand("fronts", "write plot-ready front CSVs");
    fs::path fronts_out;
    fs::path fronts_results = "results";
    fronts->add_option("--out", fronts_out, "destination directory")->required();
    fronts->add_option("--results", fronts_results, "campaign output directory");

    // table
    auto* table = app.add_subcommand("table", "print a summary table");
    std::string metric = "igd+";
    std::string format = "markdown";
    fs::path table_results = "results";
    table->add_option("--metric", metric, "igd+ or hv");
    table->add_option("--format", format, "csv, json or markdown");
    table->add_option("--results", table_results, "campaign output directory");

    // reference
    auto* reference = app.add_subcommand("reference", "regenerate a cached reference front");
    std::string ref_problem;
    std::size_t ref_count = 0;
    fs::path ref_cache = "reference_fronts";
    reference->add_option("--problem", ref_problem, "problem name")->required();
    reference->add_option("--count", ref_count, "number of points; 0 for the default");
    reference->add_option("--cache", ref_cache, "cache directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (*run) {
            if (!config_path.empty()) {
                auto file = mostad::load_campaign_config(config_path);
                // explicit flags override the file
                if (*runs_opt) file.runs = campaign.runs;
                if (*seed_opt) file.base_seed = campaign.base_seed;
                if (*evals_opt) file.max_evals = campaign.max_evals;
                if (*pop_opt) file.population = campaign.population;
                if (*out_opt) file.output_dir = campaign.output_dir;
                if (*jobs_opt) file.jobs = campaign.jobs;
                if (*cache_opt) file.reference_dir = campaign.reference_dir;
                campaign = std::move(file);
            }
            if (!problem.empty()) {
                campaign.problems.clear();
                std::stringstream ss(problem);
                for (std::string p; std::getline(ss, p, ',');) {
                    campaign.problems.push_back(p);
                }
            }
            if (!algos.empty()) {
                campaign.algorithms = algos;
            }
            const auto records = mostad::run_campaign(campaign, quiet ? nullptr : &std::cerr);
            const auto summary = mostad::summarize(records);
            std::cout << mostad::format_table(summary, mostad::Metric::IgdPlus, mostad::TableFormat::Markdown);
        } else if (*fronts) {
            const auto records = load_cells(fronts_results);
            for (const auto& r : records) {
                mostad::emit_front(r, fronts_out / fmt::format("{}__{}__run{:03}.csv", r.problem, r.algorithm, r.run));
            }
            std::cout << fmt::format("wrote {} fronts to {}\n", records.size(), fronts_out.string());
        } else if (*table) {
            const auto m = mostad::parse_metric(metric);
            const auto f = mostad::parse_table_format(format);
            const auto records = mostad::read_runs_csv(table_results / "runs.csv");
            std::cout << mostad::format_table(mostad::summarize(records), m, f);
        } else if (*reference) {
            const auto p = mostad::make_problem(ref_problem);
            const auto count = ref_count == 0 ? p->default_front_size() : ref_count;
            const auto path = mostad::reference_front_path(ref_cache, p->name(), count);
            std::error_code ec;
            fs::remove(path, ec);
            const auto front = mostad::load_or_build_reference_front(*p, count, ref_cache);
            std::cout << fmt::format("{}: {} points -> {}\n", p->name(), front.size(), path.string());
        }
    } catch (const mostad::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return 0;
}
