#include "mostad/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace mostad {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string cell_stem(std::string_view problem, std::string_view algorithm, std::size_t run)
{
    return fmt::format("{}__{}__run{:03}", problem, algorithm, run);
}

void write_text(const fs::path& path, const std::string& text)
{
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path());
    }
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write " + tmp.string());
        }
        out << text;
        if (!out) {
            throw std::runtime_error("write failed for " + tmp.string());
        }
    }
    fs::rename(tmp, path);
}

std::string read_text(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + path.string());
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <typename T>
void take(const json& j, const char* key, T& out)
{
    if (j.contains(key)) {
        out = j.at(key).get<T>();
    }
}

json verdict_json(const std::optional<WilcoxonVerdict>& v)
{
    if (!v) {
        return nullptr;
    }
    return json{{"statistic", v->statistic}, {"z", v->z}, {"p_value", v->p_value}, {"symbol", v->symbol}};
}

json stats_json(const Statistics& s)
{
    return json{{"mean", s.mean}, {"std", s.stddev}, {"median", s.median}, {"best", s.best}, {"worst", s.worst}};
}

const Statistics& metric_stats(const SummaryCell& c, Metric m) { return m == Metric::IgdPlus ? c.igd_plus : c.hv; }

const std::optional<WilcoxonVerdict>& metric_verdict(const SummaryCell& c, Metric m)
{
    return m == Metric::IgdPlus ? c.igd_plus_verdict : c.hv_verdict;
}

} // namespace

// ---------------------------------------------------------------------------
// configuration

bool is_known_algorithm(std::string_view name) { return name == kMostad || name == kMostadTcheby; }

Scalarization scalarization_for(std::string_view algorithm)
{
    if (algorithm == kMostad) {
        return Scalarization::ModifiedTchebycheff;
    }
    if (algorithm == kMostadTcheby) {
        return Scalarization::Tchebycheff;
    }
    throw ConfigError("unknown algorithm '" + std::string(algorithm) + "'");
}

void CampaignConfig::validate() const
{
    if (problems.empty()) {
        throw ConfigError("campaign lists no problems");
    }
    if (algorithms.empty()) {
        throw ConfigError("campaign lists no algorithms");
    }
    for (const auto& p : problems) {
        if (!is_known_problem(p)) {
            throw ConfigError("unknown problem '" + p + "'");
        }
    }
    for (const auto& a : algorithms) {
        if (!is_known_algorithm(a)) {
            throw ConfigError("unknown algorithm '" + a + "'");
        }
    }
    if (runs < 1) {
        throw ConfigError("runs must be at least 1");
    }
    if (jobs < 1) {
        throw ConfigError("jobs must be at least 1");
    }
    for (const auto& p : problems) {
        const auto problem = make_problem(p, problem_options);
        if (population < problem->objectives()) {
            throw ConfigError("population must be at least the number of objectives");
        }
    }
    try {
        algorithm_config(*this, algorithms.front(), 0).validate();
    } catch (const ContractViolation& e) {
        throw ConfigError(e.what());
    }
}

void to_json(json& j, const OperatorParams& p)
{
    j = json{{"alpha", p.alpha},         {"beta", p.beta},           {"gamma", p.gamma},
             {"delta_ax", p.delta_ax},   {"alpha_max", p.alpha_max}, {"alpha_min", p.alpha_min},
             {"gamma_max", p.gamma_max}, {"gamma_min", p.gamma_min}, {"fc_alpha", p.fc_alpha},
             {"fc_gamma", p.fc_gamma},   {"se", p.se},               {"rotation_range", to_string(p.rotation_range)}};
}

void from_json(const json& j, OperatorParams& p)
{
    static const std::set<std::string> known{"alpha",     "beta",      "gamma",    "delta_ax", "alpha_max", "alpha_min",
                                             "gamma_max", "gamma_min", "fc_alpha", "fc_gamma", "se",        "rotation_range"};
    for (const auto& [key, _] : j.items()) {
        if (!known.contains(key)) {
            throw ConfigError("unknown operator setting '" + key + "'");
        }
    }
    take(j, "alpha", p.alpha);
    take(j, "beta", p.beta);
    take(j, "gamma", p.gamma);
    take(j, "delta_ax", p.delta_ax);
    take(j, "alpha_max", p.alpha_max);
    take(j, "alpha_min", p.alpha_min);
    take(j, "gamma_max", p.gamma_max);
    take(j, "gamma_min", p.gamma_min);
    take(j, "fc_alpha", p.fc_alpha);
    take(j, "fc_gamma", p.fc_gamma);
    take(j, "se", p.se);
    if (j.contains("rotation_range")) {
        p.rotation_range = parse_rotation_range(j.at("rotation_range").get<std::string>());
    }
}

void to_json(json& j, const AlgorithmConfig& c)
{
    j = json{{"population", c.population},
             {"neighborhood", c.neighborhood},
             {"parents", c.parent_count()},
             {"max_evals", c.max_evals},
             {"scalarization", to_string(c.scalarization)},
             {"operators", c.operators},
             {"scope_probability", c.scope_probability},
             {"seed", c.seed}};
}

void to_json(json& j, const CampaignConfig& c)
{
    j = json{{"problems", c.problems},
             {"algorithms", c.algorithms},
             {"runs", c.runs},
             {"population", c.population},
             {"neighborhood", c.neighborhood},
             {"parents", c.parents},
             {"max_evals", c.max_evals},
             {"base_seed", c.base_seed},
             {"scope_probability", c.scope_probability},
             {"operators", c.operators},
             {"p3_exponent", c.problem_options.p3_exponent},
             {"truss_tau", c.problem_options.truss_tau},
             {"truss_sweep", c.problem_options.truss_sweep},
             {"reference_count", c.reference_count},
             {"jobs", c.jobs},
             {"output", c.output_dir.string()},
             {"reference_dir", c.reference_dir.string()}};
}

CampaignConfig campaign_from_json(const json& j)
{
    if (!j.is_object()) {
        throw ConfigError("campaign config must be a JSON object");
    }
    static const std::set<std::string> known{
        "problems",  "algorithms", "runs",        "population",  "neighborhood",    "parents",
        "max_evals", "base_seed",  "scope_probability", "operators", "p3_exponent", "truss_tau",
        "truss_sweep", "reference_count", "jobs", "output", "reference_dir"};
    for (const auto& [key, _] : j.items()) {
        if (!known.contains(key)) {
            throw ConfigError("unknown campaign setting '" + key + "'");
        }
    }
    CampaignConfig c;
    try {
        take(j, "problems", c.problems);
        take(j, "algorithms", c.algorithms);
        take(j, "runs", c.runs);
        take(j, "population", c.population);
        take(j, "neighborhood", c.neighborhood);
        take(j, "parents", c.parents);
        take(j, "max_evals", c.max_evals);
        take(j, "base_seed", c.base_seed);
        take(j, "scope_probability", c.scope_probability);
        if (j.contains("operators")) {
            c.operators = j.at("operators").get<OperatorParams>();
        }
        take(j, "p3_exponent", c.problem_options.p3_exponent);
        take(j, "truss_tau", c.problem_options.truss_tau);
        take(j, "truss_sweep", c.problem_options.truss_sweep);
        take(j, "reference_count", c.reference_count);
        take(j, "jobs", c.jobs);
        if (j.contains("output")) {
            c.output_dir = j.at("output").get<std::string>();
        }
        if (j.contains("reference_dir")) {
            c.reference_dir = j.at("reference_dir").get<std::string>();
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("campaign config: ") + e.what());
    }
    return c;
}

CampaignConfig load_campaign_config(const fs::path& path)
{
    json j;
    try {
        j = json::parse(read_text(path));
    } catch (const json::exception& e) {
        throw ConfigError("cannot parse " + path.string() + ": " + e.what());
    } catch (const std::runtime_error& e) {
        throw ConfigError(e.what());
    }
    return campaign_from_json(j);
}

AlgorithmConfig algorithm_config(const CampaignConfig& campaign, std::string_view algorithm, std::size_t run)
{
    AlgorithmConfig c;
    c.population = campaign.population;
    c.neighborhood = campaign.neighborhood;
    c.parents = campaign.parents;
    c.max_evals = campaign.max_evals;
    c.scalarization = scalarization_for(algorithm);
    c.operators = campaign.operators;
    c.scope_probability = campaign.scope_probability;
    c.seed = derive_seed(campaign.base_seed, run);
    return c;
}

// ---------------------------------------------------------------------------
// records

void to_json(json& j, const RunRecord& r)
{
    j = json{{"problem", r.problem},     {"algorithm", r.algorithm},     {"run", r.run},
             {"seed", r.seed},           {"igd_plus", r.igd_plus},       {"hv", r.hv},
             {"evaluations", r.evaluations}, {"wall_seconds", r.wall_seconds}, {"front", r.front}};
}

void from_json(const json& j, RunRecord& r)
{
    j.at("problem").get_to(r.problem);
    j.at("algorithm").get_to(r.algorithm);
    j.at("run").get_to(r.run);
    j.at("seed").get_to(r.seed);
    j.at("igd_plus").get_to(r.igd_plus);
    j.at("hv").get_to(r.hv);
    j.at("evaluations").get_to(r.evaluations);
    j.at("wall_seconds").get_to(r.wall_seconds);
    j.at("front").get_to(r.front);
}

RunRecord execute_cell(const Problem& problem, std::string_view algorithm, std::size_t run,
                       const CampaignConfig& campaign, const std::vector<ObjectiveVector>& reference_front)
{
    const auto config = algorithm_config(campaign, algorithm, run);
    const auto start = std::chrono::steady_clock::now();
    auto result = mostad::run(problem, config);
    const auto stop = std::chrono::steady_clock::now();

    RunRecord r;
    r.problem = problem.name();
    r.algorithm = std::string(algorithm);
    r.run = run;
    r.seed = config.seed;
    r.front = std::move(result.front);
    const auto report = evaluate_metrics(r.front, reference_front);
    r.igd_plus = report.igd_plus;
    r.hv = report.hv;
    r.evaluations = result.evaluations;
    r.wall_seconds = std::chrono::duration<double>(stop - start).count();
    return r;
}

void emit_front(const RunRecord& record, const fs::path& path)
{
    std::string text = fmt::format("# problem={},algorithm={},seed={}\n", record.problem, record.algorithm, record.seed);
    for (const auto& f : record.front) {
        text += fmt::format("{:.17g}\n", fmt::join(f, ","));
    }
    write_text(path, text);
}

void write_runs_csv(const fs::path& path, const std::vector<RunRecord>& records)
{
    std::string text = "problem,algorithm,run,seed,igd_plus,hv,evaluations,front_size\n";
    for (const auto& r : records) {
        text += fmt::format("{},{},{},{},{:.17g},{:.17g},{},{}\n", r.problem, r.algorithm, r.run, r.seed, r.igd_plus,
                            r.hv, r.evaluations, r.front.size());
    }
    write_text(path, text);
}

std::vector<RunRecord> read_runs_csv(const fs::path& path)
{
    std::stringstream in(read_text(path));
    std::string line;
    std::getline(in, line); // header
    std::vector<RunRecord> out;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            cells.push_back(cell);
        }
        if (cells.size() != 8) {
            throw std::runtime_error("malformed row in " + path.string());
        }
        RunRecord r;
        r.problem = cells[0];
        r.algorithm = cells[1];
        r.run = std::stoul(cells[2]);
        r.seed = std::stoull(cells[3]);
        r.igd_plus = std::stod(cells[4]);
        r.hv = std::stod(cells[5]);
        r.evaluations = std::stoul(cells[6]);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<RunRecord> run_campaign(const CampaignConfig& config, std::ostream* log)
{
    config.validate();

    struct Cell {
        std::size_t problem;
        std::string algorithm;
        std::size_t run;
    };
    std::vector<std::unique_ptr<Problem>> problems;
    std::vector<std::vector<ObjectiveVector>> references;
    std::vector<Cell> cells;
    for (std::size_t p = 0; p < config.problems.size(); ++p) {
        problems.push_back(make_problem(config.problems[p], config.problem_options));
        const auto count = config.reference_count == 0 ? problems.back()->default_front_size() : config.reference_count;
        references.push_back(load_or_build_reference_front(*problems.back(), count, config.reference_dir));
        for (const auto& a : config.algorithms) {
            for (std::size_t r = 0; r < config.runs; ++r) {
                cells.push_back({p, a, r});
            }
        }
    }

    const fs::path cell_dir = config.output_dir / "cells";
    fs::create_directories(cell_dir);
    {
        json cj = config;
        write_text(config.output_dir / "config.json", cj.dump(2) + "\n");
    }

    std::vector<RunRecord> records(cells.size());
    std::atomic<std::size_t> next{0};
    std::mutex log_mutex;
    std::exception_ptr failure;

    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            const auto& c = cells[i];
            const auto& problem = *problems[c.problem];
            const auto path = cell_dir / (cell_stem(problem.name(), c.algorithm, c.run) + ".json");
            try {
                bool resumed = false;
                if (fs::exists(path)) {
                    auto r = json::parse(read_text(path)).get<RunRecord>();
                    if (r.seed == derive_seed(config.base_seed, c.run)) {
                        records[i] = std::move(r);
                        resumed = true;
                    }
                }
                if (!resumed) {
                    records[i] = execute_cell(problem, c.algorithm, c.run, config, references[c.problem]);
                    write_text(path, json(records[i]).dump() + "\n");
                }
                if (log != nullptr) {
                    std::lock_guard lock(log_mutex);
                    *log << fmt::format("{:<6} {:<14} run {:>3}  IGD+ {}  HV {}{}\n", problem.name(), c.algorithm,
                                        c.run, format_sci(records[i].igd_plus), format_sci(records[i].hv),
                                        resumed ? "  (cached)" : "");
                }
            } catch (...) {
                std::lock_guard lock(log_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next = cells.size();
            }
        }
    };

    const std::size_t jobs = std::min(config.jobs, std::max<std::size_t>(cells.size(), 1));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < jobs; ++t) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    write_runs_csv(config.output_dir / "runs.csv", records);
    std::string timings = "problem,algorithm,run,wall_seconds\n";
    for (const auto& r : records) {
        timings += fmt::format("{},{},{},{:.6f}\n", r.problem, r.algorithm, r.run, r.wall_seconds);
        emit_front(r, config.output_dir / "fronts" / (cell_stem(r.problem, r.algorithm, r.run) + ".csv"));
    }
    write_text(config.output_dir / "timings.csv", timings);

    const auto summary = summarize(records);
    write_text(config.output_dir / "summary.json", summary_to_json(summary).dump(2) + "\n");
    write_text(config.output_dir / "summary_igd+.csv", format_table(summary, Metric::IgdPlus, TableFormat::Csv));
    write_text(config.output_dir / "summary_hv.csv", format_table(summary, Metric::Hv, TableFormat::Csv));
    return records;
}

// ---------------------------------------------------------------------------
// summaries

static std::string lowered(std::string_view s)
{
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

Metric parse_metric(std::string_view raw)
{
    const auto name = lowered(raw);
    if (name == "igd+" || name == "igd_plus" || name == "igdplus") {
        return Metric::IgdPlus;
    }
    if (name == "hv") {
        return Metric::Hv;
    }
    throw ConfigError("unknown metric '" + std::string(raw) + "'");
}

std::string_view to_string(Metric m) noexcept { return m == Metric::IgdPlus ? "igd+" : "hv"; }

TableFormat parse_table_format(std::string_view raw)
{
    const auto name = lowered(raw);
    if (name == "csv") return TableFormat::Csv;
    if (name == "json") return TableFormat::Json;
    if (name == "markdown" || name == "md") return TableFormat::Markdown;
    throw ConfigError("unknown table format '" + std::string(raw) + "'");
}

Statistics describe(const std::vector<double>& values, Better better)
{
    require(!values.empty(), "describe: no values");
    Statistics s;
    const double n = static_cast<double>(values.size());
    double sum = 0.0;
    for (double v : values) {
        sum += v;
    }
    s.mean = sum / n;
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) {
            ss += (v - s.mean) * (v - s.mean);
        }
        s.stddev = std::sqrt(ss / (n - 1.0));
    }
    s.median = median(values);
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    s.best = better == Better::Lower ? *lo : *hi;
    s.worst = better == Better::Lower ? *hi : *lo;
    return s;
}

const SummaryCell* Summary::find(std::string_view problem, std::string_view algorithm) const
{
    for (const auto& c : cells) {
        if (c.problem == problem && c.algorithm == algorithm) {
            return &c;
        }
    }
    return nullptr;
}

Summary summarize(const std::vector<RunRecord>& records)
{
    require(!records.empty(), "summarize: no records");
    Summary s;
    std::map<std::pair<std::string, std::string>, std::vector<const RunRecord*>> groups;
    for (const auto& r : records) {
        if (std::find(s.problems.begin(), s.problems.end(), r.problem) == s.problems.end()) {
            s.problems.push_back(r.problem);
        }
        if (std::find(s.algorithms.begin(), s.algorithms.end(), r.algorithm) == s.algorithms.end()) {
            s.algorithms.push_back(r.algorithm);
        }
        groups[{r.problem, r.algorithm}].push_back(&r);
    }

    auto column = [&](const std::string& p, const std::string& a, Metric m) {
        std::vector<double> v;
        const auto it = groups.find({p, a});
        if (it != groups.end()) {
            // sorted by run index so the reduction does not depend on record order
            auto rs = it->second;
            std::sort(rs.begin(), rs.end(), [](auto* x, auto* y) { return x->run < y->run; });
            for (const auto* r : rs) {
                v.push_back(m == Metric::IgdPlus ? r->igd_plus : r->hv);
            }
        }
        return v;
    };

    for (const auto& p : s.problems) {
        const auto base_igd = column(p, s.algorithms.front(), Metric::IgdPlus);
        const auto base_hv = column(p, s.algorithms.front(), Metric::Hv);
        for (const auto& a : s.algorithms) {
            const auto igd = column(p, a, Metric::IgdPlus);
            if (igd.empty()) {
                continue;
            }
            const auto hv = column(p, a, Metric::Hv);
            SummaryCell cell;
            cell.problem = p;
            cell.algorithm = a;
            cell.runs = igd.size();
            cell.igd_plus = describe(igd, Better::Lower);
            cell.hv = describe(hv, Better::Higher);
            if (a != s.algorithms.front() && base_igd.size() >= 5 && igd.size() >= 5) {
                cell.igd_plus_verdict = wilcoxon_rank_sum(base_igd, igd, 0.05, Better::Lower);
                cell.hv_verdict = wilcoxon_rank_sum(base_hv, hv, 0.05, Better::Higher);
            }
            s.cells.push_back(std::move(cell));
        }
    }
    return s;
}

json summary_to_json(const Summary& summary)
{
    json cells = json::array();
    for (const auto& c : summary.cells) {
        cells.push_back(json{{"problem", c.problem},
                             {"algorithm", c.algorithm},
                             {"runs", c.runs},
                             {"igd_plus", stats_json(c.igd_plus)},
                             {"hv", stats_json(c.hv)},
                             {"igd_plus_verdict", verdict_json(c.igd_plus_verdict)},
                             {"hv_verdict", verdict_json(c.hv_verdict)}});
    }
    return json{{"baseline", summary.algorithms.front()},
                {"problems", summary.problems},
                {"algorithms", summary.algorithms},
                {"cells", cells}};
}

std::string format_sci(double v)
{
    if (!std::isfinite(v)) {
        return fmt::format("{}", v);
    }
    auto s = fmt::format("{:.4e}", v);
    const auto e = s.find('e');
    const char sign = s[e + 1];
    std::size_t digits = e + 2;
    while (digits + 1 < s.size() && s[digits] == '0') {
        ++digits;
    }
    return s.substr(0, e + 1) + (sign == '-' ? "-" : "+") + s.substr(digits);
}

std::string format_table(const Summary& summary, Metric metric, TableFormat format)
{
    switch (format) {
    case TableFormat::Csv: {
        std::string out = "problem,algorithm,runs,mean,std,median,best,worst,p_value,symbol\n";
        for (const auto& c : summary.cells) {
            const auto& st = metric_stats(c, metric);
            const auto& v = metric_verdict(c, metric);
            out += fmt::format("{},{},{},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{},{}\n", c.problem, c.algorithm,
                               c.runs, st.mean, st.stddev, st.median, st.best, st.worst,
                               v ? fmt::format("{:.17g}", v->p_value) : "", v ? v->symbol : "");
        }
        return out;
    }
    case TableFormat::Json: {
        json rows = json::array();
        for (const auto& c : summary.cells) {
            auto row = stats_json(metric_stats(c, metric));
            row["problem"] = c.problem;
            row["algorithm"] = c.algorithm;
            row["runs"] = c.runs;
            row["verdict"] = verdict_json(metric_verdict(c, metric));
            rows.push_back(std::move(row));
        }
        return json{{"metric", to_string(metric)}, {"baseline", summary.algorithms.front()}, {"rows", rows}}.dump(2) +
               "\n";
    }
    case TableFormat::Markdown: {
        std::string out = "| problem |";
        std::string rule = "|---|";
        for (const auto& a : summary.algorithms) {
            out += " " + a + " |";
            rule += "---|";
        }
        out += "\n" + rule + "\n";
        for (const auto& p : summary.problems) {
            out += "| " + p + " |";
            for (const auto& a : summary.algorithms) {
                const auto* c = summary.find(p, a);
                if (c == nullptr) {
                    out += " |";
                    continue;
                }
                const auto& st = metric_stats(*c, metric);
                const auto& v = metric_verdict(*c, metric);
                out += fmt::format(" {} ({}){} |", format_sci(st.mean), format_sci(st.stddev), v ? v->symbol : "");
            }
            out += "\n";
        }
        return out;
    }
    }
    return {};
}

} // namespace mostad
