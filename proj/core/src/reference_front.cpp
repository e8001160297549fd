#include <fstream>
#include <sstream>
#include <system_error>

#include <fmt/format.h>
#include <fmt/os.h>

#include "mostad/problems.hpp"

namespace mostad {

namespace fs = std::filesystem;

void write_front_csv(const fs::path& path, std::string_view problem, std::size_t m,
                     const std::vector<ObjectiveVector>& front)
{
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path());
    }
    // rename() is atomic on POSIX, so concurrent readers never see a partial file
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write " + tmp.string());
        }
        out << fmt::format("# problem={} m={} count={}\n", problem, m, front.size());
        for (const auto& f : front) {
            out << fmt::format("{:.17g}\n", fmt::join(f, ","));
        }
        if (!out) {
            throw std::runtime_error("write failed for " + tmp.string());
        }
    }
    fs::rename(tmp, path);
}

std::vector<ObjectiveVector> read_front_csv(const fs::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read " + path.string());
    }
    std::vector<ObjectiveVector> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        ObjectiveVector f;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            f.push_back(std::stod(cell));
        }
        out.push_back(std::move(f));
    }
    return out;
}

fs::path reference_front_path(const fs::path& cache_dir, std::string_view problem, std::size_t count)
{
    return cache_dir / fmt::format("{}_{}.csv", problem, count);
}

std::vector<ObjectiveVector> load_or_build_reference_front(const Problem& problem, std::size_t count,
                                                           const fs::path& cache_dir)
{
    const auto path = reference_front_path(cache_dir, problem.name(), count);
    std::error_code ec;
    if (fs::exists(path, ec)) {
        return read_front_csv(path);
    }
    auto front = problem.reference_front(count);
    write_front_csv(path, problem.name(), problem.objectives(), front);
    return front;
}

} // namespace mostad
