#include "jseg/limits.hpp"

#include <fstream>
#include <stdexcept>

namespace jseg {

namespace {

std::string trim(const std::string& s) {
    std::size_t lo = s.find_first_not_of(" \t\r");
    if (lo == std::string::npos) return "";
    std::size_t hi = s.find_last_not_of(" \t\r");
    return s.substr(lo, hi - lo + 1);
}

} // namespace

Limits parse_limits_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file: " + path);
    Limits limits;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto where = [&] { return path + ":" + std::to_string(lineno); };
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("expected key = value at " + where());
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        long long n = 0;
        try {
            std::size_t used = 0;
            n = std::stoll(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
        } catch (const std::exception&) {
            throw std::runtime_error("expected integer value at " + where());
        }
        if (n < 0)
            throw std::runtime_error("negative value at " + where());
        if (key == "h_enum_cap") limits.h_enum_cap = n;
        else if (key == "g_enum_cap") limits.g_enum_cap = n;
        else if (key == "k_enum_cap") limits.k_enum_cap = n;
        else if (key == "tree_max_level") limits.tree_max_level = n;
        else if (key == "tree_max_radius") limits.tree_max_radius = n;
        else if (key == "ball_vertex_budget") limits.ball_vertex_budget = static_cast<std::size_t>(n);
        else if (key == "census_max_level") limits.census_max_level = n;
        else if (key == "census_max_distance") limits.census_max_distance = n;
        else if (key == "landau_cap") limits.landau_cap = n;
        else if (key == "certify_max_level") limits.certify_max_level = n;
        else if (key == "verify_samples") limits.verify_samples = static_cast<std::size_t>(n);
        else throw std::runtime_error("unknown config key '" + key + "' at " + where());
    }
    return limits;
}

} // namespace jseg
