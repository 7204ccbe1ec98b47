#ifndef JSEG_LIMITS_HPP
#define JSEG_LIMITS_HPP

#include <cstddef>
#include <string>

namespace jseg {

// Resource caps for the enumeration-heavy operations. Every cap can be
// overridden through a config file (see parse_limits_file), so the defaults
// only have to keep the stock test suites fast.
struct Limits {
    long long h_enum_cap = 3;          // enumerate_H_i: (2i+1)! elements
    long long g_enum_cap = 2;          // enumerate_G: 2^(2i+1)(2i+1)! elements
    long long k_enum_cap = 3;          // enumerate_K: 2(2i+1)! elements
    long long tree_max_level = 3;      // build_ball segment level
    long long tree_max_radius = 3;
    std::size_t ball_vertex_budget = 200000;
    long long census_max_level = 2;
    long long census_max_distance = 4;
    long long landau_cap = 60;
    long long certify_max_level = 12;
    std::size_t verify_samples = 2000; // sampled cross-checks per level in verify
};

inline const Limits& default_limits() {
    static const Limits limits{};
    return limits;
}

// Reads "key = value" lines (# starts a comment). Unknown keys are rejected.
Limits parse_limits_file(const std::string& path);

} // namespace jseg

#endif
