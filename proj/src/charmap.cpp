#include "jseg/charmap.hpp"

#include <algorithm>
#include <stdexcept>

namespace jseg {

VMap::VMap(std::vector<Point> support) : support_(std::move(support)) {
    std::sort(support_.begin(), support_.end());
    if (std::adjacent_find(support_.begin(), support_.end()) != support_.end())
        throw std::invalid_argument("duplicate point in map support");
}

int VMap::value_at(Point j) const {
    return std::binary_search(support_.begin(), support_.end(), j) ? -1 : 1;
}

VMap vmul(const VMap& a, const VMap& b) {
    VMap result;
    std::set_symmetric_difference(a.support_.begin(), a.support_.end(),
                                  b.support_.begin(), b.support_.end(),
                                  std::back_inserter(result.support_));
    return result;
}

VMap conj(const ShiftedPermutation& h, const VMap& v) {
    VMap result;
    result.support_.reserve(v.support_.size());
    for (Point j : v.support_)
        result.support_.push_back(apply(h, j));
    std::sort(result.support_.begin(), result.support_.end());
    return result;
}

VMap z(long long i) {
    if (i < 0)
        throw std::invalid_argument("negative window");
    std::vector<Point> support;
    support.reserve(static_cast<std::size_t>(2 * i + 1));
    for (Point j = -i; j <= i; ++j)
        support.push_back(j);
    return VMap{std::move(support)};
}

bool in_V_i(const VMap& v, long long i) {
    const auto& support = v.support();
    return support.empty() || (support.front() >= -i && support.back() <= i);
}

} // namespace jseg
