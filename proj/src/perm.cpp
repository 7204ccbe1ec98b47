#include "jseg/perm.hpp"

#include <algorithm>
#include <stdexcept>

namespace jseg {

FinitePermutation::FinitePermutation(Mapping mapping) {
    std::sort(mapping.begin(), mapping.end());
    for (std::size_t k = 1; k < mapping.size(); ++k) {
        if (mapping[k].first == mapping[k - 1].first)
            throw std::invalid_argument("duplicate point in permutation mapping");
    }
    std::vector<Point> sources, images;
    sources.reserve(mapping.size());
    images.reserve(mapping.size());
    for (const auto& [from, to] : mapping) {
        sources.push_back(from);
        images.push_back(to);
    }
    std::sort(images.begin(), images.end());
    if (sources != images)
        throw std::invalid_argument("mapping is not a bijection of its domain");
    mapping_.reserve(mapping.size());
    for (const auto& pair : mapping) {
        if (pair.first != pair.second)
            mapping_.push_back(pair);
    }
}

FinitePermutation FinitePermutation::transposition(Point a, Point b) {
    if (a == b)
        return {};
    return FinitePermutation{Mapping{{a, b}, {b, a}}};
}

FinitePermutation FinitePermutation::cycle(const std::vector<Point>& points) {
    if (points.size() < 2)
        return {};
    Mapping mapping;
    mapping.reserve(points.size());
    for (std::size_t k = 0; k < points.size(); ++k)
        mapping.emplace_back(points[k], points[(k + 1) % points.size()]);
    return FinitePermutation{std::move(mapping)};
}

FinitePermutation FinitePermutation::from_window_images(Point lo, const std::vector<Point>& images) {
    Mapping mapping;
    mapping.reserve(images.size());
    for (std::size_t k = 0; k < images.size(); ++k)
        mapping.emplace_back(lo + static_cast<Point>(k), images[k]);
    return FinitePermutation{std::move(mapping)};
}

Point FinitePermutation::apply(Point j) const {
    auto it = std::lower_bound(mapping_.begin(), mapping_.end(), j,
                               [](const auto& pair, Point value) { return pair.first < value; });
    if (it != mapping_.end() && it->first == j)
        return it->second;
    return j;
}

FinitePermutation FinitePermutation::inverse() const {
    Mapping mapping;
    mapping.reserve(mapping_.size());
    for (const auto& [from, to] : mapping_)
        mapping.emplace_back(to, from);
    std::sort(mapping.begin(), mapping.end());
    FinitePermutation result;
    result.mapping_ = std::move(mapping); // already canonical
    return result;
}

FinitePermutation FinitePermutation::translated(Point offset) const {
    FinitePermutation result;
    result.mapping_.reserve(mapping_.size());
    for (const auto& [from, to] : mapping_)
        result.mapping_.emplace_back(from + offset, to + offset);
    return result;
}

std::vector<Point> FinitePermutation::support() const {
    std::vector<Point> points;
    points.reserve(mapping_.size());
    for (const auto& pair : mapping_)
        points.push_back(pair.first);
    return points;
}

FinitePermutation operator*(const FinitePermutation& a, const FinitePermutation& b) {
    std::vector<Point> domain;
    domain.reserve(a.mapping_.size() + b.mapping_.size());
    for (const auto& pair : a.mapping_)
        domain.push_back(pair.first);
    for (const auto& pair : b.mapping_)
        domain.push_back(pair.first);
    std::sort(domain.begin(), domain.end());
    domain.erase(std::unique(domain.begin(), domain.end()), domain.end());

    FinitePermutation result;
    for (Point j : domain) {
        Point image = a.apply(b.apply(j));
        if (image != j)
            result.mapping_.emplace_back(j, image);
    }
    return result;
}

ShiftedPermutation shift_map(Point k) { return ShiftedPermutation{k, {}}; }

ShiftedPermutation transposition(Point a, Point b) {
    return ShiftedPermutation{0, FinitePermutation::transposition(a, b)};
}

ShiftedPermutation cycle(const std::vector<Point>& points) {
    return ShiftedPermutation{0, FinitePermutation::cycle(points)};
}

Point apply(const ShiftedPermutation& h, Point j) { return h.finite.apply(j) + h.shift; }

// With a = (ka, pa) and b = (kb, pb) acting as j -> p(j) + k, the composite
// acts as j -> pa(pb(j) + kb) + ka, i.e. shift ka + kb with finite part
// (pa conjugated by the shift -kb) * pb.
ShiftedPermutation compose(const ShiftedPermutation& a, const ShiftedPermutation& b) {
    return ShiftedPermutation{a.shift + b.shift, a.finite.translated(-b.shift) * b.finite};
}

ShiftedPermutation inverse(const ShiftedPermutation& h) {
    return ShiftedPermutation{-h.shift, h.finite.inverse().translated(h.shift)};
}

std::vector<Point> support(const ShiftedPermutation& h) {
    if (h.shift != 0)
        throw std::invalid_argument("infinite support");
    return h.finite.support();
}

bool in_H_i(const ShiftedPermutation& h, long long i) {
    if (h.shift != 0)
        return false;
    const auto& mapping = h.finite.mapping();
    return mapping.empty() || (mapping.front().first >= -i && mapping.back().first <= i);
}

std::vector<ShiftedPermutation> enumerate_H_i(long long i, const Limits& limits) {
    if (i < 0)
        throw std::invalid_argument("negative window");
    if (i > limits.h_enum_cap)
        throw std::length_error("enumeration too large");
    std::vector<Point> images;
    for (Point j = -i; j <= i; ++j)
        images.push_back(j);
    std::vector<ShiftedPermutation> result;
    do {
        result.push_back(ShiftedPermutation{0, FinitePermutation::from_window_images(-i, images)});
    } while (std::next_permutation(images.begin(), images.end()));
    return result;
}

} // namespace jseg
