#include "jseg/tree.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "jseg/io.hpp"

namespace jseg {

namespace {

unsigned long long sat_mul(unsigned long long a, unsigned long long b) {
    unsigned long long r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        return static_cast<unsigned long long>(-1);
    return r;
}

unsigned long long sat_add(unsigned long long a, unsigned long long b) {
    unsigned long long r = 0;
    if (__builtin_add_overflow(a, b, &r))
        return static_cast<unsigned long long>(-1);
    return r;
}

// Least member of the H_i coset (a.h) H_i, by brute minimum.
ShiftedPermutation min_in_h_coset(const ShiftedPermutation& h,
                                  const std::vector<ShiftedPermutation>& subgroup) {
    ShiftedPermutation best = compose(h, subgroup.front());
    for (std::size_t k = 1; k < subgroup.size(); ++k) {
        ShiftedPermutation candidate = compose(h, subgroup[k]);
        if (candidate < best)
            best = std::move(candidate);
    }
    return best;
}

} // namespace

GElement coset_rep(const GElement& a, long long i) {
    if (a.level != i && a.level != i + 1)
        throw std::invalid_argument("K_i not a designated subgroup of this factor");
    // The coset is {v, v * conj(h, z_i)} x (h H_i); minimize v first, then h.
    VMap twisted = vmul(a.v, conj(a.h, z(i)));
    VMap vmin = std::min(a.v, twisted);
    if (a.level == i)
        return GElement{i, std::move(vmin), {}}; // h H_i = H_i, least member is the identity
    Limits relaxed = default_limits();
    relaxed.h_enum_cap = std::max(relaxed.h_enum_cap, i);
    return GElement{a.level, std::move(vmin),
                    min_in_h_coset(a.h, enumerate_H_i(i, relaxed))};
}

std::vector<GElement> coset_reps(long long segment_level, Side side, const Limits& limits) {
    const long long i = segment_level;
    if (i < 1)
        throw std::invalid_argument("level must be positive");
    std::vector<GElement> reps;
    if (side == Side::A) {
        // Representatives (v, id) with v the lesser of {v, v z_i}.
        for (VMap& v : enumerate_V_i(i)) {
            if (v <= vmul(v, z(i)))
                reps.emplace_back(i, std::move(v), ShiftedPermutation{});
        }
        return reps; // already ascending: constant h, ascending v
    }
    std::vector<ShiftedPermutation> h_small = enumerate_H_i(i, limits);
    std::set<ShiftedPermutation> h_mins;
    for (const ShiftedPermutation& h : enumerate_H_i(i + 1, limits))
        h_mins.insert(min_in_h_coset(h, h_small));
    std::vector<VMap> vs = enumerate_V_i(i + 1);
    for (const ShiftedPermutation& h : h_mins) {
        VMap zi_twisted = conj(h, z(i));
        for (const VMap& v : vs) {
            if (v <= vmul(v, zi_twisted))
                reps.emplace_back(i + 1, v, h);
        }
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

unsigned long long coset_count(long long segment_level, Side side) {
    const unsigned long long i = static_cast<unsigned long long>(segment_level);
    if (segment_level < 1 || segment_level > 20)
        throw std::invalid_argument("level out of range");
    if (side == Side::A)
        return 1ULL << (2 * i);
    return sat_mul(sat_mul(1ULL << (2 * i + 2), 2 * i + 2), 2 * i + 3);
}

unsigned long long factor_order(long long level) {
    if (level < 1 || level > 7)
        throw std::invalid_argument("level out of range");
    unsigned long long order = 1;
    for (long long k = 2; k <= 2 * level + 1; ++k)
        order *= static_cast<unsigned long long>(k);
    return order << (2 * level + 1);
}

unsigned long long projected_ball_vertices(long long segment_level, long long radius) {
    unsigned long long total = 1, layer = 1;
    unsigned long long deg_a = coset_count(segment_level, Side::A);
    unsigned long long deg_b = coset_count(segment_level, Side::B);
    for (long long d = 1; d <= radius; ++d) {
        // Depth d-1 vertices sit on side A for even d-1, side B for odd.
        unsigned long long deg = ((d - 1) % 2 == 0) ? deg_a : deg_b;
        layer = sat_mul(layer, d == 1 ? deg : deg - 1);
        total = sat_add(total, layer);
    }
    return total;
}

TreeVertex base_vertex(long long segment_level, Side side) {
    return TreeVertex{side, Word{segment_level}};
}

bool vertex_equal(const TreeVertex& u, const TreeVertex& v) {
    if (u.side != v.side)
        return false;
    return in_factor(wmul(winv(u.rep), v.rep), u.side);
}

Ball build_ball(long long segment_level, long long radius, const Limits& limits) {
    const long long i = segment_level;
    if (i < 1)
        throw std::invalid_argument("level must be positive");
    if (radius < 0)
        throw std::invalid_argument("negative radius");
    if (i > limits.tree_max_level || radius > limits.tree_max_radius)
        throw std::length_error("ball too large: level or radius above configured cap");
    unsigned long long projected = projected_ball_vertices(i, radius);
    if (projected > limits.ball_vertex_budget)
        throw std::length_error("ball too large: projected " + std::to_string(projected) +
                                " vertices exceeds budget " +
                                std::to_string(limits.ball_vertex_budget));

    std::vector<GElement> reps_a, reps_b;
    if (radius >= 1)
        reps_a = coset_reps(i, Side::A, limits);
    if (radius >= 2)
        reps_b = coset_reps(i, Side::B, limits);

    std::vector<Ball::Vertex> order; // BFS order; the root is index 0
    order.push_back(Ball::Vertex{Side::A, Word{i}, Ball::npos, 0});
    for (std::size_t at = 0; at < order.size(); ++at) {
        if (order[at].depth >= static_cast<std::size_t>(radius))
            continue;
        const Side side = order[at].side;
        const std::vector<GElement>& reps = (side == Side::A) ? reps_a : reps_b;
        for (const GElement& rep : reps) {
            // The identity representative points back to the parent except
            // at the root, where it reaches the base B-vertex.
            if (rep.is_identity() && at != 0)
                continue;
            std::vector<Syllable> syls = order[at].rep.syllables();
            if (!rep.is_identity())
                syls.push_back(Syllable{side, rep});
            order.push_back(Ball::Vertex{other_side(side), Word{i, std::move(syls)},
                                         at, order[at].depth + 1});
        }
    }

    // Canonical ids: sort by printed representative, side as tie-break.
    std::vector<std::string> keys;
    keys.reserve(order.size());
    for (const Ball::Vertex& v : order)
        keys.push_back(to_string(v.rep));
    std::vector<std::size_t> by_key(order.size());
    std::iota(by_key.begin(), by_key.end(), 0);
    std::sort(by_key.begin(), by_key.end(), [&](std::size_t a, std::size_t b) {
        if (keys[a] != keys[b])
            return keys[a] < keys[b];
        return order[a].side < order[b].side;
    });
    std::vector<std::size_t> new_id(order.size());
    for (std::size_t k = 0; k < by_key.size(); ++k)
        new_id[by_key[k]] = k;

    Ball ball;
    ball.segment_level = i;
    ball.radius = radius;
    ball.base_index = new_id[0];
    ball.vertices.reserve(order.size());
    for (std::size_t k = 0; k < by_key.size(); ++k) {
        Ball::Vertex v = std::move(order[by_key[k]]);
        if (v.parent != Ball::npos)
            v.parent = new_id[v.parent];
        ball.vertices.push_back(std::move(v));
    }
    ball.edges.reserve(order.size() - 1);
    for (std::size_t k = 0; k < ball.vertices.size(); ++k) {
        std::size_t p = ball.vertices[k].parent;
        if (p != Ball::npos)
            ball.edges.emplace_back(std::min(p, k), std::max(p, k));
    }
    std::sort(ball.edges.begin(), ball.edges.end());
    return ball;
}

std::string export_ball(const Ball& ball) {
    std::string out;
    for (std::size_t k = 0; k < ball.vertices.size(); ++k) {
        out += std::to_string(k);
        out += (ball.vertices[k].side == Side::A) ? " A " : " B ";
        out += to_string(ball.vertices[k].rep);
        out += '\n';
    }
    for (const auto& [u, v] : ball.edges)
        out += "edge " + std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::optional<std::size_t> find_vertex(const Ball& ball, const TreeVertex& v) {
    for (std::size_t k = 0; k < ball.vertices.size(); ++k) {
        if (ball.vertices[k].side != v.side)
            continue;
        if (vertex_equal(TreeVertex{ball.vertices[k].side, ball.vertices[k].rep}, v))
            return k;
    }
    return std::nullopt;
}

std::size_t tree_distance(const Ball& ball, std::size_t u, std::size_t v) {
    if (u >= ball.vertices.size() || v >= ball.vertices.size())
        throw std::invalid_argument("vertex id out of range");
    std::size_t steps = 0;
    while (ball.vertices[u].depth > ball.vertices[v].depth) {
        u = ball.vertices[u].parent;
        ++steps;
    }
    while (ball.vertices[v].depth > ball.vertices[u].depth) {
        v = ball.vertices[v].parent;
        ++steps;
    }
    while (u != v) {
        u = ball.vertices[u].parent;
        v = ball.vertices[v].parent;
        steps += 2;
    }
    return steps;
}

std::optional<std::size_t> displacement(const Word& g, const TreeVertex& v, const Ball& ball) {
    if (g.segment_level() != ball.segment_level ||
        v.rep.segment_level() != ball.segment_level)
        throw std::invalid_argument("level mismatch");
    std::optional<std::size_t> from = find_vertex(ball, v);
    if (!from)
        throw std::invalid_argument("vertex not in ball");
    TreeVertex image{v.side, wmul(g, v.rep)};
    std::optional<std::size_t> to = find_vertex(ball, image);
    if (!to)
        return std::nullopt;
    return tree_distance(ball, *from, *to);
}

Classification classify(const Word& w) {
    Word core = cyclic_reduce(w);
    if (core.size() <= 1)
        return Classification{Classification::Kind::elliptic, 0};
    return Classification{Classification::Kind::loxodromic, core.size()};
}

std::size_t joint_stabilizer_census(long long segment_level, long long distance,
                                    const Limits& limits) {
    const long long i = segment_level;
    if (i < 1)
        throw std::invalid_argument("level must be positive");
    if (distance < 0)
        throw std::invalid_argument("negative distance");
    if (i > limits.census_max_level || distance > limits.census_max_distance)
        throw std::length_error("census budget exceeded");

    // March down the first-child geodesic out of the base A-vertex: the
    // first child of the base is the base B-vertex (identity representative),
    // afterwards the least non-identity representative on the current side.
    Side side = Side::A;
    Word path{i};
    for (long long step = 0; step < distance; ++step) {
        std::vector<GElement> reps = coset_reps(i, side, limits);
        const GElement& rep = (step == 0) ? reps[0]
                              : (reps[0].is_identity() ? reps[1] : reps[0]);
        if (!rep.is_identity()) {
            std::vector<Syllable> syls = path.syllables();
            syls.push_back(Syllable{side, rep});
            path = Word{i, std::move(syls)};
        }
        side = other_side(side);
    }

    Word path_inv = winv(path);
    std::size_t count = 0;
    for (const GElement& a : enumerate_G(i, limits)) {
        Word conjugated = wmul(wmul(path_inv, word_from(i, Side::A, a)), path);
        if (in_factor(conjugated, side))
            ++count;
    }
    return count;
}

} // namespace jseg
