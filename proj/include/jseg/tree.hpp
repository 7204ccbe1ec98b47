#ifndef JSEG_TREE_HPP
#define JSEG_TREE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jseg/amalgam.hpp"
#include "jseg/limits.hpp"

namespace jseg {

/**
 * The tree acted on by the level-i amalgam: vertices are cosets wA and wB,
 * an edge joins wA and wB' exactly when wA meets wB' in a coset of K_i.
 * An A-vertex has degree [G_i : K_i] = 2^(2i) and a B-vertex has degree
 * [G_{i+1} : K_i] = 2^(2i+2)(2i+2)(2i+3); both factors act with finite
 * vertex stabilizers conjugate into the factors.
 */

// Canonical representative of the coset a K_i inside a's own factor: the
// structurally least element of the coset.
GElement coset_rep(const GElement& a, long long i);

// All canonical coset representatives of K_i in G_i (side A) or G_{i+1}
// (side B) at segment level i, ascending.
std::vector<GElement> coset_reps(long long segment_level, Side side,
                                 const Limits& limits = default_limits());

// [G_i : K_i] for side A, [G_{i+1} : K_i] for side B.
unsigned long long coset_count(long long segment_level, Side side);

// |G_level| = 2^(2 level + 1) (2 level + 1)!; needs level <= 7 to fit.
unsigned long long factor_order(long long level);

// Vertex count of the radius-r ball, clamped to a large sentinel on overflow.
unsigned long long projected_ball_vertices(long long segment_level, long long radius);

// A tree vertex: the coset (rep word) * factor(side).
struct TreeVertex {
    Side side = Side::A;
    Word rep;
};

TreeVertex base_vertex(long long segment_level, Side side);

// Same vertex as cosets: sides agree and rep1^-1 rep2 lies in the factor.
bool vertex_equal(const TreeVertex& u, const TreeVertex& v);

/**
 * The ball of given radius around the base A-vertex. Vertex ids are indices
 * into `vertices`, which is sorted by printed representative (side breaks
 * ties); `parent` and `depth` describe the BFS tree rooted at the base, and
 * `edges` holds each tree edge once with the smaller id first.
 */
struct Ball {
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    struct Vertex {
        Side side = Side::A;
        Word rep;
        std::size_t parent = npos;
        std::size_t depth = 0;
    };

    long long segment_level = 1;
    long long radius = 0;
    std::vector<Vertex> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t base_index = 0;
};

Ball build_ball(long long segment_level, long long radius,
                const Limits& limits = default_limits());

// One line "<id> <A|B> <rep>" per vertex, then one "edge <u> <v>" per edge.
std::string export_ball(const Ball& ball);

std::optional<std::size_t> find_vertex(const Ball& ball, const TreeVertex& v);

// Path length through the BFS tree; both ids must be in range.
std::size_t tree_distance(const Ball& ball, std::size_t u, std::size_t v);

// d(v, g.v) when the image stays inside the ball, nullopt when it leaves.
std::optional<std::size_t> displacement(const Word& g, const TreeVertex& v,
                                        const Ball& ball);

struct Classification {
    enum class Kind { elliptic, loxodromic };
    Kind kind = Kind::elliptic;
    std::size_t translation_length = 0; // nonzero exactly for loxodromic
};

// Elliptic iff the cyclic reduction has syllable length <= 1 (the element
// is conjugate into a factor and fixes a vertex); otherwise loxodromic
// with translation length equal to that even syllable length.
Classification classify(const Word& w);

// |{a in G_i : a fixes both the base A-vertex and the endpoint of the
// deterministic length-d first-child geodesic}|. Nonincreasing in d.
std::size_t joint_stabilizer_census(long long segment_level, long long distance,
                                    const Limits& limits = default_limits());

} // namespace jseg

#endif
