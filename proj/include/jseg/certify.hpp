#ifndef JSEG_CERTIFY_HPP
#define JSEG_CERTIFY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "jseg/amalgam.hpp"
#include "jseg/charmap.hpp"
#include "jseg/limits.hpp"
#include "jseg/perm.hpp"
#include "jseg/tree.hpp"

namespace jseg {

using BigInt = boost::multiprecision::cpp_int;

/**
 * The level-i witness data: two maps and two transpositions pinned to the
 * left edge of the window [-i, i],
 *
 *   phi = v{-i+1, -i+2}    t = (-i, -i+1)      with phi t in G_i,
 *   psi = v{-i, -i+1}      s = (-i-1, -i)      with psi s in G_{i+1},
 *
 * chosen so that t fixes psi under conjugation, neither phi t nor psi s
 * lies in K_i, and the word (phi t)(psi s) moves every tree vertex.
 */
struct WitnessSet {
    long long i = 2;
    VMap phi;
    ShiftedPermutation t;
    VMap psi;
    ShiftedPermutation s;
};

// Needs i >= 2 so the windows below are nonempty; throws "window empty".
WitnessSet witnesses(long long i);

// The two-syllable word [A: phi t ; B: psi s], already reduced.
Word loxodromic_witness(long long i);

struct NamedCheck {
    std::string name;
    bool pass = false;
};

// The defining identities of the witness set, one named result each.
std::vector<NamedCheck> witness_checks(const WitnessSet& ws);

// True when supp(p) avoids supp(phi), supp(psi) and supp(t s), which
// forces p to commute with the witness word. Requires p in H_i.
bool support_conditions(const ShiftedPermutation& p, long long i);

// Whether p (as an A-syllable) commutes with the witness word in the
// amalgam; decided through reduction, independent of support_conditions.
bool commutes(const ShiftedPermutation& p, long long i);

/**
 * A concrete abelian-quotient-free chunk of the witness centralizer: the
 * permutations of the window [-i+3, i] embed in the centralizer, and the
 * certificate checks every adjacent transposition of that window both ways
 * (support route and reduction route). The subgroup order is (2i-2)!.
 */
struct CentralizerCertificate {
    long long i = 2;
    Point window_lo = 0;
    Point window_hi = 0;
    std::vector<ShiftedPermutation> generators;
    bool all_generators_commute = false;
    BigInt order;
};

CentralizerCertificate centralizer_subgroup_certificate(long long i);

BigInt factorial(long long n);

// Largest order of an element of Sym(m): the maximal lcm of a partition
// of m, by exhaustive search over partitions. Throws above the cap.
unsigned long long landau(long long m, const Limits& limits = default_limits());

// The same quantity by enumerating Sym(m) and measuring each element's
// order directly; only viable for small m. Independent of landau().
unsigned long long brute_symmetric_max_order(long long m);

struct Rational {
    BigInt num;
    BigInt den = 1; // normalized, positive

    Rational() = default;
    Rational(BigInt n, BigInt d);

    friend bool operator==(const Rational&, const Rational&);
    friend bool operator<(const Rational& a, const Rational& b);
};

std::string to_string(const Rational& r);

// (2i-2)! / landau(2i-2): a lower bound for the index of the centralizer
// chunk over any cyclic image, strictly increasing in i. Needs i >= 3.
Rational index_lower_bound(long long i, const Limits& limits = default_limits());

struct SampleStats {
    std::size_t count = 0;
    std::size_t condition_true = 0;
    std::size_t violations = 0; // condition held but reduction disagreed
};

struct LevelReport {
    long long i = 2;
    WitnessSet witness;
    std::vector<NamedCheck> checks;
    std::size_t translation_length = 0;
    CentralizerCertificate certificate;
    unsigned long long landau_value = 0;
    std::optional<Rational> index_bound; // absent below level 3
    SampleStats samples;
    double elapsed_ms = 0.0; // text output only, never serialized
    bool pass = false;
};

struct Report {
    long long i_min = 2;
    long long i_max = 2;
    unsigned long long seed = 0;
    std::vector<LevelReport> levels;
    bool bounds_strictly_increasing = false;
    bool all_pass = false;
};

// Runs every per-level check for i in [i_min, i_max] plus seeded random
// cross-checks of support_conditions against commutes.
Report certify_range(long long i_min, long long i_max, unsigned long long seed,
                     const Limits& limits = default_limits());

// Deterministic: equal reports render to byte-identical JSON. Exact
// integers appear as decimal strings; timings are omitted.
std::string to_json(const Report& report);

// Human-readable rendering, including per-level timings.
std::string to_text(const Report& report);

} // namespace jseg

#endif
