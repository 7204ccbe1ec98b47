#include "jseg/certify.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <iterator>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "jseg/io.hpp"

namespace jseg {

WitnessSet witnesses(long long i) {
    if (i < 2)
        throw std::invalid_argument("window empty");
    WitnessSet ws;
    ws.i = i;
    ws.phi = VMap{{-i + 1, -i + 2}};
    ws.t = transposition(-i, -i + 1);
    ws.psi = VMap{{-i, -i + 1}};
    ws.s = transposition(-i - 1, -i);
    return ws;
}

Word loxodromic_witness(long long i) {
    WitnessSet ws = witnesses(i);
    return Word{i, {Syllable{Side::A, GElement{i, ws.phi, ws.t}},
                    Syllable{Side::B, GElement{i + 1, ws.psi, ws.s}}}};
}

std::vector<NamedCheck> witness_checks(const WitnessSet& ws) {
    const long long i = ws.i;
    std::vector<NamedCheck> out;
    auto add = [&](const char* name, bool pass) { out.push_back({name, pass}); };
    add("charmap.support(phi)", ws.phi.support() == std::vector<Point>{-i + 1, -i + 2});
    add("charmap.support(psi)", ws.psi.support() == std::vector<Point>{-i, -i + 1});
    add("perm.support(t)", support(ws.t) == std::vector<Point>{-i, -i + 1});
    add("perm.support(s)", support(ws.s) == std::vector<Point>{-i - 1, -i});
    add("charmap.conj(t,psi)==psi", conj(ws.t, ws.psi) == ws.psi);
    add("semidirect.in_K(phi t)==false", !in_K(GElement{i, ws.phi, ws.t}, i));
    add("semidirect.in_K(psi s)==false", !in_K(GElement{i + 1, ws.psi, ws.s}, i));
    Word w = loxodromic_witness(i);
    add("amalgam.reduce(witness)==witness", reduce(w) == w);
    add("amalgam.is_identity(witness)==false", !is_identity(w));
    Classification c = classify(w);
    add("tree.classify(witness)==loxodromic(2)",
        c.kind == Classification::Kind::loxodromic && c.translation_length == 2);
    return out;
}

bool support_conditions(const ShiftedPermutation& p, long long i) {
    if (!in_H_i(p, i))
        throw std::invalid_argument("not in H_i");
    WitnessSet ws = witnesses(i);
    std::vector<Point> moved = support(p);
    auto disjoint = [&moved](const std::vector<Point>& other) {
        std::vector<Point> meet;
        std::set_intersection(moved.begin(), moved.end(), other.begin(), other.end(),
                              std::back_inserter(meet));
        return meet.empty();
    };
    return disjoint(ws.phi.support()) && disjoint(ws.psi.support()) &&
           disjoint(support(compose(ws.t, ws.s)));
}

bool commutes(const ShiftedPermutation& p, long long i) {
    if (!in_H_i(p, i))
        throw std::invalid_argument("not in H_i");
    Word pw = word_from(i, Side::A, GElement{i, {}, p});
    Word g = loxodromic_witness(i);
    return equals(wmul(pw, g), wmul(g, pw));
}

CentralizerCertificate centralizer_subgroup_certificate(long long i) {
    witnesses(i); // level validation
    CentralizerCertificate cert;
    cert.i = i;
    cert.window_lo = -i + 3;
    cert.window_hi = i;
    cert.all_generators_commute = true;
    for (Point j = cert.window_lo; j < cert.window_hi; ++j) {
        ShiftedPermutation gen = transposition(j, j + 1);
        bool ok = support_conditions(gen, i) && commutes(gen, i);
        cert.all_generators_commute = cert.all_generators_commute && ok;
        cert.generators.push_back(std::move(gen));
    }
    cert.order = factorial(2 * i - 2);
    return cert;
}

BigInt factorial(long long n) {
    if (n < 0)
        throw std::invalid_argument("negative factorial");
    BigInt result = 1;
    for (long long k = 2; k <= n; ++k)
        result *= k;
    return result;
}

unsigned long long landau(long long m, const Limits& limits) {
    if (m < 0)
        throw std::invalid_argument("negative symmetric degree");
    if (m > limits.landau_cap)
        throw std::length_error("partition search too large");
    // Parts of size 1 never change the lcm, so search parts >= 2 only.
    unsigned long long best = 1;
    auto search = [&best](auto&& self, long long remaining, long long max_part,
                          unsigned long long acc) -> void {
        best = std::max(best, acc);
        for (long long part = std::min(max_part, remaining); part >= 2; --part)
            self(self, remaining - part, part,
                 std::lcm(acc, static_cast<unsigned long long>(part)));
    };
    search(search, m, m, 1);
    return best;
}

unsigned long long brute_symmetric_max_order(long long m) {
    if (m < 0)
        throw std::invalid_argument("negative symmetric degree");
    if (m > 9)
        throw std::length_error("enumeration too large");
    std::vector<int> identity(static_cast<std::size_t>(m));
    std::iota(identity.begin(), identity.end(), 0);
    std::vector<int> p = identity;
    unsigned long long best = 1;
    do {
        std::vector<int> acc = p;
        unsigned long long order = 1;
        while (acc != identity) {
            std::vector<int> next(acc.size());
            for (std::size_t k = 0; k < acc.size(); ++k)
                next[k] = p[static_cast<std::size_t>(acc[k])];
            acc = std::move(next);
            ++order;
        }
        best = std::max(best, order);
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

Rational::Rational(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) {
    if (den == 0)
        throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    BigInt g = boost::multiprecision::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
}

bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
}

std::string to_string(const Rational& r) {
    if (r.den == 1)
        return r.num.str();
    return r.num.str() + "/" + r.den.str();
}

Rational index_lower_bound(long long i, const Limits& limits) {
    if (i < 3)
        throw std::invalid_argument("divergence bound needs level >= 3");
    long long m = 2 * i - 2;
    return Rational{factorial(m), BigInt(landau(m, limits))};
}

Report certify_range(long long i_min, long long i_max, unsigned long long seed,
                     const Limits& limits) {
    if (i_min > i_max)
        throw std::invalid_argument("empty range");
    if (i_min < 2)
        throw std::invalid_argument("window empty");
    if (i_max > limits.certify_max_level)
        throw std::invalid_argument("level above configured cap");

    Report report;
    report.i_min = i_min;
    report.i_max = i_max;
    report.seed = seed;

    for (long long i = i_min; i <= i_max; ++i) {
        auto started = std::chrono::steady_clock::now();
        LevelReport level;
        level.i = i;
        level.witness = witnesses(i);
        level.checks = witness_checks(level.witness);
        level.translation_length = classify(loxodromic_witness(i)).translation_length;
        level.certificate = centralizer_subgroup_certificate(i);
        level.checks.push_back({"certify.centralizer_generators_commute",
                                level.certificate.all_generators_commute});
        level.landau_value = landau(2 * i - 2, limits);
        if (i >= 3)
            level.index_bound = index_lower_bound(i, limits);

        std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL +
                            static_cast<unsigned long long>(i));
        std::vector<Point> images;
        for (Point j = -i; j <= i; ++j)
            images.push_back(j);
        level.samples.count = limits.verify_samples;
        for (std::size_t n = 0; n < limits.verify_samples; ++n) {
            for (std::size_t k = images.size() - 1; k > 0; --k)
                std::swap(images[k], images[rng() % (k + 1)]);
            ShiftedPermutation p{0, FinitePermutation::from_window_images(-i, images)};
            if (support_conditions(p, i)) {
                ++level.samples.condition_true;
                if (!commutes(p, i))
                    ++level.samples.violations;
            }
        }
        level.checks.push_back({"certify.sampled_agreement", level.samples.violations == 0});

        level.pass = std::all_of(level.checks.begin(), level.checks.end(),
                                 [](const NamedCheck& c) { return c.pass; });
        level.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                      started)
                .count();
        report.levels.push_back(std::move(level));
    }

    bool increasing = true;
    const Rational* prev = nullptr;
    for (const LevelReport& level : report.levels) {
        if (!level.index_bound)
            continue;
        if (prev && !(*prev < *level.index_bound))
            increasing = false;
        prev = &*level.index_bound;
    }
    report.bounds_strictly_increasing = increasing;
    report.all_pass = increasing &&
                      std::all_of(report.levels.begin(), report.levels.end(),
                                  [](const LevelReport& l) { return l.pass; });
    return report;
}

std::string to_json(const Report& report) {
    nlohmann::ordered_json root;
    root["schema"] = "jseg.verify.v1";
    root["i_min"] = report.i_min;
    root["i_max"] = report.i_max;
    root["seed"] = report.seed;
    root["levels"] = nlohmann::ordered_json::array();
    for (const LevelReport& level : report.levels) {
        nlohmann::ordered_json lj;
        lj["i"] = level.i;
        lj["witnesses"]["phi"] = to_string(level.witness.phi);
        lj["witnesses"]["t"] = to_string(level.witness.t);
        lj["witnesses"]["psi"] = to_string(level.witness.psi);
        lj["witnesses"]["s"] = to_string(level.witness.s);
        lj["checks"] = nlohmann::ordered_json::array();
        for (const NamedCheck& check : level.checks)
            lj["checks"].push_back({{"name", check.name}, {"pass", check.pass}});
        lj["translation_length"] = level.translation_length;
        lj["certificate"]["window_lo"] = level.certificate.window_lo;
        lj["certificate"]["window_hi"] = level.certificate.window_hi;
        lj["certificate"]["generators"] = nlohmann::ordered_json::array();
        for (const ShiftedPermutation& gen : level.certificate.generators)
            lj["certificate"]["generators"].push_back(to_string(gen));
        lj["certificate"]["all_generators_commute"] =
            level.certificate.all_generators_commute;
        lj["certificate"]["order"] = level.certificate.order.str();
        lj["landau"] = std::to_string(level.landau_value);
        if (level.index_bound)
            lj["index_lower_bound"] = to_string(*level.index_bound);
        else
            lj["index_lower_bound"] = nullptr;
        lj["samples"]["count"] = level.samples.count;
        lj["samples"]["condition_true"] = level.samples.condition_true;
        lj["samples"]["violations"] = level.samples.violations;
        lj["status"] = level.pass ? "PASS" : "FAIL";
        root["levels"].push_back(std::move(lj));
    }
    root["index_bounds_strictly_increasing"] = report.bounds_strictly_increasing;
    root["all_pass"] = report.all_pass;
    return root.dump(2) + "\n";
}

std::string to_text(const Report& report) {
    std::ostringstream out;
    out << "verify levels " << report.i_min << ".." << report.i_max << " (seed "
        << report.seed << ")\n";
    for (const LevelReport& level : report.levels) {
        out << "\nlevel " << level.i << "\n";
        out << "  witnesses: phi=" << to_string(level.witness.phi)
            << " t=" << to_string(level.witness.t)
            << " psi=" << to_string(level.witness.psi)
            << " s=" << to_string(level.witness.s) << "\n";
        for (const NamedCheck& check : level.checks)
            out << "  [" << (check.pass ? "PASS" : "FAIL") << "] " << check.name << "\n";
        out << "  translation length: " << level.translation_length << "\n";
        out << "  centralizer window [" << level.certificate.window_lo << ", "
            << level.certificate.window_hi << "], "
            << level.certificate.generators.size() << " generators, order "
            << level.certificate.order.str() << "\n";
        out << "  landau(" << 2 * level.i - 2 << ") = " << level.landau_value << "\n";
        if (level.index_bound)
            out << "  index lower bound: " << to_string(*level.index_bound) << "\n";
        else
            out << "  index lower bound: (defined from level 3)\n";
        out << "  samples: " << level.samples.count << " (condition true "
            << level.samples.condition_true << ", violations "
            << level.samples.violations << ")\n";
        out << "  elapsed: " << std::fixed << std::setprecision(1) << level.elapsed_ms
            << " ms\n";
        out << "  level status: " << (level.pass ? "PASS" : "FAIL") << "\n";
    }
    out << "\nindex bounds strictly increasing: "
        << (report.bounds_strictly_increasing ? "yes" : "no") << "\n";
    out << "overall: " << (report.all_pass ? "PASS" : "FAIL") << "\n";
    return out.str();
}

} // namespace jseg
