#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "lch/augment.hpp"
#include "lch/fixtures.hpp"
#include "lch/grading.hpp"
#include "lch/linearize.hpp"
#include "../support/random.hpp"

namespace {

using namespace lch;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void fail(const std::string& why)
    {
        if (pass)
            detail << why;
        pass = false;
    }
};

Augmentation trivial(const Dga& d) { return Augmentation{d.ring().field(), std::vector<FieldElem>(d.size(), 0)}; }

std::uint64_t closed_form(std::uint64_t q, int g, int k)
{
    std::uint64_t n = 1;
    for (int i = 0; i < g - k; ++i)
        n *= q - 1;
    for (int i = 0; i < k; ++i)
        n *= q - 2;
    return n;
}

std::string tag(int g, int k) { return "L(" + std::to_string(g) + "," + std::to_string(k) + ")"; }

void fixture_validity(Outcome& o)
{
    for (unsigned ch : {0u, 2u, 3u, 5u})
        for (int g = 1; g <= 4; ++g)
            for (int k = 0; k <= g; ++k)
                if (!dga_verify(fixture_Lgk(g, k, ch)).ok())
                    o.fail(tag(g, k) + " char " + std::to_string(ch) + " fails dga_verify");
}

void dichotomy(Outcome& o)
{
    for (int g = 1; g <= 4; ++g)
        for (int k = 0; k <= g; ++k) {
            const bool nonempty = !enumerate_augmentations(project_h1(fixture_Lgk(g, k, 2))).empty();
            if (nonempty != (k == 0))
                o.fail(tag(g, k) + ": augmentations " + (nonempty ? "exist" : "absent"));
        }
}

void unit_flag(Outcome& o)
{
    for (int g = 1; g <= 4; ++g)
        for (int k = 0; k <= g; ++k)
            if (unit_in_image_linear(project_h1(fixture_Lgk(g, k, 2))).found != (k > 0))
                o.fail(tag(g, k) + ": unit_in_image_linear disagrees");
}

void closed_form_counts(Outcome& o)
{
    auto check = [&](int g, int k, std::uint64_t q) {
        const auto d = fixture_Lgk(g, k);
        const auto expected = closed_form(q, g, k);
        const auto brute = augvar_count(d, q).count;
        const auto sys = augvar_system(d);
        std::uint64_t members = 0;
        for (const auto& rho : torus_points(q, d.ring().h1_rank()))
            members += augvar_member(sys, rho);
        if (brute != expected || members != expected)
            o.fail(tag(g, k) + " q=" + std::to_string(q) + ": brute " + std::to_string(brute) + ", system " +
                   std::to_string(members) + ", closed form " + std::to_string(expected));
    };
    for (std::uint64_t q : {3u, 4u, 5u, 7u})
        for (int g = 1; g <= 2; ++g)
            for (int k = 0; k <= g; ++k)
                check(g, k, q);
    for (int k = 0; k <= 3; ++k)
        check(3, k, 3);
}

void pairwise(Outcome& o)
{
    const std::vector<std::uint64_t> qs{3};
    for (int g = 1; g <= 3; ++g) {
        std::vector<Fingerprint> fps;
        for (int k = 0; k <= g; ++k)
            fps.push_back(fingerprint(fixture_Lgk(g, k), qs));
        for (int k = 0; k <= g; ++k)
            for (int l = k + 1; l <= g; ++l) {
                auto v = compare_fingerprints(fps[static_cast<std::size_t>(k)], fps[static_cast<std::size_t>(l)]);
                if (!v.distinguished || v.witness.rfind("augvar count at q=3", 0) != 0)
                    o.fail(tag(g, k) + " vs " + tag(g, l) + ": " + (v.distinguished ? v.witness : "not distinguished"));
            }
    }
}

void fiber_links(Outcome& o)
{
    const std::vector<std::uint64_t> qs{2};
    std::vector<Fingerprint> fps;
    for (int k = 1; k <= 5; ++k) {
        auto d = fixture_fiber_link(k, 2);
        BettiTable expected;
        for (int i = 1; i <= 2 * k; ++i)
            expected[i] = 1;
        if (homology_betti(linear_part(d)) != expected)
            o.fail("fiber link k=" + std::to_string(k) + " Betti table differs");
        fps.push_back(fingerprint(fixture_fiber_link(k), qs));
    }
    for (std::size_t k = 0; k < fps.size(); ++k)
        for (std::size_t l = k + 1; l < fps.size(); ++l)
            if (!compare_fingerprints(fps[k], fps[l]).distinguished)
                o.fail("fiber links k=" + std::to_string(k + 1) + ", " + std::to_string(l + 1) + " not distinguished");
}

void knot_sphere(Outcome& o)
{
    auto d = fixture_knot_sphere_link(2);
    auto betti = homology_betti(linear_part(twist(d, trivial(d))));
    if (betti != BettiTable{{1, 1}, {2, 2}})
        o.fail("link Betti table " + betti_to_string(betti));
    auto pure = pure_subdga(d);
    auto pure_betti = homology_betti(linear_part(twist(pure, trivial(pure))));
    if (pure_betti != BettiTable{{2, 1}})
        o.fail("pure sub-DGA Betti table " + betti_to_string(pure_betti));
    const std::vector<std::uint64_t> qs{2, 3};
    if (!compare(fixture_knot_sphere_link(), pure_subdga(fixture_knot_sphere_link()), qs).distinguished)
        o.fail("link and pure sub-DGA not distinguished");
    if (!compare(fixture_knot_sphere_link(), fixture_std_sphere(), qs).distinguished)
        o.fail("link and standard sphere not distinguished");
}

void tame_invariance(Outcome& o, int& chains_run)
{
    const std::vector<std::uint64_t> qs{2, 3};
    const std::vector<Dga> bases{fixture_Lgk(1, 0),          fixture_Lgk(1, 1),          fixture_Lgk(2, 0),
                                 fixture_Lgk(2, 1),          fixture_Lgk(2, 2),          fixture_fiber_link(2),
                                 fixture_knot_sphere_link(), fixture_std_sphere()};
    std::vector<Fingerprint> base_fps;
    for (const auto& b : bases)
        base_fps.push_back(fingerprint(b, qs));
    testing::Rng rng(20261017);
    for (int chain = 0; chain < 300; ++chain) {
        const auto which = static_cast<std::size_t>(chain) % bases.size();
        Dga d = bases[which];
        const int steps = testing::uniform(rng, 2, 6);
        for (int s = 0; s < steps; ++s) {
            d = testing::random_tame_move(d, rng);
            if (!dga_verify(d).ok()) {
                o.fail("chain " + std::to_string(chain) + " step " + std::to_string(s) + ": " + dga_verify(d).diagnostics());
                return;
            }
        }
        auto fp = fingerprint(d, qs);
        if (!(fp == base_fps[which])) {
            auto v = compare_fingerprints(base_fps[which], fp);
            o.fail("chain " + std::to_string(chain) + " changed the fingerprint: " + v.witness);
            return;
        }
        ++chains_run;
    }
}

void rank_oracle(Outcome& o)
{
    testing::Rng rng(9);
    for (std::uint64_t q : {2u, 3u})
        for (int i = 0; i < 300; ++i) {
            auto c = testing::random_complex(FiniteField::get(q), rng, 8);
            auto betti = homology_betti(c);
            if (betti != testing::brute_force_betti(c)) {
                o.fail("complex " + std::to_string(i) + " over F" + std::to_string(q) + ": " + betti_to_string(betti));
                return;
            }
            long long chi_chain = 0, chi_homology = 0;
            for (const auto& [deg, ids] : c.basis)
                chi_chain += (deg % 2 ? -1 : 1) * static_cast<long long>(ids.size());
            for (const auto& [deg, dim] : betti)
                chi_homology += (deg % 2 ? -1 : 1) * static_cast<long long>(dim);
            if (chi_chain != chi_homology) {
                o.fail("Euler characteristic mismatch on complex " + std::to_string(i));
                return;
            }
        }
}

void grading(Outcome& o)
{
    if (chord_degree(CappingRecord::make(1, 0, 2)) != 2)
        o.fail("|c| != 2");
    for (int i = 1; i <= 5; ++i) {
        if (chord_degree(CappingRecord::make(2 * (i - 1), 0, 2)) != 2 * i - 1)
            o.fail("|b" + std::to_string(i) + "| wrong");
        if (chord_degree(CappingRecord::make(2 * i - 1, 0, 2)) != 2 * i)
            o.fail("|a" + std::to_string(i) + "| wrong");
    }
    for (int d = 0; d <= 10; ++d)
        for (int u = 0; u <= 10; ++u)
            if (maslov_of_loop(d, u) != d - u)
                o.fail("maslov_of_loop(" + std::to_string(d) + "," + std::to_string(u) + ")");
}

}  // namespace

int main()
{
    int chains = 0;
    struct Criterion {
        int id;
        const char* name;
        double limit_s;
        std::function<void(Outcome&)> body;
    };
    const std::vector<Criterion> criteria{
        {1, "fixture validity", 1, fixture_validity},
        {2, "augmentation dichotomy over F2", 1, dichotomy},
        {3, "unit in image over F2 iff k>0", 1, unit_flag},
        {4, "augvar count closed form", 10, closed_form_counts},
        {5, "pairwise distinction at q=3", 10, pairwise},
        {6, "fiber link homology", 1, fiber_links},
        {7, "knotted sphere link homology", 1, knot_sphere},
        {8, "invariance under tame moves", 60, [&](Outcome& o) { tame_invariance(o, chains); }},
        {9, "homology vs rank oracle", 30, rank_oracle},
        {10, "grading", 1, grading},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.pass && secs > c.limit_s)
            o.fail("over the time limit");
        if (c.id == 8 && o.pass)
            o.detail << chains << " chains";
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", secs, c.limit_s);
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name << " (" << timing << ")";
        if (!o.detail.str().empty())
            std::cout << ": " << o.detail.str();
        std::cout << '\n';
        failed += !o.pass;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
    return failed ? 1 : 0;
}
