#pragma once

#include <map>
#include <span>
#include <string>

#include "lch/dga.hpp"
#include "lch/grading.hpp"

namespace lch {

/// Signs of the non-unit terms of a handle differential (spin-structure choice).
struct HandleSigns {
    int lambda = 1;
    int mu_lambda = 1;
};

/// Genus-g surface with k knotted handles.
///
/// H1 basis (mu1, lambda1, ..., mug, lambdag); generators c (degree 2) and c1..cg
/// (degree 1). Handles 1..k are knotted, d ci = 1 + lambda_i + mu_i lambda_i; the
/// others are standard, d ci = 1 + lambda_i; d c = 0. `signs`, if given, has one
/// entry per handle.
Dga fixture_Lgk(int g, int k, unsigned characteristic = 0, std::span<const HandleSigns> signs = {});

/// Two-component link with 2k mixed chords b1, a1, ..., bk, ak of degrees 2i-1, 2i
/// and vanishing differential. No H1 variables.
Dga fixture_fiber_link(int k, unsigned characteristic = 0);

/// Knotted sphere linked with a sphere: pure chord c (degree 2), mixed chords a
/// (degree 2) and b (degree 1), zero differential.
Dga fixture_knot_sphere_link(unsigned characteristic = 0);

/// Standard sphere: one chord c of degree 2.
Dga fixture_std_sphere(unsigned characteristic = 0);

/// Capping-path data reproducing each generator's degree through chord_degree.
/// The split of the handle chords' data is a consistent choice, not measured geometry.
std::map<std::string, CappingRecord> capping_records_Lgk(int g);
std::map<std::string, CappingRecord> capping_records_fiber_link(int k);

}  // namespace lch
