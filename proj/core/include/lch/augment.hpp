#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lch/dga.hpp"

namespace lch {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// A unital graded DGA map to (F_q, 0). Stores one value per generator; only
/// degree-0 generators can carry nonzero values.
struct Augmentation {
    FieldPtr field;
    std::vector<FieldElem> values;

    FieldElem value(GenId id) const { return values.at(id); }
    friend bool operator==(const Augmentation& a, const Augmentation& b) { return a.values == b.values; }
    friend bool operator<(const Augmentation& a, const Augmentation& b) { return a.values < b.values; }
};

/// Evaluates coefficients at rho. The result has coefficients in F_q and no H1 variables.
Dga specialize(const Dga& d, const RhoPoint& rho);

/// epsilon(x) for x in an algebra over F_q without H1 variables.
FieldElem apply_augmentation(const Augmentation& eps, const NcPoly& x);

/// True iff eps vanishes off degree 0 and eps(d c) = 0 for every generator c.
bool is_augmentation(const Dga& d, const Augmentation& eps);

/// All augmentations of a DGA over F_q (no H1 variables), in lexicographic order of
/// the degree-0 values. Throws ResourceError if q^{#degree-0 generators} > budget.
std::vector<Augmentation> enumerate_augmentations(const Dga& d, std::uint64_t budget = kDefaultBudget);
bool has_augmentation(const Dga& d, std::uint64_t budget = kDefaultBudget);

/// Laurent polynomials that must vanish.
struct LaurentSystem {
    RingSpec ring;
    std::vector<GroupRingElem> equations;

    /// One equation per line, `<poly> = 0`.
    std::string to_string() const;
};

/// Constant parts of the differentials of degree-1 generators (nonzero ones, deduplicated,
/// in generator order). Throws UnsupportedError if there are degree-0 generators.
LaurentSystem augvar_system(const Dga& d);

bool augvar_member(const LaurentSystem& s, const RhoPoint& rho);

struct AugvarCount {
    std::uint64_t q = 0;
    std::uint64_t count = 0;
    /// (q-1)^rank
    std::uint64_t total_points = 0;
    /// Sorted; filled only when requested.
    std::optional<std::vector<RhoPoint>> points;
};

/// Counts rho in (F_q^*)^rank for which the specialization admits an augmentation,
/// by brute force over rho and over degree-0 assignments.
AugvarCount augvar_count(const Dga& d, std::uint64_t q, bool collect_points = false,
                         std::uint64_t budget = kDefaultBudget);

/// Every point of (F_q^*)^rank, in lexicographic order.
std::vector<RhoPoint> torus_points(std::uint64_t q, std::size_t rank);

}  // namespace lch
