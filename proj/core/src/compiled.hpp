#pragma once

// Field-valued views of a DGA used on the enumeration hot paths.

#include <cstdint>
#include <utility>
#include <vector>

#include "lch/augment.hpp"
#include "lch/dga.hpp"

namespace lch::detail {

struct FieldTerm {
    FieldElem coeff;
    Word word;
};

/// Differential table with coefficients already in F_q.
struct FieldDifferential {
    FieldPtr field;
    AlgebraPtr algebra;
    std::vector<std::vector<FieldTerm>> diff;
};

/// Precomputed data for evaluating a DGA's coefficients at many points rho.
class SpecializationPlan {
public:
    SpecializationPlan(const Dga& d, FieldPtr field);

    FieldDifferential at(const RhoPoint& rho) const;

private:
    struct Term {
        Word word;
        std::vector<std::pair<FieldElem, Exponent>> coeff;
    };
    FieldPtr field_;
    AlgebraPtr algebra_;
    std::vector<std::vector<Term>> diff_;
};

/// Enumerates the assignments of the degree-0 generators satisfying eps(d c) = 0.
class AugmentationSolver {
public:
    explicit AugmentationSolver(const FieldDifferential& d);

    /// q^{#degree-0 generators}, saturating at UINT64_MAX.
    std::uint64_t candidate_count() const;

    /// Calls f(values) for each augmentation (values indexed by generator id) until f returns false.
    template <typename F>
    void for_each(F&& f) const;

    bool exists() const;

private:
    struct Constraint {
        std::vector<std::pair<FieldElem, std::vector<std::uint32_t>>> terms;
    };
    FieldPtr field_;
    std::size_t num_generators_;
    std::vector<GenId> degree_zero_;
    std::vector<Constraint> constraints_;

    bool satisfied(const std::vector<FieldElem>& vals) const;
};

template <typename F>
void AugmentationSolver::for_each(F&& f) const
{
    const std::uint32_t q = field_->order();
    std::vector<FieldElem> vals(degree_zero_.size(), 0);
    std::vector<FieldElem> full(num_generators_, 0);
    auto advance = [&] {
        for (std::size_t pos = vals.size(); pos-- > 0;) {
            if (++vals[pos] < q)
                return true;
            vals[pos] = 0;
        }
        return false;
    };
    do {
        if (satisfied(vals)) {
            for (std::size_t i = 0; i < degree_zero_.size(); ++i)
                full[degree_zero_[i]] = vals[i];
            if (!f(full))
                return;
        }
    } while (advance());
}

/// Throws ResourceError when `count` exceeds `budget`.
void check_budget(std::uint64_t count, std::uint64_t budget, const char* what);

/// Saturating integer power.
std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp);

}  // namespace lch::detail
