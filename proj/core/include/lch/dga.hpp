#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lch/freealgebra.hpp"

namespace lch {

/// Semi-free DGA: a generator table with a differential on each generator.
///
/// Construction does not verify the DGA axioms; use dga_verify. Values are immutable.
class Dga {
public:
    Dga(AlgebraPtr algebra, std::vector<NcPoly> differentials);
    static Dga with_zero_differential(AlgebraPtr algebra);

    const AlgebraPtr& algebra() const { return algebra_; }
    const RingSpec& ring() const { return algebra_->ring(); }
    const std::vector<Generator>& generators() const { return algebra_->generators(); }
    std::size_t size() const { return algebra_->size(); }
    std::optional<GenId> find(std::string_view name) const { return algebra_->find(name); }

    const NcPoly& differential(GenId id) const { return diff_.at(id); }
    /// Differential of a generator by name; throws StructuralError if unknown.
    const NcPoly& differential(std::string_view name) const;
    std::span<const NcPoly> differentials() const { return diff_; }

    friend bool operator==(const Dga& a, const Dga& b);

private:
    AlgebraPtr algebra_;
    std::vector<NcPoly> diff_;
};

/// Extends a generator differential table to `x` by linearity and the graded
/// Leibniz rule d(ab) = d(a) b + (-1)^{|a|} a d(b).
NcPoly leibniz_extend(std::span<const NcPoly> table, const NcPoly& x);
inline NcPoly leibniz_extend(const Dga& d, const NcPoly& x) { return leibniz_extend(d.differentials(), x); }

struct GeneratorCheck {
    std::string name;
    bool degree_minus_one = true;
    bool d_squared_zero = true;
    PolyDegree found_degree;
    /// d(d(c)); zero when the check passes.
    NcPoly residual;
};

struct VerifyReport {
    std::vector<GeneratorCheck> generators;

    bool degrees_ok() const;
    bool d_squared_ok() const;
    bool ok() const { return degrees_ok() && d_squared_ok(); }
    /// Names the first failing generator and its residual; empty when ok().
    std::string diagnostics() const;
};

VerifyReport dga_verify(const Dga& d);

/// Terms whose word has exactly `length` factors.
NcPoly wordlength_part(const NcPoly& x, std::size_t length);

/// True iff no generator differential has a nonzero constant (word-length 0) part.
bool is_good(const Dga& d);

/// Adds a (degree j) and b (degree j-1) with d(a) = b, d(b) = 0.
Dga stabilize(const Dga& d, int j, const std::pair<std::string, std::string>& names);
/// Same, with fresh names `s<n>a`, `s<n>b`.
Dga stabilize(const Dga& d, int j);

/// The algebra automorphism a_j -> A a_j + b, identity on other generators.
struct ElementaryAutomorphism {
    AlgebraPtr algebra;
    GenId target = 0;
    GroupRingElem unit;
    NcPoly shift;

    NcPoly apply(const NcPoly& x) const;
    NcPoly apply_inverse(const NcPoly& x) const;
};

struct ConjugatedDga {
    Dga dga;
    ElementaryAutomorphism map;
};

/// Conjugates the differential by the elementary automorphism a_j -> A a_j + b.
/// Requires A a unit, b free of a_j and homogeneous of degree |a_j|.
ConjugatedDga elementary_auto(const Dga& d, GenId j, const GroupRingElem& unit, const NcPoly& shift);

/// Coefficients mapped through `target` (Z -> F_p, or identity). H1 names must agree.
Dga change_coefficients(const Dga& d, const RingSpec& target);
/// All group-ring variables sent to 1.
Dga project_h1(const Dga& d);
/// Restriction to the pure generators; throws StructuralError if a pure
/// differential involves a mixed generator.
Dga pure_subdga(const Dga& d);

/// A witness x with d(x) = 1 after projecting the group ring to the field of scalars.
struct UnitCertificate {
    bool found = false;
    std::size_t max_word_length = 1;
    std::vector<std::pair<Word, FieldElem>> witness;
};

/// Searches witnesses in the span of degree-1 words of length <= max_word_length.
/// Finding one proves 1 is in the image; not finding one is inconclusive.
/// Throws UnsupportedError over Z and ResourceError past `max_candidates` words.
UnitCertificate unit_in_image(const Dga& d, std::size_t max_word_length, std::size_t max_candidates = 20000);

/// Linear-span witnesses: sum_i x_i d(c_i) = 1 with scalar x_i.
inline UnitCertificate unit_in_image_linear(const Dga& d) { return unit_in_image(d, 1); }

}  // namespace lch
