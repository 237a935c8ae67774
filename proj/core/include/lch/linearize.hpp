#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lch/augment.hpp"
#include "lch/dga.hpp"
#include "lch/linalg.hpp"

namespace lch {

/// Graded F_q-vector space with a basis of generators and boundary maps of degree -1.
struct ChainComplexF {
    FieldPtr field;
    /// degree -> generator ids spanning that degree
    std::map<int, std::vector<GenId>> basis;
    /// degree d -> matrix of the boundary C_d -> C_{d-1} (rows: basis[d-1], cols: basis[d]).
    /// Degrees whose source or target is empty are omitted.
    std::map<int, FqMatrix> boundary;

    std::size_t dimension(int degree) const;
    /// Composite C_d -> C_{d-2} for every d vanishes.
    bool composition_zero() const;
    /// Subcomplex spanned by the generators for which keep(id) holds. The caller
    /// is responsible for it being closed under the boundary.
    template <typename Pred>
    ChainComplexF restrict_to(Pred keep) const;
};

/// degree -> dimension; zero dimensions are not stored.
using BettiTable = std::map<int, std::size_t>;

/// Differential Phi^eps o d, where Phi^eps(c) = c + eps(c).
/// Throws PreconditionError if eps is not an augmentation of d.
Dga twist(const Dga& d, const Augmentation& eps);

/// Word-length-1 part of a good DGA over F_q (no H1 variables) as a chain complex.
/// Throws PreconditionError if the DGA is not good.
ChainComplexF linear_part(const Dga& d);

/// dim ker M_d - rank M_{d+1} per degree.
BettiTable homology_betti(const ChainComplexF& c);

/// Linearized homology of one (rho, eps) pair. `mixed` is the part carried by mixed
/// chords when the complex splits into pure and mixed summands, and empty otherwise.
struct LinearizedHomology {
    BettiTable total;
    BettiTable mixed;

    auto operator<=>(const LinearizedHomology&) const = default;
};

struct FieldFingerprint {
    std::uint64_t q = 0;
    /// The specialization at rho = (1, ..., 1) admits an augmentation.
    bool augmentation_at_projection = false;
    std::uint64_t augvar_count = 0;
    std::set<LinearizedHomology> homology;

    friend bool operator==(const FieldFingerprint&, const FieldFingerprint&) = default;
};

/// Invariant record used to tell DGAs apart.
struct Fingerprint {
    /// Unset when the coefficients do not map to F_2.
    std::optional<bool> unit_in_image_f2;
    std::vector<FieldFingerprint> per_q;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;

    /// Stable JSON (schema 1); keys in documented order.
    std::string to_json(int indent = 2) const;
};

struct FingerprintOptions {
    std::uint64_t budget = kDefaultBudget;
    /// Word-length bound of the unit-in-image witness search.
    std::size_t unit_witness_length = 3;
};

/// Runs every (rho, eps) pair: for each q, over all rho in (F_q^*)^rank and all augmentations
/// of the specialization, collects linearized homology. Throws ResourceError past the budget.
Fingerprint fingerprint(const Dga& d, std::span<const std::uint64_t> qs, const FingerprintOptions& opts = {});

struct CompareOptions {
    /// Compare linearized homology up to one uniform degree shift of the mixed summands.
    bool mixed_shift = false;
    FingerprintOptions fingerprint;
};

struct Verdict {
    bool distinguished = false;
    /// Names the first differing component; empty when not distinguished.
    std::string witness;
};

Verdict compare_fingerprints(const Fingerprint& a, const Fingerprint& b, bool mixed_shift = false);
Verdict compare(const Dga& a, const Dga& b, std::span<const std::uint64_t> qs, const CompareOptions& opts = {});

std::string betti_to_string(const BettiTable& t);

template <typename Pred>
ChainComplexF ChainComplexF::restrict_to(Pred keep) const
{
    ChainComplexF out{field, {}, {}};
    std::map<int, std::vector<std::size_t>> kept_idx;
    for (const auto& [deg, ids] : basis) {
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (keep(ids[i])) {
                out.basis[deg].push_back(ids[i]);
                kept_idx[deg].push_back(i);
            }
        }
    }
    for (const auto& [deg, m] : boundary) {
        auto src = kept_idx.find(deg);
        auto dst = kept_idx.find(deg - 1);
        if (src == kept_idx.end() || dst == kept_idx.end())
            continue;
        FqMatrix r(field, dst->second.size(), src->second.size());
        for (std::size_t i = 0; i < dst->second.size(); ++i)
            for (std::size_t j = 0; j < src->second.size(); ++j)
                r.at(i, j) = m.at(dst->second[i], src->second[j]);
        out.boundary.emplace(deg, std::move(r));
    }
    return out;
}

}  // namespace lch
