#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace lch {

/// Element of a finite field, encoded as an integer in [0, q).
///
/// For a prime field this is the canonical residue. For q = p^n the value is the
/// base-p digit string of the representing polynomial (constant term first), so
/// the prime subfield sits at [0, p) with the residue encoding.
using FieldElem = std::uint32_t;

/// Returns p if q = p^n for a prime p and n >= 1.
std::optional<std::uint32_t> prime_of_prime_power(std::uint64_t q);
bool is_prime(std::uint64_t n);

/// Arithmetic in F_q. Instances are immutable and shared through `get`.
class FiniteField {
public:
    static constexpr std::uint64_t kMaxOrder = 1u << 16;

    /// Shared instance for F_q; throws StructuralError unless q is a prime power <= kMaxOrder.
    static std::shared_ptr<const FiniteField> get(std::uint64_t q);

    std::uint32_t order() const { return q_; }
    std::uint32_t characteristic() const { return p_; }
    unsigned degree() const { return n_; }
    bool is_prime_field() const { return n_ == 1; }

    FieldElem zero() const { return 0; }
    FieldElem one() const { return 1; }

    FieldElem add(FieldElem a, FieldElem b) const;
    FieldElem sub(FieldElem a, FieldElem b) const;
    FieldElem neg(FieldElem a) const;
    FieldElem mul(FieldElem a, FieldElem b) const;
    /// Throws InvalidPointError on zero.
    FieldElem inv(FieldElem a) const;
    /// a^e for any integer e; negative e requires a != 0.
    FieldElem pow(FieldElem a, long long e) const;

    /// The image of an integer under Z -> F_q.
    FieldElem from_integer(const mpz_class& z) const;
    FieldElem from_integer(long long z) const;

    /// All elements 0..q-1, and the nonzero ones.
    std::vector<FieldElem> elements() const;
    std::vector<FieldElem> units() const;

    explicit FiniteField(std::uint32_t q);

private:
    std::uint32_t q_;
    std::uint32_t p_;
    unsigned n_;
    // Extension fields only: exp/log tables w.r.t. a primitive element.
    std::vector<FieldElem> exp_;
    std::vector<std::uint32_t> log_;

    FieldElem poly_add(FieldElem a, FieldElem b, bool subtract) const;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

}  // namespace lch
