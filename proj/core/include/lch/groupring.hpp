#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "lch/field.hpp"

namespace lch {

/// True for `[A-Za-z_][A-Za-z0-9_]*`, the identifier syntax of `.dga` files.
bool is_identifier(std::string_view s);

/// Coefficient ring of a DGA: Z or F_q, tensored with the group ring of a free
/// abelian group with named generators (the H_1 basis).
///
/// Copies share one immutable payload. Two specs compare equal iff they have the
/// same coefficients and the same ordered variable names.
class RingSpec {
public:
    static RingSpec integers(std::vector<std::string> h1_names = {});
    /// q must be a prime power; the file format only produces primes.
    static RingSpec finite_field(std::uint64_t q, std::vector<std::string> h1_names = {});
    /// 0 for Z, otherwise a prime.
    static RingSpec from_characteristic(unsigned characteristic, std::vector<std::string> h1_names = {});

    unsigned characteristic() const;
    /// 0 for Z.
    std::uint64_t field_order() const;
    bool is_field() const { return field_order() != 0; }
    /// Null for Z.
    const FieldPtr& field() const;

    std::size_t h1_rank() const;
    const std::vector<std::string>& h1_names() const;
    std::optional<std::size_t> h1_index(std::string_view name) const;

    /// Same coefficients, no group-ring variables.
    RingSpec without_h1() const;
    /// "Z", "F3", ...
    std::string coefficient_name() const;

    // Scalar arithmetic on canonical representatives.
    mpz_class reduce(const mpz_class& c) const;
    mpz_class add(const mpz_class& a, const mpz_class& b) const;
    mpz_class mul(const mpz_class& a, const mpz_class& b) const;
    mpz_class neg(const mpz_class& a) const;
    bool is_unit_scalar(const mpz_class& a) const;
    /// Throws StructuralError if `a` is not a unit.
    mpz_class inv(const mpz_class& a) const;

    friend bool operator==(const RingSpec& a, const RingSpec& b);
    friend bool operator!=(const RingSpec& a, const RingSpec& b) { return !(a == b); }

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
    explicit RingSpec(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
};

using Exponent = std::vector<int>;

/// A point of (F_q^*)^rank, i.e. a unital ring map F[H_1] -> F_q.
struct RhoPoint {
    FieldPtr field;
    std::vector<FieldElem> values;

    /// Throws InvalidPointError on zero or out-of-range entries.
    static RhoPoint make(std::uint64_t q, std::vector<FieldElem> values);
    static RhoPoint ones(std::uint64_t q, std::size_t rank);

    std::uint32_t q() const { return field->order(); }
    friend bool operator==(const RhoPoint& a, const RhoPoint& b)
    {
        return a.q() == b.q() && a.values == b.values;
    }
    friend bool operator<(const RhoPoint& a, const RhoPoint& b) { return a.values < b.values; }
};

/// Laurent polynomial with coefficients in Z or F_q: an element of the group ring.
///
/// Terms are kept in a map ordered lexicographically by exponent vector and zero
/// coefficients are never stored, so equality is structural.
class GroupRingElem {
public:
    explicit GroupRingElem(RingSpec spec) : spec_(std::move(spec)) {}

    static GroupRingElem scalar(const RingSpec& spec, const mpz_class& c);
    static GroupRingElem one(const RingSpec& spec) { return scalar(spec, 1); }
    static GroupRingElem monomial(const RingSpec& spec, Exponent exponent, const mpz_class& c = 1);
    static GroupRingElem variable(const RingSpec& spec, std::size_t index, int power = 1);

    const RingSpec& spec() const { return spec_; }
    const std::map<Exponent, mpz_class>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_scalar() const;
    /// The coefficient of the identity monomial.
    mpz_class constant_term() const;

    /// Units of a Laurent ring over a field or over Z: c * monomial with c a unit scalar.
    bool is_unit() const;
    GroupRingElem unit_inverse() const;

    GroupRingElem& operator+=(const GroupRingElem& rhs);
    GroupRingElem& operator-=(const GroupRingElem& rhs);
    GroupRingElem& operator*=(const GroupRingElem& rhs);
    GroupRingElem operator-() const;
    friend GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b) { return a += b; }
    friend GroupRingElem operator-(GroupRingElem a, const GroupRingElem& b) { return a -= b; }
    friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b);
    friend bool operator==(const GroupRingElem& a, const GroupRingElem& b);
    friend bool operator!=(const GroupRingElem& a, const GroupRingElem& b) { return !(a == b); }

    /// Adds c * x^exponent, keeping the map normalized.
    void add_term(const Exponent& exponent, const mpz_class& c);

    /// Image under a coefficient change Z -> F_p (or identity). Ranks must agree.
    GroupRingElem change_ring(const RingSpec& target) const;
    /// Sends every group element to 1; the result lives in `spec().without_h1()`.
    GroupRingElem project_h1() const;

    /// Text form, e.g. `1 + lambda1 + mu1*lambda1`.
    std::string to_string() const;

private:
    RingSpec spec_;
    std::map<Exponent, mpz_class> terms_;
};

/// Coefficient map Z -> F_q (or F_q -> F_q) used by evaluation.
/// Throws StructuralError if the coefficient ring does not map into F_q.
FieldElem scalar_to_field(const RingSpec& spec, const mpz_class& c, const FiniteField& field);

/// Substitutes rho_i for the i-th variable.
FieldElem gr_eval(const GroupRingElem& a, const RhoPoint& rho);

/// Throws StructuralError unless the coefficients of `spec` map into F_q.
void check_field_compatible(const RingSpec& spec, const FiniteField& field);

}  // namespace lch
