#include "lch/groupring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "lch/errors.hpp"

namespace lch {

bool is_identifier(std::string_view s)
{
    if (s.empty())
        return false;
    auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
    auto digit = [](char c) { return c >= '0' && c <= '9'; };
    if (!alpha(s.front()))
        return false;
    return std::all_of(s.begin(), s.end(), [&](char c) { return alpha(c) || digit(c); });
}

struct RingSpec::Impl {
    std::uint64_t q = 0;
    FieldPtr field;
    std::vector<std::string> names;
};

namespace {

void check_names(const std::vector<std::string>& names)
{
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (!is_identifier(n))
            throw StructuralError("invalid H1 variable name '" + n + "'");
        if (!seen.insert(n).second)
            throw StructuralError("duplicate H1 variable name '" + n + "'");
    }
}

}  // namespace

RingSpec RingSpec::integers(std::vector<std::string> h1_names)
{
    check_names(h1_names);
    auto impl = std::make_shared<Impl>();
    impl->names = std::move(h1_names);
    return RingSpec(std::move(impl));
}

RingSpec RingSpec::finite_field(std::uint64_t q, std::vector<std::string> h1_names)
{
    check_names(h1_names);
    auto impl = std::make_shared<Impl>();
    impl->q = q;
    impl->field = FiniteField::get(q);
    impl->names = std::move(h1_names);
    return RingSpec(std::move(impl));
}

RingSpec RingSpec::from_characteristic(unsigned characteristic, std::vector<std::string> h1_names)
{
    if (characteristic == 0)
        return integers(std::move(h1_names));
    if (!is_prime(characteristic))
        throw StructuralError("characteristic " + std::to_string(characteristic) + " is not prime");
    return finite_field(characteristic, std::move(h1_names));
}

unsigned RingSpec::characteristic() const { return impl_->field ? impl_->field->characteristic() : 0; }
std::uint64_t RingSpec::field_order() const { return impl_->q; }
const FieldPtr& RingSpec::field() const { return impl_->field; }
std::size_t RingSpec::h1_rank() const { return impl_->names.size(); }
const std::vector<std::string>& RingSpec::h1_names() const { return impl_->names; }

std::optional<std::size_t> RingSpec::h1_index(std::string_view name) const
{
    const auto& names = impl_->names;
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name)
            return i;
    return std::nullopt;
}

RingSpec RingSpec::without_h1() const
{
    if (h1_rank() == 0)
        return *this;
    auto impl = std::make_shared<Impl>(*impl_);
    impl->names.clear();
    return RingSpec(std::move(impl));
}

std::string RingSpec::coefficient_name() const
{
    return impl_->q == 0 ? std::string("Z") : "F" + std::to_string(impl_->q);
}

mpz_class RingSpec::reduce(const mpz_class& c) const
{
    if (!impl_->field)
        return c;
    const auto& f = *impl_->field;
    if (f.is_prime_field())
        return mpz_class(f.from_integer(c));
    if (c < 0 || c >= f.order())
        throw StructuralError("F" + std::to_string(f.order()) + " element index out of range");
    return c;
}

mpz_class RingSpec::add(const mpz_class& a, const mpz_class& b) const
{
    if (!impl_->field)
        return a + b;
    return mpz_class(impl_->field->add(a.get_ui(), b.get_ui()));
}

mpz_class RingSpec::mul(const mpz_class& a, const mpz_class& b) const
{
    if (!impl_->field)
        return a * b;
    return mpz_class(impl_->field->mul(a.get_ui(), b.get_ui()));
}

mpz_class RingSpec::neg(const mpz_class& a) const
{
    if (!impl_->field)
        return -a;
    return mpz_class(impl_->field->neg(a.get_ui()));
}

bool RingSpec::is_unit_scalar(const mpz_class& a) const
{
    if (!impl_->field)
        return a == 1 || a == -1;
    return a != 0;
}

mpz_class RingSpec::inv(const mpz_class& a) const
{
    if (!is_unit_scalar(a))
        throw StructuralError("scalar is not a unit of " + coefficient_name());
    if (!impl_->field)
        return a;
    return mpz_class(impl_->field->inv(a.get_ui()));
}

bool operator==(const RingSpec& a, const RingSpec& b)
{
    if (a.impl_ == b.impl_)
        return true;
    return a.impl_->q == b.impl_->q && a.impl_->names == b.impl_->names;
}

RhoPoint RhoPoint::make(std::uint64_t q, std::vector<FieldElem> values)
{
    RhoPoint rho{FiniteField::get(q), std::move(values)};
    for (auto v : rho.values) {
        if (v == 0)
            throw InvalidPointError("rho entries must be invertible (got 0)");
        if (v >= rho.field->order())
            throw InvalidPointError("rho entry " + std::to_string(v) + " is not an element of F" +
                                    std::to_string(q));
    }
    return rho;
}

RhoPoint RhoPoint::ones(std::uint64_t q, std::size_t rank)
{
    return make(q, std::vector<FieldElem>(rank, 1));
}

GroupRingElem GroupRingElem::scalar(const RingSpec& spec, const mpz_class& c)
{
    return monomial(spec, Exponent(spec.h1_rank(), 0), c);
}

GroupRingElem GroupRingElem::monomial(const RingSpec& spec, Exponent exponent, const mpz_class& c)
{
    if (exponent.size() != spec.h1_rank())
        throw StructuralError("exponent vector has the wrong length");
    GroupRingElem out(spec);
    out.add_term(exponent, spec.reduce(c));
    return out;
}

GroupRingElem GroupRingElem::variable(const RingSpec& spec, std::size_t index, int power)
{
    if (index >= spec.h1_rank())
        throw StructuralError("H1 variable index out of range");
    Exponent e(spec.h1_rank(), 0);
    e[index] = power;
    return monomial(spec, std::move(e));
}

bool GroupRingElem::is_scalar() const
{
    if (terms_.empty())
        return true;
    if (terms_.size() != 1)
        return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

mpz_class GroupRingElem::constant_term() const
{
    auto it = terms_.find(Exponent(spec_.h1_rank(), 0));
    return it == terms_.end() ? mpz_class(0) : it->second;
}

bool GroupRingElem::is_unit() const
{
    return terms_.size() == 1 && spec_.is_unit_scalar(terms_.begin()->second);
}

GroupRingElem GroupRingElem::unit_inverse() const
{
    if (!is_unit())
        throw StructuralError("element " + to_string() + " is not a unit of the group ring");
    const auto& [e, c] = *terms_.begin();
    Exponent inv(e.size());
    std::transform(e.begin(), e.end(), inv.begin(), [](int x) { return -x; });
    return monomial(spec_, std::move(inv), spec_.inv(c));
}

void GroupRingElem::add_term(const Exponent& exponent, const mpz_class& c)
{
    if (exponent.size() != spec_.h1_rank())
        throw StructuralError("exponent vector has the wrong length");
    const mpz_class r = spec_.reduce(c);
    if (r == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(exponent, r);
    if (!inserted) {
        it->second = spec_.add(it->second, r);
        if (it->second == 0)
            terms_.erase(it);
    }
}

namespace {

void require_same(const RingSpec& a, const RingSpec& b)
{
    if (a != b)
        throw StructuralError("group-ring operands live in different rings");
}

}  // namespace

GroupRingElem& GroupRingElem::operator+=(const GroupRingElem& rhs)
{
    require_same(spec_, rhs.spec_);
    for (const auto& [e, c] : rhs.terms_)
        add_term(e, c);
    return *this;
}

GroupRingElem& GroupRingElem::operator-=(const GroupRingElem& rhs)
{
    require_same(spec_, rhs.spec_);
    for (const auto& [e, c] : rhs.terms_)
        add_term(e, spec_.neg(c));
    return *this;
}

GroupRingElem GroupRingElem::operator-() const
{
    GroupRingElem out(spec_);
    for (const auto& [e, c] : terms_)
        out.terms_.emplace(e, spec_.neg(c));
    return out;
}

GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b)
{
    require_same(a.spec_, b.spec_);
    GroupRingElem out(a.spec_);
    Exponent e(a.spec_.h1_rank());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            out.add_term(e, a.spec_.mul(ca, cb));
        }
    }
    return out;
}

GroupRingElem& GroupRingElem::operator*=(const GroupRingElem& rhs)
{
    *this = *this * rhs;
    return *this;
}

bool operator==(const GroupRingElem& a, const GroupRingElem& b)
{
    return a.spec_ == b.spec_ && a.terms_ == b.terms_;
}

GroupRingElem GroupRingElem::change_ring(const RingSpec& target) const
{
    if (target.h1_rank() != spec_.h1_rank())
        throw StructuralError("change_ring requires equal H1 rank");
    if (spec_.is_field() && target.field_order() != spec_.field_order())
        throw StructuralError("cannot change coefficients " + spec_.coefficient_name() + " -> " +
                              target.coefficient_name());
    // Z -> F_{p^n} lands in the prime subfield, whose encoding is the residue.
    GroupRingElem out(target);
    for (const auto& [e, c] : terms_) {
        mpz_class r = c;
        if (target.is_field() && !spec_.is_field())
            r = target.field()->from_integer(c);
        out.add_term(e, r);
    }
    return out;
}

GroupRingElem GroupRingElem::project_h1() const
{
    RingSpec target = spec_.without_h1();
    GroupRingElem out(target);
    for (const auto& [e, c] : terms_)
        out.add_term({}, c);
    return out;
}

std::string GroupRingElem::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        bool negative = c < 0;
        mpz_class mag = negative ? mpz_class(-c) : c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;

        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += '*';
            mono += spec_.h1_names()[i];
            if (e[i] != 1)
                mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            os << mag.get_str();
        else if (mag == 1)
            os << mono;
        else
            os << mag.get_str() << '*' << mono;
    }
    return os.str();
}

void check_field_compatible(const RingSpec& spec, const FiniteField& field)
{
    if (!spec.is_field())
        return;
    if (spec.field_order() == field.order())
        return;
    if (spec.field()->is_prime_field() && spec.characteristic() == field.characteristic())
        return;
    throw StructuralError("coefficients " + spec.coefficient_name() + " do not map into F" +
                          std::to_string(field.order()));
}

FieldElem scalar_to_field(const RingSpec& spec, const mpz_class& c, const FiniteField& field)
{
    check_field_compatible(spec, field);
    if (spec.is_field() && spec.field_order() == field.order())
        return static_cast<FieldElem>(c.get_ui());
    return field.from_integer(c);
}

FieldElem gr_eval(const GroupRingElem& a, const RhoPoint& rho)
{
    const auto& field = *rho.field;
    check_field_compatible(a.spec(), field);
    if (rho.values.size() != a.spec().h1_rank())
        throw InvalidPointError("rho has " + std::to_string(rho.values.size()) + " entries, ring has rank " +
                                std::to_string(a.spec().h1_rank()));
    for (auto v : rho.values)
        if (v == 0 || v >= field.order())
            throw InvalidPointError("rho entries must be nonzero elements of F" + std::to_string(field.order()));
    FieldElem sum = 0;
    for (const auto& [e, c] : a.terms()) {
        FieldElem term = scalar_to_field(a.spec(), c, field);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0)
                term = field.mul(term, field.pow(rho.values[i], e[i]));
        sum = field.add(sum, term);
    }
    return sum;
}

}  // namespace lch
