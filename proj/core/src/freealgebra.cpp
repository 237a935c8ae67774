#include "lch/freealgebra.hpp"

#include <sstream>

#include "lch/errors.hpp"

namespace lch {

Algebra::Algebra(RingSpec ring, std::vector<Generator> gens, std::size_t max_word_length)
    : ring_(std::move(ring)), gens_(std::move(gens)), max_word_length_(max_word_length)
{
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        const auto& g = gens_[i];
        if (!is_identifier(g.name))
            throw StructuralError("invalid generator name '" + g.name + "'");
        if (ring_.h1_index(g.name))
            throw StructuralError("generator name '" + g.name + "' clashes with an H1 variable");
        if (!by_name_.emplace(g.name, static_cast<GenId>(i)).second)
            throw StructuralError("duplicate generator name '" + g.name + "'");
    }
}

std::shared_ptr<const Algebra> Algebra::make(RingSpec ring, std::vector<Generator> gens,
                                             std::size_t max_word_length)
{
    return std::make_shared<const Algebra>(std::move(ring), std::move(gens), max_word_length);
}

std::optional<GenId> Algebra::find(std::string_view name) const
{
    auto it = by_name_.find(name);
    if (it == by_name_.end())
        return std::nullopt;
    return it->second;
}

int Algebra::word_degree(const Word& w) const
{
    int d = 0;
    for (auto id : w)
        d += gens_.at(id).degree;
    return d;
}

bool Algebra::extends(const Algebra& other) const
{
    if (ring_ != other.ring_ || gens_.size() < other.gens_.size())
        return false;
    for (std::size_t i = 0; i < other.gens_.size(); ++i)
        if (!(gens_[i] == other.gens_[i]))
            return false;
    return true;
}

namespace {

bool same_algebra(const Algebra& a, const Algebra& b)
{
    return &a == &b || (a.size() == b.size() && a.extends(b));
}

void require_same(const NcPoly& a, const NcPoly& b)
{
    if (!same_algebra(*a.algebra(), *b.algebra()))
        throw StructuralError("polynomials belong to different algebras");
}

}  // namespace

NcPoly NcPoly::scalar(const AlgebraPtr& algebra, const GroupRingElem& c)
{
    return word(algebra, {}, c);
}

NcPoly NcPoly::scalar(const AlgebraPtr& algebra, const mpz_class& c)
{
    return word(algebra, {}, GroupRingElem::scalar(algebra->ring(), c));
}

NcPoly NcPoly::generator(const AlgebraPtr& algebra, GenId id)
{
    return word(algebra, {id}, GroupRingElem::one(algebra->ring()));
}

NcPoly NcPoly::word(const AlgebraPtr& algebra, Word w, const GroupRingElem& c)
{
    if (c.spec() != algebra->ring())
        throw StructuralError("coefficient ring differs from the algebra's ring");
    for (auto id : w)
        if (id >= algebra->size())
            throw StructuralError("generator id " + std::to_string(id) + " out of range");
    if (w.size() > algebra->max_word_length())
        throw ResourceError("word length " + std::to_string(w.size()) + " exceeds the cap of " +
                            std::to_string(algebra->max_word_length()));
    NcPoly out(algebra);
    out.add_term(w, c);
    return out;
}

void NcPoly::add_term(const Word& w, const GroupRingElem& c)
{
    if (c.is_zero())
        return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

NcPoly& NcPoly::operator+=(const NcPoly& rhs)
{
    require_same(*this, rhs);
    for (const auto& [w, c] : rhs.terms_)
        add_term(w, c);
    return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& rhs)
{
    require_same(*this, rhs);
    for (const auto& [w, c] : rhs.terms_)
        add_term(w, -c);
    return *this;
}

NcPoly NcPoly::operator-() const
{
    NcPoly out(algebra_);
    for (const auto& [w, c] : terms_)
        out.terms_.emplace(w, -c);
    return out;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b)
{
    require_same(a, b);
    NcPoly out(a.algebra_);
    const std::size_t cap = a.algebra_->max_word_length();
    Word w;
    for (const auto& [wa, ca] : a.terms_) {
        for (const auto& [wb, cb] : b.terms_) {
            if (wa.size() + wb.size() > cap)
                throw ResourceError("product word length " + std::to_string(wa.size() + wb.size()) +
                                    " exceeds the cap of " + std::to_string(cap));
            w.assign(wa.begin(), wa.end());
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_term(w, ca * cb);
        }
    }
    return out;
}

bool operator==(const NcPoly& a, const NcPoly& b)
{
    return same_algebra(*a.algebra_, *b.algebra_) && a.terms_ == b.terms_;
}

NcPoly NcPoly::scaled(const GroupRingElem& c) const
{
    NcPoly out(algebra_);
    for (const auto& [w, coeff] : terms_)
        out.add_term(w, c * coeff);
    return out;
}

NcPoly NcPoly::rebase(const AlgebraPtr& target) const
{
    if (!target->extends(*algebra_))
        throw StructuralError("target algebra does not extend the source algebra");
    NcPoly out(target);
    out.terms_ = terms_;
    return out;
}

std::string NcPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    const auto& ring = algebra_->ring();
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, coeff] : terms_) {
        std::string word;
        for (auto id : w) {
            if (!word.empty())
                word += '*';
            word += algebra_->generator(id).name;
        }
        for (const auto& [e, c] : coeff.terms()) {
            bool negative = c < 0;
            mpz_class mag = negative ? mpz_class(-c) : c;
            if (first)
                os << (negative ? "-" : "");
            else
                os << (negative ? " - " : " + ");
            first = false;

            std::string body;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0)
                    continue;
                if (!body.empty())
                    body += '*';
                body += ring.h1_names()[i];
                if (e[i] != 1)
                    body += "^" + std::to_string(e[i]);
            }
            if (!word.empty())
                body += (body.empty() ? "" : "*") + word;
            if (body.empty())
                os << mag.get_str();
            else if (mag == 1)
                os << body;
            else
                os << mag.get_str() << '*' << body;
        }
    }
    return os.str();
}

NcPoly nc_mul(const NcPoly& a, const NcPoly& b) { return a * b; }

PolyDegree nc_degree(const NcPoly& a)
{
    PolyDegree out = PolyDegree::any();
    for (const auto& [w, c] : a.terms()) {
        int d = a.algebra()->word_degree(w);
        if (out.kind == PolyDegree::Kind::Any)
            out = PolyDegree::of(d);
        else if (out.value != d)
            return PolyDegree::non_homogeneous();
    }
    return out;
}

}  // namespace lch
