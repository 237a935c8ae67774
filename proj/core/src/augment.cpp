#include "lch/augment.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "compiled.hpp"
#include "lch/errors.hpp"

namespace lch {
namespace detail {

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp)
{
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base)
            return std::numeric_limits<std::uint64_t>::max();
        out *= base;
    }
    return out;
}

void check_budget(std::uint64_t count, std::uint64_t budget, const char* what)
{
    if (count > budget)
        throw ResourceError(std::string(what) + " needs " +
                            (count == std::numeric_limits<std::uint64_t>::max() ? std::string("more than 2^64")
                                                                                 : std::to_string(count)) +
                            " candidate evaluations; budget is " + std::to_string(budget));
}

SpecializationPlan::SpecializationPlan(const Dga& d, FieldPtr field)
    : field_(std::move(field)), algebra_(d.algebra())
{
    check_field_compatible(d.ring(), *field_);
    diff_.resize(d.size());
    for (GenId id = 0; id < d.size(); ++id) {
        for (const auto& [w, c] : d.differential(id).terms()) {
            Term t{w, {}};
            for (const auto& [e, coeff] : c.terms())
                t.coeff.emplace_back(scalar_to_field(d.ring(), coeff, *field_), e);
            diff_[id].push_back(std::move(t));
        }
    }
}

FieldDifferential SpecializationPlan::at(const RhoPoint& rho) const
{
    const auto& f = *field_;
    FieldDifferential out{field_, algebra_, {}};
    out.diff.resize(diff_.size());
    for (std::size_t id = 0; id < diff_.size(); ++id) {
        for (const auto& t : diff_[id]) {
            FieldElem sum = 0;
            for (const auto& [c, e] : t.coeff) {
                FieldElem v = c;
                for (std::size_t i = 0; i < e.size(); ++i)
                    if (e[i] != 0)
                        v = f.mul(v, f.pow(rho.values[i], e[i]));
                sum = f.add(sum, v);
            }
            if (sum != 0)
                out.diff[id].push_back({sum, t.word});
        }
    }
    return out;
}

AugmentationSolver::AugmentationSolver(const FieldDifferential& d)
    : field_(d.field), num_generators_(d.algebra->size())
{
    std::vector<std::uint32_t> slot(num_generators_, std::numeric_limits<std::uint32_t>::max());
    for (GenId id = 0; id < num_generators_; ++id) {
        if (d.algebra->generator(id).degree == 0) {
            slot[id] = static_cast<std::uint32_t>(degree_zero_.size());
            degree_zero_.push_back(id);
        }
    }
    // eps kills every word containing a generator of nonzero degree.
    for (const auto& terms : d.diff) {
        Constraint c;
        for (const auto& t : terms) {
            std::vector<std::uint32_t> idx;
            bool alive = true;
            for (auto g : t.word) {
                if (slot[g] == std::numeric_limits<std::uint32_t>::max()) {
                    alive = false;
                    break;
                }
                idx.push_back(slot[g]);
            }
            if (alive)
                c.terms.emplace_back(t.coeff, std::move(idx));
        }
        if (!c.terms.empty())
            constraints_.push_back(std::move(c));
    }
}

std::uint64_t AugmentationSolver::candidate_count() const
{
    return saturating_pow(field_->order(), degree_zero_.size());
}

bool AugmentationSolver::satisfied(const std::vector<FieldElem>& vals) const
{
    const auto& f = *field_;
    for (const auto& c : constraints_) {
        FieldElem sum = 0;
        for (const auto& [coeff, idx] : c.terms) {
            FieldElem v = coeff;
            for (auto i : idx) {
                v = f.mul(v, vals[i]);
                if (v == 0)
                    break;
            }
            sum = f.add(sum, v);
        }
        if (sum != 0)
            return false;
    }
    return true;
}

bool AugmentationSolver::exists() const
{
    bool found = false;
    for_each([&](const std::vector<FieldElem>&) {
        found = true;
        return false;
    });
    return found;
}

}  // namespace detail

namespace {

void require_field_rank0(const Dga& d, const char* op)
{
    if (!d.ring().is_field() || d.ring().h1_rank() != 0)
        throw PreconditionError(std::string(op) + " needs field coefficients without H1 variables (ring is " +
                                d.ring().coefficient_name() + " with H1 rank " +
                                std::to_string(d.ring().h1_rank()) + ")");
}

detail::FieldDifferential compile(const Dga& d)
{
    const auto& field = d.ring().field();
    return detail::SpecializationPlan(d, field).at(RhoPoint{field, {}});
}

}  // namespace

Dga specialize(const Dga& d, const RhoPoint& rho)
{
    if (rho.values.size() != d.ring().h1_rank())
        throw InvalidPointError("rho has " + std::to_string(rho.values.size()) + " entries, ring has rank " +
                                std::to_string(d.ring().h1_rank()));
    check_field_compatible(d.ring(), *rho.field);
    RingSpec target = RingSpec::finite_field(rho.q());
    auto algebra = Algebra::make(target, d.generators(), d.algebra()->max_word_length());
    std::vector<NcPoly> diff;
    diff.reserve(d.size());
    for (const auto& p : d.differentials()) {
        NcPoly out(algebra);
        for (const auto& [w, c] : p.terms())
            out.add_term(w, GroupRingElem::scalar(target, gr_eval(c, rho)));
        diff.push_back(std::move(out));
    }
    return Dga(std::move(algebra), std::move(diff));
}

FieldElem apply_augmentation(const Augmentation& eps, const NcPoly& x)
{
    const auto& f = *eps.field;
    if (x.ring().h1_rank() != 0)
        throw PreconditionError("augmentations apply to algebras without H1 variables");
    FieldElem sum = 0;
    for (const auto& [w, c] : x.terms()) {
        FieldElem v = scalar_to_field(x.ring(), c.constant_term(), f);
        for (auto g : w)
            v = f.mul(v, eps.values.at(g));
        sum = f.add(sum, v);
    }
    return sum;
}

bool is_augmentation(const Dga& d, const Augmentation& eps)
{
    if (eps.values.size() != d.size())
        return false;
    for (GenId id = 0; id < d.size(); ++id)
        if (eps.values[id] != 0 && d.generators()[id].degree != 0)
            return false;
    for (const auto& p : d.differentials())
        if (apply_augmentation(eps, p) != 0)
            return false;
    return true;
}

std::vector<Augmentation> enumerate_augmentations(const Dga& d, std::uint64_t budget)
{
    require_field_rank0(d, "enumerate_augmentations");
    auto fd = compile(d);
    detail::AugmentationSolver solver(fd);
    detail::check_budget(solver.candidate_count(), budget, "augmentation enumeration");
    std::vector<Augmentation> out;
    solver.for_each([&](const std::vector<FieldElem>& vals) {
        out.push_back({fd.field, vals});
        return true;
    });
    return out;
}

bool has_augmentation(const Dga& d, std::uint64_t budget)
{
    require_field_rank0(d, "has_augmentation");
    auto fd = compile(d);
    detail::AugmentationSolver solver(fd);
    detail::check_budget(solver.candidate_count(), budget, "augmentation search");
    return solver.exists();
}

std::string LaurentSystem::to_string() const
{
    std::ostringstream os;
    for (const auto& e : equations)
        os << e.to_string() << " = 0\n";
    return os.str();
}

LaurentSystem augvar_system(const Dga& d)
{
    for (const auto& g : d.generators())
        if (g.degree == 0)
            throw UnsupportedError("augvar_system: generator " + g.name +
                                   " has degree 0; use augvar_count for a joint brute force");
    LaurentSystem s{d.ring(), {}};
    for (GenId id = 0; id < d.size(); ++id) {
        if (d.generators()[id].degree != 1)
            continue;
        auto constant = wordlength_part(d.differential(id), 0);
        if (constant.is_zero())
            continue;
        const auto& eq = constant.terms().begin()->second;
        if (std::find(s.equations.begin(), s.equations.end(), eq) == s.equations.end())
            s.equations.push_back(eq);
    }
    return s;
}

bool augvar_member(const LaurentSystem& s, const RhoPoint& rho)
{
    if (rho.values.size() != s.ring.h1_rank())
        throw InvalidPointError("rho has " + std::to_string(rho.values.size()) + " entries, ring has rank " +
                                std::to_string(s.ring.h1_rank()));
    for (const auto& e : s.equations)
        if (gr_eval(e, rho) != 0)
            return false;
    return true;
}

std::vector<RhoPoint> torus_points(std::uint64_t q, std::size_t rank)
{
    auto field = FiniteField::get(q);
    std::vector<RhoPoint> out;
    std::vector<FieldElem> vals(rank, 1);
    while (true) {
        out.push_back(RhoPoint{field, vals});
        std::size_t pos = rank;
        while (pos > 0) {
            --pos;
            if (++vals[pos] < q)
                break;
            vals[pos] = 1;
            if (pos == 0)
                return out;
        }
        if (rank == 0)
            return out;
    }
}

AugvarCount augvar_count(const Dga& d, std::uint64_t q, bool collect_points, std::uint64_t budget)
{
    auto field = FiniteField::get(q);
    detail::SpecializationPlan plan(d, field);
    const std::size_t rank = d.ring().h1_rank();

    std::size_t degree_zero = 0;
    for (const auto& g : d.generators())
        degree_zero += g.degree == 0 ? 1 : 0;
    const std::uint64_t points = detail::saturating_pow(q - 1, rank);
    const std::uint64_t per_point = detail::saturating_pow(q, degree_zero);
    const std::uint64_t total =
        per_point != 0 && points > std::numeric_limits<std::uint64_t>::max() / per_point
            ? std::numeric_limits<std::uint64_t>::max()
            : points * per_point;
    detail::check_budget(total, budget, "augmentation variety count");

    AugvarCount out{q, 0, points, std::nullopt};
    if (collect_points)
        out.points.emplace();
    for (const auto& rho : torus_points(q, rank)) {
        detail::AugmentationSolver solver(plan.at(rho));
        if (!solver.exists())
            continue;
        ++out.count;
        if (collect_points)
            out.points->push_back(rho);
    }
    return out;
}

}  // namespace lch
