#include "lch/dga.hpp"

#include <map>
#include <sstream>

#include "lch/errors.hpp"
#include "lch/linalg.hpp"

namespace lch {

Dga::Dga(AlgebraPtr algebra, std::vector<NcPoly> differentials)
    : algebra_(std::move(algebra)), diff_(std::move(differentials))
{
    if (diff_.size() != algebra_->size())
        throw StructuralError("differential table has " + std::to_string(diff_.size()) + " entries for " +
                              std::to_string(algebra_->size()) + " generators");
    for (auto& p : diff_) {
        if (p.algebra() != algebra_) {
            if (!(p.algebra()->size() == algebra_->size() && algebra_->extends(*p.algebra())))
                throw StructuralError("differential belongs to a different algebra");
            p = p.rebase(algebra_);
        }
    }
}

Dga Dga::with_zero_differential(AlgebraPtr algebra)
{
    std::vector<NcPoly> diff(algebra->size(), NcPoly(algebra));
    return Dga(std::move(algebra), std::move(diff));
}

const NcPoly& Dga::differential(std::string_view name) const
{
    auto id = find(name);
    if (!id)
        throw StructuralError("unknown generator '" + std::string(name) + "'");
    return diff_[*id];
}

bool operator==(const Dga& a, const Dga& b)
{
    if (a.algebra_ != b.algebra_ &&
        !(a.algebra_->size() == b.algebra_->size() && a.algebra_->extends(*b.algebra_)))
        return false;
    for (std::size_t i = 0; i < a.diff_.size(); ++i)
        if (a.diff_[i].terms() != b.diff_[i].terms())
            return false;
    return true;
}

NcPoly leibniz_extend(std::span<const NcPoly> table, const NcPoly& x)
{
    const auto& algebra = x.algebra();
    NcPoly out(algebra);
    const std::size_t cap = algebra->max_word_length();
    Word w;
    for (const auto& [word, coeff] : x.terms()) {
        int prefix_degree = 0;
        for (std::size_t i = 0; i < word.size(); ++i) {
            GenId g = word[i];
            if (g >= table.size())
                throw StructuralError("generator '" + algebra->generator(g).name + "' has no differential");
            const bool negate = (prefix_degree % 2) != 0;
            for (const auto& [dw, dc] : table[g].terms()) {
                if (word.size() - 1 + dw.size() > cap)
                    throw ResourceError("Leibniz expansion exceeds the word-length cap of " + std::to_string(cap));
                w.assign(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(i));
                w.insert(w.end(), dw.begin(), dw.end());
                w.insert(w.end(), word.begin() + static_cast<std::ptrdiff_t>(i) + 1, word.end());
                GroupRingElem c = coeff * dc;
                out.add_term(w, negate ? -c : c);
            }
            prefix_degree += algebra->generator(g).degree;
        }
    }
    return out;
}

bool VerifyReport::degrees_ok() const
{
    for (const auto& g : generators)
        if (!g.degree_minus_one)
            return false;
    return true;
}

bool VerifyReport::d_squared_ok() const
{
    for (const auto& g : generators)
        if (!g.d_squared_zero)
            return false;
    return true;
}

std::string VerifyReport::diagnostics() const
{
    for (const auto& g : generators) {
        if (!g.degree_minus_one) {
            std::ostringstream os;
            os << "generator " << g.name << ": differential ";
            if (g.found_degree.kind == PolyDegree::Kind::NonHomogeneous)
                os << "is not homogeneous";
            else
                os << "has degree " << g.found_degree.value;
            os << ", expected degree minus one";
            return os.str();
        }
        if (!g.d_squared_zero)
            return "generator " + g.name + ": d(d(" + g.name + ")) = " + g.residual.to_string() + " != 0";
    }
    return {};
}

VerifyReport dga_verify(const Dga& d)
{
    VerifyReport report;
    report.generators.reserve(d.size());
    for (GenId id = 0; id < d.size(); ++id) {
        const auto& gen = d.generators()[id];
        const auto& dc = d.differential(id);
        GeneratorCheck check{gen.name, true, true, nc_degree(dc), leibniz_extend(d, dc)};
        check.degree_minus_one = check.found_degree.matches(gen.degree - 1);
        check.d_squared_zero = check.residual.is_zero();
        report.generators.push_back(std::move(check));
    }
    return report;
}

NcPoly wordlength_part(const NcPoly& x, std::size_t length)
{
    NcPoly out(x.algebra());
    for (const auto& [w, c] : x.terms())
        if (w.size() == length)
            out.add_term(w, c);
    return out;
}

bool is_good(const Dga& d)
{
    for (const auto& p : d.differentials())
        if (!wordlength_part(p, 0).is_zero())
            return false;
    return true;
}

Dga stabilize(const Dga& d, int j, const std::pair<std::string, std::string>& names)
{
    if (names.first == names.second)
        throw StructuralError("stabilization generators need distinct names");
    for (const auto& n : {names.first, names.second})
        if (d.find(n))
            throw StructuralError("generator name '" + n + "' is already in use");
    auto gens = d.generators();
    gens.push_back(Generator{names.first, j});
    gens.push_back(Generator{names.second, j - 1});
    auto algebra = Algebra::make(d.ring(), std::move(gens), d.algebra()->max_word_length());
    std::vector<NcPoly> diff;
    diff.reserve(algebra->size());
    for (const auto& p : d.differentials())
        diff.push_back(p.rebase(algebra));
    const auto b = static_cast<GenId>(algebra->size() - 1);
    diff.push_back(NcPoly::generator(algebra, b));
    diff.emplace_back(algebra);
    return Dga(std::move(algebra), std::move(diff));
}

Dga stabilize(const Dga& d, int j)
{
    for (std::size_t n = 1;; ++n) {
        std::string a = "s" + std::to_string(n) + "a";
        std::string b = "s" + std::to_string(n) + "b";
        if (!d.find(a) && !d.find(b))
            return stabilize(d, j, {a, b});
    }
}

namespace {

NcPoly substitute(const NcPoly& x, GenId target, const NcPoly& image)
{
    const auto& algebra = x.algebra();
    NcPoly out(algebra);
    for (const auto& [w, c] : x.terms()) {
        NcPoly term = NcPoly::scalar(algebra, c);
        for (auto g : w)
            term = term * (g == target ? image : NcPoly::generator(algebra, g));
        out += term;
    }
    return out;
}

}  // namespace

NcPoly ElementaryAutomorphism::apply(const NcPoly& x) const
{
    NcPoly image = NcPoly::generator(algebra, target).scaled(unit) + shift;
    return substitute(x, target, image);
}

NcPoly ElementaryAutomorphism::apply_inverse(const NcPoly& x) const
{
    NcPoly image = (NcPoly::generator(algebra, target) - shift).scaled(unit.unit_inverse());
    return substitute(x, target, image);
}

ConjugatedDga elementary_auto(const Dga& d, GenId j, const GroupRingElem& unit, const NcPoly& shift)
{
    if (j >= d.size())
        throw StructuralError("generator id out of range");
    if (unit.spec() != d.ring())
        throw StructuralError("unit lives in a different ring");
    if (!unit.is_unit())
        throw StructuralError("coefficient " + unit.to_string() + " is not a unit");
    NcPoly b = shift.algebra() == d.algebra() ? shift : shift.rebase(d.algebra());
    const auto& gen = d.generators()[j];
    for (const auto& [w, c] : b.terms())
        for (auto g : w)
            if (g == j)
                throw StructuralError("shift term mentions the target generator " + gen.name);
    if (!nc_degree(b).matches(gen.degree))
        throw StructuralError("shift is not homogeneous of degree " + std::to_string(gen.degree));

    ElementaryAutomorphism phi{d.algebra(), j, unit, b};
    // d' = phi d phi^{-1}: generators other than a_j are fixed by phi^{-1};
    // phi^{-1}(a_j) = A^{-1}(a_j - b).
    std::vector<NcPoly> diff;
    diff.reserve(d.size());
    for (GenId i = 0; i < d.size(); ++i) {
        if (i != j) {
            diff.push_back(phi.apply(d.differential(i)));
            continue;
        }
        NcPoly pre = (d.differential(j) - leibniz_extend(d, b)).scaled(unit.unit_inverse());
        diff.push_back(phi.apply(pre));
    }
    return {Dga(d.algebra(), std::move(diff)), std::move(phi)};
}

namespace {

Dga map_coefficients(const Dga& d, const RingSpec& target, bool project)
{
    auto algebra = Algebra::make(target, d.generators(), d.algebra()->max_word_length());
    std::vector<NcPoly> diff;
    diff.reserve(d.size());
    for (const auto& p : d.differentials()) {
        NcPoly q(algebra);
        for (const auto& [w, c] : p.terms()) {
            GroupRingElem mapped = project ? c.project_h1() : c;
            q.add_term(w, mapped.change_ring(target));
        }
        diff.push_back(std::move(q));
    }
    return Dga(std::move(algebra), std::move(diff));
}

}  // namespace

Dga change_coefficients(const Dga& d, const RingSpec& target)
{
    if (target.h1_names() != d.ring().h1_names())
        throw StructuralError("change_coefficients keeps the H1 basis; names differ");
    return map_coefficients(d, target, false);
}

Dga project_h1(const Dga& d) { return map_coefficients(d, d.ring().without_h1(), true); }

Dga pure_subdga(const Dga& d)
{
    std::vector<Generator> gens;
    std::vector<GenId> new_id(d.size(), 0);
    std::vector<bool> keep(d.size(), false);
    for (GenId i = 0; i < d.size(); ++i) {
        if (d.generators()[i].is_mixed())
            continue;
        keep[i] = true;
        new_id[i] = static_cast<GenId>(gens.size());
        gens.push_back(d.generators()[i]);
    }
    auto algebra = Algebra::make(d.ring(), std::move(gens), d.algebra()->max_word_length());
    std::vector<NcPoly> diff;
    for (GenId i = 0; i < d.size(); ++i) {
        if (!keep[i])
            continue;
        NcPoly q(algebra);
        for (const auto& [w, c] : d.differential(i).terms()) {
            Word mapped;
            for (auto g : w) {
                if (!keep[g])
                    throw StructuralError("differential of pure generator " + d.generators()[i].name +
                                          " involves mixed generator " + d.generators()[g].name);
                mapped.push_back(new_id[g]);
            }
            q.add_term(mapped, c);
        }
        diff.push_back(std::move(q));
    }
    return Dga(std::move(algebra), std::move(diff));
}

UnitCertificate unit_in_image(const Dga& d, std::size_t max_word_length, std::size_t max_candidates)
{
    if (!d.ring().is_field())
        throw UnsupportedError("unit-in-image certificates need field coefficients; ring is " +
                               d.ring().coefficient_name());
    const Dga projected = project_h1(d);
    const auto& algebra = projected.algebra();
    const auto& field = projected.ring().field();

    // Degree-1 words of length 1..max_word_length.
    std::vector<Word> candidates;
    Word current;
    auto extend = [&](auto&& self, int degree) -> void {
        if (!current.empty() && degree == 1) {
            if (candidates.size() >= max_candidates)
                throw ResourceError("unit-in-image search exceeds " + std::to_string(max_candidates) +
                                    " candidate words");
            candidates.push_back(current);
        }
        if (current.size() == max_word_length)
            return;
        for (GenId g = 0; g < algebra->size(); ++g) {
            current.push_back(g);
            self(self, degree + algebra->generator(g).degree);
            current.pop_back();
        }
    };
    extend(extend, 0);

    UnitCertificate cert;
    cert.max_word_length = max_word_length;
    if (candidates.empty())
        return cert;

    std::map<Word, std::size_t, WordOrder> row_of;
    row_of.emplace(Word{}, 0);
    std::vector<std::vector<std::pair<std::size_t, FieldElem>>> columns;
    columns.reserve(candidates.size());
    for (const auto& w : candidates) {
        NcPoly image = leibniz_extend(projected, NcPoly::word(algebra, w, GroupRingElem::one(projected.ring())));
        std::vector<std::pair<std::size_t, FieldElem>> col;
        for (const auto& [u, c] : image.terms()) {
            auto [it, inserted] = row_of.try_emplace(u, row_of.size());
            col.emplace_back(it->second, static_cast<FieldElem>(c.constant_term().get_ui()));
        }
        columns.push_back(std::move(col));
    }
    FqMatrix a(field, row_of.size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (const auto& [r, v] : columns[c])
            a.at(r, c) = v;
    std::vector<FieldElem> rhs(row_of.size(), 0);
    rhs[0] = 1;
    auto x = solve(a, rhs);
    if (!x)
        return cert;
    cert.found = true;
    for (std::size_t c = 0; c < candidates.size(); ++c)
        if ((*x)[c] != 0)
            cert.witness.emplace_back(candidates[c], (*x)[c]);
    return cert;
}

}  // namespace lch
