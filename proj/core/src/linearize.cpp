#include "lch/linearize.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "compiled.hpp"
#include "lch/errors.hpp"

namespace lch {

std::size_t ChainComplexF::dimension(int degree) const
{
    auto it = basis.find(degree);
    return it == basis.end() ? 0 : it->second.size();
}

bool ChainComplexF::composition_zero() const
{
    for (const auto& [deg, m] : boundary) {
        auto next = boundary.find(deg - 1);
        if (next == boundary.end())
            continue;
        if (!multiply(next->second, m).is_zero())
            return false;
    }
    return true;
}

Dga twist(const Dga& d, const Augmentation& eps)
{
    if (!d.ring().is_field() || d.ring().h1_rank() != 0)
        throw PreconditionError("twist needs field coefficients without H1 variables");
    if (!is_augmentation(d, eps))
        throw PreconditionError("twist: the given map is not an augmentation of this DGA");
    const auto& algebra = d.algebra();
    std::vector<NcPoly> image;
    image.reserve(d.size());
    for (GenId g = 0; g < d.size(); ++g) {
        NcPoly p = NcPoly::generator(algebra, g);
        if (eps.values[g] != 0)
            p += NcPoly::scalar(algebra, mpz_class(eps.values[g]));
        image.push_back(std::move(p));
    }
    std::vector<NcPoly> diff;
    diff.reserve(d.size());
    for (const auto& p : d.differentials()) {
        NcPoly out(algebra);
        for (const auto& [w, c] : p.terms()) {
            NcPoly term = NcPoly::scalar(algebra, c);
            for (auto g : w)
                term = term * image[g];
            out += term;
        }
        diff.push_back(std::move(out));
    }
    Dga twisted(algebra, std::move(diff));
    if (!is_good(twisted))
        throw Error("internal: twisted differential has a constant part");
    return twisted;
}

namespace {

struct ComplexBuilder {
    ChainComplexF complex;
    std::vector<std::size_t> index;  // generator id -> position within its degree

    ComplexBuilder(FieldPtr field, const Algebra& algebra) : complex{std::move(field), {}, {}}
    {
        index.resize(algebra.size());
        for (GenId g = 0; g < algebra.size(); ++g) {
            auto& ids = complex.basis[algebra.generator(g).degree];
            index[g] = ids.size();
            ids.push_back(g);
        }
        for (const auto& [deg, ids] : complex.basis) {
            auto below = complex.basis.find(deg - 1);
            if (below == complex.basis.end())
                continue;
            complex.boundary.emplace(deg, FqMatrix(complex.field, below->second.size(), ids.size()));
        }
    }

    void add(const Algebra& algebra, GenId source, GenId target, FieldElem v)
    {
        const int deg = algebra.generator(source).degree;
        if (algebra.generator(target).degree != deg - 1)
            throw StructuralError("differential of " + algebra.generator(source).name +
                                  " has a linear term of the wrong degree");
        auto& m = complex.boundary.at(deg);
        auto& entry = m.at(index[target], index[source]);
        entry = complex.field->add(entry, v);
    }
};

ChainComplexF twisted_linear_part(const detail::FieldDifferential& fd, const std::vector<FieldElem>& eps)
{
    const auto& f = *fd.field;
    const auto& algebra = *fd.algebra;
    ComplexBuilder b(fd.field, algebra);
    for (GenId c = 0; c < fd.diff.size(); ++c) {
        for (const auto& t : fd.diff[c]) {
            const auto& w = t.word;
            for (std::size_t i = 0; i < w.size(); ++i) {
                FieldElem v = t.coeff;
                for (std::size_t j = 0; j < w.size() && v != 0; ++j)
                    if (j != i)
                        v = f.mul(v, eps[w[j]]);
                if (v != 0)
                    b.add(algebra, c, w[i], v);
            }
        }
    }
    return std::move(b.complex);
}

LinearizedHomology split_homology(const ChainComplexF& c, const Algebra& algebra)
{
    LinearizedHomology h{homology_betti(c), {}};
    bool any_mixed = false;
    for (const auto& g : algebra.generators())
        any_mixed = any_mixed || g.is_mixed();
    if (!any_mixed)
        return h;
    for (const auto& [deg, m] : c.boundary) {
        const auto& src = c.basis.at(deg);
        const auto& dst = c.basis.at(deg - 1);
        for (std::size_t i = 0; i < dst.size(); ++i)
            for (std::size_t j = 0; j < src.size(); ++j)
                if (m.at(i, j) != 0 && algebra.generator(dst[i]).is_mixed() != algebra.generator(src[j]).is_mixed())
                    return h;
    }
    h.mixed = homology_betti(c.restrict_to([&](GenId g) { return algebra.generator(g).is_mixed(); }));
    return h;
}

}  // namespace

ChainComplexF linear_part(const Dga& d)
{
    if (!d.ring().is_field() || d.ring().h1_rank() != 0)
        throw PreconditionError("linear_part needs field coefficients without H1 variables");
    if (!is_good(d))
        throw PreconditionError("linear_part: the DGA is not good (a differential has a constant part)");
    const auto& algebra = *d.algebra();
    ComplexBuilder b(d.ring().field(), algebra);
    for (GenId c = 0; c < d.size(); ++c)
        for (const auto& [w, coeff] : d.differential(c).terms())
            if (w.size() == 1)
                b.add(algebra, c, w[0], scalar_to_field(d.ring(), coeff.constant_term(), *d.ring().field()));
    if (!b.complex.composition_zero())
        throw PreconditionError("linear_part: the linearized differential does not square to zero");
    return std::move(b.complex);
}

BettiTable homology_betti(const ChainComplexF& c)
{
    BettiTable out;
    for (const auto& [deg, ids] : c.basis) {
        std::size_t dim = ids.size();
        auto out_map = c.boundary.find(deg);
        auto in_map = c.boundary.find(deg + 1);
        std::size_t r_out = out_map == c.boundary.end() ? 0 : rank(out_map->second);
        std::size_t r_in = in_map == c.boundary.end() ? 0 : rank(in_map->second);
        std::size_t h = dim - r_out - r_in;
        if (h != 0)
            out[deg] = h;
    }
    return out;
}

Fingerprint fingerprint(const Dga& d, std::span<const std::uint64_t> qs, const FingerprintOptions& opts)
{
    Fingerprint fp;
    const unsigned ch = d.ring().characteristic();
    if (ch == 0 || d.ring().field_order() == 2) {
        Dga over_f2 = ch == 0 ? change_coefficients(d, RingSpec::finite_field(2, d.ring().h1_names())) : d;
        fp.unit_in_image_f2 = unit_in_image(over_f2, opts.unit_witness_length).found;
    }

    std::size_t degree_zero = 0;
    for (const auto& g : d.generators())
        degree_zero += g.degree == 0 ? 1 : 0;
    const std::size_t rank = d.ring().h1_rank();

    for (auto q : qs) {
        auto field = FiniteField::get(q);
        detail::SpecializationPlan plan(d, field);
        const std::uint64_t points = detail::saturating_pow(q - 1, rank);
        const std::uint64_t per_point = detail::saturating_pow(q, degree_zero);
        const std::uint64_t total = per_point != 0 && points > std::numeric_limits<std::uint64_t>::max() / per_point
                                        ? std::numeric_limits<std::uint64_t>::max()
                                        : points * per_point;
        detail::check_budget(total, opts.budget, "fingerprint");

        FieldFingerprint entry;
        entry.q = q;
        for (const auto& rho : torus_points(q, rank)) {
            auto fd = plan.at(rho);
            detail::AugmentationSolver solver(fd);
            bool any = false;
            solver.for_each([&](const std::vector<FieldElem>& eps) {
                any = true;
                entry.homology.insert(split_homology(twisted_linear_part(fd, eps), *d.algebra()));
                return true;
            });
            if (any)
                ++entry.augvar_count;
            if (std::all_of(rho.values.begin(), rho.values.end(), [](FieldElem v) { return v == 1; }))
                entry.augmentation_at_projection = any;
        }
        fp.per_q.push_back(std::move(entry));
    }
    return fp;
}

std::string betti_to_string(const BettiTable& t)
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [deg, dim] : t) {
        os << (first ? "" : ", ") << deg << ':' << dim;
        first = false;
    }
    os << '}';
    return os.str();
}

namespace {

BettiTable shifted(const BettiTable& t, int s)
{
    BettiTable out;
    for (const auto& [deg, dim] : t)
        out[deg + s] = dim;
    return out;
}

// Moves the mixed summand of every entry by s degrees.
std::set<LinearizedHomology> shift_mixed(const std::set<LinearizedHomology>& hs, int s)
{
    std::set<LinearizedHomology> out;
    for (const auto& h : hs) {
        LinearizedHomology moved;
        moved.total = h.total;
        for (const auto& [deg, dim] : h.mixed) {
            auto it = moved.total.find(deg);
            if ((it->second -= dim) == 0)
                moved.total.erase(it);
        }
        moved.mixed = shifted(h.mixed, s);
        for (const auto& [deg, dim] : moved.mixed)
            moved.total[deg] += dim;
        out.insert(std::move(moved));
    }
    return out;
}

std::set<int> support(const std::set<LinearizedHomology>& hs)
{
    std::set<int> out;
    for (const auto& h : hs)
        for (const auto& [deg, dim] : h.total)
            out.insert(deg);
    return out;
}

std::string set_to_string(const std::set<int>& s)
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int x : s) {
        os << (first ? "" : ",") << x;
        first = false;
    }
    os << '}';
    return os.str();
}

std::string homology_to_string(const std::set<LinearizedHomology>& hs)
{
    std::string out = "[";
    bool first = true;
    for (const auto& h : hs) {
        out += (first ? "" : ", ") + betti_to_string(h.total);
        first = false;
    }
    return out + "]";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

Verdict compare_fingerprints(const Fingerprint& a, const Fingerprint& b, bool mixed_shift)
{
    const std::size_t n = std::min(a.per_q.size(), b.per_q.size());
    if (a.per_q.size() != b.per_q.size())
        return {true, "fingerprints cover different field lists"};

    std::vector<int> shifts{0};
    if (mixed_shift) {
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& ha : a.per_q[i].homology)
                for (const auto& hb : b.per_q[i].homology)
                    if (!ha.mixed.empty() && !hb.mixed.empty())
                        shifts.push_back(hb.mixed.begin()->first - ha.mixed.begin()->first);
        std::sort(shifts.begin(), shifts.end());
        shifts.erase(std::unique(shifts.begin(), shifts.end()), shifts.end());
    }
    auto homology_matches = [&](int s) {
        for (std::size_t i = 0; i < n; ++i)
            if (shift_mixed(a.per_q[i].homology, s) != b.per_q[i].homology)
                return false;
        return true;
    };
    const bool homology_equal = std::any_of(shifts.begin(), shifts.end(), homology_matches);

    for (std::size_t i = 0; i < n; ++i) {
        const auto& fa = a.per_q[i];
        const auto& fb = b.per_q[i];
        const std::string at = " at q=" + std::to_string(fa.q);
        if (fa.q != fb.q)
            return {true, "fingerprints cover different field lists"};
        if (fa.augvar_count != fb.augvar_count)
            return {true, "augvar count" + at + ": " + std::to_string(fa.augvar_count) + " ≠ " +
                              std::to_string(fb.augvar_count)};
        if (fa.augmentation_at_projection != fb.augmentation_at_projection)
            return {true, "augmentation at projection" + at + ": " + yes_no(fa.augmentation_at_projection) +
                              " ≠ " + yes_no(fb.augmentation_at_projection)};
        if (!homology_equal && shift_mixed(fa.homology, 0) != fb.homology) {
            auto sa = support(fa.homology);
            auto sb = support(fb.homology);
            std::string suffix = mixed_shift ? " (no uniform mixed shift matches)" : "";
            if (sa != sb)
                return {true, "Betti table degree support" + at + ": " + set_to_string(sa) + " ≠ " +
                                  set_to_string(sb) + suffix};
            return {true, "Betti table set" + at + ": " + homology_to_string(fa.homology) + " ≠ " +
                              homology_to_string(fb.homology) + suffix};
        }
    }
    if (!homology_equal)
        return {true, "Betti table sets differ under every uniform mixed shift"};
    if (a.unit_in_image_f2 && b.unit_in_image_f2 && *a.unit_in_image_f2 != *b.unit_in_image_f2)
        return {true, std::string("unit in image over F2: ") + (*a.unit_in_image_f2 ? "certificate" : "none") +
                          " ≠ " + (*b.unit_in_image_f2 ? "certificate" : "none")};
    return {false, {}};
}

Verdict compare(const Dga& a, const Dga& b, std::span<const std::uint64_t> qs, const CompareOptions& opts)
{
    return compare_fingerprints(fingerprint(a, qs, opts.fingerprint), fingerprint(b, qs, opts.fingerprint),
                                opts.mixed_shift);
}

std::string Fingerprint::to_json(int indent) const
{
    using nlohmann::ordered_json;
    auto betti_json = [](const BettiTable& t) {
        ordered_json j = ordered_json::object();
        for (const auto& [deg, dim] : t)
            j[std::to_string(deg)] = dim;
        return j;
    };
    ordered_json root;
    root["schema"] = 1;
    root["unit_in_image_f2"] = unit_in_image_f2 ? ordered_json(*unit_in_image_f2) : ordered_json(nullptr);
    ordered_json fields = ordered_json::array();
    for (const auto& e : per_q) {
        ordered_json j;
        j["q"] = e.q;
        j["augmentation_at_projection"] = e.augmentation_at_projection;
        j["augvar_count"] = e.augvar_count;
        ordered_json hs = ordered_json::array();
        for (const auto& h : e.homology) {
            ordered_json hj;
            hj["total"] = betti_json(h.total);
            hj["mixed"] = betti_json(h.mixed);
            hs.push_back(std::move(hj));
        }
        j["homology"] = std::move(hs);
        fields.push_back(std::move(j));
    }
    root["per_q"] = std::move(fields);
    return root.dump(indent);
}

}  // namespace lch
