#include "lch/fixtures.hpp"

#include "lch/errors.hpp"

namespace lch {

Dga fixture_Lgk(int g, int k, unsigned characteristic, std::span<const HandleSigns> signs)
{
    if (g < 1 || k < 0 || k > g)
        throw StructuralError("L_{g,k} needs g >= 1 and 0 <= k <= g (got g=" + std::to_string(g) +
                              ", k=" + std::to_string(k) + ")");
    if (!signs.empty() && signs.size() != static_cast<std::size_t>(g))
        throw StructuralError("expected one sign pair per handle");

    std::vector<std::string> names;
    for (int i = 1; i <= g; ++i) {
        names.push_back("mu" + std::to_string(i));
        names.push_back("lambda" + std::to_string(i));
    }
    RingSpec ring = RingSpec::from_characteristic(characteristic, std::move(names));

    std::vector<Generator> gens{{"c", 2}};
    for (int i = 1; i <= g; ++i)
        gens.push_back({"c" + std::to_string(i), 1});
    auto algebra = Algebra::make(ring, std::move(gens));

    std::vector<NcPoly> diff{NcPoly(algebra)};
    for (int i = 0; i < g; ++i) {
        const HandleSigns s = signs.empty() ? HandleSigns{} : signs[static_cast<std::size_t>(i)];
        auto mu = static_cast<std::size_t>(2 * i);
        auto lambda = mu + 1;
        Exponent e_lambda(ring.h1_rank(), 0);
        e_lambda[lambda] = 1;
        Exponent e_mu_lambda = e_lambda;
        e_mu_lambda[mu] = 1;
        GroupRingElem dc = GroupRingElem::one(ring) + GroupRingElem::monomial(ring, e_lambda, s.lambda);
        if (i < k)
            dc += GroupRingElem::monomial(ring, e_mu_lambda, s.mu_lambda);
        diff.push_back(NcPoly::scalar(algebra, dc));
    }
    return Dga(std::move(algebra), std::move(diff));
}

Dga fixture_fiber_link(int k, unsigned characteristic)
{
    if (k < 1)
        throw StructuralError("fiber link needs k >= 1");
    std::vector<Generator> gens;
    for (int i = 1; i <= k; ++i) {
        gens.push_back({"b" + std::to_string(i), 2 * i - 1, ChordClass::Mixed});
        gens.push_back({"a" + std::to_string(i), 2 * i, ChordClass::Mixed});
    }
    return Dga::with_zero_differential(Algebra::make(RingSpec::from_characteristic(characteristic), std::move(gens)));
}

Dga fixture_knot_sphere_link(unsigned characteristic)
{
    std::vector<Generator> gens{{"c", 2}, {"a", 2, ChordClass::Mixed}, {"b", 1, ChordClass::Mixed}};
    return Dga::with_zero_differential(Algebra::make(RingSpec::from_characteristic(characteristic), std::move(gens)));
}

Dga fixture_std_sphere(unsigned characteristic)
{
    std::vector<Generator> gens{{"c", 2}};
    return Dga::with_zero_differential(Algebra::make(RingSpec::from_characteristic(characteristic), std::move(gens)));
}

std::map<std::string, CappingRecord> capping_records_Lgk(int g)
{
    std::map<std::string, CappingRecord> out;
    // Maximum-type chord whose capping path crosses one cusp edge downward.
    out["c"] = CappingRecord::make(1, 0, 2);
    // Saddle chord of each handle, capping path crossing one cusp edge downward.
    for (int i = 1; i <= g; ++i)
        out["c" + std::to_string(i)] = CappingRecord::make(1, 0, 1);
    return out;
}

std::map<std::string, CappingRecord> capping_records_fiber_link(int k)
{
    std::map<std::string, CappingRecord> out;
    for (int i = 1; i <= k; ++i) {
        out["b" + std::to_string(i)] = CappingRecord::make(2 * (i - 1), 0, 2);
        out["a" + std::to_string(i)] = CappingRecord::make(2 * i - 1, 0, 2);
    }
    return out;
}

}  // namespace lch
