#include <gtest/gtest.h>

#include "lch/errors.hpp"
#include "lch/groupring.hpp"
#include "../support/random.hpp"

namespace lch {
namespace {

const std::vector<std::string> kNames{"mu", "lambda"};

struct Ring : ::testing::Test {
    RingSpec z = RingSpec::integers(kNames);
    RingSpec f2 = RingSpec::finite_field(2, kNames);
    GroupRingElem mu(const RingSpec& r) const { return GroupRingElem::variable(r, 0); }
    GroupRingElem lam(const RingSpec& r, int p = 1) const { return GroupRingElem::variable(r, 1, p); }
    GroupRingElem one(const RingSpec& r) const { return GroupRingElem::one(r); }
};

TEST_F(Ring, AdditionCollectsTerms)
{
    EXPECT_EQ((one(z) + lam(z)) + lam(z), one(z) + GroupRingElem::scalar(z, 2) * lam(z));
    EXPECT_EQ(((one(z) + lam(z)) + lam(z)).to_string(), "1 + 2*lambda");
    EXPECT_TRUE(((one(f2) + lam(f2)) + (one(f2) + lam(f2))).is_zero());
    EXPECT_EQ(mu(z) * lam(z) + GroupRingElem(z), mu(z) * lam(z));
}

TEST_F(Ring, Multiplication)
{
    EXPECT_EQ(lam(z) * lam(z, -1), one(z));
    EXPECT_EQ((one(z) + lam(z)) * mu(z), mu(z) + lam(z) * mu(z));
    EXPECT_EQ((one(f2) + lam(f2)) * (one(f2) + lam(f2)), one(f2) + lam(f2, 2));
    EXPECT_EQ((one(z) + lam(z)) * (one(z) + lam(z)), one(z) + GroupRingElem::scalar(z, 2) * lam(z) + lam(z, 2));
}

TEST_F(Ring, Units)
{
    EXPECT_TRUE(lam(z).is_unit());
    EXPECT_TRUE((GroupRingElem::scalar(z, -1) * mu(z)).is_unit());
    EXPECT_FALSE(GroupRingElem::scalar(z, 2).is_unit());
    EXPECT_TRUE(GroupRingElem::scalar(RingSpec::finite_field(3, kNames), 2).is_unit());
    EXPECT_FALSE((one(z) + lam(z)).is_unit());
    EXPECT_EQ(lam(z).unit_inverse(), lam(z, -1));
    EXPECT_THROW((one(z) + lam(z)).unit_inverse(), StructuralError);
}

TEST_F(Ring, Evaluation)
{
    auto f3 = RingSpec::finite_field(3, {"lambda"});
    auto l = GroupRingElem::variable(f3, 0);
    EXPECT_EQ(gr_eval(GroupRingElem::one(f3) + l, RhoPoint::make(3, {2})), 0u);
    EXPECT_EQ(gr_eval(one(z) + lam(z) + lam(z) * mu(z), RhoPoint::make(3, {1, 1})), 0u);
    EXPECT_EQ(gr_eval(GroupRingElem(z), RhoPoint::make(5, {3, 4})), 0u);
    EXPECT_EQ(gr_eval(lam(z, -1), RhoPoint::make(5, {1, 2})), 3u);
}

TEST_F(Ring, InvalidPoints)
{
    EXPECT_THROW(RhoPoint::make(3, {0, 1}), InvalidPointError);
    EXPECT_THROW(RhoPoint::make(3, {3, 1}), InvalidPointError);
    EXPECT_THROW(gr_eval(lam(z), RhoPoint::make(3, {1})), InvalidPointError);
    EXPECT_THROW(gr_eval(lam(f2), RhoPoint::make(3, {1, 1})), StructuralError);
}

TEST_F(Ring, MixingRingsFails) { EXPECT_THROW(lam(z) + lam(f2), StructuralError); }

TEST_F(Ring, ChangeRingAndProjection)
{
    auto x = GroupRingElem::scalar(z, 3) + lam(z) * GroupRingElem::scalar(z, -1);
    EXPECT_EQ(x.change_ring(f2), one(f2) + lam(f2));
    EXPECT_EQ((one(z) + lam(z) + mu(z) * lam(z)).project_h1(), GroupRingElem::scalar(z.without_h1(), 3));
}

TEST_F(Ring, Rendering)
{
    EXPECT_EQ((one(z) + lam(z) + mu(z) * lam(z)).to_string(), "1 + lambda + mu*lambda");
    EXPECT_EQ(GroupRingElem(z).to_string(), "0");
    EXPECT_EQ((GroupRingElem::scalar(z, -2) * lam(z, -3)).to_string(), "-2*lambda^-3");
}

TEST(RingSpec, Validation)
{
    EXPECT_THROW(RingSpec::integers({"a", "a"}), StructuralError);
    EXPECT_THROW(RingSpec::integers({"1x"}), StructuralError);
    EXPECT_THROW(RingSpec::from_characteristic(4), StructuralError);
    EXPECT_EQ(RingSpec::from_characteristic(0).coefficient_name(), "Z");
    EXPECT_EQ(RingSpec::from_characteristic(3).coefficient_name(), "F3");
}

class RingAxioms : public ::testing::TestWithParam<unsigned> {};

TEST_P(RingAxioms, HoldOnRandomTriples)
{
    auto ring = RingSpec::from_characteristic(GetParam(), {"x", "y"});
    testing::Rng rng(1000 + GetParam());
    const GroupRingElem zero(ring), one = GroupRingElem::one(ring);
    for (int i = 0; i < 1000; ++i) {
        auto a = testing::random_gr(ring, rng), b = testing::random_gr(ring, rng), c = testing::random_gr(ring, rng);
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a + zero, a);
        ASSERT_EQ(a * one, a);
        ASSERT_TRUE((a - a).is_zero());
        ASSERT_EQ(-(-a), a);
    }
}

TEST_P(RingAxioms, EvaluationIsAHomomorphism)
{
    const unsigned p = GetParam() == 0 ? 5 : GetParam();
    auto ring = RingSpec::from_characteristic(GetParam(), {"x", "y"});
    auto field = FiniteField::get(p);
    testing::Rng rng(2000 + GetParam());
    for (int i = 0; i < 1000; ++i) {
        auto a = testing::random_gr(ring, rng), b = testing::random_gr(ring, rng);
        auto rho = RhoPoint::make(p, {static_cast<FieldElem>(testing::uniform(rng, 1, static_cast<int>(p) - 1)),
                                      static_cast<FieldElem>(testing::uniform(rng, 1, static_cast<int>(p) - 1))});
        ASSERT_EQ(gr_eval(a + b, rho), field->add(gr_eval(a, rho), gr_eval(b, rho)));
        ASSERT_EQ(gr_eval(a * b, rho), field->mul(gr_eval(a, rho), gr_eval(b, rho)));
    }
}

INSTANTIATE_TEST_SUITE_P(Characteristics, RingAxioms, ::testing::Values(0u, 2u, 3u, 5u));

}  // namespace
}  // namespace lch
