#include <gtest/gtest.h>

#include "lch/errors.hpp"
#include "lch/fixtures.hpp"
#include "lch/grading.hpp"

namespace lch {
namespace {

TEST(Grading, MaslovOfLoop)
{
    EXPECT_EQ(maslov_of_loop(2, 2), 0);
    EXPECT_EQ(maslov_of_loop(0, 0), 0);
    EXPECT_EQ(maslov_of_loop(3, 1), 2);
}

TEST(Grading, ChordDegrees)
{
    EXPECT_EQ(chord_degree(CappingRecord::make(1, 0, 2)), 2);
    EXPECT_EQ(chord_degree(CappingRecord::make(0, 0, 2)), 1);
    for (int i = 1; i <= 5; ++i) {
        EXPECT_EQ(chord_degree(CappingRecord::make(2 * (i - 1), 0, 2)), 2 * i - 1);
        EXPECT_EQ(chord_degree(CappingRecord::make(2 * i - 1, 0, 2)), 2 * i);
    }
}

TEST(Grading, Validation)
{
    EXPECT_THROW(CappingRecord::make(-1, 0, 0), StructuralError);
    EXPECT_THROW(CappingRecord::make(0, 0, 3), StructuralError);
}

TEST(Grading, BalancedLoopsKeepTheDegree)
{
    auto r = CappingRecord::make(1, 0, 2);
    EXPECT_EQ(chord_degree(append_loop(r, 3, 3)), chord_degree(r));
    EXPECT_EQ(chord_degree(append_loop(r, 2, 0)), chord_degree(r) + 2);
}

TEST(Grading, FixtureRecordsReproduceDegrees)
{
    for (int g = 1; g <= 4; ++g) {
        auto d = fixture_Lgk(g, 0);
        auto records = capping_records_Lgk(g);
        ASSERT_EQ(records.size(), d.size());
        for (const auto& gen : d.generators())
            EXPECT_EQ(chord_degree(records.at(gen.name)), gen.degree) << gen.name;
    }
    for (int k = 1; k <= 5; ++k) {
        auto d = fixture_fiber_link(k);
        auto records = capping_records_fiber_link(k);
        ASSERT_EQ(records.size(), d.size());
        for (const auto& gen : d.generators())
            EXPECT_EQ(chord_degree(records.at(gen.name)), gen.degree) << gen.name;
    }
}

}  // namespace
}  // namespace lch
