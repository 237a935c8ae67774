#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lch/fixtures.hpp"
#include "lch/format.hpp"

namespace lch {
namespace {

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream f(p);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

const std::filesystem::path kFixtures = LCH_FIXTURE_DIR;

std::vector<Diagnostic> parse_errors(const std::string& text)
{
    try {
        parse_dga(text);
    } catch (const ParseError& e) {
        return e.diagnostics();
    }
    return {};
}

std::vector<Diagnostic> verify_errors(const std::string& text)
{
    try {
        parse_dga(text);
    } catch (const VerificationError& e) {
        return e.diagnostics();
    }
    return {};
}

TEST(Format, GoldenFilesMatchFixtures)
{
    EXPECT_EQ(parse_dga(slurp(kFixtures / "lgk-1-0.dga")), fixture_Lgk(1, 0));
    EXPECT_EQ(parse_dga(slurp(kFixtures / "lgk-1-1.dga")), fixture_Lgk(1, 1));
    EXPECT_EQ(parse_dga(slurp(kFixtures / "lgk-2-0.dga")), fixture_Lgk(2, 0));
    EXPECT_EQ(parse_dga(slurp(kFixtures / "lgk-2-1.dga")), fixture_Lgk(2, 1));
    EXPECT_EQ(parse_dga(slurp(kFixtures / "fiberlink-2.dga")), fixture_fiber_link(2));
    EXPECT_EQ(parse_dga(slurp(kFixtures / "knotsphere.dga")), fixture_knot_sphere_link());
    EXPECT_EQ(parse_dga(slurp(kFixtures / "stdsphere.dga")), fixture_std_sphere());
    EXPECT_EQ(slurp(kFixtures / "lgk-2-1.dga"), render_dga(fixture_Lgk(2, 1)));
}

TEST(Format, RoundTripIsIdempotent)
{
    for (const auto& entry : std::filesystem::directory_iterator(kFixtures)) {
        const auto once = render_dga(parse_dga(slurp(entry.path())));
        EXPECT_EQ(once, render_dga(parse_dga(once))) << entry.path();
    }
}

TEST(Format, RoundTripOverFields)
{
    for (unsigned ch : {2u, 3u, 5u}) {
        auto d = fixture_Lgk(3, 2, ch);
        EXPECT_EQ(parse_dga(render_dga(d)), d);
    }
}

TEST(Format, ParsesHandleDifferential)
{
    auto d = parse_dga("ring Z\nh1 rank 2 names mu1 lambda1\ngen c1 deg 1\nd c1 = 1 + lambda1 + mu1*lambda1\n");
    const auto& p = d.differential("c1");
    ASSERT_EQ(p.terms().size(), 1u);
    EXPECT_EQ(p.terms().begin()->first.size(), 0u);
    EXPECT_EQ(p.terms().begin()->second.terms().size(), 3u);
}

TEST(Format, TermSyntax)
{
    auto d = parse_dga("ring F5\nh1 rank 1 names t\n"
                       "gen x deg 0\ngen y deg 1\ngen z deg 1 mixed\n"
                       "d x = 0\nd y = 0\n"
                       "# comment line\n"
                       "d z = -2*t^-1*x*y + 3*y*x   # trailing\n",
                       ParseOptions{false});
    EXPECT_EQ(d.differential("z").to_string(), "3*t^-1*x*y + 3*y*x");
    EXPECT_TRUE(d.generators()[2].is_mixed());
}

TEST(Format, DegreeDiagnostic)
{
    auto diags = verify_errors("ring Z\ngen c deg 2\nd c = c\n");
    ASSERT_EQ(diags.size(), 1u);
    EXPECT_EQ(diags[0].line, 3u);
    EXPECT_NE(diags[0].message.find("degree 2, expected 1"), std::string::npos);
}

TEST(Format, DSquaredDiagnostic)
{
    auto diags = verify_errors("ring Z\nh1 rank 1 names l\ngen c deg 2\ngen c1 deg 1\nd c = c1\nd c1 = 1 + l\n");
    ASSERT_EQ(diags.size(), 1u);
    EXPECT_EQ(diags[0].line, 5u);
    EXPECT_NE(diags[0].message.find("1 + l"), std::string::npos);
}

TEST(Format, NoVerifyAcceptsInvalid)
{
    EXPECT_NO_THROW(parse_dga("ring Z\ngen c deg 2\nd c = c\n", ParseOptions{false}));
}

TEST(Format, ParseDiagnostics)
{
    auto unknown = parse_errors("ring Z\ngen c deg 2\nd c = q\n");
    ASSERT_FALSE(unknown.empty());
    EXPECT_EQ(unknown[0].line, 3u);
    EXPECT_EQ(unknown[0].column, 7u);

    auto dup = parse_errors("ring Z\ngen c deg 2\nd c = 0\nd c = 0\n");
    ASSERT_FALSE(dup.empty());
    EXPECT_EQ(dup[0].line, 4u);

    auto missing = parse_errors("ring Z\ngen c deg 2\n");
    ASSERT_FALSE(missing.empty());
    EXPECT_NE(missing[0].message.find("missing differential"), std::string::npos);

    EXPECT_FALSE(parse_errors("gen c deg 2\nd c = 0\n").empty());
    EXPECT_FALSE(parse_errors("ring F4\n").empty());
    EXPECT_FALSE(parse_errors("ring Z\nbogus\n").empty());
    EXPECT_FALSE(parse_errors("ring Z\nh1 rank 2 names a\n").empty());
}

TEST(Format, ReportsEveryParseError)
{
    auto diags = parse_errors("ring Z\ngen c deg x\ngen 9 deg 1\n");
    EXPECT_GE(diags.size(), 2u);
}

TEST(Format, ParsePoly)
{
    auto d = fixture_Lgk(1, 0);
    auto p = parse_poly("c1*c + 2*lambda1*c*c1", d.algebra());
    EXPECT_EQ(p.to_string(), "2*lambda1*c*c1 + c1*c");
}

}  // namespace
}  // namespace lch
