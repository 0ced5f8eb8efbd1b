#include <gtest/gtest.h>

#include "checks.hpp"

using namespace gqg;

namespace {

std::string first(const checks::Outcome& o) { return o.failures.empty() ? std::string() : o.failures.front(); }

FamilySpec family(int b, int n = 0, int m = 0)
{
    FamilySpec s;
    s.b = b;
    s.N = n;
    s.m = m;
    return s;
}

}  // namespace

TEST(Properties, IdentitySuite)
{
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const auto o = checks::identity_suite(seed, 300);
        EXPECT_TRUE(o.ok()) << first(o);
    }
}

TEST(Properties, RankTwoRootLaw)
{
    const auto o = checks::rank2_root_law(17, 150);
    EXPECT_TRUE(o.ok()) << first(o);
    EXPECT_EQ(o.checked, 150u);
}

TEST(Properties, RegaugeInvariance)
{
    for (const auto& s : {family(2, 3, 1), family(5, 4, 2), family(8), family(9)}) {
        const auto o = checks::regauge_invariance(s, 5, 2);
        EXPECT_TRUE(o.ok()) << s.b << ": " << first(o);
    }
}

TEST(Properties, MuRecursion)
{
    for (auto [n, m] : {std::pair{3, 1}, {3, 2}, {4, 1}, {4, 2}}) {
        const auto o = checks::mu_recursion(n, m, 3);
        EXPECT_TRUE(o.ok()) << n << "," << m << ": " << first(o);
    }
}
