#include <gtest/gtest.h>

#include "generators.hpp"
#include "gqg/bihom.hpp"

using namespace gqg;

namespace {

FamilySpec family(int b, int n = 0, int m = 0)
{
    FamilySpec s;
    s.b = b;
    s.N = n;
    s.m = m;
    return s;
}

FamilySpec type1(const std::string& label)
{
    FamilySpec s;
    s.b = 1;
    s.cartan = cartan_type(label);
    return s;
}

std::vector<FamilySpec> all_instances()
{
    std::vector<FamilySpec> out;
    for (auto l : {"A1", "A3", "B3", "C3", "D4", "E6", "F4", "G2"}) out.push_back(type1(l));
    for (int n = 2; n <= 4; ++n)
        for (int m = 0; 2 * m <= n - 1; ++m) out.push_back(family(2, n, m));
    for (int n = 2; n <= 3; ++n)
        for (int m = 1; m < n; ++m) out.push_back(family(3, n, m));
    out.push_back(family(4, 3));
    out.push_back(family(4, 4));
    for (int m = 2; m <= 3; ++m) out.push_back(family(5, 4, m));
    for (int b = 6; b <= 10; ++b) out.push_back(family(b));
    return out;
}

const Monomial q = Monomial::q_power(6, 1);
const Monomial m1 = Monomial::minus_one(6);

}  // namespace

// ===== super form

TEST(Eta, Examples)
{
    EXPECT_EQ(eta(1, 2, {1, 0}, {1, 0}), 1);
    EXPECT_EQ(eta(1, 2, {0, 1}, {0, 1}), -1);
    EXPECT_EQ(eta(2, 3, {1, -1, 0}, {0, 1, -1}), -1);
    EXPECT_THROW(eta(1, 2, {1}, {1, 0}), InvalidArgument);
}

TEST(Parity, Examples)
{
    EXPECT_EQ(parity(1, 2, {1, -1}), 1);
    EXPECT_EQ(parity(2, 2, {1, -1}), 0);
    EXPECT_EQ(parity(1, 2, {1, 0}), 0);
}

// ===== families

TEST(MakeFamily, A2)
{
    const BiHom chi = make_family(type1("A2"));
    EXPECT_EQ(chi.diag(0), q.pow(2));
    EXPECT_EQ(chi.diag(1), q.pow(2));
    EXPECT_EQ(chi.edge(0, 1), q.pow(-2));
}

TEST(MakeFamily, SuperA1Rank2)
{
    // eta_{1|2}: alpha_1 = e1 - e2 is isotropic, alpha_2 = e2 - e3 has eta = -2
    const BiHom chi = make_family(family(2, 2, 0));
    EXPECT_EQ(chi.diag(0), m1);
    EXPECT_EQ(chi.diag(1), q.pow(-2));
    EXPECT_EQ(chi.edge(0, 1), q.pow(2));
}

TEST(MakeFamily, Family9)
{
    const BiHom chi = make_family(family(9));
    EXPECT_EQ(chi.diag(0), Monomial::zeta_power(6, 2));
    EXPECT_EQ(chi.diag(1), q);
    EXPECT_EQ(chi.edge(0, 1), q.inverse());
}

TEST(MakeFamily, Family7IsTheWorkedExample)
{
    const BiHom chi = make_family(family(7));
    EXPECT_EQ(chi.key().diagonal, (std::vector<Monomial>{m1, q.pow(2), q.pow(6)}));
    EXPECT_EQ(chi.key().products, (std::vector<Monomial>{q.pow(-2), Monomial::one(6), q.pow(-6)}));
}

TEST(MakeFamily, GaugeIsUpperTriangular)
{
    for (const auto& s : all_instances()) {
        const BiHom chi = make_family(s);
        for (std::size_t i = 0; i < chi.rank(); ++i)
            for (std::size_t j = 0; j < i; ++j) EXPECT_TRUE(chi(i, j).is_one());
    }
}

TEST(MakeFamily, AllIrreducible)
{
    for (const auto& s : all_instances()) EXPECT_TRUE(is_irreducible(make_family(s))) << s.b;
}

TEST(MakeFamily, DiagonalTorsionPattern)
{
    for (const auto& s : all_instances()) {
        const BiHom chi = make_family(s);
        bool any_torsion = false;
        for (std::size_t i = 0; i < chi.rank(); ++i) any_torsion = any_torsion || !is_generic(chi.diag(i));
        EXPECT_EQ(any_torsion, s.b != 1) << s.b;
    }
}

TEST(MakeFamily, ParameterChecks)
{
    EXPECT_THROW(make_family(family(2, 3, 2)), InvalidArgument);
    EXPECT_THROW(make_family(family(3, 3, 0)), InvalidArgument);
    EXPECT_THROW(make_family(family(4, 2)), InvalidArgument);
    EXPECT_THROW(make_family(family(5, 4, 1)), InvalidArgument);
    EXPECT_THROW(make_family(family(6, 3)), InvalidArgument);
    EXPECT_THROW(make_family(family(11)), InvalidArgument);
    FamilySpec odd = family(7);
    odd.torsion_order = 3;
    EXPECT_THROW(make_family(odd), InvalidArgument);
    FamilySpec nine = family(9);
    nine.torsion_order = 4;
    EXPECT_THROW(make_family(nine), InvalidArgument);
    FamilySpec eight = family(8);
    eight.params.r = q.inverse();
    EXPECT_THROW(make_family(eight), InvalidArgument);
    eight.params.r = Monomial::one(6);
    EXPECT_THROW(make_family(eight), InvalidArgument);
    FamilySpec badq = family(6);
    badq.params.q = m1;
    EXPECT_THROW(make_family(badq), InvalidArgument);
}

TEST(MakeFamily, Specialization)
{
    FamilySpec s = family(8);
    s.params.r = Monomial(6, 2, -1, 0);
    const BiHom chi = make_family(s);
    EXPECT_EQ(chi.diag(2), Monomial(6, 2, -1, 0));
    EXPECT_FALSE(chi.diag(2).r_exp() != 0);
}

TEST(CartanTypes, Symmetrizable)
{
    for (auto l : {"A1", "A5", "B2", "B4", "C3", "D5", "E6", "E7", "E8", "F4", "G2"})
        EXPECT_NO_THROW(validate_cartan(cartan_type(l))) << l;
    EXPECT_THROW(cartan_type("H3"), InvalidArgument);
    EXPECT_THROW(cartan_type("D3"), InvalidArgument);
}

// ===== diagrams

TEST(Diagram, RankOne)
{
    const auto d = dynkin_diagram(make_family(type1("A1")));
    EXPECT_EQ(d.vertices.size(), 1u);
    EXPECT_TRUE(d.edges.empty());
}

TEST(Diagram, WorkedExamplePath)
{
    const auto d = dynkin_diagram(make_family(family(7)));
    ASSERT_EQ(d.edges.size(), 2u);
    EXPECT_EQ(d.edges[0].label, q.pow(-2));
    EXPECT_EQ(d.edges[1].label, q.pow(-6));
    EXPECT_EQ(to_ascii(d), "(α1 : z^3) --[q^-2]-- (α2 : q^2) --[q^-6]-- (α3 : q^6)\n");
}

TEST(Diagram, A2SingleEdge)
{
    const auto d = dynkin_diagram(make_family(type1("A2")));
    ASSERT_EQ(d.edges.size(), 1u);
    EXPECT_EQ(d.edges[0].label, q.pow(-2));
}

TEST(Diagram, DotLabels)
{
    const std::string dot = to_dot(dynkin_diagram(make_family(family(9))));
    EXPECT_NE(dot.find("label=\"α1 : z^2\""), std::string::npos);
    EXPECT_NE(dot.find("a1 -- a2 [label=\"q^-1\"]"), std::string::npos);
}

TEST(Diagram, BranchedAscii)
{
    const std::string s = to_ascii(dynkin_diagram(make_family(type1("D4"))));
    EXPECT_NE(s.find("α2 --[q^-2]-- α4"), std::string::npos);
}

TEST(Irreducible, Examples)
{
    const Monomial one = Monomial::one(6);
    EXPECT_FALSE(is_irreducible(BiHom::from_products({q, q}, {{one, one}, {one, one}})));
    EXPECT_TRUE(is_irreducible(BiHom::from_products({q}, {{one}})));
}

// ===== equivalence and permutations

TEST(Equiv, Examples)
{
    const BiHom chi = make_family(family(10));
    EXPECT_TRUE(equivalent(chi, chi));
    auto flipped = chi.matrix();
    for (std::size_t i = 0; i < chi.rank(); ++i)
        for (std::size_t j = 0; j < chi.rank(); ++j) flipped[i][j] = chi(j, i);
    EXPECT_TRUE(equivalent(chi, BiHom(6, flipped)));
    EXPECT_FALSE(equivalent(make_family(type1("A2")), make_family(family(2, 2, 0))));
}

TEST(Equiv, RegaugeKeepsKey)
{
    fuzz::Gen g(3, 6);
    for (const auto& s : all_instances()) {
        const BiHom chi = make_family(s);
        const BiHom other = regauge(chi, g.random_gauge(chi.rank()));
        EXPECT_TRUE(equivalent(chi, other));
    }
}

TEST(Permute, GroupAction)
{
    const BiHom chi = make_family(family(10));
    EXPECT_EQ(permute(chi, {0, 1, 2, 3}), chi);
    const std::vector<std::size_t> s{2, 0, 3, 1}, inv{1, 3, 0, 2};
    EXPECT_EQ(permute(permute(chi, s), inv), chi);
    const BiHom nine = make_family(family(9));
    const BiHom swapped = permute(nine, {1, 0});
    EXPECT_EQ(swapped.diag(0), nine.diag(1));
    EXPECT_EQ(swapped.diag(1), nine.diag(0));
}

TEST(Permute, CompatibleWithEquiv)
{
    fuzz::Gen g(4, 6);
    const BiHom chi = make_family(family(6));
    const BiHom other = regauge(chi, g.random_gauge(4));
    const std::vector<std::size_t> s{3, 1, 0, 2};
    EXPECT_TRUE(equivalent(permute(chi, s), permute(other, s)));
}

TEST(BiHom, BiMultiplicative)
{
    fuzz::Gen g(9, 12);
    for (int trial = 0; trial < 200; ++trial) {
        const BiHom chi = g.bihom_with_finite_row(3, 0);
        IntVector a(3), b(3), c(3), bc(3);
        for (std::size_t i = 0; i < 3; ++i) {
            a[i] = g.uniform(-3, 3);
            b[i] = g.uniform(-3, 3);
            c[i] = g.uniform(-3, 3);
            bc[i] = b[i] + c[i];
        }
        EXPECT_EQ(chi(a, bc), chi(a, b) * chi(a, c));
        EXPECT_EQ(chi(bc, a), chi(b, a) * chi(c, a));
    }
}
