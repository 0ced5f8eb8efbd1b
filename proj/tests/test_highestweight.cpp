#include <gtest/gtest.h>

#include "generators.hpp"
#include "gqg/highestweight.hpp"

using namespace gqg;

namespace {

const Monomial q = Monomial::q_power(6, 1);
const Monomial one = Monomial::one(6);
const Monomial m1 = Monomial::minus_one(6);

FamilySpec family(int b, int n = 0, int m = 0)
{
    FamilySpec s;
    s.b = b;
    s.N = n;
    s.m = m;
    return s;
}

BiHom rank2(const Monomial& a, const Monomial& p, const Monomial& b)
{
    return BiHom::from_products({a, b}, {{one, p}, {one, one}});
}

}  // namespace

TEST(HValue, Examples)
{
    const BiHom chi = rank2(q.pow(2), q.pow(-2), m1);
    EXPECT_EQ(h_value(chi, {one, one}, 0), 0);
    EXPECT_EQ(h_value(chi, {q.pow(6), one}, 0), 3);
    EXPECT_EQ(h_value(chi, {one, q.pow(2)}, 1), 1);
    EXPECT_EQ(h_value(chi, {q.pow(-2), one}, 0), std::nullopt);
    EXPECT_THROW(h_value(chi, {one}, 0), InvalidArgument);
}

// Oracle: scan m with the pair-number and q-number predicates.
TEST(HValue, AgreesWithScan)
{
    fuzz::Gen g(41, 12);
    for (int trial = 0; trial < 3000; ++trial) {
        const BiHom chi = g.bihom_with_finite_row(2, 0);
        const WeightVector lam = g.coin() ? g.weight_with_finite_h(chi, 0) : WeightVector{g.monomial(6), g.monomial()};
        std::optional<std::int64_t> expect;
        for (std::int64_t m = 0; m <= 200 && !expect; ++m)
            if (qnum_is_zero(m + 1, chi.diag(0)) || pairnum_is_zero(m + 1, chi.diag(0).inverse(), lam[0])) expect = m;
        EXPECT_EQ(h_value(chi, lam, 0), expect);
    }
}

TEST(ReflectWeight, InfiniteHThrows)
{
    EXPECT_THROW(reflect_weight(rank2(q.pow(2), q.pow(-2), q.pow(2)), {q, one}, 0), InfiniteH);
}

TEST(ReflectWeight, ClassicalIsWeylAction)
{
    // A2: lambda_i = q^(2 n_i); the pairing (s_1 L, s_1 alpha_j) = (L, alpha_j) keeps (n1, n2)
    const BiHom chi = rank2(q.pow(2), q.pow(-2), q.pow(2));
    const WeightVector out = reflect_weight(chi, {q.pow(6), q.pow(4)}, 0);
    EXPECT_EQ(out[0], q.pow(6));
    EXPECT_EQ(out[1], q.pow(4));
}

TEST(ReflectWeight, InvolutionAndHPreserved)
{
    fuzz::Gen g(42, 12);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = static_cast<std::size_t>(g.uniform(2, 4));
        const std::size_t i = static_cast<std::size_t>(g.uniform(0, static_cast<std::int64_t>(n) - 1));
        const BiHom chi = g.bihom_with_finite_row(n, i);
        const WeightVector lam = g.weight_with_finite_h(chi, i);
        const auto h = h_value(chi, lam, i);
        if (!h) continue;
        const BiHom rchi = reflect_bihom(chi, i);
        const WeightVector rl = reflect_weight(chi, lam, i);
        EXPECT_EQ(h_value(rchi, rl, i), h);
        EXPECT_EQ(reflect_weight(rchi, rl, i), lam);
    }
}

TEST(Chain, EmptyWord)
{
    const BiHom chi = make_family(family(9));
    const WeightVector lam{q, q.pow(3)};
    const WeightChain ch = weight_chain(chi, lam, {});
    EXPECT_EQ(ch.H, 0u);
    EXPECT_TRUE(ch.complete);
    EXPECT_EQ(ch.final_lambda, lam);
}

TEST(Chain, Family9TrivialWeight)
{
    const BiHom chi = make_family(family(9));
    const WeightChain ch = weight_chain(chi, {one, one}, builtin_word(family(9)));
    EXPECT_EQ(ch.H, 4u);
    EXPECT_TRUE(ch.complete);
}

TEST(Chain, Family3StopsAtOddStep)
{
    // N=3, m=1: r' = 1, the chain first meets vertex N of the odd object at position r' + N = 4
    const FamilySpec s = family(3, 3, 1);
    const BiHom chi = make_family(s);
    const WeightVector lam{chi.diag(0).pow(1), chi.diag(1) * q.pow(5), chi.diag(2).pow(2)};
    const WeightChain ch = weight_chain(chi, lam, builtin_word(s));
    EXPECT_EQ(ch.H, 3u);
    EXPECT_FALSE(ch.complete);
    EXPECT_FALSE(ch.steps.back().h.has_value());
}

TEST(Chain, TraceAndLazyAgree)
{
    const BiHom chi = make_family(family(10));
    const ReducedWord w = greedy_longest_word(chi);
    fuzz::Gen g(43, 6);
    for (int trial = 0; trial < 200; ++trial) {
        WeightVector lam;
        for (std::size_t j = 0; j < 4; ++j)
            lam.push_back(is_generic(chi.diag(j)) ? chi.diag(j).pow(g.uniform(0, 3)) : g.monomial(2));
        const WeightChain a = weight_chain(w, lam), b = weight_chain(chi, lam, w.letters);
        EXPECT_EQ(a.H, b.H);
        EXPECT_EQ(a.final_lambda, b.final_lambda);
    }
}

TEST(FiniteDimensional, Examples)
{
    EXPECT_TRUE(is_finite_dimensional(make_family(family(9)), {one, one}));
    FamilySpec a1;
    a1.b = 1;
    a1.cartan = cartan_type("A1");
    const BiHom chi = make_family(a1);
    for (int n = 0; n < 5; ++n) EXPECT_TRUE(is_finite_dimensional(chi, {q.pow(2 * n)}));
    EXPECT_FALSE(is_finite_dimensional(chi, {q.pow(3)}));
    EXPECT_FALSE(is_finite_dimensional(chi, {m1 * q.pow(2)}));
    EXPECT_FALSE(is_finite_dimensional(chi, {q.pow(-2)}));
}

TEST(FiniteDimensional, NeedsSPrimeAtGenericVertices)
{
    for (int b = 6; b <= 10; ++b) {
        const BiHom chi = make_family(family(b));
        for (std::size_t j = 0; j < chi.rank(); ++j) {
            if (!is_generic(chi.diag(j))) continue;
            WeightVector lam(chi.rank(), one);
            lam[j] = chi.diag(j).inverse();
            EXPECT_FALSE(is_finite_dimensional(chi, lam)) << b << " " << j;
        }
    }
}

TEST(FiniteDimensional, WordChoiceDoesNotMatter)
{
    fuzz::Gen g(44, 6);
    for (int b = 6; b <= 10; ++b) {
        const BiHom chi = make_family(family(b));
        const ReducedWord greedy = greedy_longest_word(chi);
        const ReducedWord builtin = verify_word(chi, builtin_word(family(b))).trace;
        for (int trial = 0; trial < 300; ++trial) {
            WeightVector lam;
            for (std::size_t j = 0; j < chi.rank(); ++j)
                lam.push_back(is_generic(chi.diag(j)) ? chi.diag(j).pow(g.uniform(0, 4)) : g.monomial(3));
            EXPECT_EQ(chain_is_complete(greedy, lam), chain_is_complete(builtin, lam));
        }
    }
}
