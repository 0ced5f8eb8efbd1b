#pragma once

// Closed-form membership for the finite-dimensional irreducible highest
// weight modules of the families 1..10, and a grid check of that closed form
// against the weight chain.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "gqg/bihom.hpp"
#include "gqg/errors.hpp"
#include "gqg/groupoid.hpp"
#include "gqg/highestweight.hpp"
#include "gqg/scalar.hpp"

namespace gqg {

// lambda_j = q_jj^(n_j), n_j >= 0, at every vertex j with q_jj of infinite order.
struct SPrimeReport {
    bool member = false;
    std::vector<std::size_t> generic_vertices;
    std::vector<std::optional<std::int64_t>> witnesses;  // n_j per vertex, nullopt off the generic set
};

inline SPrimeReport in_S_prime(const BiHom& chi, const WeightVector& lambda)
{
    check_weight(chi, lambda);
    SPrimeReport r;
    r.member = true;
    r.witnesses.assign(chi.rank(), std::nullopt);
    for (std::size_t j = 0; j < chi.rank(); ++j) {
        if (!is_generic(chi.diag(j))) continue;
        r.generic_vertices.push_back(j);
        r.witnesses[j] = discrete_log(chi.diag(j), lambda[j]);
        if (!r.witnesses[j]) r.member = false;
    }
    return r;
}

// g(lambda) = prod lambda_i^(exponents_i); S''' = { g(lambda) = v^z, z >= n }.
struct ClassificationTable {
    IntVector exponents;
    Monomial v;
    std::int64_t n = 0;

    Monomial g(const WeightVector& lambda) const
    {
        Monomial acc = Monomial::one(v.torsion_order());
        for (std::size_t i = 0; i < lambda.size(); ++i)
            if (exponents[i] != 0) acc *= lambda[i].pow(exponents[i]);
        return acc;
    }
};

enum class Branch { SPrime, SDoublePrime, STriplePrime, None };

inline std::string to_string(Branch b)
{
    switch (b) {
    case Branch::SPrime: return "S'";
    case Branch::SDoublePrime: return "S''";
    case Branch::STriplePrime: return "S'''";
    default: return "none";
    }
}

struct MembershipReport {
    bool member = false;
    Branch branch = Branch::None;
    SPrimeReport sprime;
    std::optional<Monomial> g;
    std::optional<std::int64_t> z;  // g = v^z
    bool overlap = false;           // matched S'' and S''' at once; never expected
};

class FamilyClassifier {
public:
    explicit FamilyClassifier(const FamilySpec& spec)
        : spec_(validated(spec)), chi_(make_family(spec_)), k_(spec_.torsion_order), q_(param_q(spec_))
    {
        s_prime_only_ = spec_.b == 1 || spec_.b == 2 || spec_.b == 4 ||
                        (spec_.b == 8 && finite_order(q_ * param_r(spec_)).has_value());
        if (!s_prime_only_) table_ = make_table();
    }

    const FamilySpec& spec() const { return spec_; }
    const BiHom& bihom() const { return chi_; }
    bool s_prime_only() const { return s_prime_only_; }
    const std::optional<ClassificationTable>& table() const { return table_; }

    MembershipReport classify(const WeightVector& lambda) const
    {
        MembershipReport rep;
        rep.sprime = in_S_prime(chi_, lambda);
        if (s_prime_only_) {
            rep.member = rep.sprime.member;
            rep.branch = rep.member ? Branch::SPrime : Branch::None;
            return rep;
        }
        if (!rep.sprime.member) return rep;
        rep.g = table_->g(lambda);
        rep.z = exponent_solve(table_->v, *rep.g);
        const bool triple = rep.z && *rep.z >= table_->n;
        const bool dbl = in_double_prime(lambda, rep.z);
        rep.overlap = dbl && triple;
        rep.member = dbl || triple;
        rep.branch = dbl ? Branch::SDoublePrime : triple ? Branch::STriplePrime : Branch::None;
        return rep;
    }

private:
    Monomial qp(std::int64_t e) const { return q_.pow(e); }
    Monomial minus_one() const { return Monomial::minus_one(k_); }

    ClassificationTable make_table() const
    {
        const std::size_t n = static_cast<std::size_t>(spec_.N);
        const int N = spec_.N, m = spec_.m;
        ClassificationTable t{IntVector(n, 0), Monomial::one(k_), 0};
        auto at = [&](int one_based) -> std::int64_t& { return t.exponents[static_cast<std::size_t>(one_based - 1)]; };
        switch (spec_.b) {
        case 3:
            for (int y = N - m; y <= N; ++y) at(y) = 1;
            t.v = minus_one() * qp(-1);
            t.n = 2 * m;
            break;
        case 5:
            for (int y = N - m; y <= N - 2; ++y) at(y) = 2;
            at(N - 1) = 1;
            at(N) = 1;
            t.v = qp(-4);
            t.n = m;
            break;
        case 6:
            t.exponents = {2, 3, 2, 1};
            t.v = qp(-6);
            t.n = 4;
            break;
        case 7:
            t.exponents = {1, 2, 1};
            t.v = minus_one() * qp(-2);
            t.n = 6;
            break;
        case 8:
            t.exponents = {1, 2, 1};
            t.v = (q_ * param_r(spec_)).inverse();
            t.n = 2;
            break;
        case 9:
            t.exponents = {1, 1};
            t.v = param_zeta(spec_) * qp(-1);
            t.n = 2;
            break;
        case 10:
            t.exponents = {1, 2, 3, 1};
            t.v = minus_one() * qp(-1);
            t.n = 3;
            break;
        default: throw InvalidArgument("no membership table for family " + std::to_string(spec_.b));
        }
        return t;
    }

    bool in_double_prime(const WeightVector& l, const std::optional<std::int64_t>& z) const
    {
        const int N = spec_.N, m = spec_.m;
        auto lam = [&](int one_based) -> const Monomial& { return l[static_cast<std::size_t>(one_based - 1)]; };
        auto ones = [&](int from, int to) {
            for (int i = from; i <= to; ++i)
                if (!lam(i).is_one()) return false;
            return true;
        };
        const bool all_one = ones(1, N);
        auto z_is = [&](std::int64_t v) { return z && *z == v; };
        switch (spec_.b) {
        case 3:
            for (int x = 0; x < m; ++x)
                if (z_is(2 * x) && ones(N - m + x + 1, N)) return true;
            return false;
        case 5: {
            Monomial gp = Monomial::one(k_);
            for (int i = N - m; i <= N - 1; ++i) gp *= lam(i);
            for (int x = 0; x <= m - 2; ++x)
                if (z_is(x) && gp == qp(-2 * x) && ones(N - m + x + 1, N)) return true;
            return z_is(m - 1) && gp == qp(-2 * (m - 1)) && lam(N - 1) == lam(N);
        }
        case 6:
            return all_one || (z_is(2) && ones(2, 2) && ones(4, 4) && lam(1) * lam(3) == qp(-6)) ||
                   (z_is(3) && lam(2) == qp(2) * lam(4) && lam(1) * lam(3) * lam(4).pow(2) == qp(-12));
        case 7: return all_one || (z_is(4) && ones(2, 2) && lam(1) * lam(3) == qp(-8));
        case 8: return all_one || (z_is(1) && (ones(2, 2) || lam(2) == (q_ * lam(1)).inverse()));
        case 9: return all_one;
        case 10:
            return all_one || (ones(2, 3) && lam(1) * lam(4) == minus_one() * qp(-1)) ||
                   (z_is(2) && (ones(3, 3) || lam(3) == (q_ * lam(2)).inverse()));
        default: return false;
        }
    }

    FamilySpec spec_;
    BiHom chi_;
    std::int64_t k_;
    Monomial q_;
    bool s_prime_only_ = false;
    std::optional<ClassificationTable> table_;
};

inline MembershipReport classify(const FamilySpec& spec, const WeightVector& lambda)
{
    return FamilyClassifier(spec).classify(lambda);
}

// chi must be equivalent to the family's bicharacter; membership only sees
// the diagonal, which the equivalence keeps.
inline MembershipReport classify(const FamilySpec& spec, const BiHom& chi, const WeightVector& lambda)
{
    FamilyClassifier c(spec);
    if (!equivalent(chi, c.bihom())) throw InvalidArgument("bicharacter is not equivalent to the family's");
    return c.classify(lambda);
}

// ===== grid check =====

struct TheoremMismatch {
    WeightVector lambda;
    MembershipReport classified;
    bool finite_dimensional = false;
    std::size_t H = 0;
};

struct TheoremReport {
    std::size_t total = 0;
    std::size_t members = 0;
    std::size_t overlaps = 0;
    std::size_t word_disagreements = 0;  // built-in word verdict != greedy word verdict
    std::vector<TheoremMismatch> mismatches;
    bool ok() const { return mismatches.empty() && overlaps == 0 && word_disagreements == 0; }
};

struct VerifyOptions {
    std::int64_t bound = 5;
    unsigned jobs = 1;
    std::optional<std::size_t> max_len;
};

namespace detail {

inline void insert_perturbed(std::set<Monomial>& out, const Monomial& c, const std::vector<Monomial>& perturb)
{
    for (const auto& p : perturb) out.insert(c * p);
}

}  // namespace detail

// Sample weights: n_j in [-1, bound] at generic vertices; at the first torsion
// vertex, the values that meet the table's equations for small z plus a base
// set, each times {1, -1, q, q^-1}; other torsion vertices take a small set.
inline std::vector<WeightVector> theorem_grid(const FamilyClassifier& fc, std::int64_t bound)
{
    const BiHom& chi = fc.bihom();
    const FamilySpec& s = fc.spec();
    const std::int64_t k = s.torsion_order;
    const std::size_t n = chi.rank();
    const Monomial one = Monomial::one(k);
    const Monomial q = param_q(s);
    std::vector<std::size_t> gen, tor;
    for (std::size_t j = 0; j < n; ++j) (is_generic(chi.diag(j)) ? gen : tor).push_back(j);

    std::vector<Monomial> base{one, q, q.inverse(), q.pow(-2), Monomial::zeta_power(k, 1)};
    if (k % 2 == 0) {
        const Monomial m1 = Monomial::minus_one(k);
        base.insert(base.end(), {m1, m1 * q, m1 * q.inverse()});
    }
    if (k % 3 == 0) base.push_back(Monomial::zeta_power(k, k / 3));
    if (s.b == 8) base.insert(base.end(), {param_r(s), param_r(s).inverse()});
    std::vector<Monomial> perturb{one, q, q.inverse()};
    if (k % 2 == 0) perturb.push_back(Monomial::minus_one(k));

    std::vector<WeightVector> out;
    std::vector<std::int64_t> ns(gen.size(), -1);
    for (;;) {
        WeightVector lam(n, one);
        for (std::size_t a = 0; a < gen.size(); ++a) lam[gen[a]] = chi.diag(gen[a]).pow(ns[a]);
        if (tor.empty()) {
            out.push_back(lam);
        } else {
            const std::size_t kv = tor[0];
            std::set<Monomial> cs;
            for (const auto& c : base) detail::insert_perturbed(cs, c, perturb);
            if (const auto& t = fc.table()) {
                WeightVector l0 = lam;
                l0[kv] = one;
                const Monomial g0 = t->g(l0);
                const std::int64_t e = t->exponents[kv];
                if (e > 0)
                    for (std::int64_t z = -1; z <= t->n + 3; ++z)
                        for (const auto& x : roots(t->v.pow(z) / g0, e)) detail::insert_perturbed(cs, x, perturb);
                if (s.b == 5) {
                    const int N = s.N, m = s.m;
                    Monomial gp0 = one;
                    for (int i = N - m; i <= N - 1; ++i) gp0 *= l0[static_cast<std::size_t>(i - 1)];
                    for (int x = 0; x < m; ++x) detail::insert_perturbed(cs, q.pow(-2 * x) / gp0, perturb);
                    detail::insert_perturbed(cs, lam[n - 1], perturb);
                    detail::insert_perturbed(cs, lam[n - 2], perturb);
                }
                if (s.b == 8) detail::insert_perturbed(cs, (q * lam[0]).inverse(), perturb);
                if (s.b == 10) detail::insert_perturbed(cs, (q * lam[1]).inverse(), perturb);
            }
            std::vector<Monomial> extra{one};
            if (k % 2 == 0) extra.push_back(Monomial::minus_one(k));
            extra.push_back(q.inverse());
            // remaining torsion vertices range over `extra`
            std::vector<std::size_t> idx(tor.size() > 1 ? tor.size() - 1 : 0, 0);
            for (;;) {
                for (const auto& c : cs) {
                    WeightVector l = lam;
                    l[kv] = c;
                    for (std::size_t a = 0; a < idx.size(); ++a) l[tor[a + 1]] = extra[idx[a]];
                    out.push_back(std::move(l));
                }
                std::size_t a = 0;
                while (a < idx.size() && ++idx[a] == extra.size()) idx[a++] = 0;
                if (a == idx.size()) break;
            }
        }
        std::size_t a = 0;
        while (a < ns.size() && ++ns[a] > bound) ns[a++] = -1;
        if (a == ns.size()) break;
    }
    return out;
}

inline TheoremReport verify_theorem(const FamilySpec& spec, const VerifyOptions& opt = {})
{
    const FamilyClassifier fc(spec);
    const BiHom& chi = fc.bihom();
    const ReducedWord greedy = greedy_longest_word(chi, opt.max_len);
    std::optional<ReducedWord> builtin;
    if (fc.spec().b != 1) {
        WordReport wr = verify_word(chi, builtin_word(fc.spec()));
        if (wr.ok) builtin = std::move(wr.trace);
    }
    const std::vector<WeightVector> grid = theorem_grid(fc, opt.bound);

    struct Result {
        MembershipReport c;
        bool fin = false;
        bool word_ok = true;
    };
    std::vector<Result> res(grid.size());
    auto work = [&](std::size_t from, std::size_t to) {
        for (std::size_t i = from; i < to; ++i) {
            res[i].c = fc.classify(grid[i]);
            res[i].fin = chain_is_complete(greedy, grid[i]);
            if (builtin) res[i].word_ok = chain_is_complete(*builtin, grid[i]) == res[i].fin;
        }
    };
    const unsigned jobs = std::max(1u, opt.jobs);
    if (jobs == 1) {
        work(0, grid.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (grid.size() + jobs - 1) / jobs;
        for (unsigned j = 0; j < jobs; ++j) {
            const std::size_t from = std::min(grid.size(), j * chunk);
            const std::size_t to = std::min(grid.size(), from + chunk);
            pool.emplace_back(work, from, to);
        }
        for (auto& t : pool) t.join();
    }

    TheoremReport rep;
    rep.total = grid.size();
    if (!builtin && fc.spec().b != 1) rep.word_disagreements = 1;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        rep.members += res[i].c.member;
        rep.overlaps += res[i].c.overlap;
        rep.word_disagreements += !res[i].word_ok;
        if (res[i].c.member != res[i].fin)
            rep.mismatches.push_back({grid[i], res[i].c, res[i].fin, weight_chain(greedy, grid[i]).H});
    }
    return rep;
}

}  // namespace gqg
