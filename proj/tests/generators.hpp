#pragma once

// Seeded random generators shared by the property tests.

#include <random>
#include <vector>

#include "gqg/gqg.hpp"

namespace gqg::fuzz {

class Gen {
public:
    explicit Gen(std::uint64_t seed, std::int64_t k = 12) : rng_(seed), k_(k) {}

    std::int64_t k() const { return k_; }
    std::int64_t uniform(std::int64_t lo, std::int64_t hi)
    {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }
    bool coin() { return uniform(0, 1) == 1; }

    Monomial monomial(std::int64_t e = 4)
    {
        return {k_, uniform(0, k_ - 1), uniform(-e, e), coin() ? uniform(-e, e) : 0};
    }
    Monomial torsion() { return Monomial::zeta_power(k_, uniform(0, k_ - 1)); }

    // A diagonal entry: torsion, generic, or torsion times generic.
    Monomial diagonal_entry()
    {
        switch (uniform(0, 3)) {
        case 0: return Monomial::zeta_power(k_, uniform(1, k_ - 1));
        case 1: return Monomial::q_power(k_, uniform(1, 4) * (coin() ? 1 : -1));
        case 2: return Monomial(k_, uniform(0, k_ - 1), uniform(1, 3), 0);
        default: return Monomial(k_, 0, uniform(-2, 2), uniform(1, 2));
        }
    }

    // Random rank-n bicharacter whose Cartan row i is finite.
    BiHom bihom_with_finite_row(std::size_t n, std::size_t i)
    {
        std::vector<Monomial> diag;
        for (std::size_t j = 0; j < n; ++j) diag.push_back(diagonal_entry());
        std::vector<std::vector<Monomial>> p(n, std::vector<Monomial>(n, Monomial::one(k_)));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) {
                if (a == i || b == i) {
                    // q_ii^m p = 1 for a small m, or anything if q_ii is torsion
                    if (!is_generic(diag[i]) && coin()) p[a][b] = monomial(3);
                    else p[a][b] = diag[i].pow(-uniform(0, 3));
                } else {
                    p[a][b] = coin() ? Monomial::one(k_) : monomial(3);
                }
            }
        return regauge(BiHom::from_products(diag, p), random_gauge(n));
    }

    std::vector<std::vector<Monomial>> random_gauge(std::size_t n)
    {
        std::vector<std::vector<Monomial>> u(n, std::vector<Monomial>(n, Monomial::one(k_)));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) u[a][b] = monomial(3);
        return u;
    }

    // Weight with h_i finite: lambda_i = q_ii^n when q_ii is generic.
    WeightVector weight_with_finite_h(const BiHom& chi, std::size_t i)
    {
        WeightVector w;
        for (std::size_t j = 0; j < chi.rank(); ++j) w.push_back(monomial(4));
        if (is_generic(chi.diag(i)) && coin()) w[i] = chi.diag(i).pow(uniform(0, 4));
        else if (is_generic(chi.diag(i))) w[i] = chi.diag(i).pow(uniform(0, 2));
        return w;
    }

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
    std::int64_t k_;
};

}  // namespace gqg::fuzz
