#pragma once

// Highest weights Lambda, read as lambda_i = Lambda(K_i L_i^-1), and the
// weight chain along a reduced word that decides finite dimensionality.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gqg/bihom.hpp"
#include "gqg/cartan.hpp"
#include "gqg/errors.hpp"
#include "gqg/groupoid.hpp"
#include "gqg/scalar.hpp"

namespace gqg {

using WeightVector = std::vector<Monomial>;

inline void check_weight(const BiHom& chi, const WeightVector& lambda)
{
    if (lambda.size() != chi.rank())
        throw InvalidArgument("weight has length " + std::to_string(lambda.size()) + ", rank is " +
                              std::to_string(chi.rank()));
    for (const auto& x : lambda)
        if (x.torsion_order() != chi.torsion_order()) throw TorsionMismatch("weight entry with foreign torsion order");
}

// h = min{ m >= 0 : (m+1)_{q_ii} = 0 or q_ii^-m lambda_i = 1 }; nullopt is infinite.
inline std::optional<std::int64_t> h_value(const BiHom& chi, const WeightVector& lambda, std::size_t i)
{
    check_weight(chi, lambda);
    if (i >= chi.rank()) throw InvalidArgument("h_value: index out of range");
    const Monomial& qii = chi.diag(i);
    std::optional<std::int64_t> best;
    if (const auto d = finite_order(qii); d && *d >= 2) best = *d - 1;
    if (const auto m = discrete_log(qii, lambda[i]); m && (!best || *m < *best)) best = m;
    return best;
}

// Highest weight of the reflected module over i |> chi:
//   lambda'_i = lambda_i^-1 q_ii^(2h)
//   lambda'_j = lambda_j lambda_i^(-c_ij) (q_ij q_ji q_ii^(-2 c_ij))^(-h)
inline WeightVector reflect_weight(const BiHom& chi, const WeightVector& lambda, std::size_t i)
{
    const auto h = h_value(chi, lambda, i);
    if (!h) throw InfiniteH("h_" + std::to_string(i + 1) + " is infinite");
    WeightVector out(lambda.size());
    const Monomial& qii = chi.diag(i);
    for (std::size_t j = 0; j < chi.rank(); ++j) {
        if (j == i) {
            out[j] = lambda[i].inverse() * qii.pow(2 * *h);
            continue;
        }
        const CartanEntry c = cartan_entry(chi, i, j);
        if (!c) throw CartanUndefined("c_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "} = -inf");
        out[j] = lambda[j] * lambda[i].pow(-*c) * (chi.edge(i, j) * qii.pow(-2 * *c)).pow(-*h);
    }
    return out;
}

struct ChainStep {
    std::size_t letter;
    EquivKey object;
    WeightVector lambda;           // weight before the step
    std::optional<std::int64_t> h;  // h at `letter`; nullopt stops the chain
};

struct WeightChain {
    std::vector<ChainStep> steps;
    std::size_t H = 0;  // number of steps with finite h before the first infinite one
    bool complete = false;
    WeightVector final_lambda;
};

namespace detail {

template <class ObjectAt>
WeightChain run_chain(const std::vector<std::size_t>& letters, const WeightVector& lambda, ObjectAt object_at)
{
    WeightChain ch;
    WeightVector cur = lambda;
    for (std::size_t t = 0; t < letters.size(); ++t) {
        const BiHom& obj = object_at(t);
        const std::size_t i = letters[t];
        const auto h = h_value(obj, cur, i);
        ch.steps.push_back({i, obj.key(), cur, h});
        if (!h) {
            ch.final_lambda = cur;
            return ch;
        }
        cur = reflect_weight(obj, cur, i);
        ++ch.H;
    }
    ch.complete = true;
    ch.final_lambda = cur;
    return ch;
}

}  // namespace detail

// Uses the objects already stored in the trace (objects[t] before letter t).
inline WeightChain weight_chain(const ReducedWord& trace, const WeightVector& lambda)
{
    check_weight(trace.objects.front(), lambda);
    return detail::run_chain(trace.letters, lambda, [&](std::size_t t) -> const BiHom& { return trace.objects[t]; });
}

// Reflects objects lazily, so letters after the first infinite h are never touched.
inline WeightChain weight_chain(const BiHom& chi, const WeightVector& lambda, const std::vector<std::size_t>& letters)
{
    check_weight(chi, lambda);
    for (auto i : letters)
        if (i >= chi.rank()) throw InvalidArgument("letter out of range");
    std::vector<BiHom> objects{chi};
    return detail::run_chain(letters, lambda, [&](std::size_t t) -> const BiHom& {
        while (objects.size() <= t) objects.push_back(reflect_bihom(objects.back(), letters[objects.size() - 1]));
        return objects[t];
    });
}

// Cheaper than weight_chain when only the verdict is needed.
inline bool chain_is_complete(const ReducedWord& trace, const WeightVector& lambda)
{
    WeightVector cur = lambda;
    for (std::size_t t = 0; t < trace.letters.size(); ++t) {
        const BiHom& obj = trace.objects[t];
        const std::size_t i = trace.letters[t];
        if (!h_value(obj, cur, i)) return false;
        cur = reflect_weight(obj, cur, i);
    }
    return true;
}

// Finite dimensional iff the chain along a longest word never meets an infinite h.
inline bool is_finite_dimensional(const BiHom& chi, const WeightVector& lambda,
                                  std::optional<std::size_t> max_len = std::nullopt)
{
    check_weight(chi, lambda);
    return chain_is_complete(greedy_longest_word(chi, max_len), lambda);
}

}  // namespace gqg
