#pragma once

// Reduced words in the Weyl groupoid: greedy longest element, word
// verification, object enumeration and the built-in words of the families.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gqg/bihom.hpp"
#include "gqg/cartan.hpp"
#include "gqg/errors.hpp"

namespace gqg {

inline std::size_t default_max_len(std::size_t rank) { return 10 * rank * rank; }
inline constexpr std::size_t default_max_objects = 4096;

// objects[t] is the object reached after the first t letters, so
// objects.size() == letters.size() + 1. roots[t] = w_t(alpha_{letters[t]}).
struct ReducedWord {
    std::vector<std::size_t> letters;
    std::vector<IntVector> roots;
    std::vector<Monomial> diagonal;  // objects[t](alpha_letter, alpha_letter)
    std::vector<BiHom> objects;
    IntMatrix w;                     // column i is w(alpha_i)
    std::size_t length() const { return letters.size(); }
};

namespace detail {

inline bool nonnegative(const IntVector& v)
{
    return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x >= 0; });
}

// -alpha_k for some k, or nullopt.
inline std::optional<std::size_t> negative_simple(const IntVector& v)
{
    std::optional<std::size_t> k;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (v[i] != -1 || k) return std::nullopt;
        k = i;
    }
    return k;
}

inline void push_step(ReducedWord& rw, std::size_t i)
{
    const BiHom& cur = rw.objects.back();
    rw.roots.push_back(column(rw.w, i));
    rw.diagonal.push_back(cur.diag(i));
    rw.letters.push_back(i);
    rw.w = multiply(rw.w, reflection_matrix(cur, i));
    rw.objects.push_back(reflect_bihom(cur, i));
}

}  // namespace detail

// Appends the smallest i with w(alpha_i) >= 0 until none is left.
inline ReducedWord greedy_longest_word(const BiHom& chi, std::optional<std::size_t> max_len = std::nullopt)
{
    const std::size_t n = chi.rank();
    const std::size_t cutoff = max_len.value_or(default_max_len(n));
    ReducedWord rw;
    rw.objects.push_back(chi);
    rw.w = identity_matrix(n);
    for (;;) {
        std::optional<std::size_t> pick;
        for (std::size_t i = 0; i < n && !pick; ++i)
            if (detail::nonnegative(column(rw.w, i))) pick = i;
        if (!pick) break;
        if (rw.length() >= cutoff)
            throw NotFiniteType("greedy word exceeded max_len=" + std::to_string(cutoff));
        detail::push_step(rw, *pick);
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!detail::negative_simple(column(rw.w, i)))
            throw NotFiniteType("greedy word does not map the simple roots to negative simple roots");
    return rw;
}

struct FiniteTypeReport {
    bool finite = false;
    std::string annotation;  // "", "cutoff" or "cartan-undefined"
    std::size_t length = 0;
};

inline FiniteTypeReport is_finite_type(const BiHom& chi, std::optional<std::size_t> max_len = std::nullopt)
{
    try {
        const ReducedWord rw = greedy_longest_word(chi, max_len);
        return {true, "", rw.length()};
    } catch (const NotFiniteType&) {
        return {false, "cutoff", 0};
    } catch (const CartanUndefined&) {
        return {false, "cartan-undefined", 0};
    }
}

// Positive roots sorted by height, then lexicographically.
inline std::vector<IntVector> sorted_roots(std::vector<IntVector> roots)
{
    auto height = [](const IntVector& v) {
        std::int64_t h = 0;
        for (auto x : v) h += x;
        return h;
    };
    std::sort(roots.begin(), roots.end(), [&](const IntVector& a, const IntVector& b) {
        const auto ha = height(a), hb = height(b);
        return ha != hb ? ha < hb : a < b;
    });
    return roots;
}

inline std::vector<IntVector> root_system(const BiHom& chi, std::optional<std::size_t> max_len = std::nullopt)
{
    return sorted_roots(greedy_longest_word(chi, max_len).roots);
}

struct WordReport {
    bool ok = false;
    std::optional<std::size_t> failing_position;  // 0-based letter index
    std::string reason;
    ReducedWord trace;
    std::vector<std::size_t> permutation;  // w(alpha_i) = -alpha_{permutation[i]} when ok
};

// Checks that each prefix stays positive and that the full word sends the
// simple roots onto the negative simple roots. With `terminal` given, the
// induced permutation must equal it.
inline WordReport verify_word(const BiHom& chi, const std::vector<std::size_t>& letters,
                              const std::optional<std::vector<std::size_t>>& terminal = std::nullopt)
{
    const std::size_t n = chi.rank();
    WordReport rep;
    rep.trace.objects.push_back(chi);
    rep.trace.w = identity_matrix(n);
    for (std::size_t t = 0; t < letters.size(); ++t) {
        const std::size_t i = letters[t];
        if (i >= n) {
            rep.failing_position = t;
            rep.reason = "letter out of range";
            return rep;
        }
        if (!detail::nonnegative(column(rep.trace.w, i))) {
            rep.failing_position = t;
            rep.reason = "word is not reduced";
            return rep;
        }
        try {
            detail::push_step(rep.trace, i);
        } catch (const CartanUndefined& e) {
            rep.failing_position = t;
            rep.reason = e.what();
            return rep;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto k = detail::negative_simple(column(rep.trace.w, i));
        if (!k) {
            rep.reason = "w(alpha_" + std::to_string(i + 1) + ") is not a negative simple root";
            rep.permutation.clear();
            return rep;
        }
        rep.permutation.push_back(*k);
    }
    if (terminal && *terminal != rep.permutation) {
        rep.reason = "terminal permutation differs";
        return rep;
    }
    rep.ok = true;
    return rep;
}

// ===== objects of the groupoid =====

struct ObjectGraph {
    std::vector<BiHom> objects;  // one representative per class; objects[0] ~ chi
    // arrows[c][i]: class of i |> objects[c], nullopt when row i has -inf
    std::vector<std::vector<std::optional<std::size_t>>> arrows;
};

inline ObjectGraph enumerate_objects(const BiHom& chi, std::size_t max_objects = default_max_objects)
{
    ObjectGraph g;
    std::map<EquivKey, std::size_t> index;
    g.objects.push_back(chi);
    index.emplace(chi.key(), 0);
    for (std::size_t c = 0; c < g.objects.size(); ++c) {
        std::vector<std::optional<std::size_t>> row(chi.rank());
        for (std::size_t i = 0; i < chi.rank(); ++i) {
            if (!row_is_finite(g.objects[c], i)) continue;
            BiHom next = reflect_bihom(g.objects[c], i);
            auto [it, fresh] = index.emplace(next.key(), g.objects.size());
            if (fresh) {
                if (g.objects.size() >= max_objects)
                    throw CutoffExceeded("more than max_objects=" + std::to_string(max_objects) + " objects");
                g.objects.push_back(std::move(next));
            }
            row[i] = it->second;
        }
        g.arrows.push_back(std::move(row));
    }
    return g;
}

// ===== built-in words (0-based letters) =====

inline std::vector<std::size_t> from_one_based(const std::vector<int>& w)
{
    std::vector<std::size_t> out;
    for (int x : w) {
        if (x < 1) throw InvalidArgument("letters are 1-based");
        out.push_back(static_cast<std::size_t>(x - 1));
    }
    return out;
}

inline std::vector<int> to_one_based(const std::vector<std::size_t>& w)
{
    std::vector<int> out;
    for (auto x : w) out.push_back(static_cast<int>(x) + 1);
    return out;
}

inline std::vector<std::size_t> builtin_word(const FamilySpec& spec)
{
    const FamilySpec s = validated(spec);
    const int n = s.N, m = s.m;
    std::vector<int> w;
    auto run = [&](int from, int to) {  // inclusive, either direction
        if (from <= to)
            for (int x = from; x <= to; ++x) w.push_back(x);
        else
            for (int x = from; x >= to; --x) w.push_back(x);
    };
    switch (s.b) {
    case 1: throw InvalidArgument("family 1 has no built-in word; use the greedy word");
    case 2:
        for (int k = m; k >= 1; --k) run(1, k);
        for (int k = n; k >= m + 2; --k) run(m + 2, k);
        for (int k = 0; k <= m; ++k) run(m + 1 - k, n - k);
        break;
    case 3:
        for (int t = 0; t < m; ++t) run(n - m + 1, n);
        for (int t = 0; t < n - m; ++t) {
            run(1, n);
            run(n - 1, n - m);
        }
        break;
    case 4:
        for (int t = 0; t < n - 1; ++t) run(2, n);
        run(1, n - 1);
        w.push_back(n);
        if (n >= 3) run(n - 2, 1);
        break;
    case 5:
        for (int z = 1; z <= m; ++z) {
            if (n - m + 1 <= n - 2) run(n - m + 1, n - 2);
            w.push_back(z % 2 == 1 ? n - 1 : n);
        }
        for (int t = 0; t < n - m; ++t) {
            run(1, n);
            run(n - 1, n - m);
        }
        break;
    case 6: w = {2, 3, 4, 2, 3, 4, 2, 3, 4, 1, 2, 3, 4, 1, 4, 3, 2, 1}; break;
    case 7: w = {2, 3, 2, 3, 2, 3, 1, 2, 3, 1, 3, 2, 1}; break;
    case 8: w = {1, 3, 2, 1, 3, 1, 2}; break;
    case 9: w = {2, 1, 2, 1}; break;
    case 10: w = {1, 2, 1, 4, 3, 4, 2, 1, 4, 3, 1, 2, 4, 2, 1}; break;
    default: break;
    }
    return from_one_based(w);
}

}  // namespace gqg
