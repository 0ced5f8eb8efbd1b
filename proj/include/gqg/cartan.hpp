#pragma once

// Generalized Cartan entries, simple reflections and the reflected bicharacter.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gqg/bihom.hpp"
#include "gqg/errors.hpp"
#include "gqg/scalar.hpp"

namespace gqg {

// nullopt stands for -inf.
using CartanEntry = std::optional<std::int64_t>;
using CartanMatrix = std::vector<std::vector<CartanEntry>>;

inline std::string to_string(const CartanEntry& c) { return c ? std::to_string(*c) : std::string("-inf"); }

// c_ij = -min{ m >= 0 : (m+1)_{q_ii} = 0 or q_ii^m q_ij q_ji = 1 }, c_ii = 2.
inline CartanEntry cartan_entry(const BiHom& chi, std::size_t i, std::size_t j)
{
    if (i >= chi.rank() || j >= chi.rank()) throw InvalidArgument("cartan_entry: index out of range");
    if (i == j) return 2;
    const Monomial& qii = chi.diag(i);
    std::optional<std::int64_t> best;
    if (const auto d = finite_order(qii); d && *d >= 2) best = *d - 1;
    if (const auto m = discrete_log(qii, chi.edge(i, j).inverse()); m && (!best || *m < *best)) best = m;
    if (!best) return std::nullopt;
    return -*best;
}

inline CartanMatrix cartan_matrix(const BiHom& chi)
{
    const std::size_t n = chi.rank();
    CartanMatrix c(n, std::vector<CartanEntry>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c[i][j] = cartan_entry(chi, i, j);
    return c;
}

inline bool row_is_finite(const BiHom& chi, std::size_t i)
{
    for (std::size_t j = 0; j < chi.rank(); ++j)
        if (!cartan_entry(chi, i, j)) return false;
    return true;
}

inline bool all_finite(const CartanMatrix& c)
{
    for (const auto& row : c)
        for (const auto& x : row)
            if (!x) return false;
    return true;
}

// Column j is s_i(alpha_j) = alpha_j - c_ij alpha_i.
inline IntMatrix reflection_matrix(const BiHom& chi, std::size_t i)
{
    const std::size_t n = chi.rank();
    IntMatrix s(n, IntVector(n, 0));
    for (std::size_t j = 0; j < n; ++j) {
        const CartanEntry c = cartan_entry(chi, i, j);
        if (!c) throw CartanUndefined("c_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "} = -inf");
        s[j][j] = 1;
        s[i][j] -= *c;
    }
    return s;
}

inline IntVector column(const IntMatrix& m, std::size_t j)
{
    IntVector v(m.size());
    for (std::size_t r = 0; r < m.size(); ++r) v[r] = m[r][j];
    return v;
}

inline IntMatrix identity_matrix(std::size_t n)
{
    IntMatrix m(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b)
{
    const std::size_t n = a.size();
    IntMatrix c(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a[i][k] != 0)
                for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

inline IntVector apply(const IntMatrix& m, const IntVector& v)
{
    IntVector out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

// (i |> chi)(alpha_j, alpha_k) = chi(s_i alpha_j, s_i alpha_k)
inline BiHom reflect_bihom(const BiHom& chi, std::size_t i)
{
    const IntMatrix s = reflection_matrix(chi, i);
    const std::size_t n = chi.rank();
    std::vector<IntVector> cols(n);
    for (std::size_t j = 0; j < n; ++j) cols[j] = column(s, j);
    std::vector<std::vector<Monomial>> m(n, std::vector<Monomial>(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) m[j][k] = chi(cols[j], cols[k]);
    return BiHom(chi.torsion_order(), std::move(m));
}

// With t = chi(alpha, alpha): nullopt (unbounded) if t = 1 or t has infinite
// order, otherwise ord(t) - 1.
inline std::optional<std::int64_t> height_bound(const BiHom& chi, const IntVector& alpha)
{
    const Monomial t = chi(alpha, alpha);
    const auto d = finite_order(t);
    if (!d || *d == 1) return std::nullopt;
    return *d - 1;
}

}  // namespace gqg
