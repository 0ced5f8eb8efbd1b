#pragma once

// Bicharacters chi : Z^N x Z^N -> monomials, stored as the matrix
// q_ij = chi(alpha_i, alpha_j) on the simple roots, plus the named families.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gqg/errors.hpp"
#include "gqg/scalar.hpp"

namespace gqg {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;  // row-major, [row][col]

inline IntVector unit_vector(std::size_t n, std::size_t i)
{
    IntVector v(n, 0);
    v[i] = 1;
    return v;
}

// Key of the relation chi ~ chi' (same diagonal, same products q_ij q_ji).
struct EquivKey {
    std::vector<Monomial> diagonal;
    std::vector<Monomial> products;  // i < j, lexicographic
    friend bool operator==(const EquivKey&, const EquivKey&) = default;
    friend auto operator<=>(const EquivKey&, const EquivKey&) = default;
};

class BiHom {
public:
    BiHom() = default;

    BiHom(std::int64_t torsion_order, std::vector<std::vector<Monomial>> matrix)
        : k_(torsion_order), m_(std::move(matrix))
    {
        const std::size_t n = m_.size();
        if (n == 0) throw InvalidArgument("bicharacter of rank 0");
        for (const auto& row : m_) {
            if (row.size() != n) throw InvalidArgument("bicharacter matrix is not square");
            for (const auto& x : row)
                if (x.torsion_order() != k_) throw TorsionMismatch("matrix entry with foreign torsion order");
        }
    }

    // q_ij = p_ij for i < j, q_ji = 1.
    static BiHom from_products(const std::vector<Monomial>& diagonal,
                               const std::vector<std::vector<Monomial>>& upper_products)
    {
        const std::size_t n = diagonal.size();
        if (n == 0) throw InvalidArgument("bicharacter of rank 0");
        const std::int64_t k = diagonal[0].torsion_order();
        std::vector<std::vector<Monomial>> m(n, std::vector<Monomial>(n, Monomial::one(k)));
        for (std::size_t i = 0; i < n; ++i) {
            m[i][i] = diagonal[i];
            for (std::size_t j = i + 1; j < n; ++j) m[i][j] = upper_products.at(i).at(j);
        }
        return BiHom(k, std::move(m));
    }

    std::size_t rank() const { return m_.size(); }
    std::int64_t torsion_order() const { return k_; }
    const Monomial& operator()(std::size_t i, std::size_t j) const { return m_.at(i).at(j); }
    const Monomial& diag(std::size_t i) const { return m_.at(i).at(i); }
    Monomial edge(std::size_t i, std::size_t j) const { return m_.at(i).at(j) * m_.at(j).at(i); }
    const std::vector<std::vector<Monomial>>& matrix() const { return m_; }

    // chi(x, y) = prod q_ij^(x_i y_j)
    Monomial operator()(const IntVector& x, const IntVector& y) const
    {
        Monomial acc = Monomial::one(k_);
        for (std::size_t i = 0; i < rank(); ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < rank(); ++j)
                if (y[j] != 0) acc *= m_[i][j].pow(x[i] * y[j]);
        }
        return acc;
    }

    EquivKey key() const
    {
        EquivKey k;
        for (std::size_t i = 0; i < rank(); ++i) k.diagonal.push_back(diag(i));
        for (std::size_t i = 0; i < rank(); ++i)
            for (std::size_t j = i + 1; j < rank(); ++j) k.products.push_back(edge(i, j));
        return k;
    }

    friend bool operator==(const BiHom&, const BiHom&) = default;

private:
    std::int64_t k_ = 1;
    std::vector<std::vector<Monomial>> m_;
};

inline bool equivalent(const BiHom& a, const BiHom& b) { return a.key() == b.key(); }

// Multiplies q_ij by u_ij and q_ji by u_ij^-1 for i < j; the class is unchanged.
inline BiHom regauge(const BiHom& chi, const std::vector<std::vector<Monomial>>& u)
{
    auto m = chi.matrix();
    for (std::size_t i = 0; i < chi.rank(); ++i)
        for (std::size_t j = i + 1; j < chi.rank(); ++j) {
            m[i][j] *= u.at(i).at(j);
            m[j][i] *= u.at(i).at(j).inverse();
        }
    return BiHom(chi.torsion_order(), std::move(m));
}

// Relabels vertices: new vertex i is old vertex perm[i].
inline BiHom permute(const BiHom& chi, const std::vector<std::size_t>& perm)
{
    const std::size_t n = chi.rank();
    if (perm.size() != n) throw InvalidArgument("permutation has the wrong length");
    std::vector<std::vector<Monomial>> m(n, std::vector<Monomial>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = chi(perm[i], perm[j]);
    return BiHom(chi.torsion_order(), std::move(m));
}

struct DiagramEdge {
    std::size_t i, j;  // i < j
    Monomial label;    // q_ij q_ji != 1
};

struct DynkinDiagram {
    std::vector<Monomial> vertices;
    std::vector<DiagramEdge> edges;
};

inline DynkinDiagram dynkin_diagram(const BiHom& chi)
{
    DynkinDiagram d;
    for (std::size_t i = 0; i < chi.rank(); ++i) d.vertices.push_back(chi.diag(i));
    for (std::size_t i = 0; i < chi.rank(); ++i)
        for (std::size_t j = i + 1; j < chi.rank(); ++j)
            if (!chi.edge(i, j).is_one()) d.edges.push_back({i, j, chi.edge(i, j)});
    return d;
}

inline bool is_connected(const DynkinDiagram& d)
{
    const std::size_t n = d.vertices.size();
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (const auto& e : d.edges) {
            const std::size_t w = e.i == v ? e.j : e.j == v ? e.i : n;
            if (w < n && !seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

inline bool is_irreducible(const BiHom& chi) { return is_connected(dynkin_diagram(chi)); }

inline std::string to_dot(const DynkinDiagram& d, const std::string& name = "chi")
{
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (std::size_t i = 0; i < d.vertices.size(); ++i)
        os << "  a" << i + 1 << " [label=\"α" << i + 1 << " : " << to_string(d.vertices[i]) << "\"];\n";
    for (const auto& e : d.edges)
        os << "  a" << e.i + 1 << " -- a" << e.j + 1 << " [label=\"" << to_string(e.label) << "\"];\n";
    os << "}\n";
    return os.str();
}

// Path diagrams print on one line in path order; anything else prints as
// a vertex list followed by an edge list.
inline std::string to_ascii(const DynkinDiagram& d)
{
    const std::size_t n = d.vertices.size();
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& e : d.edges) {
        adj[e.i].push_back(e.j);
        adj[e.j].push_back(e.i);
    }
    auto vertex = [&](std::size_t i) {
        return "(α" + std::to_string(i + 1) + " : " + to_string(d.vertices[i]) + ")";
    };
    auto label = [&](std::size_t a, std::size_t b) {
        for (const auto& e : d.edges)
            if ((e.i == a && e.j == b) || (e.i == b && e.j == a)) return to_string(e.label);
        return std::string();
    };
    const bool path = d.edges.size() + 1 == n && is_connected(d) &&
                      std::all_of(adj.begin(), adj.end(), [](const auto& a) { return a.size() <= 2; });
    std::ostringstream os;
    if (path) {
        std::size_t start = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (adj[i].size() <= 1) {
                start = i;
                break;
            }
        std::size_t prev = n, cur = start;
        os << vertex(cur);
        for (std::size_t step = 1; step < n; ++step) {
            const std::size_t next = adj[cur][0] != prev ? adj[cur][0] : adj[cur][1];
            os << " --[" << label(cur, next) << "]-- " << vertex(next);
            prev = cur;
            cur = next;
        }
        os << '\n';
        return os.str();
    }
    for (std::size_t i = 0; i < n; ++i) os << vertex(i) << '\n';
    for (const auto& e : d.edges)
        os << "α" << e.i + 1 << " --[" << to_string(e.label) << "]-- α" << e.j + 1 << '\n';
    return os.str();
}

// ===== named families =====

struct CartanData {
    std::string label;
    IntMatrix a;
    IntVector d;  // d_i a_ij = d_j a_ji
};

inline CartanData cartan_type(const std::string& label)
{
    if (label.size() < 2) throw InvalidArgument("unknown Cartan type '" + label + "'");
    const char t = label[0];
    int n = 0;
    try {
        n = std::stoi(label.substr(1));
    } catch (const std::exception&) {
        throw InvalidArgument("unknown Cartan type '" + label + "'");
    }
    if (n < 1) throw InvalidArgument("unknown Cartan type '" + label + "'");
    const auto un = static_cast<std::size_t>(n);
    CartanData c{label, IntMatrix(un, IntVector(un, 0)), IntVector(un, 1)};
    auto link = [&](int i, int j) {  // 1-based, simply laced
        c.a[i - 1][j - 1] = -1;
        c.a[j - 1][i - 1] = -1;
    };
    for (std::size_t i = 0; i < un; ++i) c.a[i][i] = 2;
    switch (t) {
    case 'A':
        for (int i = 1; i < n; ++i) link(i, i + 1);
        break;
    case 'B':
        if (n < 2) throw InvalidArgument("B_N needs N >= 2");
        for (int i = 1; i < n; ++i) link(i, i + 1);
        c.a[n - 1][n - 2] = -2;
        for (int i = 0; i < n - 1; ++i) c.d[i] = 2;
        break;
    case 'C':
        if (n < 2) throw InvalidArgument("C_N needs N >= 2");
        for (int i = 1; i < n; ++i) link(i, i + 1);
        c.a[n - 2][n - 1] = -2;
        c.d[n - 1] = 2;
        break;
    case 'D':
        if (n < 4) throw InvalidArgument("D_N needs N >= 4");
        for (int i = 1; i < n - 1; ++i) link(i, i + 1);
        link(n - 2, n);
        break;
    case 'E':
        if (n < 6 || n > 8) throw InvalidArgument("E_N needs 6 <= N <= 8");
        link(1, 3);
        link(2, 4);
        for (int i = 3; i < n; ++i) link(i, i + 1);
        break;
    case 'F':
        if (n != 4) throw InvalidArgument("F_N needs N = 4");
        link(1, 2);
        link(2, 3);
        link(3, 4);
        c.a[2][1] = -2;
        c.d = {2, 2, 1, 1};
        break;
    case 'G':
        if (n != 2) throw InvalidArgument("G_N needs N = 2");
        link(1, 2);
        c.a[0][1] = -3;
        c.d = {1, 3};
        break;
    default: throw InvalidArgument("unknown Cartan type '" + label + "'");
    }
    return c;
}

inline void validate_cartan(const CartanData& c)
{
    const std::size_t n = c.a.size();
    if (n == 0 || c.d.size() != n) throw InvalidArgument("Cartan data: size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (c.a[i].size() != n) throw InvalidArgument("Cartan data: matrix is not square");
        if (c.a[i][i] != 2) throw InvalidArgument("Cartan data: a_ii must be 2");
        if (c.d[i] < 1) throw InvalidArgument("Cartan data: d_i must be positive");
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (c.a[i][j] > 0) throw InvalidArgument("Cartan data: a_ij must be <= 0");
            if ((c.a[i][j] == 0) != (c.a[j][i] == 0)) throw InvalidArgument("Cartan data: a_ij = 0 iff a_ji = 0");
            if (c.d[i] * c.a[i][j] != c.d[j] * c.a[j][i])
                throw InvalidArgument("Cartan data: d_i a_ij must equal d_j a_ji");
        }
    }
}

struct FamilyParams {
    std::optional<Monomial> q;     // default q
    std::optional<Monomial> r;     // default r (family 8 only)
    std::optional<Monomial> zeta;  // default zeta_K^(K/3) (family 9 only)
};

struct FamilySpec {
    int b = 1;
    int N = 0;
    int m = 0;
    std::int64_t torsion_order = 6;
    FamilyParams params;
    std::optional<CartanData> cartan;  // family 1
};

inline Monomial param_q(const FamilySpec& s)
{
    return s.params.q.value_or(Monomial::q_power(s.torsion_order, 1));
}

inline Monomial param_r(const FamilySpec& s)
{
    return s.params.r.value_or(Monomial::r_power(s.torsion_order, 1));
}

inline Monomial param_zeta(const FamilySpec& s)
{
    if (s.params.zeta) return *s.params.zeta;
    if (s.torsion_order % 3 != 0)
        throw InvalidArgument("family 9 needs K divisible by 3, got K=" + std::to_string(s.torsion_order));
    return Monomial::zeta_power(s.torsion_order, s.torsion_order / 3);
}

inline int fixed_rank(int b)
{
    switch (b) {
    case 6: case 10: return 4;
    case 7: case 8: return 3;
    case 9: return 2;
    default: return 0;
    }
}

// Fills N for fixed-rank families and checks every constraint.
inline FamilySpec validated(FamilySpec s)
{
    const std::int64_t k = s.torsion_order;
    if (k < 1) throw InvalidArgument("torsion order must be positive");
    if (s.b < 1 || s.b > 10) throw InvalidArgument("family index must be in 1..10");
    if (s.b == 1) {
        if (!s.cartan) throw InvalidArgument("family 1 needs Cartan data");
        validate_cartan(*s.cartan);
        s.N = static_cast<int>(s.cartan->a.size());
    } else if (s.b >= 6) {
        if (s.N != 0 && s.N != fixed_rank(s.b))
            throw InvalidArgument("family " + std::to_string(s.b) + " has rank " + std::to_string(fixed_rank(s.b)));
        s.N = fixed_rank(s.b);
    }
    const int n = s.N, m = s.m;
    switch (s.b) {
    case 2:
        if (n < 2 || m < 0 || 2 * m > n - 1) throw InvalidArgument("family 2 needs N >= 2, 0 <= m <= (N-1)/2");
        break;
    case 3:
        if (n < 2 || m < 1 || m > n - 1) throw InvalidArgument("family 3 needs N >= 2, 1 <= m <= N-1");
        break;
    case 4:
        if (n < 3) throw InvalidArgument("family 4 needs N >= 3");
        break;
    case 5:
        if (n < 4 || m < 2 || m > n - 1) throw InvalidArgument("family 5 needs N >= 4, 2 <= m <= N-1");
        break;
    default: break;
    }
    const Monomial q = param_q(s);
    if (q.torsion_order() != k) throw TorsionMismatch("parameter q has a foreign torsion order");
    if (!is_generic(q)) throw InvalidArgument("parameter q must have infinite order");
    if (s.b >= 2 && s.b != 9 && k % 2 != 0)
        throw InvalidArgument("family " + std::to_string(s.b) + " needs an even torsion order");
    if (s.b == 8) {
        const Monomial r = param_r(s);
        if (r.torsion_order() != k) throw TorsionMismatch("parameter r has a foreign torsion order");
        if (r.is_one() || r == q.inverse()) throw InvalidArgument("family 8 needs r not in {1, q^-1}");
    }
    if (s.b == 9) {
        const Monomial z = param_zeta(s);
        if (z.torsion_order() != k) throw TorsionMismatch("parameter zeta has a foreign torsion order");
        if (finite_order(z) != 3) throw InvalidArgument("family 9 needs zeta of order 3");
    }
    return s;
}

// eta_{m|n-m}(z, z') = sum_{l <= m} z_l z'_l - sum_{l > m} z_l z'_l on Z^n.
inline std::int64_t eta(std::size_t m, std::size_t n, const IntVector& z, const IntVector& zp)
{
    if (m > n || z.size() != n || zp.size() != n) throw InvalidArgument("eta: length mismatch");
    std::int64_t acc = 0;
    for (std::size_t l = 0; l < n; ++l) acc += (l < m ? 1 : -1) * z[l] * zp[l];
    return acc;
}

// 1 iff z is isotropic for eta_{m|n-m}.
inline int parity(std::size_t m, std::size_t n, const IntVector& z) { return eta(m, n, z, z) == 0 ? 1 : 0; }

namespace detail {

// Classical families in orthonormal coordinates with the super form eta.
// Families 3 and 5 use q^-eta (the convention under which their weight
// chains and membership tables agree).
inline BiHom classical_family(const FamilySpec& s)
{
    const std::size_t n = static_cast<std::size_t>(s.N);
    const std::size_t m = static_cast<std::size_t>(s.m);
    const std::size_t dim = s.b == 2 ? n + 1 : n;
    const std::size_t positive = s.b == 2 ? m + 1 : s.b == 4 ? 1 : n - m;
    const Monomial q = param_q(s);
    std::vector<IntVector> alpha;
    for (std::size_t i = 0; i + 1 < dim; ++i) {
        IntVector v(dim, 0);
        v[i] = 1;
        v[i + 1] = -1;
        alpha.push_back(v);
    }
    if (s.b != 2) {
        IntVector last(dim, 0);
        if (s.b == 3) last[dim - 1] = 1;
        if (s.b == 4) last[dim - 1] = 2;
        if (s.b == 5) last[dim - 2] = last[dim - 1] = 1;
        alpha.push_back(last);
    }
    const std::int64_t sign = (s.b == 3 || s.b == 5) ? -1 : 1;
    std::vector<Monomial> diag;
    std::vector<std::vector<Monomial>> prod(n, std::vector<Monomial>(n, Monomial::one(s.torsion_order)));
    for (std::size_t i = 0; i < n; ++i) {
        Monomial qi = q.pow(sign * eta(positive, dim, alpha[i], alpha[i]));
        if (parity(positive, dim, alpha[i]) == 1) qi *= Monomial::minus_one(s.torsion_order);
        diag.push_back(qi);
        for (std::size_t j = i + 1; j < n; ++j) prod[i][j] = q.pow(sign * 2 * eta(positive, dim, alpha[i], alpha[j]));
    }
    return BiHom::from_products(diag, prod);
}

}  // namespace detail

inline BiHom make_family(const FamilySpec& spec)
{
    const FamilySpec s = validated(spec);
    const std::int64_t k = s.torsion_order;
    const Monomial q = param_q(s);
    const auto one = Monomial::one(k);
    const std::size_t n = static_cast<std::size_t>(s.N);
    std::vector<Monomial> diag(n, one);
    std::vector<std::vector<Monomial>> p(n, std::vector<Monomial>(n, one));
    switch (s.b) {
    case 1:
        for (std::size_t i = 0; i < n; ++i) {
            diag[i] = q.pow(2 * s.cartan->d[i]);
            for (std::size_t j = i + 1; j < n; ++j) p[i][j] = q.pow(2 * s.cartan->d[i] * s.cartan->a[i][j]);
        }
        return BiHom::from_products(diag, p);
    case 2: case 3: case 4: case 5: return detail::classical_family(s);
    default: break;
    }
    const Monomial m1 = Monomial::minus_one(k);
    switch (s.b) {
    case 6:
        diag = {m1, q.pow(2), q.pow(4), q.pow(4)};
        p[0][1] = q.pow(-2);
        p[1][2] = q.pow(-4);
        p[2][3] = q.pow(-4);
        break;
    case 7:
        diag = {m1, q.pow(2), q.pow(6)};
        p[0][1] = q.pow(-2);
        p[1][2] = q.pow(-6);
        break;
    case 8: {
        const Monomial r = param_r(s);
        diag = {q, m1, r};
        p[0][1] = q.inverse();
        p[1][2] = r.inverse();
        break;
    }
    case 9:
        diag = {param_zeta(s), q};
        p[0][1] = q.inverse();
        break;
    case 10:
        diag = {q, q, m1, m1 * q.inverse()};
        p[0][1] = q.inverse();
        p[1][2] = q.inverse();
        p[2][3] = m1 * q;
        break;
    default: break;
    }
    return BiHom::from_products(diag, p);
}

}  // namespace gqg
