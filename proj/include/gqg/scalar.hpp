#pragma once

// Exact arithmetic in the multiplicative group generated by a primitive K-th
// root of unity zeta and two independent generic parameters q and r.
// Every element is zeta^a q^e r^f with a reduced mod K; no floating point.

#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gqg/errors.hpp"

namespace gqg {

class Monomial {
public:
    Monomial() = default;
    Monomial(std::int64_t torsion_order, std::int64_t zeta, std::int64_t q, std::int64_t r)
        : k_(torsion_order), zeta_(zeta), q_(q), r_(r)
    {
        if (k_ < 1) throw InvalidArgument("torsion order must be positive");
        zeta_ = ((zeta_ % k_) + k_) % k_;
    }

    static Monomial one(std::int64_t k) { return {k, 0, 0, 0}; }
    static Monomial zeta_power(std::int64_t k, std::int64_t a) { return {k, a, 0, 0}; }
    static Monomial q_power(std::int64_t k, std::int64_t e) { return {k, 0, e, 0}; }
    static Monomial r_power(std::int64_t k, std::int64_t f) { return {k, 0, 0, f}; }

    // -1 = zeta^(K/2); needs K even.
    static Monomial minus_one(std::int64_t k)
    {
        if (k % 2 != 0) throw InvalidArgument("-1 needs an even torsion order, got K=" + std::to_string(k));
        return {k, k / 2, 0, 0};
    }

    std::int64_t torsion_order() const { return k_; }
    std::int64_t zeta_exp() const { return zeta_; }
    std::int64_t q_exp() const { return q_; }
    std::int64_t r_exp() const { return r_; }

    bool is_one() const { return zeta_ == 0 && q_ == 0 && r_ == 0; }
    bool is_torsion() const { return q_ == 0 && r_ == 0; }

    Monomial inverse() const { return {k_, -zeta_, -q_, -r_}; }

    Monomial pow(std::int64_t n) const
    {
        const std::int64_t a = static_cast<std::int64_t>((static_cast<__int128>(zeta_) * n) % k_);
        return {k_, a, q_ * n, r_ * n};
    }

    friend Monomial operator*(const Monomial& x, const Monomial& y)
    {
        check_same(x, y);
        return {x.k_, x.zeta_ + y.zeta_, x.q_ + y.q_, x.r_ + y.r_};
    }
    friend Monomial operator/(const Monomial& x, const Monomial& y) { return x * y.inverse(); }
    Monomial& operator*=(const Monomial& y) { return *this = *this * y; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    static void check_same(const Monomial& x, const Monomial& y)
    {
        if (x.k_ != y.k_)
            throw TorsionMismatch("torsion orders differ: " + std::to_string(x.k_) + " vs " +
                                  std::to_string(y.k_));
    }

private:
    std::int64_t k_ = 1;
    std::int64_t zeta_ = 0;
    std::int64_t q_ = 0;
    std::int64_t r_ = 0;
};

// Multiplicative order; nullopt means infinite order.
inline std::optional<std::int64_t> finite_order(const Monomial& x)
{
    if (!x.is_torsion()) return std::nullopt;
    return x.torsion_order() / std::gcd(x.torsion_order(), x.zeta_exp());
}

inline bool is_generic(const Monomial& x) { return !finite_order(x).has_value(); }

// (m)_t = 0  iff  m = 0, or t != 1 and t^m = 1.
inline bool qnum_is_zero(std::int64_t m, const Monomial& t)
{
    if (m < 0) throw InvalidArgument("qnum_is_zero: m must be non-negative");
    if (m == 0) return true;
    return !t.is_one() && t.pow(m).is_one();
}

// (m; t1, t2) = 0  iff  t1^(m-1) t2 = 1.
inline bool pairnum_is_zero(std::int64_t m, const Monomial& t1, const Monomial& t2)
{
    if (m < 1) throw InvalidArgument("pairnum_is_zero: m must be positive");
    return (t1.pow(m - 1) * t2).is_one();
}

// Smallest m >= 0 with a^m = b, or nullopt.
inline std::optional<std::int64_t> discrete_log(const Monomial& a, const Monomial& b)
{
    Monomial::check_same(a, b);
    const std::int64_t k = a.torsion_order();
    if (!a.is_torsion()) {
        // the free part fixes m uniquely
        const bool by_q = a.q_exp() != 0;
        const std::int64_t num = by_q ? b.q_exp() : b.r_exp();
        const std::int64_t den = by_q ? a.q_exp() : a.r_exp();
        if (num % den != 0) return std::nullopt;
        const std::int64_t m = num / den;
        if (m < 0) return std::nullopt;
        if (a.pow(m) != b) return std::nullopt;
        return m;
    }
    if (!b.is_torsion()) return std::nullopt;
    const std::int64_t d = *finite_order(a);
    for (std::int64_t m = 0; m < d; ++m) {
        if ((a.zeta_exp() * m) % k == b.zeta_exp()) return m;
    }
    return std::nullopt;
}

// The unique z in Z with v^z = t, for v of infinite order.
inline std::optional<std::int64_t> exponent_solve(const Monomial& v, const Monomial& t)
{
    Monomial::check_same(v, t);
    if (v.is_torsion()) throw InvalidArgument("exponent_solve: base must have infinite order");
    const bool by_q = v.q_exp() != 0;
    const std::int64_t num = by_q ? t.q_exp() : t.r_exp();
    const std::int64_t den = by_q ? v.q_exp() : v.r_exp();
    if (num % den != 0) return std::nullopt;
    const std::int64_t z = num / den;
    if (v.pow(z) != t) return std::nullopt;
    return z;
}

// All x with x^e = t, e >= 1.
inline std::vector<Monomial> roots(const Monomial& t, std::int64_t e)
{
    if (e < 1) throw InvalidArgument("roots: exponent must be positive");
    std::vector<Monomial> out;
    if (t.q_exp() % e != 0 || t.r_exp() % e != 0) return out;
    const std::int64_t k = t.torsion_order();
    for (std::int64_t a = 0; a < k; ++a) {
        if ((a * e - t.zeta_exp()) % k == 0)
            out.emplace_back(k, a, t.q_exp() / e, t.r_exp() / e);
    }
    return out;
}

inline std::string to_string(const Monomial& x)
{
    std::ostringstream os;
    bool first = true;
    auto part = [&](char sym, std::int64_t e) {
        if (e == 0) return;
        if (!first) os << ' ';
        first = false;
        os << sym << '^' << e;
    };
    part('z', x.zeta_exp());
    part('q', x.q_exp());
    part('r', x.r_exp());
    return first ? std::string("1") : os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Monomial& x) { return os << to_string(x); }

// Accepts the text form produced by to_string plus products such as
// "-q^-1", "z q", "q^2*r". A leading '-' multiplies by zeta^(K/2).
inline Monomial parse_monomial(const std::string& text, std::int64_t k)
{
    Monomial acc = Monomial::one(k);
    std::string s;
    for (char c : text) s += (c == '*') ? ' ' : c;
    std::istringstream is(s);
    std::string tok;
    bool any = false;
    while (is >> tok) {
        any = true;
        if (tok[0] == '-') {
            acc *= Monomial::minus_one(k);
            tok.erase(0, 1);
            if (tok.empty()) continue;
        }
        if (tok == "1") continue;
        const char sym = tok[0];
        std::int64_t e = 1;
        if (tok.size() > 1) {
            if (tok[1] != '^' || tok.size() < 3) throw ParseError("bad monomial token '" + tok + "'");
            std::size_t used = 0;
            try {
                e = std::stoll(tok.substr(2), &used);
            } catch (const std::exception&) {
                throw ParseError("bad exponent in '" + tok + "'");
            }
            if (used != tok.size() - 2) throw ParseError("bad exponent in '" + tok + "'");
        }
        switch (sym) {
        case 'z': acc *= Monomial::zeta_power(k, e); break;
        case 'q': acc *= Monomial::q_power(k, e); break;
        case 'r': acc *= Monomial::r_power(k, e); break;
        default: throw ParseError("unknown symbol in '" + tok + "'");
        }
    }
    if (!any) throw ParseError("empty monomial");
    return acc;
}

inline Monomial product(const std::vector<Monomial>& xs, std::int64_t k)
{
    Monomial acc = Monomial::one(k);
    for (const auto& x : xs) acc *= x;
    return acc;
}

}  // namespace gqg
