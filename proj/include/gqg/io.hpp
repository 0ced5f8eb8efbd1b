#pragma once

// JSON documents for monomials, bicharacters, family shorthands, weights and
// the reports of every operation. Needs nlohmann/json.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gqg/bihom.hpp"
#include "gqg/cartan.hpp"
#include "gqg/classify.hpp"
#include "gqg/errors.hpp"
#include "gqg/groupoid.hpp"
#include "gqg/highestweight.hpp"
#include "gqg/scalar.hpp"

namespace gqg::io {

using json = nlohmann::json;

inline json to_json(const Monomial& x) { return {{"zeta", x.zeta_exp()}, {"q", x.q_exp()}, {"r", x.r_exp()}}; }

// Object form {"zeta": a, "q": e, "r": f} (missing keys are 0) or text form.
inline Monomial monomial_from_json(const json& j, std::int64_t k)
{
    if (j.is_string()) return parse_monomial(j.get<std::string>(), k);
    if (j.is_number_integer() && j.get<std::int64_t>() == 1) return Monomial::one(k);
    if (!j.is_object()) throw ParseError("monomial must be an object or a string");
    for (const auto& [key, _] : j.items())
        if (key != "zeta" && key != "q" && key != "r") throw ParseError("unknown monomial key '" + key + "'");
    try {
        return Monomial(k, j.value("zeta", std::int64_t{0}), j.value("q", std::int64_t{0}), j.value("r", std::int64_t{0}));
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad monomial: ") + e.what());
    }
}

inline json to_json(const std::vector<Monomial>& xs)
{
    json a = json::array();
    for (const auto& x : xs) a.push_back(to_json(x));
    return a;
}

inline std::vector<std::string> to_strings(const std::vector<Monomial>& xs)
{
    std::vector<std::string> out;
    for (const auto& x : xs) out.push_back(to_string(x));
    return out;
}

inline WeightVector weight_from_json(const json& j, std::int64_t k)
{
    if (!j.is_array()) throw ParseError("weight must be a JSON array");
    WeightVector w;
    for (const auto& x : j) w.push_back(monomial_from_json(x, k));
    return w;
}

inline json to_json(const BiHom& chi)
{
    json rows = json::array();
    for (const auto& row : chi.matrix()) rows.push_back(to_json(row));
    return {{"torsion_order", chi.torsion_order()}, {"rank", chi.rank()}, {"matrix", rows}};
}

inline BiHom bihom_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("torsion_order") || !j.contains("matrix"))
        throw ParseError("bicharacter needs torsion_order and matrix");
    const auto k = j.at("torsion_order").get<std::int64_t>();
    std::vector<std::vector<Monomial>> m;
    for (const auto& row : j.at("matrix")) {
        std::vector<Monomial> r;
        for (const auto& x : row) r.push_back(monomial_from_json(x, k));
        m.push_back(std::move(r));
    }
    if (j.contains("rank") && j.at("rank").get<std::size_t>() != m.size())
        throw ParseError("rank does not match the matrix");
    return BiHom(k, std::move(m));
}

inline json to_json(const FamilySpec& s)
{
    json j{{"family", s.b}, {"N", s.N}, {"m", s.m}, {"torsion_order", s.torsion_order}};
    json p = json::object();
    if (s.params.q) p["q"] = to_json(*s.params.q);
    if (s.params.r) p["r"] = to_json(*s.params.r);
    if (s.params.zeta) p["zeta"] = to_json(*s.params.zeta);
    j["params"] = p;
    if (s.cartan) j["cartan"] = {{"label", s.cartan->label}, {"a", s.cartan->a}, {"d", s.cartan->d}};
    return j;
}

inline FamilySpec family_from_json(const json& j, std::int64_t default_k = 6)
{
    if (!j.is_object() || !j.contains("family")) throw ParseError("family shorthand needs a 'family' key");
    FamilySpec s;
    s.b = j.at("family").get<int>();
    s.N = j.value("N", 0);
    s.m = j.value("m", 0);
    s.torsion_order = j.value("torsion_order", default_k);
    if (j.contains("params")) {
        const auto& p = j.at("params");
        if (p.contains("q")) s.params.q = monomial_from_json(p.at("q"), s.torsion_order);
        if (p.contains("r")) s.params.r = monomial_from_json(p.at("r"), s.torsion_order);
        if (p.contains("zeta")) s.params.zeta = monomial_from_json(p.at("zeta"), s.torsion_order);
    }
    if (j.contains("cartan_type")) s.cartan = cartan_type(j.at("cartan_type").get<std::string>());
    if (j.contains("cartan")) {
        const auto& c = j.at("cartan");
        s.cartan = CartanData{c.value("label", std::string("custom")), c.at("a").get<IntMatrix>(),
                              c.at("d").get<IntVector>()};
    }
    return validated(s);
}

inline json to_json(const CartanMatrix& c)
{
    json rows = json::array();
    for (const auto& row : c) {
        json r = json::array();
        for (const auto& x : row) r.push_back(x ? json(*x) : json("-inf"));
        rows.push_back(r);
    }
    return rows;
}

inline json to_json(const ReducedWord& w)
{
    return {{"letters", to_one_based(w.letters)},
            {"length", w.length()},
            {"roots", w.roots},
            {"diagonal", to_strings(w.diagonal)},
            {"w", w.w}};
}

inline json to_json(const WordReport& r)
{
    json j{{"ok", r.ok}, {"reason", r.reason}, {"trace", to_json(r.trace)}};
    j["failing_position"] = r.failing_position ? json(*r.failing_position + 1) : json(nullptr);
    json perm = json::array();
    for (auto p : r.permutation) perm.push_back(p + 1);
    j["permutation"] = perm;
    return j;
}

inline json key_to_json(const EquivKey& k)
{
    return {{"diagonal", to_strings(k.diagonal)}, {"products", to_strings(k.products)}};
}

inline json to_json(const WeightChain& ch)
{
    json steps = json::array();
    for (std::size_t t = 0; t < ch.steps.size(); ++t) {
        const auto& s = ch.steps[t];
        steps.push_back({{"position", t + 1},
                         {"object", key_to_json(s.object)},
                         {"letter", s.letter + 1},
                         {"h", s.h ? json(*s.h) : json("inf")},
                         {"lambda", to_strings(s.lambda)}});
    }
    return {{"steps", steps}, {"H", ch.H}, {"complete", ch.complete}, {"final_lambda", to_strings(ch.final_lambda)}};
}

inline json to_json(const SPrimeReport& r)
{
    json w = json::array();
    for (const auto& x : r.witnesses) w.push_back(x ? json(*x) : json(nullptr));
    json g = json::array();
    for (auto v : r.generic_vertices) g.push_back(v + 1);
    return {{"member", r.member}, {"generic_vertices", g}, {"witnesses", w}};
}

inline json to_json(const MembershipReport& r)
{
    json j{{"member", r.member}, {"branch", to_string(r.branch)}, {"s_prime", to_json(r.sprime)}};
    j["g"] = r.g ? json(to_string(*r.g)) : json(nullptr);
    j["z"] = r.z ? json(*r.z) : json(nullptr);
    return j;
}

inline json to_json(const TheoremReport& r, std::size_t max_listed = 20)
{
    json mm = json::array();
    for (std::size_t i = 0; i < r.mismatches.size() && i < max_listed; ++i) {
        const auto& m = r.mismatches[i];
        mm.push_back({{"lambda", to_strings(m.lambda)},
                      {"classify", m.classified.member},
                      {"branch", to_string(m.classified.branch)},
                      {"findim", m.finite_dimensional},
                      {"H", m.H}});
    }
    return {{"total", r.total},
            {"members", r.members},
            {"mismatch_count", r.mismatches.size()},
            {"overlaps", r.overlaps},
            {"word_disagreements", r.word_disagreements},
            {"ok", r.ok()},
            {"mismatches", mm}};
}

inline json to_json(const ObjectGraph& g)
{
    json objs = json::array();
    for (std::size_t c = 0; c < g.objects.size(); ++c) {
        json arrows = json::array();
        for (const auto& a : g.arrows[c]) arrows.push_back(a ? json(*a) : json(nullptr));
        objs.push_back({{"index", c},
                        {"object", key_to_json(g.objects[c].key())},
                        {"arrows", arrows},
                        {"dot", to_dot(dynkin_diagram(g.objects[c]), "object" + std::to_string(c))}});
    }
    return {{"count", g.objects.size()}, {"objects", objs}};
}

}  // namespace gqg::io
