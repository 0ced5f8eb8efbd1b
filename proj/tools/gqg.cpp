// gqg: command-line front end. Exit codes: 0 ok, 1 domain or usage error,
// 2 verification mismatch.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "gqg/gqg.hpp"
#include "gqg/io.hpp"

namespace {

using gqg::io::json;

struct Session {
    std::optional<int> family;
    int N = 0;
    int m = 0;
    std::int64_t torsion = 6;
    std::vector<std::string> params;
    std::string cartan_type;
    std::string input;
    std::optional<std::size_t> max_len;
    std::size_t max_objects = gqg::default_max_objects;
    std::string format = "json";
    unsigned jobs = 1;
    std::int64_t bound = 5;
    std::size_t index = 0;
    std::string weight;
    std::string word;
    std::string terminal;
    bool builtin = false;
};

std::string slurp(const std::string& arg)
{
    if (arg.empty() || arg[0] != '@') return arg;
    std::ifstream in(arg.substr(1));
    if (!in) throw gqg::InvalidArgument("cannot read " + arg.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw gqg::ParseError(std::string("invalid JSON: ") + e.what());
    }
}

std::optional<gqg::FamilySpec> family_of(const Session& s)
{
    if (!s.input.empty()) {
        const json j = parse_json(slurp("@" + s.input));
        if (j.contains("family")) return gqg::io::family_from_json(j, s.torsion);
        return std::nullopt;
    }
    if (!s.family) return std::nullopt;
    gqg::FamilySpec f;
    f.b = *s.family;
    f.N = s.N;
    f.m = s.m;
    f.torsion_order = s.torsion;
    for (const auto& p : s.params) {
        const auto eq = p.find('=');
        if (eq == std::string::npos) throw gqg::InvalidArgument("--param expects key=value, got '" + p + "'");
        const std::string key = p.substr(0, eq);
        const gqg::Monomial v = gqg::parse_monomial(p.substr(eq + 1), s.torsion);
        if (key == "q") f.params.q = v;
        else if (key == "r") f.params.r = v;
        else if (key == "zeta") f.params.zeta = v;
        else throw gqg::InvalidArgument("unknown parameter '" + key + "'");
    }
    if (f.b == 1) {
        if (s.cartan_type.empty()) throw gqg::InvalidArgument("family 1 needs --type (e.g. A3, B2, G2)");
        f.cartan = gqg::cartan_type(s.cartan_type);
    }
    return gqg::validated(f);
}

gqg::BiHom bihom_of(const Session& s)
{
    if (auto f = family_of(s)) return gqg::make_family(*f);
    if (!s.input.empty()) return gqg::io::bihom_from_json(parse_json(slurp("@" + s.input)));
    throw gqg::InvalidArgument("give --family or --input");
}

gqg::FamilySpec require_family(const Session& s)
{
    auto f = family_of(s);
    if (!f) throw gqg::InvalidArgument("this command needs a family (--family or a family document)");
    return *f;
}

gqg::WeightVector weight_of(const Session& s, const gqg::BiHom& chi)
{
    if (s.weight.empty()) throw gqg::InvalidArgument("--weight is required");
    return gqg::io::weight_from_json(parse_json(slurp(s.weight)), chi.torsion_order());
}

std::vector<std::size_t> letters_of(const std::string& text)
{
    std::vector<int> w;
    std::string tok;
    std::stringstream ss(text);
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            w.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw gqg::ParseError("bad letter '" + tok + "'");
        }
    }
    return gqg::from_one_based(w);
}

std::vector<std::size_t> word_of(const Session& s, const gqg::BiHom& chi)
{
    if (!s.word.empty()) return letters_of(s.word);
    if (s.builtin) return gqg::builtin_word(require_family(s));
    return gqg::greedy_longest_word(chi, s.max_len).letters;
}

std::size_t index_of(const Session& s, const gqg::BiHom& chi)
{
    if (s.index < 1 || s.index > chi.rank()) throw gqg::InvalidArgument("--index must be in 1..rank");
    return s.index - 1;
}

json with_config(json body, const Session& s, const gqg::BiHom& chi)
{
    body["config"] = {{"torsion_order", chi.torsion_order()},
                      {"max_len", s.max_len.value_or(gqg::default_max_len(chi.rank()))},
                      {"max_objects", s.max_objects},
                      {"format", s.format}};
    return body;
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

int run(const std::string& cmd, const Session& s)
{
    const gqg::BiHom chi = bihom_of(s);
    if (cmd == "cartan") {
        const auto c = gqg::cartan_matrix(chi);
        if (s.format == "ascii") {
            for (const auto& row : c) {
                for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "") << gqg::to_string(row[j]);
                std::cout << '\n';
            }
            return 0;
        }
        print(with_config({{"cartan", gqg::io::to_json(c)}, {"bihom", gqg::io::to_json(chi)}}, s, chi));
        return 0;
    }
    if (cmd == "diagram") {
        const auto d = gqg::dynkin_diagram(chi);
        if (s.format == "dot") std::cout << gqg::to_dot(d);
        else if (s.format == "ascii") std::cout << gqg::to_ascii(d);
        else {
            json edges = json::array();
            for (const auto& e : d.edges) edges.push_back({{"i", e.i + 1}, {"j", e.j + 1}, {"label", gqg::to_string(e.label)}});
            print(with_config({{"vertices", gqg::io::to_strings(d.vertices)}, {"edges", edges}}, s, chi));
        }
        return 0;
    }
    if (cmd == "reflect") {
        const auto i = index_of(s, chi);
        const gqg::BiHom r = gqg::reflect_bihom(chi, i);
        if (s.format == "dot") std::cout << gqg::to_dot(gqg::dynkin_diagram(r));
        else if (s.format == "ascii") std::cout << gqg::to_ascii(gqg::dynkin_diagram(r));
        else print(with_config({{"bihom", gqg::io::to_json(r)}, {"index", i + 1}}, s, chi));
        return 0;
    }
    if (cmd == "roots") {
        const auto roots = gqg::root_system(chi, s.max_len);
        if (s.format == "ascii") {
            for (const auto& r : roots) {
                for (std::size_t j = 0; j < r.size(); ++j) std::cout << (j ? " " : "") << r[j];
                std::cout << '\n';
            }
            return 0;
        }
        print(with_config({{"roots", roots}, {"count", roots.size()}}, s, chi));
        return 0;
    }
    if (cmd == "longest") {
        const auto rw = gqg::greedy_longest_word(chi, s.max_len);
        print(with_config(gqg::io::to_json(rw), s, chi));
        return 0;
    }
    if (cmd == "objects") {
        const auto g = gqg::enumerate_objects(chi, s.max_objects);
        if (s.format == "dot") {
            for (std::size_t c = 0; c < g.objects.size(); ++c)
                std::cout << gqg::to_dot(gqg::dynkin_diagram(g.objects[c]), "object" + std::to_string(c));
            return 0;
        }
        print(with_config(gqg::io::to_json(g), s, chi));
        return 0;
    }
    if (cmd == "verify-word") {
        std::optional<std::vector<std::size_t>> terminal;
        if (!s.terminal.empty()) terminal = letters_of(s.terminal);
        const auto rep = gqg::verify_word(chi, word_of(s, chi), terminal);
        print(with_config(gqg::io::to_json(rep), s, chi));
        return rep.ok ? 0 : 2;
    }
    if (cmd == "hvalue") {
        const auto i = index_of(s, chi);
        const auto h = gqg::h_value(chi, weight_of(s, chi), i);
        print(with_config({{"index", i + 1}, {"h", h ? json(*h) : json("inf")}}, s, chi));
        return 0;
    }
    if (cmd == "chain") {
        const auto ch = gqg::weight_chain(chi, weight_of(s, chi), word_of(s, chi));
        print(with_config(gqg::io::to_json(ch), s, chi));
        return 0;
    }
    if (cmd == "findim") {
        const bool fin = gqg::is_finite_dimensional(chi, weight_of(s, chi), s.max_len);
        print(with_config({{"finite_dimensional", fin}}, s, chi));
        return 0;
    }
    if (cmd == "classify") {
        const auto fam = require_family(s);
        const auto rep = gqg::classify(fam, chi, weight_of(s, chi));
        print(with_config(gqg::io::to_json(rep), s, chi));
        return 0;
    }
    if (cmd == "verify") {
        const auto fam = require_family(s);
        const auto rep = gqg::verify_theorem(fam, {s.bound, s.jobs, s.max_len});
        print(with_config({{"family", gqg::io::to_json(fam)}, {"bound", s.bound}, {"report", gqg::io::to_json(rep)}}, s, chi));
        return rep.ok() ? 0 : 2;
    }
    throw gqg::InvalidArgument("unknown command " + cmd);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Weyl groupoid and highest weight tools for bicharacters of Drinfeld doubles"};
    app.require_subcommand(1);
    Session s;
    s.jobs = std::max(1u, std::thread::hardware_concurrency());

    const std::vector<std::pair<std::string, std::string>> commands{
        {"cartan", "Cartan matrix of chi"},
        {"diagram", "generalized Dynkin diagram"},
        {"reflect", "reflected bicharacter i |> chi"},
        {"roots", "positive roots"},
        {"longest", "greedy longest word"},
        {"objects", "objects of the Weyl groupoid up to equivalence"},
        {"verify-word", "check a word is a longest element"},
        {"hvalue", "h_i(chi, lambda)"},
        {"chain", "weight chain along a word"},
        {"findim", "finite dimensionality of L(chi, lambda)"},
        {"classify", "closed-form membership for a family"},
        {"verify", "grid check of the closed form against the weight chain"},
    };
    for (const auto& [name, desc] : commands) {
        auto* sub = app.add_subcommand(name, desc);
        sub->add_option("--family", s.family, "family index 1..10");
        sub->add_option("--N", s.N, "rank");
        sub->add_option("--m", s.m, "family parameter m");
        sub->add_option("--param", s.params, "q=..., r=..., zeta=... as monomials");
        sub->add_option("--torsion", s.torsion, "torsion order K")->check(CLI::PositiveNumber);
        sub->add_option("--type", s.cartan_type, "Cartan type for family 1 (A3, B2, ...)");
        sub->add_option("--input", s.input, "bicharacter or family JSON file");
        sub->add_option("--max-len", s.max_len, "greedy word cutoff (default 10 N^2)");
        sub->add_option("--max-objects", s.max_objects, "object enumeration cutoff");
        sub->add_option("--format", s.format, "output format")->check(CLI::IsMember({"json", "dot", "ascii"}));
        sub->add_option("--index", s.index, "1-based vertex index");
        sub->add_option("--weight", s.weight, "JSON array of monomials, or @file");
        sub->add_option("--word", s.word, "comma-separated 1-based letters");
        sub->add_flag("--builtin", s.builtin, "use the family's built-in word");
        sub->add_option("--terminal", s.terminal, "expected terminal permutation, 1-based");
        sub->add_option("--jobs", s.jobs, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--bound", s.bound, "exponent bound B of the grid");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }
    try {
        return run(app.get_subcommands().front()->get_name(), s);
    } catch (const gqg::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
