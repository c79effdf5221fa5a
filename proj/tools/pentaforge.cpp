#include "CLI11.hpp"
#include "pentaforge/cliquewidth.hpp"
#include "pentaforge/coloring.hpp"
#include "pentaforge/families.hpp"
#include "pentaforge/io.hpp"
#include "pentaforge/recognizer.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <optional>

using namespace pentaforge;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kNegative = 1, kInput = 2, kInternal = 3 };

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string stem_of(const std::string& path) {
    auto slash = path.find_last_of('/');
    auto dot = path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path;
    return path.substr(0, dot);
}

std::optional<std::uint64_t> resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return flag;
    if (const char* env = std::getenv("PENTAFORGE_SEED")) {
        try {
            std::size_t used = 0;
            auto v = std::stoull(env, &used);
            if (used == std::string(env).size()) return v;
        } catch (const std::exception&) {
        }
        throw InputError(std::string("PENTAFORGE_SEED is not an unsigned integer: '") + env + "'");
    }
    return std::nullopt;
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

Graph load(const std::string& path) {
    try {
        return read_graph_file(path);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
}

std::string render_graph(const Graph& g, const std::string& format, const std::string& comment,
                         const json& extra) {
    if (format == "json") {
        json j = graph_to_json(g);
        for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
        return j.dump() + "\n";
    }
    return format_graph_text(g, comment);
}

struct GenOptions {
    std::string tag;
    int budget = 20;
    int t = 0;
    int length = 5;
    std::optional<std::uint64_t> seed;
    int count = 1;
    std::string format = "text";
    std::string out;
    std::string dot;
};

struct Instance {
    Graph graph;
    std::optional<Certificate> cert;
    std::optional<std::vector<VertexSet>> parts;
};

Instance generate(const GenOptions& o, Rng* rng) {
    if (o.tag.rfind("base:", 0) == 0) {
        const auto* b = find_base(o.tag.substr(5));
        if (!b) throw FamilyError("unknown base '" + o.tag.substr(5) + "'");
        ThickenedCore core{b->name, {}};
        for (int v = 0; v < b->graph.n(); ++v) core.classes.push_back({v});
        return {b->graph, Certificate{{}, core}, std::nullopt};
    }
    if (o.tag == "ring") {
        if (o.length < 4) throw FamilyError("ring length must be at least 4");
        auto r = random_ring(o.length, o.budget, *rng);
        return {r.graph, std::nullopt, r.parts};
    }
    if (o.tag == "pentagon" && o.t) {
        Rng fixed(0);
        auto g = random_member("pentagon", std::max(o.budget, 2 * o.t + 1), fixed, o.t);
        return {g.graph, g.cert, std::nullopt};
    }
    auto g = random_member(o.tag, o.budget, *rng, o.t);
    return {g.graph, g.cert, std::nullopt};
}

bool needs_seed(const GenOptions& o) { return o.tag.rfind("base:", 0) != 0 && !(o.tag == "pentagon" && o.t); }

int cmd_gen(const GenOptions& o) {
    static const std::vector<std::string> tags = {"pentagon", "basket",    "villa",  "mansion",
                                                  "crown",    "ring",      "hyperhole", "thicken"};
    if (o.tag.rfind("base:", 0) != 0 && std::find(tags.begin(), tags.end(), o.tag) == tags.end())
        throw FamilyError("unknown family tag '" + o.tag + "'");
    if (o.format != "text" && o.format != "json") throw InputError("format must be text or json");
    if (o.count < 1) throw InputError("count must be positive");
    auto seed = resolve_seed(o.seed);
    if (needs_seed(o) && !seed) throw InputError("a seed is required: pass --seed or set PENTAFORGE_SEED");
    Rng rng(seed.value_or(0));

    auto seed_json = [&]() -> json { return seed ? json(*seed) : json(nullptr); };
    std::string comment = "pentaforge gen " + o.tag + (seed ? " seed " + std::to_string(*seed) : "");

    if (o.count > 1) {
        std::string lines;
        for (int i = 0; i < o.count; ++i) {
            auto inst = generate(o, &rng);
            json j{{"index", i}, {"seed", seed_json()}, {"family", o.tag}, {"graph", graph_to_json(inst.graph)}};
            if (inst.cert) j["cert"] = certificate_to_json(*inst.cert);
            if (inst.parts) j["parts"] = *inst.parts;
            lines += j.dump() + "\n";
        }
        if (o.out.empty()) std::cout << lines;
        else write_file(o.out, lines);
        return kOk;
    }

    auto inst = generate(o, &rng);
    json extra{{"seed", seed_json()}, {"family", o.tag}};
    std::string text = render_graph(inst.graph, o.format, comment, extra);
    if (o.out.empty()) {
        std::cout << text;
        if (inst.cert) {
            json c = certificate_to_json(*inst.cert);
            c["seed"] = seed_json();
            std::cerr << c.dump() << '\n';
        }
    } else {
        write_file(o.out, text);
        json summary{{"seed", seed_json()}, {"family", o.tag}, {"n", inst.graph.n()}, {"graph", o.out}};
        if (inst.cert) {
            json c = certificate_to_json(*inst.cert);
            c["seed"] = seed_json();
            std::string path = stem_of(o.out) + ".cert.json";
            write_file(path, c.dump(2) + "\n");
            summary["cert"] = path;
        }
        if (inst.parts) {
            json p{{"seed", seed_json()}, {"parts", *inst.parts}};
            std::string path = stem_of(o.out) + ".parts.json";
            write_file(path, p.dump(2) + "\n");
            summary["parts"] = path;
        }
        emit(summary);
    }
    if (!o.dot.empty()) write_file(o.dot, to_dot(inst.graph));
    return kOk;
}

int cmd_check(const std::string& path, const std::string& dot) {
    Graph g = load(path);
    auto profile = forbidden_profile(g);
    json j{{"n", g.n()}, {"profile", profile_to_json(profile)}, {"simplicial", simplicial_vertices(g)},
           {"universal", universal_vertices(g)}};
    emit(j);
    if (!dot.empty()) write_file(dot, to_dot(g));
    return profile.in_class ? kOk : kNegative;
}

int cmd_classify(const std::string& path, const std::string& out) {
    Graph g = load(path);
    auto outcome = classify(g);
    emit(outcome_to_json(outcome));
    if (const auto* in = std::get_if<InClassNoSimplicial>(&outcome)) {
        if (!out.empty()) write_file(out, certificate_to_json(in->cert).dump(2) + "\n");
        return kOk;
    }
    return std::holds_alternative<NotInClass>(outcome) ? kNegative : kOk;
}

int cmd_cwd(const std::string& path) {
    Graph g = load(path);
    auto r = expr_for(g);
    if (g.n() == 0) {
        emit(json{{"width", 0}, {"expr", nullptr}, {"verified", true}});
        return kOk;
    }
    if (!r.expr) {
        emit(outcome_to_json(r.outcome));
        return kNegative;
    }
    VertexSet all(g.n());
    std::iota(all.begin(), all.end(), 0);
    bool verified = matches_induced(eval(r.expr), g, all);
    emit(json{{"width", width(r.expr)}, {"expr", to_text(r.expr)}, {"verified", verified}});
    return verified ? kOk : kInternal;
}

int cmd_color(const std::string& path, std::optional<int> k) {
    Graph g = load(path);
    try {
        auto r = chromatic_structured(g);
        if (!is_proper_coloring(g, r.assignment, r.chi)) throw InternalContradiction("coloring is not proper");
        if (!k) {
            emit(coloring_to_json(r));
            return kOk;
        }
        bool ok = r.chi <= *k;
        json j{{"k", *k}, {"colorable", ok}, {"chi", r.chi}};
        if (ok) j["assignment"] = coloring_to_json(r)["assignment"];
        emit(j);
        return ok ? kOk : kNegative;
    } catch (const NotInClassError& e) {
        emit(json{{"outcome", "not_in_class"}, {"pattern", pattern_name(e.pattern)}, {"witness", e.witness}});
        return kNegative;
    }
}

int cmd_verify(const std::string& graph_path, const std::string& cert_path) {
    Graph g = load(graph_path);
    Certificate cert;
    try {
        cert = certificate_from_json(nlohmann::json::parse(read_file(cert_path)));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("certificate: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("certificate: ") + e.what());
    }
    auto rep = verify_certificate(g, cert);
    emit(json{{"ok", rep.ok}, {"kind", core_kind(cert.core)}, {"failures", rep.failures}});
    return rep.ok ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generate, recognize, and color (2P3, C4, C6)-free graphs"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* g = app.add_subcommand("gen", "Generate a family member");
    g->add_option("family", gen.tag,
                  "pentagon | basket | villa | mansion | crown | ring | hyperhole | thicken | base:<name>")
        ->required();
    g->add_option("--budget", gen.budget, "Maximum number of vertices")->check(CLI::PositiveNumber);
    g->add_option("--t", gen.t, "Number of pairs (pentagon, villa, mansion)")->check(CLI::PositiveNumber);
    g->add_option("--length", gen.length, "Ring length");
    g->add_option("--seed", gen.seed, "PRNG seed (falls back to PENTAFORGE_SEED)");
    g->add_option("--count", gen.count, "Batch size; emits JSON lines");
    g->add_option("--format", gen.format, "Graph output format")->check(CLI::IsMember({"text", "json"}));
    g->add_option("-o,--output", gen.out, "Graph output path; the certificate goes to <stem>.cert.json");
    g->add_option("--dot", gen.dot, "Also write Graphviz DOT here");

    std::string path, second, out, dot;
    std::optional<int> k;
    auto* c = app.add_subcommand("check", "Forbidden-pattern profile");
    c->add_option("graph", path)->required();
    c->add_option("--dot", dot, "Also write Graphviz DOT here");
    auto* cl = app.add_subcommand("classify", "Structure certificate or obstruction");
    cl->add_option("graph", path)->required();
    cl->add_option("-o,--output", out, "Write the certificate here");
    auto* cw = app.add_subcommand("cwd", "Bounded-width k-expression");
    cw->add_option("graph", path)->required();
    auto* co = app.add_subcommand("color", "Chromatic number with a witness");
    co->add_option("graph", path)->required();
    co->add_option("--k", k, "Decide k-colorability instead")->check(CLI::NonNegativeNumber);
    auto* ve = app.add_subcommand("verify", "Check a certificate against a graph");
    ve->add_option("graph", path)->required();
    ve->add_option("cert", second)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInput;
    }

    try {
        if (*g) return cmd_gen(gen);
        if (*c) return cmd_check(path, dot);
        if (*cl) return cmd_classify(path, out);
        if (*cw) return cmd_cwd(path);
        if (*co) return cmd_color(path, k);
        if (*ve) return cmd_verify(path, second);
    } catch (const InternalContradiction& e) {
        std::cerr << "internal contradiction: " << e.what() << '\n';
        return kInternal;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInput;
    }
    return kInput;
}
