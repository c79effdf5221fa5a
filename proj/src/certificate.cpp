#include "bits.hpp"
#include "pentaforge/certificate.hpp"

#include <algorithm>
#include <stdexcept>

namespace pentaforge {

using detail::overloaded;

namespace {

using ojson = nlohmann::ordered_json;

VertexSet read_set(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array()) throw std::invalid_argument(std::string("missing array '") + key + "'");
    VertexSet out;
    for (const auto& v : j[key]) {
        if (!v.is_number_integer()) throw std::invalid_argument(std::string("non-integer id in '") + key + "'");
        out.push_back(v.get<int>());
    }
    return out;
}

std::vector<VertexSet> read_sets(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array()) throw std::invalid_argument(std::string("missing array '") + key + "'");
    std::vector<VertexSet> out;
    for (const auto& block : j[key]) {
        if (!block.is_array()) throw std::invalid_argument(std::string("'") + key + "' must hold arrays");
        VertexSet s;
        for (const auto& v : block) {
            if (!v.is_number_integer()) throw std::invalid_argument(std::string("non-integer id in '") + key + "'");
            s.push_back(v.get<int>());
        }
        out.push_back(std::move(s));
    }
    return out;
}

int read_index(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) throw std::invalid_argument(std::string("missing integer '") + key + "'");
    return j[key].get<int>();
}

template <std::size_t N>
std::array<VertexSet, N> to_array(const std::vector<VertexSet>& v, const char* key) {
    if (v.size() != N) throw std::invalid_argument(std::string("'") + key + "' has wrong number of blocks");
    std::array<VertexSet, N> out;
    std::copy(v.begin(), v.end(), out.begin());
    return out;
}

VertexSet map_set(const VertexSet& s, const std::vector<int>& m) {
    VertexSet out;
    for (int v : s) out.push_back(m.at(v));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> map_sets(const std::vector<VertexSet>& ss, const std::vector<int>& m) {
    std::vector<VertexSet> out;
    for (const auto& s : ss) out.push_back(map_set(s, m));
    return out;
}

}  // namespace

std::string core_kind(const Core& core) {
    return std::visit(overloaded{[](const VillaCore&) { return std::string("villa"); },
                                 [](const MansionCore&) { return std::string("mansion"); },
                                 [](const BasketCore&) { return std::string("basket"); },
                                 [](const CrownCore&) { return std::string("crown"); },
                                 [](const ThickenedCore&) { return std::string("thickened"); },
                                 [](const CompleteCore&) { return std::string("complete"); }},
                      core);
}

VertexSet core_vertices(const Core& core) {
    VertexSet out;
    auto add = [&](const VertexSet& s) { out.insert(out.end(), s.begin(), s.end()); };
    std::visit(overloaded{[&](const VillaCore& c) {
                              add(c.A);
                              for (const auto& s : c.B) add(s);
                              for (const auto& s : c.C) add(s);
                          },
                          [&](const MansionCore& c) {
                              add(c.A);
                              for (const auto& s : c.B) add(s);
                              for (const auto& s : c.C) add(s);
                              add(c.F);
                              add(c.X);
                              add(c.Y);
                          },
                          [&](const BasketCore& c) {
                              add(c.A);
                              for (const auto& s : c.B) add(s);
                              for (const auto& s : c.C) add(s);
                              add(c.F);
                          },
                          [&](const CrownCore& c) {
                              for (const auto& s : c.X) add(s);
                          },
                          [&](const ThickenedCore& c) {
                              for (const auto& s : c.classes) add(s);
                          },
                          [&](const CompleteCore& c) { add(c.vertices); }},
               core);
    return out;
}

nlohmann::ordered_json certificate_to_json(const Certificate& c) {
    ojson core;
    core["kind"] = core_kind(c.core);
    std::visit(overloaded{[&](const VillaCore& v) {
                              core["t"] = v.t();
                              core["A"] = v.A;
                              core["B"] = v.B;
                              core["C"] = v.C;
                          },
                          [&](const MansionCore& v) {
                              core["t"] = v.t();
                              core["A"] = v.A;
                              core["B"] = v.B;
                              core["C"] = v.C;
                              core["F"] = v.F;
                              core["X"] = v.X;
                              core["Y"] = v.Y;
                              core["jstar"] = v.jstar;
                          },
                          [&](const BasketCore& v) {
                              core["A"] = v.A;
                              core["B"] = v.B;
                              core["C"] = v.C;
                              core["F"] = v.F;
                              core["istar"] = v.istar;
                              core["jstar"] = v.jstar;
                          },
                          [&](const CrownCore& v) {
                              core["X"] = v.X;
                              core["istar"] = v.istar;
                          },
                          [&](const ThickenedCore& v) {
                              core["base"] = v.base;
                              core["classes"] = v.classes;
                          },
                          [&](const CompleteCore& v) { core["vertices"] = v.vertices; }},
               c.core);
    ojson j;
    j["universals"] = c.universals;
    j["core"] = core;
    return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("core") || !j["core"].is_object())
        throw std::invalid_argument("certificate needs an object 'core'");
    Certificate c;
    c.universals = read_set(j, "universals");
    const auto& k = j["core"];
    if (!k.contains("kind") || !k["kind"].is_string()) throw std::invalid_argument("core needs a string 'kind'");
    std::string kind = k["kind"].get<std::string>();
    if (kind == "villa") {
        VillaCore v;
        v.A = read_set(k, "A");
        v.B = read_sets(k, "B");
        v.C = read_sets(k, "C");
        c.core = v;
    } else if (kind == "mansion") {
        MansionCore v;
        v.A = read_set(k, "A");
        v.B = read_sets(k, "B");
        v.C = read_sets(k, "C");
        v.F = read_set(k, "F");
        v.X = read_set(k, "X");
        v.Y = read_set(k, "Y");
        v.jstar = read_index(k, "jstar");
        c.core = v;
    } else if (kind == "basket") {
        BasketCore v;
        v.A = read_set(k, "A");
        v.B = to_array<3>(read_sets(k, "B"), "B");
        v.C = to_array<3>(read_sets(k, "C"), "C");
        v.F = read_set(k, "F");
        v.istar = read_index(k, "istar");
        v.jstar = read_index(k, "jstar");
        c.core = v;
    } else if (kind == "crown") {
        CrownCore v;
        v.X = to_array<5>(read_sets(k, "X"), "X");
        v.istar = read_index(k, "istar");
        c.core = v;
    } else if (kind == "thickened") {
        ThickenedCore v;
        if (!k.contains("base") || !k["base"].is_string()) throw std::invalid_argument("thickened core needs 'base'");
        v.base = k["base"].get<std::string>();
        v.classes = read_sets(k, "classes");
        c.core = v;
    } else if (kind == "complete") {
        c.core = CompleteCore{read_set(k, "vertices")};
    } else {
        throw std::invalid_argument("unknown core kind '" + kind + "'");
    }
    return c;
}

Certificate relabel(const Certificate& c, const std::vector<int>& m) {
    Certificate out;
    out.universals = map_set(c.universals, m);
    out.core = std::visit(
        overloaded{[&](const VillaCore& v) -> Core { return VillaCore{map_set(v.A, m), map_sets(v.B, m), map_sets(v.C, m)}; },
                   [&](const MansionCore& v) -> Core {
                       return MansionCore{map_set(v.A, m), map_sets(v.B, m), map_sets(v.C, m), map_set(v.F, m),
                                          map_set(v.X, m), map_set(v.Y, m), v.jstar};
                   },
                   [&](const BasketCore& v) -> Core {
                       BasketCore b;
                       b.A = map_set(v.A, m);
                       for (int i = 0; i < 3; ++i) {
                           b.B[i] = map_set(v.B[i], m);
                           b.C[i] = map_set(v.C[i], m);
                       }
                       b.F = map_set(v.F, m);
                       b.istar = v.istar;
                       b.jstar = v.jstar;
                       return b;
                   },
                   [&](const CrownCore& v) -> Core {
                       CrownCore r;
                       for (int i = 0; i < 5; ++i) r.X[i] = map_set(v.X[i], m);
                       r.istar = v.istar;
                       return r;
                   },
                   [&](const ThickenedCore& v) -> Core { return ThickenedCore{v.base, map_sets(v.classes, m)}; },
                   [&](const CompleteCore& v) -> Core { return CompleteCore{map_set(v.vertices, m)}; }},
        c.core);
    return out;
}

}  // namespace pentaforge
