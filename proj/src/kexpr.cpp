#include "pentaforge/kexpr.hpp"

#include "pentaforge/io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <unordered_set>

namespace pentaforge {

namespace {

bool valid_name(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    });
}

KExpr make(KNode node) { return std::make_shared<const KNode>(std::move(node)); }

void require_label(int x) {
    if (x < 1) throw KExprError("labels must be positive, got " + std::to_string(x));
}

}  // namespace

KExpr k_intro(int label, std::string name) {
    require_label(label);
    if (!valid_name(name)) throw KExprError("invalid vertex name '" + name + "'");
    return make({KOp::Intro, label, 0, std::move(name), nullptr, nullptr});
}

KExpr k_union(KExpr l, KExpr r) {
    if (!l || !r) throw KExprError("union of an empty expression");
    return make({KOp::Union, 0, 0, {}, std::move(l), std::move(r)});
}

KExpr k_join(int i, int j, KExpr e) {
    require_label(i);
    require_label(j);
    if (i == j) throw KExprError("join needs two distinct labels");
    if (!e) throw KExprError("join of an empty expression");
    return make({KOp::Join, i, j, {}, std::move(e), nullptr});
}

KExpr k_rename(int from, int to, KExpr e) {
    require_label(from);
    require_label(to);
    if (from == to) throw KExprError("rename needs two distinct labels");
    if (!e) throw KExprError("rename of an empty expression");
    return make({KOp::Rename, from, to, {}, std::move(e), nullptr});
}

bool same_tree(const KExpr& x, const KExpr& y) {
    if (x == y) return true;
    if (!x || !y) return false;
    if (x->op != y->op || x->a != y->a || x->b != y->b || x->name != y->name) return false;
    return same_tree(x->left, y->left) && same_tree(x->right, y->right);
}

std::size_t node_count(const KExpr& e) {
    if (!e) return 0;
    return 1 + node_count(e->left) + node_count(e->right);
}

namespace {

void emit(const KExpr& e, std::string& out) {
    switch (e->op) {
        case KOp::Intro:
            out += "(v " + std::to_string(e->a) + ' ' + e->name + ')';
            break;
        case KOp::Union:
            out += "(u ";
            emit(e->left, out);
            out += ' ';
            emit(e->right, out);
            out += ')';
            break;
        case KOp::Join:
        case KOp::Rename:
            out += e->op == KOp::Join ? "(j " : "(r ";
            out += std::to_string(e->a) + ' ' + std::to_string(e->b) + ' ';
            emit(e->left, out);
            out += ')';
            break;
    }
}

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    KExpr parse_all() {
        skip_ws();
        KExpr e = expr();
        skip_ws();
        if (pos_ < s_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    std::unordered_set<std::string> names_;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }
    [[noreturn]] void fail_at(const std::string& msg, int line, int col) const { throw ParseError(msg, line, col); }

    static bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
    static bool is_word(char c) { return valid_name(std::string_view(&c, 1)); }

    void advance() {
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < s_.size() && is_ws(s_[pos_])) advance();
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= s_.size()) fail(std::string("expected '") + c + "', got end of input");
        if (s_[pos_] != c) fail(std::string("expected '") + c + "', got '" + s_[pos_] + "'");
        advance();
    }

    // A maximal run of name characters; empty if none.
    std::string_view word() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && is_word(s_[pos_])) advance();
        return s_.substr(start, pos_ - start);
    }

    void need_separator() {
        if (pos_ >= s_.size()) fail("unexpected end of input");
        if (!is_ws(s_[pos_])) fail(std::string("expected whitespace, got '") + s_[pos_] + "'");
        skip_ws();
    }

    int integer() {
        need_separator();
        int line = line_, col = col_;
        auto w = word();
        if (w.empty()) {
            if (pos_ >= s_.size()) fail("expected a label, got end of input");
            fail(std::string("expected a label, got '") + s_[pos_] + "'");
        }
        int v = 0;
        auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
        if (ec != std::errc() || p != w.data() + w.size() || v < 1)
            fail_at("expected a positive integer label, got '" + std::string(w) + "'", line, col);
        return v;
    }

    KExpr expr() {
        skip_ws();
        int line = line_, col = col_;
        expect('(');
        skip_ws();
        int op_line = line_, op_col = col_;
        auto op = word();
        if (op.empty()) {
            if (pos_ >= s_.size()) fail("expected an operation, got end of input");
            fail(std::string("expected an operation, got '") + s_[pos_] + "'");
        }
        KExpr out;
        if (op == "v") {
            int label = integer();
            need_separator();
            int nl = line_, nc = col_;
            auto name = word();
            if (name.empty()) {
                if (pos_ >= s_.size()) fail("expected a vertex name, got end of input");
                fail(std::string("expected a vertex name, got '") + s_[pos_] + "'");
            }
            if (!names_.insert(std::string(name)).second)
                fail_at("duplicate vertex name '" + std::string(name) + "'", nl, nc);
            out = k_intro(label, std::string(name));
        } else if (op == "u") {
            KExpr l = expr();
            KExpr r = expr();
            out = k_union(std::move(l), std::move(r));
        } else if (op == "j" || op == "r") {
            int i = integer();
            int j = integer();
            if (i == j) fail_at(std::string(op == "j" ? "join" : "rename") + " needs two distinct labels", op_line, op_col);
            KExpr e = expr();
            out = op == "j" ? k_join(i, j, std::move(e)) : k_rename(i, j, std::move(e));
        } else {
            fail_at("unknown operation '" + std::string(op) + "'", op_line, op_col);
        }
        skip_ws();
        if (pos_ >= s_.size()) fail_at("unclosed '(' (end of input)", line, col);
        expect(')');
        return out;
    }
};

}  // namespace

std::string to_text(const KExpr& e) {
    std::string out;
    emit(e, out);
    return out;
}

KExpr parse_kexpr(std::string_view text) { return Parser(text).parse_all(); }

namespace {

struct Evaluator {
    std::vector<std::string> names;
    std::vector<int> labels;
    std::vector<Edge> edges;
    std::unordered_set<std::string> seen;

    // Returns the vertices created by e.
    VertexSet run(const KExpr& e) {
        switch (e->op) {
            case KOp::Intro: {
                if (!seen.insert(e->name).second) throw KExprError("duplicate vertex name '" + e->name + "'");
                names.push_back(e->name);
                labels.push_back(e->a);
                return {static_cast<int>(names.size()) - 1};
            }
            case KOp::Union: {
                VertexSet l = run(e->left);
                VertexSet r = run(e->right);
                l.insert(l.end(), r.begin(), r.end());
                return l;
            }
            case KOp::Join: {
                VertexSet vs = run(e->left);
                VertexSet xi, xj;
                for (int v : vs) {
                    if (labels[v] == e->a) xi.push_back(v);
                    else if (labels[v] == e->b) xj.push_back(v);
                }
                for (int x : xi)
                    for (int y : xj) edges.emplace_back(x, y);
                return vs;
            }
            case KOp::Rename: {
                VertexSet vs = run(e->left);
                for (int v : vs)
                    if (labels[v] == e->a) labels[v] = e->b;
                return vs;
            }
        }
        return {};
    }
};

void collect_labels(const KExpr& e, std::set<int>& out) {
    switch (e->op) {
        case KOp::Intro:
            out.insert(e->a);
            return;
        case KOp::Union:
            collect_labels(e->left, out);
            collect_labels(e->right, out);
            return;
        case KOp::Join:
        case KOp::Rename:
            out.insert(e->a);
            out.insert(e->b);
            collect_labels(e->left, out);
            return;
    }
}

std::set<int> present(const KExpr& e) {
    switch (e->op) {
        case KOp::Intro:
            return {e->a};
        case KOp::Union: {
            auto l = present(e->left);
            auto r = present(e->right);
            l.insert(r.begin(), r.end());
            return l;
        }
        case KOp::Join:
            return present(e->left);
        case KOp::Rename: {
            auto s = present(e->left);
            if (s.erase(e->a)) s.insert(e->b);
            return s;
        }
    }
    return {};
}

KExpr prune(const KExpr& e, std::set<int>& labels) {
    switch (e->op) {
        case KOp::Intro:
            labels = {e->a};
            return e;
        case KOp::Union: {
            std::set<int> r;
            KExpr l = prune(e->left, labels);
            KExpr rr = prune(e->right, r);
            labels.insert(r.begin(), r.end());
            if (l == e->left && rr == e->right) return e;
            return k_union(std::move(l), std::move(rr));
        }
        case KOp::Join: {
            KExpr c = prune(e->left, labels);
            if (!labels.count(e->a) || !labels.count(e->b)) return c;
            if (c == e->left) return e;
            return k_join(e->a, e->b, std::move(c));
        }
        case KOp::Rename: {
            KExpr c = prune(e->left, labels);
            if (!labels.erase(e->a)) return c;
            labels.insert(e->b);
            if (c == e->left) return e;
            return k_rename(e->a, e->b, std::move(c));
        }
    }
    return e;
}

}  // namespace

LabeledGraph eval(const KExpr& e) {
    if (!e) throw KExprError("empty expression");
    Evaluator ev;
    ev.run(e);
    int n = static_cast<int>(ev.names.size());
    return {Graph::from_edge_list(n, ev.edges), std::move(ev.names), std::move(ev.labels)};
}

int width(const KExpr& e) {
    if (!e) return 0;
    std::set<int> s;
    collect_labels(e, s);
    return static_cast<int>(s.size());
}

std::vector<int> root_labels(const KExpr& e) {
    if (!e) return {};
    auto s = present(e);
    return {s.begin(), s.end()};
}

KExpr relabel_labels(const KExpr& e, const std::map<int, int>& perm) {
    std::set<int> targets;
    for (auto [from, to] : perm)
        if (!targets.insert(to).second) throw KExprError("label map is not injective");
    auto f = [&](int x) {
        auto it = perm.find(x);
        return it == perm.end() ? x : it->second;
    };
    auto rec = [&](auto&& self, const KExpr& x) -> KExpr {
        switch (x->op) {
            case KOp::Intro:
                return k_intro(f(x->a), x->name);
            case KOp::Union:
                return k_union(self(self, x->left), self(self, x->right));
            case KOp::Join:
                return k_join(f(x->a), f(x->b), self(self, x->left));
            case KOp::Rename:
                return k_rename(f(x->a), f(x->b), self(self, x->left));
        }
        return x;
    };
    return rec(rec, e);
}

KExpr prune_noops(const KExpr& e) {
    std::set<int> labels;
    return prune(e, labels);
}

bool matches_induced(const LabeledGraph& lg, const Graph& g, const VertexSet& vs) {
    int m = lg.graph.n();
    if (m != static_cast<int>(vs.size())) return false;
    std::vector<int> host(m);
    Row seen = g.empty_set();
    Row want = to_row(g.n(), vs);
    for (int k = 0; k < m; ++k) {
        const auto& s = lg.names[k];
        int v = -1;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || p != s.data() + s.size() || v < 0 || v >= g.n()) return false;
        if (!want.test(v) || seen.test(v)) return false;
        seen.set(v);
        host[k] = v;
    }
    for (int x = 0; x < m; ++x)
        for (int y = x + 1; y < m; ++y)
            if (lg.graph.adjacent(x, y) != g.adjacent(host[x], host[y])) return false;
    return true;
}

}  // namespace pentaforge
