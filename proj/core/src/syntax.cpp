#include "lamlab/syntax.hpp"

#include <cctype>

namespace lamlab {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() const { return pos >= s.size(); }
    char peek() const { return pos < s.size() ? s[pos] : '\0'; }
    char peek(std::size_t ahead) const { return pos + ahead < s.size() ? s[pos + ahead] : '\0'; }
    void expect(char c, const char* what) {
        if (eof() || s[pos] != c) throw ParseError(std::string("expected ") + what, pos);
        ++pos;
    }

    std::uint32_t nat(const char* what) {
        skip_ws();
        std::size_t start = pos;
        if (eof() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw ParseError(std::string("expected ") + what, pos);
        std::uint64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
            if (v > 1'000'000'000) throw ParseError("number out of range", start);
            ++pos;
        }
        return static_cast<std::uint32_t>(v);
    }
};

bool is_var_start(char c) { return c == 'x' || c == 'y' || c == 'z'; }

VarName parse_var(Cursor& c) {
    VarName v;
    switch (c.peek()) {
        case 'x': v.base = 0; break;
        case 'y': v.base = 1; break;
        case 'z': v.base = 2; break;
        default: throw ParseError("expected a variable", c.pos);
    }
    ++c.pos;
    while (c.peek() == '\'') {
        ++v.primes;
        ++c.pos;
    }
    return v;
}

TermPtr named_term(Cursor& c);

TermPtr named_app(Cursor& c) {
    TermPtr acc;
    for (;;) {
        c.skip_ws();
        TermPtr atom;
        if (is_var_start(c.peek())) {
            atom = Term::var(parse_var(c));
        } else if (c.peek() == '(') {
            ++c.pos;
            atom = named_term(c);
            c.skip_ws();
            c.expect(')', "')'");
        } else {
            break;
        }
        acc = acc ? Term::app(std::move(acc), std::move(atom)) : atom;
    }
    if (!acc) throw ParseError("expected a term", c.pos);
    return acc;
}

TermPtr named_term(Cursor& c) {
    c.skip_ws();
    if (c.peek() != '\\') return named_app(c);
    ++c.pos;
    std::vector<VarName> binders;
    for (;;) {
        c.skip_ws();
        if (!is_var_start(c.peek())) break;
        binders.push_back(parse_var(c));
    }
    if (binders.empty()) throw ParseError("expected a binder", c.pos);
    c.expect('.', "'.'");
    TermPtr body = named_term(c);
    for (auto it = binders.rbegin(); it != binders.rend(); ++it)
        body = Term::lam(*it, std::move(body));
    return body;
}

enum class Ctx { Top, Fun, Arg };

void print_named_rec(const TermPtr& t, Ctx ctx, std::string& out) {
    switch (t->kind) {
        case Term::Kind::Var:
            out += t->name.str();
            break;
        case Term::Kind::App: {
            bool paren = ctx == Ctx::Arg;
            if (paren) out += '(';
            print_named_rec(t->fun(), Ctx::Fun, out);
            out += ' ';
            print_named_rec(t->arg(), Ctx::Arg, out);
            if (paren) out += ')';
            break;
        }
        case Term::Kind::Lam: {
            bool paren = ctx != Ctx::Top;
            if (paren) out += '(';
            out += '\\';
            const Term* cur = t.get();
            out += cur->name.str();
            while (cur->body()->is_lam()) {
                cur = cur->body().get();
                out += ' ';
                out += cur->name.str();
            }
            out += ". ";
            print_named_rec(cur->body(), Ctx::Top, out);
            if (paren) out += ')';
            break;
        }
    }
}

DBTermPtr db_term(Cursor& c);

DBTermPtr db_app(Cursor& c) {
    DBTermPtr acc;
    for (;;) {
        c.skip_ws();
        DBTermPtr atom;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            std::size_t start = c.pos;
            std::uint32_t n = c.nat("an index");
            if (n == 0) throw ZeroIndex(start);
            atom = DBTerm::var(n);
        } else if (c.peek() == '(') {
            ++c.pos;
            atom = db_term(c);
            c.skip_ws();
            c.expect(')', "')'");
        } else {
            break;
        }
        acc = acc ? DBTerm::app(std::move(acc), std::move(atom)) : atom;
    }
    if (!acc) throw ParseError("expected a term", c.pos);
    return acc;
}

DBTermPtr db_term(Cursor& c) {
    c.skip_ws();
    if (c.peek() == '\\') {
        ++c.pos;
        return DBTerm::lam(db_term(c));
    }
    return db_app(c);
}

void print_db_rec(const DBTermPtr& t, Ctx ctx, std::string& out) {
    switch (t->kind) {
        case DBTerm::Kind::Index:
            out += std::to_string(t->index);
            break;
        case DBTerm::Kind::App: {
            bool paren = ctx == Ctx::Arg;
            if (paren) out += '(';
            print_db_rec(t->fun(), Ctx::Fun, out);
            out += ' ';
            print_db_rec(t->arg(), Ctx::Arg, out);
            if (paren) out += ')';
            break;
        }
        case DBTerm::Kind::Lam: {
            bool paren = ctx != Ctx::Top;
            if (paren) out += '(';
            out += "\\ ";
            print_db_rec(t->body(), Ctx::Top, out);
            if (paren) out += ')';
            break;
        }
    }
}

struct ESParser {
    Cursor c;
    bool allow_meta;

    ESTermPtr term() {
        c.skip_ws();
        if (c.peek() == '\\') {
            ++c.pos;
            return ESTerm::lam(term());
        }
        return app();
    }

    ESTermPtr app() {
        ESTermPtr acc;
        for (;;) {
            c.skip_ws();
            if (!item_start()) break;
            ESTermPtr it = item();
            acc = acc ? ESTerm::app(std::move(acc), std::move(it)) : it;
        }
        if (!acc) throw ParseError("expected a term", c.pos);
        return acc;
    }

    bool updater_start() const { return c.peek() == 'p' && c.peek(1) == 'h' && c.peek(2) == '('; }

    bool item_start() const {
        char ch = c.peek();
        return std::isdigit(static_cast<unsigned char>(ch)) || ch == '(' || updater_start() ||
               std::isupper(static_cast<unsigned char>(ch));
    }

    ESTermPtr item() {
        if (!updater_start()) return atom();
        std::size_t start = c.pos;
        c.pos += 3;
        std::uint32_t i = c.nat("a superscript");
        if (i == 0) throw ParseError("updating superscript must be at least 1", start);
        c.skip_ws();
        c.expect(',', "','");
        std::uint32_t k = c.nat("a subscript");
        c.skip_ws();
        c.expect(')', "')'");
        c.skip_ws();
        return ESTerm::phi(i, k, atom());
    }

    ESTermPtr atom() {
        ESTermPtr acc = primary();
        for (;;) {
            c.skip_ws();
            if (c.peek() != '[') break;
            std::size_t start = c.pos;
            ++c.pos;
            std::uint32_t i = c.nat("a superscript");
            if (i == 0) throw ParseError("closure superscript must be at least 1", start);
            c.skip_ws();
            c.expect(':', "':='");
            c.expect('=', "':='");
            ESTermPtr payload = term();
            c.skip_ws();
            c.expect(']', "']'");
            acc = ESTerm::sigma(i, std::move(acc), std::move(payload));
        }
        return acc;
    }

    ESTermPtr primary() {
        c.skip_ws();
        char ch = c.peek();
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t start = c.pos;
            std::uint32_t n = c.nat("an index");
            if (n == 0) throw ZeroIndex(start);
            return ESTerm::var(n);
        }
        if (ch == '(') {
            ++c.pos;
            ESTermPtr t = term();
            c.skip_ws();
            c.expect(')', "')'");
            return t;
        }
        if (std::isupper(static_cast<unsigned char>(ch))) {
            if (!allow_meta) throw ParseError("metavariables are not allowed here", c.pos);
            std::string name;
            while (!c.eof() && (std::isalnum(static_cast<unsigned char>(c.peek())) ||
                                c.peek() == '_')) {
                name += c.peek();
                ++c.pos;
            }
            return ESTerm::meta(std::move(name));
        }
        throw ParseError("expected a term", c.pos);
    }
};

// AtomCtx marks positions the grammar restricts to atoms (closure targets and
// updating operands).
enum class ESCtx { Top, Fun, Arg, AtomReq };

void print_es_rec(const ESTermPtr& t, ESCtx ctx, std::string& out) {
    switch (t->kind) {
        case ESTerm::Kind::Index:
            out += std::to_string(t->index);
            break;
        case ESTerm::Kind::Meta:
            out += t->name;
            break;
        case ESTerm::Kind::App: {
            bool paren = ctx == ESCtx::Arg || ctx == ESCtx::AtomReq;
            if (paren) out += '(';
            print_es_rec(t->fun(), ESCtx::Fun, out);
            out += ' ';
            print_es_rec(t->arg(), ESCtx::Arg, out);
            if (paren) out += ')';
            break;
        }
        case ESTerm::Kind::Lam: {
            bool paren = ctx != ESCtx::Top;
            if (paren) out += '(';
            out += "\\ ";
            print_es_rec(t->body(), ESCtx::Top, out);
            if (paren) out += ')';
            break;
        }
        case ESTerm::Kind::Sigma:
            print_es_rec(t->target(), ESCtx::AtomReq, out);
            out += '[';
            out += std::to_string(t->i);
            out += " := ";
            print_es_rec(t->payload(), ESCtx::Top, out);
            out += ']';
            break;
        case ESTerm::Kind::Phi: {
            bool paren = ctx == ESCtx::AtomReq;
            if (paren) out += '(';
            out += "ph(";
            out += std::to_string(t->i);
            out += ',';
            out += std::to_string(t->k);
            out += ") ";
            print_es_rec(t->child(), ESCtx::AtomReq, out);
            if (paren) out += ')';
            break;
        }
    }
}

void finish(Cursor& c) {
    c.skip_ws();
    if (!c.eof()) throw ParseError("unexpected trailing input", c.pos);
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '\\' || ch == '"') out += '\\';
        out += ch;
    }
    return out;
}

}  // namespace

TermPtr parse_named(const std::string& s) {
    Cursor c{s};
    TermPtr t = named_term(c);
    finish(c);
    return t;
}

std::string print_named(const TermPtr& t) {
    std::string out;
    print_named_rec(t, Ctx::Top, out);
    return out;
}

DBTermPtr parse_db(const std::string& s) {
    Cursor c{s};
    DBTermPtr t = db_term(c);
    finish(c);
    return t;
}

std::string print_db(const DBTermPtr& t) {
    std::string out;
    print_db_rec(t, Ctx::Top, out);
    return out;
}

ESTermPtr parse_es(const std::string& s, bool allow_meta) {
    ESParser p{Cursor{s}, allow_meta};
    ESTermPtr t = p.term();
    finish(p.c);
    return t;
}

std::string print_es(const ESTermPtr& t) {
    std::string out;
    print_es_rec(t, ESCtx::Top, out);
    return out;
}

std::string graph_to_dot(const ReductionGraph& g) {
    std::string out = "digraph reduction {\n  rankdir=LR;\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        out += "  n" + std::to_string(i) + " [label=\"" + dot_escape(print_named(g.nodes[i])) +
               "\"];\n";
    }
    for (const GraphEdge& e : g.edges) {
        std::string label;
        switch (e.kind) {
            case StepKind::BetaLike: label = relation_name(g.rel); break;
            case StepKind::Alpha: label = "alpha"; break;
            case StepKind::AlphaPrime: label = "alpha'"; break;
        }
        out += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) + " [label=\"" +
               label + "\"];\n";
    }
    out += "}\n";
    return out;
}

}  // namespace lamlab
