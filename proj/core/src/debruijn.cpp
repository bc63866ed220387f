#include "lamlab/debruijn.hpp"

#include <map>

namespace lamlab {

DBTermPtr DBTerm::var(std::uint32_t n) {
    return std::make_shared<DBTerm>(DBTerm{Kind::Index, n, nullptr, nullptr});
}
DBTermPtr DBTerm::app(DBTermPtr fun, DBTermPtr arg) {
    return std::make_shared<DBTerm>(DBTerm{Kind::App, 0, std::move(fun), std::move(arg)});
}
DBTermPtr DBTerm::lam(DBTermPtr body) {
    return std::make_shared<DBTerm>(DBTerm{Kind::Lam, 0, std::move(body), nullptr});
}

bool db_eq(const DBTermPtr& a, const DBTermPtr& b) {
    if (a == b) return true;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case DBTerm::Kind::Index: return a->index == b->index;
        case DBTerm::Kind::App: return db_eq(a->fun(), b->fun()) && db_eq(a->arg(), b->arg());
        case DBTerm::Kind::Lam: return db_eq(a->body(), b->body());
    }
    return false;
}

std::size_t db_size(const DBTermPtr& t) {
    switch (t->kind) {
        case DBTerm::Kind::Index: return 1;
        case DBTerm::Kind::App: return db_size(t->fun()) + db_size(t->arg());
        case DBTerm::Kind::Lam: return 1 + db_size(t->body());
    }
    return 0;
}

DBTermPtr update(std::uint32_t i, std::uint32_t k, const DBTermPtr& a) {
    switch (a->kind) {
        case DBTerm::Kind::Index:
            return a->index > k ? DBTerm::var(a->index + i - 1) : a;
        case DBTerm::Kind::App:
            return DBTerm::app(update(i, k, a->fun()), update(i, k, a->arg()));
        case DBTerm::Kind::Lam:
            return DBTerm::lam(update(i, k + 1, a->body()));
    }
    return a;
}

DBTermPtr meta_subst(const DBTermPtr& a, std::uint32_t i, const DBTermPtr& b) {
    switch (a->kind) {
        case DBTerm::Kind::Index:
            if (a->index > i) return DBTerm::var(a->index - 1);
            if (a->index == i) return update(i, 0, b);
            return a;
        case DBTerm::Kind::App:
            return DBTerm::app(meta_subst(a->fun(), i, b), meta_subst(a->arg(), i, b));
        case DBTerm::Kind::Lam:
            return DBTerm::lam(meta_subst(a->body(), i + 1, b));
    }
    return a;
}

DBTermPtr db_subterm_at(const DBTermPtr& t, const Path& p) {
    DBTermPtr cur = t;
    for (Step s : p) {
        switch (s) {
            case Step::Fun:
                if (!cur->is_app()) throw InvalidPath{};
                cur = cur->fun();
                break;
            case Step::Arg:
                if (!cur->is_app()) throw InvalidPath{};
                cur = cur->arg();
                break;
            case Step::Body:
                if (!cur->is_lam()) throw InvalidPath{};
                cur = cur->body();
                break;
        }
    }
    return cur;
}

namespace {

DBTermPtr db_replace_rec(const DBTermPtr& t, const Path& p, std::size_t i, const DBTermPtr& s) {
    if (i == p.size()) return s;
    switch (p[i]) {
        case Step::Fun:
            if (!t->is_app()) throw InvalidPath{};
            return DBTerm::app(db_replace_rec(t->fun(), p, i + 1, s), t->arg());
        case Step::Arg:
            if (!t->is_app()) throw InvalidPath{};
            return DBTerm::app(t->fun(), db_replace_rec(t->arg(), p, i + 1, s));
        case Step::Body:
            if (!t->is_lam()) throw InvalidPath{};
            return DBTerm::lam(db_replace_rec(t->body(), p, i + 1, s));
    }
    throw InvalidPath{};
}

void beta1_redexes_rec(const DBTermPtr& t, Path& cur, std::vector<Path>& out) {
    if (t->is_app() && t->fun()->is_lam()) out.push_back(cur);
    switch (t->kind) {
        case DBTerm::Kind::Index: break;
        case DBTerm::Kind::App:
            cur.push_back(Step::Fun);
            beta1_redexes_rec(t->fun(), cur, out);
            cur.back() = Step::Arg;
            beta1_redexes_rec(t->arg(), cur, out);
            cur.pop_back();
            break;
        case DBTerm::Kind::Lam:
            cur.push_back(Step::Body);
            beta1_redexes_rec(t->body(), cur, out);
            cur.pop_back();
            break;
    }
}

}  // namespace

std::vector<Path> beta1_redexes(const DBTermPtr& t) {
    std::vector<Path> out;
    Path cur;
    beta1_redexes_rec(t, cur, out);
    return out;
}

DBTermPtr beta1_step(const DBTermPtr& t, const Path& p) {
    DBTermPtr sub = db_subterm_at(t, p);
    if (!sub->is_app() || !sub->fun()->is_lam()) throw NotARedex{};
    return db_replace_rec(t, p, 0, meta_subst(sub->fun()->body(), 1, sub->arg()));
}

VarName free_list(std::uint32_t n) { return VarName::from_index(static_cast<int>(n) - 1); }

namespace {

// Binder names seen from the inside out.
using Env = std::vector<VarName>;

DBTermPtr to_db_rec(const TermPtr& t, Env& env) {
    switch (t->kind) {
        case Term::Kind::Var: {
            for (std::size_t d = 0; d < env.size(); ++d)
                if (env[env.size() - 1 - d] == t->name)
                    return DBTerm::var(static_cast<std::uint32_t>(d + 1));
            return DBTerm::var(
                static_cast<std::uint32_t>(env.size() + t->name.index() + 1));
        }
        case Term::Kind::App: {
            DBTermPtr f = to_db_rec(t->fun(), env);
            return DBTerm::app(std::move(f), to_db_rec(t->arg(), env));
        }
        case Term::Kind::Lam: {
            env.push_back(t->name);
            DBTermPtr body = to_db_rec(t->body(), env);
            env.pop_back();
            return DBTerm::lam(std::move(body));
        }
    }
    return nullptr;
}

VarName resolve_outer(const Env& env, std::size_t up) {
    // up >= 1 counts positions beyond the innermost binder.
    if (up <= env.size()) return env[env.size() - up];
    return free_list(static_cast<std::uint32_t>(up - env.size()));
}

// Names an index n >= depth+2 inside `body` would resolve to, relative to the
// abstraction about to be named (env holds the enclosing binders).
void outward_names(const DBTermPtr& body, std::size_t depth, const Env& env, VarSet& out) {
    switch (body->kind) {
        case DBTerm::Kind::Index:
            if (body->index >= depth + 2)
                out.insert(resolve_outer(env, body->index - depth - 1));
            break;
        case DBTerm::Kind::App:
            outward_names(body->fun(), depth, env, out);
            outward_names(body->arg(), depth, env, out);
            break;
        case DBTerm::Kind::Lam:
            outward_names(body->body(), depth + 1, env, out);
            break;
    }
}

TermPtr from_db_rec(const DBTermPtr& t, Env& env) {
    switch (t->kind) {
        case DBTerm::Kind::Index:
            return Term::var(resolve_outer(env, t->index));
        case DBTerm::Kind::App: {
            TermPtr f = from_db_rec(t->fun(), env);
            return Term::app(std::move(f), from_db_rec(t->arg(), env));
        }
        case DBTerm::Kind::Lam: {
            VarSet avoid;
            outward_names(t->body(), 0, env, avoid);
            VarName binder = fresh_var(avoid);
            env.push_back(binder);
            TermPtr body = from_db_rec(t->body(), env);
            env.pop_back();
            return Term::lam(binder, std::move(body));
        }
    }
    return nullptr;
}

}  // namespace

DBTermPtr to_db(const TermPtr& t) {
    Env env;
    return to_db_rec(t, env);
}

TermPtr from_db(const DBTermPtr& t) {
    Env env;
    return from_db_rec(t, env);
}

}  // namespace lamlab
