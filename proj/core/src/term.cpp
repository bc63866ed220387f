#include "lamlab/term.hpp"

namespace lamlab {

std::string path_str(const Path& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ',';
        switch (p[i]) {
            case Step::Fun: out += "Fun"; break;
            case Step::Arg: out += "Arg"; break;
            case Step::Body: out += "Body"; break;
        }
    }
    return out + "]";
}

std::size_t length(const TermPtr& t) {
    switch (t->kind) {
        case Term::Kind::Var: return 1;
        case Term::Kind::App: return length(t->fun()) + length(t->arg());
        case Term::Kind::Lam: return 1 + length(t->body());
    }
    return 0;
}

namespace {

void collect_free(const TermPtr& t, VarSet& bound, VarSet& out) {
    switch (t->kind) {
        case Term::Kind::Var:
            if (!bound.contains(t->name)) out.insert(t->name);
            break;
        case Term::Kind::App:
            collect_free(t->fun(), bound, out);
            collect_free(t->arg(), bound, out);
            break;
        case Term::Kind::Lam: {
            bool inserted = bound.insert(t->name).second;
            collect_free(t->body(), bound, out);
            if (inserted) bound.erase(t->name);
            break;
        }
    }
}

void collect_bound(const TermPtr& t, VarSet& out) {
    switch (t->kind) {
        case Term::Kind::Var: break;
        case Term::Kind::App:
            collect_bound(t->fun(), out);
            collect_bound(t->arg(), out);
            break;
        case Term::Kind::Lam:
            out.insert(t->name);
            collect_bound(t->body(), out);
            break;
    }
}

void collect_all(const TermPtr& t, VarSet& out) {
    switch (t->kind) {
        case Term::Kind::Var: out.insert(t->name); break;
        case Term::Kind::App:
            collect_all(t->fun(), out);
            collect_all(t->arg(), out);
            break;
        case Term::Kind::Lam:
            out.insert(t->name);
            collect_all(t->body(), out);
            break;
    }
}

}  // namespace

VarSet free_vars(const TermPtr& t) {
    VarSet bound, out;
    collect_free(t, bound, out);
    return out;
}

VarSet bound_vars(const TermPtr& t) {
    VarSet out;
    collect_bound(t, out);
    return out;
}

VarSet all_vars(const TermPtr& t) {
    VarSet out;
    collect_all(t, out);
    return out;
}

bool strict_eq(const TermPtr& a, const TermPtr& b) {
    if (a == b) return true;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Term::Kind::Var: return a->name == b->name;
        case Term::Kind::App:
            return strict_eq(a->fun(), b->fun()) && strict_eq(a->arg(), b->arg());
        case Term::Kind::Lam:
            return a->name == b->name && strict_eq(a->body(), b->body());
    }
    return false;
}

TermPtr subterm_at(const TermPtr& t, const Path& p) {
    TermPtr cur = t;
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

TermPtr replace_rec(const TermPtr& t, const Path& p, std::size_t i, const TermPtr& s) {
    if (i == p.size()) return s;
    switch (p[i]) {
        case Step::Fun:
            if (!t->is_app()) throw InvalidPath{};
            return Term::app(replace_rec(t->fun(), p, i + 1, s), t->arg());
        case Step::Arg:
            if (!t->is_app()) throw InvalidPath{};
            return Term::app(t->fun(), replace_rec(t->arg(), p, i + 1, s));
        case Step::Body:
            if (!t->is_lam()) throw InvalidPath{};
            return Term::lam(t->name, replace_rec(t->body(), p, i + 1, s));
    }
    throw InvalidPath{};
}

}  // namespace

TermPtr replace_at(const TermPtr& t, const Path& p, const TermPtr& s) {
    return replace_rec(t, p, 0, s);
}

VarName fresh_var(const VarSet& avoid) {
    for (int i = 0;; ++i) {
        VarName v = VarName::from_index(i);
        if (!avoid.contains(v)) return v;
    }
}

VarName fresh_var_after(const VarSet& avoid) {
    if (avoid.empty()) return VarName::from_index(0);
    return VarName::from_index(avoid.rbegin()->index() + 1);
}

namespace {

void key_rec(const TermPtr& t, std::string& out) {
    switch (t->kind) {
        case Term::Kind::Var:
            out += 'v';
            out += std::to_string(t->name.index());
            break;
        case Term::Kind::App:
            out += '(';
            key_rec(t->fun(), out);
            out += ' ';
            key_rec(t->arg(), out);
            out += ')';
            break;
        case Term::Kind::Lam:
            out += 'L';
            out += std::to_string(t->name.index());
            out += '.';
            key_rec(t->body(), out);
            break;
    }
}

}  // namespace

std::string term_key(const TermPtr& t) {
    std::string out;
    key_rec(t, out);
    return out;
}

namespace {

void paths_rec(const TermPtr& t, Path& cur, std::vector<Path>& out, bool lams_only) {
    if (!lams_only || t->is_lam()) out.push_back(cur);
    switch (t->kind) {
        case Term::Kind::Var: break;
        case Term::Kind::App:
            cur.push_back(Step::Fun);
            paths_rec(t->fun(), cur, out, lams_only);
            cur.back() = Step::Arg;
            paths_rec(t->arg(), cur, out, lams_only);
            cur.pop_back();
            break;
        case Term::Kind::Lam:
            cur.push_back(Step::Body);
            paths_rec(t->body(), cur, out, lams_only);
            cur.pop_back();
            break;
    }
}

}  // namespace

std::vector<Path> all_paths(const TermPtr& t) {
    std::vector<Path> out;
    Path cur;
    paths_rec(t, cur, out, false);
    return out;
}

std::vector<Path> lam_paths(const TermPtr& t) {
    std::vector<Path> out;
    Path cur;
    paths_rec(t, cur, out, true);
    return out;
}

}  // namespace lamlab
