#include "lamlab/alpha.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_set>

#include "lamlab/debruijn.hpp"
#include "lamlab/substitution.hpp"

namespace lamlab {

TermPtr alpha_step(const TermPtr& t, const Path& p, VarName v_new) {
    TermPtr sub = subterm_at(t, p);
    if (!sub->is_lam()) throw NotAnAbstraction{};
    // Renaming a binder to itself is the identity and always permitted.
    if (v_new != sub->name && free_vars(sub->body()).contains(v_new))
        throw SideConditionViolated(v_new.str() + " is free in the body");
    TermPtr renamed = Term::lam(v_new, replace_ordered(sub->body(), sub->name, Term::var(v_new)));
    return replace_at(t, p, renamed);
}

TermPtr alphap_step(const TermPtr& t, const Path& p, VarName v_new) {
    TermPtr sub = subterm_at(t, p);
    if (!sub->is_lam()) throw NotAnAbstraction{};
    VarName v = sub->name;
    const TermPtr& body = sub->body();
    if (v_new == v || free_vars(body).contains(v_new))
        throw SideConditionViolated(v_new.str() + " is not fresh for the redex");
    VarSet bv = bound_vars(body);
    if (bv.contains(v) || bv.contains(v_new))
        throw SideConditionViolated("binder names clash with bound variables of the body");
    TermPtr renamed = Term::lam(v_new, graft(body, v, Term::var(v_new)));
    return replace_at(t, p, renamed);
}

TermPtr apply_alpha_step(const TermPtr& t, const AlphaStep& s) {
    TermPtr sub = subterm_at(t, s.path);
    if (!sub->is_lam() || sub->name != s.old_binder)
        throw SideConditionViolated("step does not match the abstraction at its path");
    return s.flavor == AlphaFlavor::Alpha ? alpha_step(t, s.path, s.new_binder)
                                          : alphap_step(t, s.path, s.new_binder);
}

namespace {

void count_binders(const TermPtr& t, std::map<VarName, int>& counts) {
    switch (t->kind) {
        case Term::Kind::Var: break;
        case Term::Kind::App:
            count_binders(t->fun(), counts);
            count_binders(t->arg(), counts);
            break;
        case Term::Kind::Lam:
            ++counts[t->name];
            count_binders(t->body(), counts);
            break;
    }
}

}  // namespace

bool is_clean(const TermPtr& t) {
    std::map<VarName, int> counts;
    count_binders(t, counts);
    for (auto& [v, n] : counts)
        if (n > 1) return false;
    VarSet fv = free_vars(t);
    for (auto& [v, n] : counts)
        if (fv.contains(v)) return false;
    return true;
}

namespace {

// Rename every binder of t, rightmost binder first, choosing names through
// `pick(i, avoid)` where avoid already contains every name of t and all
// previously chosen names. Each rename is a legal alpha' step.
template <typename PickFn>
std::pair<TermPtr, std::vector<AlphaStep>> rename_all(const TermPtr& t, PickFn pick) {
    std::vector<Path> lams = lam_paths(t);
    std::reverse(lams.begin(), lams.end());
    VarSet avoid = all_vars(t);
    TermPtr cur = t;
    std::vector<AlphaStep> steps;
    for (std::size_t i = 0; i < lams.size(); ++i) {
        VarName fresh = pick(i, avoid);
        VarName old = subterm_at(cur, lams[i])->name;
        cur = alphap_step(cur, lams[i], fresh);
        steps.push_back(AlphaStep{lams[i], old, fresh, AlphaFlavor::AlphaPrime});
        avoid.insert(fresh);
    }
    return {cur, std::move(steps)};
}

std::pair<TermPtr, std::vector<AlphaStep>> cleanup_avoiding(const TermPtr& t, VarSet extra) {
    return rename_all(t, [&extra](std::size_t, const VarSet& avoid) {
        VarSet u = avoid;
        u.insert(extra.begin(), extra.end());
        return fresh_var(u);
    });
}

}  // namespace

std::pair<TermPtr, std::vector<AlphaStep>> cleanup(const TermPtr& t) {
    return cleanup_avoiding(t, {});
}

std::pair<TermPtr, std::vector<AlphaStep>> cleanup_with(const TermPtr& t,
                                                        const std::vector<VarName>& names) {
    if (names.size() != lam_paths(t).size())
        throw SideConditionViolated("need exactly one name per binder");
    return rename_all(t, [&names](std::size_t i, const VarSet& avoid) {
        if (avoid.contains(names[i]))
            throw SideConditionViolated("supplied name " + names[i].str() + " is not fresh");
        return names[i];
    });
}

bool alpha_eq(const TermPtr& a, const TermPtr& b) {
    return db_eq(to_db(a), to_db(b));
}

namespace {

bool bounded_reach(const TermPtr& a, const TermPtr& b, const VarSet& pool, std::size_t depth,
                   bool prime) {
    VarSet candidates = pool;
    {
        VarSet va = all_vars(a), vb = all_vars(b);
        candidates.insert(va.begin(), va.end());
        candidates.insert(vb.begin(), vb.end());
    }
    std::string goal = term_key(b);
    std::unordered_set<std::string> seen{term_key(a)};
    std::deque<std::pair<TermPtr, std::size_t>> queue{{a, 0}};
    if (term_key(a) == goal) return true;
    while (!queue.empty()) {
        auto [cur, d] = queue.front();
        queue.pop_front();
        if (d == depth) continue;
        for (const Path& p : lam_paths(cur)) {
            for (VarName v : candidates) {
                TermPtr next;
                try {
                    next = prime ? alphap_step(cur, p, v) : alpha_step(cur, p, v);
                } catch (const SideConditionViolated&) {
                    continue;
                }
                std::string key = term_key(next);
                if (key == goal) return true;
                if (seen.insert(key).second) queue.emplace_back(next, d + 1);
            }
        }
    }
    return false;
}

}  // namespace

bool alpha_reachable(const TermPtr& a, const TermPtr& b, const VarSet& pool, std::size_t depth) {
    return bounded_reach(a, b, pool, depth, false);
}

bool alphap_reachable(const TermPtr& a, const TermPtr& b, const VarSet& pool, std::size_t depth) {
    return bounded_reach(a, b, pool, depth, true);
}

std::vector<AlphaStep> alpha_connect(const TermPtr& a, const TermPtr& b) {
    if (strict_eq(a, b)) return {};
    if (!alpha_eq(a, b))
        throw SideConditionViolated("terms are not syntactically equivalent");
    VarSet avoid = all_vars(a);
    {
        VarSet vb = all_vars(b);
        avoid.insert(vb.begin(), vb.end());
    }
    auto [ca, steps_a] = cleanup_avoiding(a, avoid);
    auto [cb, steps_b] = cleanup_avoiding(b, avoid);
    // Equivalent terms share their skeleton and free occurrences, so renaming
    // both apart with the same name sequence meets in the same term.
    if (!strict_eq(ca, cb))
        throw SideConditionViolated("terms are not syntactically equivalent");
    std::vector<AlphaStep> trace = std::move(steps_a);
    for (auto it = steps_b.rbegin(); it != steps_b.rend(); ++it)
        trace.push_back(AlphaStep{it->path, it->new_binder, it->old_binder, AlphaFlavor::AlphaPrime});
    return trace;
}

}  // namespace lamlab
