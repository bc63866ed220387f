#include "lamlab/substitution.hpp"

namespace lamlab {

TermPtr graft(const TermPtr& a, VarName v, const TermPtr& b) {
    switch (a->kind) {
        case Term::Kind::Var:
            return a->name == v ? b : a;
        case Term::Kind::App:
            return Term::app(graft(a->fun(), v, b), graft(a->arg(), v, b));
        case Term::Kind::Lam:
            if (a->name == v) return a;
            return Term::lam(a->name, graft(a->body(), v, b));
    }
    return a;
}

namespace {

// Shared skeleton of the two capture-avoiding operators; they differ only in
// how the renaming clause picks the fresh binder.
template <typename FreshFn>
TermPtr capture_avoiding(const TermPtr& a, VarName v, const TermPtr& b, FreshFn fresh) {
    switch (a->kind) {
        case Term::Kind::Var:
            return a->name == v ? b : a;
        case Term::Kind::App:
            return Term::app(capture_avoiding(a->fun(), v, b, fresh),
                             capture_avoiding(a->arg(), v, b, fresh));
        case Term::Kind::Lam: {
            if (a->name == v) return a;
            VarName binder = a->name;
            const TermPtr& body = a->body();
            VarSet fv_body = free_vars(body);
            if (!fv_body.contains(v)) return a;  // nothing to replace below
            VarSet fv_b = free_vars(b);
            if (!fv_b.contains(binder))
                return Term::lam(binder, capture_avoiding(body, v, b, fresh));
            VarName renamed = fresh(fv_body, fv_b, v, binder);
            TermPtr shifted =
                capture_avoiding(body, binder, Term::var(renamed), fresh);
            return Term::lam(renamed, capture_avoiding(shifted, v, b, fresh));
        }
    }
    return a;
}

}  // namespace

TermPtr replace_ordered(const TermPtr& a, VarName v, const TermPtr& b) {
    return capture_avoiding(a, v, b,
                            [](const VarSet& fv_body, const VarSet& fv_b, VarName, VarName) {
                                VarSet fv;
                                fv.insert(fv_body.begin(), fv_body.end());
                                fv.insert(fv_b.begin(), fv_b.end());
                                return fresh_var_after(fv);
                            });
}

TermPtr subst_modulo(const TermPtr& a, VarName v, const TermPtr& b) {
    return capture_avoiding(a, v, b,
                            [](const VarSet& fv_body, const VarSet& fv_b, VarName v_, VarName binder) {
                                VarSet avoid;
                                avoid.insert(fv_body.begin(), fv_body.end());
                                avoid.insert(fv_b.begin(), fv_b.end());
                                avoid.insert(v_);
                                avoid.insert(binder);
                                return fresh_var(avoid);
                            });
}

namespace {

TermPtr subst_vc_rec(const TermPtr& a, VarName v, const TermPtr& b) {
    switch (a->kind) {
        case Term::Kind::Var:
            return a->name == v ? b : a;
        case Term::Kind::App:
            return Term::app(subst_vc_rec(a->fun(), v, b), subst_vc_rec(a->arg(), v, b));
        case Term::Kind::Lam:
            return Term::lam(a->name, subst_vc_rec(a->body(), v, b));
    }
    return a;
}

}  // namespace

TermPtr subst_vc(const TermPtr& a, VarName v, const TermPtr& b) {
    VarSet bv_a = bound_vars(a);
    if (bv_a.contains(v))
        throw ConventionViolated("substituted variable " + v.str() + " is bound in the host term");
    VarSet fv;
    {
        VarSet fv_a = free_vars(a), fv_b = free_vars(b);
        fv.insert(fv_a.begin(), fv_a.end());
        fv.insert(fv_b.begin(), fv_b.end());
    }
    VarSet bv;
    {
        VarSet bv_b = bound_vars(b);
        bv.insert(bv_a.begin(), bv_a.end());
        bv.insert(bv_b.begin(), bv_b.end());
    }
    for (VarName w : bv)
        if (fv.contains(w))
            throw ConventionViolated("name " + w.str() + " is both free and bound");
    return subst_vc_rec(a, v, b);
}

}  // namespace lamlab
