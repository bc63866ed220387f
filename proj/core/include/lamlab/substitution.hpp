#pragma once

#include "lamlab/term.hpp"

namespace lamlab {

/// Naive textual replacement of v by b in a. Free variables of b may be
/// captured by binders of a.
TermPtr graft(const TermPtr& a, VarName v, const TermPtr& b);

/// Capture-avoiding replacement driven by the total variable order. When a
/// binder would capture, it is renamed to the first name in the order that
/// comes after every free variable of body and payload.
TermPtr replace_ordered(const TermPtr& a, VarName v, const TermPtr& b);

/// Substitution on alpha-classes; returns one canonical representative.
/// Renamed binders take the minimal name avoiding the free variables of body
/// and payload as well as the substituted and renamed variables themselves.
TermPtr subst_modulo(const TermPtr& a, VarName v, const TermPtr& b);

/// Substitution under the variable convention: no renaming clause at all.
/// Throws ConventionViolated unless a and b jointly keep bound and free names
/// apart and v is not bound in a.
TermPtr subst_vc(const TermPtr& a, VarName v, const TermPtr& b);

}  // namespace lamlab
