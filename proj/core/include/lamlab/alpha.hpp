#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lamlab/term.hpp"

namespace lamlab {

enum class AlphaFlavor { Alpha, AlphaPrime };

/// One binder renaming: the abstraction at `path` goes from old_binder to
/// new_binder by the alpha rule (ordered replacement) or the alpha' rule
/// (grafting under its safety side conditions).
struct AlphaStep {
    Path path;
    VarName old_binder;
    VarName new_binder;
    AlphaFlavor flavor = AlphaFlavor::Alpha;
};

/// Rename the abstraction at p to v_new via ordered replacement.
/// Requires v_new not free in the body; v_new = old binder is allowed.
TermPtr alpha_step(const TermPtr& t, const Path& p, VarName v_new);

/// Rename the abstraction at p to v_new via grafting. Requires v_new not free
/// in the body and distinct from the binder, and neither name bound in the body.
TermPtr alphap_step(const TermPtr& t, const Path& p, VarName v_new);

TermPtr apply_alpha_step(const TermPtr& t, const AlphaStep& s);

/// No name both free and bound, and each binder name used by at most one lambda.
bool is_clean(const TermPtr& t);

/// Alpha'-rename every binder, rightmost first, to the minimal name avoiding
/// all names of t and the names already chosen. The result is clean and
/// syntactically equivalent to t.
std::pair<TermPtr, std::vector<AlphaStep>> cleanup(const TermPtr& t);

/// As cleanup, but binders take names from `names` (rightmost binder first).
/// Throws SideConditionViolated if a supplied name collides with t's names or
/// repeats. Exposes the nondeterminism that the fixed scheme hides.
std::pair<TermPtr, std::vector<AlphaStep>> cleanup_with(const TermPtr& t,
                                                        const std::vector<VarName>& names);

/// Decides syntactic equivalence (identity up to bound-variable names) by
/// comparing de Bruijn translations.
bool alpha_eq(const TermPtr& a, const TermPtr& b);

/// Bounded search: can b be reached from a in at most depth alpha steps,
/// drawing new binders from pool plus every name of a and b?
bool alpha_reachable(const TermPtr& a, const TermPtr& b, const VarSet& pool, std::size_t depth);

/// As alpha_reachable but over alpha' steps.
bool alphap_reachable(const TermPtr& a, const TermPtr& b, const VarSet& pool, std::size_t depth);

/// An explicit alpha-step trace from a to b, for syntactically equivalent
/// terms. Built by renaming both sides apart to a common clean form; no search.
/// Throws SideConditionViolated when a and b are not equivalent.
std::vector<AlphaStep> alpha_connect(const TermPtr& a, const TermPtr& b);

}  // namespace lamlab
