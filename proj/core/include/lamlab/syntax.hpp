#pragma once

#include <string>

#include "lamlab/beta.hpp"
#include "lamlab/debruijn.hpp"
#include "lamlab/explicit_subst.hpp"
#include "lamlab/term.hpp"

namespace lamlab {

/// Named terms. Grammar:
///   term := lam | app
///   lam  := '\' var+ '.' term        (multi-binder sugar for nested lams)
///   app  := atom+                    (left-associative)
///   atom := var | '(' term ')'
///   var  := [xyz] '\''*
TermPtr parse_named(const std::string& s);
std::string print_named(const TermPtr& t);

/// De Bruijn terms. Grammar:
///   term := '\' term | app
///   app  := atom+
///   atom := nat | '(' term ')'       (indices start at 1, whitespace-separated)
DBTermPtr parse_db(const std::string& s);
std::string print_db(const DBTermPtr& t);

/// Explicit-substitution terms. Extends the de Bruijn grammar:
///   app     := item+
///   item    := updater | atom
///   updater := 'ph(' nat ',' nat ')' atom
///   atom    := primary ('[' nat ':=' term ']')*    (closures bind tightest)
///   primary := nat | metavar | '(' term ')'
/// Metavariables are uppercase-initial identifiers, accepted only with
/// allow_meta.
ESTermPtr parse_es(const std::string& s, bool allow_meta = false);
std::string print_es(const ESTermPtr& t);

/// DOT digraph; nodes appear in discovery order, labels are printed terms.
std::string graph_to_dot(const ReductionGraph& g);

}  // namespace lamlab
