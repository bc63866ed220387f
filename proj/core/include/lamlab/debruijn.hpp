#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "lamlab/term.hpp"

namespace lamlab {

class DBTerm;
using DBTermPtr = std::shared_ptr<const DBTerm>;

/// De Bruijn term: positive index, application or abstraction. An index n is
/// bound by the n-th enclosing lambda; deeper indices point into the fixed
/// free-variable list x, y, z, x', ...
class DBTerm {
public:
    enum class Kind { Index, App, Lam };

    Kind kind;
    std::uint32_t index = 0;
    DBTermPtr left;   // App fun, or Lam body
    DBTermPtr right;  // App arg

    static DBTermPtr var(std::uint32_t n);
    static DBTermPtr app(DBTermPtr fun, DBTermPtr arg);
    static DBTermPtr lam(DBTermPtr body);

    bool is_index() const { return kind == Kind::Index; }
    bool is_app() const { return kind == Kind::App; }
    bool is_lam() const { return kind == Kind::Lam; }
    const DBTermPtr& fun() const { return left; }
    const DBTermPtr& arg() const { return right; }
    const DBTermPtr& body() const { return left; }
};

bool db_eq(const DBTermPtr& a, const DBTermPtr& b);
std::size_t db_size(const DBTermPtr& t);

/// Meta-updating U^i_k: indices above k are raised by i-1; the threshold k
/// grows under each lambda. Requires i >= 1.
DBTermPtr update(std::uint32_t i, std::uint32_t k, const DBTermPtr& a);

/// Meta-substitution of b at level i: index i becomes U^i_0(b), higher indices
/// drop by one, lower ones stay; the level grows under each lambda.
DBTermPtr meta_subst(const DBTermPtr& a, std::uint32_t i, const DBTermPtr& b);

/// Contract the beta_1 redex (lam A) B at p into meta_subst(A, 1, B).
DBTermPtr beta1_step(const DBTermPtr& t, const Path& p);

std::vector<Path> beta1_redexes(const DBTermPtr& t);

/// The n-th name (1-based) of the free-variable list.
VarName free_list(std::uint32_t n);

DBTermPtr to_db(const TermPtr& t);
TermPtr from_db(const DBTermPtr& t);

DBTermPtr db_subterm_at(const DBTermPtr& t, const Path& p);

}  // namespace lamlab
