#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "lamlab/errors.hpp"

namespace lamlab {

/// A variable name: one of the base letters x, y, z decorated with primes.
/// Names are totally ordered as x, y, z, x', y', z', x'', ...
struct VarName {
    int base = 0;  // 0 = x, 1 = y, 2 = z
    int primes = 0;

    int index() const { return 3 * primes + base; }

    static VarName from_index(int i) { return VarName{i % 3, i / 3}; }

    std::string str() const {
        std::string s(1, "xyz"[base]);
        s.append(static_cast<std::size_t>(primes), '\'');
        return s;
    }

    friend bool operator==(const VarName& a, const VarName& b) = default;
    friend std::strong_ordering operator<=>(const VarName& a, const VarName& b) {
        return a.index() <=> b.index();
    }
};

using VarSet = std::set<VarName>;

class Term;
using TermPtr = std::shared_ptr<const Term>;

/// Immutable named lambda term: Var | App | Lam.
class Term {
public:
    enum class Kind { Var, App, Lam };

    Kind kind;
    VarName name;        // Var payload, or Lam binder
    TermPtr left;        // App fun, or Lam body
    TermPtr right;       // App arg

    static TermPtr var(VarName v) {
        return std::make_shared<Term>(Term{Kind::Var, v, nullptr, nullptr});
    }
    static TermPtr app(TermPtr fun, TermPtr arg) {
        return std::make_shared<Term>(Term{Kind::App, {}, std::move(fun), std::move(arg)});
    }
    static TermPtr lam(VarName binder, TermPtr body) {
        return std::make_shared<Term>(Term{Kind::Lam, binder, std::move(body), nullptr});
    }

    bool is_var() const { return kind == Kind::Var; }
    bool is_app() const { return kind == Kind::App; }
    bool is_lam() const { return kind == Kind::Lam; }
    const TermPtr& fun() const { return left; }
    const TermPtr& arg() const { return right; }
    const TermPtr& body() const { return left; }
};

/// One step into a term; Fun/Arg descend into an application, Body into an
/// abstraction. The same steps address de Bruijn and explicit-substitution
/// trees (Fun = closure target, Arg = closure payload, Body = updating child).
enum class Step { Fun, Arg, Body };
using Path = std::vector<Step>;

std::string path_str(const Path& p);

std::size_t length(const TermPtr& t);
VarSet free_vars(const TermPtr& t);
VarSet bound_vars(const TermPtr& t);
/// Every name occurring anywhere in t (free, bound or binding).
VarSet all_vars(const TermPtr& t);

bool strict_eq(const TermPtr& a, const TermPtr& b);

TermPtr subterm_at(const TermPtr& t, const Path& p);
TermPtr replace_at(const TermPtr& t, const Path& p, const TermPtr& s);

/// Minimal name (in the x,y,z,x',... order) not present in avoid.
VarName fresh_var(const VarSet& avoid);
/// First name strictly after every member of avoid in the variable order.
VarName fresh_var_after(const VarSet& avoid);

/// Compact structural serialization usable as a hash/map key.
std::string term_key(const TermPtr& t);

/// Paths of all subterms of t in preorder (Fun before Arg before nothing;
/// a Lam's body after the Lam itself). Left-to-right printed order.
std::vector<Path> all_paths(const TermPtr& t);
/// Paths of all abstractions in t, preorder.
std::vector<Path> lam_paths(const TermPtr& t);

}  // namespace lamlab
