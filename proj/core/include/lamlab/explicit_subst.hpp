#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lamlab/beta.hpp"
#include "lamlab/debruijn.hpp"

namespace lamlab {

class ESTerm;
using ESTermPtr = std::shared_ptr<const ESTerm>;

/// Terms with explicit substitution machinery: de Bruijn indices plus closures
/// A sigma^i B, updatings phi^i_k A, and metavariables for open-term rewriting.
/// Superscripts i are >= 1, subscripts k >= 0.
class ESTerm {
public:
    enum class Kind { Index, App, Lam, Sigma, Phi, Meta };

    Kind kind;
    std::uint32_t index = 0;  // Index
    std::uint32_t i = 0;      // Sigma / Phi superscript
    std::uint32_t k = 0;      // Phi subscript
    std::string name;         // Meta
    ESTermPtr left;           // App fun, Lam body, Sigma target, Phi child
    ESTermPtr right;          // App arg, Sigma payload

    static ESTermPtr var(std::uint32_t n);
    static ESTermPtr app(ESTermPtr fun, ESTermPtr arg);
    static ESTermPtr lam(ESTermPtr body);
    static ESTermPtr sigma(std::uint32_t i, ESTermPtr target, ESTermPtr payload);
    static ESTermPtr phi(std::uint32_t i, std::uint32_t k, ESTermPtr child);
    static ESTermPtr meta(std::string name);

    bool is_index() const { return kind == Kind::Index; }
    bool is_app() const { return kind == Kind::App; }
    bool is_lam() const { return kind == Kind::Lam; }
    bool is_sigma() const { return kind == Kind::Sigma; }
    bool is_phi() const { return kind == Kind::Phi; }
    bool is_meta() const { return kind == Kind::Meta; }
    const ESTermPtr& fun() const { return left; }
    const ESTermPtr& arg() const { return right; }
    const ESTermPtr& body() const { return left; }
    const ESTermPtr& target() const { return left; }
    const ESTermPtr& payload() const { return right; }
    const ESTermPtr& child() const { return left; }
};

enum class RuleId {
    SigmaGen,
    SigmaLam,
    SigmaApp,
    SigmaDest,
    PhiLam,
    PhiApp,
    PhiDest,
    SigmaSigma,
    SigmaPhi1,
    SigmaPhi2,
    PhiSigma,
    PhiPhi1,
    PhiPhi2,
};

/// LambdaS: the seven basic rules. SOnly: the same minus sigma-generation (the
/// substitution subcalculus). LambdaSe: all thirteen, acting on open terms.
enum class RuleSet { LambdaS, SOnly, LambdaSe };

std::string rule_name(RuleId r);

struct ESRedex {
    Path path;
    RuleId rule;
};

bool es_eq(const ESTermPtr& a, const ESTermPtr& b);
std::size_t es_size(const ESTermPtr& t);
std::string es_key(const ESTermPtr& t);
ESTermPtr es_subterm_at(const ESTermPtr& t, const Path& p);
ESTermPtr es_replace_at(const ESTermPtr& t, const Path& p, const ESTermPtr& s);

/// The rule (if any) whose left-hand side matches at the root. At most one
/// rule of a ruleset matches any given node.
std::optional<RuleId> es_rule_at(const ESTermPtr& t, RuleSet rs);

/// All redex positions, preorder.
std::vector<ESRedex> es_redexes(const ESTermPtr& t, RuleSet rs);

ESTermPtr es_apply(const ESTermPtr& t, const Path& p, RuleId r);

struct ESTraceStep {
    RuleId rule;
    Path path;
    ESTermPtr result;
};

struct ESOutcome {
    bool normal_form = false;
    ESTermPtr term;
    std::vector<ESTraceStep> steps;
};

/// Iterates the ruleset under the strategy, recording every step, until no
/// rule applies or the fuel runs out.
ESOutcome es_normalize(const ESTermPtr& t, RuleSet rs, Strategy strategy, std::size_t fuel);

ESOutcome ls_normalize(const ESTermPtr& t, std::size_t fuel, Strategy strategy);

/// Fast leftmost-innermost normalizer for the substitution subcalculus. Does
/// not record a trace; fuel counts rule applications.
ESOutcome s_normalize(const ESTermPtr& t, std::size_t fuel);

/// Searches for a common reduct by breadth-first exploration from both sides,
/// each bounded by `depth` layers. Throws CapExceeded when either side would
/// grow past node_cap before the depth bound is reached.
std::optional<ESTermPtr> es_joinable(const ESTermPtr& a, const ESTermPtr& b, RuleSet rs,
                                     std::size_t depth, std::size_t node_cap);

ESTermPtr db_to_es(const DBTermPtr& t);

/// Projection back to plain de Bruijn terms. Throws NotPure if the term still
/// contains Sigma, Phi or Meta nodes.
DBTermPtr es_to_db(const ESTermPtr& t);

bool es_is_pure(const ESTermPtr& t);

}  // namespace lamlab
