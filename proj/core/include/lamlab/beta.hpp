#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lamlab/alpha.hpp"
#include "lamlab/term.hpp"

namespace lamlab {

/// The named beta relations. BetaBar and BetaPrime contract identically; they
/// differ only in their multi-step closure (BetaPrime's also takes alpha steps).
enum class RelationId { BetaW, BetaBar, BetaPrime, BetaPP, Beta };

enum class Strategy { LeftmostOutermost, LeftmostInnermost };

enum class StepKind { BetaLike, Alpha, AlphaPrime };

struct TraceStep {
    StepKind kind;
    Path path;
    TermPtr result;
};

struct ReductionTrace {
    TermPtr start;
    std::vector<TraceStep> steps;

    const TermPtr& end() const { return steps.empty() ? start : steps.back().result; }
};

enum class NodeIdentity { StrictEq, AlphaEq };

struct GraphEdge {
    std::size_t from;
    std::size_t to;
    StepKind kind;
    Path path;
};

/// Bounded multi-step exploration record. Nodes are unique under the chosen
/// identity; node 0 is the root.
struct ReductionGraph {
    RelationId rel = RelationId::BetaW;
    NodeIdentity identity = NodeIdentity::StrictEq;
    std::vector<TermPtr> nodes;
    std::vector<GraphEdge> edges;
    bool frontier_exhausted = false;
};

struct CrReport {
    bool joinable_all_pairs = true;
    std::vector<std::pair<TermPtr, TermPtr>> witness_failures;
    bool bounded = false;  // set when the graph exploration was cut short
};

/// Paths of all subterms of shape (lam v. A) B, preorder.
std::vector<Path> redexes(const TermPtr& t, RelationId rel);

/// Contract the redex at p: BetaW grafts, BetaBar/BetaPrime use ordered
/// replacement, BetaPP cleans the redex then grafts, Beta substitutes modulo
/// equivalence.
TermPtr contract(const TermPtr& t, const Path& p, RelationId rel);

/// BetaPP contraction with caller-chosen fresh binder names for the cleanup
/// pass (rightmost binder of the redex first).
TermPtr contract_betapp_with(const TermPtr& t, const Path& p, const std::vector<VarName>& names);

std::optional<TermPtr> step(const TermPtr& t, RelationId rel, Strategy strategy);

struct NormalizeOutcome {
    bool normal_form = false;
    TermPtr term;
    ReductionTrace trace;
};

NormalizeOutcome normalize(const TermPtr& t, RelationId rel, Strategy strategy, std::size_t fuel);

/// BFS of single steps from t, up to `depth` layers and `node_cap` nodes.
/// BetaPrime additionally walks alpha edges and BetaPP alpha' edges, with new
/// binders drawn from the finite alpha_pool, so those verdicts are
/// pool-relative. Beta uses alpha-equivalence as node identity, the others
/// strict equality.
ReductionGraph explore(const TermPtr& t, RelationId rel, std::size_t depth, std::size_t node_cap,
                       const VarSet& alpha_pool);

CrReport check_cr(const ReductionGraph& g);

/// Rewrites a mixed beta-bar/alpha trace into a pure beta-bar prefix followed
/// by a pure alpha suffix with the same endpoints up to equivalence.
std::pair<ReductionTrace, ReductionTrace> postpone_alpha(const ReductionTrace& tr);

std::string relation_name(RelationId rel);

}  // namespace lamlab
