#include "lamlab/beta.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "lamlab/debruijn.hpp"
#include "lamlab/substitution.hpp"

namespace lamlab {

std::string relation_name(RelationId rel) {
    switch (rel) {
        case RelationId::BetaW: return "betaw";
        case RelationId::BetaBar: return "betabar";
        case RelationId::BetaPrime: return "betap";
        case RelationId::BetaPP: return "betapp";
        case RelationId::Beta: return "beta";
    }
    return "?";
}

namespace {

bool is_redex(const TermPtr& t) { return t->is_app() && t->fun()->is_lam(); }

void redexes_rec(const TermPtr& t, Path& cur, std::vector<Path>& out) {
    if (is_redex(t)) out.push_back(cur);
    switch (t->kind) {
        case Term::Kind::Var: break;
        case Term::Kind::App:
            cur.push_back(Step::Fun);
            redexes_rec(t->fun(), cur, out);
            cur.back() = Step::Arg;
            redexes_rec(t->arg(), cur, out);
            cur.pop_back();
            break;
        case Term::Kind::Lam:
            cur.push_back(Step::Body);
            redexes_rec(t->body(), cur, out);
            cur.pop_back();
            break;
    }
}

bool find_innermost(const TermPtr& t, Path& cur, Path& out) {
    switch (t->kind) {
        case Term::Kind::Var: return false;
        case Term::Kind::App:
            cur.push_back(Step::Fun);
            if (find_innermost(t->fun(), cur, out)) return true;
            cur.back() = Step::Arg;
            if (find_innermost(t->arg(), cur, out)) return true;
            cur.pop_back();
            break;
        case Term::Kind::Lam:
            cur.push_back(Step::Body);
            if (find_innermost(t->body(), cur, out)) return true;
            cur.pop_back();
            break;
    }
    if (is_redex(t)) {
        out = cur;
        return true;
    }
    return false;
}

std::optional<Path> select_redex(const TermPtr& t, Strategy strategy) {
    if (strategy == Strategy::LeftmostOutermost) {
        std::vector<Path> rs;
        Path cur;
        redexes_rec(t, cur, rs);
        if (rs.empty()) return std::nullopt;
        return rs.front();
    }
    Path cur, out;
    if (find_innermost(t, cur, out)) return out;
    return std::nullopt;
}

}  // namespace

std::vector<Path> redexes(const TermPtr& t, RelationId) {
    std::vector<Path> out;
    Path cur;
    redexes_rec(t, cur, out);
    return out;
}

TermPtr contract(const TermPtr& t, const Path& p, RelationId rel) {
    TermPtr sub = subterm_at(t, p);
    if (!is_redex(sub)) throw NotARedex{};
    VarName v = sub->fun()->name;
    const TermPtr& body = sub->fun()->body();
    const TermPtr& arg = sub->arg();
    TermPtr result;
    switch (rel) {
        case RelationId::BetaW:
            result = graft(body, v, arg);
            break;
        case RelationId::BetaBar:
        case RelationId::BetaPrime:
            result = replace_ordered(body, v, arg);
            break;
        case RelationId::BetaPP: {
            TermPtr clean = cleanup(sub).first;
            result = graft(clean->fun()->body(), clean->fun()->name, clean->arg());
            break;
        }
        case RelationId::Beta:
            result = subst_modulo(body, v, arg);
            break;
    }
    return replace_at(t, p, result);
}

TermPtr contract_betapp_with(const TermPtr& t, const Path& p, const std::vector<VarName>& names) {
    TermPtr sub = subterm_at(t, p);
    if (!is_redex(sub)) throw NotARedex{};
    TermPtr clean = cleanup_with(sub, names).first;
    return replace_at(t, p, graft(clean->fun()->body(), clean->fun()->name, clean->arg()));
}

std::optional<TermPtr> step(const TermPtr& t, RelationId rel, Strategy strategy) {
    auto p = select_redex(t, strategy);
    if (!p) return std::nullopt;
    return contract(t, *p, rel);
}

NormalizeOutcome normalize(const TermPtr& t, RelationId rel, Strategy strategy, std::size_t fuel) {
    NormalizeOutcome out;
    out.trace.start = t;
    TermPtr cur = t;
    for (std::size_t i = 0; i < fuel; ++i) {
        auto p = select_redex(cur, strategy);
        if (!p) {
            out.normal_form = true;
            out.term = cur;
            return out;
        }
        cur = contract(cur, *p, rel);
        out.trace.steps.push_back(TraceStep{StepKind::BetaLike, *p, cur});
    }
    out.normal_form = !select_redex(cur, strategy).has_value();
    out.term = cur;
    return out;
}

namespace {

std::string node_key(const TermPtr& t, NodeIdentity id) {
    if (id == NodeIdentity::StrictEq) return term_key(t);
    DBTermPtr db = to_db(t);
    std::string out;
    // local serialization of the de Bruijn translation
    struct Ser {
        static void rec(const DBTermPtr& d, std::string& s) {
            switch (d->kind) {
                case DBTerm::Kind::Index: s += std::to_string(d->index); break;
                case DBTerm::Kind::App:
                    s += '(';
                    rec(d->fun(), s);
                    s += ' ';
                    rec(d->arg(), s);
                    s += ')';
                    break;
                case DBTerm::Kind::Lam:
                    s += 'L';
                    rec(d->body(), s);
                    break;
            }
        }
    };
    Ser::rec(db, out);
    return out;
}

}  // namespace

ReductionGraph explore(const TermPtr& t, RelationId rel, std::size_t depth, std::size_t node_cap,
                       const VarSet& alpha_pool) {
    ReductionGraph g;
    g.rel = rel;
    g.identity = rel == RelationId::Beta ? NodeIdentity::AlphaEq : NodeIdentity::StrictEq;
    g.frontier_exhausted = true;

    std::unordered_map<std::string, std::size_t> index;
    std::vector<std::size_t> node_depth;
    auto add_node = [&](const TermPtr& term) -> std::optional<std::size_t> {
        std::string key = node_key(term, g.identity);
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        if (g.nodes.size() >= node_cap) return std::nullopt;
        std::size_t id = g.nodes.size();
        g.nodes.push_back(term);
        node_depth.push_back(0);
        index.emplace(std::move(key), id);
        return id;
    };

    add_node(t);
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        TermPtr cur = g.nodes[i];
        std::size_t d = node_depth[i];

        auto offer = [&](const TermPtr& next, StepKind kind, const Path& path) {
            std::string key = node_key(next, g.identity);
            auto it = index.find(key);
            if (it != index.end()) {
                g.edges.push_back(GraphEdge{i, it->second, kind, path});
                return;
            }
            if (d >= depth || g.nodes.size() >= node_cap) {
                g.frontier_exhausted = false;  // successor cut off by the bounds
                return;
            }
            std::size_t id = g.nodes.size();
            g.nodes.push_back(next);
            node_depth.push_back(d + 1);
            index.emplace(std::move(key), id);
            g.edges.push_back(GraphEdge{i, id, kind, path});
        };

        for (const Path& p : redexes(cur, rel)) offer(contract(cur, p, rel), StepKind::BetaLike, p);

        if (rel == RelationId::BetaPrime || rel == RelationId::BetaPP) {
            const VarSet& candidates = alpha_pool;
            bool prime = rel == RelationId::BetaPP;
            for (const Path& p : lam_paths(cur)) {
                VarName binder = subterm_at(cur, p)->name;
                for (VarName v : candidates) {
                    if (v == binder) continue;
                    TermPtr next;
                    try {
                        next = prime ? alphap_step(cur, p, v) : alpha_step(cur, p, v);
                    } catch (const SideConditionViolated&) {
                        continue;
                    }
                    offer(next, prime ? StepKind::AlphaPrime : StepKind::Alpha, p);
                }
            }
        }
    }
    return g;
}

CrReport check_cr(const ReductionGraph& g) {
    CrReport report;
    report.bounded = !g.frontier_exhausted;
    std::size_t n = g.nodes.size();
    std::size_t words = (n + 63) / 64;
    std::vector<std::vector<std::size_t>> succ(n);
    for (const GraphEdge& e : g.edges) succ[e.from].push_back(e.to);
    // reach[i] = bitset of nodes reachable from i (reflexive)
    std::vector<std::vector<std::uint64_t>> reach(n, std::vector<std::uint64_t>(words, 0));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> stack{i};
        reach[i][i / 64] |= 1ull << (i % 64);
        while (!stack.empty()) {
            std::size_t cur = stack.back();
            stack.pop_back();
            for (std::size_t nx : succ[cur]) {
                auto& word = reach[i][nx / 64];
                std::uint64_t bit = 1ull << (nx % 64);
                if (!(word & bit)) {
                    word |= bit;
                    stack.push_back(nx);
                }
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            bool joinable = false;
            for (std::size_t w = 0; w < words; ++w)
                if (reach[i][w] & reach[j][w]) {
                    joinable = true;
                    break;
                }
            if (!joinable) {
                report.joinable_all_pairs = false;
                report.witness_failures.emplace_back(g.nodes[i], g.nodes[j]);
            }
        }
    }
    return report;
}

namespace {

// Replays one trace step against `cur`, checking it is legal.
TermPtr replay_step(const TermPtr& cur, const TraceStep& s) {
    TermPtr next;
    try {
        if (s.kind == StepKind::BetaLike) {
            next = contract(cur, s.path, RelationId::BetaBar);
        } else {
            TermPtr sub = subterm_at(cur, s.path);
            TermPtr target = subterm_at(s.result, s.path);
            if (!sub->is_lam() || !target->is_lam()) throw InvalidTrace("not an abstraction");
            next = s.kind == StepKind::Alpha ? alpha_step(cur, s.path, target->name)
                                             : alphap_step(cur, s.path, target->name);
        }
    } catch (const Error&) {
        throw InvalidTrace("step at " + path_str(s.path) + " does not apply");
    }
    if (!strict_eq(next, s.result))
        throw InvalidTrace("recorded result does not match replay at " + path_str(s.path));
    return next;
}

}  // namespace

std::pair<ReductionTrace, ReductionTrace> postpone_alpha(const ReductionTrace& tr) {
    TermPtr cur = tr.start;
    for (const TraceStep& s : tr.steps) cur = replay_step(cur, s);

    std::vector<TraceStep> steps = tr.steps;
    // Bubble every beta step to the left of the alpha steps before it. The
    // alpha renaming preserves the tree shape, so the redex path survives.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
            if (steps[i].kind == StepKind::BetaLike || steps[i + 1].kind != StepKind::BetaLike)
                continue;
            TermPtr before = tr.start;
            for (std::size_t k = 0; k < i; ++k) before = steps[k].result;
            TermPtr after_beta_old = steps[i + 1].result;
            Path redex = steps[i + 1].path;
            TermPtr swapped = contract(before, redex, RelationId::BetaBar);
            std::vector<TraceStep> repl{TraceStep{StepKind::BetaLike, redex, swapped}};
            TermPtr c = swapped;
            for (const AlphaStep& a : alpha_connect(swapped, after_beta_old)) {
                c = alpha_step(c, a.path, a.new_binder);
                repl.push_back(TraceStep{StepKind::Alpha, a.path, c});
            }
            steps.erase(steps.begin() + static_cast<std::ptrdiff_t>(i),
                        steps.begin() + static_cast<std::ptrdiff_t>(i) + 2);
            steps.insert(steps.begin() + static_cast<std::ptrdiff_t>(i), repl.begin(), repl.end());
            changed = true;
            break;
        }
    }

    ReductionTrace betas, alphas;
    betas.start = tr.start;
    std::size_t split = 0;
    while (split < steps.size() && steps[split].kind == StepKind::BetaLike) ++split;
    betas.steps.assign(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(split));
    alphas.start = betas.end();
    alphas.steps.assign(steps.begin() + static_cast<std::ptrdiff_t>(split), steps.end());
    return {std::move(betas), std::move(alphas)};
}

}  // namespace lamlab
