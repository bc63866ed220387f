#include "lamlab/explicit_subst.hpp"

#include <deque>
#include <unordered_map>

namespace lamlab {

ESTermPtr ESTerm::var(std::uint32_t n) {
    return std::make_shared<ESTerm>(ESTerm{Kind::Index, n, 0, 0, {}, nullptr, nullptr});
}
ESTermPtr ESTerm::app(ESTermPtr fun, ESTermPtr arg) {
    return std::make_shared<ESTerm>(
        ESTerm{Kind::App, 0, 0, 0, {}, std::move(fun), std::move(arg)});
}
ESTermPtr ESTerm::lam(ESTermPtr body) {
    return std::make_shared<ESTerm>(ESTerm{Kind::Lam, 0, 0, 0, {}, std::move(body), nullptr});
}
ESTermPtr ESTerm::sigma(std::uint32_t i, ESTermPtr target, ESTermPtr payload) {
    return std::make_shared<ESTerm>(
        ESTerm{Kind::Sigma, 0, i, 0, {}, std::move(target), std::move(payload)});
}
ESTermPtr ESTerm::phi(std::uint32_t i, std::uint32_t k, ESTermPtr child) {
    return std::make_shared<ESTerm>(ESTerm{Kind::Phi, 0, i, k, {}, std::move(child), nullptr});
}
ESTermPtr ESTerm::meta(std::string name) {
    return std::make_shared<ESTerm>(
        ESTerm{Kind::Meta, 0, 0, 0, std::move(name), nullptr, nullptr});
}

std::string rule_name(RuleId r) {
    switch (r) {
        case RuleId::SigmaGen: return "sigma-generation";
        case RuleId::SigmaLam: return "sigma-lambda";
        case RuleId::SigmaApp: return "sigma-app";
        case RuleId::SigmaDest: return "sigma-destruction";
        case RuleId::PhiLam: return "phi-lambda";
        case RuleId::PhiApp: return "phi-app";
        case RuleId::PhiDest: return "phi-destruction";
        case RuleId::SigmaSigma: return "sigma-sigma";
        case RuleId::SigmaPhi1: return "sigma-phi-1";
        case RuleId::SigmaPhi2: return "sigma-phi-2";
        case RuleId::PhiSigma: return "phi-sigma";
        case RuleId::PhiPhi1: return "phi-phi-1";
        case RuleId::PhiPhi2: return "phi-phi-2";
    }
    return "?";
}

bool es_eq(const ESTermPtr& a, const ESTermPtr& b) {
    if (a == b) return true;
    if (a->kind != b->kind || a->index != b->index || a->i != b->i || a->k != b->k ||
        a->name != b->name)
        return false;
    if ((a->left == nullptr) != (b->left == nullptr)) return false;
    if ((a->right == nullptr) != (b->right == nullptr)) return false;
    if (a->left && !es_eq(a->left, b->left)) return false;
    if (a->right && !es_eq(a->right, b->right)) return false;
    return true;
}

std::size_t es_size(const ESTermPtr& t) {
    std::size_t n = 1;
    if (t->left) n += es_size(t->left);
    if (t->right) n += es_size(t->right);
    return n;
}

namespace {

void key_rec(const ESTermPtr& t, std::string& out) {
    switch (t->kind) {
        case ESTerm::Kind::Index: out += std::to_string(t->index); break;
        case ESTerm::Kind::App:
            out += '(';
            key_rec(t->fun(), out);
            out += ' ';
            key_rec(t->arg(), out);
            out += ')';
            break;
        case ESTerm::Kind::Lam:
            out += 'L';
            key_rec(t->body(), out);
            break;
        case ESTerm::Kind::Sigma:
            out += '(';
            key_rec(t->target(), out);
            out += 'S';
            out += std::to_string(t->i);
            out += ' ';
            key_rec(t->payload(), out);
            out += ')';
            break;
        case ESTerm::Kind::Phi:
            out += 'P';
            out += std::to_string(t->i);
            out += ',';
            out += std::to_string(t->k);
            out += ' ';
            key_rec(t->child(), out);
            break;
        case ESTerm::Kind::Meta:
            out += 'M';
            out += t->name;
            break;
    }
}

}  // namespace

std::string es_key(const ESTermPtr& t) {
    std::string out;
    key_rec(t, out);
    return out;
}

ESTermPtr es_subterm_at(const ESTermPtr& t, const Path& p) {
    ESTermPtr cur = t;
    for (Step s : p) {
        switch (s) {
            case Step::Fun:
                if (!cur->is_app() && !cur->is_sigma()) throw InvalidPath{};
                cur = cur->left;
                break;
            case Step::Arg:
                if (!cur->is_app() && !cur->is_sigma()) throw InvalidPath{};
                cur = cur->right;
                break;
            case Step::Body:
                if (!cur->is_lam() && !cur->is_phi()) throw InvalidPath{};
                cur = cur->left;
                break;
        }
    }
    return cur;
}

namespace {

ESTermPtr rebuild_left(const ESTermPtr& t, ESTermPtr sub) {
    switch (t->kind) {
        case ESTerm::Kind::App: return ESTerm::app(std::move(sub), t->arg());
        case ESTerm::Kind::Lam: return ESTerm::lam(std::move(sub));
        case ESTerm::Kind::Sigma: return ESTerm::sigma(t->i, std::move(sub), t->payload());
        case ESTerm::Kind::Phi: return ESTerm::phi(t->i, t->k, std::move(sub));
        default: throw InvalidPath{};
    }
}

ESTermPtr rebuild_right(const ESTermPtr& t, ESTermPtr sub) {
    switch (t->kind) {
        case ESTerm::Kind::App: return ESTerm::app(t->fun(), std::move(sub));
        case ESTerm::Kind::Sigma: return ESTerm::sigma(t->i, t->target(), std::move(sub));
        default: throw InvalidPath{};
    }
}

ESTermPtr replace_rec(const ESTermPtr& t, const Path& p, std::size_t d, const ESTermPtr& s) {
    if (d == p.size()) return s;
    switch (p[d]) {
        case Step::Fun:
        case Step::Body:
            if (!t->left) throw InvalidPath{};
            return rebuild_left(t, replace_rec(t->left, p, d + 1, s));
        case Step::Arg:
            if (!t->right) throw InvalidPath{};
            return rebuild_right(t, replace_rec(t->right, p, d + 1, s));
    }
    throw InvalidPath{};
}

}  // namespace

ESTermPtr es_replace_at(const ESTermPtr& t, const Path& p, const ESTermPtr& s) {
    return replace_rec(t, p, 0, s);
}

std::optional<RuleId> es_rule_at(const ESTermPtr& t, RuleSet rs) {
    switch (t->kind) {
        case ESTerm::Kind::App:
            if (rs != RuleSet::SOnly && t->fun()->is_lam()) return RuleId::SigmaGen;
            return std::nullopt;
        case ESTerm::Kind::Sigma: {
            const ESTermPtr& a = t->target();
            std::uint32_t j = t->i;
            switch (a->kind) {
                case ESTerm::Kind::Lam: return RuleId::SigmaLam;
                case ESTerm::Kind::App: return RuleId::SigmaApp;
                case ESTerm::Kind::Index: return RuleId::SigmaDest;
                case ESTerm::Kind::Sigma:
                    if (rs == RuleSet::LambdaSe && a->i <= j) return RuleId::SigmaSigma;
                    return std::nullopt;
                case ESTerm::Kind::Phi:
                    if (rs != RuleSet::LambdaSe) return std::nullopt;
                    if (a->k < j && j < a->k + a->i) return RuleId::SigmaPhi1;
                    if (a->k + a->i <= j) return RuleId::SigmaPhi2;
                    return std::nullopt;
                case ESTerm::Kind::Meta: return std::nullopt;
            }
            return std::nullopt;
        }
        case ESTerm::Kind::Phi: {
            const ESTermPtr& a = t->child();
            switch (a->kind) {
                case ESTerm::Kind::Lam: return RuleId::PhiLam;
                case ESTerm::Kind::App: return RuleId::PhiApp;
                case ESTerm::Kind::Index: return RuleId::PhiDest;
                case ESTerm::Kind::Sigma:
                    if (rs == RuleSet::LambdaSe && a->i <= t->k + 1) return RuleId::PhiSigma;
                    return std::nullopt;
                case ESTerm::Kind::Phi:
                    if (rs != RuleSet::LambdaSe) return std::nullopt;
                    if (a->k + a->i <= t->k) return RuleId::PhiPhi1;
                    if (a->k <= t->k && t->k < a->k + a->i) return RuleId::PhiPhi2;
                    return std::nullopt;
                case ESTerm::Kind::Meta: return std::nullopt;
            }
            return std::nullopt;
        }
        default: return std::nullopt;
    }
}

namespace {

void redexes_rec(const ESTermPtr& t, RuleSet rs, Path& cur, std::vector<ESRedex>& out) {
    if (auto r = es_rule_at(t, rs)) out.push_back(ESRedex{cur, *r});
    if (t->left) {
        cur.push_back(t->is_app() || t->is_sigma() ? Step::Fun : Step::Body);
        redexes_rec(t->left, rs, cur, out);
        cur.pop_back();
    }
    if (t->right) {
        cur.push_back(Step::Arg);
        redexes_rec(t->right, rs, cur, out);
        cur.pop_back();
    }
}

ESTermPtr apply_here(const ESTermPtr& t, RuleId r) {
    switch (r) {
        case RuleId::SigmaGen:
            if (!t->is_app() || !t->fun()->is_lam()) break;
            return ESTerm::sigma(1, t->fun()->body(), t->arg());
        case RuleId::SigmaLam:
            if (!t->is_sigma() || !t->target()->is_lam()) break;
            return ESTerm::lam(ESTerm::sigma(t->i + 1, t->target()->body(), t->payload()));
        case RuleId::SigmaApp:
            if (!t->is_sigma() || !t->target()->is_app()) break;
            return ESTerm::app(ESTerm::sigma(t->i, t->target()->fun(), t->payload()),
                               ESTerm::sigma(t->i, t->target()->arg(), t->payload()));
        case RuleId::SigmaDest: {
            if (!t->is_sigma() || !t->target()->is_index()) break;
            std::uint32_t n = t->target()->index;
            if (n > t->i) return ESTerm::var(n - 1);
            if (n == t->i) return ESTerm::phi(t->i, 0, t->payload());
            return t->target();
        }
        case RuleId::PhiLam:
            if (!t->is_phi() || !t->child()->is_lam()) break;
            return ESTerm::lam(ESTerm::phi(t->i, t->k + 1, t->child()->body()));
        case RuleId::PhiApp:
            if (!t->is_phi() || !t->child()->is_app()) break;
            return ESTerm::app(ESTerm::phi(t->i, t->k, t->child()->fun()),
                               ESTerm::phi(t->i, t->k, t->child()->arg()));
        case RuleId::PhiDest: {
            if (!t->is_phi() || !t->child()->is_index()) break;
            std::uint32_t n = t->child()->index;
            return n > t->k ? ESTerm::var(n + t->i - 1) : t->child();
        }
        case RuleId::SigmaSigma: {
            if (!t->is_sigma() || !t->target()->is_sigma()) break;
            const ESTermPtr& inner = t->target();
            std::uint32_t i = inner->i, j = t->i;
            if (!(i <= j)) throw RuleMismatch("sigma-sigma needs i <= j");
            return ESTerm::sigma(i, ESTerm::sigma(j + 1, inner->target(), t->payload()),
                                 ESTerm::sigma(j - i + 1, inner->payload(), t->payload()));
        }
        case RuleId::SigmaPhi1: {
            if (!t->is_sigma() || !t->target()->is_phi()) break;
            const ESTermPtr& inner = t->target();
            std::uint32_t j = t->i;
            if (!(inner->k < j && j < inner->k + inner->i))
                throw RuleMismatch("sigma-phi-1 needs k < j < k+i");
            return ESTerm::phi(inner->i - 1, inner->k, inner->child());
        }
        case RuleId::SigmaPhi2: {
            if (!t->is_sigma() || !t->target()->is_phi()) break;
            const ESTermPtr& inner = t->target();
            std::uint32_t j = t->i;
            if (!(inner->k + inner->i <= j)) throw RuleMismatch("sigma-phi-2 needs k+i <= j");
            return ESTerm::phi(inner->i, inner->k,
                               ESTerm::sigma(j - inner->i + 1, inner->child(), t->payload()));
        }
        case RuleId::PhiSigma: {
            if (!t->is_phi() || !t->child()->is_sigma()) break;
            const ESTermPtr& inner = t->child();
            std::uint32_t j = inner->i;
            if (!(j <= t->k + 1)) throw RuleMismatch("phi-sigma needs j <= k+1");
            return ESTerm::sigma(j, ESTerm::phi(t->i, t->k + 1, inner->target()),
                                 ESTerm::phi(t->i, t->k + 1 - j, inner->payload()));
        }
        case RuleId::PhiPhi1: {
            if (!t->is_phi() || !t->child()->is_phi()) break;
            const ESTermPtr& inner = t->child();
            if (!(inner->k + inner->i <= t->k)) throw RuleMismatch("phi-phi-1 needs l+j <= k");
            return ESTerm::phi(inner->i, inner->k,
                               ESTerm::phi(t->i, t->k + 1 - inner->i, inner->child()));
        }
        case RuleId::PhiPhi2: {
            if (!t->is_phi() || !t->child()->is_phi()) break;
            const ESTermPtr& inner = t->child();
            if (!(inner->k <= t->k && t->k < inner->k + inner->i))
                throw RuleMismatch("phi-phi-2 needs l <= k < l+j");
            return ESTerm::phi(inner->i + t->i - 1, inner->k, inner->child());
        }
    }
    throw RuleMismatch(rule_name(r) + " does not match here");
}

}  // namespace

std::vector<ESRedex> es_redexes(const ESTermPtr& t, RuleSet rs) {
    std::vector<ESRedex> out;
    Path cur;
    redexes_rec(t, rs, cur, out);
    return out;
}

ESTermPtr es_apply(const ESTermPtr& t, const Path& p, RuleId r) {
    return es_replace_at(t, p, apply_here(es_subterm_at(t, p), r));
}

namespace {

bool find_innermost(const ESTermPtr& t, RuleSet rs, Path& cur, ESRedex& out) {
    if (t->left) {
        cur.push_back(t->is_app() || t->is_sigma() ? Step::Fun : Step::Body);
        if (find_innermost(t->left, rs, cur, out)) return true;
        cur.pop_back();
    }
    if (t->right) {
        cur.push_back(Step::Arg);
        if (find_innermost(t->right, rs, cur, out)) return true;
        cur.pop_back();
    }
    if (auto r = es_rule_at(t, rs)) {
        out = ESRedex{cur, *r};
        return true;
    }
    return false;
}

std::optional<ESRedex> select(const ESTermPtr& t, RuleSet rs, Strategy strategy) {
    if (strategy == Strategy::LeftmostOutermost) {
        auto rs_all = es_redexes(t, rs);
        if (rs_all.empty()) return std::nullopt;
        return rs_all.front();
    }
    Path cur;
    ESRedex out;
    if (find_innermost(t, rs, cur, out)) return out;
    return std::nullopt;
}

}  // namespace

ESOutcome es_normalize(const ESTermPtr& t, RuleSet rs, Strategy strategy, std::size_t fuel) {
    ESOutcome out;
    ESTermPtr cur = t;
    for (std::size_t n = 0; n < fuel; ++n) {
        auto redex = select(cur, rs, strategy);
        if (!redex) {
            out.normal_form = true;
            out.term = cur;
            return out;
        }
        cur = es_apply(cur, redex->path, redex->rule);
        out.steps.push_back(ESTraceStep{redex->rule, redex->path, cur});
    }
    out.normal_form = !select(cur, rs, strategy).has_value();
    out.term = cur;
    return out;
}

ESOutcome ls_normalize(const ESTermPtr& t, std::size_t fuel, Strategy strategy) {
    return es_normalize(t, RuleSet::LambdaS, strategy, fuel);
}

namespace {

// Leftmost-innermost without per-step root rescans: children are normalized
// first, and a root rewrite recurses only into the freshly built term.
ESTermPtr s_norm_rec(const ESTermPtr& t, std::size_t& fuel, bool& exhausted) {
    ESTermPtr node = t;
    if (t->left || t->right) {
        ESTermPtr l = t->left ? s_norm_rec(t->left, fuel, exhausted) : nullptr;
        ESTermPtr r =
            t->right && !exhausted ? s_norm_rec(t->right, fuel, exhausted) : t->right;
        if (l != t->left || r != t->right) {
            switch (t->kind) {
                case ESTerm::Kind::App: node = ESTerm::app(l, r); break;
                case ESTerm::Kind::Lam: node = ESTerm::lam(l); break;
                case ESTerm::Kind::Sigma: node = ESTerm::sigma(t->i, l, r); break;
                case ESTerm::Kind::Phi: node = ESTerm::phi(t->i, t->k, l); break;
                default: break;
            }
        }
    }
    if (exhausted) return node;
    if (auto rule = es_rule_at(node, RuleSet::SOnly)) {
        if (fuel == 0) {
            exhausted = true;
            return node;
        }
        --fuel;
        return s_norm_rec(apply_here(node, *rule), fuel, exhausted);
    }
    return node;
}

}  // namespace

ESOutcome s_normalize(const ESTermPtr& t, std::size_t fuel) {
    ESOutcome out;
    bool exhausted = false;
    out.term = s_norm_rec(t, fuel, exhausted);
    out.normal_form = !exhausted;
    return out;
}

namespace {

struct Frontier {
    std::unordered_map<std::string, ESTermPtr> seen;
    std::vector<ESTermPtr> order;
    std::deque<std::pair<ESTermPtr, std::size_t>> queue;
};

void seed(Frontier& f, const ESTermPtr& t) {
    f.seen.emplace(es_key(t), t);
    f.order.push_back(t);
    f.queue.emplace_back(t, 0);
}

// Expands one BFS level; the cap bounds the two frontiers together.
void expand_level(Frontier& f, RuleSet rs, std::size_t level, std::size_t node_cap,
                  std::size_t other_size) {
    while (!f.queue.empty() && f.queue.front().second == level) {
        auto [cur, d] = f.queue.front();
        f.queue.pop_front();
        for (const ESRedex& r : es_redexes(cur, rs)) {
            ESTermPtr next = es_apply(cur, r.path, r.rule);
            std::string key = es_key(next);
            if (f.seen.contains(key)) continue;
            if (f.seen.size() + other_size >= node_cap) throw CapExceeded{};
            f.seen.emplace(std::move(key), next);
            f.order.push_back(next);
            f.queue.emplace_back(next, d + 1);
        }
    }
}

std::optional<ESTermPtr> meet(const Frontier& fa, const Frontier& fb) {
    for (const ESTermPtr& t : fa.order)
        if (fb.seen.contains(es_key(t))) return t;
    return std::nullopt;
}

}  // namespace

std::optional<ESTermPtr> es_joinable(const ESTermPtr& a, const ESTermPtr& b, RuleSet rs,
                                     std::size_t depth, std::size_t node_cap) {
    Frontier fa, fb;
    seed(fa, a);
    seed(fb, b);
    // level-synchronized expansion so a shallow meeting point is found before
    // deep layers can exhaust the node budget
    for (std::size_t level = 0; level < depth; ++level) {
        if (auto w = meet(fa, fb)) return w;
        if (fa.queue.empty() && fb.queue.empty()) break;
        expand_level(fa, rs, level, node_cap, fb.seen.size());
        expand_level(fb, rs, level, node_cap, fa.seen.size());
    }
    return meet(fa, fb);
}

ESTermPtr db_to_es(const DBTermPtr& t) {
    switch (t->kind) {
        case DBTerm::Kind::Index: return ESTerm::var(t->index);
        case DBTerm::Kind::App: return ESTerm::app(db_to_es(t->fun()), db_to_es(t->arg()));
        case DBTerm::Kind::Lam: return ESTerm::lam(db_to_es(t->body()));
    }
    return nullptr;
}

DBTermPtr es_to_db(const ESTermPtr& t) {
    switch (t->kind) {
        case ESTerm::Kind::Index: return DBTerm::var(t->index);
        case ESTerm::Kind::App: return DBTerm::app(es_to_db(t->fun()), es_to_db(t->arg()));
        case ESTerm::Kind::Lam: return DBTerm::lam(es_to_db(t->body()));
        default: throw NotPure{};
    }
}

bool es_is_pure(const ESTermPtr& t) {
    switch (t->kind) {
        case ESTerm::Kind::Index: return true;
        case ESTerm::Kind::App: return es_is_pure(t->fun()) && es_is_pure(t->arg());
        case ESTerm::Kind::Lam: return es_is_pure(t->body());
        default: return false;
    }
}

}  // namespace lamlab
