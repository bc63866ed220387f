#pragma once

// Shared test fixtures: deterministic RNG, random term generators for all
// three languages, exhaustive enumeration of small named terms, and
// alpha-variant builders.

#include <cstdint>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include <lamlab/alpha.hpp>
#include <lamlab/beta.hpp>
#include <lamlab/debruijn.hpp>
#include <lamlab/explicit_subst.hpp>
#include <lamlab/substitution.hpp>
#include <lamlab/syntax.hpp>
#include <lamlab/term.hpp>

namespace support {

using namespace lamlab;

using Rng = std::mt19937;

inline Rng make_rng(std::uint32_t salt = 0) { return Rng(0x5eed2026u + salt); }

inline int rand_int(Rng& g, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(g);
}

inline bool rand_bool(Rng& g) { return rand_int(g, 0, 1) == 1; }

inline VarName rand_var(Rng& g, int max_index = 5) {
    return VarName::from_index(rand_int(g, 0, max_index));
}

inline VarSet default_pool() {
    VarSet pool;
    for (int i = 0; i < 6; ++i) pool.insert(VarName::from_index(i));
    return pool;
}

// ---- named terms ----

/// Random term of exactly `len` (lambda-length: #v=1, #(AB)=#A+#B, #(lam)=1+#A).
inline TermPtr rand_term(Rng& g, int len, int max_index = 5) {
    if (len <= 1) return Term::var(rand_var(g, max_index));
    if (rand_bool(g)) return Term::lam(rand_var(g, max_index), rand_term(g, len - 1, max_index));
    int l = rand_int(g, 1, len - 1);
    return Term::app(rand_term(g, l, max_index), rand_term(g, len - l, max_index));
}

/// Random term whose variable occurrences and binders are drawn from separate
/// index ranges. Used by lemma generators that constrain BV against some FV.
inline TermPtr rand_term_ranges(Rng& g, int len, int occ_lo, int occ_hi, int bind_lo,
                                int bind_hi) {
    if (len <= 1) return Term::var(VarName::from_index(rand_int(g, occ_lo, occ_hi)));
    if (rand_bool(g)) {
        VarName b = VarName::from_index(rand_int(g, bind_lo, bind_hi));
        TermPtr body = rand_term_ranges(g, len - 1, occ_lo, occ_hi, bind_lo, bind_hi);
        // let some occurrences actually be bound by b
        if (rand_bool(g)) {
            VarSet fv = free_vars(body);
            if (!fv.empty()) {
                auto it = fv.begin();
                std::advance(it, rand_int(g, 0, static_cast<int>(fv.size()) - 1));
                body = graft(body, *it, Term::var(b));
            }
        }
        return Term::lam(b, body);
    }
    int l = rand_int(g, 1, len - 1);
    return Term::app(rand_term_ranges(g, l, occ_lo, occ_hi, bind_lo, bind_hi),
                     rand_term_ranges(g, len - l, occ_lo, occ_hi, bind_lo, bind_hi));
}

/// Random term guaranteed to contain at least one beta redex.
inline TermPtr rand_redex_term(Rng& g, int ctx_len = 6, int piece_len = 4, int max_index = 5) {
    TermPtr redex = Term::app(Term::lam(rand_var(g, max_index), rand_term(g, piece_len, max_index)),
                              rand_term(g, piece_len, max_index));
    TermPtr ctx = rand_term(g, ctx_len, max_index);
    auto paths = all_paths(ctx);
    const Path& p = paths[static_cast<std::size_t>(rand_int(g, 0, static_cast<int>(paths.size()) - 1))];
    return replace_at(ctx, p, redex);
}

/// Applies up to `steps` random legal alpha-steps (ordered-replacement flavor).
inline TermPtr rand_alpha_variant(Rng& g, TermPtr t, int steps = 3, int pool_max = 8) {
    for (int s = 0; s < steps; ++s) {
        auto lams = lam_paths(t);
        if (lams.empty()) return t;
        for (int attempt = 0; attempt < 8; ++attempt) {
            const Path& p = lams[static_cast<std::size_t>(rand_int(g, 0, static_cast<int>(lams.size()) - 1))];
            VarName v = rand_var(g, pool_max);
            try {
                t = alpha_step(t, p, v);
                break;
            } catch (const SideConditionViolated&) {
            }
        }
    }
    return t;
}

/// Applies up to `steps` random legal alpha'-steps (grafting flavor).
inline TermPtr rand_alphap_variant(Rng& g, TermPtr t, int steps = 3, int pool_max = 8) {
    for (int s = 0; s < steps; ++s) {
        auto lams = lam_paths(t);
        if (lams.empty()) return t;
        for (int attempt = 0; attempt < 8; ++attempt) {
            const Path& p = lams[static_cast<std::size_t>(rand_int(g, 0, static_cast<int>(lams.size()) - 1))];
            VarName v = rand_var(g, pool_max);
            try {
                t = alphap_step(t, p, v);
                break;
            } catch (const SideConditionViolated&) {
            }
        }
    }
    return t;
}

/// All named terms of each length 1..max_len over {x, y, z}. Entry [n-1] holds
/// the terms of length exactly n; subterms are shared across lengths.
inline std::vector<std::vector<TermPtr>> enumerate_terms(int max_len) {
    std::vector<std::vector<TermPtr>> levels(static_cast<std::size_t>(max_len));
    for (int b = 0; b < 3; ++b) levels[0].push_back(Term::var(VarName::from_index(b)));
    for (int n = 2; n <= max_len; ++n) {
        auto& out = levels[static_cast<std::size_t>(n - 1)];
        for (int b = 0; b < 3; ++b)
            for (const auto& body : levels[static_cast<std::size_t>(n - 2)])
                out.push_back(Term::lam(VarName::from_index(b), body));
        for (int l = 1; l <= n - 1; ++l)
            for (const auto& f : levels[static_cast<std::size_t>(l - 1)])
                for (const auto& a : levels[static_cast<std::size_t>(n - l - 1)])
                    out.push_back(Term::app(f, a));
    }
    return levels;
}

// ---- de Bruijn terms ----

/// Random de Bruijn term; indices are uniform in [1, max_index] regardless of
/// binding depth (the meta-level lemmas hold for arbitrary terms).
inline DBTermPtr rand_db(Rng& g, int size, int max_index = 8) {
    if (size <= 1) return DBTerm::var(static_cast<std::uint32_t>(rand_int(g, 1, max_index)));
    if (rand_bool(g)) return DBTerm::lam(rand_db(g, size - 1, max_index));
    int l = rand_int(g, 1, size - 1);
    return DBTerm::app(rand_db(g, l, max_index), rand_db(g, size - l, max_index));
}

/// Random closed de Bruijn term: every index points at an enclosing lambda.
inline DBTermPtr rand_closed_db_at(Rng& g, int size, int depth) {
    if (size <= 1) {
        if (depth == 0) return DBTerm::lam(DBTerm::var(1));
        return DBTerm::var(static_cast<std::uint32_t>(rand_int(g, 1, depth)));
    }
    if (depth == 0 || rand_bool(g)) return DBTerm::lam(rand_closed_db_at(g, size - 1, depth + 1));
    int l = rand_int(g, 1, size - 1);
    return DBTerm::app(rand_closed_db_at(g, l, depth), rand_closed_db_at(g, size - l, depth));
}

inline DBTermPtr rand_closed_db(Rng& g, int size) { return rand_closed_db_at(g, size, 0); }

/// Compact preorder encoding of a small de Bruijn term (<= 10 nodes, indices
/// <= 15) for cheap bucketing. App = 00, Lam = 01, Index = 1 followed by four
/// value bits.
inline std::uint64_t db_key_u64(const DBTermPtr& t) {
    std::uint64_t acc = 1;  // leading sentinel keeps lengths distinct
    struct Rec {
        static void go(std::uint64_t& acc, const DBTermPtr& t) {
            switch (t->kind) {
                case DBTerm::Kind::App:
                    acc = acc << 2;
                    go(acc, t->fun());
                    go(acc, t->arg());
                    break;
                case DBTerm::Kind::Lam:
                    acc = (acc << 2) | 1u;
                    go(acc, t->body());
                    break;
                case DBTerm::Kind::Index:
                    acc = (acc << 5) | 0x10u | (t->index & 0xFu);
                    break;
            }
        }
    };
    Rec::go(acc, t);
    return acc;
}

// ---- explicit-substitution terms ----

/// Random closed explicit-substitution term. `depth` tracks how many indices
/// are in scope; sigma superscripts mimic the shapes sigma-generation creates.
inline ESTermPtr rand_closed_es_at(Rng& g, int size, int depth, bool with_meta) {
    if (size <= 1) {
        if (with_meta && rand_int(g, 0, 4) == 0)
            return ESTerm::meta(std::string(1, static_cast<char>('X' + rand_int(g, 0, 2))));
        if (depth == 0) return ESTerm::lam(ESTerm::var(1));
        return ESTerm::var(static_cast<std::uint32_t>(rand_int(g, 1, depth)));
    }
    int pick = depth == 0 ? 0 : rand_int(g, 0, 3);
    switch (pick) {
        case 0:
            return ESTerm::lam(rand_closed_es_at(g, size - 1, depth + 1, with_meta));
        case 1: {
            int l = rand_int(g, 1, size - 1);
            return ESTerm::app(rand_closed_es_at(g, l, depth, with_meta),
                               rand_closed_es_at(g, size - l, depth, with_meta));
        }
        case 2: {
            int l = rand_int(g, 1, size - 1);
            std::uint32_t i = static_cast<std::uint32_t>(rand_int(g, 1, depth + 1));
            return ESTerm::sigma(i, rand_closed_es_at(g, l, depth + 1, with_meta),
                                 rand_closed_es_at(g, size - l, depth, with_meta));
        }
        default: {
            std::uint32_t i = static_cast<std::uint32_t>(rand_int(g, 1, 3));
            std::uint32_t k = static_cast<std::uint32_t>(rand_int(g, 0, depth));
            return ESTerm::phi(i, k, rand_closed_es_at(g, size - 1, depth, with_meta));
        }
    }
}

inline ESTermPtr rand_closed_es(Rng& g, int size, bool with_meta = false) {
    return rand_closed_es_at(g, size, 0, with_meta);
}

// ---- parse shorthands ----

inline TermPtr nt(const std::string& s) { return parse_named(s); }
inline DBTermPtr dbt(const std::string& s) { return parse_db(s); }
inline ESTermPtr est(const std::string& s) { return parse_es(s, true); }

inline VarName vn(const std::string& s) {
    return VarName{static_cast<int>(s[0] - 'x'), static_cast<int>(s.size()) - 1};
}

}  // namespace support
