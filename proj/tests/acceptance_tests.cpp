// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <cstdio>
#include <exception>
#include <functional>
#include <string>

#include <lamlab/alpha.hpp>
#include <lamlab/beta.hpp>
#include <lamlab/debruijn.hpp>
#include <lamlab/explicit_subst.hpp>
#include <lamlab/substitution.hpp>
#include <lamlab/syntax.hpp>
#include <lamlab/term.hpp>

#include "lemmas.hpp"
#include "support.hpp"

using namespace lamlab;
using namespace support;

namespace {

int g_failures = 0;

void criterion(int n, const std::string& what, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (exception: ") + e.what() + ")";
    }
    std::printf("%s criterion %d: %s%s\n", ok ? "PASS" : "FAIL", n, what.c_str(), note.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

// Recomputation of the index-updating and index-substitution clauses straight
// from their inductive definitions, kept separate from the library.
DBTermPtr hand_update(std::uint32_t i, std::uint32_t k, const DBTermPtr& a) {
    if (a->is_app()) return DBTerm::app(hand_update(i, k, a->fun()), hand_update(i, k, a->arg()));
    if (a->is_lam()) return DBTerm::lam(hand_update(i, k + 1, a->body()));
    return DBTerm::var(a->index > k ? a->index + i - 1 : a->index);
}

DBTermPtr hand_subst(const DBTermPtr& a, std::uint32_t i, const DBTermPtr& b) {
    if (a->is_app()) return DBTerm::app(hand_subst(a->fun(), i, b), hand_subst(a->arg(), i, b));
    if (a->is_lam()) return DBTerm::lam(hand_subst(a->body(), i + 1, b));
    if (a->index > i) return DBTerm::var(a->index - 1);
    if (a->index == i) return hand_update(i, 0, b);
    return DBTerm::var(a->index);
}

}  // namespace

int main() {
    criterion(1, "grafting exhibits and the capture bug of the naive contraction", [] {
        bool ok = strict_eq(graft(nt("\\z. x z"), vn("x"), nt("y")), nt("\\z. y z"));
        ok = ok && strict_eq(graft(nt("\\y. x y"), vn("x"), nt("y")), nt("\\y. y y"));
        ok = ok && strict_eq(contract(nt("(\\x.\\z. x z) y"), {}, RelationId::BetaW),
                             nt("\\z. y z"));
        ok = ok && strict_eq(contract(nt("(\\x.\\y. x y) y"), {}, RelationId::BetaW),
                             nt("\\y. y y"));
        return ok;
    });

    criterion(2, "ordered replacement picks the first safe binder", [] {
        return strict_eq(replace_ordered(nt("\\y. x y"), vn("x"), nt("y")), nt("\\z. y z"));
    });

    criterion(3, "bounded Church-Rosser failure of the replacement closure", [] {
        TermPtr t = nt("(\\x.\\y. y x)((\\z. x') y)");
        ReductionGraph bar = explore(t, RelationId::BetaBar, 4, 10000, {});
        if (!bar.frontier_exhausted) return false;
        TermPtr nf1, nf2;
        int nfs = 0;
        for (const auto& n : bar.nodes) {
            if (!redexes(n, RelationId::BetaBar).empty()) continue;
            ++nfs;
            if (strict_eq(n, nt("\\y. y x'"))) nf1 = n;
            if (strict_eq(n, nt("\\y'. y' x'"))) nf2 = n;
        }
        if (nfs != 2 || !nf1 || !nf2 || strict_eq(nf1, nf2)) return false;
        if (check_cr(bar).joinable_all_pairs) return false;
        ReductionGraph prime = explore(t, RelationId::BetaPrime, 4, 10000, default_pool());
        return check_cr(prime).joinable_all_pairs;
    });

    criterion(4, "the asymmetric renaming round trip", [] {
        TermPtr a = nt("\\x.\\y. x y");
        TermPtr b = nt("\\y.\\z. y z");
        if (!strict_eq(alpha_step(a, {}, vn("y")), b)) return false;
        TermPtr back1 = alpha_step(b, {}, vn("x"));
        if (!strict_eq(back1, nt("\\x.\\z. x z"))) return false;
        return strict_eq(alpha_step(back1, {Step::Body}, vn("y")), a);
    });

    criterion(5, "renaming-by-replacement and renaming-by-grafting induce one equivalence", [] {
        AlphaAgreement res = run_alpha_agreement_exhaustive(7);
        if (res.failures != 0) return false;
        if (res.terms != 3LL + 18 + 162 + 1782 + 21870 + 287226 + 3949722) return false;
        Rng g = make_rng(100);
        return run_alpha_agreement_random(g, 500) == 0;
    });

    criterion(6, "substitution and commutation identities on named terms", [] {
        Rng g = make_rng(101);
        int fail = 0;
        fail += run_subst_no_free_var(g, 1000);
        fail += run_subst_free_vars(g, 1000);
        fail += run_graft_is_replacement(g, 1000);
        fail += run_commutation_strict(g, 1000);
        fail += run_alpha_preserves_fv(g, 1000);
        fail += run_rename_then_subst(g, 1000);
        fail += run_subst_congruence(g, 1000);
        fail += run_commutation_alpha(g, 1000);
        fail += run_rename_involution(g, 1000);
        fail += run_clean_graft(g, 1000);
        fail += run_subst_vs_replacement(g, 1000);
        fail += run_redex_substitution(g, 1000);
        fail += run_redex_alpha_stable(g, 1000);
        fail += run_single_step_agreement(g, 1000);
        fail += run_alpha_postponement(g, 1000);
        return fail == 0;
    });

    criterion(7, "cleanup produces clean equivalent terms", [] {
        Rng g = make_rng(102);
        return run_cleanup(g, 1000) == 0;
    });

    criterion(8, "the worked index-level contraction, against a hand recomputation", [] {
        DBTermPtr expect = dbt("\\ 4 (\\ 4 1) 1");
        if (!db_eq(beta1_step(dbt("(\\ \\ 5 2 1)(\\ 3 1)"), {}), expect)) return false;
        return db_eq(hand_subst(dbt("\\ 5 2 1"), 1, dbt("\\ 3 1")), expect);
    });

    criterion(9, "updating and substitution arithmetic identities", [] {
        Rng g = make_rng(103);
        int fail = 0;
        fail += run_update_absorbs_subst(g, 1000);
        fail += run_update_update_merge(g, 1000);
        fail += run_subst_under_update(g, 1000);
        fail += run_meta_substitution_lemma(g, 1000);
        fail += run_update_commutation(g, 1000);
        fail += run_distribution_lemma(g, 1000);
        return fail == 0;
    });

    criterion(10, "the index translation is an isomorphism preserving reduction", [] {
        Rng g = make_rng(104);
        if (run_db_roundtrip(g, 1000) != 0) return false;
        if (run_named_roundtrip(g, 1000) != 0) return false;
        return run_beta_simulation(g, 500) == 0;
    });

    criterion(11, "the closure calculus simulates, terminates, and locally joins", [] {
        auto out = ls_normalize(est("(\\ \\ 5 2 1)(\\ 3 1)"), 100, Strategy::LeftmostInnermost);
        if (!out.normal_form) return false;
        if (!db_eq(es_to_db(out.term), beta1_step(dbt("(\\ \\ 5 2 1)(\\ 3 1)"), {}))) return false;
        Rng g = make_rng(105);
        if (run_s_termination(g, 1000, 30) != 0) return false;
        return run_ls_local_joins(g, 300, 8) == 0;
    });

    criterion(12, "the open-term critical pair splits the two rulesets", [] {
        ESTermPtr a = est("X[1 := Y][1 := 1]");
        ESTermPtr b = est("((\\ X)[1 := 1]) (Y[1 := 1])");
        if (es_joinable(a, b, RuleSet::LambdaS, 6, 500).has_value()) return false;
        return es_joinable(a, b, RuleSet::LambdaSe, 6, 500).has_value();
    });

    criterion(13, "parser round trips and the compression conventions", [] {
        Rng g = make_rng(106);
        for (int c = 0; c < 1000; ++c) {
            TermPtr t = rand_term(g, rand_int(g, 1, 14));
            if (!strict_eq(parse_named(print_named(t)), t)) return false;
        }
        for (int c = 0; c < 1000; ++c) {
            DBTermPtr d = rand_db(g, rand_int(g, 1, 14));
            if (!db_eq(parse_db(print_db(d)), d)) return false;
        }
        for (int c = 0; c < 1000; ++c) {
            ESTermPtr e = rand_closed_es(g, rand_int(g, 1, 14), true);
            if (!es_eq(parse_es(print_es(e), true), e)) return false;
        }
        TermPtr lam2 = nt("\\x y. x y");
        bool ok = lam2->is_lam() && lam2->body()->is_lam() && lam2->body()->body()->is_app();
        TermPtr apps = nt("x y z x'");
        ok = ok && strict_eq(apps, nt("((x y) z) x'"));
        return ok;
    });

    return g_failures == 0 ? 0 : 1;
}
