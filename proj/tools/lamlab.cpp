#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lamlab/beta.hpp"
#include "lamlab/explicit_subst.hpp"
#include "lamlab/syntax.hpp"

using namespace lamlab;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kFuel = 3;

std::string read_stdin() {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
}

// The final term comes from the last positional argument, or stdin if absent.
std::string input_or_stdin(const std::string& positional) {
    return positional.empty() ? read_stdin() : positional;
}

VarSet parse_pool(const std::string& csv) {
    VarSet pool;
    std::istringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        while (!tok.empty() && tok.back() == ' ') tok.pop_back();
        std::size_t at = tok.find_first_not_of(' ');
        if (at == std::string::npos) continue;
        tok = tok.substr(at);
        VarName v;
        switch (tok[0]) {
            case 'x': v.base = 0; break;
            case 'y': v.base = 1; break;
            case 'z': v.base = 2; break;
            default: throw ParseError("bad pool entry '" + tok + "'", 0);
        }
        for (std::size_t i = 1; i < tok.size(); ++i) {
            if (tok[i] != '\'') throw ParseError("bad pool entry '" + tok + "'", i);
            ++v.primes;
        }
        pool.insert(v);
    }
    return pool;
}

int cmd_parse(const std::string& lang, const std::string& raw) {
    if (lang == "named")
        std::cout << print_named(parse_named(raw)) << "\n";
    else if (lang == "db")
        std::cout << print_db(parse_db(raw)) << "\n";
    else
        std::cout << print_es(parse_es(raw, true)) << "\n";
    return kOk;
}

int reduce_named(RelationId rel, Strategy strat, std::size_t max_steps, bool trace,
                 const std::string& raw) {
    TermPtr t = parse_named(raw);
    NormalizeOutcome out = normalize(t, rel, strat, max_steps);
    if (trace) {
        for (std::size_t i = 0; i < out.trace.steps.size(); ++i) {
            const TraceStep& s = out.trace.steps[i];
            std::cout << "step " << i + 1 << ": " << relation_name(rel) << " at "
                      << path_str(s.path) << " => " << print_named(s.result) << "\n";
        }
    }
    std::cout << print_named(out.term) << "\n";
    return out.normal_form ? kOk : kFuel;
}

int reduce_beta1(Strategy strat, std::size_t max_steps, bool trace, const std::string& raw) {
    DBTermPtr t = parse_db(raw);
    bool normal = false;
    std::size_t n = 0;
    while (n < max_steps) {
        auto rs = beta1_redexes(t);
        if (rs.empty()) {
            normal = true;
            break;
        }
        Path p = strat == Strategy::LeftmostOutermost ? rs.front() : rs.back();
        t = beta1_step(t, p);
        ++n;
        if (trace)
            std::cout << "step " << n << ": beta1 at " << path_str(p) << " => " << print_db(t)
                      << "\n";
    }
    if (!normal) normal = beta1_redexes(t).empty();
    std::cout << print_db(t) << "\n";
    return normal ? kOk : kFuel;
}

int reduce_es(RuleSet rs, Strategy strat, std::size_t max_steps, bool trace,
              const std::string& raw) {
    ESTermPtr t = parse_es(raw, true);
    ESOutcome out = es_normalize(t, rs, strat, max_steps);
    if (trace) {
        for (std::size_t i = 0; i < out.steps.size(); ++i) {
            const ESTraceStep& s = out.steps[i];
            std::cout << "step " << i + 1 << ": " << rule_name(s.rule) << " at "
                      << path_str(s.path) << " => " << print_es(s.result) << "\n";
        }
    }
    std::cout << print_es(out.term) << "\n";
    return out.normal_form ? kOk : kFuel;
}

int cmd_graph(const std::string& rel_name_in, std::size_t depth, std::size_t node_cap,
              const std::string& pool_csv, const std::string& out_path, const std::string& raw) {
    RelationId rel;
    if (rel_name_in == "betaw")
        rel = RelationId::BetaW;
    else if (rel_name_in == "betabar")
        rel = RelationId::BetaBar;
    else if (rel_name_in == "betap")
        rel = RelationId::BetaPrime;
    else if (rel_name_in == "betapp")
        rel = RelationId::BetaPP;
    else
        rel = RelationId::Beta;
    TermPtr t = parse_named(raw);
    ReductionGraph g = explore(t, rel, depth, node_cap, parse_pool(pool_csv));
    std::string dot = graph_to_dot(g);
    if (out_path.empty()) {
        std::cout << dot;
    } else {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "cannot write " << out_path << "\n";
            return kUsage;
        }
        f << dot;
    }
    CrReport report = check_cr(g);
    std::cout << "CR(bounded): " << (report.joinable_all_pairs ? "yes" : "no")
              << "; nodes=" << g.nodes.size() << "; failures=[";
    for (std::size_t i = 0; i < report.witness_failures.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << "(" << print_named(report.witness_failures[i].first) << " ~ "
                  << print_named(report.witness_failures[i].second) << ")";
    }
    std::cout << "]\n";
    return report.joinable_all_pairs ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lambda calculus substitution laboratory"};
    app.require_subcommand(1);

    std::string lang = "named", input, rel = "betabar", strategy = "outermost";
    std::size_t max_steps = 1000, depth = 4, node_cap = 10000;
    bool trace = false;
    std::string pool = "x,y,z,x',y',z'";
    std::string out_path, direction, ruleset = "ls";
    std::string term_a, term_b;

    auto* p = app.add_subcommand("parse", "parse and re-print a term");
    p->add_option("--lang", lang)->check(CLI::IsMember({"named", "db", "es"}));
    p->add_option("input", input);

    auto* r = app.add_subcommand("reduce", "normalize under a reduction relation");
    r->add_option("--rel", rel)->check(CLI::IsMember(
        {"betaw", "betabar", "betap", "betapp", "beta", "beta1", "ls", "lse"}));
    r->add_option("--strategy", strategy)->check(CLI::IsMember({"outermost", "innermost"}));
    r->add_option("--max-steps", max_steps);
    r->add_flag("--trace", trace);
    r->add_option("input", input);

    auto* a = app.add_subcommand("alpha-eq", "decide syntactic equivalence");
    a->add_option("a", term_a)->required();
    a->add_option("b", term_b);

    auto* c = app.add_subcommand("convert", "translate between named and de Bruijn terms");
    c->add_option("direction", direction)->required()->check(CLI::IsMember({"to-db", "from-db"}));
    c->add_option("input", input);

    auto* g = app.add_subcommand("graph", "bounded reduction graph and CR report");
    g->add_option("--rel", rel)->check(
        CLI::IsMember({"betaw", "betabar", "betap", "betapp", "beta"}));
    g->add_option("--depth", depth);
    g->add_option("--node-cap", node_cap);
    g->add_option("--pool", pool);
    g->add_option("--out", out_path);
    g->add_option("input", input);

    auto* j = app.add_subcommand("join", "search for a common reduct of two terms");
    j->add_option("--ruleset", ruleset)->check(CLI::IsMember({"s", "ls", "lse"}));
    j->add_option("--depth", depth);
    j->add_option("--node-cap", node_cap);
    j->add_option("a", term_a)->required();
    j->add_option("b", term_b);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (p->parsed()) return cmd_parse(lang, input_or_stdin(input));

        if (r->parsed()) {
            Strategy strat = strategy == "innermost" ? Strategy::LeftmostInnermost
                                                     : Strategy::LeftmostOutermost;
            std::string raw = input_or_stdin(input);
            if (rel == "beta1") return reduce_beta1(strat, max_steps, trace, raw);
            if (rel == "ls") return reduce_es(RuleSet::LambdaS, strat, max_steps, trace, raw);
            if (rel == "lse") return reduce_es(RuleSet::LambdaSe, strat, max_steps, trace, raw);
            RelationId r_id = rel == "betaw"    ? RelationId::BetaW
                              : rel == "betabar" ? RelationId::BetaBar
                              : rel == "betap"   ? RelationId::BetaPrime
                              : rel == "betapp"  ? RelationId::BetaPP
                                                 : RelationId::Beta;
            return reduce_named(r_id, strat, max_steps, trace, raw);
        }

        if (a->parsed()) {
            TermPtr ta = parse_named(term_a);
            TermPtr tb = parse_named(input_or_stdin(term_b));
            return alpha_eq(ta, tb) ? kOk : kNegative;
        }

        if (c->parsed()) {
            std::string raw = input_or_stdin(input);
            if (direction == "to-db")
                std::cout << print_db(to_db(parse_named(raw))) << "\n";
            else
                std::cout << print_named(from_db(parse_db(raw))) << "\n";
            return kOk;
        }

        if (g->parsed())
            return cmd_graph(rel, depth, node_cap, pool, out_path, input_or_stdin(input));

        if (j->parsed()) {
            RuleSet rs = ruleset == "s"    ? RuleSet::SOnly
                         : ruleset == "lse" ? RuleSet::LambdaSe
                                            : RuleSet::LambdaS;
            ESTermPtr ta = parse_es(term_a, true);
            ESTermPtr tb = parse_es(input_or_stdin(term_b), true);
            try {
                auto witness = es_joinable(ta, tb, rs, depth, node_cap);
                if (witness) {
                    std::cout << print_es(*witness) << "\n";
                    return kOk;
                }
                std::cout << "no common reduct within bounds\n";
                return kNegative;
            } catch (const CapExceeded&) {
                std::cout << "node cap exceeded before the depth bound\n";
                return kFuel;
            }
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
