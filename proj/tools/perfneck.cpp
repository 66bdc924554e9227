// perfneck: construct, verify, count and statistically probe (k,n)-perfect
// necklaces from the command line.
//
// Exit codes: 0 affirmative (perfect / passes / produced), 1 negative or
// resource limit, 2 usage or parse error.

#include "necklaces/astute_graph.hpp"
#include "necklaces/constructors.hpp"
#include "necklaces/counting.hpp"
#include "necklaces/errors.hpp"
#include "necklaces/stat_tests.hpp"
#include "necklaces/verifier.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

namespace {

using namespace necklaces;

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Word parse_word_or_usage(const std::string& text, int b) {
    try {
        return parse_word(text, b);
    } catch (const std::invalid_argument& e) {
        throw Usage(e.what());
    }
}

void print_report(const PerfectionReport& rep, const std::string& word_text, bool json) {
    if (json) {
        auto j = rep.to_json();
        j["word"] = word_text;
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << "word: " << word_text << "\n";
    std::cout << "(k,n): (" << rep.k << "," << rep.n << ")\n";
    std::cout << "length: " << rep.actual_length << " (expected " << rep.expected_length
              << ")\n";
    for (const auto& f : rep.failures) {
        std::cout << "  " << format_word(f.word, rep.b) << ": ";
        if (f.reason == FailureReason::WrongCount) {
            std::cout << f.positions.size() << " occurrence(s) instead of " << rep.n << " at";
            for (long p : f.positions)
                std::cout << ' ' << p;
        } else {
            std::cout << "positions " << f.collision->first << " and " << f.collision->second
                      << " collide mod " << rep.n;
        }
        std::cout << "\n";
    }
    std::cout << "verdict: " << (rep.is_perfect ? "perfect" : "not perfect") << "\n";
}

int cmd_generate(int b, int k, long n, std::uint64_t r, bool ordered, bool circuit,
                 bool has_r) {
    const int modes = (has_r ? 1 : 0) + (ordered ? 1 : 0) + (circuit ? 1 : 0);
    if (modes != 1)
        throw Usage("pick exactly one of --r, --ordered, --circuit");
    Word w;
    if (ordered) {
        w = ordered_necklace(b, k);
    } else if (has_r) {
        if (std::gcd(r, static_cast<std::uint64_t>(b)) != 1)
            throw Usage("r must be coprime with b");
        w = arithmetic_necklace(b, k, r);
    } else {
        if (n < 1)
            throw Usage("--circuit needs --n at least 1");
        const AstuteGraph g = build_astute(b, k - 1, n);
        w = circuit_to_word(g, one_euler_circuit(g));
    }
    std::cout << format_word(w, b) << "\n";
    return 0;
}

int cmd_verify(int b, int k, long n, const std::string& word_arg, bool json, int threads) {
    std::vector<std::string> inputs;
    if (!word_arg.empty()) {
        inputs.push_back(word_arg);
    } else {
        std::string line;
        while (std::getline(std::cin, line))
            if (!line.empty())
                inputs.push_back(line);
        if (inputs.empty())
            throw Usage("no word given on the command line or stdin");
    }
    bool all_perfect = true;
    for (const auto& text : inputs) {
        const Word w = parse_word_or_usage(text, b);
        const PerfectionReport rep =
            threads == 0 ? is_kn_perfect(w, b, k, n) : is_kn_perfect_parallel(w, b, k, n, threads);
        if (inputs.size() == 1) {
            print_report(rep, text, json);
        } else if (json) {
            auto j = rep.to_json();
            j["word"] = text;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << (rep.is_perfect ? "perfect " : "not-perfect ") << text << "\n";
        }
        all_perfect = all_perfect && rep.is_perfect;
    }
    return all_perfect ? 0 : 1;
}

int cmd_count(int b, int k, long n, bool brute, bool breakdown, bool json,
              std::uint64_t budget, int threads) {
    const CountReport rep =
        brute ? brute_force_count(b, k, n, budget, threads) : perfect_count(b, k, n);
    if (json) {
        std::cout << rep.to_json().dump() << "\n";
        return 0;
    }
    std::cout << rep.total.get_str() << "\n";
    if (breakdown) {
        std::cout << "j\te(j)\tphi(n/j)\tp(j)\n";
        for (const auto& line : rep.per_divisor)
            std::cout << line.j << "\t" << line.euler_circuits.get_str() << "\t" << line.phi
                      << "\t" << line.irreducible.get_str() << "\n";
    }
    return 0;
}

int cmd_circuits(int b, int k, long j, bool enumerate, bool formula, bool arbor,
                 std::size_t edge_budget, bool json) {
    const int modes = (enumerate ? 1 : 0) + (formula ? 1 : 0) + (arbor ? 1 : 0);
    if (modes > 1)
        throw Usage("pick at most one of --enumerate, --count-formula, --arborescences");
    if (enumerate) {
        const AstuteGraph g = build_astute(b, k - 1, j);
        const CircuitEnumeration en = enumerate_euler_circuits(g, edge_budget);
        if (json) {
            nlohmann::json out;
            out["count"] = std::to_string(en.circuits.size());
            nlohmann::json words = nlohmann::json::array();
            for (const auto& c : en.circuits)
                words.push_back(format_word(circuit_to_word(g, c), b));
            out["circuits"] = std::move(words);
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "count: " << en.circuits.size() << "\n";
            for (const auto& c : en.circuits)
                std::cout << "circuit: " << format_word(circuit_to_word(g, c), b) << "\n";
        }
        return 0;
    }
    if (arbor) {
        const BigCount r = arborescence_count(build_astute(b, k - 1, j), 0);
        if (json)
            std::cout << nlohmann::json{{"root", 0}, {"count", r.get_str()}}.dump() << "\n";
        else
            std::cout << r.get_str() << "\n";
        return 0;
    }
    const BigCount e = euler_count_formula(b, k, j);
    if (json)
        std::cout << nlohmann::json{{"count", e.get_str()}}.dump() << "\n";
    else
        std::cout << e.get_str() << "\n";
    return 0;
}

int cmd_stat_test(int b, const std::string& period_text, const std::string& test_spec,
                  bool demonstrate, int k, long m, const std::string& epsilon_text,
                  bool json, int threads) {
    const PeriodicSequence x(parse_word_or_usage(period_text, b));
    if (demonstrate != test_spec.empty())
        throw Usage("pick exactly one of --test or --demonstrate");
    if (demonstrate) {
        if (k < 1 || m < 1)
            throw Usage("--demonstrate needs --k and --m");
        const PropositionReport rep =
            demonstrate_proposition(x, b, k, m, threads == 0 ? 1 : threads);
        if (json) {
            std::cout << rep.to_json().dump() << "\n";
        } else {
            for (const auto& s : rep.sizes)
                std::cout << "size " << s.size << ": " << s.tests_run << " indicator tests, "
                          << (s.all_zero ? "all statistics zero" : "NONZERO statistic found")
                          << "\n";
            std::cout << "h: " << rep.h << "\n";
            std::cout << "rejector: " << format_word(rep.rejector, b) << "\n";
            std::cout << "rejector statistic: " << rep.rejector_statistic.get_str() << "\n";
            std::cout << "ok: " << (rep.ok ? "yes" : "no") << "\n";
        }
        return rep.ok ? 0 : 1;
    }

    const auto colon = test_spec.find(':');
    if (colon == std::string::npos || test_spec.substr(0, colon) != "indicator")
        throw Usage("test spec must look like indicator:WORD");
    const Word w = parse_word_or_usage(test_spec.substr(colon + 1), b);
    if (w.empty())
        throw Usage("indicator word must be non-empty");
    std::optional<Rational> eps;
    if (!epsilon_text.empty()) {
        Rational e;
        if (mpq_set_str(e.get_mpq_t(), epsilon_text.c_str(), 10) != 0)
            throw Usage("epsilon must be a fraction like 1/32");
        e.canonicalize();
        eps = e;
    }
    const TestVerdict v = evaluate_test(x, indicator_test(w, b), eps);
    if (json) {
        std::cout << v.to_json().dump() << "\n";
    } else {
        std::cout << "tau: " << v.tau.get_str() << "\n";
        std::cout << "statistic: " << v.statistic.get_str() << "\n";
        if (v.witness)
            std::cout << "witness: n=" << v.witness->first
                      << " T_n=" << v.witness->second.get_str() << "\n";
        std::cout << "verdict: " << (v.passes ? "PASS" : "REJECT") << "\n";
    }
    return v.passes ? 0 : 1;
}

int cmd_graph(int b, int s, long n, bool dot, bool json) {
    const AstuteGraph g = build_astute(b, s, n);
    if (dot) {
        std::cout << to_dot(g);
    } else if (json) {
        std::cout << nlohmann::json{{"b", b},
                                    {"s", s},
                                    {"n", n},
                                    {"nodes", g.node_count},
                                    {"edges", g.edges.size()}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "nodes: " << g.node_count << "\n";
        std::cout << "edges: " << g.edges.size() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"(k,n)-perfect necklace toolkit"};
    app.require_subcommand(1);

    int threads = 0;
    app.add_option("--threads", threads,
                   "worker threads (0 = all cores for brute force, serial otherwise)");

    auto* gen = app.add_subcommand("generate", "construct a perfect necklace");
    int gen_b = 0, gen_k = 0;
    long gen_n = 0;
    std::uint64_t gen_r = 0;
    bool gen_ordered = false, gen_circuit = false;
    gen->add_option("--base", gen_b, "alphabet size")->required();
    gen->add_option("--k", gen_k, "word length")->required();
    auto* gen_ropt = gen->add_option("--r", gen_r, "arithmetic step, coprime with base");
    gen->add_flag("--ordered", gen_ordered, "all words of length k in lexicographic order");
    gen->add_flag("--circuit", gen_circuit, "walk an Eulerian circuit of G_{k-1,n}");
    gen->add_option("--n", gen_n, "counter modulus for --circuit");

    auto* ver = app.add_subcommand("verify", "decide (k,n)-perfection");
    int ver_b = 2, ver_k = 0;
    long ver_n = 0;
    std::string ver_word;
    bool ver_json = false;
    ver->add_option("--base", ver_b, "alphabet size (default 2)");
    ver->add_option("--k", ver_k, "word length")->required();
    ver->add_option("--n", ver_n, "occurrence count")->required();
    ver->add_option("word", ver_word, "word to verify (stdin batch when omitted)");
    ver->add_flag("--json", ver_json);

    auto* cnt = app.add_subcommand("count", "count (k,n)-perfect necklaces");
    int cnt_b = 0, cnt_k = 0;
    long cnt_n = 0;
    bool cnt_brute = false, cnt_breakdown = false, cnt_json = false;
    std::uint64_t cnt_budget = default_brute_budget;
    cnt->add_option("--base", cnt_b)->required();
    cnt->add_option("--k", cnt_k)->required();
    cnt->add_option("--n", cnt_n)->required();
    cnt->add_flag("--brute-force", cnt_brute, "exhaustive oracle instead of the formula");
    cnt->add_flag("--breakdown", cnt_breakdown, "per-divisor table");
    cnt->add_option("--budget", cnt_budget, "brute-force candidate ceiling");
    cnt->add_flag("--json", cnt_json);

    auto* cir = app.add_subcommand("circuits", "Eulerian circuits of G_{k-1,j}");
    int cir_b = 0, cir_k = 0;
    long cir_j = 0;
    bool cir_enum = false, cir_formula = false, cir_arbor = false, cir_json = false;
    std::size_t cir_budget = 32;
    cir->add_option("--base", cir_b)->required();
    cir->add_option("--k", cir_k)->required();
    cir->add_option("--j", cir_j)->required();
    cir->add_flag("--enumerate", cir_enum, "list every circuit (small graphs)");
    cir->add_flag("--count-formula", cir_formula, "closed-form circuit count (default)");
    cir->add_flag("--arborescences", cir_arbor, "matrix-tree spanning-tree count");
    cir->add_option("--edge-budget", cir_budget, "enumeration ceiling");
    cir->add_flag("--json", cir_json);

    auto* st = app.add_subcommand("stat-test", "finite-size tests on a periodic sequence");
    int st_b = 2, st_k = 0;
    long st_m = 0;
    std::string st_period, st_test, st_eps;
    bool st_demo = false, st_json = false;
    st->add_option("--base", st_b, "alphabet size (default 2)");
    st->add_option("--period", st_period, "one period of the sequence")->required();
    st->add_option("--test", st_test, "test spec, e.g. indicator:0000");
    st->add_option("--epsilon", st_eps, "rejection threshold for the witness scan");
    st->add_flag("--demonstrate", st_demo, "run both halves of the pass/reject behaviour");
    st->add_option("--k", st_k, "window size for --demonstrate");
    st->add_option("--m", st_m, "occurrence count for --demonstrate");
    st->add_flag("--json", st_json);

    auto* gr = app.add_subcommand("graph", "inspect an astute graph G_{s,n}");
    int gr_b = 0, gr_s = 0;
    long gr_n = 0;
    bool gr_dot = false, gr_json = false;
    gr->add_option("--base", gr_b)->required();
    gr->add_option("--s", gr_s)->required();
    gr->add_option("--n", gr_n)->required();
    gr->add_flag("--dot", gr_dot, "Graphviz output");
    gr->add_flag("--json", gr_json);

    // lets global flags like --threads sit after the subcommand too
    for (auto* sub : app.get_subcommands({}))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed())
            return cmd_generate(gen_b, gen_k, gen_n, gen_r, gen_ordered, gen_circuit,
                                gen_ropt->count() > 0);
        if (ver->parsed())
            return cmd_verify(ver_b, ver_k, ver_n, ver_word, ver_json, threads);
        if (cnt->parsed())
            return cmd_count(cnt_b, cnt_k, cnt_n, cnt_brute, cnt_breakdown, cnt_json,
                             cnt_budget, threads);
        if (cir->parsed())
            return cmd_circuits(cir_b, cir_k, cir_j, cir_enum, cir_formula, cir_arbor,
                                cir_budget, cir_json);
        if (st->parsed())
            return cmd_stat_test(st_b, st_period, st_test, st_demo, st_k, st_m, st_eps,
                                 st_json, threads);
        if (gr->parsed())
            return cmd_graph(gr_b, gr_s, gr_n, gr_dot, gr_json);
    } catch (const Usage& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetError& e) {
        std::cerr << "limit: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
