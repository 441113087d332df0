/// Command-line frontend: simulation listings, universality / inclusion
/// checks, reduction, random generation, and the CSV benchmark harness.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "simaut/aba_engine.hh"
#include "simaut/fa_engine.hh"
#include "simaut/formats.hh"
#include "simaut/generate.hh"
#include "simaut/lts_sim.hh"
#include "simaut/oracles.hh"
#include "simaut/ta_engine.hh"

namespace {

using namespace simaut;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    out << text;
}

Engine parse_engine(const std::string& s) {
    if (s == "classical") return Engine::Classical;
    if (s == "antichain") return Engine::Antichain;
    if (s == "antichain-sim") return Engine::AntichainSim;
    throw CLI::ValidationError("--engine", "unknown engine '" + s + "'");
}

double now_ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

void print_relation(const StateRelation& rel,
                    const std::function<std::string(State)>& name) {
    for (State p = 0; p < rel.size(); ++p)
        for (State q = 0; q < rel.size(); ++q)
            if (rel.get(p, q)) std::cout << name(p) << " <= " << name(q) << "\n";
}

int cmd_sim(const std::string& kind, const std::string& file) {
    const std::string text = slurp(file);
    if (kind == "lts") {
        // The FA format doubles as LTS input; initial/final sets are ignored
        // and the initial preorder is the full relation.
        const Nfa nfa = parse_fa(text);
        const Lts lts = nfa.to_lts();
        const StateRelation sim =
            compute_simulation(lts, coarsest_pr(StateRelation::full(lts.num_states)))
                .induced(lts.num_states);
        print_relation(sim, [&](State q) { return nfa.state_name(q); });
    } else if (kind == "fa-forward") {
        const Nfa nfa = parse_fa(text);
        print_relation(fa_forward_simulation(nfa), [&](State q) { return nfa.state_name(q); });
    } else if (kind == "ta-upward") {
        const TreeAutomaton ta = parse_timbuk(text);
        print_relation(ta_upward_simulation(ta), [&](State q) { return ta.state_name(q); });
    } else if (kind == "aba-forward") {
        const AlternatingBuchiAutomaton aba = parse_aba(text);
        print_relation(aba_forward_simulation(aba), [&](State q) { return aba.state_name(q); });
    } else if (kind == "aba-backward") {
        const AlternatingBuchiAutomaton aba = parse_aba(text);
        const StateRelation fwd = aba_forward_simulation(aba);
        print_relation(aba_backward_simulation(aba, fwd),
                       [&](State q) { return aba.state_name(q); });
    } else {
        throw CLI::ValidationError("--kind", "unknown kind '" + kind + "'");
    }
    return kExitHolds;
}

int cmd_univ(const std::string& file, const std::string& kind, const std::string& engine_name) {
    const Engine engine = parse_engine(engine_name);
    const std::string text = slurp(file);
    const auto t0 = std::chrono::steady_clock::now();
    if (kind == "fa") {
        const Nfa nfa = parse_fa(text);
        const FaUniversalityResult r = fa_universality(nfa, engine);
        const double ms = now_ms_since(t0);
        if (r.universal) {
            std::cout << "UNIVERSAL\n";
        } else {
            std::cout << "NOT UNIVERSAL\n";
            if (r.witness) {
                std::cout << "witness:";
                for (Symbol a : *r.witness) std::cout << ' ' << nfa.symbol_name(a);
                std::cout << "\n";
            }
        }
        std::cout << "generated=" << r.stats.generated << " stored_peak=" << r.stats.stored_peak
                  << " time_ms=" << ms << "\n";
        return r.universal ? kExitHolds : kExitFails;
    }
    if (kind == "ta") {
        const TreeAutomaton ta = parse_timbuk(text);
        const SearchStats r = ta_universality(ta, engine);
        const double ms = now_ms_since(t0);
        std::cout << (r.result ? "UNIVERSAL" : "NOT UNIVERSAL") << "\n";
        std::cout << "generated=" << r.generated << " stored_peak=" << r.stored_peak
                  << " time_ms=" << ms << "\n";
        return r.result ? kExitHolds : kExitFails;
    }
    throw CLI::ValidationError("--kind", "unknown kind '" + kind + "'");
}

int cmd_incl(const std::string& file_a, const std::string& file_b, const std::string& kind,
             const std::string& engine_name) {
    const Engine engine = parse_engine(engine_name);
    const std::string ta_text = slurp(file_a);
    const std::string tb_text = slurp(file_b);
    const auto t0 = std::chrono::steady_clock::now();
    if (kind == "fa") {
        const Nfa a = parse_fa(ta_text);
        const Nfa b = parse_fa(tb_text);
        const FaInclusionResult r = fa_inclusion(a, b, engine);
        const double ms = now_ms_since(t0);
        if (r.included) {
            std::cout << "INCLUDED\n";
        } else {
            std::cout << "NOT INCLUDED\n";
            if (r.witness) {
                std::cout << "witness:";
                for (Symbol x : *r.witness) std::cout << ' ' << a.symbol_name(x);
                std::cout << "\n";
            }
        }
        std::cout << "generated=" << r.stats.generated << " stored_peak=" << r.stats.stored_peak
                  << " time_ms=" << ms << "\n";
        return r.included ? kExitHolds : kExitFails;
    }
    if (kind == "ta") {
        const TreeAutomaton a = parse_timbuk(ta_text);
        const TreeAutomaton b = parse_timbuk(tb_text);
        const SearchStats r = ta_inclusion(a, b, engine);
        const double ms = now_ms_since(t0);
        std::cout << (r.result ? "INCLUDED" : "NOT INCLUDED") << "\n";
        std::cout << "generated=" << r.generated << " stored_peak=" << r.stored_peak
                  << " time_ms=" << ms << "\n";
        return r.result ? kExitHolds : kExitFails;
    }
    throw CLI::ValidationError("--kind", "unknown kind '" + kind + "'");
}

int cmd_reduce(const std::string& file, const std::string& kind, const std::string& relation,
               const std::string& out_path, bool force, bool disambiguate) {
    const std::string text = slurp(file);
    if (kind == "fa") {
        if (relation != "forward")
            throw CLI::ValidationError("--relation", "FA reduction supports only 'forward'");
        const Nfa a = parse_fa(text);
        const StateRelation fwd = fa_forward_simulation(a);
        const Nfa q = quotient_nfa(a, fwd.intersect(fwd.inverse()));
        std::cout << "states: " << a.num_states << " -> " << q.num_states << "\n";
        std::cout << "transitions: " << a.transitions.size() << " -> " << q.transitions.size()
                  << "\n";
        spit(out_path, serialize_fa(q));
        return kExitHolds;
    }
    if (kind == "aba") {
        AlternatingBuchiAutomaton a = parse_aba(text);
        StateRelation fwd = aba_forward_simulation(a);
        StateRelation equiv(0);
        if (relation == "forward") {
            equiv = fwd.intersect(fwd.inverse());
        } else if (relation == "mediated") {
            if (disambiguate) {
                a = remove_ambiguity(a, fwd);
                fwd = aba_forward_simulation(a);
            }
            if (!aba_is_unambiguous(a, fwd)) {
                if (!force) {
                    std::cerr << "ambiguous input: two forward-equivalent states share a "
                                 "right-hand side; rerun with --remove-ambiguity or --force\n";
                    return kExitUsage;
                }
                std::cerr << "warning: proceeding on ambiguous input (--force); the quotient "
                             "may change the language\n";
            }
            const StateRelation bwd = aba_backward_simulation(a, fwd);
            const StateRelation med = mediated_preorder(fwd, bwd);
            equiv = med.intersect(med.inverse());
        } else {
            throw CLI::ValidationError("--relation", "unknown relation '" + relation + "'");
        }
        const AlternatingBuchiAutomaton q = quotient_aba(a, equiv);
        std::cout << "states: " << a.num_states << " -> " << q.num_states << "\n";
        std::cout << "transitions: " << a.num_transitions() << " -> " << q.num_transitions()
                  << "\n";
        spit(out_path, serialize_aba(q));
        return kExitHolds;
    }
    throw CLI::ValidationError("--kind", "unknown kind '" + kind + "'");
}

std::vector<std::size_t> parse_ranked(const std::string& spec) {
    // "a:0,f:2" -> arity list; names are kept positional (f0, f1, ...).
    std::vector<std::size_t> arities;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--ranked", "expected name:arity, got '" + item + "'");
        arities.push_back(std::stoul(item.substr(colon + 1)));
    }
    if (arities.empty()) throw CLI::ValidationError("--ranked", "empty ranked alphabet");
    return arities;
}

int cmd_gen(const std::string& kind, std::size_t n, std::size_t symbols, const std::string& ranked,
            double td, double fd, std::uint64_t seed, const std::string& out_path) {
    std::string text;
    if (kind == "fa") {
        text = serialize_fa(generate_random_fa(n, symbols, td, fd, seed));
    } else if (kind == "ta") {
        const TreeAutomaton ta = generate_random_ta(n, parse_ranked(ranked), td, fd, seed);
        text = serialize_timbuk(ta);
    } else {
        throw CLI::ValidationError("--kind", "unknown kind '" + kind + "'");
    }
    if (out_path.empty()) std::cout << text;
    else spit(out_path, text);
    return kExitHolds;
}

struct Grid {
    std::string kind = "fa-univ";  // fa-univ | fa-incl | ta-univ | ta-incl
    std::size_t n = 10;
    std::size_t sym = 2;
    double td_lo = 1.0, td_hi = 1.0, td_step = 0.5;
    double fd_lo = 0.5, fd_hi = 0.5, fd_step = 0.1;
    std::size_t seeds = 1;
    std::vector<Engine> engines{Engine::Antichain};
};

Grid parse_grid(const std::string& spec) {
    Grid g;
    std::stringstream ss(spec);
    std::string item;
    auto parse_range = [](const std::string& v, double& lo, double& hi, double& step) {
        std::stringstream rs(v);
        std::string part;
        std::vector<double> xs;
        while (std::getline(rs, part, ':')) xs.push_back(std::stod(part));
        if (xs.size() == 1) {
            lo = hi = xs[0];
            step = 1.0;
        } else if (xs.size() == 3) {
            lo = xs[0];
            hi = xs[1];
            step = xs[2];
            if (step <= 0) throw CLI::ValidationError("--grid", "range step must be positive");
        } else {
            throw CLI::ValidationError("--grid", "range must be 'x' or 'lo:hi:step'");
        }
    };
    while (std::getline(ss, item, ';')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--grid", "expected key=value, got '" + item + "'");
        const std::string key = item.substr(0, eq);
        const std::string val = item.substr(eq + 1);
        try {
            if (key == "kind") g.kind = val;
            else if (key == "n") g.n = std::stoul(val);
            else if (key == "sym") g.sym = std::stoul(val);
            else if (key == "td") parse_range(val, g.td_lo, g.td_hi, g.td_step);
            else if (key == "fd") parse_range(val, g.fd_lo, g.fd_hi, g.fd_step);
            else if (key == "seeds") g.seeds = std::stoul(val);
            else if (key == "engines") {
                g.engines.clear();
                std::stringstream es(val);
                std::string e;
                while (std::getline(es, e, ',')) g.engines.push_back(parse_engine(e));
            } else {
                throw CLI::ValidationError("--grid", "unknown key '" + key + "'");
            }
        } catch (const std::invalid_argument&) {
            throw CLI::ValidationError("--grid", "bad value for '" + key + "'");
        }
    }
    if (g.kind != "fa-univ" && g.kind != "fa-incl" && g.kind != "ta-univ" && g.kind != "ta-incl")
        throw CLI::ValidationError("--grid", "unknown kind '" + g.kind + "'");
    if (g.seeds == 0 || g.engines.empty())
        throw CLI::ValidationError("--grid", "need at least one seed and one engine");
    return g;
}

const char* engine_name(Engine e) {
    switch (e) {
        case Engine::Classical: return "classical";
        case Engine::Antichain: return "antichain";
        case Engine::AntichainSim: return "antichain-sim";
    }
    return "?";
}

/// Ranked alphabet used for random TA benchmarks: one leaf symbol plus `sym`
/// binary symbols.
std::vector<std::size_t> bench_ta_arities(std::size_t sym) {
    std::vector<std::size_t> a{0};
    for (std::size_t i = 0; i < sym; ++i) a.push_back(2);
    return a;
}

int cmd_bench(const std::string& grid_spec, const std::string& csv_path) {
    const Grid g = parse_grid(grid_spec);
    std::ofstream csv(csv_path);
    if (!csv) throw std::runtime_error("cannot open file for writing: " + csv_path);
    csv << "kind,engine,n_a,n_b,sym,td,fd,seed,result,generated,stored_peak,time_ms\n";
    for (double td = g.td_lo; td <= g.td_hi + 1e-9; td += g.td_step)
        for (double fd = g.fd_lo; fd <= g.fd_hi + 1e-9; fd += g.fd_step)
            for (std::size_t seed = 0; seed < g.seeds; ++seed)
                for (Engine e : g.engines) {
                    SearchStats stats;
                    std::size_t n_b = 0;
                    const auto t0 = std::chrono::steady_clock::now();
                    if (g.kind == "fa-univ") {
                        const Nfa a = generate_random_fa(g.n, g.sym, td, fd, seed);
                        const FaUniversalityResult r = fa_universality(a, e);
                        stats = r.stats;
                    } else if (g.kind == "fa-incl") {
                        const Nfa a = generate_random_fa(g.n, g.sym, td, fd, 2 * seed);
                        const Nfa b = generate_random_fa(g.n, g.sym, td, fd, 2 * seed + 1);
                        n_b = g.n;
                        stats = fa_inclusion(a, b, e).stats;
                    } else if (g.kind == "ta-univ") {
                        const TreeAutomaton a =
                            generate_random_ta(g.n, bench_ta_arities(g.sym), td, fd, seed);
                        stats = ta_universality(a, e);
                    } else {
                        const TreeAutomaton a =
                            generate_random_ta(g.n, bench_ta_arities(g.sym), td, fd, 2 * seed);
                        const TreeAutomaton b =
                            generate_random_ta(g.n, bench_ta_arities(g.sym), td, fd, 2 * seed + 1);
                        n_b = g.n;
                        stats = ta_inclusion(a, b, e);
                    }
                    const double ms = now_ms_since(t0);
                    csv << g.kind << ',' << engine_name(e) << ',' << g.n << ',' << n_b << ','
                        << g.sym << ',' << td << ',' << fd << ',' << seed << ','
                        << (stats.result ? 1 : 0) << ',' << stats.generated << ','
                        << stats.stored_peak << ',' << ms << '\n';
                }
    return kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simulation-based automata toolkit: simulations, antichain "
                 "universality/inclusion, and simulation quotienting for word, tree, and "
                 "alternating Büchi automata"};
    app.require_subcommand(1);

    std::string file, file_b, kind, engine = "antichain", relation = "forward", out, ranked,
                grid, csv;
    std::size_t n = 10, symbols = 2;
    double td = 1.0, fd = 0.5;
    std::uint64_t seed = 0;
    bool force = false, disambiguate = false;

    auto* sim = app.add_subcommand("sim", "Print a simulation relation as sorted `p <= q` lines");
    sim->add_option("file", file, "input automaton")->required();
    sim->add_option("--kind", kind, "lts | fa-forward | ta-upward | aba-forward | aba-backward")
        ->required();

    auto* univ = app.add_subcommand("univ", "Universality check (exit 0 universal, 1 not)");
    univ->add_option("file", file, "input automaton")->required();
    univ->add_option("--kind", kind, "fa | ta")->required();
    univ->add_option("--engine", engine, "classical | antichain | antichain-sim");

    auto* incl = app.add_subcommand("incl", "Inclusion check L(A) ⊆ L(B) (exit 0 included)");
    incl->add_option("a", file, "automaton A")->required();
    incl->add_option("b", file_b, "automaton B")->required();
    incl->add_option("--kind", kind, "fa | ta")->required();
    incl->add_option("--engine", engine, "classical | antichain | antichain-sim");

    auto* reduce = app.add_subcommand("reduce", "Quotient by a simulation-derived equivalence");
    reduce->add_option("file", file, "input automaton")->required();
    reduce->add_option("--kind", kind, "fa | aba")->required();
    reduce->add_option("--relation", relation, "forward | mediated (aba only)");
    reduce->add_option("-o,--output", out, "output file")->required();
    reduce->add_flag("--force", force, "proceed on ambiguous input for mediated reduction");
    reduce->add_flag("--remove-ambiguity", disambiguate,
                     "apply ambiguity removal before mediated reduction");

    auto* gen = app.add_subcommand("gen", "Generate a seeded random automaton");
    gen->add_option("--kind", kind, "fa | ta")->required();
    gen->add_option("--states", n, "state count");
    gen->add_option("--symbols", symbols, "alphabet size (fa)");
    gen->add_option("--ranked", ranked, "ranked alphabet for ta, e.g. a:0,f:2");
    gen->add_option("--td", td, "transition density");
    gen->add_option("--fd", fd, "final-state density");
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("-o,--output", out, "output file (stdout when omitted)");

    auto* bench = app.add_subcommand("bench", "Run a density grid and write CSV records");
    bench
        ->add_option("--grid", grid,
                     "e.g. kind=fa-univ;n=20;sym=2;td=0.5:3.0:0.5;fd=0.1:1.0:0.1;seeds=20;"
                     "engines=classical,antichain,antichain-sim")
        ->required();
    bench->add_option("--csv", csv, "output CSV path")->required();

    try {
        app.parse(argc, argv);
        if (sim->parsed()) return cmd_sim(kind, file);
        if (univ->parsed()) return cmd_univ(file, kind, engine);
        if (incl->parsed()) return cmd_incl(file, file_b, kind, engine);
        if (reduce->parsed()) return cmd_reduce(file, kind, relation, out, force, disambiguate);
        if (gen->parsed()) return cmd_gen(kind, n, symbols, ranked, td, fd, seed, out);
        if (bench->parsed()) return cmd_bench(grid, csv);
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const simaut::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
