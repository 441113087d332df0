#include "simaut/fa_engine.hh"

#include <deque>
#include <set>

#include "simaut/lts_sim.hh"

namespace simaut {
namespace {

/// Trace arena: every generated element gets a node so that purged elements
/// keep their trace until the search ends.
struct TraceArena {
    struct Node {
        std::size_t parent;
        Symbol sym;
    };
    static constexpr std::size_t kRoot = SIZE_MAX;
    std::vector<Node> nodes;

    std::size_t add(std::size_t parent, Symbol sym) {
        nodes.push_back({parent, sym});
        return nodes.size() - 1;
    }
    std::vector<Symbol> word(std::size_t id) const {
        std::vector<Symbol> w;
        while (id != kRoot && nodes[id].parent != kRoot) {
            w.push_back(nodes[id].sym);
            id = nodes[id].parent;
        }
        std::reverse(w.begin(), w.end());
        return w;
    }
};

bool macro_rejecting(const StateSet& m, const StateSet& final) {
    return !sets_intersect(m, final);
}

StateSet sorted_post_a(const Nfa& a, State src, Symbol sym) {
    StateSet out;
    for (const auto& [s, x, d] : a.transitions)
        if (s == src && x == sym) out.push_back(d);
    normalize_set(out);
    return out;
}

}  // namespace

StateRelation fa_forward_simulation(const Nfa& a) {
    const std::size_t n = a.num_states;
    StateRelation init(n);
    for (State p = 0; p < n; ++p)
        for (State r = 0; r < n; ++r)
            init.set(p, r, !set_contains(a.final, p) || set_contains(a.final, r));
    return compute_simulation(a.to_lts(), coarsest_pr(init)).induced(n);
}

StateSet minimize_macrostate(const StateSet& m, const StateRelation& rel) {
    StateSet cur = m;
    // Scan candidates in descending index order so that mutually simulating
    // states keep the smallest index.
    for (std::size_t i = m.size(); i-- > 0;) {
        const State r1 = m[i];
        if (!set_contains(cur, r1)) continue;
        for (State r2 : cur)
            if (r2 != r1 && rel.get(r1, r2)) {
                cur.erase(std::find(cur.begin(), cur.end(), r1));
                break;
            }
    }
    return cur;
}

FaUniversalityResult fa_universality(const Nfa& a, Engine engine, const StateRelation* rel,
                                     const AntichainOptions& opts) {
    if (a.num_symbols == 0) throw std::invalid_argument("fa_universality: empty alphabet");
    StateRelation owned;
    const StateRelation* r = nullptr;
    if (engine == Engine::AntichainSim) {
        if (rel) {
            r = rel;
        } else {
            owned = fa_forward_simulation(a);
            r = &owned;
        }
    } else if (engine == Engine::Antichain) {
        owned = StateRelation::identity(a.num_states);
        r = &owned;
    }

    FaUniversalityResult res;
    TraceArena arena;
    const bool minimize = engine == Engine::AntichainSim && opts.opt2;

    StateSet init = a.initial;
    res.stats.generated = 1;
    const std::size_t init_node = arena.add(TraceArena::kRoot, 0);
    if (macro_rejecting(init, a.final)) {
        res.universal = false;
        res.stats.result = false;
        res.witness = std::vector<Symbol>{};
        return res;
    }

    if (engine == Engine::Classical) {
        std::set<StateSet> seen{init};
        std::deque<std::pair<StateSet, std::size_t>> fifo{{init, init_node}};
        res.stats.stored_peak = 1;
        while (!fifo.empty()) {
            auto [R, node] = fifo.front();
            fifo.pop_front();
            for (Symbol x = 0; x < a.num_symbols; ++x) {
                StateSet P = a.post(R, x);
                ++res.stats.generated;
                const std::size_t pn = arena.add(node, x);
                if (macro_rejecting(P, a.final)) {
                    res.universal = false;
                    res.witness = arena.word(pn);
                    return res;
                }
                if (seen.insert(P).second) {
                    fifo.push_back({std::move(P), pn});
                    res.stats.stored_peak = std::max(res.stats.stored_peak, seen.size());
                }
            }
        }
        res.universal = true;
        res.stats.result = true;
        return res;
    }

    // Antichain engines: FIFO frontier, symbols in fixed order.
    if (minimize) init = minimize_macrostate(init, *r);
    std::vector<std::pair<StateSet, std::size_t>> processed;
    std::deque<std::pair<StateSet, std::size_t>> next{{init, init_node}};
    res.stats.stored_peak = 1;
    while (!next.empty()) {
        auto [R, node] = next.front();
        next.pop_front();
        processed.push_back({R, node});
        for (Symbol x = 0; x < a.num_symbols; ++x) {
            StateSet P = a.post(R, x);
            if (minimize) P = minimize_macrostate(P, *r);
            ++res.stats.generated;
            const std::size_t pn = arena.add(node, x);
            if (macro_rejecting(P, a.final)) {
                res.universal = false;
                res.witness = arena.word(pn);
                return res;
            }
            bool subsumed = false;
            for (const auto& [S, sn] : processed)
                if (relation_ae(*r, S, P)) { subsumed = true; break; }
            if (!subsumed)
                for (const auto& [S, sn] : next)
                    if (relation_ae(*r, S, P)) { subsumed = true; break; }
            if (subsumed) continue;
            auto purge = [&](auto& container) {
                for (auto it = container.begin(); it != container.end();)
                    it = relation_ae(*r, P, it->first) ? container.erase(it) : std::next(it);
            };
            purge(processed);
            purge(next);
            next.push_back({std::move(P), pn});
            res.stats.stored_peak =
                std::max(res.stats.stored_peak, processed.size() + next.size());
        }
    }
    res.universal = true;
    res.stats.result = true;
    return res;
}

FaInclusionResult fa_inclusion(const Nfa& a, const Nfa& b, Engine engine,
                               const StateRelation* rel, const AntichainOptions& opts) {
    if (a.num_symbols != b.num_symbols)
        throw std::invalid_argument("fa_inclusion: alphabet mismatch");
    StateRelation owned;
    const StateRelation* r = nullptr;
    if (engine == Engine::AntichainSim) {
        if (rel) {
            r = rel;
        } else {
            owned = fa_forward_simulation(union_nfa(a, b));
            r = &owned;
        }
    } else if (engine == Engine::Antichain) {
        owned = StateRelation::identity(a.num_states + b.num_states);
        r = &owned;
    }
    const std::size_t off = a.num_states;  // b-states in the union indexing

    auto accepting = [&](State p, const StateSet& P) {
        return set_contains(a.final, p) && !sets_intersect(P, b.final);
    };
    // Macro-states over b are kept in b-local indices; lift to union indices
    // only for relation queries.
    auto rel_pp = [&](State p, State q) { return r->get(p, q); };             // a-state vs a-state
    auto rel_pb = [&](State p, State qb) { return r->get(p, qb + off); };     // a-state vs b-state
    auto rel_ae_b = [&](const StateSet& S, const StateSet& P) {
        for (State x : S) {
            bool dom = false;
            for (State y : P)
                if (r->get(x + off, y + off)) { dom = true; break; }
            if (!dom) return false;
        }
        return true;
    };
    auto minimize_b = [&](const StateSet& m) {
        StateSet cur = m;
        for (std::size_t i = m.size(); i-- > 0;) {
            const State r1 = m[i];
            if (!set_contains(cur, r1)) continue;
            for (State r2 : cur)
                if (r2 != r1 && r->get(r1 + off, r2 + off)) {
                    cur.erase(std::find(cur.begin(), cur.end(), r1));
                    break;
                }
        }
        return cur;
    };

    FaInclusionResult res;
    TraceArena arena;
    const bool minimize = engine == Engine::AntichainSim && opts.opt2;

    using PState = std::pair<State, StateSet>;
    std::vector<std::pair<PState, std::size_t>> raw_init;
    for (State i : a.initial) {
        StateSet ib = b.initial;
        if (minimize) ib = minimize_b(ib);
        ++res.stats.generated;
        raw_init.push_back({{i, std::move(ib)}, arena.add(TraceArena::kRoot, 0)});
        if (accepting(i, b.initial)) {
            res.included = false;
            res.witness = std::vector<Symbol>{};
            return res;
        }
    }

    if (engine == Engine::Classical) {
        std::set<PState> seen;
        std::deque<std::pair<PState, std::size_t>> fifo;
        for (auto& [ps, node] : raw_init)
            if (seen.insert(ps).second) fifo.push_back({ps, node});
        res.stats.stored_peak = seen.size();
        while (!fifo.empty()) {
            auto [rp, node] = fifo.front();
            fifo.pop_front();
            for (Symbol x = 0; x < a.num_symbols; ++x) {
                const StateSet Rp = b.post(rp.second, x);
                for (State nx : sorted_post_a(a, rp.first, x)) {
                    ++res.stats.generated;
                    const std::size_t pn = arena.add(node, x);
                    PState cand{nx, Rp};
                    if (accepting(nx, Rp)) {
                        res.included = false;
                        res.witness = arena.word(pn);
                        return res;
                    }
                    if (seen.insert(cand).second) {
                        fifo.push_back({std::move(cand), pn});
                        res.stats.stored_peak = std::max(res.stats.stored_peak, seen.size());
                    }
                }
            }
        }
        res.included = true;
        res.stats.result = true;
        return res;
    }

    // Inclusion search with subsumption applied already to the initial set.
    std::vector<std::pair<PState, std::size_t>> processed;
    std::deque<std::pair<PState, std::size_t>> next;
    auto try_insert = [&](PState&& cand, std::size_t node) {
        const auto& [p, P] = cand;
        if (engine == Engine::AntichainSim && opts.opt1b)
            for (State pp : P)
                if (rel_pb(p, pp)) return;
        for (const auto& [sS, sn] : processed)
            if (rel_pp(p, sS.first) && rel_ae_b(sS.second, P)) return;
        for (const auto& [sS, sn] : next)
            if (rel_pp(p, sS.first) && rel_ae_b(sS.second, P)) return;
        auto purge = [&](auto& container) {
            for (auto it = container.begin(); it != container.end();)
                it = (rel_pp(it->first.first, p) && rel_ae_b(P, it->first.second))
                         ? container.erase(it)
                         : std::next(it);
        };
        purge(processed);
        purge(next);
        next.push_back({std::move(cand), node});
        res.stats.stored_peak = std::max(res.stats.stored_peak, processed.size() + next.size());
    };
    for (auto& [ps, node] : raw_init) try_insert(std::move(ps), node);

    while (!next.empty()) {
        auto [rR, node] = next.front();
        next.pop_front();
        processed.push_back({rR, node});
        for (Symbol x = 0; x < a.num_symbols; ++x) {
            StateSet Rp = b.post(rR.second, x);
            if (minimize) Rp = minimize_b(Rp);
            for (State nx : sorted_post_a(a, rR.first, x)) {
                ++res.stats.generated;
                const std::size_t pn = arena.add(node, x);
                if (accepting(nx, Rp)) {
                    res.included = false;
                    res.witness = arena.word(pn);
                    return res;
                }
                try_insert({nx, Rp}, pn);
            }
        }
    }
    res.included = true;
    res.stats.result = true;
    return res;
}

Nfa quotient_nfa(const Nfa& a, const StateRelation& equiv) {
    if (equiv.size() != a.num_states || !equiv.is_reflexive() || !equiv.is_symmetric() ||
        !equiv.is_transitive())
        throw std::invalid_argument("quotient_nfa: not an equivalence over the states");
    std::vector<std::size_t> cls(a.num_states, SIZE_MAX);
    std::vector<State> reps;
    for (State q = 0; q < a.num_states; ++q) {
        for (std::size_t c = 0; c < reps.size() && cls[q] == SIZE_MAX; ++c)
            if (equiv.get(q, reps[c])) cls[q] = c;
        if (cls[q] == SIZE_MAX) {
            cls[q] = reps.size();
            reps.push_back(q);
        }
    }
    Nfa out;
    out.num_states = reps.size();
    out.num_symbols = a.num_symbols;
    out.symbol_names = a.symbol_names;
    for (State rep : reps) out.state_names.push_back(a.state_name(rep));
    for (const auto& [src, sym, dst] : a.transitions) out.add(cls[src], sym, cls[dst]);
    std::sort(out.transitions.begin(), out.transitions.end());
    out.transitions.erase(std::unique(out.transitions.begin(), out.transitions.end()),
                          out.transitions.end());
    for (State q : a.initial) out.initial.push_back(cls[q]);
    for (State q : a.final) out.final.push_back(cls[q]);
    normalize_set(out.initial);
    normalize_set(out.final);
    return out;
}

}  // namespace simaut
