#include "simaut/ta_engine.hh"

#include <deque>
#include <set>

#include "simaut/lts_sim.hh"

namespace simaut {
namespace {

bool macro_rejecting(const StateSet& m, const StateSet& final) {
    return !sets_intersect(m, final);
}

/// Enumerates all index tuples of length @p len over [0, bound) containing
/// @p pivot at least once, in lexicographic order; calls @p f for each.
/// @p f returns false to stop early; returns false when stopped.
template <typename F>
bool for_each_pivot_tuple(std::size_t len, std::size_t bound, std::size_t pivot, F&& f) {
    std::vector<std::size_t> idx(len, 0);
    for (;;) {
        bool has_pivot = false;
        for (std::size_t i : idx) has_pivot = has_pivot || i == pivot;
        if (has_pivot && !f(idx)) return false;
        std::size_t k = len;
        while (k > 0) {
            if (++idx[k - 1] < bound) break;
            idx[k - 1] = 0;
            --k;
        }
        if (k == 0) return true;
    }
}

}  // namespace

StateRelation ta_upward_simulation(const TreeAutomaton& ta) {
    const std::size_t n = ta.num_states;
    // Environment: (symbol, hole position, context tuple, result).
    struct Env {
        Symbol sym;
        std::size_t pos;  // 1-based hole position
        std::vector<State> context;
        State result;
        auto operator<=>(const Env&) const = default;
    };
    std::map<Env, State> env_ids;           // env -> LTS state (offset by n)
    std::map<std::pair<Symbol, std::size_t>, Symbol> label_ids;
    Lts lts;
    auto label = [&](Symbol a, std::size_t pos) {
        auto it = label_ids.find({a, pos});
        if (it == label_ids.end()) it = label_ids.emplace(std::make_pair(a, pos), label_ids.size()).first;
        return it->second;
    };
    std::vector<const Env*> env_list;
    for (const auto& rule : ta.rules)
        for (std::size_t pos = 1; pos <= rule.lhs.size(); ++pos) {
            Env e;
            e.sym = rule.sym;
            e.pos = pos;
            e.result = rule.rhs;
            e.context = rule.lhs;
            e.context.erase(e.context.begin() + static_cast<std::ptrdiff_t>(pos - 1));
            auto [it, fresh] = env_ids.emplace(e, n + env_ids.size());
            const Symbol l = label(rule.sym, pos);
            lts.add(rule.lhs[pos - 1], l, it->second);
            lts.add(it->second, l, rule.rhs);
        }
    lts.num_states = n + env_ids.size();
    lts.num_symbols = label_ids.size();
    lts.normalize();
    if (lts.num_symbols == 0) {
        // No rule has a hole: the upward-simulation condition degenerates to
        // the final-state implication.
        StateRelation out(n);
        for (State q = 0; q < n; ++q)
            for (State r = 0; r < n; ++r)
                out.set(q, r, !set_contains(ta.final, q) || set_contains(ta.final, r));
        return out;
    }

    StateRelation init(lts.num_states);
    for (State q = 0; q < n; ++q)
        for (State r = 0; r < n; ++r)
            init.set(q, r, !set_contains(ta.final, q) || set_contains(ta.final, r));
    // Environments: related iff equal symbol, position and context tuple
    // (identity parameter); result state unconstrained.
    for (auto i = env_ids.begin(); i != env_ids.end(); ++i)
        for (auto j = env_ids.begin(); j != env_ids.end(); ++j)
            if (i->first.sym == j->first.sym && i->first.pos == j->first.pos &&
                i->first.context == j->first.context)
                init.set(i->second, j->second, true);

    const StateRelation sim = compute_simulation(lts, coarsest_pr(init)).induced(lts.num_states);
    StateRelation out(n);
    for (State q = 0; q < n; ++q)
        for (State r = 0; r < n; ++r) out.set(q, r, sim.get(q, r));
    return out;
}

std::map<Symbol, StateSet> initial_macrostates(const TreeAutomaton& ta) {
    if (!ta.has_leaf_symbol())
        throw std::invalid_argument("initial_macrostates: no arity-0 symbol");
    std::map<Symbol, StateSet> out;
    for (Symbol a = 0; a < ta.num_symbols(); ++a)
        if (ta.arity[a] == 0) out[a];
    for (const auto& rule : ta.rules)
        if (rule.lhs.empty()) out[rule.sym].push_back(rule.rhs);
    for (auto& [a, s] : out) normalize_set(s);
    return out;
}

StateSet post_tuple(const TreeAutomaton& ta, const std::vector<StateSet>& tuple, Symbol a) {
    if (tuple.size() != ta.arity[a])
        throw std::invalid_argument("post_tuple: tuple length does not match arity");
    StateSet out;
    for (const auto& rule : ta.rules) {
        if (rule.sym != a) continue;
        bool match = true;
        for (std::size_t i = 0; i < rule.lhs.size() && match; ++i)
            match = set_contains(tuple[i], rule.lhs[i]);
        if (match) out.push_back(rule.rhs);
    }
    normalize_set(out);
    return out;
}

SearchStats ta_universality(const TreeAutomaton& ta, Engine engine, const StateRelation* rel,
                            const AntichainOptions& opts) {
    if (!ta.has_leaf_symbol()) throw std::invalid_argument("ta_universality: no leaf symbol");
    StateRelation owned;
    const StateRelation* r = nullptr;
    if (engine == Engine::AntichainSim) {
        if (rel) {
            r = rel;
        } else {
            owned = ta_upward_simulation(ta);
            r = &owned;
        }
    } else {
        owned = StateRelation::identity(ta.num_states);
        r = &owned;
    }
    const bool minimize = engine == Engine::AntichainSim && opts.opt2;
    const bool antichain = engine != Engine::Classical;

    SearchStats stats;
    // Initial macro-states, in symbol order.
    std::vector<StateSet> initial;
    for (const auto& [a, ia] : initial_macrostates(ta)) {
        ++stats.generated;
        if (macro_rejecting(ia, ta.final)) return stats;  // result=false
        initial.push_back(minimize ? minimize_macrostate(ia, *r) : ia);
    }

    std::vector<StateSet> processed;        // insertion order; doubles as tuple base
    std::deque<StateSet> next;
    std::set<StateSet> seen;                // classical dedup
    auto stored = [&] { return processed.size() + next.size(); };
    auto try_insert = [&](StateSet&& P) {
        if (antichain) {
            for (const StateSet& S : processed)
                if (relation_ae(*r, S, P)) return;
            for (const StateSet& S : next)
                if (relation_ae(*r, S, P)) return;
            std::erase_if(processed, [&](const StateSet& S) { return relation_ae(*r, P, S); });
            std::erase_if(next, [&](const StateSet& S) { return relation_ae(*r, P, S); });
        } else {
            if (!seen.insert(P).second) return;
        }
        next.push_back(std::move(P));
        stats.stored_peak = std::max(stats.stored_peak, stored() + seen.size() -
                                                            (antichain ? 0 : next.size()));
    };
    for (StateSet& ia : initial) try_insert(std::move(ia));

    while (!next.empty()) {
        StateSet R = next.front();
        next.pop_front();
        processed.push_back(R);
        const std::size_t pivot = processed.size() - 1;
        // Tuples drawn from the Processed snapshot at pop time.
        const std::vector<StateSet> snapshot = processed;
        for (Symbol a = 0; a < ta.num_symbols(); ++a) {
            const std::size_t arity = ta.arity[a];
            if (arity == 0) continue;  // consumed at initialization
            const bool go = for_each_pivot_tuple(
                arity, snapshot.size(), pivot, [&](const std::vector<std::size_t>& idx) {
                    std::vector<StateSet> tuple;
                    tuple.reserve(arity);
                    for (std::size_t i : idx) tuple.push_back(snapshot[i]);
                    StateSet P = post_tuple(ta, tuple, a);
                    if (minimize) P = minimize_macrostate(P, *r);
                    ++stats.generated;
                    if (macro_rejecting(P, ta.final)) return false;
                    try_insert(std::move(P));
                    return true;
                });
            if (!go) return stats;  // rejecting macro-state found
        }
    }
    stats.result = true;
    return stats;
}

SearchStats ta_inclusion(const TreeAutomaton& a, const TreeAutomaton& b, Engine engine,
                         const StateRelation* rel, const AntichainOptions& opts) {
    // Merge symbol tables via the union construction; it also validates arity
    // agreement. States: a's first, b's shifted by a.num_states.
    const TreeAutomaton u = union_ta(a, b);
    if (!u.has_leaf_symbol()) throw std::invalid_argument("ta_inclusion: no leaf symbol");
    const std::size_t off = a.num_states;
    TreeAutomaton ua, ub;  // re-indexed copies sharing u's symbol table
    ua.num_states = a.num_states;
    ub.num_states = b.num_states;
    ua.arity = ub.arity = u.arity;
    ua.symbol_names = ub.symbol_names = u.symbol_names;
    for (const auto& rule : u.rules) {
        const bool in_a = rule.rhs < off;
        if (in_a) {
            ua.rules.push_back(rule);
        } else {
            TreeAutomaton::Rule nr = rule;
            nr.rhs -= off;
            for (State& q : nr.lhs) q -= off;
            ub.rules.push_back(nr);
        }
    }
    for (State q : u.final)
        (q < off ? ua.final : ub.final).push_back(q < off ? q : q - off);

    StateRelation owned;
    const StateRelation* r = nullptr;
    if (engine == Engine::AntichainSim) {
        if (rel) {
            r = rel;
        } else {
            owned = ta_upward_simulation(u);
            r = &owned;
        }
    } else {
        owned = StateRelation::identity(u.num_states);
        r = &owned;
    }
    const bool minimize = engine == Engine::AntichainSim && opts.opt2;
    const bool antichain = engine != Engine::Classical;

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
    auto accepting = [&](State p, const StateSet& P) {
        return set_contains(ua.final, p) && !sets_intersect(P, ub.final);
    };

    using PState = std::pair<State, StateSet>;
    SearchStats stats;

    std::vector<PState> processed;
    std::deque<PState> next;
    std::set<PState> seen;
    auto try_insert = [&](PState&& cand) {
        const auto& [p, P] = cand;
        if (!antichain) {
            if (seen.insert(cand).second) next.push_back(std::move(cand));
            stats.stored_peak = std::max(stats.stored_peak, seen.size());
            return;
        }
        if (engine == Engine::AntichainSim && opts.opt1b)
            for (State pp : P)
                if (r->get(p, pp + off)) return;
        for (const auto& [s, S] : processed)
            if (r->get(p, s) && rel_ae_b(S, P)) return;
        for (const auto& [s, S] : next)
            if (r->get(p, s) && rel_ae_b(S, P)) return;
        auto dominated = [&](const PState& sS) {
            return r->get(sS.first, p) && rel_ae_b(P, sS.second);
        };
        std::erase_if(processed, dominated);
        std::erase_if(next, dominated);
        next.push_back(std::move(cand));
        stats.stored_peak = std::max(stats.stored_peak, processed.size() + next.size());
    };

    // Initial product-states, in symbol order then a-state order.
    const auto ia = initial_macrostates(ua);
    const auto ib = initial_macrostates(ub);
    for (const auto& [sym, ia_set] : ia) {
        const StateSet& ib_set = ib.at(sym);
        for (State i : ia_set) {
            ++stats.generated;
            if (accepting(i, ib_set)) return stats;  // counterexample leaf tree
            StateSet mb = minimize ? minimize_b(ib_set) : ib_set;
            try_insert({i, std::move(mb)});
        }
    }

    while (!next.empty()) {
        PState rR = next.front();
        next.pop_front();
        processed.push_back(rR);
        const std::size_t pivot = processed.size() - 1;
        const std::vector<PState> snapshot = processed;
        for (Symbol x = 0; x < u.num_symbols(); ++x) {
            const std::size_t arity = u.arity[x];
            if (arity == 0) continue;
            const bool go = for_each_pivot_tuple(
                arity, snapshot.size(), pivot, [&](const std::vector<std::size_t>& idx) {
                    std::vector<StateSet> atuple(arity), btuple(arity);
                    for (std::size_t i = 0; i < arity; ++i) {
                        atuple[i] = StateSet{snapshot[idx[i]].first};
                        btuple[i] = snapshot[idx[i]].second;
                    }
                    const StateSet qs = post_tuple(ua, atuple, x);
                    StateSet P = post_tuple(ub, btuple, x);
                    if (minimize) P = minimize_b(P);
                    for (State q : qs) {
                        ++stats.generated;
                        if (accepting(q, P)) return false;
                        try_insert({q, P});
                    }
                    return true;
                });
            if (!go) return stats;  // accepting product-state: not included
        }
    }
    stats.result = true;
    return stats;
}

}  // namespace simaut
