#include "simaut/core.hh"

#include <map>

namespace simaut {

Nfa union_nfa(const Nfa& a, const Nfa& b) {
    if (a.num_symbols != b.num_symbols)
        throw std::invalid_argument("union_nfa: alphabet size mismatch");
    Nfa u;
    u.num_symbols = a.num_symbols;
    u.num_states = a.num_states + b.num_states;
    u.symbol_names = a.symbol_names;
    const std::size_t off = a.num_states;
    u.transitions = a.transitions;
    for (const auto& [src, sym, dst] : b.transitions)
        u.add(src + off, sym, dst + off);
    u.initial = a.initial;
    for (State q : b.initial) u.initial.push_back(q + off);
    normalize_set(u.initial);
    u.final = a.final;
    for (State q : b.final) u.final.push_back(q + off);
    normalize_set(u.final);
    for (State q = 0; q < a.num_states; ++q)
        u.state_names.push_back("A." + a.state_name(q));
    for (State q = 0; q < b.num_states; ++q)
        u.state_names.push_back("B." + b.state_name(q));
    return u;
}

TreeAutomaton union_ta(const TreeAutomaton& a, const TreeAutomaton& b) {
    TreeAutomaton u;
    // Merge symbol tables by name; shared names must agree on arity.
    u.arity = a.arity;
    u.symbol_names.resize(a.num_symbols());
    for (Symbol s = 0; s < a.num_symbols(); ++s) u.symbol_names[s] = a.symbol_name(s);
    std::map<std::string, Symbol> by_name;
    for (Symbol s = 0; s < u.symbol_names.size(); ++s) by_name[u.symbol_names[s]] = s;
    std::vector<Symbol> bmap(b.num_symbols());
    for (Symbol s = 0; s < b.num_symbols(); ++s) {
        const std::string name = b.symbol_name(s);
        auto it = by_name.find(name);
        if (it != by_name.end()) {
            if (u.arity[it->second] != b.arity[s])
                throw std::invalid_argument("union_ta: arity conflict on symbol " + name);
            bmap[s] = it->second;
        } else {
            bmap[s] = u.arity.size();
            by_name[name] = bmap[s];
            u.arity.push_back(b.arity[s]);
            u.symbol_names.push_back(name);
        }
    }
    u.num_states = a.num_states + b.num_states;
    const std::size_t off = a.num_states;
    u.rules = a.rules;
    for (const auto& r : b.rules) {
        TreeAutomaton::Rule nr;
        nr.sym = bmap[r.sym];
        nr.rhs = r.rhs + off;
        for (State q : r.lhs) nr.lhs.push_back(q + off);
        u.rules.push_back(nr);
    }
    u.final = a.final;
    for (State q : b.final) u.final.push_back(q + off);
    normalize_set(u.final);
    for (State q = 0; q < a.num_states; ++q)
        u.state_names.push_back("A." + a.state_name(q));
    for (State q = 0; q < b.num_states; ++q)
        u.state_names.push_back("B." + b.state_name(q));
    u.normalize();
    return u;
}

AlternatingBuchiAutomaton normalize_aba(const AlternatingBuchiAutomaton& aba) {
    // Two distinct defects with opposite semantics:
    //  - a transition p →a ∅ (empty conjunct set) is an empty conjunction,
    //    i.e. TRUE — redirected to a fresh accepting sink with self-loops;
    //  - a missing cell δ(p,a) = {} (no alternatives) is an empty disjunction,
    //    i.e. FALSE — filled with a fresh rejecting sink with self-loops,
    //    whose only branch never meets an accepting state.
    bool needs_true = false, needs_dead = false;
    for (State q = 0; q < aba.num_states; ++q)
        for (Symbol a = 0; a < aba.num_symbols; ++a) {
            const auto& alts = aba.delta[q][a];
            if (alts.empty()) needs_dead = true;
            for (const auto& s : alts)
                if (s.empty()) needs_true = true;
        }
    if (!needs_true && !needs_dead) {
        AlternatingBuchiAutomaton out = aba;
        out.normalize_cells();
        return out;
    }
    AlternatingBuchiAutomaton out = aba;
    const State orig = out.num_states;
    State sink = SIZE_MAX, dead = SIZE_MAX;
    std::vector<std::string> names;
    for (State q = 0; q < orig; ++q) names.push_back(aba.state_name(q));
    if (needs_true) {
        sink = out.num_states++;
        names.push_back("qsink");
    }
    if (needs_dead) {
        dead = out.num_states++;
        names.push_back("qdead");
    }
    out.state_names = std::move(names);
    if (needs_true) {
        out.accepting.push_back(sink);
        normalize_set(out.accepting);
    }
    out.delta.resize(out.num_states, std::vector<std::vector<StateSet>>(out.num_symbols));
    for (Symbol a = 0; a < out.num_symbols; ++a) {
        if (needs_true) out.delta[sink][a].push_back(StateSet{sink});
        if (needs_dead) out.delta[dead][a].push_back(StateSet{dead});
    }
    for (State q = 0; q < orig; ++q)
        for (Symbol a = 0; a < out.num_symbols; ++a) {
            auto& alts = out.delta[q][a];
            for (auto& s : alts)
                if (s.empty()) s = StateSet{sink};
            if (alts.empty()) alts.push_back(StateSet{dead});
        }
    out.normalize_cells();
    return out;
}

}  // namespace simaut
