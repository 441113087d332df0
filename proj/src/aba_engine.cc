#include "simaut/aba_engine.hh"

#include <map>
#include <set>

#include "simaut/lts_sim.hh"

namespace simaut {
namespace {

constexpr std::size_t kNone = SIZE_MAX;

/// Partial ABAs are accepted (a missing cell means FALSE: no run continues),
/// but empty conjunct sets must have been normalized away first.
void require_normalized(const AlternatingBuchiAutomaton& a, const char* who) {
    if (a.delta.size() != a.num_states)
        throw std::invalid_argument(std::string(who) + ": delta shape mismatch");
    for (const auto& row : a.delta) {
        if (row.size() != a.num_symbols)
            throw std::invalid_argument(std::string(who) + ": delta shape mismatch");
        for (const auto& alts : row)
            for (const auto& s : alts)
                if (s.empty())
                    throw std::invalid_argument(std::string(who) +
                                                ": empty conjunct set (normalize first)");
    }
}

bool preorder_alpha(const AlternatingBuchiAutomaton& a, State p, State r) {
    return !a.is_accepting_state(p) || a.is_accepting_state(r);
}

bool preorder_iota(const AlternatingBuchiAutomaton& a, State p, State r) {
    return p != a.initial || r == a.initial;
}

}  // namespace

bool aba_ae(const StateRelation& rel, const StateSet& s1, const StateSet& s2) {
    for (State r : s2) {
        bool dominated = false;
        for (State p : s1)
            if (rel.get(p, r)) { dominated = true; break; }
        if (!dominated) return false;
    }
    return true;
}

std::vector<AbaEnvironment> aba_environments(const AlternatingBuchiAutomaton& a) {
    std::set<AbaEnvironment> envs;
    for (State p = 0; p < a.num_states; ++p)
        for (Symbol x = 0; x < a.num_symbols; ++x)
            for (const StateSet& P : a.delta[p][x])
                for (State removed : P) {
                    AbaEnvironment e;
                    e.p = p;
                    e.a = x;
                    for (State q : P)
                        if (q != removed) e.residual.push_back(q);
                    envs.insert(std::move(e));
                }
    return {envs.begin(), envs.end()};
}

StateRelation aba_forward_simulation(const AlternatingBuchiAutomaton& a) {
    require_normalized(a, "aba_forward_simulation");
    const std::size_t n = a.num_states;
    StateRelation rel(n);
    for (State p = 0; p < n; ++p)
        for (State r = 0; r < n; ++r) rel.set(p, r, preorder_alpha(a, p, r));
    bool changed = true;
    while (changed) {
        changed = false;
        for (State p = 0; p < n; ++p)
            for (State r = 0; r < n; ++r) {
                if (!rel.get(p, r)) continue;
                bool ok = true;
                for (Symbol x = 0; x < a.num_symbols && ok; ++x)
                    for (const StateSet& P : a.delta[p][x]) {
                        bool matched = false;
                        for (const StateSet& R : a.delta[r][x])
                            if (aba_ae(rel, P, R)) { matched = true; break; }
                        if (!matched) { ok = false; break; }
                    }
                if (!ok) {
                    rel.set(p, r, false);
                    changed = true;
                }
            }
    }
    return rel;
}

bool aba_is_unambiguous(const AlternatingBuchiAutomaton& a, const StateRelation& fwd) {
    for (const auto& row : a.delta)
        for (const auto& alts : row)
            for (const StateSet& P : alts)
                for (State p : P)
                    for (State q : P)
                        if (p != q && fwd.get(p, q) && fwd.get(q, p)) return false;
    return true;
}

AlternatingBuchiAutomaton remove_ambiguity(const AlternatingBuchiAutomaton& a,
                                           const StateRelation& fwd) {
    AlternatingBuchiAutomaton out = a;
    for (auto& row : out.delta)
        for (auto& alts : row)
            for (StateSet& P : alts) {
                StateSet kept;
                for (std::size_t i = 0; i < P.size(); ++i) {
                    bool drop = false;
                    for (std::size_t j = i + 1; j < P.size() && !drop; ++j)
                        drop = fwd.get(P[j], P[i]);
                    if (!drop) kept.push_back(P[i]);
                }
                P = std::move(kept);
            }
    out.normalize_cells();
    return out;
}

Lts build_env_lts(const AlternatingBuchiAutomaton& a) {
    require_normalized(a, "build_env_lts");
    const auto envs = aba_environments(a);
    std::map<AbaEnvironment, State> env_id;
    for (std::size_t i = 0; i < envs.size(); ++i) env_id[envs[i]] = a.num_states + i;

    Lts lts;
    lts.num_states = a.num_states + envs.size();
    lts.num_symbols = a.num_symbols;
    for (State p = 0; p < a.num_states; ++p)
        for (Symbol x = 0; x < a.num_symbols; ++x)
            for (const StateSet& P : a.delta[p][x])
                for (State removed : P) {
                    AbaEnvironment e;
                    e.p = p;
                    e.a = x;
                    for (State q : P)
                        if (q != removed) e.residual.push_back(q);
                    const State es = env_id.at(e);
                    lts.add(es, x, p);
                    lts.add(removed, x, es);
                }
    lts.normalize();
    return lts;
}

StateRelation backward_init_preorder(const AlternatingBuchiAutomaton& a,
                                     const StateRelation& fwd) {
    require_normalized(a, "backward_init_preorder");
    if (!fwd.is_reflexive() || !fwd.is_transitive())
        throw std::invalid_argument("backward_init_preorder: fwd is not a preorder");
    const std::size_t n = a.num_states;
    const auto envs = aba_environments(a);
    std::map<AbaEnvironment, State> env_id;
    for (std::size_t i = 0; i < envs.size(); ++i) env_id[envs[i]] = n + i;

    StateRelation init(n + envs.size());
    for (State q1 = 0; q1 < n; ++q1)
        for (State q2 = 0; q2 < n; ++q2)
            init.set(q1, q2, preorder_iota(a, q1, q2) && preorder_alpha(a, q1, q2));

    // Transitions as (source, symbol, conjunct set), per Alg. "Add Pairs of
    // States to I" run over every pair with a shared symbol.
    struct Trans {
        State src;
        Symbol sym;
        const StateSet* set;
    };
    std::vector<Trans> trans;
    for (State p = 0; p < n; ++p)
        for (Symbol x = 0; x < a.num_symbols; ++x)
            for (const StateSet& P : a.delta[p][x]) trans.push_back({p, x, &P});

    auto env_state = [&](State src, Symbol sym, const StateSet& whole, State removed) {
        AbaEnvironment e;
        e.p = src;
        e.a = sym;
        for (State q : whole)
            if (q != removed) e.residual.push_back(q);
        return env_id.at(e);
    };

    for (const Trans& tp : trans)
        for (const Trans& tr : trans) {
            if (tp.sym != tr.sym) continue;
            const StateSet& P = *tp.set;
            const StateSet& R = *tr.set;
            // beta : R -> {T, F} ∪ P, encoded by index into P (kNone = F,
            // SIZE_MAX-1 = T).
            constexpr std::size_t kTop = SIZE_MAX - 1;
            std::vector<std::size_t> beta(R.size(), kNone);
            for (std::size_t i = 0; i < P.size(); ++i)
                for (std::size_t j = 0; j < R.size(); ++j)
                    if (fwd.get(P[i], R[j])) beta[j] = beta[j] == kNone ? i : kTop;
            // KeyState: the unique beta-F state of R, if any; two such states
            // terminate the pair.
            std::size_t key = kNone;
            bool dead = false;
            for (std::size_t j = 0; j < R.size() && !dead; ++j)
                if (beta[j] == kNone) {
                    if (key == kNone) key = j;
                    else dead = true;
                }
            if (dead) continue;
            // gamma : P -> {T, F} ∪ R from beta preimages.
            std::vector<std::size_t> gamma(P.size(), kNone);
            for (std::size_t j = 0; j < R.size(); ++j)
                if (beta[j] != kNone && beta[j] != kTop)
                    gamma[beta[j]] = gamma[beta[j]] == kNone ? j : kTop;
            for (std::size_t i = 0; i < P.size(); ++i)
                for (std::size_t j = 0; j < R.size(); ++j) {
                    if (key != kNone && key != j) continue;
                    if (gamma[i] != kNone && gamma[i] != j) continue;
                    init.set(env_state(tp.src, tp.sym, P, P[i]),
                             env_state(tr.src, tr.sym, R, R[j]), true);
                }
        }
    return init;
}

StateRelation aba_backward_simulation(const AlternatingBuchiAutomaton& a,
                                      const StateRelation& fwd) {
    const Lts lts = build_env_lts(a);
    const StateRelation init = backward_init_preorder(a, fwd);
    Lts run = lts;
    if (run.num_symbols == 0) run.num_symbols = 1;  // stateless alphabet edge case
    const StateRelation sim = compute_simulation(run, coarsest_pr(init)).induced(run.num_states);
    StateRelation out(a.num_states);
    for (State q = 0; q < a.num_states; ++q)
        for (State r = 0; r < a.num_states; ++r) out.set(q, r, sim.get(q, r));
    return out;
}

StateRelation mediated_preorder(const StateRelation& fwd, const StateRelation& bwd) {
    if (fwd.size() != bwd.size())
        throw std::invalid_argument("mediated_preorder: carrier mismatch");
    if (!fwd.is_reflexive() || !fwd.is_transitive() || !bwd.is_reflexive() || !bwd.is_transitive())
        throw std::invalid_argument("mediated_preorder: inputs must be preorders");
    const std::size_t n = fwd.size();
    const StateRelation bound = fwd.compose(bwd.inverse());
    StateRelation m = bound;
    // Greatest fixpoint: delete (q,s) while some r with s ⪯F r lacks (q,r).
    bool changed = true;
    while (changed) {
        changed = false;
        for (State q = 0; q < n; ++q)
            for (State s = 0; s < n; ++s) {
                if (!m.get(q, s)) continue;
                for (State r = 0; r < n; ++r)
                    if (fwd.get(s, r) && !m.get(q, r)) {
                        m.set(q, s, false);
                        changed = true;
                        break;
                    }
            }
    }
    if (!m.is_preorder() || !fwd.subset_of(m) || !m.subset_of(bound) ||
        !m.compose(fwd).subset_of(m))
        throw std::runtime_error("mediated_preorder: result violates the mediated contract");
    return m;
}

AlternatingBuchiAutomaton extend_aba(const AlternatingBuchiAutomaton& a,
                                     const StateRelation& med) {
    require_normalized(a, "extend_aba");
    if (med.size() != a.num_states)
        throw std::invalid_argument("extend_aba: carrier mismatch");
    AlternatingBuchiAutomaton out = a;
    for (State r = 0; r < a.num_states; ++r)
        for (Symbol x = 0; x < a.num_symbols; ++x) {
            std::vector<StateSet> alts;
            for (State q = 0; q < a.num_states; ++q)
                if (med.get(q, r))
                    for (const StateSet& P : a.delta[q][x]) alts.push_back(P);
            out.delta[r][x] = std::move(alts);
        }
    StateSet acc;
    for (State p = 0; p < a.num_states; ++p)
        for (State q : a.accepting)
            if (med.get(q, p) && med.get(p, q)) { acc.push_back(p); break; }
    out.accepting = std::move(acc);
    normalize_set(out.accepting);
    out.normalize_cells();
    return out;
}

AlternatingBuchiAutomaton quotient_aba(const AlternatingBuchiAutomaton& a,
                                       const StateRelation& equiv) {
    if (equiv.size() != a.num_states || !equiv.is_reflexive() || !equiv.is_symmetric() ||
        !equiv.is_transitive())
        throw std::invalid_argument("quotient_aba: not an equivalence");
    std::vector<std::size_t> cls(a.num_states, kNone);
    std::vector<State> rep;
    for (State q = 0; q < a.num_states; ++q) {
        for (std::size_t c = 0; c < rep.size() && cls[q] == kNone; ++c)
            if (equiv.get(q, rep[c])) cls[q] = c;
        if (cls[q] == kNone) {
            cls[q] = rep.size();
            rep.push_back(q);
        }
    }
    AlternatingBuchiAutomaton out;
    out.num_states = rep.size();
    out.num_symbols = a.num_symbols;
    out.initial = cls[a.initial];
    out.symbol_names = a.symbol_names;
    if (!a.state_names.empty()) {
        out.state_names.resize(rep.size());
        for (std::size_t c = 0; c < rep.size(); ++c) out.state_names[c] = a.state_name(rep[c]);
    }
    for (State q : a.accepting) out.accepting.push_back(cls[q]);
    normalize_set(out.accepting);
    out.resize_delta();
    for (State p = 0; p < a.num_states; ++p)
        for (Symbol x = 0; x < a.num_symbols; ++x)
            for (const StateSet& P : a.delta[p][x]) {
                StateSet lifted;
                for (State q : P) lifted.push_back(cls[q]);
                normalize_set(lifted);
                out.delta[cls[p]][x].push_back(std::move(lifted));
            }
    out.normalize_cells();
    return out;
}

}  // namespace simaut
