#include "simaut/oracles.hh"

#include <deque>
#include <map>

namespace simaut {
namespace {

/// ∀r∈s2 ∃p∈s1: p rel r (the alternating-chapter ∀∃ lifting), unfolded
/// locally to keep the oracles free of engine code.
bool ae_alt(const StateRelation& rel, const StateSet& s1, const StateSet& s2) {
    for (State r : s2) {
        bool found = false;
        for (State p : s1)
            if (rel.get(p, r)) { found = true; break; }
        if (!found) return false;
    }
    return true;
}

StateSet nfa_post(const Nfa& a, const StateSet& ms, Symbol x) {
    StateSet out;
    for (const auto& [src, sym, dst] : a.transitions)
        if (sym == x && set_contains(ms, src)) out.push_back(dst);
    normalize_set(out);
    return out;
}

}  // namespace

StateRelation naive_lts_simulation(const Lts& lts, const StateRelation& init) {
    if (!init.is_reflexive() || !init.is_transitive())
        throw std::invalid_argument("naive_lts_simulation: init is not a preorder");
    const std::size_t n = lts.num_states;
    std::vector<std::vector<std::vector<State>>> post(lts.num_symbols,
                                                      std::vector<std::vector<State>>(n));
    for (const auto& [src, sym, dst] : lts.transitions) post[sym][src].push_back(dst);

    StateRelation rel = init;
    bool changed = true;
    while (changed) {
        changed = false;
        for (State p = 0; p < n; ++p)
            for (State r = 0; r < n; ++r) {
                if (!rel.get(p, r)) continue;
                bool ok = true;
                for (Symbol a = 0; a < lts.num_symbols && ok; ++a)
                    for (State ps : post[a][p]) {
                        bool matched = false;
                        for (State rs : post[a][r])
                            if (rel.get(ps, rs)) { matched = true; break; }
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

bool fa_universal_subset(const Nfa& a, std::size_t cap) {
    std::set<StateSet> seen;
    std::deque<StateSet> work;
    StateSet init = a.initial;
    normalize_set(init);
    seen.insert(init);
    work.push_back(init);
    while (!work.empty()) {
        StateSet ms = std::move(work.front());
        work.pop_front();
        if (!sets_intersect(ms, a.final)) return false;
        for (Symbol x = 0; x < a.num_symbols; ++x) {
            StateSet nxt = nfa_post(a, ms, x);
            if (seen.insert(nxt).second) {
                if (seen.size() > cap) throw OracleCapExceeded("fa_universal_subset: cap exceeded");
                work.push_back(nxt);
            }
        }
    }
    return true;
}

bool fa_inclusion_product(const Nfa& a, const Nfa& b, std::size_t cap) {
    if (a.num_symbols != b.num_symbols)
        throw std::invalid_argument("fa_inclusion_product: alphabet mismatch");
    using PState = std::pair<State, StateSet>;
    std::set<PState> seen;
    std::deque<PState> work;
    StateSet binit = b.initial;
    normalize_set(binit);
    for (State i : a.initial)
        if (seen.insert({i, binit}).second) work.push_back({i, binit});
    while (!work.empty()) {
        auto [q, S] = std::move(work.front());
        work.pop_front();
        if (set_contains(a.final, q) && !sets_intersect(S, b.final)) return false;
        for (Symbol x = 0; x < a.num_symbols; ++x) {
            const StateSet S2 = nfa_post(b, S, x);
            for (const auto& [src, sym, dst] : a.transitions) {
                if (sym != x || src != q) continue;
                PState nxt{dst, S2};
                if (seen.insert(nxt).second) {
                    if (seen.size() > cap)
                        throw OracleCapExceeded("fa_inclusion_product: cap exceeded");
                    work.push_back(std::move(nxt));
                }
            }
        }
    }
    return true;
}

TreeAutomaton ta_determinize(const TreeAutomaton& ta, std::vector<StateSet>* macro_states,
                             std::size_t cap) {
    if (!ta.has_leaf_symbol()) throw std::invalid_argument("ta_determinize: no leaf symbol");
    std::vector<StateSet> macros;                 // macro-state member sets
    std::map<StateSet, State> macro_id;
    std::vector<TreeAutomaton::Rule> rules;
    auto intern = [&](StateSet&& s) {
        auto it = macro_id.find(s);
        if (it != macro_id.end()) return std::make_pair(it->second, false);
        if (macros.size() >= cap) throw OracleCapExceeded("ta_determinize: cap exceeded");
        const State id = macros.size();
        macro_id.emplace(s, id);
        macros.push_back(std::move(s));
        return std::make_pair(id, true);
    };
    // Group rules by symbol for tuple matching.
    std::vector<std::vector<const TreeAutomaton::Rule*>> by_sym(ta.num_symbols());
    for (const auto& r : ta.rules) by_sym[r.sym].push_back(&r);

    // Leaf macro-states first, then close under all symbols; the deterministic
    // automaton is complete by construction (empty macro-state included when
    // reachable).
    for (Symbol x = 0; x < ta.num_symbols(); ++x) {
        if (ta.arity[x] != 0) continue;
        StateSet s;
        for (const auto* r : by_sym[x]) s.push_back(r->rhs);
        normalize_set(s);
        auto [id, fresh] = intern(std::move(s));
        rules.push_back({{}, x, id});
    }
    // Worklist closure: process each macro-state once; for each symbol of
    // arity k enumerate k-tuples containing the new macro-state.
    std::size_t processed = 0;
    while (processed < macros.size()) {
        const std::size_t pivot = processed++;
        for (Symbol x = 0; x < ta.num_symbols(); ++x) {
            const std::size_t k = ta.arity[x];
            if (k == 0) continue;
            std::vector<std::size_t> idx(k, 0);
            for (;;) {
                bool has_pivot = false;
                for (std::size_t i : idx)
                    if (i == pivot) has_pivot = true;
                bool in_range = true;
                for (std::size_t i : idx)
                    if (i > pivot) in_range = false;
                if (has_pivot && in_range) {
                    StateSet s;
                    for (const auto* r : by_sym[x]) {
                        bool match = true;
                        for (std::size_t i = 0; i < k && match; ++i)
                            match = set_contains(macros[idx[i]], r->lhs[i]);
                        if (match) s.push_back(r->rhs);
                    }
                    normalize_set(s);
                    auto [id, fresh] = intern(std::move(s));
                    TreeAutomaton::Rule rule;
                    rule.sym = x;
                    rule.rhs = id;
                    for (std::size_t i : idx) rule.lhs.push_back(i);
                    rules.push_back(std::move(rule));
                }
                std::size_t c = k;
                while (c > 0) {
                    if (++idx[c - 1] <= pivot) break;
                    idx[c - 1] = 0;
                    --c;
                }
                if (c == 0) break;
            }
        }
    }

    TreeAutomaton out;
    out.num_states = macros.size();
    out.arity = ta.arity;
    out.symbol_names = ta.symbol_names;
    out.rules = std::move(rules);
    for (std::size_t i = 0; i < macros.size(); ++i)
        if (sets_intersect(macros[i], ta.final)) out.final.push_back(i);
    normalize_set(out.final);
    out.normalize();
    if (macro_states) *macro_states = macros;
    return out;
}

bool ta_universal_classical(const TreeAutomaton& ta, std::size_t cap) {
    std::vector<StateSet> macros;
    ta_determinize(ta, &macros, cap);
    // Complement = flip finals; nonempty complement iff some reachable
    // macro-state misses F.
    for (const StateSet& m : macros)
        if (!sets_intersect(m, ta.final)) return false;
    return true;
}

bool ta_inclusion_classical(const TreeAutomaton& a, const TreeAutomaton& b, std::size_t cap) {
    const TreeAutomaton u = union_ta(a, b);  // validates/merges symbol tables
    // Re-split with the shared symbol table.
    const std::size_t off = a.num_states;
    std::vector<std::vector<const TreeAutomaton::Rule*>> a_by_sym(u.num_symbols());
    TreeAutomaton bb;
    bb.num_states = b.num_states;
    bb.arity = u.arity;
    bb.symbol_names = u.symbol_names;
    std::vector<TreeAutomaton::Rule> a_rules;
    for (const auto& r : u.rules) {
        if (r.rhs < off) {
            a_rules.push_back(r);
        } else {
            TreeAutomaton::Rule nr = r;
            nr.rhs -= off;
            for (State& q : nr.lhs) q -= off;
            bb.rules.push_back(nr);
        }
    }
    StateSet a_final;
    for (State q : u.final)
        (q < off ? a_final : bb.final).push_back(q < off ? q : q - off);

    std::vector<StateSet> bmacros;
    const TreeAutomaton detb = ta_determinize(bb, &bmacros, cap);
    std::vector<std::vector<const TreeAutomaton::Rule*>> det_by_sym(u.num_symbols());
    for (const auto& r : detb.rules) det_by_sym[r.sym].push_back(&r);
    for (const auto& r : a_rules) a_by_sym[r.sym].push_back(&r);

    // Reachable pairs (q, d): q reachable in a over some tree evaluating to
    // deterministic state d in b.
    std::set<std::pair<State, State>> seen;
    std::deque<std::pair<State, State>> work;
    auto push = [&](State q, State d) {
        if (seen.insert({q, d}).second) {
            if (seen.size() > cap) throw OracleCapExceeded("ta_inclusion_classical: cap exceeded");
            work.push_back({q, d});
        }
    };
    auto accepting = [&](State q, State d) {
        return set_contains(a_final, q) && !set_contains(detb.final, d);
    };
    for (Symbol x = 0; x < u.num_symbols(); ++x) {
        if (u.arity[x] != 0) continue;
        State d = SIZE_MAX;
        for (const auto* r : det_by_sym[x]) d = r->rhs;
        for (const auto* r : a_by_sym[x]) push(r->rhs, d);
    }
    std::vector<std::pair<State, State>> reached;
    while (!work.empty()) {
        auto pr = work.front();
        work.pop_front();
        if (accepting(pr.first, pr.second)) return false;
        reached.push_back(pr);
        const std::size_t pivot = reached.size() - 1;
        for (Symbol x = 0; x < u.num_symbols(); ++x) {
            const std::size_t k = u.arity[x];
            if (k == 0) continue;
            std::vector<std::size_t> idx(k, 0);
            for (;;) {
                bool has_pivot = false;
                for (std::size_t i : idx)
                    if (i == pivot) has_pivot = true;
                if (has_pivot) {
                    // b side: deterministic successor of the d-tuple.
                    State d2 = SIZE_MAX;
                    for (const auto* r : det_by_sym[x]) {
                        bool match = true;
                        for (std::size_t i = 0; i < k && match; ++i)
                            match = r->lhs[i] == reached[idx[i]].second;
                        if (match) { d2 = r->rhs; break; }
                    }
                    for (const auto* r : a_by_sym[x]) {
                        bool match = true;
                        for (std::size_t i = 0; i < k && match; ++i)
                            match = r->lhs[i] == reached[idx[i]].first;
                        if (match) push(r->rhs, d2);
                    }
                }
                std::size_t c = k;
                while (c > 0) {
                    if (++idx[c - 1] < reached.size()) break;
                    idx[c - 1] = 0;
                    --c;
                }
                if (c == 0) break;
            }
        }
    }
    return true;
}

namespace {

/// All trees with ≤ budget nodes, all holes drawn in order from `holes`
/// (each exactly once, left-to-right). Hole trees use symbol
/// ta.num_symbols() + hole_index.
void gen_contexts(const TreeAutomaton& ta, std::size_t holes_lo, std::size_t holes_hi,
                  std::size_t budget, std::vector<Tree>& out) {
    if (holes_lo + 1 == holes_hi) {
        Tree h;
        h.sym = ta.num_symbols() + holes_lo;
        out.push_back(h);
    }
    if (budget == 0) return;
    for (Symbol x = 0; x < ta.num_symbols(); ++x) {
        const std::size_t k = ta.arity[x];
        if (k == 0) {
            if (holes_lo == holes_hi) {
                Tree t;
                t.sym = x;
                out.push_back(t);
            }
            continue;
        }
        // Distribute the hole interval and remaining budget over k children.
        struct Frame {
            std::vector<Tree> children;
            std::size_t hole_pos;
            std::size_t budget_left;
        };
        std::vector<Frame> partial{{{}, holes_lo, budget - 1}};
        for (std::size_t c = 0; c < k; ++c) {
            std::vector<Frame> nxt;
            for (const Frame& f : partial)
                for (std::size_t h2 = f.hole_pos; h2 <= holes_hi; ++h2)
                    for (std::size_t b2 = 0; b2 <= f.budget_left; ++b2) {
                        std::vector<Tree> subs;
                        gen_contexts(ta, f.hole_pos, h2, b2, subs);
                        for (Tree& s : subs) {
                            // Keep only exact-budget children except that we
                            // enumerate budgets; dedup via the final set.
                            Frame g = f;
                            g.children.push_back(std::move(s));
                            g.hole_pos = h2;
                            g.budget_left = f.budget_left - b2;
                            nxt.push_back(std::move(g));
                        }
                    }
            partial = std::move(nxt);
        }
        for (Frame& f : partial) {
            if (f.hole_pos != holes_hi) continue;
            Tree t;
            t.sym = x;
            t.children = std::move(f.children);
            out.push_back(std::move(t));
        }
    }
}

/// States reachable at the root; holes evaluate to the forced singleton.
StateSet eval_tree(const TreeAutomaton& ta, const std::vector<State>& hole_states,
                   const Tree& t) {
    if (t.sym >= ta.num_symbols()) return {hole_states[t.sym - ta.num_symbols()]};
    std::vector<StateSet> child;
    child.reserve(t.children.size());
    for (const Tree& c : t.children) child.push_back(eval_tree(ta, hole_states, c));
    StateSet out;
    for (const auto& r : ta.rules) {
        if (r.sym != t.sym) continue;
        bool match = true;
        for (std::size_t i = 0; i < r.lhs.size() && match; ++i)
            match = set_contains(child[i], r.lhs[i]);
        if (match) out.push_back(r.rhs);
    }
    normalize_set(out);
    return out;
}

}  // namespace

std::set<Tree> enumerate_contexts(const TreeAutomaton& ta, const std::vector<State>& states,
                                  std::size_t max_nodes) {
    if (max_nodes > 6) throw OracleCapExceeded("enumerate_contexts: max_nodes > 6");
    std::vector<Tree> all;
    gen_contexts(ta, 0, states.size(), max_nodes, all);
    std::set<Tree> out;
    for (const Tree& t : all)
        if (sets_intersect(eval_tree(ta, states, t), ta.final)) out.insert(t);
    return out;
}

bool ta_accepts_tree(const TreeAutomaton& ta, const Tree& t) {
    return sets_intersect(eval_tree(ta, {}, t), ta.final);
}

Nfa aba_to_nba(const AlternatingBuchiAutomaton& a) {
    // Partial ABAs are fine (a missing cell means no run continues); empty
    // conjunct sets are not (normalize first).
    for (const auto& row : a.delta)
        for (const auto& alts : row)
            for (const auto& s : alts)
                if (s.empty())
                    throw std::invalid_argument("aba_to_nba: empty conjunct set (normalize first)");
    using BP = std::pair<StateSet, StateSet>;  // (S, O), O ⊆ S \ alpha-resets
    std::map<BP, State> id;
    std::vector<BP> states;
    auto intern = [&](BP&& bp) {
        auto it = id.find(bp);
        if (it != id.end()) return it->second;
        const State s = states.size();
        id.emplace(bp, s);
        states.push_back(std::move(bp));
        return s;
    };
    StateSet o0;
    if (!a.is_accepting_state(a.initial)) o0.push_back(a.initial);
    Nfa out;
    out.num_symbols = a.num_symbols;
    out.initial = {intern({{a.initial}, std::move(o0)})};

    std::size_t processed = 0;
    while (processed < states.size()) {
        const State cur = processed++;
        const auto [S, O] = states[cur];  // copy: `states` grows below
        for (Symbol x = 0; x < a.num_symbols; ++x) {
            // A member with no alternative kills every run on x.
            bool stuck = false;
            for (State s : S)
                if (a.delta[s][x].empty()) { stuck = true; break; }
            if (stuck) continue;
            // One conjunct choice per member of S.
            std::vector<std::size_t> pick(S.size(), 0);
            for (;;) {
                StateSet s2, oimg;
                for (std::size_t i = 0; i < S.size(); ++i) {
                    const StateSet& c = a.delta[S[i]][x][pick[i]];
                    s2.insert(s2.end(), c.begin(), c.end());
                    if (set_contains(O, S[i])) oimg.insert(oimg.end(), c.begin(), c.end());
                }
                normalize_set(s2);
                normalize_set(oimg);
                StateSet o2;
                const StateSet& base = O.empty() ? s2 : oimg;
                for (State q : base)
                    if (!a.is_accepting_state(q)) o2.push_back(q);
                out.add(cur, x, intern({std::move(s2), std::move(o2)}));
                std::size_t c = S.size();
                while (c > 0) {
                    if (++pick[c - 1] < a.delta[S[c - 1]][x].size()) break;
                    pick[c - 1] = 0;
                    --c;
                }
                if (c == 0 || S.empty()) break;
            }
        }
    }
    out.num_states = states.size();
    for (std::size_t i = 0; i < states.size(); ++i)
        if (states[i].second.empty()) out.final.push_back(i);
    normalize_set(out.final);
    std::sort(out.transitions.begin(), out.transitions.end());
    out.transitions.erase(std::unique(out.transitions.begin(), out.transitions.end()),
                          out.transitions.end());
    return out;
}

bool nba_lasso_member(const Nfa& nba, const LassoWord& w) {
    if (w.loop.empty()) throw std::invalid_argument("nba_lasso_member: empty loop");
    // States reachable after the prefix.
    StateSet cur = nba.initial;
    normalize_set(cur);
    for (Symbol x : w.prefix) cur = nfa_post(nba, cur, x);
    // Product with loop positions.
    const std::size_t k = w.loop.size();
    const std::size_t n = nba.num_states;
    auto node = [&](State q, std::size_t i) { return q * k + i; };
    std::vector<std::vector<std::size_t>> succ(n * k);
    for (const auto& [src, sym, dst] : nba.transitions)
        for (std::size_t i = 0; i < k; ++i)
            if (sym == w.loop[i]) succ[node(src, i)].push_back(node(dst, (i + 1) % k));
    auto reach_from = [&](const std::vector<std::size_t>& roots) {
        std::vector<bool> vis(n * k, false);
        std::deque<std::size_t> q(roots.begin(), roots.end());
        for (std::size_t r : roots) vis[r] = true;
        while (!q.empty()) {
            const std::size_t v = q.front();
            q.pop_front();
            for (std::size_t s : succ[v])
                if (!vis[s]) {
                    vis[s] = true;
                    q.push_back(s);
                }
        }
        return vis;
    };
    std::vector<std::size_t> roots;
    for (State q : cur) roots.push_back(node(q, 0));
    const auto reach = reach_from(roots);
    for (State f : nba.final)
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t v = node(f, i);
            if (!reach[v]) continue;
            // Accepting node on a cycle reachable from the loop entry?
            const auto back = reach_from(succ[v]);
            if (back[v]) return true;
        }
    return false;
}

bool aba_lasso_member(const AlternatingBuchiAutomaton& a, const LassoWord& w) {
    return nba_lasso_member(aba_to_nba(a), w);
}

namespace {

void all_words(std::size_t alphabet, std::size_t lo, std::size_t hi,
               std::vector<std::vector<Symbol>>& out) {
    std::vector<Symbol> w;
    auto rec = [&](auto&& self, std::size_t len) -> void {
        if (w.size() == len) {
            out.push_back(w);
            return;
        }
        for (Symbol x = 0; x < alphabet; ++x) {
            w.push_back(x);
            self(self, len);
            w.pop_back();
        }
    };
    for (std::size_t len = lo; len <= hi; ++len) rec(rec, len);
}

}  // namespace

bool aba_lasso_language_equal(const AlternatingBuchiAutomaton& a,
                              const AlternatingBuchiAutomaton& b, std::size_t max_u,
                              std::size_t max_v) {
    if (max_u > 4 || max_v > 4)
        throw OracleCapExceeded("aba_lasso_language_equal: bound exceeds 4");
    if (a.num_symbols != b.num_symbols)
        throw std::invalid_argument("aba_lasso_language_equal: alphabet mismatch");
    const Nfa na = aba_to_nba(a);
    const Nfa nb = aba_to_nba(b);
    std::vector<std::vector<Symbol>> us, vs;
    all_words(a.num_symbols, 0, max_u, us);
    all_words(a.num_symbols, 1, max_v, vs);
    for (const auto& u : us)
        for (const auto& v : vs) {
            const LassoWord w{u, v};
            if (nba_lasso_member(na, w) != nba_lasso_member(nb, w)) return false;
        }
    return true;
}

std::set<std::vector<Symbol>> word_language_bounded(const Nfa& a, std::size_t max_len) {
    if (max_len > 8) throw OracleCapExceeded("word_language_bounded: max_len > 8");
    std::vector<std::vector<Symbol>> words;
    all_words(a.num_symbols, 0, max_len, words);
    std::set<std::vector<Symbol>> out;
    for (const auto& w : words) {
        StateSet cur = a.initial;
        normalize_set(cur);
        for (Symbol x : w) cur = nfa_post(a, cur, x);
        if (sets_intersect(cur, a.final)) out.insert(w);
    }
    return out;
}

std::set<Tree> tree_language_bounded(const TreeAutomaton& ta, std::size_t max_nodes) {
    if (max_nodes > 8) throw OracleCapExceeded("tree_language_bounded: max_nodes > 8");
    // Enumerate all trees with ≤ max_nodes nodes by size.
    std::vector<std::vector<Tree>> by_size(max_nodes + 1);  // exact node count
    for (std::size_t size = 1; size <= max_nodes; ++size)
        for (Symbol x = 0; x < ta.num_symbols(); ++x) {
            const std::size_t k = ta.arity[x];
            if (k == 0) {
                if (size == 1) by_size[1].push_back(Tree{x, {}});
                continue;
            }
            if (size < k + 1) continue;
            // Compose children of exact sizes summing to size-1.
            std::vector<std::vector<Tree>> partial{{}};
            std::vector<std::size_t> used{0};
            for (std::size_t c = 0; c < k; ++c) {
                std::vector<std::vector<Tree>> nxt;
                std::vector<std::size_t> nused;
                for (std::size_t p = 0; p < partial.size(); ++p)
                    for (std::size_t s = 1; s + used[p] <= size - 1; ++s)
                        for (const Tree& sub : by_size[s]) {
                            auto kids = partial[p];
                            kids.push_back(sub);
                            nxt.push_back(std::move(kids));
                            nused.push_back(used[p] + s);
                        }
                partial = std::move(nxt);
                used = std::move(nused);
            }
            for (std::size_t p = 0; p < partial.size(); ++p)
                if (used[p] == size - 1) by_size[size].push_back(Tree{x, partial[p]});
        }
    std::set<Tree> out;
    for (const auto& bucket : by_size)
        for (const Tree& t : bucket)
            if (ta_accepts_tree(ta, t)) out.insert(t);
    return out;
}

StateRelation naive_upward_simulation(const TreeAutomaton& ta) {
    const std::size_t n = ta.num_states;
    StateRelation rel(n);
    for (State q = 0; q < n; ++q)
        for (State r = 0; r < n; ++r)
            rel.set(q, r, !set_contains(ta.final, q) || set_contains(ta.final, r));
    bool changed = true;
    while (changed) {
        changed = false;
        for (State q = 0; q < n; ++q)
            for (State r = 0; r < n; ++r) {
                if (!rel.get(q, r)) continue;
                bool ok = true;
                for (const auto& rule : ta.rules) {
                    for (std::size_t i = 0; i < rule.lhs.size() && ok; ++i) {
                        if (rule.lhs[i] != q) continue;
                        bool matched = false;
                        for (const auto& rr : ta.rules) {
                            if (rr.sym != rule.sym || rr.lhs.size() != rule.lhs.size()) continue;
                            if (rr.lhs[i] != r) continue;
                            bool ctx = true;
                            for (std::size_t j = 0; j < rule.lhs.size() && ctx; ++j)
                                if (j != i) ctx = rr.lhs[j] == rule.lhs[j];
                            if (ctx && rel.get(rule.rhs, rr.rhs)) { matched = true; break; }
                        }
                        if (!matched) ok = false;
                    }
                    if (!ok) break;
                }
                if (!ok) {
                    rel.set(q, r, false);
                    changed = true;
                }
            }
    }
    return rel;
}

StateRelation naive_backward_simulation_aba(const AlternatingBuchiAutomaton& a,
                                            const StateRelation& fwd) {
    const std::size_t n = a.num_states;
    StateRelation rel(n);
    for (State p = 0; p < n; ++p)
        for (State r = 0; r < n; ++r)
            rel.set(p, r, (p != a.initial || r == a.initial) &&
                              (!a.is_accepting_state(p) || a.is_accepting_state(r)));
    bool changed = true;
    while (changed) {
        changed = false;
        for (State p = 0; p < n; ++p)
            for (State r = 0; r < n; ++r) {
                if (!rel.get(p, r)) continue;
                bool ok = true;
                // For all q →a P∪{p}, p∉P: need s →a R∪{r}, r∉R with
                // q rel s and P ⪯F∀∃ R.
                for (State q = 0; q < n && ok; ++q)
                    for (Symbol x = 0; x < a.num_symbols && ok; ++x)
                        for (const StateSet& C : a.delta[q][x]) {
                            if (!set_contains(C, p)) continue;
                            StateSet P;
                            for (State y : C)
                                if (y != p) P.push_back(y);
                            bool matched = false;
                            for (State s = 0; s < n && !matched; ++s) {
                                if (!rel.get(q, s)) continue;
                                for (const StateSet& D : a.delta[s][x]) {
                                    if (!set_contains(D, r)) continue;
                                    StateSet R;
                                    for (State y : D)
                                        if (y != r) R.push_back(y);
                                    if (ae_alt(fwd, P, R)) { matched = true; break; }
                                }
                            }
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

StateRelation naive_env_preorder(const AlternatingBuchiAutomaton& a, const StateRelation& fwd) {
    const std::size_t n = a.num_states;
    using Env = std::tuple<State, Symbol, StateSet>;
    std::set<Env> envs;
    for (State p = 0; p < n; ++p)
        for (Symbol x = 0; x < a.num_symbols; ++x)
            for (const StateSet& P : a.delta[p][x])
                for (State removed : P) {
                    StateSet res;
                    for (State y : P)
                        if (y != removed) res.push_back(y);
                    envs.emplace(p, x, std::move(res));
                }
    std::vector<Env> elist(envs.begin(), envs.end());
    StateRelation out(n + elist.size());
    for (State q1 = 0; q1 < n; ++q1)
        for (State q2 = 0; q2 < n; ++q2)
            out.set(q1, q2, (q1 != a.initial || q2 == a.initial) &&
                                (!a.is_accepting_state(q1) || a.is_accepting_state(q2)));
    for (std::size_t i = 0; i < elist.size(); ++i)
        for (std::size_t j = 0; j < elist.size(); ++j)
            if (std::get<1>(elist[i]) == std::get<1>(elist[j]) &&
                ae_alt(fwd, std::get<2>(elist[i]), std::get<2>(elist[j])))
                out.set(n + i, n + j, true);
    return out;
}

}  // namespace simaut
