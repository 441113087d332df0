/// @file oracles.hh
/// Brute-force reference implementations used exclusively by tests and
/// acceptance runs. Independent of the engine modules: shares only the data
/// model in core.hh.

#ifndef SIMAUT_ORACLES_HH
#define SIMAUT_ORACLES_HH

#include <set>

#include "simaut/core.hh"

namespace simaut {

/// A state-count or enumeration cap was exceeded; never silently truncates.
struct OracleCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Ultimately periodic word u v^ω.
struct LassoWord {
    std::vector<Symbol> prefix;  ///< u
    std::vector<Symbol> loop;    ///< v, nonempty
    auto operator<=>(const LassoWord&) const = default;
};

/// Ranked tree; holes (for contexts) use symbol values ≥ the automaton's
/// symbol count: hole i (1-based) is num_symbols + i - 1 with no children.
struct Tree {
    Symbol sym = 0;
    std::vector<Tree> children;
    bool operator==(const Tree&) const = default;
    bool operator<(const Tree& o) const {
        if (sym != o.sym) return sym < o.sym;
        return std::lexicographical_compare(children.begin(), children.end(),
                                            o.children.begin(), o.children.end());
    }
};

/// Greatest fixpoint of the simulation condition within @p init (a preorder).
StateRelation naive_lts_simulation(const Lts& lts, const StateRelation& init);

/// Textbook subset-construction universality. Throws OracleCapExceeded past
/// @p cap macro-states.
bool fa_universal_subset(const Nfa& a, std::size_t cap = 1u << 20);

/// On-the-fly product of a with the determinized complement of b.
bool fa_inclusion_product(const Nfa& a, const Nfa& b, std::size_t cap = 1u << 20);

/// Bottom-up subset construction; resulting TA is complete and deterministic,
/// macro-state i's member set returned through @p macro_states when non-null.
TreeAutomaton ta_determinize(const TreeAutomaton& ta, std::vector<StateSet>* macro_states = nullptr,
                             std::size_t cap = 1u << 20);

/// Universality by determinization + complement + emptiness.
bool ta_universal_classical(const TreeAutomaton& ta, std::size_t cap = 1u << 20);

/// L(a) ⊆ L(b) by product of a with the determinized complement of b.
bool ta_inclusion_classical(const TreeAutomaton& a, const TreeAutomaton& b,
                            std::size_t cap = 1u << 20);

/// All contexts with |states| holes and at most @p max_nodes non-hole nodes
/// accepted from the given state tuple (hole i evaluates to states[i-1]; the
/// context is accepted when a final state is reachable at the root).
/// Throws OracleCapExceeded when max_nodes > 6.
std::set<Tree> enumerate_contexts(const TreeAutomaton& ta, const std::vector<State>& states,
                                  std::size_t max_nodes);

/// Miyano–Hayashi breakpoint construction. The result is an NBA encoded as an
/// Nfa whose final set is the Büchi acceptance condition (breakpoint states
/// with empty obligation set).
Nfa aba_to_nba(const AlternatingBuchiAutomaton& a);

/// Membership of u v^ω in the Büchi language of @p nba (an Nfa read with
/// Büchi acceptance), via accepting-cycle search in the lasso product.
bool nba_lasso_member(const Nfa& nba, const LassoWord& w);

/// Convenience: lasso membership for a normalized ABA via aba_to_nba.
bool aba_lasso_member(const AlternatingBuchiAutomaton& a, const LassoWord& w);

/// Agreement of the two lasso languages on all |u| ≤ maxU, 1 ≤ |v| ≤ maxV.
/// Throws OracleCapExceeded when a bound exceeds 4. Alphabets must agree.
bool aba_lasso_language_equal(const AlternatingBuchiAutomaton& a,
                              const AlternatingBuchiAutomaton& b, std::size_t max_u,
                              std::size_t max_v);

/// All accepted words of length ≤ max_len (≤ 8).
std::set<std::vector<Symbol>> word_language_bounded(const Nfa& a, std::size_t max_len);

/// All accepted trees with ≤ max_nodes nodes (≤ 8).
std::set<Tree> tree_language_bounded(const TreeAutomaton& ta, std::size_t max_nodes);

/// Whether @p ta accepts @p t (exact run evaluation, no bound).
bool ta_accepts_tree(const TreeAutomaton& ta, const Tree& t);

/// Definition-unfolding greatest fixpoint of upward simulation induced by
/// identity.
StateRelation naive_upward_simulation(const TreeAutomaton& ta);

/// Definition-unfolding greatest fixpoint of ABA backward simulation
/// parametrised by @p fwd.
StateRelation naive_backward_simulation_aba(const AlternatingBuchiAutomaton& a,
                                            const StateRelation& fwd);

/// Pairwise-comparison reference for the initial preorder I over Q⊙ (carrier
/// and environment indexing as in aba_environments/build_env_lts).
StateRelation naive_env_preorder(const AlternatingBuchiAutomaton& a, const StateRelation& fwd);

}  // namespace simaut

#endif  // SIMAUT_ORACLES_HH
