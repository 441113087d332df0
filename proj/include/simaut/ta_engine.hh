/// @file ta_engine.hh
/// Tree-automata layer: upward simulation (induced by identity) via an
/// environment-LTS reduction, and antichain universality / inclusion.

#ifndef SIMAUT_TA_ENGINE_HH
#define SIMAUT_TA_ENGINE_HH

#include <map>

#include "simaut/core.hh"
#include "simaut/fa_engine.hh"  // Engine, SearchStats, AntichainOptions

namespace simaut {

/// Maximal upward simulation induced by identity: q ⪯ r implies
/// q ∈ F ⟹ r ∈ F, and every rule (q1..qn) →a q' with qi = q is matched by
/// (q1..qi-1, r, qi+1..qn) →a r' with q' ⪯ r'. Computed by reduction to
/// simulation on an environment LTS (states q⊙ plus environments
/// (symbol, hole position, context tuple, result)⊙; labels (symbol, position)).
StateRelation ta_upward_simulation(const TreeAutomaton& ta);

/// I_a = {q : →a q} for every arity-0 symbol a. Throws when @p ta has no
/// leaf symbol.
std::map<Symbol, StateSet> initial_macrostates(const TreeAutomaton& ta);

/// Post_a over a macro-state tuple: all states reachable by one a-rule from
/// any member tuple. Tuple length must equal arity(a).
StateSet post_tuple(const TreeAutomaton& ta, const std::vector<StateSet>& tuple, Symbol a);

/// Universality of L(ta) = T(Σ). Engine semantics as in fa_engine;
/// AntichainSim defaults to ta_upward_simulation(ta).
SearchStats ta_universality(const TreeAutomaton& ta, Engine engine,
                            const StateRelation* rel = nullptr,
                            const AntichainOptions& opts = {});

/// Language inclusion L(a) ⊆ L(b); requires a shared (mergeable)
/// symbol table. AntichainSim defaults to upward simulation on union_ta(a,b).
SearchStats ta_inclusion(const TreeAutomaton& a, const TreeAutomaton& b, Engine engine,
                         const StateRelation* rel = nullptr,
                         const AntichainOptions& opts = {});

}  // namespace simaut

#endif  // SIMAUT_TA_ENGINE_HH
