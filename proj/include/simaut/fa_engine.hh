/// @file fa_engine.hh
/// Word-automata layer: forward simulation, quotienting, and universality /
/// language-inclusion checking in classical, pure-antichain, and
/// simulation-enhanced variants.

#ifndef SIMAUT_FA_ENGINE_HH
#define SIMAUT_FA_ENGINE_HH

#include <optional>

#include "simaut/core.hh"

namespace simaut {

enum class Engine { Classical, Antichain, AntichainSim };

/// Per-search counters. `generated` counts the initial elements plus every
/// Post output before any dedup/subsumption filtering.
struct SearchStats {
    std::size_t generated = 0;
    std::size_t stored_peak = 0;
    bool result = false;
};

/// Options for the simulation-enhanced engines. Optimisation 1(a) — frontier
/// subsumption via (p ⪯ s ∧ S ⪯∀∃ P) — is inherent to the antichain engines
/// and always on.
struct AntichainOptions {
    bool opt1b = true;  ///< skip (p,P) when ∃p'∈P with p ⪯ p' (inclusion only)
    bool opt2 = true;   ///< Minimize macro-states
};

/// Maximal forward simulation of @p a: computed on the underlying LTS with
/// initial preorder {(p,r) : p ∈ F ⟹ r ∈ F}. Reflexive and transitive;
/// p ⪯ r implies L(p) ⊆ L(r).
StateRelation fa_forward_simulation(const Nfa& a);

/// Optimisation 2: removes r1 from @p m when some distinct surviving r2 has
/// r1 ⪯ r2; mutually simulating states keep the smallest index (candidates
/// scanned in descending index order).
StateSet minimize_macrostate(const StateSet& m, const StateRelation& rel);

struct FaUniversalityResult {
    bool universal = false;
    SearchStats stats;
    std::optional<std::vector<Symbol>> witness;  ///< rejected word when not universal
};

/// Universality of L(a) = Σ*. The antichain engines prune by subsumption; classical
/// is subset construction with early exit and dedup-on-expansion. @p rel is
/// required by Engine::AntichainSim (defaults to fa_forward_simulation(a));
/// Engine::Antichain uses the identity relation.
FaUniversalityResult fa_universality(const Nfa& a, Engine engine,
                                     const StateRelation* rel = nullptr,
                                     const AntichainOptions& opts = {});

struct FaInclusionResult {
    bool included = false;
    SearchStats stats;
    std::optional<std::vector<Symbol>> witness;  ///< word in L(a)\L(b) when not included
};

/// Language inclusion L(a) ⊆ L(b). For Engine::AntichainSim,
/// @p rel must live on union_nfa(a,b) (defaults to its forward simulation);
/// a-states come first in the union indexing.
FaInclusionResult fa_inclusion(const Nfa& a, const Nfa& b, Engine engine,
                               const StateRelation* rel = nullptr,
                               const AntichainOptions& opts = {});

/// Quotient by an equivalence (must be reflexive/symmetric/transitive);
/// classes keep the smallest member's name.
Nfa quotient_nfa(const Nfa& a, const StateRelation& equiv);

}  // namespace simaut

#endif  // SIMAUT_FA_ENGINE_HH
