/// @file aba_engine.hh
/// Alternating-Büchi layer: forward simulation, ambiguity removal, backward
/// simulation via the environment-LTS reduction, mediated preorder, the
/// extended automaton A⁺, and quotienting.

#ifndef SIMAUT_ABA_ENGINE_HH
#define SIMAUT_ABA_ENGINE_HH

#include "simaut/core.hh"

namespace simaut {

/// Environment (p, a, P∖{p'}) arising by removing one state p' from a
/// transition p →a P.
struct AbaEnvironment {
    State p;
    Symbol a;
    StateSet residual;  ///< P ∖ {p'}, sorted
    bool operator==(const AbaEnvironment&) const = default;
    auto operator<=>(const AbaEnvironment&) const = default;
};

/// S1 ⪯∀∃ S2 in the alternating sense: every element of @p s2 has a
/// rel-smaller element in @p s1 (∀r∈S2 ∃p∈S1: p rel r). Note the direction is
/// opposite to relation_ae.
bool aba_ae(const StateRelation& rel, const StateSet& s1, const StateSet& s2);

/// All environments of @p a, sorted and duplicate-free. This order fixes the
/// environment indexing of build_env_lts and backward_init_preorder: the LTS
/// state of environment i is num_states + i.
std::vector<AbaEnvironment> aba_environments(const AlternatingBuchiAutomaton& a);

/// Maximal forward simulation ⪯F: p ⪯F r implies p ⪯α r, and every p →a P is
/// matched by some r →a R with P ⪯F∀∃ R. Direct greatest-fixpoint refinement.
StateRelation aba_forward_simulation(const AlternatingBuchiAutomaton& a);

/// No alternative of @p a contains two distinct forward-equivalent states.
bool aba_is_unambiguous(const AlternatingBuchiAutomaton& a, const StateRelation& fwd);

/// Per alternative P = {p1,...,pk}, scanning i ascending, removes pᵢ when
/// ∃j>i with p_j ⪯F pᵢ. Preserves the language and the forward simulation;
/// the output is ⪯F-unambiguous. @p fwd must be the maximal forward simulation.
AlternatingBuchiAutomaton remove_ambiguity(const AlternatingBuchiAutomaton& a,
                                           const StateRelation& fwd);

/// The LTS A⊙: states {q⊙ : q ∈ Q} ∪ {e⊙ : e ∈ Env(A)} (environments indexed
/// per aba_environments after the Q block); edges
/// (p,a,P∖{p'})⊙ →a p⊙ and p'⊙ →a (p,a,P∖{p'})⊙ for P ∈ δ(p,a), p' ∈ P.
Lts build_env_lts(const AlternatingBuchiAutomaton& a);

/// The initial preorder I over Q⊙:
/// {(q1⊙,q2⊙) : q1 ⪯ι q2 ∧ q1 ⪯α q2} ∪ {(e⊙,f⊙) : residuals P ⪯F∀∃ R, same
/// symbol}; the environment component is enumerated per transition pair via
/// the β / KeyState / γ procedure. @p fwd must be reflexive and transitive.
StateRelation backward_init_preorder(const AlternatingBuchiAutomaton& a,
                                     const StateRelation& fwd);

/// Maximal backward simulation parametrised by @p fwd: the simulation on
/// build_env_lts within backward_init_preorder, restricted to state-states.
StateRelation aba_backward_simulation(const AlternatingBuchiAutomaton& a,
                                      const StateRelation& fwd);

/// Mediated preorder ⪯M = fwd ⊕ bwd⁻¹: the greatest M ⊆ fwd∘bwd⁻¹ with
/// M∘fwd ⊆ M, by greatest-fixpoint pruning. Throws std::runtime_error when the
/// result violates the mediated-preorder contract (preorder, fwd ⊆ M ⊆
/// fwd∘bwd⁻¹, forward extensibility).
StateRelation mediated_preorder(const StateRelation& fwd, const StateRelation& bwd);

/// The extended automaton A⁺: δ⁺(r,x) = ∪_{q ⪯M r} δ(q,x);
/// α⁺ = {p : ∃q∈α. q ≡M p}. Language-preserving on ⪯F-unambiguous input.
AlternatingBuchiAutomaton extend_aba(const AlternatingBuchiAutomaton& a,
                                     const StateRelation& med);

/// Quotient A/≡ with class-wise lifted transitions
/// δ/≡([q],a) = ∪_{p∈[q]} {{[p'] : p'∈P} : P ∈ δ(p,a)}; classes keep the
/// smallest member's name. Throws when @p equiv is not an equivalence.
AlternatingBuchiAutomaton quotient_aba(const AlternatingBuchiAutomaton& a,
                                       const StateRelation& equiv);

}  // namespace simaut

#endif  // SIMAUT_ABA_ENGINE_HH
