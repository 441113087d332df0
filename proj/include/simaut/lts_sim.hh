/// @file lts_sim.hh
/// Simulation on an LTS via partition-relation pair refinement, plus generic
/// bisimulation refinement.

#ifndef SIMAUT_LTS_SIM_HH
#define SIMAUT_LTS_SIM_HH

#include "simaut/core.hh"

namespace simaut {

/// Partition of a state carrier plus a relation on blocks; induces the state
/// relation ∪{B×C : (B,C) ∈ rel}.
struct PartitionRelationPair {
    std::vector<StateSet> blocks;  ///< disjoint, nonempty, covering
    /// rel[i*blocks.size()+j] — relation on block indices.
    std::vector<bool> rel;

    bool rel_get(std::size_t i, std::size_t j) const { return rel[i * blocks.size() + j]; }
    void rel_set(std::size_t i, std::size_t j, bool v) { rel[i * blocks.size() + j] = v; }

    /// The induced relation over the carrier.
    StateRelation induced(std::size_t carrier_size) const;

    /// Checks partition validity over 0..carrier_size-1.
    bool valid(std::size_t carrier_size) const;
};

/// Decomposes a preorder into the coarsest partition-relation pair inducing
/// it: blocks are the classes of preorder ∩ preorder⁻¹. Throws
/// std::invalid_argument when @p preorder is not reflexive/transitive.
PartitionRelationPair coarsest_pr(const StateRelation& preorder);

/// Optional instrumentation for compute_simulation.
struct SimDebugStats {
    std::size_t pivot_pops = 0;
    std::size_t splits = 0;
    std::size_t final_blocks = 0;
    std::size_t rel_matrix_cells = 0;      ///< |P_sim|² at exit
    std::size_t counter_cells = 0;         ///< |Σ|·|P_sim|·|Q| at exit
    /// When enabled, induced relations after each pivot pop (small inputs only).
    bool record_snapshots = false;
    std::vector<StateRelation> snapshots;
    /// One record per pivot pop when record_removes is set. Remove sets with
    /// equal symbols whose pivot blocks are nested (same lineage branch) are
    /// pairwise disjoint.
    struct ConsumedRemove {
        Symbol symbol;
        StateSet remove;
        StateSet pivot_block;  ///< pivot block contents at pop time
    };
    bool record_removes = false;
    std::vector<ConsumedRemove> consumed_removes;
};

/// Computes the coarsest partition-relation pair inducing the maximal
/// simulation on @p lts contained in the preorder induced by @p init.
/// @p init must be a valid partition-relation pair over lts.num_states whose
/// induced relation is a preorder.
PartitionRelationPair compute_simulation(const Lts& lts, const PartitionRelationPair& init,
                                         SimDebugStats* dbg = nullptr);

/// Coarsest stable refinement of @p init_partition under the maximal
/// bisimulation on @p lts: standard signature-based partition refinement.
std::vector<StateSet> compute_bisimulation(const Lts& lts,
                                           const std::vector<StateSet>& init_partition);

}  // namespace simaut

#endif  // SIMAUT_LTS_SIM_HH
