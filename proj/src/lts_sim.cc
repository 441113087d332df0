#include "simaut/lts_sim.hh"

#include <list>
#include <map>

namespace simaut {

StateRelation PartitionRelationPair::induced(std::size_t carrier_size) const {
    StateRelation out(carrier_size);
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = 0; j < blocks.size(); ++j) {
            if (!rel_get(i, j)) continue;
            for (State p : blocks[i])
                for (State q : blocks[j]) out.set(p, q, true);
        }
    return out;
}

bool PartitionRelationPair::valid(std::size_t carrier_size) const {
    std::vector<bool> seen(carrier_size, false);
    for (const StateSet& b : blocks) {
        if (b.empty()) return false;
        for (State q : b) {
            if (q >= carrier_size || seen[q]) return false;
            seen[q] = true;
        }
    }
    for (bool s : seen)
        if (!s) return false;
    return rel.size() == blocks.size() * blocks.size();
}

PartitionRelationPair coarsest_pr(const StateRelation& preorder) {
    if (!preorder.is_reflexive() || !preorder.is_transitive())
        throw std::invalid_argument("coarsest_pr: input is not a preorder");
    const std::size_t n = preorder.size();
    PartitionRelationPair out;
    std::vector<std::size_t> block_of(n, SIZE_MAX);
    std::vector<State> rep;
    for (State q = 0; q < n; ++q) {
        bool placed = false;
        for (std::size_t b = 0; b < rep.size() && !placed; ++b)
            if (preorder.get(q, rep[b]) && preorder.get(rep[b], q)) {
                out.blocks[b].push_back(q);
                block_of[q] = b;
                placed = true;
            }
        if (!placed) {
            block_of[q] = out.blocks.size();
            out.blocks.push_back({q});
            rep.push_back(q);
        }
    }
    const std::size_t k = out.blocks.size();
    out.rel.assign(k * k, false);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            out.rel_set(i, j, preorder.get(rep[i], rep[j]));
    return out;
}

namespace {

/// Mutable block of the refinement workspace.
struct Block {
    std::vector<State> states;
    /// remove[a]: the Remove_a set, duplicate-free by the counter discipline.
    std::vector<std::vector<State>> remove;
    /// count[a][q] = |{r : r ∈ ∪Rel(this), q --a--> r}|.
    std::vector<std::vector<std::size_t>> count;
    bool in_pivot_list = false;

    bool has_nonempty_remove() const {
        for (const auto& r : remove)
            if (!r.empty()) return true;
        return false;
    }
};

}  // namespace

PartitionRelationPair compute_simulation(const Lts& lts, const PartitionRelationPair& init,
                                         SimDebugStats* dbg) {
    const std::size_t n = lts.num_states;
    const std::size_t ns = lts.num_symbols;
    if (!init.valid(n))
        throw std::invalid_argument("compute_simulation: invalid partition-relation pair");

    // pre[a][q] = predecessors of q over a.
    std::vector<std::vector<std::vector<State>>> pre(ns, std::vector<std::vector<State>>(n));
    for (const auto& [src, sym, dst] : lts.transitions) {
        if (src >= n || dst >= n || sym >= ns)
            throw std::invalid_argument("compute_simulation: transition out of range");
        pre[sym][dst].push_back(src);
    }

    std::vector<Block> blocks(init.blocks.size());
    std::vector<std::size_t> block_of(n);
    for (std::size_t b = 0; b < init.blocks.size(); ++b) {
        blocks[b].states = init.blocks[b];
        for (State q : blocks[b].states) block_of[q] = b;
    }
    // Rel as a growable boolean matrix keyed by block index.
    std::vector<std::vector<bool>> rel(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        rel[i].assign(blocks.size(), false);
        for (std::size_t j = 0; j < blocks.size(); ++j) rel[i][j] = init.rel_get(i, j);
    }

    // Counters: count[a][q] per block, per the Count_a(q,B) discipline.
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        blocks[b].count.assign(ns, std::vector<std::size_t>(n, 0));
        for (std::size_t d = 0; d < blocks.size(); ++d) {
            if (!rel[b][d]) continue;
            for (State q : blocks[d].states)
                for (Symbol a = 0; a < ns; ++a)
                    for (State r : pre[a][q]) ++blocks[b].count[a][r];
        }
    }
    std::list<std::size_t> pivot_list;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        blocks[b].remove.assign(ns, {});
        for (Symbol a = 0; a < ns; ++a)
            for (State q = 0; q < n; ++q)
                if (blocks[b].count[a][q] == 0) blocks[b].remove[a].push_back(q);
        if (blocks[b].has_nonempty_remove()) {
            pivot_list.push_back(b);
            blocks[b].in_pivot_list = true;
        }
    }

    auto touch_pivot = [&](std::size_t b) {
        // Move-to-front discipline: a block whose Remove set becomes nonempty
        // goes to the beginning of the pivot list.
        if (!blocks[b].in_pivot_list) {
            pivot_list.push_front(b);
            blocks[b].in_pivot_list = true;
        }
    };

    while (!pivot_list.empty()) {
        const std::size_t piv = pivot_list.front();
        Symbol a = 0;
        while (a < ns && blocks[piv].remove[a].empty()) ++a;
        // piv is in the list only with some nonempty Remove set.
        std::vector<State> remove = std::move(blocks[piv].remove[a]);
        blocks[piv].remove[a].clear();
        if (!blocks[piv].has_nonempty_remove()) {
            pivot_list.pop_front();
            blocks[piv].in_pivot_list = false;
        }
        if (dbg) {
            ++dbg->pivot_pops;
            if (dbg->record_removes) {
                StateSet rcopy(remove);
                normalize_set(rcopy);
                StateSet bcopy(blocks[piv].states);
                normalize_set(bcopy);
                dbg->consumed_removes.push_back({a, std::move(rcopy), std::move(bcopy)});
            }
        }
        const std::vector<State> pivot_states = blocks[piv].states;  // B_prev

        // Split every block that straddles Remove; children take the Remove part
        // and inherit Rel row/column, Remove sets, and counters.
        std::vector<bool> in_remove(n, false);
        for (State q : remove) in_remove[q] = true;
        std::vector<std::size_t> affected;  // parents, first-touch order
        {
            std::vector<bool> seen_parent(blocks.size(), false);
            for (State q : remove) {
                const std::size_t b = block_of[q];
                if (!seen_parent[b]) {
                    seen_parent[b] = true;
                    affected.push_back(b);
                }
            }
        }
        for (std::size_t parent : affected) {
            std::vector<State> inside, outside;
            for (State q : blocks[parent].states)
                (in_remove[q] ? inside : outside).push_back(q);
            if (outside.empty()) continue;  // block fully inside Remove: no split
            if (dbg) ++dbg->splits;
            const std::size_t child = blocks.size();
            blocks[parent].states = std::move(outside);
            Block cb;
            cb.states = std::move(inside);
            cb.remove = blocks[parent].remove;
            cb.count = blocks[parent].count;
            blocks.push_back(std::move(cb));
            for (State q : blocks[child].states) block_of[q] = child;
            // Inherit Rel: new column copies the parent column, new row copies
            // the (already extended) parent row.
            for (auto& row : rel) row.push_back(row[parent]);
            rel.push_back(rel[parent]);
            if (blocks[child].has_nonempty_remove()) touch_pivot(child);
        }

        // RemoveList: blocks now entirely inside Remove.
        std::vector<std::size_t> remove_blocks;
        {
            std::vector<bool> seen(blocks.size(), false);
            for (State q : remove) {
                const std::size_t b = block_of[q];
                if (!seen[b]) {
                    seen[b] = true;
                    remove_blocks.push_back(b);
                }
            }
        }
        // Candidates C with C --a--> B_prev.
        std::vector<std::size_t> candidates;
        {
            std::vector<bool> seen(blocks.size(), false);
            for (State q : pivot_states)
                for (State r : pre[a][q]) {
                    const std::size_t c = block_of[r];
                    if (!seen[c]) {
                        seen[c] = true;
                        candidates.push_back(c);
                    }
                }
        }
        for (std::size_t c : candidates)
            for (std::size_t d : remove_blocks) {
                if (!rel[c][d]) continue;
                rel[c][d] = false;
                for (State q : blocks[d].states)
                    for (Symbol b = 0; b < ns; ++b)
                        for (State r : pre[b][q]) {
                            auto& cnt = blocks[c].count[b][r];
                            --cnt;
                            if (cnt == 0) {
                                blocks[c].remove[b].push_back(r);
                                touch_pivot(c);
                            }
                        }
            }
        if (dbg && dbg->record_snapshots) {
            PartitionRelationPair snap;
            for (const auto& b : blocks) {
                StateSet s(b.states);
                normalize_set(s);
                snap.blocks.push_back(s);
            }
            snap.rel.assign(blocks.size() * blocks.size(), false);
            for (std::size_t i = 0; i < blocks.size(); ++i)
                for (std::size_t j = 0; j < blocks.size(); ++j)
                    snap.rel_set(i, j, rel[i][j]);
            dbg->snapshots.push_back(snap.induced(n));
        }
    }

    PartitionRelationPair out;
    for (const auto& b : blocks) {
        StateSet s(b.states);
        normalize_set(s);
        out.blocks.push_back(s);
    }
    out.rel.assign(blocks.size() * blocks.size(), false);
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = 0; j < blocks.size(); ++j) out.rel_set(i, j, rel[i][j]);
    if (dbg) {
        dbg->final_blocks = blocks.size();
        dbg->rel_matrix_cells = blocks.size() * blocks.size();
        dbg->counter_cells = ns * blocks.size() * n;
    }
    return out;
}

std::vector<StateSet> compute_bisimulation(const Lts& lts,
                                           const std::vector<StateSet>& init_partition) {
    const std::size_t n = lts.num_states;
    std::vector<std::size_t> block_of(n, SIZE_MAX);
    for (std::size_t b = 0; b < init_partition.size(); ++b) {
        if (init_partition[b].empty())
            throw std::invalid_argument("compute_bisimulation: empty block");
        for (State q : init_partition[b]) {
            if (q >= n || block_of[q] != SIZE_MAX)
                throw std::invalid_argument("compute_bisimulation: invalid partition");
            block_of[q] = b;
        }
    }
    for (std::size_t q = 0; q < n; ++q)
        if (block_of[q] == SIZE_MAX)
            throw std::invalid_argument("compute_bisimulation: partition does not cover carrier");

    std::vector<std::vector<std::pair<Symbol, State>>> succ(n);
    for (const auto& [src, sym, dst] : lts.transitions) succ[src].emplace_back(sym, dst);

    std::size_t num_blocks = init_partition.size();
    for (;;) {
        // Signature: old block plus the set of (symbol, successor block).
        std::map<std::pair<std::size_t, std::vector<std::pair<Symbol, std::size_t>>>,
                 std::size_t> sig_to_block;
        std::vector<std::size_t> next(n);
        for (State q = 0; q < n; ++q) {
            std::vector<std::pair<Symbol, std::size_t>> sig;
            for (const auto& [a, t] : succ[q]) sig.emplace_back(a, block_of[t]);
            std::sort(sig.begin(), sig.end());
            sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
            auto key = std::make_pair(block_of[q], sig);
            auto it = sig_to_block.find(key);
            if (it == sig_to_block.end())
                it = sig_to_block.emplace(key, sig_to_block.size()).first;
            next[q] = it->second;
        }
        if (sig_to_block.size() == num_blocks) break;
        num_blocks = sig_to_block.size();
        block_of = std::move(next);
    }
    std::vector<StateSet> out(num_blocks);
    for (State q = 0; q < n; ++q) out[block_of[q]].push_back(q);
    // Canonical order: by smallest member.
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace simaut
