/// @file generate.hh
/// Seeded Tabakov–Vardi-style random automata generators.

#ifndef SIMAUT_GENERATE_HH
#define SIMAUT_GENERATE_HH

#include <cstdint>

#include "simaut/core.hh"

namespace simaut {

/// Random FA: for each of @p k symbols exactly round(td*n) transitions drawn
/// uniformly without replacement from Q×Q; ceil(fd*n) final states; state 0 is
/// the single initial state. Identical arguments (incl. @p seed) yield an
/// identical automaton. Throws std::invalid_argument when round(td*n) > n².
Nfa generate_random_fa(std::size_t n, std::size_t k, double td, double fd, std::uint64_t seed);

/// Random TA: for each symbol of arity r, min(round(td*n), n^(r+1)) pairs
/// (lhs tuple, rhs) drawn uniformly without replacement from Q^r × Q (the
/// count saturates at a full rule set for low-arity symbols); finals as in
/// the FA generator. Requires at least one arity-0 symbol.
TreeAutomaton generate_random_ta(std::size_t n, const std::vector<std::size_t>& arities,
                                 double td, double fd, std::uint64_t seed);

/// Measured transition density |Δ| / |{(a, lhs) : ∃q. (lhs,a,q) ∈ Δ}|.
double measured_ta_density(const TreeAutomaton& ta);

}  // namespace simaut

#endif  // SIMAUT_GENERATE_HH
