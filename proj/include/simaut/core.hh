/// @file core.hh
/// Automata data model: LTS, NFA, tree automata, alternating Büchi automata,
/// state relations, unions and normalization.

#ifndef SIMAUT_CORE_HH
#define SIMAUT_CORE_HH

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace simaut {

using State = std::size_t;
using Symbol = std::size_t;

/// Sorted, duplicate-free set of states.
using StateSet = std::vector<State>;

/// Sorts and deduplicates @p v in place.
inline void normalize_set(StateSet& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

inline StateSet make_set(std::initializer_list<State> xs) {
    StateSet s(xs);
    normalize_set(s);
    return s;
}

inline bool set_contains(const StateSet& s, State q) {
    return std::binary_search(s.begin(), s.end(), q);
}

inline StateSet set_union(const StateSet& a, const StateSet& b) {
    StateSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool sets_intersect(const StateSet& a, const StateSet& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) ++i;
        else if (*j < *i) ++j;
        else return true;
    }
    return false;
}

/// Binary relation over a carrier 0..n-1, stored as a dense boolean matrix.
class StateRelation {
public:
    StateRelation() = default;
    explicit StateRelation(std::size_t n) : n_(n), bits_(n * n, false) {}

    static StateRelation identity(std::size_t n) {
        StateRelation r(n);
        for (std::size_t i = 0; i < n; ++i) r.set(i, i, true);
        return r;
    }
    static StateRelation full(std::size_t n) {
        StateRelation r(n);
        r.bits_.assign(n * n, true);
        return r;
    }

    std::size_t size() const { return n_; }
    bool get(State p, State r) const { return bits_[p * n_ + r]; }
    void set(State p, State r, bool v) { bits_[p * n_ + r] = v; }

    bool is_reflexive() const {
        for (std::size_t i = 0; i < n_; ++i)
            if (!get(i, i)) return false;
        return true;
    }
    bool is_transitive() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                if (!get(i, j)) continue;
                for (std::size_t k = 0; k < n_; ++k)
                    if (get(j, k) && !get(i, k)) return false;
            }
        return true;
    }
    bool is_symmetric() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (get(i, j) != get(j, i)) return false;
        return true;
    }
    bool is_preorder() const { return is_reflexive() && is_transitive(); }

    StateRelation inverse() const {
        StateRelation r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) r.set(j, i, get(i, j));
        return r;
    }
    /// Relational composition: (p,r) in result iff exists q with p this q and q other r.
    StateRelation compose(const StateRelation& other) const {
        StateRelation r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t q = 0; q < n_; ++q) {
                if (!get(i, q)) continue;
                for (std::size_t j = 0; j < n_; ++j)
                    if (other.get(q, j)) r.set(i, j, true);
            }
        return r;
    }
    StateRelation intersect(const StateRelation& other) const {
        StateRelation r(n_);
        for (std::size_t i = 0; i < bits_.size(); ++i)
            r.bits_[i] = bits_[i] && other.bits_[i];
        return r;
    }
    bool subset_of(const StateRelation& other) const {
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] && !other.bits_[i]) return false;
        return true;
    }
    bool operator==(const StateRelation& other) const {
        return n_ == other.n_ && bits_ == other.bits_;
    }
    std::size_t count_pairs() const {
        std::size_t c = 0;
        for (bool b : bits_) c += b ? 1 : 0;
        return c;
    }

private:
    std::size_t n_ = 0;
    std::vector<bool> bits_;
};

/// P ⪯∀∃ R: every element of @p p has a rel-larger element in @p r.
inline bool relation_ae(const StateRelation& rel, const StateSet& p, const StateSet& r) {
    for (State x : p) {
        bool dominated = false;
        for (State y : r)
            if (rel.get(x, y)) { dominated = true; break; }
        if (!dominated) return false;
    }
    return true;
}

/// Labelled transition system: states with symbol-labelled edges.
struct Lts {
    std::size_t num_states = 0;
    std::size_t num_symbols = 0;
    std::vector<std::tuple<State, Symbol, State>> transitions;

    void add(State src, Symbol sym, State dst) { transitions.emplace_back(src, sym, dst); }

    /// Sorts transitions and removes duplicate triples.
    void normalize() {
        std::sort(transitions.begin(), transitions.end());
        transitions.erase(std::unique(transitions.begin(), transitions.end()),
                          transitions.end());
    }
};

/// Nondeterministic finite word automaton.
struct Nfa {
    std::size_t num_states = 0;
    std::size_t num_symbols = 0;
    std::vector<std::tuple<State, Symbol, State>> transitions;
    StateSet initial;
    StateSet final;
    std::vector<std::string> state_names;   ///< optional; index-named when empty
    std::vector<std::string> symbol_names;  ///< optional

    void add(State src, Symbol sym, State dst) { transitions.emplace_back(src, sym, dst); }

    std::string state_name(State q) const {
        return q < state_names.size() ? state_names[q] : "q" + std::to_string(q);
    }
    std::string symbol_name(Symbol a) const {
        return a < symbol_names.size() ? symbol_names[a] : "a" + std::to_string(a);
    }

    /// The underlying LTS (initial/final structure dropped).
    Lts to_lts() const {
        Lts l;
        l.num_states = num_states;
        l.num_symbols = num_symbols;
        l.transitions = transitions;
        l.normalize();
        return l;
    }

    /// post[a] applied to a macro-state.
    StateSet post(const StateSet& ms, Symbol a) const {
        StateSet out;
        for (const auto& [src, sym, dst] : transitions)
            if (sym == a && set_contains(ms, src)) out.push_back(dst);
        normalize_set(out);
        return out;
    }
};

/// Bottom-up nondeterministic tree automaton.
struct TreeAutomaton {
    struct Rule {
        std::vector<State> lhs;  ///< length = arity of sym
        Symbol sym;
        State rhs;
        bool operator==(const Rule&) const = default;
        auto operator<=>(const Rule&) const = default;
    };

    std::size_t num_states = 0;
    std::vector<std::size_t> arity;  ///< indexed by symbol
    std::vector<Rule> rules;
    StateSet final;
    std::vector<std::string> state_names;
    std::vector<std::string> symbol_names;

    std::size_t num_symbols() const { return arity.size(); }

    std::string state_name(State q) const {
        return q < state_names.size() ? state_names[q] : "q" + std::to_string(q);
    }
    std::string symbol_name(Symbol a) const {
        return a < symbol_names.size() ? symbol_names[a] : "f" + std::to_string(a);
    }

    bool has_leaf_symbol() const {
        for (std::size_t r : arity)
            if (r == 0) return true;
        return false;
    }

    void normalize() {
        std::sort(rules.begin(), rules.end());
        rules.erase(std::unique(rules.begin(), rules.end()), rules.end());
    }
};

/// Alternating Büchi automaton with total transition function
/// delta : Q × Σ → sets of conjunctive successor sets.
struct AlternatingBuchiAutomaton {
    std::size_t num_states = 0;
    std::size_t num_symbols = 0;
    State initial = 0;
    StateSet accepting;
    /// delta[q][a] = alternatives; each alternative is a conjunct StateSet.
    std::vector<std::vector<std::vector<StateSet>>> delta;
    std::vector<std::string> state_names;
    std::vector<std::string> symbol_names;

    void resize_delta() { delta.assign(num_states, std::vector<std::vector<StateSet>>(num_symbols)); }

    std::string state_name(State q) const {
        return q < state_names.size() ? state_names[q] : "q" + std::to_string(q);
    }
    std::string symbol_name(Symbol a) const {
        return a < symbol_names.size() ? symbol_names[a] : "a" + std::to_string(a);
    }

    bool is_accepting_state(State q) const { return set_contains(accepting, q); }

    std::size_t num_transitions() const {
        std::size_t m = 0;
        for (const auto& row : delta)
            for (const auto& alts : row) m += alts.size();
        return m;
    }

    /// Sorts alternatives per (state,symbol) cell and removes duplicates.
    void normalize_cells() {
        for (auto& row : delta)
            for (auto& alts : row) {
                for (auto& s : alts) normalize_set(s);
                std::sort(alts.begin(), alts.end());
                alts.erase(std::unique(alts.begin(), alts.end()), alts.end());
            }
    }
};

/// Union automaton A∪B; b's states are shifted past a's.
/// Requires equal alphabets (symbol count); symbol names taken from a.
Nfa union_nfa(const Nfa& a, const Nfa& b);

/// Disjoint union of two tree automata sharing a symbol table.
/// Throws std::invalid_argument on an arity conflict for a shared symbol name.
TreeAutomaton union_ta(const TreeAutomaton& a, const TreeAutomaton& b);

/// Makes delta total and removes empty conjunct sets. A transition p →a ∅
/// (empty conjunction = TRUE) is redirected to a fresh accepting sink with
/// self-loops ("adding a new accepting state q with δ(q,a) = {{q}}"); a
/// missing cell (empty disjunction = FALSE) is filled with a fresh rejecting
/// sink with self-loops. Idempotent; preserves the lasso language.
AlternatingBuchiAutomaton normalize_aba(const AlternatingBuchiAutomaton& aba);

}  // namespace simaut

#endif  // SIMAUT_CORE_HH
