/// Shared helpers for the test suites: data loading and small random-instance
/// generators that the library deliberately does not ship.

#ifndef SIMAUT_TESTS_UTIL_HH
#define SIMAUT_TESTS_UTIL_HH

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "simaut/core.hh"
#include "simaut/generate.hh"

namespace testutil {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline void write_file_checked(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

inline std::string data_path(const std::string& name) {
    return std::string(SIMAUT_DATA_DIR) + "/" + name;
}

/// Random LTS: the transition structure of a random FA.
inline simaut::Lts random_lts(std::size_t n, std::size_t k, double td, std::uint64_t seed) {
    return simaut::generate_random_fa(n, k, td, 0.5, seed).to_lts();
}

/// Random preorder on 0..n-1: identity plus random pairs, transitively closed.
inline simaut::StateRelation random_preorder(std::size_t n, std::uint64_t seed,
                                             double density = 0.3) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    simaut::StateRelation r = simaut::StateRelation::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (coin(rng) < density) r.set(i, j, true);
    // Transitive closure (Floyd–Warshall style).
    for (std::size_t k2 = 0; k2 < n; ++k2)
        for (std::size_t i = 0; i < n; ++i) {
            if (!r.get(i, k2)) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (r.get(k2, j)) r.set(i, j, true);
        }
    return r;
}

/// Random ABA over n states, k symbols. With partial=true some (state,symbol)
/// cells may be left empty (= FALSE); conjunct sets are always nonempty.
inline simaut::AlternatingBuchiAutomaton random_aba(std::size_t n, std::size_t k,
                                                    std::uint64_t seed, bool partial) {
    using namespace simaut;
    std::mt19937_64 rng(seed);
    AlternatingBuchiAutomaton a;
    a.num_states = n;
    a.num_symbols = k;
    a.initial = 0;
    a.resize_delta();
    std::uniform_int_distribution<std::size_t> nalt(partial ? 0 : 1, 2);
    std::uniform_int_distribution<std::size_t> ssize(1, std::min<std::size_t>(3, n));
    std::uniform_int_distribution<State> st(0, n - 1);
    for (State q = 0; q < n; ++q)
        for (Symbol x = 0; x < k; ++x) {
            const std::size_t alts = nalt(rng);
            for (std::size_t t = 0; t < alts; ++t) {
                StateSet s;
                const std::size_t m = ssize(rng);
                for (std::size_t i = 0; i < m; ++i) s.push_back(st(rng));
                normalize_set(s);
                a.delta[q][x].push_back(std::move(s));
            }
        }
    a.normalize_cells();
    for (State q = 0; q < n; ++q)
        if (rng() & 1) a.accepting.push_back(q);
    return a;
}

}  // namespace testutil

#endif  // SIMAUT_TESTS_UTIL_HH
