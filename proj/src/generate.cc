#include "simaut/generate.hh"

#include <cmath>
#include <random>
#include <set>

namespace simaut {
namespace {

/// Uniform draw from [0, bound) by rejection; algorithm is pinned here (not
/// delegated to std::uniform_int_distribution) so that seeds reproduce across
/// standard-library implementations.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

/// Floyd's algorithm: k distinct values sampled uniformly from [0, n).
std::vector<std::uint64_t> sample_without_replacement(std::mt19937_64& rng, std::uint64_t n,
                                                      std::uint64_t k) {
    std::set<std::uint64_t> chosen;
    for (std::uint64_t j = n - k; j < n; ++j) {
        const std::uint64_t t = draw(rng, j + 1);
        if (!chosen.insert(t).second) chosen.insert(j);
    }
    return {chosen.begin(), chosen.end()};
}

std::size_t final_count(std::size_t n, double fd) {
    return static_cast<std::size_t>(std::ceil(fd * static_cast<double>(n)));
}

}  // namespace

Nfa generate_random_fa(std::size_t n, std::size_t k, double td, double fd, std::uint64_t seed) {
    if (n < 1 || k < 1 || td < 0 || fd < 0 || fd > 1)
        throw std::invalid_argument("generate_random_fa: bad parameters");
    const auto per_symbol = static_cast<std::uint64_t>(std::llround(td * static_cast<double>(n)));
    if (per_symbol > static_cast<std::uint64_t>(n) * n)
        throw std::invalid_argument("generate_random_fa: td*n exceeds n^2");
    std::mt19937_64 rng(seed);
    Nfa nfa;
    nfa.num_states = n;
    nfa.num_symbols = k;
    for (Symbol a = 0; a < k; ++a) {
        for (std::uint64_t code : sample_without_replacement(rng, static_cast<std::uint64_t>(n) * n,
                                                             per_symbol))
            nfa.add(static_cast<State>(code / n), a, static_cast<State>(code % n));
    }
    const std::size_t nf = final_count(n, fd);
    for (std::uint64_t q : sample_without_replacement(rng, n, nf))
        nfa.final.push_back(static_cast<State>(q));
    normalize_set(nfa.final);
    nfa.initial = {0};
    return nfa;
}

TreeAutomaton generate_random_ta(std::size_t n, const std::vector<std::size_t>& arities,
                                 double td, double fd, std::uint64_t seed) {
    if (n < 1 || arities.empty() || td < 0 || fd < 0 || fd > 1)
        throw std::invalid_argument("generate_random_ta: bad parameters");
    bool has_leaf = false;
    for (std::size_t r : arities) has_leaf = has_leaf || r == 0;
    if (!has_leaf) throw std::invalid_argument("generate_random_ta: no arity-0 symbol");
    const auto per_symbol = static_cast<std::uint64_t>(std::llround(td * static_cast<double>(n)));
    std::mt19937_64 rng(seed);
    TreeAutomaton ta;
    ta.num_states = n;
    ta.arity = arities;
    for (Symbol a = 0; a < arities.size(); ++a) {
        const std::size_t r = arities[a];
        // Combination space Q^r × Q.
        std::uint64_t space = n;
        for (std::size_t i = 0; i < r; ++i) {
            if (space > std::numeric_limits<std::uint64_t>::max() / n)
                throw std::invalid_argument("generate_random_ta: rule space overflow");
            space *= n;
        }
        // Low-arity symbols (notably leaves, whose rule space is just Q) cap at
        // a full rule set instead of failing; density grids with td > 1 stay
        // usable.
        const std::uint64_t want = std::min(per_symbol, space);
        for (std::uint64_t code : sample_without_replacement(rng, space, want)) {
            TreeAutomaton::Rule rule;
            rule.sym = a;
            rule.rhs = static_cast<State>(code % n);
            code /= n;
            rule.lhs.resize(r);
            for (std::size_t i = r; i-- > 0;) {
                rule.lhs[i] = static_cast<State>(code % n);
                code /= n;
            }
            ta.rules.push_back(rule);
        }
    }
    const std::size_t nf = final_count(n, fd);
    for (std::uint64_t q : sample_without_replacement(rng, n, nf))
        ta.final.push_back(static_cast<State>(q));
    normalize_set(ta.final);
    ta.normalize();
    return ta;
}

double measured_ta_density(const TreeAutomaton& ta) {
    std::set<std::pair<Symbol, std::vector<State>>> lhs;
    for (const auto& r : ta.rules) lhs.insert({r.sym, r.lhs});
    if (lhs.empty()) return 0.0;
    return static_cast<double>(ta.rules.size()) / static_cast<double>(lhs.size());
}

}  // namespace simaut
