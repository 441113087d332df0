#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "simaut/aba_engine.hh"
#include "simaut/formats.hh"
#include "simaut/oracles.hh"
#include "util.hh"

using namespace simaut;

namespace {

AlternatingBuchiAutomaton load_aba(const std::string& name) {
    return parse_aba(testutil::read_file(testutil::data_path(name)));
}

StateRelation relation_of_pairs(std::size_t n,
                                const std::vector<std::pair<State, State>>& pairs) {
    StateRelation r(n);
    for (auto [p, q] : pairs) r.set(p, q, true);
    return r;
}

// The published maximal forward simulation of the 7-state example (state si = index i).
const std::vector<std::pair<State, State>> kFwd62 = {
    {0, 0}, {1, 0}, {1, 1}, {1, 5}, {2, 0}, {2, 1}, {2, 2}, {2, 4}, {2, 5}, {3, 3},
    {3, 6}, {4, 0}, {4, 1}, {4, 2}, {4, 4}, {4, 5}, {5, 0}, {5, 5}, {6, 3}, {6, 6}};
// Its maximal backward simulation parametrised by the forward one.
const std::vector<std::pair<State, State>> kBwd62 = {
    {0, 0}, {1, 1}, {1, 4}, {2, 2}, {3, 3}, {4, 1}, {4, 4}, {5, 2},
    {5, 3}, {5, 5}, {5, 6}, {6, 2}, {6, 3}, {6, 5}, {6, 6}};
// The mediated preorder of the 5-state ambiguous example.
const std::vector<std::pair<State, State>> kMed63 = {
    {0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {1, 3},
    {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}, {4, 4}};

StateRelation alpha_preorder(const AlternatingBuchiAutomaton& a) {
    StateRelation r(a.num_states);
    for (State p = 0; p < a.num_states; ++p)
        for (State q = 0; q < a.num_states; ++q)
            r.set(p, q, !a.is_accepting_state(p) || a.is_accepting_state(q));
    return r;
}

StateRelation iota_preorder(const AlternatingBuchiAutomaton& a) {
    StateRelation r(a.num_states);
    for (State p = 0; p < a.num_states; ++p)
        for (State q = 0; q < a.num_states; ++q) r.set(p, q, p != a.initial || q == a.initial);
    return r;
}

/// Alternative mediated-preorder pruning with the scan order reversed; used to
/// confirm order independence of the greatest fixpoint.
StateRelation mediated_alt_order(const StateRelation& fwd, const StateRelation& bwd) {
    const std::size_t n = fwd.size();
    StateRelation m = fwd.compose(bwd.inverse());
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t q = n; q-- > 0;)
            for (std::size_t s = n; s-- > 0;) {
                if (!m.get(q, s)) continue;
                for (std::size_t r = 0; r < n; ++r)
                    if (fwd.get(s, r) && !m.get(q, r)) {
                        m.set(q, s, false);
                        changed = true;
                        break;
                    }
            }
    }
    return m;
}

std::vector<LassoWord> all_lassos(std::size_t k, std::size_t max_u, std::size_t max_v) {
    std::vector<std::vector<Symbol>> words{{}};
    for (std::size_t i = 0; i < words.size(); ++i)
        if (words[i].size() < std::max(max_u, max_v))
            for (Symbol x = 0; x < k; ++x) {
                auto w = words[i];
                w.push_back(x);
                words.push_back(w);
            }
    std::vector<LassoWord> out;
    for (const auto& u : words) {
        if (u.size() > max_u) continue;
        for (const auto& v : words) {
            if (v.empty() || v.size() > max_v) continue;
            out.push_back({u, v});
        }
    }
    return out;
}

}  // namespace

TEST_CASE("aba_ae lifts in the alternating direction") {
    StateRelation id = StateRelation::identity(3);
    CHECK(aba_ae(id, make_set({0, 1}), make_set({0})));   // every r in S2 has a smaller p
    CHECK(!aba_ae(id, make_set({0}), make_set({0, 1})));  // 1 has no smaller element in S1
    CHECK(aba_ae(id, make_set({0}), {}));                 // vacuous over empty S2
}

TEST_CASE("forward simulation of the 7-state example matches the published 20 pairs") {
    AlternatingBuchiAutomaton a = load_aba("quot-backward.aba");
    StateRelation fwd = aba_forward_simulation(a);
    CHECK(fwd == relation_of_pairs(7, kFwd62));
    CHECK(fwd.is_preorder());
    CHECK(fwd.subset_of(alpha_preorder(a)));
}

TEST_CASE("forward simulation is a fixpoint and contains the identity") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        AlternatingBuchiAutomaton a = testutil::random_aba(4, 2, seed, /*partial=*/true);
        StateRelation fwd = aba_forward_simulation(a);
        CHECK(StateRelation::identity(4).subset_of(fwd));
        CHECK(fwd.is_preorder());
        CHECK(fwd.subset_of(alpha_preorder(a)));
        // One more refinement round changes nothing: every pair still satisfies
        // the forward-simulation condition.
        for (State p = 0; p < 4; ++p)
            for (State r = 0; r < 4; ++r) {
                if (!fwd.get(p, r)) continue;
                for (Symbol x = 0; x < 2; ++x)
                    for (const StateSet& P : a.delta[p][x]) {
                        bool matched = false;
                        for (const StateSet& R : a.delta[r][x])
                            if (aba_ae(fwd, P, R)) {
                                matched = true;
                                break;
                            }
                        CHECK(matched);
                    }
            }
    }
}

TEST_CASE("aba_environments and build_env_lts on a single self-loop") {
    AlternatingBuchiAutomaton a;
    a.num_states = 1;
    a.num_symbols = 1;
    a.initial = 0;
    a.resize_delta();
    a.delta[0][0].push_back({0});  // p -a-> {p}
    auto envs = aba_environments(a);
    REQUIRE(envs.size() == 1);
    CHECK(envs[0] == AbaEnvironment{0, 0, {}});
    Lts lts = build_env_lts(a);
    CHECK(lts.num_states == 2);
    lts.normalize();
    REQUIRE(lts.transitions.size() == 2);
    CHECK(lts.transitions[0] == std::tuple<State, Symbol, State>{0, 0, 1});
    CHECK(lts.transitions[1] == std::tuple<State, Symbol, State>{1, 0, 0});
}

TEST_CASE("one transition with three successors yields 3 environments, 6 edges") {
    AlternatingBuchiAutomaton a;
    a.num_states = 4;
    a.num_symbols = 1;
    a.initial = 0;
    a.resize_delta();
    a.delta[0][0].push_back({1, 2, 3});
    CHECK(aba_environments(a).size() == 3);
    Lts lts = build_env_lts(a);
    CHECK(lts.num_states == 4 + 3);
    CHECK(lts.transitions.size() == 6);
}

TEST_CASE("env-LTS sizes obey |Q'| <= n + nm and |D'| <= 2nm") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        AlternatingBuchiAutomaton a = testutil::random_aba(5, 2, 7000 + seed, /*partial=*/true);
        std::size_t m = 0;  // total size of all successor sets
        for (const auto& row : a.delta)
            for (const auto& alts : row)
                for (const auto& s : alts) m += s.size();
        Lts lts = build_env_lts(a);
        CHECK(lts.num_states == a.num_states + aba_environments(a).size());
        CHECK(lts.num_states <= a.num_states + m);
        CHECK(lts.transitions.size() <= 2 * m);
    }
}

TEST_CASE("backward_init_preorder: matching singleton transitions relate environments") {
    AlternatingBuchiAutomaton a;
    a.num_states = 3;  // p=0, r=1, x=2
    a.num_symbols = 1;
    a.initial = 0;
    a.resize_delta();
    a.delta[0][0].push_back({2});
    a.delta[1][0].push_back({2});
    StateRelation init = backward_init_preorder(a, StateRelation::identity(3));
    auto envs = aba_environments(a);
    REQUIRE(envs.size() == 2);  // (0,a,{}) and (1,a,{})
    CHECK(init.get(3, 4));      // empty residuals relate vacuously
    CHECK(init.get(4, 3));
}

TEST_CASE("backward_init_preorder: two beta-F states terminate a transition pair") {
    AlternatingBuchiAutomaton a;
    a.num_states = 4;  // p=0 with P={0}; r=1 with R={2,3}
    a.num_symbols = 1;
    a.initial = 0;
    a.resize_delta();
    a.delta[0][0].push_back({0});
    a.delta[1][0].push_back({2, 3});
    StateRelation init = backward_init_preorder(a, StateRelation::identity(4));
    auto envs = aba_environments(a);
    // Environments: (0,a,{}) then (1,a,{2}) and (1,a,{3}). The transition pair
    // (0 -a-> {0}, 1 -a-> {2,3}) has two beta-F states in R, so no environment
    // of p=0 is below an environment of r=1.
    REQUIRE(envs.size() == 3);
    for (std::size_t i = 0; i < envs.size(); ++i)
        for (std::size_t j = 0; j < envs.size(); ++j)
            if (envs[i].p == 0 && envs[j].p == 1) CHECK(!init.get(4 + i, 4 + j));
}

TEST_CASE("backward_init_preorder equals the pairwise oracle on random ABAs") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const std::size_t n = 2 + seed % 4;  // up to 5 states
        AlternatingBuchiAutomaton a = testutil::random_aba(n, 2, 9000 + seed, /*partial=*/true);
        StateRelation fwd = aba_forward_simulation(a);
        CHECK(backward_init_preorder(a, fwd) == naive_env_preorder(a, fwd));
    }
}

TEST_CASE("backward simulation of the 7-state example matches the published 15 pairs") {
    AlternatingBuchiAutomaton a = load_aba("quot-backward.aba");
    StateRelation fwd = aba_forward_simulation(a);
    StateRelation bwd = aba_backward_simulation(a, fwd);
    CHECK(bwd == relation_of_pairs(7, kBwd62));
    CHECK(bwd.is_preorder());
    CHECK(bwd.subset_of(alpha_preorder(a)));
    CHECK(bwd.subset_of(iota_preorder(a)));
}

TEST_CASE("backward simulation equals the naive fixpoint on random ABAs") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const std::size_t n = 2 + seed % 4;
        AlternatingBuchiAutomaton a = testutil::random_aba(n, 2, 11000 + seed, /*partial=*/true);
        StateRelation fwd = aba_forward_simulation(a);
        StateRelation bwd = aba_backward_simulation(a, fwd);
        CHECK(bwd == naive_backward_simulation_aba(a, fwd));
        CHECK(StateRelation::identity(n).subset_of(bwd));
        CHECK(bwd.subset_of(alpha_preorder(a)));
        CHECK(bwd.subset_of(iota_preorder(a)));
    }
}

TEST_CASE("mediated preorder of the ambiguous example matches the published 14 pairs") {
    AlternatingBuchiAutomaton a = load_aba("quot-mediated.aba");
    StateRelation fwd = aba_forward_simulation(a);
    StateRelation bwd = aba_backward_simulation(a, fwd);
    StateRelation med = mediated_preorder(fwd, bwd);
    CHECK(med == relation_of_pairs(5, kMed63));
    CHECK(fwd.subset_of(med));
}

TEST_CASE("mediated preorder: contract holds and pruning order does not matter") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const std::size_t n = 2 + seed % 4;
        AlternatingBuchiAutomaton a = testutil::random_aba(n, 2, 13000 + seed, /*partial=*/true);
        StateRelation fwd = aba_forward_simulation(a);
        StateRelation bwd = aba_backward_simulation(a, fwd);
        StateRelation med = mediated_preorder(fwd, bwd);  // throws if the contract breaks
        CHECK(med.is_preorder());
        CHECK(fwd.subset_of(med));
        CHECK(med.subset_of(fwd.compose(bwd.inverse())));
        CHECK(med.compose(fwd).subset_of(med));
        CHECK(med == mediated_alt_order(fwd, bwd));
    }
}

TEST_CASE("remove_ambiguity: the ambiguous example loses the dominated s1") {
    AlternatingBuchiAutomaton a = load_aba("quot-mediated.aba");
    StateRelation fwd = aba_forward_simulation(a);
    CHECK(!aba_is_unambiguous(a, fwd));
    AlternatingBuchiAutomaton d = remove_ambiguity(a, fwd);
    CHECK(aba_is_unambiguous(d, fwd));
    // s0 -a-> {s1,s2,s3}: the ascending scan deletes s1 (s2 is forward
    // equivalent and survives), leaving {s2,s3}.
    REQUIRE(d.delta[0][0].size() == 1);
    CHECK(d.delta[0][0][0] == StateSet{2, 3});
}

TEST_CASE("remove_ambiguity preserves language and forward simulation") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        AlternatingBuchiAutomaton a = testutil::random_aba(4, 2, 15000 + seed, /*partial=*/true);
        StateRelation fwd = aba_forward_simulation(a);
        AlternatingBuchiAutomaton d = remove_ambiguity(a, fwd);
        CHECK(aba_is_unambiguous(d, fwd));
        CHECK(aba_forward_simulation(d) == fwd);
        for (const LassoWord& w : all_lassos(2, 2, 2))
            CHECK(aba_lasso_member(a, w) == aba_lasso_member(d, w));
        // Unambiguous input is returned with identical transitions.
        AlternatingBuchiAutomaton d2 = remove_ambiguity(d, fwd);
        CHECK(d2.delta == d.delta);
    }
}

TEST_CASE("extend_aba: identity mediator is the identity extension") {
    AlternatingBuchiAutomaton a = testutil::random_aba(4, 2, 21, /*partial=*/false);
    AlternatingBuchiAutomaton plus = extend_aba(a, StateRelation::identity(4));
    CHECK(plus.delta == a.delta);
    CHECK(plus.accepting == a.accepting);
}

TEST_CASE("extend_aba grows transitions and finals, preserves the lasso language") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        AlternatingBuchiAutomaton raw = testutil::random_aba(4, 2, 17000 + seed, /*partial=*/true);
        AlternatingBuchiAutomaton a = remove_ambiguity(raw, aba_forward_simulation(raw));
        StateRelation fwd = aba_forward_simulation(a);
        StateRelation bwd = aba_backward_simulation(a, fwd);
        StateRelation med = mediated_preorder(fwd, bwd);
        AlternatingBuchiAutomaton plus = extend_aba(a, med);
        CHECK(plus.num_transitions() >= a.num_transitions());
        CHECK(std::includes(plus.accepting.begin(), plus.accepting.end(), a.accepting.begin(),
                            a.accepting.end()));
        for (const LassoWord& w : all_lassos(2, 3, 3))
            CHECK(aba_lasso_member(a, w) == aba_lasso_member(plus, w));
    }
}

TEST_CASE("quotient_aba: identity is an isomorphism; non-equivalences rejected") {
    AlternatingBuchiAutomaton a = load_aba("quot-backward.aba");
    AlternatingBuchiAutomaton q = quotient_aba(a, StateRelation::identity(7));
    CHECK(q.num_states == a.num_states);
    CHECK(q.delta == a.delta);
    StateRelation bad = StateRelation::identity(7);
    bad.set(0, 1, true);
    CHECK_THROWS_AS(quotient_aba(a, bad), std::invalid_argument);
}

TEST_CASE("backward-equivalence quotient of the 7-state example changes the language") {
    AlternatingBuchiAutomaton a = load_aba("quot-backward.aba");
    StateRelation fwd = aba_forward_simulation(a);
    StateRelation bwd = aba_backward_simulation(a, fwd);
    AlternatingBuchiAutomaton q = quotient_aba(a, bwd.intersect(bwd.inverse()));
    CHECK(q.num_states == 5);  // {s1,s4} and {s5,s6} collapse
    const LassoWord ab_omega{{0}, {1}};  // a b^omega
    CHECK(!aba_lasso_member(a, ab_omega));
    CHECK(aba_lasso_member(q, ab_omega));
}

TEST_CASE("mediated quotient of the ambiguous example changes the language") {
    AlternatingBuchiAutomaton a = load_aba("quot-mediated.aba");
    StateRelation fwd = aba_forward_simulation(a);
    StateRelation bwd = aba_backward_simulation(a, fwd);
    StateRelation med = mediated_preorder(fwd, bwd);
    AlternatingBuchiAutomaton q = quotient_aba(a, med.intersect(med.inverse()));
    CHECK(q.num_states == 3);  // {s1,s2,s3} collapses
    const LassoWord aab_a{{0, 0, 1}, {0}};  // a a b a^omega
    CHECK(!aba_lasso_member(a, aab_a));
    CHECK(aba_lasso_member(q, aab_a));
}

TEST_CASE("mediated quotienting after disambiguation preserves the lasso language") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        AlternatingBuchiAutomaton raw = testutil::random_aba(4, 2, 19000 + seed, /*partial=*/true);
        AlternatingBuchiAutomaton a = remove_ambiguity(raw, aba_forward_simulation(raw));
        StateRelation fwd = aba_forward_simulation(a);
        StateRelation bwd = aba_backward_simulation(a, fwd);
        StateRelation med = mediated_preorder(fwd, bwd);
        AlternatingBuchiAutomaton q = quotient_aba(a, med.intersect(med.inverse()));
        CHECK(q.num_states <= a.num_states);
        for (const LassoWord& w : all_lassos(2, 3, 3))
            CHECK(aba_lasso_member(raw, w) == aba_lasso_member(q, w));
    }
}
