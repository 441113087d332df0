#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "simaut/aba_engine.hh"  // aba_forward_simulation feeds two oracle tests
#include "simaut/formats.hh"
#include "simaut/oracles.hh"
#include "util.hh"

using namespace simaut;

TEST_CASE("naive_lts_simulation trivia") {
    Lts edgeless;
    edgeless.num_states = 3;
    edgeless.num_symbols = 1;
    CHECK(naive_lts_simulation(edgeless, StateRelation::full(3)) == StateRelation::full(3));
    Lts single;
    single.num_states = 1;
    single.num_symbols = 1;
    single.add(0, 0, 0);
    CHECK(naive_lts_simulation(single, StateRelation::full(1)) == StateRelation::full(1));
    CHECK_THROWS_AS(naive_lts_simulation(edgeless, StateRelation(3)), std::invalid_argument);
}

TEST_CASE("fa_universal_subset on the reference inputs") {
    Nfa a = parse_fa(testutil::read_file(testutil::data_path("univ4.fa")));
    CHECK(fa_universal_subset(a));
    // F = Q with total transitions: universal.
    Nfa total;
    total.num_states = 2;
    total.num_symbols = 2;
    total.initial = {0};
    total.final = {0, 1};
    for (State q = 0; q < 2; ++q)
        for (Symbol a = 0; a < 2; ++a) total.add(q, a, 1 - q);
    CHECK(fa_universal_subset(total));
    // Cap exceeded raises rather than truncating.
    Nfa big = generate_random_fa(12, 2, 1.2, 0.3, 5);
    CHECK_THROWS_AS(fa_universal_subset(big, 2), OracleCapExceeded);
}

TEST_CASE("fa_inclusion_product on the reference pair") {
    Nfa a = parse_fa(testutil::read_file(testutil::data_path("incl2a.fa")));
    Nfa b = parse_fa(testutil::read_file(testutil::data_path("incl2b.fa")));
    CHECK(fa_inclusion_product(a, b));
    Nfa b_nofinal = b;
    b_nofinal.final.clear();
    CHECK(!fa_inclusion_product(a, b_nofinal));
}

TEST_CASE("word_language_bounded") {
    Nfa empty;
    empty.num_states = 1;
    empty.num_symbols = 1;
    empty.initial = {0};
    CHECK(word_language_bounded(empty, 3).empty());
    // Hand case: initial state accepting, one a-loop => all words over {a}.
    Nfa loop = empty;
    loop.final = {0};
    loop.add(0, 0, 0);
    auto l = word_language_bounded(loop, 2);
    CHECK(l == std::set<std::vector<Symbol>>{{}, {0}, {0, 0}});
    CHECK_THROWS_AS(word_language_bounded(loop, 9), OracleCapExceeded);
}

TEST_CASE("ta_determinize yields a complete deterministic automaton") {
    TreeAutomaton ta = parse_timbuk(testutil::read_file(testutil::data_path("example.timbuk")));
    std::vector<StateSet> macros;
    TreeAutomaton det = ta_determinize(ta, &macros);
    CHECK(det.num_states == macros.size());
    // Determinism and completeness: exactly one rule per (symbol, lhs tuple).
    std::set<std::pair<Symbol, std::vector<State>>> lhs;
    for (const auto& r : det.rules) CHECK(lhs.insert({r.sym, r.lhs}).second);
    std::size_t expected = 0;
    for (Symbol a = 0; a < det.num_symbols(); ++a) {
        std::size_t tuples = 1;
        for (std::size_t i = 0; i < det.arity[a]; ++i) tuples *= det.num_states;
        expected += tuples;
    }
    CHECK(det.rules.size() == expected);
    // Language preserved on bounded trees.
    CHECK(tree_language_bounded(det, 5) == tree_language_bounded(ta, 5));
}

TEST_CASE("ta_universal_classical trivia") {
    TreeAutomaton total = parse_timbuk("Ops a:0 f:2\nAutomaton A\nStates q\nFinal States q\n"
                                       "Transitions\na -> q\nf(q,q) -> q\n");
    CHECK(ta_universal_classical(total));
    TreeAutomaton nofinal = total;
    nofinal.final.clear();
    CHECK(!ta_universal_classical(nofinal));
    CHECK(ta_inclusion_classical(nofinal, total));
    CHECK(ta_inclusion_classical(total, total));
}

TEST_CASE("tree_language_bounded and ta_accepts_tree") {
    TreeAutomaton ta = parse_timbuk(testutil::read_file(testutil::data_path("example.timbuk")));
    auto lang = tree_language_bounded(ta, 4);
    // Only f(a,a) is accepted at <= 4 nodes.
    Tree leaf{0, {}};
    Tree faa{1, {leaf, leaf}};
    CHECK(lang == std::set<Tree>{faa});
    CHECK(ta_accepts_tree(ta, faa));
    CHECK(!ta_accepts_tree(ta, leaf));
    CHECK_THROWS_AS(tree_language_bounded(ta, 9), OracleCapExceeded);
}

TEST_CASE("enumerate_contexts: the hole-only context and isolated states") {
    TreeAutomaton ta = parse_timbuk(testutil::read_file(testutil::data_path("example.timbuk")));
    // Hole-only context: accepted from (q) iff q is final. q1 = index 1.
    auto from_final = enumerate_contexts(ta, {1}, 2);
    Tree hole{ta.num_symbols(), {}};
    CHECK(from_final.count(hole) == 1);
    auto from_nonfinal = enumerate_contexts(ta, {0}, 0);
    CHECK(from_nonfinal.count(hole) == 0);
    // A fresh isolated state admits no contexts at all.
    TreeAutomaton iso = ta;
    iso.num_states += 1;
    CHECK(enumerate_contexts(iso, {iso.num_states - 1}, 2).empty());
    CHECK_THROWS_AS(enumerate_contexts(ta, {0}, 7), OracleCapExceeded);
}

TEST_CASE("enumerate_contexts is consistent with tree membership") {
    // Plugging an accepted subtree into an accepted single-hole context gives
    // an accepted tree.
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        TreeAutomaton ta = generate_random_ta(3, {0, 2}, 1.4, 0.5, 23000 + seed);
        // Macro-state evaluator for candidate subtrees.
        struct Ev {
            const TreeAutomaton& ta;
            StateSet operator()(const Tree& t) const {
                std::vector<StateSet> kids;
                for (const Tree& c : t.children) kids.push_back((*this)(c));
                StateSet out;
                for (const auto& r : ta.rules) {
                    if (r.sym != t.sym) continue;
                    bool ok = true;
                    for (std::size_t i = 0; i < r.lhs.size(); ++i)
                        ok = ok && set_contains(kids[i], r.lhs[i]);
                    if (ok) out.push_back(r.rhs);
                }
                normalize_set(out);
                return out;
            }
        } ev{ta};
        for (State q = 0; q < ta.num_states; ++q) {
            auto ctxs = enumerate_contexts(ta, {q}, 3);
            // Small subtrees whose run can end in q.
            Tree leaf{0, {}};
            std::vector<Tree> reaching;
            for (const Tree& t : {leaf, Tree{1, {leaf, leaf}}})
                if (set_contains(ev(t), q)) reaching.push_back(t);
            if (reaching.empty()) continue;
            // Substitute into each accepted context: the result must be accepted.
            struct Subst {
                Symbol hole;
                const Tree& rep;
                Tree operator()(const Tree& c) const {
                    if (c.sym == hole) return rep;
                    Tree out{c.sym, {}};
                    for (const Tree& k : c.children) out.children.push_back((*this)(k));
                    return out;
                }
            };
            for (const Tree& c : ctxs) {
                Subst s{ta.num_symbols(), reaching.front()};
                CHECK(ta_accepts_tree(ta, s(c)));
            }
        }
    }
}

TEST_CASE("aba_to_nba: all-accepting total self-loops accept every lasso") {
    AlternatingBuchiAutomaton a;
    a.num_states = 1;
    a.num_symbols = 2;
    a.initial = 0;
    a.accepting = {0};
    a.resize_delta();
    for (Symbol x = 0; x < 2; ++x) a.delta[0][x].push_back({0});
    CHECK(aba_lasso_member(a, {{}, {0}}));
    CHECK(aba_lasso_member(a, {{0, 1}, {1, 0}}));
    CHECK(aba_lasso_member(a, {{1}, {0, 0, 1}}));
}

TEST_CASE("aba_to_nba: quotient regression words") {
    AlternatingBuchiAutomaton a62 =
        parse_aba(testutil::read_file(testutil::data_path("quot-backward.aba")));
    CHECK(!aba_lasso_member(a62, {{0}, {1}}));  // a b^omega rejected
    AlternatingBuchiAutomaton a63 =
        parse_aba(testutil::read_file(testutil::data_path("quot-mediated.aba")));
    CHECK(!aba_lasso_member(a63, {{0, 0, 1}, {0}}));  // a a b a^omega rejected
    // a63 accepts a b^omega? s0 -a-> {s1,s2,s3}; all three go to s4 on b, s4
    // self-loops on a but has no b-moves: a (b a^omega)? Check a simple
    // accepted word instead: a then b then a^omega.
    CHECK(aba_lasso_member(a63, {{0, 1}, {0}}));
}

TEST_CASE("nba_lasso_member hand case") {
    // NBA over {a}: q0 -a-> q0 (final q0) accepts a^omega; the automaton with
    // final unreachable in a loop rejects it.
    Nfa nba;
    nba.num_states = 2;
    nba.num_symbols = 1;
    nba.initial = {0};
    nba.final = {0};
    nba.add(0, 0, 0);
    nba.add(0, 0, 1);
    CHECK(nba_lasso_member(nba, {{}, {0}}));
    nba.final = {1};  // q1 has no outgoing edges: no accepting cycle
    CHECK(!nba_lasso_member(nba, {{}, {0}}));
    CHECK_THROWS_AS(nba_lasso_member(nba, {{0}, {}}), std::invalid_argument);
}

TEST_CASE("aba_lasso_language_equal bounds") {
    AlternatingBuchiAutomaton a = testutil::random_aba(3, 2, 77, /*partial=*/true);
    CHECK(aba_lasso_language_equal(a, a, 3, 3));
    CHECK_THROWS_AS(aba_lasso_language_equal(a, a, 5, 3), OracleCapExceeded);
}

TEST_CASE("naive fixpoint oracles on empty automata") {
    TreeAutomaton ta;
    ta.num_states = 2;
    ta.arity = {0};
    StateRelation up = naive_upward_simulation(ta);
    CHECK(up == StateRelation::full(2));  // no rules, no finals: everything simulates
    AlternatingBuchiAutomaton a;
    a.num_states = 2;
    a.num_symbols = 1;
    a.initial = 0;
    a.resize_delta();
    StateRelation fwd = aba_forward_simulation(a);
    StateRelation bwd = naive_backward_simulation_aba(a, fwd);
    // No transitions and no accepting states: only the iota condition cuts
    // pairs, and it only constrains pairs whose left state is initial.
    CHECK(bwd.get(0, 0));
    CHECK(bwd.get(1, 0));
    CHECK(bwd.get(1, 1));
    CHECK(!bwd.get(0, 1));  // 0 is initial, 1 is not
}

TEST_CASE("naive_env_preorder hand case") {
    // Two parallel singleton transitions to a shared target: environment pair
    // related both ways; state pairs per alpha/iota conditions.
    AlternatingBuchiAutomaton a;
    a.num_states = 3;
    a.num_symbols = 1;
    a.initial = 0;
    a.resize_delta();
    a.delta[0][0].push_back({2});
    a.delta[1][0].push_back({2});
    StateRelation pre = naive_env_preorder(a, StateRelation::identity(3));
    CHECK(pre.get(3, 4));
    CHECK(pre.get(4, 3));
    CHECK(!pre.get(0, 1));  // 0 is initial, 1 is not: iota condition fails
    CHECK(pre.get(1, 0));
    CHECK(pre.get(1, 2));
}

TEST_CASE("naive upward simulation hand case") {
    // Rules: a -> q0, a -> q1, f(q0) -> q2 with q2 final, f(q1) -> q2.
    TreeAutomaton ta;
    ta.num_states = 3;
    ta.arity = {0, 1};
    ta.rules.push_back({{}, 0, 0});
    ta.rules.push_back({{}, 0, 1});
    ta.rules.push_back({{0}, 1, 2});
    ta.rules.push_back({{1}, 1, 2});
    ta.final = {2};
    StateRelation up = naive_upward_simulation(ta);
    // q0 and q1 occur in identical environments: mutually similar.
    CHECK(up.get(0, 1));
    CHECK(up.get(1, 0));
    // q2 is final; q0 is not: q2 cannot be upward-below q0 (acceptance), and
    // q0's f-rule cannot be matched from q2 (no rule with q2 on the left).
    CHECK(!up.get(2, 0));
    CHECK(!up.get(0, 2));
}
