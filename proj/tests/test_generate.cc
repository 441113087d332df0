#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "simaut/generate.hh"

using namespace simaut;

TEST_CASE("fa generator: zero density, full final density") {
    Nfa a = generate_random_fa(4, 2, 0.0, 1.0, 0);
    CHECK(a.num_states == 4);
    CHECK(a.transitions.empty());
    CHECK(a.final.size() == 4);
    CHECK(a.initial == StateSet{0});
}

TEST_CASE("fa generator: exact transition and final counts") {
    Nfa a = generate_random_fa(10, 2, 1.5, 0.5, 7);
    std::size_t per_symbol[2] = {0, 0};
    std::set<std::tuple<State, Symbol, State>> uniq;
    for (const auto& t : a.transitions) {
        ++per_symbol[std::get<1>(t)];
        uniq.insert(t);
    }
    CHECK(per_symbol[0] == 15);  // round(1.5 * 10)
    CHECK(per_symbol[1] == 15);
    CHECK(uniq.size() == a.transitions.size());  // drawn without replacement
    CHECK(a.final.size() == 5);                  // ceil(0.5 * 10)
}

TEST_CASE("fa generator is deterministic in the seed") {
    Nfa a = generate_random_fa(8, 2, 2.0, 0.3, 42);
    Nfa b = generate_random_fa(8, 2, 2.0, 0.3, 42);
    CHECK(a.transitions == b.transitions);
    CHECK(a.final == b.final);
    Nfa c = generate_random_fa(8, 2, 2.0, 0.3, 43);
    CHECK((a.transitions != c.transitions || a.final != c.final));
}

TEST_CASE("fa generator rejects densities beyond n^2") {
    CHECK_THROWS_AS(generate_random_fa(3, 1, 4.0, 0.5, 0), std::invalid_argument);
}

TEST_CASE("ta generator: zero density yields no rules") {
    TreeAutomaton ta = generate_random_ta(5, {0, 2}, 0.0, 1.0, 0);
    CHECK(ta.rules.empty());
    CHECK(ta.final.size() == 5);
}

TEST_CASE("ta generator: counts, arities, and measured density") {
    TreeAutomaton ta = generate_random_ta(5, {0, 2}, 2.0, 0.5, 3);
    std::size_t per_symbol[2] = {0, 0};
    std::set<TreeAutomaton::Rule> uniq;
    std::set<std::pair<Symbol, std::vector<State>>> lhs;
    for (const auto& r : ta.rules) {
        ++per_symbol[r.sym];
        CHECK(r.lhs.size() == ta.arity[r.sym]);
        uniq.insert(r);
        lhs.insert({r.sym, r.lhs});
    }
    CHECK(per_symbol[0] == 5);   // leaf symbol saturates at |Q| rules
    CHECK(per_symbol[1] == 10);  // round(2.0 * 5)
    CHECK(uniq.size() == ta.rules.size());
    CHECK(measured_ta_density(ta) ==
          doctest::Approx(double(ta.rules.size()) / double(lhs.size())));
}

TEST_CASE("ta generator is deterministic in the seed") {
    TreeAutomaton a = generate_random_ta(4, {0, 1, 2}, 1.5, 0.5, 9);
    TreeAutomaton b = generate_random_ta(4, {0, 1, 2}, 1.5, 0.5, 9);
    CHECK(a.rules == b.rules);
    CHECK(a.final == b.final);
}

TEST_CASE("ta generator requires a leaf symbol") {
    CHECK_THROWS_AS(generate_random_ta(4, {1, 2}, 1.0, 0.5, 0), std::invalid_argument);
}
