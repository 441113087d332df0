#include "simaut/formats.hh"

#include <map>
#include <sstream>

namespace simaut {
namespace {

struct Token {
    std::string text;
    std::size_t line;
};

/// Splits @p text into whitespace-separated tokens; `#` comments run to end of
/// line; `(`, `)`, `,` are standalone tokens (Timbuk punctuation).
std::vector<Token> tokenize(const std::string& text, bool timbuk_punct) {
    std::vector<Token> out;
    std::size_t line = 1;
    std::string cur;
    std::size_t cur_line = 1;
    auto flush = [&] {
        if (!cur.empty()) {
            out.push_back({cur, cur_line});
            cur.clear();
        }
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '#') {
            flush();
            while (i < text.size() && text[i] != '\n') ++i;
            --i;
            continue;
        }
        if (c == '\n') {
            flush();
            ++line;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            flush();
            continue;
        }
        if (timbuk_punct && (c == '(' || c == ')' || c == ',')) {
            flush();
            out.push_back({std::string(1, c), line});
            continue;
        }
        if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
            flush();
            out.push_back({"->", line});
            ++i;
            continue;
        }
        if (cur.empty()) cur_line = line;
        cur += c;
    }
    flush();
    return out;
}

class TokenStream {
public:
    explicit TokenStream(std::vector<Token> toks) : toks_(std::move(toks)) {}

    bool done() const { return pos_ >= toks_.size(); }
    const Token& peek() const {
        if (done()) throw ParseError(last_line(), "unexpected end of input");
        return toks_[pos_];
    }
    Token next() {
        const Token t = peek();
        ++pos_;
        return t;
    }
    void expect(const std::string& text) {
        const Token t = next();
        if (t.text != text)
            throw ParseError(t.line, "expected '" + text + "', got '" + t.text + "'");
    }
    bool accept(const std::string& text) {
        if (!done() && toks_[pos_].text == text) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::size_t last_line() const { return toks_.empty() ? 1 : toks_.back().line; }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

bool is_section(const std::string& t) {
    return !t.empty() && t.back() == ':';
}

}  // namespace

TreeAutomaton parse_timbuk(const std::string& text) {
    TokenStream ts(tokenize(text, /*timbuk_punct=*/true));
    TreeAutomaton ta;
    std::map<std::string, Symbol> symbols;
    std::map<std::string, State> states;

    ts.expect("Ops");
    while (!ts.done() && ts.peek().text != "Automaton") {
        const Token t = ts.next();
        const auto colon = t.text.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == t.text.size())
            throw ParseError(t.line, "expected '<symbol>:<arity>', got '" + t.text + "'");
        const std::string name = t.text.substr(0, colon);
        std::size_t arity = 0;
        try {
            arity = std::stoul(t.text.substr(colon + 1));
        } catch (const std::exception&) {
            throw ParseError(t.line, "bad arity in '" + t.text + "'");
        }
        if (symbols.count(name)) throw ParseError(t.line, "duplicate symbol '" + name + "'");
        symbols[name] = ta.arity.size();
        ta.arity.push_back(arity);
        ta.symbol_names.push_back(name);
    }
    ts.expect("Automaton");
    ts.next();  // automaton name, unused
    ts.expect("States");
    while (!ts.done() && ts.peek().text != "Final") {
        const Token t = ts.next();
        // Classic Timbuk permits `q:0` annotations on state declarations.
        const std::string name = t.text.substr(0, t.text.find(':'));
        if (states.count(name)) throw ParseError(t.line, "duplicate state '" + name + "'");
        states[name] = ta.num_states++;
        ta.state_names.push_back(name);
    }
    ts.expect("Final");
    ts.expect("States");
    while (!ts.done() && ts.peek().text != "Transitions") {
        const Token t = ts.next();
        auto it = states.find(t.text);
        if (it == states.end()) throw ParseError(t.line, "undeclared state '" + t.text + "'");
        ta.final.push_back(it->second);
    }
    normalize_set(ta.final);
    ts.expect("Transitions");
    while (!ts.done()) {
        const Token sym_tok = ts.next();
        auto sit = symbols.find(sym_tok.text);
        if (sit == symbols.end())
            throw ParseError(sym_tok.line, "undeclared symbol '" + sym_tok.text + "'");
        TreeAutomaton::Rule rule;
        rule.sym = sit->second;
        if (ts.accept("(")) {
            if (!ts.accept(")")) {
                for (;;) {
                    const Token st = ts.next();
                    auto it = states.find(st.text);
                    if (it == states.end())
                        throw ParseError(st.line, "undeclared state '" + st.text + "'");
                    rule.lhs.push_back(it->second);
                    if (ts.accept(")")) break;
                    ts.expect(",");
                }
            }
        }
        if (rule.lhs.size() != ta.arity[rule.sym])
            throw ParseError(sym_tok.line, "arity mismatch for symbol '" + sym_tok.text +
                                               "': declared " + std::to_string(ta.arity[rule.sym]) +
                                               ", rule has " + std::to_string(rule.lhs.size()));
        ts.expect("->");
        const Token rt = ts.next();
        auto it = states.find(rt.text);
        if (it == states.end()) throw ParseError(rt.line, "undeclared state '" + rt.text + "'");
        rule.rhs = it->second;
        ta.rules.push_back(rule);
    }
    ta.normalize();
    return ta;
}

std::string serialize_timbuk(const TreeAutomaton& ta, const std::string& name) {
    std::ostringstream os;
    os << "Ops";
    for (Symbol s = 0; s < ta.num_symbols(); ++s)
        os << ' ' << ta.symbol_name(s) << ':' << ta.arity[s];
    os << "\nAutomaton " << name << "\nStates";
    for (State q = 0; q < ta.num_states; ++q) os << ' ' << ta.state_name(q);
    os << "\nFinal States";
    for (State q : ta.final) os << ' ' << ta.state_name(q);
    os << "\nTransitions\n";
    for (const auto& r : ta.rules) {
        os << ta.symbol_name(r.sym) << '(';
        for (std::size_t i = 0; i < r.lhs.size(); ++i) {
            if (i) os << ',';
            os << ta.state_name(r.lhs[i]);
        }
        os << ") -> " << ta.state_name(r.rhs) << '\n';
    }
    return os.str();
}

namespace {

/// Shared scaffolding for the sectioned FA/ABA formats: maps section name to
/// the token list it holds, in order of appearance.
std::map<std::string, std::vector<Token>> read_sections(
    TokenStream& ts, const std::vector<std::string>& allowed) {
    std::map<std::string, std::vector<Token>> out;
    std::string cur;
    while (!ts.done()) {
        const Token t = ts.next();
        if (is_section(t.text)) {
            cur = t.text.substr(0, t.text.size() - 1);
            bool ok = false;
            for (const auto& a : allowed) ok = ok || a == cur;
            if (!ok) throw ParseError(t.line, "unknown section '" + t.text + "'");
            if (out.count(cur)) throw ParseError(t.line, "duplicate section '" + t.text + "'");
            out[cur];
        } else {
            if (cur.empty()) throw ParseError(t.line, "token '" + t.text + "' before any section");
            out[cur].push_back(t);
        }
    }
    return out;
}

State lookup_state(const std::map<std::string, State>& states, const Token& t) {
    auto it = states.find(t.text);
    if (it == states.end()) throw ParseError(t.line, "undeclared state '" + t.text + "'");
    return it->second;
}

Symbol lookup_symbol(const std::map<std::string, Symbol>& symbols, const Token& t) {
    auto it = symbols.find(t.text);
    if (it == symbols.end()) throw ParseError(t.line, "undeclared symbol '" + t.text + "'");
    return it->second;
}

}  // namespace

Nfa parse_fa(const std::string& text) {
    TokenStream ts(tokenize(text, /*timbuk_punct=*/false));
    auto sections = read_sections(ts, {"alphabet", "states", "initial", "final", "trans"});
    for (const char* required : {"alphabet", "states", "initial", "final", "trans"})
        if (!sections.count(required))
            throw ParseError(ts.last_line(), std::string("missing section '") + required + ":'");
    Nfa nfa;
    std::map<std::string, Symbol> symbols;
    std::map<std::string, State> states;
    for (const Token& t : sections["alphabet"]) {
        if (symbols.count(t.text)) throw ParseError(t.line, "duplicate symbol '" + t.text + "'");
        symbols[t.text] = nfa.num_symbols++;
        nfa.symbol_names.push_back(t.text);
    }
    for (const Token& t : sections["states"]) {
        if (states.count(t.text)) throw ParseError(t.line, "duplicate state '" + t.text + "'");
        states[t.text] = nfa.num_states++;
        nfa.state_names.push_back(t.text);
    }
    for (const Token& t : sections["initial"]) nfa.initial.push_back(lookup_state(states, t));
    for (const Token& t : sections["final"]) nfa.final.push_back(lookup_state(states, t));
    normalize_set(nfa.initial);
    normalize_set(nfa.final);
    const auto& tr = sections["trans"];
    if (tr.size() % 3 != 0)
        throw ParseError(tr.empty() ? ts.last_line() : tr.back().line,
                         "trans section must hold `src sym dst` triples");
    for (std::size_t i = 0; i < tr.size(); i += 3)
        nfa.add(lookup_state(states, tr[i]), lookup_symbol(symbols, tr[i + 1]),
                lookup_state(states, tr[i + 2]));
    return nfa;
}

std::string serialize_fa(const Nfa& nfa) {
    std::ostringstream os;
    os << "alphabet:";
    for (Symbol a = 0; a < nfa.num_symbols; ++a) os << ' ' << nfa.symbol_name(a);
    os << "\nstates:";
    for (State q = 0; q < nfa.num_states; ++q) os << ' ' << nfa.state_name(q);
    os << "\ninitial:";
    for (State q : nfa.initial) os << ' ' << nfa.state_name(q);
    os << "\nfinal:";
    for (State q : nfa.final) os << ' ' << nfa.state_name(q);
    os << "\ntrans:\n";
    for (const auto& [src, sym, dst] : nfa.transitions)
        os << nfa.state_name(src) << ' ' << nfa.symbol_name(sym) << ' ' << nfa.state_name(dst)
           << '\n';
    return os.str();
}

AlternatingBuchiAutomaton parse_aba(const std::string& text) {
    // Transition lines are newline-sensitive (`src sym -> q1 q2 ...`), so split
    // the trans section by line.
    TokenStream ts(tokenize(text, /*timbuk_punct=*/false));
    auto sections = read_sections(ts, {"alphabet", "states", "initial", "accepting", "trans"});
    for (const char* required : {"alphabet", "states", "initial", "accepting", "trans"})
        if (!sections.count(required))
            throw ParseError(ts.last_line(), std::string("missing section '") + required + ":'");
    AlternatingBuchiAutomaton aba;
    std::map<std::string, Symbol> symbols;
    std::map<std::string, State> states;
    for (const Token& t : sections["alphabet"]) {
        if (symbols.count(t.text)) throw ParseError(t.line, "duplicate symbol '" + t.text + "'");
        symbols[t.text] = aba.num_symbols++;
        aba.symbol_names.push_back(t.text);
    }
    for (const Token& t : sections["states"]) {
        if (states.count(t.text)) throw ParseError(t.line, "duplicate state '" + t.text + "'");
        states[t.text] = aba.num_states++;
        aba.state_names.push_back(t.text);
    }
    const auto& init = sections["initial"];
    if (init.size() != 1)
        throw ParseError(init.empty() ? ts.last_line() : init[1].line,
                         "initial: must hold exactly one state");
    aba.initial = lookup_state(states, init[0]);
    for (const Token& t : sections["accepting"]) aba.accepting.push_back(lookup_state(states, t));
    normalize_set(aba.accepting);
    aba.resize_delta();
    const auto& tr = sections["trans"];
    std::size_t i = 0;
    while (i < tr.size()) {
        const std::size_t line = tr[i].line;
        const State src = lookup_state(states, tr[i]);
        if (i + 2 >= tr.size()) throw ParseError(line, "truncated transition line");
        const Symbol sym = lookup_symbol(symbols, tr[i + 1]);
        if (tr[i + 2].text != "->")
            throw ParseError(tr[i + 2].line, "expected '->', got '" + tr[i + 2].text + "'");
        i += 3;
        StateSet conjuncts;
        while (i < tr.size() && tr[i].line == line) {
            conjuncts.push_back(lookup_state(states, tr[i]));
            ++i;
        }
        normalize_set(conjuncts);
        aba.delta[src][sym].push_back(conjuncts);
    }
    aba.normalize_cells();
    return aba;
}

std::string serialize_aba(const AlternatingBuchiAutomaton& aba) {
    std::ostringstream os;
    os << "alphabet:";
    for (Symbol a = 0; a < aba.num_symbols; ++a) os << ' ' << aba.symbol_name(a);
    os << "\nstates:";
    for (State q = 0; q < aba.num_states; ++q) os << ' ' << aba.state_name(q);
    os << "\ninitial: " << aba.state_name(aba.initial);
    os << "\naccepting:";
    for (State q : aba.accepting) os << ' ' << aba.state_name(q);
    os << "\ntrans:\n";
    for (State q = 0; q < aba.num_states; ++q)
        for (Symbol a = 0; a < aba.num_symbols; ++a)
            for (const StateSet& conj : aba.delta[q][a]) {
                os << aba.state_name(q) << ' ' << aba.symbol_name(a) << " ->";
                for (State t : conj) os << ' ' << aba.state_name(t);
                os << '\n';
            }
    return os.str();
}

}  // namespace simaut
