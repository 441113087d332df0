/// @file formats.hh
/// Text formats: Timbuk tree automata, FA, and ABA formats.

#ifndef SIMAUT_FORMATS_HH
#define SIMAUT_FORMATS_HH

#include <stdexcept>
#include <string>

#include "simaut/core.hh"

namespace simaut {

/// Parse failure; carries the 1-based input line of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Timbuk format:
///   Ops <sym>:<arity> ...
///   Automaton <name>
///   States <s> ...
///   Final States <s> ...
///   Transitions
///   sym(q1,...,qn) -> q        (arity 0: `sym() -> q` or `sym -> q`)
/// `#` starts a comment; whitespace-insensitive.
TreeAutomaton parse_timbuk(const std::string& text);
std::string serialize_timbuk(const TreeAutomaton& ta, const std::string& name = "A");

/// FA format: sections `alphabet:`, `states:`, `initial:`, `final:`, `trans:`;
/// transition lines `src sym dst`. `#` comments.
Nfa parse_fa(const std::string& text);
std::string serialize_fa(const Nfa& nfa);

/// ABA format: as FA but `initial:` holds one state, section `accepting:`,
/// transition lines `src sym -> q1 q2 ...` — one conjunct set per line;
/// multiple lines per (src,sym) are alternatives.
AlternatingBuchiAutomaton parse_aba(const std::string& text);
std::string serialize_aba(const AlternatingBuchiAutomaton& aba);

}  // namespace simaut

#endif  // SIMAUT_FORMATS_HH
