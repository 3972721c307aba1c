#pragma once

#include <string>
#include <string_view>

#include "automata.hpp"

namespace pcfa {

// Line-oriented automaton format:
//
//   type: nfa | idfa | cdfa
//   alphabet: a b c
//   states: 4
//   initial: 0          (space-separated list for nfa)
//   final: 0 1 2 3
//   trans: 0 a 1        (one line per (state, symbol, target))
//
// '#' starts a comment. Unknown keys are parse errors. Missing trans lines
// are legal for nfa/idfa, illegal for cdfa.

Automaton parse_automaton(std::string_view text);
Automaton read_automaton(const std::string& path);
std::string to_text(const Automaton& a);
void write_automaton(const Automaton& a, const std::string& path);

std::string to_dot(const Automaton& a);

/// Words on the command line and in certificate files spell the empty string
/// as "-".
std::string parse_word(std::string_view token);
std::string word_to_token(std::string_view word);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace pcfa
