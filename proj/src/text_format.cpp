#include "text_format.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

namespace pcfa {

namespace {

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.emplace_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

[[noreturn]] void fail(size_t line, const std::string& msg) {
    throw_parse("line " + std::to_string(line) + ": " + msg);
}

uint64_t parse_nat(const std::string& tok, size_t line, const char* what) {
    if (tok.empty() || tok.size() > 12 || tok.find_first_not_of("0123456789") != std::string::npos)
        fail(line, std::string("expected a number for ") + what + ", got \"" + tok + "\"");
    return std::stoull(tok);
}

State parse_state(const std::string& tok, uint64_t num_states, size_t line) {
    uint64_t v = parse_nat(tok, line, "state");
    if (v >= num_states)
        fail(line, "state " + tok + " out of range (states: " + std::to_string(num_states) + ")");
    return static_cast<State>(v);
}

}  // namespace

Automaton parse_automaton(std::string_view text) {
    std::string type;
    std::optional<Alphabet> alphabet;
    std::optional<uint64_t> states;
    std::optional<std::vector<State>> initial;
    std::optional<std::vector<State>> final_states;
    struct TransLine {
        State q;
        uint32_t s;
        State t;
        size_t line;
    };
    std::vector<TransLine> trans;

    size_t lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view raw = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++lineno;
        if (auto h = raw.find('#'); h != std::string_view::npos) raw = raw.substr(0, h);
        auto toks = split_ws(raw);
        if (toks.empty()) {
            if (pos > text.size()) break;
            continue;
        }
        std::string key = toks[0];
        if (key.back() != ':') fail(lineno, "expected \"key:\", got \"" + key + "\"");
        key.pop_back();
        std::vector<std::string> args(toks.begin() + 1, toks.end());

        if (key == "type") {
            if (!type.empty()) fail(lineno, "duplicate type");
            if (args.size() != 1 || (args[0] != "nfa" && args[0] != "idfa" && args[0] != "cdfa"))
                fail(lineno, "type must be one of: nfa idfa cdfa");
            type = args[0];
        } else if (key == "alphabet") {
            if (alphabet) fail(lineno, "duplicate alphabet");
            Alphabet a;
            std::unordered_set<char> seen;
            for (const auto& t : args) {
                if (t.size() != 1) fail(lineno, "alphabet symbols must be single characters");
                char c = t[0];
                if (c == '-' || c == '#')
                    fail(lineno, std::string("'") + c + "' is reserved and cannot be a symbol");
                if (!seen.insert(c).second) fail(lineno, std::string("duplicate symbol '") + c + "'");
                a.symbols += c;
            }
            if (a.symbols.empty()) fail(lineno, "alphabet must have at least one symbol");
            alphabet = std::move(a);
        } else if (key == "states") {
            if (states) fail(lineno, "duplicate states");
            if (args.size() != 1) fail(lineno, "states takes one number");
            states = parse_nat(args[0], lineno, "states");
            if (*states > 1u << 22) fail(lineno, "state count too large");
        } else if (key == "initial") {
            if (initial) fail(lineno, "duplicate initial");
            if (!states) fail(lineno, "initial must come after states");
            std::vector<State> v;
            for (const auto& t : args) v.push_back(parse_state(t, *states, lineno));
            initial = std::move(v);
        } else if (key == "final") {
            if (final_states) fail(lineno, "duplicate final");
            if (!states) fail(lineno, "final must come after states");
            std::vector<State> v;
            for (const auto& t : args) v.push_back(parse_state(t, *states, lineno));
            final_states = std::move(v);
        } else if (key == "trans") {
            if (!states || !alphabet) fail(lineno, "trans must come after states and alphabet");
            if (args.size() != 3) fail(lineno, "trans takes: state symbol target");
            if (args[1].size() != 1 || !alphabet->contains(args[1][0]))
                fail(lineno, "unknown symbol \"" + args[1] + "\"");
            trans.push_back({parse_state(args[0], *states, lineno),
                             static_cast<uint32_t>(alphabet->index_of(args[1][0])),
                             parse_state(args[2], *states, lineno), lineno});
        } else {
            fail(lineno, "unknown key \"" + key + "\"");
        }
        if (pos > text.size()) break;
    }

    if (type.empty()) throw_parse("missing type");
    if (!alphabet) throw_parse("missing alphabet");
    if (!states) throw_parse("missing states");
    if (!initial) throw_parse("missing initial");
    if (!final_states) throw_parse("missing final");
    uint32_t n = static_cast<uint32_t>(*states);

    if (type == "nfa") {
        Nfa a(n, *alphabet);
        for (State q : *initial) a.initial.set(q);
        for (State q : *final_states) a.final.set(q);
        for (const auto& t : trans) a.targets(t.q, t.s).set(t.t);
        return Automaton(std::move(a));
    }

    // deterministic models
    if (n == 0 && !initial->empty()) throw_parse("a 0-state automaton cannot have an initial state");
    if (n > 0 && initial->size() != 1)
        throw_parse(type + " must have exactly one initial state, got " +
                    std::to_string(initial->size()));
    Idfa d(n, *alphabet);
    d.initial = initial->empty() ? kNoState : (*initial)[0];
    for (State q : *final_states) d.final.set(q);
    for (const auto& t : trans) {
        if (d.target(t.q, t.s) != kNoState)
            fail(t.line, "duplicate transition for state " + std::to_string(t.q) +
                             " on '" + alphabet->symbols[t.s] + "'");
        d.set_target(t.q, t.s, t.t);
    }
    if (type == "idfa") return Automaton(std::move(d));

    if (n == 0) throw_parse("cdfa must have at least one state");
    for (State q = 0; q < n; ++q)
        for (uint32_t s = 0; s < d.alphabet.size(); ++s)
            if (d.target(q, s) == kNoState)
                throw_parse("cdfa is missing the transition for state " + std::to_string(q) +
                            " on '" + std::string(1, d.alphabet.symbols[s]) + "'");
    Cdfa c(n, d.alphabet);
    c.delta = d.delta;
    c.initial = d.initial;
    c.final = d.final;
    return Automaton(std::move(c));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Parse, "cannot open \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Parse, "cannot write \"" + path + "\"");
    out << content;
}

Automaton read_automaton(const std::string& path) {
    try {
        return parse_automaton(read_file(path));
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Parse) throw Error(ErrorKind::Parse, path + ": " + e.what());
        throw;
    }
}

std::string to_text(const Automaton& a) {
    std::ostringstream out;
    out << "type: " << kind_name(a.kind()) << "\n";
    out << "alphabet:";
    for (char c : a.alphabet().symbols) out << ' ' << c;
    out << "\n";
    out << "states: " << a.states() << "\n";
    out << "initial:";
    if (a.kind() == Kind::Nfa) {
        std::get<Nfa>(a.value).initial.for_each([&](State q) { out << ' ' << q; });
    } else {
        Idfa d = a.to_idfa();
        if (d.num_states > 0) out << ' ' << d.initial;
    }
    out << "\n";
    out << "final:";
    std::visit([&](const auto& x) { x.final.for_each([&](State q) { out << ' ' << q; }); },
               a.value);
    out << "\n";
    const Alphabet& sigma = a.alphabet();
    if (a.kind() == Kind::Nfa) {
        const Nfa& x = std::get<Nfa>(a.value);
        for (State q = 0; q < x.num_states; ++q)
            for (uint32_t s = 0; s < sigma.size(); ++s)
                x.targets(q, s).for_each([&](State t) {
                    out << "trans: " << q << ' ' << sigma.symbols[s] << ' ' << t << "\n";
                });
    } else {
        Idfa d = a.to_idfa();
        for (State q = 0; q < d.num_states; ++q)
            for (uint32_t s = 0; s < sigma.size(); ++s)
                if (d.target(q, s) != kNoState)
                    out << "trans: " << q << ' ' << sigma.symbols[s] << ' ' << d.target(q, s)
                        << "\n";
    }
    return out.str();
}

void write_automaton(const Automaton& a, const std::string& path) {
    write_file(path, to_text(a));
}

std::string to_dot(const Automaton& a) {
    std::ostringstream out;
    out << "digraph automaton {\n  rankdir=LR;\n  node [shape=circle];\n";
    Nfa x = a.to_nfa();
    x.final.for_each([&](State q) { out << "  " << q << " [shape=doublecircle];\n"; });
    x.initial.for_each([&](State q) {
        out << "  start" << q << " [shape=none,label=\"\"];\n  start" << q << " -> " << q
            << ";\n";
    });
    for (State q = 0; q < x.num_states; ++q)
        for (uint32_t s = 0; s < x.alphabet.size(); ++s)
            x.targets(q, s).for_each([&](State t) {
                out << "  " << q << " -> " << t << " [label=\"" << x.alphabet.symbols[s]
                    << "\"];\n";
            });
    out << "}\n";
    return out.str();
}

std::string parse_word(std::string_view token) {
    if (token == "-") return "";
    return std::string(token);
}

std::string word_to_token(std::string_view word) {
    if (word.empty()) return "-";
    return std::string(word);
}

}  // namespace pcfa
