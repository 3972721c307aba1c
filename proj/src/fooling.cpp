#include "fooling.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "lang_ops.hpp"
#include "text_format.hpp"

namespace pcfa {

std::string Violation::to_text() const {
    std::ostringstream out;
    if (cond == Cond::F1) {
        out << "F1 violated in " << set_name << ": pair " << i << " (x=" << word_to_token(pi.x)
            << ", y=" << word_to_token(pi.y) << "): x*y is not in the language";
    } else {
        out << "F2 violated in " << set_name << ": pairs " << i << " (x=" << word_to_token(pi.x)
            << ", y=" << word_to_token(pi.y) << ") and " << j << " (x=" << word_to_token(pj.x)
            << ", y=" << word_to_token(pj.y) << "): both cross concatenations are in the language";
    }
    return out.str();
}

Membership::Membership(const Nfa& lang) : dfa_(minimize_cdfa(complete(determinize(lang)))) {}

bool Membership::contains(std::string_view w) const {
    State q = dfa_.initial;
    for (char c : w) q = dfa_.target(q, dfa_.alphabet.require(c));
    return dfa_.final.test(q);
}

namespace {

void require_over_alphabet(const Alphabet& sigma, const FoolingCertificate& cert) {
    auto chk = [&](const std::string& s) {
        for (char c : s)
            if (!sigma.contains(c))
                throw_precondition(std::string("certificate symbol '") + c +
                                   "' is not in the language alphabet \"" + sigma.symbols + "\"");
    };
    for (const auto& p : cert.pairs) {
        chk(p.x);
        chk(p.y);
    }
    chk(cert.u);
    chk(cert.v);
}

/// Plain F1/F2 over an explicit pair list; first violation (lowest indices)
/// reported under the given set name.
FoolingVerdict check_pairs(const Membership& lang, const std::vector<StringPair>& pairs,
                           const std::string& set_name) {
    for (uint32_t i = 0; i < pairs.size(); ++i)
        if (!lang.contains(pairs[i].x + pairs[i].y))
            return {false, 0,
                    Violation{Violation::Cond::F1, set_name, i, i, pairs[i], pairs[i]}};
    for (uint32_t i = 0; i < pairs.size(); ++i)
        for (uint32_t j = i + 1; j < pairs.size(); ++j)
            if (lang.contains(pairs[i].x + pairs[j].y) &&
                lang.contains(pairs[j].x + pairs[i].y))
                return {false, 0,
                        Violation{Violation::Cond::F2, set_name, i, j, pairs[i], pairs[j]}};
    return {true, pairs.size(), std::nullopt};
}

}  // namespace

FoolingVerdict check_fooling(const Membership& lang, const FoolingCertificate& cert) {
    require_over_alphabet(lang.dfa().alphabet, cert);
    return check_pairs(lang, cert.pairs, "F");
}

FoolingVerdict check_fooling(const Automaton& lang, const FoolingCertificate& cert) {
    return check_fooling(Membership(lang.to_nfa()), cert);
}

FoolingVerdict check_fooling_extended(const Membership& lang, const FoolingCertificate& cert) {
    if (!cert.extended) throw_precondition("extended check needs a certificate with a split");
    if (cert.a_count == 0 || cert.a_count >= cert.pairs.size())
        throw_precondition("extended certificate needs nonempty A and B blocks");
    require_over_alphabet(lang.dfa().alphabet, cert);
    FoolingVerdict v = check_pairs(lang, cert.pairs, "A+B");
    if (!v.ok) return v;
    std::vector<StringPair> a(cert.pairs.begin(), cert.pairs.begin() + cert.a_count);
    a.push_back({"", cert.u});
    v = check_pairs(lang, a, "A+(eps,u)");
    if (!v.ok) return v;
    std::vector<StringPair> b(cert.pairs.begin() + cert.a_count, cert.pairs.end());
    b.push_back({"", cert.v});
    v = check_pairs(lang, b, "B+(eps,v)");
    if (!v.ok) return v;
    return {true, cert.bound(), std::nullopt};
}

FoolingVerdict check_fooling_extended(const Automaton& lang, const FoolingCertificate& cert) {
    return check_fooling_extended(Membership(lang.to_nfa()), cert);
}

FoolingVerdict check_certificate(const Automaton& lang, const FoolingCertificate& cert) {
    Membership m(lang.to_nfa());
    return cert.extended ? check_fooling_extended(m, cert) : check_fooling(m, cert);
}

FoolingFamily fooling_family_from_name(std::string_view name) {
    if (name == "complement-nsc") return FoolingFamily::ComplementNsc;
    if (name == "intersection-nsc") return FoolingFamily::IntersectionNsc;
    if (name == "union-nsc") return FoolingFamily::UnionNsc;
    if (name == "concat-nsc") return FoolingFamily::ConcatNsc;
    if (name == "star-nsc") return FoolingFamily::StarNsc;
    if (name == "reversal-nsc") return FoolingFamily::ReversalNsc;
    throw_precondition("unknown fooling family \"" + std::string(name) + "\"");
}

std::string_view fooling_family_name(FoolingFamily f) {
    switch (f) {
        case FoolingFamily::ComplementNsc: return "complement-nsc";
        case FoolingFamily::IntersectionNsc: return "intersection-nsc";
        case FoolingFamily::UnionNsc: return "union-nsc";
        case FoolingFamily::ConcatNsc: return "concat-nsc";
        case FoolingFamily::StarNsc: return "star-nsc";
        case FoolingFamily::ReversalNsc: return "reversal-nsc";
    }
    return "?";
}

namespace {

std::string rep(char c, uint64_t k) { return std::string(k, c); }

/// x_S strings for the complement family: replay the subset-reachability
/// induction of the witness NFA (singletons by a^i, the empty set by a^n,
/// larger sets from their shifted predecessor by b a^(lowest)).
std::vector<std::string> complement_reach_strings(uint32_t n) {
    std::vector<std::string> x(uint64_t{1} << n);
    x[1] = "";  // {0} is the initial subset
    for (uint32_t i = 1; i < n; ++i) x[uint64_t{1} << i] = rep('a', i);
    x[0] = rep('a', n);
    std::vector<uint64_t> masks;
    for (uint64_t m = 0; m < (uint64_t{1} << n); ++m)
        if (__builtin_popcountll(m) >= 2) masks.push_back(m);
    std::sort(masks.begin(), masks.end(), [](uint64_t a, uint64_t b) {
        int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
        return pa != pb ? pa < pb : a < b;
    });
    for (uint64_t m : masks) {
        uint32_t lowest = static_cast<uint32_t>(__builtin_ctzll(m));
        uint64_t prev = (m ^ (uint64_t{1} << lowest)) >> (lowest + 1);
        x[m] = x[prev] + "b" + rep('a', lowest);
    }
    return x;
}

}  // namespace

FoolingCertificate fooling_set_family(FoolingFamily family, uint64_t m, uint64_t n) {
    FoolingCertificate cert;
    switch (family) {
        case FoolingFamily::ComplementNsc: {
            if (n < 2) throw_precondition("complement-nsc needs n >= 2");
            if (n > 12) throw_precondition("complement-nsc certificate has 2^n pairs; n > 12 refused");
            uint32_t nn = static_cast<uint32_t>(n);
            auto xs = complement_reach_strings(nn);
            for (uint64_t mask = 0; mask < (uint64_t{1} << nn); ++mask) {
                // y_S positions: y_i = a if state (n-i) in S (1-indexed), else c
                std::string y;
                for (uint32_t i = 0; i < nn; ++i)
                    y += (mask >> (nn - i - 1)) & 1 ? 'a' : 'c';
                cert.pairs.push_back({xs[mask], y});
            }
            break;
        }
        case FoolingFamily::IntersectionNsc:
            if (m < 1 || n < 1) throw_precondition("intersection-nsc needs m, n >= 1");
            for (uint64_t i = 0; i < m; ++i)
                for (uint64_t j = 0; j < n; ++j)
                    cert.pairs.push_back(
                        {rep('a', i) + rep('b', j), rep('a', m - 1 - i) + rep('b', n - 1 - j)});
            break;
        case FoolingFamily::UnionNsc:
            if (m < 2 || n < 2) throw_precondition("union-nsc needs m, n >= 2");
            cert.extended = true;
            for (uint64_t i = 1; i < m; ++i)
                cert.pairs.push_back({rep('a', i), rep('a', m - 1 - i) + "b"});
            cert.pairs.push_back({rep('a', m - 1) + "b", "a"});
            cert.a_count = static_cast<uint32_t>(m);
            for (uint64_t j = 1; j < n; ++j)
                cert.pairs.push_back({rep('c', j), rep('c', n - 1 - j) + "d"});
            cert.pairs.push_back({rep('c', n - 1) + "d", "c"});
            cert.u = "c";
            cert.v = "a";
            break;
        case FoolingFamily::ConcatNsc:
            if (m < 3 || n < 3) throw_precondition("concat-nsc needs m, n >= 3");
            for (uint64_t i = 0; i < m; ++i)
                cert.pairs.push_back({rep('a', i), rep('a', m - 1 - i) + "cb" + rep('a', n - 1)});
            for (uint64_t j = 0; j < n; ++j)
                cert.pairs.push_back({rep('a', m - 1) + "cb" + rep('a', j), rep('a', n - 1 - j)});
            break;
        case FoolingFamily::StarNsc:
            if (n < 1) throw_precondition("star-nsc needs n >= 1");
            for (uint64_t i = 0; i < n; ++i)
                cert.pairs.push_back({rep('a', i), rep('a', n - 1 - i) + "b"});
            break;
        case FoolingFamily::ReversalNsc:
            if (n < 2) throw_precondition("reversal-nsc needs n >= 2");
            cert.extended = true;
            for (uint64_t i = 0; i + 1 < n; ++i)
                cert.pairs.push_back({"b" + rep('a', i), rep('a', n - 1 - i)});
            cert.a_count = static_cast<uint32_t>(n - 1);
            cert.pairs.push_back({"b" + rep('a', n - 1), "b" + rep('a', n - 1)});
            cert.u = "b" + rep('a', n - 1);
            cert.v = "a";
            break;
    }
    return cert;
}

FoolingCertificate search_fooling(const Automaton& lang, const SearchOptions& opts,
                                  bool* truncated) {
    Membership memb(lang.to_nfa());
    const Alphabet& sigma = lang.alphabet();
    if (truncated) *truncated = false;

    // all strings up to max_len, shortest first
    std::vector<std::string> words{""};
    for (size_t head = 0; head < words.size(); ++head) {
        if (words[head].size() >= opts.max_len) break;
        for (char c : sigma.symbols) words.push_back(words[head] + c);
    }

    std::vector<StringPair> cand;
    bool capped = false;
    for (const auto& x : words) {
        for (const auto& y : words) {
            if (cand.size() >= opts.max_candidates) {
                capped = true;
                break;
            }
            if (memb.contains(x + y)) cand.push_back({x, y});
        }
        if (capped) break;
    }
    if (truncated) *truncated = capped;

    if (opts.seed != 0) {
        std::mt19937_64 rng(opts.seed);
        std::shuffle(cand.begin(), cand.end(), rng);
    }

    auto compatible = [&](const StringPair& p, const StringPair& q) {
        return !(memb.contains(p.x + q.y) && memb.contains(q.x + p.y));
    };

    // greedy from several starting points, keep the best clique
    std::vector<StringPair> best;
    size_t restarts = std::min<size_t>(cand.size(), 32);
    for (size_t start = 0; start < restarts; ++start) {
        std::vector<StringPair> cur{cand[start]};
        for (size_t i = 0; i < cand.size() && cur.size() < opts.max_pairs; ++i) {
            if (i == start) continue;
            bool ok = true;
            for (const auto& p : cur)
                if (!compatible(p, cand[i])) {
                    ok = false;
                    break;
                }
            if (ok) cur.push_back(cand[i]);
        }
        if (cur.size() > best.size()) best = std::move(cur);
    }

    FoolingCertificate plain;
    plain.pairs = best;
    if (!opts.extended) return plain;

    // Extended search: pairs with empty x can never sit next to the (eps,u)
    // or (eps,v) extension pair, so grow A and B directly from nonempty-x
    // pairs, per candidate (u, v).
    std::vector<const StringPair*> nonempty;
    for (const auto& p : cand)
        if (!p.x.empty()) nonempty.push_back(&p);
    std::vector<std::string> in_lang;
    for (const auto& w : words) {
        if (in_lang.size() >= 32) break;
        if (memb.contains(w)) in_lang.push_back(w);
    }
    FoolingCertificate best_ext;
    uint64_t best_ext_bound = 0;
    for (const auto& u : in_lang) {
        StringPair pu{"", u};
        for (const auto& v : in_lang) {
            StringPair pv{"", v};
            std::vector<StringPair> a, b;
            for (const StringPair* p : nonempty) {
                if (a.size() + b.size() + 1 >= opts.max_pairs) break;
                auto fits = [&](const std::vector<StringPair>& block, const StringPair& anchor) {
                    if (!compatible(*p, anchor)) return false;
                    for (const auto& q : block)
                        if (!compatible(*p, q)) return false;
                    return true;
                };
                auto fits_other = [&](const std::vector<StringPair>& other) {
                    for (const auto& q : other)
                        if (!compatible(*p, q)) return false;
                    return true;
                };
                if (fits(a, pu) && fits_other(b)) a.push_back(*p);
                else if (fits(b, pv) && fits_other(a)) b.push_back(*p);
            }
            if (a.empty() || b.empty()) continue;
            uint64_t bound = a.size() + b.size() + 1;
            if (bound > best_ext_bound) {
                best_ext_bound = bound;
                best_ext.extended = true;
                best_ext.pairs = a;
                best_ext.a_count = static_cast<uint32_t>(a.size());
                best_ext.pairs.insert(best_ext.pairs.end(), b.begin(), b.end());
                best_ext.u = u;
                best_ext.v = v;
            }
        }
    }
    if (best_ext_bound > plain.bound()) return best_ext;
    return plain;
}

FoolingCertificate parse_certificate(std::string_view text) {
    FoolingCertificate cert;
    std::optional<uint64_t> claimed;
    bool saw_flavor = false, saw_u = false, saw_v = false;
    int section = 0;  // 0 = none, 1 = A, 2 = B
    size_t lineno = 0, pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string line(text.substr(pos, eol - pos));
        bool at_end = eol >= text.size();
        pos = eol + 1;
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
        std::istringstream ss(line);
        std::string key;
        if (!(ss >> key)) {
            if (at_end) break;
            continue;
        }
        auto rest = [&](int want) {
            std::vector<std::string> args;
            std::string t;
            while (ss >> t) args.push_back(t);
            if (static_cast<int>(args.size()) != want)
                throw_parse("line " + std::to_string(lineno) + ": \"" + key + "\" takes " +
                            std::to_string(want) + " value(s)");
            return args;
        };
        if (key == "fooling:") {
            auto a = rest(1);
            if (a[0] == "plain") cert.extended = false;
            else if (a[0] == "extended") cert.extended = true;
            else throw_parse("line " + std::to_string(lineno) + ": fooling must be plain or extended");
            saw_flavor = true;
        } else if (!saw_flavor) {
            throw_parse("line " + std::to_string(lineno) + ": the file must start with \"fooling:\"");
        } else if (key == "claimed:") {
            auto a = rest(1);
            if (a[0].empty() || a[0].size() > 12 ||
                a[0].find_first_not_of("0123456789") != std::string::npos)
                throw_parse("line " + std::to_string(lineno) + ": claimed must be a number");
            claimed = std::stoull(a[0]);
        } else if (key == "A:") {
            rest(0);
            if (section != 0) throw_parse("line " + std::to_string(lineno) + ": A: must come first");
            section = 1;
        } else if (key == "B:") {
            rest(0);
            if (section != 1) throw_parse("line " + std::to_string(lineno) + ": B: must follow A:");
            cert.a_count = static_cast<uint32_t>(cert.pairs.size());
            section = 2;
        } else if (key == "pair:") {
            auto a = rest(2);
            if (cert.extended && section == 0)
                throw_parse("line " + std::to_string(lineno) +
                            ": extended certificate pairs must be inside A: or B:");
            cert.pairs.push_back({parse_word(a[0]), parse_word(a[1])});
        } else if (key == "u:") {
            cert.u = parse_word(rest(1)[0]);
            saw_u = true;
        } else if (key == "v:") {
            cert.v = parse_word(rest(1)[0]);
            saw_v = true;
        } else {
            throw_parse("line " + std::to_string(lineno) + ": unknown key \"" + key + "\"");
        }
        if (at_end) break;
    }
    if (!saw_flavor) throw_parse("missing \"fooling:\" header");
    if (cert.extended) {
        if (!saw_u || !saw_v) throw_parse("extended certificate needs u: and v:");
        if (section != 2) throw_parse("extended certificate needs A: and B: sections");
        if (cert.a_count == 0 || cert.a_count >= cert.pairs.size())
            throw_parse("extended certificate needs nonempty A and B");
    } else {
        if (saw_u || saw_v || section != 0)
            throw_parse("plain certificate cannot have A:/B:/u:/v:");
    }
    if (claimed && *claimed != cert.bound())
        throw_parse("claimed bound " + std::to_string(*claimed) +
                    " does not match the certificate (" + std::to_string(cert.bound()) + ")");
    return cert;
}

FoolingCertificate read_certificate(const std::string& path) {
    try {
        return parse_certificate(read_file(path));
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Parse) throw Error(ErrorKind::Parse, path + ": " + e.what());
        throw;
    }
}

std::string certificate_to_text(const FoolingCertificate& cert) {
    std::ostringstream out;
    out << "fooling: " << (cert.extended ? "extended" : "plain") << "\n";
    out << "claimed: " << cert.bound() << "\n";
    for (uint32_t i = 0; i < cert.pairs.size(); ++i) {
        if (cert.extended && i == 0) out << "A:\n";
        if (cert.extended && i == cert.a_count) out << "B:\n";
        out << "pair: " << word_to_token(cert.pairs[i].x) << ' ' << word_to_token(cert.pairs[i].y)
            << "\n";
    }
    if (cert.extended) {
        out << "u: " << word_to_token(cert.u) << "\n";
        out << "v: " << word_to_token(cert.v) << "\n";
    }
    return out.str();
}

}  // namespace pcfa
