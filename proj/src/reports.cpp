#include "reports.hpp"

#include <sstream>

#include <json.hpp>

#include "lang_ops.hpp"

namespace pcfa {

OutputFormat format_from_name(std::string_view name) {
    if (name == "text") return OutputFormat::Text;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json-lines") return OutputFormat::JsonLines;
    throw_precondition("unknown format \"" + std::string(name) +
                       "\" (expected: text csv json-lines)");
}

namespace {

struct TheoremInfo {
    Theorem t;
    const char* name;
    bool two_params;
    const char* model;
};

constexpr TheoremInfo kTheorems[] = {
    {Theorem::ComplementIsc, "complement-isc", false, "isc"},
    {Theorem::ComplementNsc, "complement-nsc", false, "nsc"},
    {Theorem::IntersectionIsc, "intersection-isc", true, "isc"},
    {Theorem::IntersectionNsc, "intersection-nsc", true, "nsc"},
    {Theorem::UnionIsc, "union-isc", true, "isc"},
    {Theorem::UnionNsc, "union-nsc", true, "nsc"},
    {Theorem::ConcatIsc, "concat-isc", true, "isc"},
    {Theorem::ConcatNsc, "concat-nsc", true, "nsc"},
    {Theorem::StarIsc, "star-isc", false, "isc"},
    {Theorem::StarNsc, "star-nsc", false, "nsc"},
    {Theorem::ReversalIsc, "reversal-isc", false, "isc"},
    {Theorem::ReversalNsc, "reversal-nsc", false, "nsc"},
};

const TheoremInfo& info(Theorem t) {
    for (const auto& i : kTheorems)
        if (i.t == t) return i;
    throw_precondition("bad theorem id");
}

uint64_t pow2(uint64_t e) { return uint64_t{1} << e; }

}  // namespace

Theorem theorem_from_name(std::string_view name) {
    for (const auto& i : kTheorems)
        if (name == i.name) return i.t;
    std::string known;
    for (const auto& i : kTheorems) known += std::string(" ") + i.name;
    throw_precondition("unknown theorem \"" + std::string(name) + "\" (expected one of:" + known +
                       ")");
}

std::string_view theorem_name(Theorem t) { return info(t).name; }
bool theorem_takes_two_params(Theorem t) { return info(t).two_params; }
std::string_view theorem_model(Theorem t) { return info(t).model; }

std::vector<Theorem> all_theorems() {
    std::vector<Theorem> out;
    for (const auto& i : kTheorems) out.push_back(i.t);
    return out;
}

uint64_t theorem_upper_bound(Theorem t, uint64_t m, uint64_t n) {
    switch (t) {
        case Theorem::ComplementIsc: return n + 1;
        case Theorem::ComplementNsc: return pow2(n);
        case Theorem::IntersectionIsc:
        case Theorem::IntersectionNsc: return m * n;
        case Theorem::UnionIsc: return m * n + m + n;
        case Theorem::UnionNsc: return m + n + 1;
        case Theorem::ConcatIsc: return m * pow2(n - 1) + pow2(n) - 1;
        case Theorem::ConcatNsc: return m + n;
        case Theorem::StarIsc: return pow2(n - 1);
        case Theorem::StarNsc: return n;
        case Theorem::ReversalIsc: return pow2(n) - 1;
        case Theorem::ReversalNsc: return n + 1;
    }
    return 0;
}

std::string BoundReport::summary_line() const {
    std::ostringstream out;
    out << "RESULT theorem=" << theorem << " m=" << (two_params ? std::to_string(m) : "-")
        << " n=" << n << " model=" << model;
    if (!certificate.empty()) out << " certificate=" << certificate;
    out << " upper=" << upper << " achieved=" << achieved << " status=" << status;
    return out.str();
}

std::string BoundReport::render(OutputFormat f) const {
    switch (f) {
        case OutputFormat::Text: {
            std::ostringstream out;
            out << "theorem:  " << theorem << "\n";
            if (two_params) out << "params:   m=" << m << " n=" << n << "\n";
            else out << "params:   n=" << n << "\n";
            out << "model:    " << model << "\n";
            if (!certificate.empty())
                out << "certificate: " << certificate
                    << (certificate == "extended" ? " (bounds single-initial NFAs)"
                                                  : " (bounds every NFA)")
                    << "\n";
            out << "upper:    " << upper << "\n";
            out << "achieved: " << achieved << "\n";
            out << "status:   " << status << "\n";
            if (!detail.empty()) out << "detail:   " << detail << "\n";
            out << summary_line() << "\n";
            return out.str();
        }
        case OutputFormat::Csv: {
            std::ostringstream out;
            out << "theorem,m,n,model,upper,achieved,status\n";
            out << theorem << ',' << (two_params ? std::to_string(m) : "") << ',' << n << ','
                << model << ',' << upper << ',' << achieved << ',' << status << "\n";
            return out.str();
        }
        case OutputFormat::JsonLines: {
            nlohmann::json j{{"theorem", theorem}, {"n", n},         {"model", model},
                             {"upper", upper},     {"achieved", achieved}, {"status", status}};
            if (two_params) j["m"] = m;
            if (!certificate.empty()) j["certificate"] = certificate;
            if (!detail.empty()) j["detail"] = detail;
            return j.dump() + "\n";
        }
    }
    return "";
}

namespace {

BoundReport base_report(Theorem t, uint64_t m, uint64_t n) {
    BoundReport r;
    r.theorem = theorem_name(t);
    r.two_params = theorem_takes_two_params(t);
    if (!r.two_params && m != 0)
        throw_precondition("theorem " + r.theorem + " takes a single parameter n");
    r.m = r.two_params ? m : 0;
    r.n = n;
    r.model = theorem_model(t);
    r.upper = theorem_upper_bound(t, m, n);
    return r;
}

void finish_isc(BoundReport& r, uint64_t measured) {
    r.achieved = measured;
    r.status = measured == r.upper ? "tight" : "gap";
    if (r.status == "gap")
        r.detail = "construction reached " + std::to_string(measured) + " of " +
                   std::to_string(r.upper);
}

/// nsc claims are tight when the certificate bound equals the upper bound and
/// a construction with exactly that many states exists.
void finish_nsc(BoundReport& r, const FoolingVerdict& v, uint64_t construction_states,
                const std::string& construction_what) {
    if (!v.ok) {
        r.status = "fail";
        r.achieved = 0;
        r.detail = "certificate rejected: " + v.violation->to_text();
        return;
    }
    r.achieved = v.bound;
    if (construction_states != r.upper) {
        r.status = "fail";
        r.detail = construction_what + " has " + std::to_string(construction_states) +
                   " states, expected " + std::to_string(r.upper);
        return;
    }
    r.status = v.bound == r.upper ? "tight" : "gap";
    if (r.status == "gap")
        r.detail = "certified only " + std::to_string(v.bound) + " of " + std::to_string(r.upper);
}

}  // namespace

BoundReport run_bound(Theorem t, uint64_t m, uint64_t n, const ReconstructOptions& opts) {
    BoundReport r = base_report(t, m, n);
    try {
        switch (t) {
            case Theorem::ComplementIsc: {
                Witness w = make_witness({WitnessFamily::ComplementUnary, 0, n}, opts);
                finish_isc(r, isc(Automaton(complement_idfa(w.K.to_idfa()))));
                break;
            }
            case Theorem::ComplementNsc: {
                r.certificate = "plain";
                Witness w = make_witness({WitnessFamily::ComplementNsc, 0, n}, opts);
                Cdfa comp = complement_nfa(w.K.to_nfa());
                FoolingVerdict v = check_fooling(
                    Automaton(comp), fooling_set_family(FoolingFamily::ComplementNsc, 0, n));
                finish_nsc(r, v, comp.num_states, "subset-complement DFA");
                break;
            }
            case Theorem::IntersectionIsc: {
                Witness w = make_witness({WitnessFamily::Intersection, m, n}, opts);
                finish_isc(r, isc(intersect_idfa(w.K.to_idfa(), w.L->to_idfa())));
                break;
            }
            case Theorem::IntersectionNsc: {
                r.certificate = "plain";
                Witness w = make_witness({WitnessFamily::Intersection, m, n}, opts);
                Idfa p = intersect_idfa(w.K.to_idfa(), w.L->to_idfa());
                FoolingVerdict v = check_fooling(
                    Automaton(p), fooling_set_family(FoolingFamily::IntersectionNsc, m, n));
                finish_nsc(r, v, p.num_states, "product automaton");
                break;
            }
            case Theorem::UnionIsc: {
                Witness w = make_witness({WitnessFamily::Intersection, m, n}, opts);
                finish_isc(r, isc(union_idfa(w.K.to_idfa(), w.L->to_idfa())));
                break;
            }
            case Theorem::UnionNsc: {
                r.certificate = "extended";
                Witness w = make_witness({WitnessFamily::UnionNsc, m, n}, opts);
                Nfa u = union_nfa(w.K.to_nfa(), w.L->to_nfa());
                FoolingVerdict v = check_fooling_extended(
                    Automaton(u), fooling_set_family(FoolingFamily::UnionNsc, m, n));
                finish_nsc(r, v, u.num_states, "union NFA");
                break;
            }
            case Theorem::ConcatIsc: {
                Witness w = make_witness({WitnessFamily::ConcatIsc, m, n}, opts);
                finish_isc(r, isc(concat_nfa(w.K.to_nfa(), w.L->to_nfa())));
                break;
            }
            case Theorem::ConcatNsc: {
                r.certificate = "plain";
                Witness w = make_witness({WitnessFamily::ConcatNsc, m, n}, opts);
                Nfa c = concat_nfa(w.K.to_nfa(), w.L->to_nfa());
                Nfa merged = merge_initial_states(c);
                if (!equivalent(merged, c)) {
                    r.status = "fail";
                    r.detail = "initial-state merge changed the language";
                    break;
                }
                FoolingVerdict v = check_fooling(
                    Automaton(c), fooling_set_family(FoolingFamily::ConcatNsc, m, n));
                finish_nsc(r, v, merged.num_states, "merged concatenation NFA");
                break;
            }
            case Theorem::StarIsc: {
                Witness w = make_witness({WitnessFamily::StarIsc, 0, n}, opts);
                finish_isc(r, isc(star_nfa(w.K.to_nfa())));
                break;
            }
            case Theorem::StarNsc: {
                r.certificate = "plain";
                Witness w = make_witness({WitnessFamily::StarReversalNsc, 0, n}, opts);
                Nfa st = star_nfa(w.K.to_nfa());
                FoolingVerdict v = check_fooling(
                    Automaton(st), fooling_set_family(FoolingFamily::StarNsc, 0, n));
                finish_nsc(r, v, st.num_states, "star NFA");
                break;
            }
            case Theorem::ReversalIsc: {
                Witness w = make_witness({WitnessFamily::ReversalIsc, 0, n}, opts);
                finish_isc(r, isc(reverse_nfa(w.K.to_nfa())));
                break;
            }
            case Theorem::ReversalNsc: {
                r.certificate = "extended";
                Witness w = make_witness({WitnessFamily::StarReversalNsc, 0, n}, opts);
                Nfa rev = reverse_nfa(w.K.to_nfa());
                Nfa single = make_single_initial(rev);
                FoolingVerdict v = check_fooling_extended(
                    Automaton(rev), fooling_set_family(FoolingFamily::ReversalNsc, 0, n));
                finish_nsc(r, v, single.num_states, "single-initial reversal NFA");
                break;
            }
        }
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::Verification) throw;
        r.status = "fail";
        r.achieved = 0;
        r.detail = e.what();
    }
    return r;
}

std::string render_census(const CensusTable& t, OutputFormat f) {
    switch (f) {
        case OutputFormat::Csv: return t.to_csv();
        case OutputFormat::Text: {
            std::ostringstream out;
            out << "census: n=" << t.n << " k=" << t.k
                << (t.alphabet_permutation ? "" : " (no alphabet permutation)") << "\n";
            out << "sc(L*)  count\n";
            for (const auto& [value, count] : t.frequencies)
                out << "  " << value << "     " << count << "\n";
            out << "total:   " << t.total << "\n";
            out << "average: " << t.average_exact() << " = " << t.average_3dp() << " ("
                << CensusTable::kRoundingMode << "d to 3 decimals)\n";
            out << "RESULT census n=" << t.n << " k=" << t.k << " total=" << t.total
                << " average=" << t.average_3dp() << "\n";
            return out.str();
        }
        case OutputFormat::JsonLines: {
            std::ostringstream out;
            for (const auto& [value, count] : t.frequencies) {
                out << nlohmann::json{{"sc_star", value}, {"count", count}}.dump() << "\n";
            }
            out << nlohmann::json{{"n", t.n},
                                  {"k", t.k},
                                  {"total", t.total},
                                  {"average_exact", t.average_exact()},
                                  {"average_3dp", t.average_3dp()},
                                  {"rounding", CensusTable::kRoundingMode}}
                       .dump()
                << "\n";
            return out.str();
        }
    }
    return "";
}

}  // namespace pcfa
