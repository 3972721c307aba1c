#pragma once

#include "automata.hpp"

namespace pcfa {

/// Complete the automaton and flip final/non-final; at most one state added.
Cdfa complement_idfa(const Idfa& d);

/// Subset construction, complete, flip finals; at most 2^n states.
Cdfa complement_nfa(const Nfa& a);

/// Reachable partial product: a pair transition is defined iff both
/// components are; finals are pairs of finals. Same symbol set required.
Idfa intersect_idfa(const Idfa& a, const Idfa& b);

/// Complete both sides (adding dead states), build the full product and drop
/// the (dead, dead) state; at most mn+m+n states, finals are pairs with at
/// least one final component.
Idfa union_idfa(const Idfa& a, const Idfa& b);

/// Disjoint union plus one fresh initial state that copies the out-transitions
/// of both old initial states; exactly m+n+1 states. Both inputs must be
/// single-initial.
Nfa union_nfa(const Nfa& a, const Nfa& b);

/// NFA for KL from an all-final A and a single-initial B: keep both machines,
/// add a jump to B's initial state alongside every defined A-transition, make
/// both s_A and s_B initial, finals are B's states. Result has two initial
/// states.
Nfa concat_nfa(const Nfa& a, const Nfa& b);

/// NFA for L* from an all-final single-initial A: add a transition back to the
/// initial state alongside every transition that hits a final state. Same
/// state count; no new initial state is needed since the language contains
/// the empty string.
Nfa star_nfa(const Nfa& a);

/// Swap initial and final states and reverse every transition; the result may
/// have multiple initial states.
Nfa reverse_nfa(const Nfa& a);

/// Folds every initial state into the lowest-numbered one (union of
/// out-transitions; final iff any initial was final). Not language-preserving
/// in general; callers must know the merge is safe for their automaton or
/// verify with equivalent().
Nfa merge_initial_states(const Nfa& a);

/// Adds one fresh initial state duplicating the out-transitions of all old
/// initial states; always language-preserving, n+1 states.
Nfa make_single_initial(const Nfa& a);

enum class LangOp { Complement, Intersect, Union, UnionNfa, Concat, Star, Reverse };

LangOp lang_op_from_name(std::string_view name);
std::string_view lang_op_name(LangOp op);
bool lang_op_is_binary(LangOp op);

struct OpResult {
    Automaton automaton;
    uint64_t construction_states = 0;
    uint64_t upper_bound = 0;  // construction-level bound evaluated from m, n
};

/// Dispatches by input kind: Complement picks the deterministic or the subset
/// construction; Intersect/Union require deterministic inputs.
OpResult apply_op(LangOp op, const Automaton& a, const Automaton* b);

}  // namespace pcfa
