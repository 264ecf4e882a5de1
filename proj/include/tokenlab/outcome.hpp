#pragma once

#include <string>

#include "tokenlab/gf2.hpp"

namespace tokenlab {

enum class AbortCause {
    None,
    BadShape,     // malformed lengths or shapes
    State,        // message outside the expected phase
    CheckFailed,  // a consistency or commitment check failed
    SwitchedOff,  // token refused service while switched off
    NotUnique,    // shares do not determine a unique secret
    BudgetExceeded,
};

std::string to_string(AbortCause cause);
AbortCause abort_cause_from_string(const std::string& name);

// Terminal result of a protocol session: either a value or an abort
// with a classified cause.
struct Outcome {
    bool ok = false;
    gf2::BitVector value;
    AbortCause cause = AbortCause::None;

    static Outcome output(gf2::BitVector v) { return {true, std::move(v), AbortCause::None}; }
    static Outcome abort(AbortCause c) { return {false, gf2::BitVector(), c}; }
};

}  // namespace tokenlab
