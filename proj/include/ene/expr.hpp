#pragma once

#include <string>

#include "ene/series.hpp"

namespace ene {

// Evaluates one expression in the CLI input language over the given ring,
// truncating every intermediate at the given order. Bad syntax raises
// ParseError (1-based column); ring contract violations raise the usual
// engine exceptions (NotQAlgebra, NotInvertibleError, ...).
Series eval_expr(const std::string& text, const Ring& r, int order);

// Smallest order that holds every explicit polynomial literal in the text:
// the maximum X exponent that appears, at least 1. Used by commands that
// accept a polynomial and want the order to follow the input.
int literal_order_bound(const std::string& text);

// Human-readable grammar reference, printed by the CLI help.
extern const char* const kGrammarText;

}  // namespace ene
