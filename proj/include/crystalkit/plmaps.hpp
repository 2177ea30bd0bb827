/*
 * (C) Copyright 2026 The crystalkit Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

// Piecewise-linear transition maps between Lusztig data, the crystal
// operators they induce (the reference oracle), string data, and the linear
// maps F, F^t, G(lambda) and opp.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "crystalkit/rootcore.hpp"

namespace crystalkit {

// A Lusztig or string datum tagged with its family and word.
struct ParamPoint {
  Family family = Family::L;
  ReducedWord word;
  Vec coords;
};

struct TransitionPath {
  ReducedWord from;
  ReducedWord to;
  std::vector<BraidMove> moves;
};

TransitionPath transition_path(const ReducedWord& from, const ReducedWord& to);

// Two-move: swap; three-move: (a, b, c) -> (b + c - m, m, a + b - m), m = min(a, c).
std::pair<ReducedWord, Vec> apply_braid_move(const ReducedWord& word, const BraidMove& move,
                                             std::span<const Int> x);

// Applies moves to letters and coordinates in place; no validation of the
// intermediate words beyond move applicability.
void transport(std::vector<Letter>& letters, Vec& x, std::span<const BraidMove> moves);
// Undoes `moves` (each move is an involution on words and data).
void transport_back(std::vector<Letter>& letters, Vec& x, std::span<const BraidMove> moves);

Vec phi_transition(const ReducedWord& from, const ReducedWord& to, std::span<const Int> x);

// epsilon_a (starred = false) or epsilon*_a on B(infinity), through Lusztig
// data of a word starting with a (ending with n - a).
Int oracle_epsilon(const ReducedWord& word, std::span<const Int> x, Letter a, bool starred);
// f_a / e_a (or f*_a / e*_a) on B(infinity); nullopt when raising is impossible.
std::optional<Vec> oracle_step(const ReducedWord& word, std::span<const Int> x, Letter a,
                               bool starred, StepDirection dir);

// str_i(b) for the element with Lusztig datum x in the same word.
Vec string_datum(const ReducedWord& word, std::span<const Int> x);
// Lusztig datum (in `word`) of the element with string datum s. Throws
// NotAStringDatum when s is not in the string cone.
Vec string_inverse(const ReducedWord& word, std::span<const Int> s);
Vec psi_transition(const ReducedWord& from, const ReducedWord& to, std::span<const Int> s);

// Kashiwara's involution on Lusztig data of one word.
Vec star_involution(const ReducedWord& word, std::span<const Int> x);

// (F(x))_k = x_k + sum_{l > k} c_{i_k, i_l} x_l.
Vec f_linear(const ReducedWord& word, std::span<const Int> x);
// (F^t(x))_k = x_k + sum_{l < k} c_{i_k, i_l} x_l.
Vec f_transpose(const ReducedWord& word, std::span<const Int> x);
// G(lambda)(x) = underline(lambda) - F(x).
Vec g_affine(const ReducedWord& word, const HighestWeight& lambda, std::span<const Int> x);
Vec opp(std::span<const Int> x);

}  // namespace crystalkit
