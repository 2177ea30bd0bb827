/*
 * (C) Copyright 2026 The crystalkit Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "crystalkit/plmaps.hpp"

#include <algorithm>

namespace crystalkit {

namespace {

void check_dims(const ReducedWord& word, std::span<const Int> x) {
  if (x.size() != word.size())
    fail(ErrorCode::DimensionMismatch, "datum has " + std::to_string(x.size()) +
                                           " coordinates, word has length " +
                                           std::to_string(word.size()));
}

void move_coords(Vec& x, const BraidMove& move) {
  const int p = move.position - 1;
  if (move.kind == MoveKind::TwoMove) {
    std::swap(x[p], x[p + 1]);
    return;
  }
  const Int a = x[p];
  const Int b = x[p + 1];
  const Int c = x[p + 2];
  const Int m = std::min(a, c);
  x[p] = checked_sub(checked_add(b, c), m);
  x[p + 1] = m;
  x[p + 2] = checked_sub(checked_add(a, b), m);
}

struct Pivot {
  std::vector<BraidMove> moves;
  std::size_t index;
};

Pivot pivot_for(const ReducedWord& word, Letter a, bool starred) {
  if (!starred) return {path_to_first(word, a), 0};
  return {path_to_last(word, word.n() - a), word.size() - 1};
}

}  // namespace

TransitionPath transition_path(const ReducedWord& from, const ReducedWord& to) {
  return {from, to, path_between(from, to)};
}

std::pair<ReducedWord, Vec> apply_braid_move(const ReducedWord& word, const BraidMove& move,
                                             std::span<const Int> x) {
  check_dims(word, x);
  auto letters = apply_move_to_letters(word.letters(), move);
  Vec y(x.begin(), x.end());
  move_coords(y, move);
  return {validate_reduced_word(word.n(), letters), std::move(y)};
}

void transport(std::vector<Letter>& letters, Vec& x, std::span<const BraidMove> moves) {
  for (const BraidMove& m : moves) {
    letters = apply_move_to_letters(letters, m);
    move_coords(x, m);
  }
}

void transport_back(std::vector<Letter>& letters, Vec& x, std::span<const BraidMove> moves) {
  for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
    letters = apply_move_to_letters(letters, *it);
    move_coords(x, *it);
  }
}

Vec phi_transition(const ReducedWord& from, const ReducedWord& to, std::span<const Int> x) {
  check_dims(from, x);
  if (from.n() != to.n()) fail(ErrorCode::DimensionMismatch, "words of different rank");
  std::vector<Letter> letters(from.letters().begin(), from.letters().end());
  Vec y(x.begin(), x.end());
  transport(letters, y, path_between(from, to));
  return y;
}

Int oracle_epsilon(const ReducedWord& word, std::span<const Int> x, Letter a, bool starred) {
  check_dims(word, x);
  const Pivot pv = pivot_for(word, a, starred);
  std::vector<Letter> letters(word.letters().begin(), word.letters().end());
  Vec y(x.begin(), x.end());
  transport(letters, y, pv.moves);
  return y[pv.index];
}

std::optional<Vec> oracle_step(const ReducedWord& word, std::span<const Int> x, Letter a,
                               bool starred, StepDirection dir) {
  check_dims(word, x);
  const Pivot pv = pivot_for(word, a, starred);
  std::vector<Letter> letters(word.letters().begin(), word.letters().end());
  Vec y(x.begin(), x.end());
  transport(letters, y, pv.moves);
  if (dir == StepDirection::Lower) {
    y[pv.index] = checked_add(y[pv.index], 1);
  } else {
    if (y[pv.index] == 0) return std::nullopt;
    y[pv.index] -= 1;
  }
  transport_back(letters, y, pv.moves);
  return y;
}

Vec string_datum(const ReducedWord& word, std::span<const Int> x) {
  check_dims(word, x);
  Vec b(x.begin(), x.end());
  Vec out;
  out.reserve(word.size());
  for (Letter a : word.letters()) {
    const Int e = oracle_epsilon(word, b, a, true);
    out.push_back(e);
    for (Int t = 0; t < e; ++t) b = *oracle_step(word, b, a, true, StepDirection::Raise);
  }
  if (std::any_of(b.begin(), b.end(), [](Int v) { return v != 0; }))
    fail(ErrorCode::PeelingIncomplete,
         "peeling " + format_vec(x) + " left " + format_vec(b));
  return out;
}

Vec string_inverse(const ReducedWord& word, std::span<const Int> s) {
  check_dims(word, s);
  for (Int v : s)
    if (v < 0) fail(ErrorCode::NotAStringDatum, format_vec(s) + " has a negative entry");
  Vec b(word.size(), 0);
  for (std::size_t k = word.size(); k-- > 0;)
    for (Int t = 0; t < s[k]; ++t)
      b = *oracle_step(word, b, word.letters()[k], true, StepDirection::Lower);
  const Vec back = string_datum(word, b);
  if (!std::equal(back.begin(), back.end(), s.begin(), s.end()))
    fail(ErrorCode::NotAStringDatum,
         format_vec(s) + " is not a string datum for " + format_word(word));
  return b;
}

Vec psi_transition(const ReducedWord& from, const ReducedWord& to, std::span<const Int> s) {
  return string_datum(to, phi_transition(from, to, string_inverse(from, s)));
}

Vec star_involution(const ReducedWord& word, std::span<const Int> x) {
  check_dims(word, x);
  // Write b = f_{a_1} ... f_{a_m} 1 by raising greedily, then rebuild with
  // the twisted operators: b* = f*_{a_1} ... f*_{a_m} 1.
  std::vector<Letter> path;
  Vec b(x.begin(), x.end());
  while (std::any_of(b.begin(), b.end(), [](Int v) { return v != 0; })) {
    bool raised = false;
    for (Letter a = 1; a < word.n() && !raised; ++a) {
      if (auto up = oracle_step(word, b, a, false, StepDirection::Raise)) {
        path.push_back(a);
        b = std::move(*up);
        raised = true;
      }
    }
    if (!raised) fail(ErrorCode::InvalidArgument, format_vec(x) + " cannot be raised");
  }
  Vec y(word.size(), 0);
  for (auto it = path.rbegin(); it != path.rend(); ++it)
    y = *oracle_step(word, y, *it, true, StepDirection::Lower);
  return y;
}

Vec f_linear(const ReducedWord& word, std::span<const Int> x) {
  check_dims(word, x);
  const std::size_t N = word.size();
  Vec out(N);
  for (std::size_t k = 0; k < N; ++k) {
    Int acc = x[k];
    for (std::size_t l = k + 1; l < N; ++l)
      acc = checked_add(acc, checked_mul(cartan_entry(word.letters()[k], word.letters()[l]), x[l]));
    out[k] = acc;
  }
  return out;
}

Vec f_transpose(const ReducedWord& word, std::span<const Int> x) {
  check_dims(word, x);
  const std::size_t N = word.size();
  Vec out(N);
  for (std::size_t k = 0; k < N; ++k) {
    Int acc = x[k];
    for (std::size_t l = 0; l < k; ++l)
      acc = checked_add(acc, checked_mul(cartan_entry(word.letters()[k], word.letters()[l]), x[l]));
    out[k] = acc;
  }
  return out;
}

Vec g_affine(const ReducedWord& word, const HighestWeight& lambda, std::span<const Int> x) {
  const Vec lam = lambda_underline(word, lambda);
  const Vec fx = f_linear(word, x);
  Vec out(word.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = checked_sub(lam[k], fx[k]);
  return out;
}

Vec opp(std::span<const Int> x) { return Vec(x.rbegin(), x.rend()); }

}  // namespace crystalkit
