/*
 * (C) Copyright 2026 The crystalkit Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "crystalkit/rootcore.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <shared_mutex>
#include <sstream>
#include <tuple>

namespace crystalkit {

Rank::Rank(int n) : n_(n), num_roots_(n * (n - 1) / 2) {
  if (n < 2 || n > 64)
    fail(ErrorCode::InvalidArgument, "rank n must satisfy 2 <= n <= 64, got " + std::to_string(n));
}

namespace {

// Returns the root sequence or throws; shared by validation and root_order.
std::vector<PositiveRoot> compute_roots(const Rank& rank, std::span<const Letter> letters) {
  const int n = rank.n();
  if (static_cast<int>(letters.size()) != rank.num_roots())
    fail(ErrorCode::BadLength, "word has length " + std::to_string(letters.size()) +
                                   ", expected " + std::to_string(rank.num_roots()));
  // wire_at[h] = label of the wire currently at height h.
  std::vector<int> wire_at(n + 1);
  std::iota(wire_at.begin(), wire_at.end(), 0);
  std::vector<PositiveRoot> roots;
  roots.reserve(letters.size());
  std::set<PositiveRoot> seen;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    const Letter a = letters[k];
    if (a < 1 || a > n - 1)
      fail(ErrorCode::BadLetter, "letter " + std::to_string(a) + " at position " +
                                     std::to_string(k + 1) + " is outside [1, " +
                                     std::to_string(n - 1) + "]");
    const int p = wire_at[a];
    const int q = wire_at[a + 1];
    PositiveRoot beta{std::min(p, q), std::max(p, q)};
    if (!seen.insert(beta).second)
      fail(ErrorCode::NotReduced, "root (" + std::to_string(beta.k) + "," +
                                      std::to_string(beta.l) + ") repeats at position " +
                                      std::to_string(k + 1));
    roots.push_back(beta);
    std::swap(wire_at[a], wire_at[a + 1]);
  }
  return roots;
}

bool move_applicable(std::span<const Letter> w, const BraidMove& m) {
  const int p = m.position - 1;
  if (p < 0) return false;
  if (m.kind == MoveKind::TwoMove) {
    if (p + 1 >= static_cast<int>(w.size())) return false;
    return std::abs(w[p] - w[p + 1]) >= 2;
  }
  if (p + 2 >= static_cast<int>(w.size())) return false;
  return w[p] == w[p + 2] && std::abs(w[p] - w[p + 1]) == 1;
}

std::vector<std::pair<BraidMove, std::vector<Letter>>> raw_neighbors(
    std::span<const Letter> w) {
  std::vector<std::pair<BraidMove, std::vector<Letter>>> out;
  for (int p = 1; p + 1 <= static_cast<int>(w.size()); ++p) {
    for (MoveKind kind : {MoveKind::TwoMove, MoveKind::ThreeMove}) {
      BraidMove m{p, kind};
      if (move_applicable(w, m)) out.emplace_back(m, apply_move_to_letters(w, m));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.second < y.second; });
  return out;
}

enum class Target { First, Last, Exact };

using MemoKey = std::tuple<std::vector<Letter>, Target, std::vector<Letter>>;

std::shared_mutex g_memo_mutex;
std::map<MemoKey, std::vector<BraidMove>> g_memo;

template <class Pred>
std::vector<BraidMove> bfs(const std::vector<Letter>& start, Pred&& done) {
  if (done(start)) return {};
  std::map<std::vector<Letter>, std::pair<std::vector<Letter>, BraidMove>> parent;
  std::deque<std::vector<Letter>> queue{start};
  parent.emplace(start, std::pair{start, BraidMove{}});
  while (!queue.empty()) {
    std::vector<Letter> cur = std::move(queue.front());
    queue.pop_front();
    for (auto& [move, next] : raw_neighbors(cur)) {
      if (parent.count(next)) continue;
      parent.emplace(next, std::pair{cur, move});
      if (done(next)) {
        std::vector<BraidMove> path;
        std::vector<Letter> w = next;
        while (w != start) {
          const auto& [prev, m] = parent.at(w);
          path.push_back(m);
          w = prev;
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(std::move(next));
    }
  }
  fail(ErrorCode::InvalidArgument, "braid graph search found no target word");
}

std::vector<BraidMove> memo_search(const ReducedWord& word, Target target, Letter a,
                                   const std::vector<Letter>& goal) {
  const std::vector<Letter> start(word.letters().begin(), word.letters().end());
  MemoKey key{start, target, target == Target::Exact ? goal : std::vector<Letter>{a}};
  {
    std::shared_lock lock(g_memo_mutex);
    if (auto it = g_memo.find(key); it != g_memo.end()) return it->second;
  }
  std::vector<BraidMove> path;
  switch (target) {
    case Target::First:
      path = bfs(start, [a](const std::vector<Letter>& w) { return w.front() == a; });
      break;
    case Target::Last:
      path = bfs(start, [a](const std::vector<Letter>& w) { return w.back() == a; });
      break;
    case Target::Exact:
      path = bfs(start, [&goal](const std::vector<Letter>& w) { return w == goal; });
      break;
  }
  std::unique_lock lock(g_memo_mutex);
  g_memo.emplace(std::move(key), path);
  return path;
}

void check_letter(const ReducedWord& word, Letter a) {
  if (a < 1 || a > word.n() - 1)
    fail(ErrorCode::BadLetter, "letter " + std::to_string(a) + " is outside [1, " +
                                   std::to_string(word.n() - 1) + "]");
}

}  // namespace

ReducedWord validate_reduced_word(int n, std::span<const Letter> letters) {
  Rank rank(n);
  auto roots = compute_roots(rank, letters);
  return ReducedWord(rank, std::vector<Letter>(letters.begin(), letters.end()),
                     std::move(roots));
}

ReducedWord validate_reduced_word(int n, std::initializer_list<Letter> letters) {
  return validate_reduced_word(n, std::span<const Letter>(letters.begin(), letters.size()));
}

ReducedWord parse_word(int n, std::string_view csv) {
  std::vector<Letter> letters;
  std::string token;
  std::istringstream in{std::string(csv)};
  while (std::getline(in, token, ',')) {
    try {
      std::size_t used = 0;
      letters.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      fail(ErrorCode::InvalidArgument, "cannot parse letter '" + token + "'");
    }
  }
  return validate_reduced_word(n, letters);
}

std::string format_word(const ReducedWord& word) {
  std::string out;
  for (Letter a : word.letters()) {
    if (!out.empty()) out += ',';
    out += std::to_string(a);
  }
  return out;
}

std::vector<PositiveRoot> root_order(const ReducedWord& word) {
  return {word.roots().begin(), word.roots().end()};
}

std::string format_move(const BraidMove& move) {
  return std::string(move.kind == MoveKind::TwoMove ? "two_move" : "three_move") + "@" +
         std::to_string(move.position);
}

std::vector<Letter> apply_move_to_letters(std::span<const Letter> letters,
                                          const BraidMove& move) {
  if (!move_applicable(letters, move))
    fail(ErrorCode::InapplicableMove, format_move(move) + " does not apply");
  std::vector<Letter> w(letters.begin(), letters.end());
  const int p = move.position - 1;
  if (move.kind == MoveKind::TwoMove) {
    std::swap(w[p], w[p + 1]);
  } else {
    const Letter x = w[p];
    const Letter y = w[p + 1];
    w[p] = y;
    w[p + 1] = x;
    w[p + 2] = y;
  }
  return w;
}

std::vector<std::pair<BraidMove, ReducedWord>> braid_neighbors(const ReducedWord& word) {
  std::vector<std::pair<BraidMove, ReducedWord>> out;
  for (auto& [move, letters] : raw_neighbors(word.letters()))
    out.emplace_back(move, validate_reduced_word(word.n(), letters));
  return out;
}

std::vector<BraidMove> path_to_first(const ReducedWord& word, Letter a) {
  check_letter(word, a);
  return memo_search(word, Target::First, a, {});
}

std::vector<BraidMove> path_to_last(const ReducedWord& word, Letter a) {
  check_letter(word, a);
  return memo_search(word, Target::Last, a, {});
}

std::vector<BraidMove> path_between(const ReducedWord& from, const ReducedWord& to) {
  if (from.n() != to.n())
    fail(ErrorCode::DimensionMismatch, "words of different rank");
  return memo_search(from, Target::Exact, 0,
                     std::vector<Letter>(to.letters().begin(), to.letters().end()));
}

ReducedWord apply_moves(const ReducedWord& word, std::span<const BraidMove> moves) {
  std::vector<Letter> w(word.letters().begin(), word.letters().end());
  for (const auto& m : moves) w = apply_move_to_letters(w, m);
  return validate_reduced_word(word.n(), w);
}

ReducedWord star_word(const ReducedWord& word) {
  std::vector<Letter> w;
  for (Letter a : word.letters()) w.push_back(word.n() - a);
  return validate_reduced_word(word.n(), w);
}

ReducedWord opposite_word(const ReducedWord& word) {
  std::vector<Letter> w;
  for (auto it = word.letters().rbegin(); it != word.letters().rend(); ++it)
    w.push_back(word.n() - *it);
  return validate_reduced_word(word.n(), w);
}

ReducedWord standard_word(int n) {
  std::vector<Letter> w;
  for (int k = 1; k < n; ++k)
    for (int a = k; a >= 1; --a) w.push_back(a);
  return validate_reduced_word(n, w);
}

std::vector<ReducedWord> all_reduced_words(int n) {
  const ReducedWord start = standard_word(n);
  std::set<std::vector<Letter>> seen;
  std::deque<std::vector<Letter>> queue;
  const std::vector<Letter> s(start.letters().begin(), start.letters().end());
  seen.insert(s);
  queue.push_back(s);
  while (!queue.empty()) {
    auto cur = std::move(queue.front());
    queue.pop_front();
    for (auto& [move, next] : raw_neighbors(cur))
      if (seen.insert(next).second) queue.push_back(std::move(next));
  }
  std::vector<ReducedWord> out;
  out.reserve(seen.size());
  for (const auto& w : seen) out.push_back(validate_reduced_word(n, w));
  return out;
}

int cartan_entry(Letter a, Letter b) {
  if (a == b) return 2;
  if (std::abs(a - b) == 1) return -1;
  return 0;
}

HighestWeight::HighestWeight(Vec coeffs) : coeffs_(std::move(coeffs)) {
  for (Int c : coeffs_)
    if (c < 0) fail(ErrorCode::InvalidArgument, "highest weight coefficients must be >= 0");
}

Int HighestWeight::sum() const {
  Int s = 0;
  for (Int c : coeffs_) s = checked_add(s, c);
  return s;
}

HighestWeight HighestWeight::star() const {
  return HighestWeight(Vec(coeffs_.rbegin(), coeffs_.rend()));
}

HighestWeight parse_lambda(int n, std::string_view csv) {
  Vec v;
  std::string token;
  std::istringstream in{std::string(csv)};
  while (std::getline(in, token, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoll(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      fail(ErrorCode::InvalidArgument, "cannot parse weight coefficient '" + token + "'");
    }
  }
  if (static_cast<int>(v.size()) != n - 1)
    fail(ErrorCode::DimensionMismatch, "lambda needs " + std::to_string(n - 1) +
                                           " coefficients, got " + std::to_string(v.size()));
  return HighestWeight(std::move(v));
}

Vec lambda_underline(const ReducedWord& word, const HighestWeight& lambda) {
  if (static_cast<int>(lambda.size()) != word.n() - 1)
    fail(ErrorCode::DimensionMismatch, "lambda has the wrong number of coefficients");
  Vec out;
  out.reserve(word.size());
  for (Letter a : word.letters()) out.push_back(lambda[a]);
  return out;
}

std::vector<HighestWeight> dominant_weights_up_to(int n, Int max_sum) {
  std::vector<HighestWeight> out;
  Vec cur(n - 1, 0);
  auto rec = [&](auto& self, int idx, Int remaining) -> void {
    if (idx == n - 1) {
      out.emplace_back(cur);
      return;
    }
    for (Int v = 0; v <= remaining; ++v) {
      cur[idx] = v;
      self(self, idx + 1, remaining - v);
    }
    cur[idx] = 0;
  };
  rec(rec, 0, max_sum);
  std::sort(out.begin(), out.end());
  return out;
}

Weight simple_root(int n, Letter a) {
  Weight w(n - 1, 0);
  for (Letter b = 1; b <= n - 1; ++b) w[b - 1] = cartan_entry(b, a);
  return w;
}

Weight root_weight(int n, const PositiveRoot& root) {
  Weight w(n - 1, 0);
  for (Letter a = root.k; a < root.l; ++a) {
    const Weight alpha = simple_root(n, a);
    for (int b = 0; b < n - 1; ++b) w[b] += alpha[b];
  }
  return w;
}

std::uint64_t weyl_dim(int n, const HighestWeight& lambda) {
  Rank rank(n);
  if (static_cast<int>(lambda.size()) != n - 1)
    fail(ErrorCode::DimensionMismatch, "lambda has the wrong number of coefficients");
  // Running reduced fraction num/den.
  unsigned __int128 num = 1;
  unsigned __int128 den = 1;
  auto gcd128 = [](unsigned __int128 x, unsigned __int128 y) {
    while (y != 0) {
      auto t = x % y;
      x = y;
      y = t;
    }
    return x;
  };
  for (int k = 1; k < n; ++k) {
    for (int l = k + 1; l <= n; ++l) {
      Int top = l - k;
      for (int a = k; a < l; ++a) top = checked_add(top, lambda[a]);
      unsigned __int128 t = static_cast<unsigned __int128>(top);
      unsigned __int128 b = static_cast<unsigned __int128>(l - k);
      auto g1 = gcd128(t, den);
      t /= g1;
      den /= g1;
      auto g2 = gcd128(num, b);
      num /= g2;
      b /= g2;
      if (t != 0 && num > (~static_cast<unsigned __int128>(0)) / t)
        fail(ErrorCode::Overflow, "Weyl dimension numerator");
      num *= t;
      den *= b;
      auto g = gcd128(num, den);
      num /= g;
      den /= g;
    }
  }
  if (den != 1 || num > std::numeric_limits<std::uint64_t>::max())
    fail(ErrorCode::Overflow, "Weyl dimension does not fit in 64 bits");
  return static_cast<std::uint64_t>(num);
}

}  // namespace crystalkit
