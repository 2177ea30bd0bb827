/*
 * (C) Copyright 2026 The crystalkit Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "crystalkit/crystals.hpp"

#include <algorithm>
#include <deque>

namespace crystalkit {

CrystalDescription crystal_description(Family family) {
  switch (family) {
    case Family::L: return {CrossingKind::Reineke, Form::R, Form::S, false};
    case Family::Lstar: return {CrossingKind::DualReineke, Form::R, Form::S, false};
    // Gamma_a with the opposite order; s steps, r measures.
    case Family::Sstar: return {CrossingKind::Reineke, Form::S, Form::R, true};
    case Family::S: return {CrossingKind::Kashiwara, Form::R, Form::S, false};
  }
  fail(ErrorCode::InvalidArgument, "bad family");
}

CrystalDescription complement_description(Family family) {
  switch (family) {
    case Family::L: return {CrossingKind::DualReineke, Form::R, Form::S, false};
    case Family::Lstar: return {CrossingKind::Reineke, Form::R, Form::S, false};
    case Family::S: return {CrossingKind::Reineke, Form::S, Form::R, false};
    case Family::Sstar: return {CrossingKind::Kashiwara, Form::R, Form::S, false};
  }
  fail(ErrorCode::InvalidArgument, "bad family");
}

namespace {

void check_dims(const ReducedWord& word, std::span<const Int> x) {
  if (x.size() != word.size())
    fail(ErrorCode::DimensionMismatch, "datum has " + std::to_string(x.size()) +
                                           " coordinates, word has length " +
                                           std::to_string(word.size()));
}

void check_letter(const ReducedWord& word, Letter a) {
  if (a < 1 || a > word.n() - 1)
    fail(ErrorCode::BadLetter, "letter " + std::to_string(a) + " out of range");
}

Vec to_lusztig(Family family, const ReducedWord& word, std::span<const Int> x) {
  if (is_lusztig(family)) return Vec(x.begin(), x.end());
  return string_inverse(word, x);
}

Vec from_lusztig(Family family, const ReducedWord& word, Vec b) {
  if (is_lusztig(family)) return b;
  return string_datum(word, b);
}

}  // namespace

Int epsilon_closed(Family family, const ReducedWord& word, std::span<const Int> x, Letter a) {
  check_dims(word, x);
  check_letter(word, a);
  const auto d = crystal_description(family);
  return crossing_lattice(word, a, d.lattice)->max_value(x, d.sigma);
}

Int epsilon_complement(Family family, const ReducedWord& word, std::span<const Int> x,
                       Letter a) {
  check_dims(word, x);
  check_letter(word, a);
  const auto d = complement_description(family);
  return crossing_lattice(word, a, d.lattice)->max_value(x, d.sigma);
}

Weight weight_of(Family family, const ReducedWord& word, std::span<const Int> x,
                 const std::optional<HighestWeight>& lambda) {
  check_dims(word, x);
  const int n = word.n();
  Weight wt(n - 1, 0);
  if (lambda) {
    if (static_cast<int>(lambda->size()) != n - 1)
      fail(ErrorCode::DimensionMismatch, "lambda has the wrong number of coefficients");
    wt.assign(lambda->coeffs().begin(), lambda->coeffs().end());
  }
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (x[k] == 0) continue;
    const Weight root = is_lusztig(family) ? root_weight(n, word.roots()[k])
                                           : simple_root(n, word.letters()[k]);
    for (int b = 0; b < n - 1; ++b) wt[b] = checked_sub(wt[b], checked_mul(x[k], root[b]));
  }
  return wt;
}

Int phi_value(Family family, const ReducedWord& word, const HighestWeight& lambda,
              std::span<const Int> x, Letter a) {
  return checked_add(epsilon_closed(family, word, x, a),
                     weight_of(family, word, x, lambda)[a - 1]);
}

std::optional<Vec> step_closed(Family family, const ReducedWord& word,
                               const std::optional<HighestWeight>& lambda,
                               std::span<const Int> x, Letter a, StepDirection dir) {
  check_dims(word, x);
  check_letter(word, a);
  const auto d = crystal_description(family);
  const auto lattice = crossing_lattice(word, a, d.lattice);
  Vec y(x.begin(), x.end());
  if (dir == StepDirection::Lower) {
    if (lambda && phi_value(family, word, *lambda, x, a) <= 0) return std::nullopt;
    const auto idx = lattice->extremal_maximizer(x, d.sigma, Extremum::Greatest,
                                                 d.reversed_order);
    const Vec& step = lattice->form(idx, d.rho);
    for (std::size_t k = 0; k < y.size(); ++k) y[k] = checked_add(y[k], step[k]);
    return y;
  }
  if (lattice->max_value(x, d.sigma) <= 0) return std::nullopt;
  const auto idx = lattice->extremal_maximizer(x, d.sigma, Extremum::Least, d.reversed_order);
  const Vec& step = lattice->form(idx, d.rho);
  for (std::size_t k = 0; k < y.size(); ++k) y[k] = checked_sub(y[k], step[k]);
  return y;
}

Int reference_epsilon(Family family, const ReducedWord& word, std::span<const Int> x,
                      Letter a) {
  check_letter(word, a);
  return oracle_epsilon(word, to_lusztig(family, word, x), a, is_starred(family));
}

Int reference_epsilon_complement(Family family, const ReducedWord& word,
                                 std::span<const Int> x, Letter a) {
  check_letter(word, a);
  return oracle_epsilon(word, to_lusztig(family, word, x), a, !is_starred(family));
}

std::optional<Vec> reference_step(Family family, const ReducedWord& word,
                                  const std::optional<HighestWeight>& lambda,
                                  std::span<const Int> x, Letter a, StepDirection dir) {
  check_letter(word, a);
  const Vec b = to_lusztig(family, word, x);
  if (dir == StepDirection::Lower && lambda) {
    const Int phi = checked_add(oracle_epsilon(word, b, a, is_starred(family)),
                                weight_of(family, word, x, lambda)[a - 1]);
    if (phi <= 0) return std::nullopt;
  }
  auto next = oracle_step(word, b, a, is_starred(family), dir);
  if (!next) return std::nullopt;
  return from_lusztig(family, word, std::move(*next));
}

CrystalGraph::CrystalGraph(Family family, ReducedWord word, HighestWeight lambda,
                           std::vector<CrystalNode> nodes, std::vector<CrystalEdge> edges)
    : family_(family),
      word_(std::move(word)),
      lambda_(std::move(lambda)),
      nodes_(std::move(nodes)),
      edges_(std::move(edges)) {
  const int letters = word_.n() - 1;
  f_.assign(nodes_.size(), std::vector<std::optional<std::size_t>>(letters));
  e_.assign(nodes_.size(), std::vector<std::optional<std::size_t>>(letters));
  for (std::size_t i = 0; i < nodes_.size(); ++i) index_.emplace(nodes_[i].x, i);
  for (const auto& edge : edges_) {
    f_.at(edge.from).at(edge.a - 1) = edge.to;
    e_.at(edge.to).at(edge.a - 1) = edge.from;
  }
}

std::optional<std::size_t> CrystalGraph::find(std::span<const Int> x) const {
  auto it = index_.find(Vec(x.begin(), x.end()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> CrystalGraph::f(std::size_t node, Letter a) const {
  return f_.at(node).at(a - 1);
}

std::optional<std::size_t> CrystalGraph::e(std::size_t node, Letter a) const {
  return e_.at(node).at(a - 1);
}

std::size_t CrystalGraph::highest() const {
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < size(); ++i)
    if (std::none_of(e_[i].begin(), e_[i].end(), [](const auto& v) { return v.has_value(); }))
      roots.push_back(i);
  if (roots.size() != 1)
    fail(ErrorCode::NoUniqueRoot, std::to_string(roots.size()) + " highest nodes");
  return roots.front();
}

std::size_t CrystalGraph::lowest() const {
  std::vector<std::size_t> sinks;
  for (std::size_t i = 0; i < size(); ++i)
    if (std::none_of(f_[i].begin(), f_[i].end(), [](const auto& v) { return v.has_value(); }))
      sinks.push_back(i);
  if (sinks.size() != 1)
    fail(ErrorCode::NoUniqueRoot, std::to_string(sinks.size()) + " lowest nodes");
  return sinks.front();
}

std::vector<Vec> CrystalGraph::points() const {
  std::vector<Vec> out;
  out.reserve(nodes_.size());
  for (const auto& node : nodes_) out.push_back(node.x);
  return out;
}

CrystalGraph enumerate_crystal(Family family, const ReducedWord& word,
                               const HighestWeight& lambda) {
  const int n = word.n();
  if (static_cast<int>(lambda.size()) != n - 1)
    fail(ErrorCode::DimensionMismatch, "lambda has the wrong number of coefficients");
  const std::optional<HighestWeight> lam = lambda;
  std::map<Vec, std::size_t> seen;
  std::vector<Vec> order;
  std::vector<std::tuple<std::size_t, Letter, Vec>> raw_edges;
  std::deque<std::size_t> queue;
  const Vec origin(word.size(), 0);
  seen.emplace(origin, 0);
  order.push_back(origin);
  queue.push_back(0);
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (Letter a = 1; a < n; ++a) {
      auto next = step_closed(family, word, lam, order[cur], a, StepDirection::Lower);
      if (!next) continue;
      raw_edges.emplace_back(cur, a, *next);
      if (seen.emplace(*next, order.size()).second) {
        queue.push_back(order.size());
        order.push_back(std::move(*next));
      }
    }
  }
  // Canonical node order: lexicographic by coordinates.
  std::vector<CrystalNode> nodes;
  std::map<Vec, std::size_t> final_index;
  for (const auto& [x, unused] : seen) {
    final_index.emplace(x, nodes.size());
    CrystalNode node;
    node.x = x;
    node.wt = weight_of(family, word, x, lam);
    for (Letter a = 1; a < n; ++a) {
      node.epsilon.push_back(epsilon_closed(family, word, x, a));
      node.phi.push_back(checked_add(node.epsilon.back(), node.wt[a - 1]));
    }
    nodes.push_back(std::move(node));
  }
  std::vector<CrystalEdge> edges;
  for (const auto& [from, a, to] : raw_edges)
    edges.push_back({final_index.at(order[from]), a, final_index.at(to)});
  std::sort(edges.begin(), edges.end());
  return CrystalGraph(family, word, lambda, std::move(nodes), std::move(edges));
}

std::vector<Vec> enumerate_binfty(const ReducedWord& word, Int height) {
  if (height < 0) fail(ErrorCode::InvalidArgument, "height must be >= 0");
  std::vector<Vec> out;
  Vec cur(word.size(), 0);
  auto rec = [&](auto& self, std::size_t idx, Int remaining) -> void {
    if (idx == cur.size()) {
      out.push_back(cur);
      return;
    }
    for (Int v = 0; v <= remaining; ++v) {
      cur[idx] = v;
      self(self, idx + 1, remaining - v);
    }
    cur[idx] = 0;
  };
  rec(rec, 0, height);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace crystalkit
