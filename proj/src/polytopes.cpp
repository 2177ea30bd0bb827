/*
 * (C) Copyright 2026 The crystalkit Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "crystalkit/polytopes.hpp"

#include <algorithm>

namespace crystalkit {

namespace {

void canonicalize(std::vector<AffineForm>& rows) {
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

Vec unit(std::size_t size, std::size_t index) {
  Vec v(size, 0);
  v.at(index) = 1;
  return v;
}

struct HwSource {
  CrossingKind kind;
  Form form;
};

HwSource hw_source(Family family, HwAssignment assignment) {
  switch (family) {
    case Family::L: return {CrossingKind::DualReineke, Form::S};
    case Family::Lstar: return {CrossingKind::Reineke, Form::S};
    case Family::S:
      return assignment == HwAssignment::Adopted ? HwSource{CrossingKind::Reineke, Form::R}
                                                 : HwSource{CrossingKind::Kashiwara, Form::S};
    case Family::Sstar:
      return assignment == HwAssignment::Adopted ? HwSource{CrossingKind::Kashiwara, Form::S}
                                                 : HwSource{CrossingKind::Reineke, Form::R};
  }
  fail(ErrorCode::InvalidArgument, "bad family");
}

// Rows normalized to <c, x> <= bound.
struct Row {
  Vec c;
  Int bound;
};

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

class BoxSearch {
 public:
  BoxSearch(std::vector<Row> rows, std::size_t dim, Int box)
      : rows_(std::move(rows)), lo_(dim, 0), hi_(dim, box) {}

  std::vector<Vec> run() {
    search(lo_, hi_);
    std::sort(points_.begin(), points_.end());
    return std::move(points_);
  }

 private:
  // Interval propagation to a fixpoint; false if infeasible.
  bool propagate(Vec& lo, Vec& hi) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Row& row : rows_) {
        Int min_sum = 0;
        for (std::size_t k = 0; k < row.c.size(); ++k) {
          if (row.c[k] == 0) continue;
          min_sum += std::min(row.c[k] * lo[k], row.c[k] * hi[k]);
        }
        if (min_sum > row.bound) return false;
        for (std::size_t k = 0; k < row.c.size(); ++k) {
          const Int c = row.c[k];
          if (c == 0) continue;
          const Int slack = row.bound - (min_sum - std::min(c * lo[k], c * hi[k]));
          if (c > 0) {
            const Int cap = floor_div(slack, c);
            if (cap < hi[k]) {
              hi[k] = cap;
              changed = true;
            }
          } else {
            const Int floor_v = ceil_div(slack, c);
            if (floor_v > lo[k]) {
              lo[k] = floor_v;
              changed = true;
            }
          }
          if (lo[k] > hi[k]) return false;
        }
      }
    }
    return true;
  }

  void search(Vec lo, Vec hi) {
    if (!propagate(lo, hi)) return;
    std::size_t branch = lo.size();
    for (std::size_t k = 0; k < lo.size(); ++k) {
      if (lo[k] < hi[k]) {
        branch = k;
        break;
      }
    }
    if (branch == lo.size()) {
      points_.push_back(lo);
      return;
    }
    for (Int v = lo[branch]; v <= hi[branch]; ++v) {
      Vec l2 = lo;
      Vec h2 = hi;
      l2[branch] = h2[branch] = v;
      search(std::move(l2), std::move(h2));
    }
  }

  std::vector<Row> rows_;
  Vec lo_;
  Vec hi_;
  std::vector<Vec> points_;
};

std::vector<Row> normalized_rows(const InequalitySystem& system, const HighestWeight& lambda) {
  std::vector<Row> rows;
  for (const auto& f : system.cone_rows) {
    Row r{f.coeffs, 0};
    for (Int& v : r.c) v = -v;
    rows.push_back(std::move(r));
  }
  for (const auto& f : system.hw_rows)
    rows.push_back({f.coeffs, dot(f.lambda_row, lambda.coeffs())});
  return rows;
}

}  // namespace

std::vector<AffineForm> cone_system(Family family, const ReducedWord& word) {
  // Lusztig cone: r(upsilon) = e_k over all Kashiwara crossings. String cone:
  // r(gamma) over all dual Reineke crossings.
  const CrossingKind kind =
      is_lusztig(family) ? CrossingKind::Kashiwara : CrossingKind::DualReineke;
  std::vector<AffineForm> rows;
  for (Letter a = 1; a < word.n(); ++a) {
    const auto lattice = crossing_lattice(word, a, kind);
    for (std::size_t i = 0; i < lattice->size(); ++i)
      rows.push_back({lattice->vectors(i).r, Vec(word.n() - 1, 0), Sense::GeqZero});
  }
  canonicalize(rows);
  return rows;
}

std::vector<AffineForm> hw_system(Family family, const ReducedWord& word,
                                  HwAssignment assignment) {
  const HwSource src = hw_source(family, assignment);
  std::vector<AffineForm> rows;
  for (Letter a = 1; a < word.n(); ++a) {
    const auto lattice = crossing_lattice(word, a, src.kind);
    for (std::size_t i = 0; i < lattice->size(); ++i)
      rows.push_back({lattice->form(i, src.form), unit(word.n() - 1, a - 1), Sense::LeqLambda});
  }
  canonicalize(rows);
  return rows;
}

InequalitySystem inequality_system(Family family, const ReducedWord& word,
                                   HwAssignment assignment) {
  return {family, word, cone_system(family, word), hw_system(family, word, assignment)};
}

bool contains(const InequalitySystem& system, const HighestWeight& lambda,
              std::span<const Int> x) {
  if (x.size() != system.word.size() ||
      static_cast<int>(lambda.size()) != system.word.n() - 1)
    fail(ErrorCode::DimensionMismatch, "point or lambda does not match the system");
  for (const auto& row : system.cone_rows)
    if (dot(row.coeffs, x) < 0) return false;
  for (const auto& row : system.hw_rows)
    if (dot(row.coeffs, x) > dot(row.lambda_row, lambda.coeffs())) return false;
  return true;
}

LatticePointResult enumerate_lattice_points(const InequalitySystem& system,
                                            const HighestWeight& lambda) {
  if (static_cast<int>(lambda.size()) != system.word.n() - 1)
    fail(ErrorCode::DimensionMismatch, "lambda does not match the system");
  const auto rows = normalized_rows(system, lambda);
  const std::size_t dim = system.word.size();
  Int box = checked_mul(system.word.n() - 1, lambda.sum());
  auto points = BoxSearch(rows, dim, box).run();
  // A point on the box boundary may be an artifact of the box. Grow the box
  // until the point set is stable.
  auto touches = [&](const std::vector<Vec>& pts, Int b) {
    if (b == 0) return false;
    for (const auto& p : pts)
      if (std::find(p.begin(), p.end(), b) != p.end()) return true;
    return false;
  };
  int rounds = 0;
  while (touches(points, box)) {
    if (++rounds > 8) fail(ErrorCode::InvalidArgument, "lattice point box did not stabilize");
    const Int bigger = checked_mul(box, 2);
    auto more = BoxSearch(rows, dim, bigger).run();
    if (more == points) break;
    points = std::move(more);
    box = bigger;
  }
  return {std::move(points), box};
}

std::vector<Vec> lattice_points(Family family, const ReducedWord& word,
                                const HighestWeight& lambda) {
  return enumerate_lattice_points(inequality_system(family, word), lambda).points;
}

}  // namespace crystalkit
