/*
 * (C) Copyright 2026 The crystalkit Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "crystalkit/crossings.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

namespace crystalkit {

std::string_view crossing_kind_name(CrossingKind kind) noexcept {
  switch (kind) {
    case CrossingKind::Reineke: return "reineke";
    case CrossingKind::DualReineke: return "dual_reineke";
    case CrossingKind::Kashiwara: return "kashiwara";
  }
  return "?";
}

CrossingKind parse_crossing_kind(std::string_view name) {
  for (CrossingKind k :
       {CrossingKind::Reineke, CrossingKind::DualReineke, CrossingKind::Kashiwara})
    if (crossing_kind_name(k) == name) return k;
  fail(ErrorCode::InvalidArgument, "unknown crossing kind '" + std::string(name) + "'");
}

std::vector<int> Crossing::turning() const {
  std::vector<int> out;
  for (const Visit& v : visits)
    if (v.turning()) out.push_back(v.vertex);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// A wire may pass straight through a crossing with wire q only if
// p > q when q <= a, and p < q when q >= a + 1.
bool may_pass(int p, int q, Letter a) { return q <= a ? p > q : p < q; }

struct PathSearch {
  const OrientedWiring& ow;
  Letter a;
  std::vector<bool> used;
  std::vector<Visit> visits;
  std::vector<Crossing> found;

  void run(int wire, int from) {
    const int next = ow.next_vertex(wire, from);
    if (next == 0) {
      if (wire == a + 1) {
        Crossing c;
        c.kind = ow.dual() ? CrossingKind::DualReineke : CrossingKind::Reineke;
        c.a = a;
        c.visits = visits;
        for (const Visit& v : visits) c.vertices.push_back(v.vertex);
        found.push_back(std::move(c));
      }
      return;
    }
    if (used[next]) return;
    const int q = ow.diagram().vertex(next).other(wire);
    used[next] = true;
    if (may_pass(wire, q, a)) {
      visits.push_back({next, wire, wire});
      run(wire, next);
      visits.pop_back();
    }
    visits.push_back({next, wire, q});
    run(q, next);
    visits.pop_back();
    used[next] = false;
  }
};

}  // namespace

std::vector<Crossing> enumerate_crossings(const OrientedWiring& wiring) {
  PathSearch search{wiring, wiring.a(),
                    std::vector<bool>(wiring.diagram().num_vertices() + 1, false), {}, {}};
  search.run(wiring.a(), 0);
  auto out = std::move(search.found);
  std::sort(out.begin(), out.end(),
            [](const Crossing& x, const Crossing& y) { return x.vertices < y.vertices; });
  return out;
}

std::vector<Crossing> kashiwara_crossings(const ReducedWord& word, Letter a) {
  if (a < 1 || a > word.n() - 1)
    fail(ErrorCode::BadLetter, "letter " + std::to_string(a) + " out of range");
  std::vector<Crossing> out;
  const int N = static_cast<int>(word.size());
  for (int k = 1; k <= N; ++k) {
    if (word.letter(k) != a) continue;
    Crossing c;
    c.kind = CrossingKind::Kashiwara;
    c.a = a;
    c.start = k;
    for (int l = k; l <= N; ++l) c.vertices.push_back(l);
    out.push_back(std::move(c));
  }
  return out;
}

CrossingVectors crossing_vectors(const WiringDiagram& diagram, const Crossing& c) {
  const ReducedWord& word = diagram.word();
  const std::size_t N = word.size();
  CrossingVectors out{Vec(N, 0), Vec(N, 0)};
  if (c.kind == CrossingKind::Kashiwara) {
    const int k = c.start;
    out.r[k - 1] = 1;
    out.s[k - 1] = 1;
    for (int l = k + 1; l <= static_cast<int>(N); ++l)
      out.s[l - 1] = cartan_entry(c.a, word.letter(l));
    return out;
  }
  for (const Visit& v : c.visits) {
    const Vertex& vx = diagram.vertex(v.vertex);
    if (v.turning()) out.r[v.vertex - 1] = v.out_wire > v.in_wire ? 1 : -1;
    const bool straddles = (vx.lower <= c.a) != (vx.upper <= c.a);
    if (straddles)
      out.s[v.vertex - 1] = 1;
    else if (!v.turning())
      out.s[v.vertex - 1] = -1;
  }
  return out;
}

bool region_contains(const WiringDiagram& diagram, const Crossing& c, int v) {
  if (c.kind == CrossingKind::Kashiwara)
    fail(ErrorCode::IncomparableKinds, "Kashiwara crossings do not cut out regions");
  if (std::find(c.vertices.begin(), c.vertices.end(), v) != c.vertices.end()) return true;
  // Count how often the closed curve crosses the vertical line through v
  // above v. Away from its own vertices the curve meets that line only
  // transversally, on wires sitting at integer heights.
  const int boundary = c.kind == CrossingKind::Reineke ? 0 : diagram.num_vertices() + 1;
  const int level = diagram.vertex(v).level;
  int crossings_above = 0;
  auto segment = [&](int wire, int from, int to) {
    const int lo = std::min(from, to);
    const int hi = std::max(from, to);
    if (lo < v && v < hi && diagram.height_after(v, wire) > level) ++crossings_above;
  };
  int prev = boundary;
  for (const Visit& vis : c.visits) {
    segment(vis.in_wire, prev, vis.vertex);
    prev = vis.vertex;
  }
  segment(c.a + 1, prev, boundary);
  return crossings_above % 2 == 1;
}

bool crossing_leq(const WiringDiagram& diagram, const Crossing& c1, const Crossing& c2) {
  if (c1.kind != c2.kind || c1.a != c2.a)
    fail(ErrorCode::IncomparableKinds, "crossings of different kinds or letters");
  if (c1.kind == CrossingKind::Kashiwara) return c2.start <= c1.start;
  for (int v : c1.vertices)
    if (!region_contains(diagram, c2, v)) return false;
  return true;
}

CrossingLattice::CrossingLattice(const ReducedWord& word, Letter a, CrossingKind kind)
    : diagram_(build_wiring(word)), a_(a), kind_(kind) {
  if (kind == CrossingKind::Kashiwara)
    crossings_ = kashiwara_crossings(word, a);
  else
    crossings_ = enumerate_crossings(orient(diagram_, a, kind == CrossingKind::DualReineke));
  for (const auto& c : crossings_) vectors_.push_back(crossing_vectors(diagram_, c));
  const std::size_t m = crossings_.size();
  leq_.assign(m * m, false);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      leq_[i * m + j] = crossing_leq(diagram_, crossings_[i], crossings_[j]);
}

Int CrossingLattice::max_value(std::span<const Int> x, Form f) const {
  if (crossings_.empty()) fail(ErrorCode::InvalidArgument, "empty crossing set");
  Int best = dot(form(0, f), x);
  for (std::size_t i = 1; i < size(); ++i) best = std::max(best, dot(form(i, f), x));
  return best;
}

std::size_t CrossingLattice::extremal_maximizer(std::span<const Int> x, Form f,
                                                Extremum which, bool reversed) const {
  const Int best = max_value(x, f);
  std::vector<std::size_t> maximizers;
  for (std::size_t i = 0; i < size(); ++i)
    if (dot(form(i, f), x) == best) maximizers.push_back(i);
  // With the order reversed, the greatest element is the least one of the
  // original order and vice versa.
  const bool greatest = (which == Extremum::Greatest) != reversed;
  std::vector<std::size_t> extremal;
  for (std::size_t i : maximizers) {
    bool ok = true;
    for (std::size_t j : maximizers) {
      if (greatest ? !leq(j, i) : !leq(i, j)) {
        ok = false;
        break;
      }
    }
    if (ok) extremal.push_back(i);
  }
  if (extremal.size() != 1)
    fail(ErrorCode::NoUniqueExtremum,
         std::to_string(extremal.size()) + " extremal elements among " +
             std::to_string(maximizers.size()) + " maximizers at x = " + format_vec(x) +
             " (" + std::string(crossing_kind_name(kind_)) + ", a=" + std::to_string(a_) +
             ", word " + format_word(word()) + ")");
  return extremal.front();
}

std::shared_ptr<const CrossingLattice> crossing_lattice(const ReducedWord& word, Letter a,
                                                        CrossingKind kind) {
  using Key = std::tuple<std::vector<Letter>, Letter, CrossingKind>;
  static std::shared_mutex mutex;
  static std::map<Key, std::shared_ptr<const CrossingLattice>> cache;
  Key key{std::vector<Letter>(word.letters().begin(), word.letters().end()), a, kind};
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto lattice = std::make_shared<const CrossingLattice>(word, a, kind);
  std::unique_lock lock(mutex);
  return cache.emplace(std::move(key), std::move(lattice)).first->second;
}

const Crossing& extremal_maximizer(std::span<const Int> x, const CrossingLattice& lattice,
                                   Form f, Extremum which) {
  return lattice.crossing(lattice.extremal_maximizer(x, f, which));
}

}  // namespace crystalkit
