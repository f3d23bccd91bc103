#include "wdrd/scheme.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>
#include <tuple>

#include "parallel.hpp"

namespace wdrd {

RelationPartition::RelationPartition(int n, int d, std::vector<int> labels)
    : n_(n), d_(d), labels_(std::move(labels)) {
  if (n <= 0) throw std::invalid_argument("partition needs at least one point");
  if (d < 0) throw std::invalid_argument("negative class count");
  if (labels_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw std::invalid_argument("label matrix is not n x n");
  std::vector<bool> seen(static_cast<std::size_t>(d) + 1, false);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      int c = label(x, y);
      if (c < 0 || c > d)
        throw std::invalid_argument("label " + std::to_string(c) + " at (" + std::to_string(x) + "," +
                                    std::to_string(y) + ") outside [0," + std::to_string(d) + "]");
      if ((c == 0) != (x == y))
        throw std::invalid_argument("class 0 must be exactly the diagonal; violated at (" + std::to_string(x) +
                                    "," + std::to_string(y) + ")");
      seen[static_cast<std::size_t>(c)] = true;
    }
  }
  for (int c = 0; c <= d; ++c)
    if (!seen[static_cast<std::size_t>(c)]) throw std::invalid_argument("class " + std::to_string(c) + " is empty");
}

bool same_partition(const RelationPartition& a, const RelationPartition& b) {
  if (a.points() != b.points() || a.d() != b.d()) return false;
  const auto classes = static_cast<std::size_t>(a.d()) + 1;
  std::vector<int> forward(classes, -1);
  std::vector<int> backward(classes, -1);
  auto la = a.labels();
  auto lb = b.labels();
  for (std::size_t k = 0; k < la.size(); ++k) {
    auto ca = static_cast<std::size_t>(la[k]);
    auto cb = static_cast<std::size_t>(lb[k]);
    if (forward[ca] == -1 && backward[cb] == -1) {
      forward[ca] = lb[k];
      backward[cb] = la[k];
    } else if (forward[ca] != lb[k] || backward[cb] != la[k]) {
      return false;
    }
  }
  return true;
}

IntersectionNumbers::IntersectionNumbers(int d)
    : d_(d),
      p_(static_cast<std::size_t>(d + 1) * static_cast<std::size_t>(d + 1) * static_cast<std::size_t>(d + 1), 0),
      k_(static_cast<std::size_t>(d + 1), 0),
      star_(static_cast<std::size_t>(d + 1), 0) {
  if (d < 0) throw std::invalid_argument("negative class count");
}

struct SchemeBuilder {
  static AssociationScheme make(RelationPartition partition, IntersectionNumbers numbers) {
    return AssociationScheme(std::move(partition), std::move(numbers));
  }
};

namespace {

struct ClassCounts {
  VertexPair first;
  std::vector<Count> dense;                  // (d+1)^2, row i, column j
  std::vector<std::pair<int, Count>> nonzero;  // sparse view of dense
};

std::vector<VertexPair> first_pairs(const RelationPartition& part) {
  const int n = part.points();
  std::vector<VertexPair> first(static_cast<std::size_t>(part.d()) + 1, VertexPair{-1, -1});
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y) {
      auto& f = first[static_cast<std::size_t>(part.label(x, y))];
      if (f.x < 0) f = {x, y};
    }
  return first;
}

std::optional<TransposeWitness> check_transposes(const RelationPartition& part, const std::vector<VertexPair>& first) {
  const int n = part.points();
  std::vector<int> reverse(first.size());
  for (std::size_t c = 0; c < first.size(); ++c) reverse[c] = part.label(first[c].y, first[c].x);
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y) {
      int c = part.label(x, y);
      int r = part.label(y, x);
      if (r != reverse[static_cast<std::size_t>(c)])
        return TransposeWitness{first[static_cast<std::size_t>(c)], {x, y}, c, reverse[static_cast<std::size_t>(c)], r};
    }
  return std::nullopt;
}

}  // namespace

SchemeResult build_scheme(const RelationPartition& part, const BuildOptions& options) {
  const int n = part.points();
  const int d = part.d();
  const auto width = static_cast<std::size_t>(d) + 1;
  const auto cells = width * width;

  auto first = first_pairs(part);
  if (auto bad = check_transposes(part, first)) return SchemeViolation{*bad, {}};

  auto count_into = [&](Vertex x, Vertex y, std::vector<Count>& dense, std::vector<int>& touched) {
    for (Vertex z = 0; z < n; ++z) {
      auto cell = static_cast<std::size_t>(part.label(x, z)) * width + static_cast<std::size_t>(part.label(z, y));
      if (dense[cell]++ == 0) touched.push_back(static_cast<int>(cell));
    }
  };

  std::vector<ClassCounts> reps(width);
  for (std::size_t h = 0; h < width; ++h) {
    auto& rep = reps[h];
    rep.first = first[h];
    rep.dense.assign(cells, 0);
    std::vector<int> touched;
    count_into(rep.first.x, rep.first.y, rep.dense, touched);
    std::sort(touched.begin(), touched.end());
    for (int cell : touched) rep.nonzero.emplace_back(cell, rep.dense[static_cast<std::size_t>(cell)]);
  }

  // Per row: the first offending pair for each (h, cell) key seen in that row.
  std::vector<std::vector<ConstancyWitness>> row_hits(static_cast<std::size_t>(n));
  std::atomic<bool> stop{false};
  detail::parallel_for(static_cast<std::size_t>(n), options.jobs, [&](std::size_t row) {
    if (!options.collect_all && stop.load(std::memory_order_relaxed)) return;
    const auto x = static_cast<Vertex>(row);
    std::vector<Count> dense(cells, 0);
    std::vector<int> touched;
    std::map<std::pair<int, int>, bool> seen;
    auto& hits = row_hits[row];
    for (Vertex y = 0; y < n; ++y) {
      const int h = part.label(x, y);
      const auto& rep = reps[static_cast<std::size_t>(h)];
      touched.clear();
      count_into(x, y, dense, touched);
      auto record = [&](int cell) {
        if (!seen.emplace(std::make_pair(h, cell), true).second) return;
        const auto c = static_cast<std::size_t>(cell);
        hits.push_back(ConstancyWitness{h, static_cast<int>(c / width), static_cast<int>(c % width), rep.first,
                                        {x, y}, rep.dense[c], dense[c]});
      };
      for (int cell : touched)
        if (dense[static_cast<std::size_t>(cell)] != rep.dense[static_cast<std::size_t>(cell)]) record(cell);
      for (auto [cell, value] : rep.nonzero)
        if (dense[static_cast<std::size_t>(cell)] == 0) record(cell);
      for (int cell : touched) dense[static_cast<std::size_t>(cell)] = 0;
    }
    if (!hits.empty()) stop.store(true, std::memory_order_relaxed);
  });

  std::map<std::tuple<int, int, int>, ConstancyWitness> merged;
  for (const auto& hits : row_hits)
    for (const auto& w : hits) {
      auto [it, inserted] = merged.emplace(std::make_tuple(w.h, w.i, w.j), w);
      if (!inserted && w.second < it->second.second) it->second = w;
    }
  if (!merged.empty()) {
    SchemeViolation violation{merged.begin()->second, {}};
    if (options.collect_all)
      for (auto& [key, w] : merged) violation.constancy.push_back(w);
    return violation;
  }

  IntersectionNumbers numbers(d);
  for (int h = 0; h <= d; ++h)
    for (auto [cell, value] : reps[static_cast<std::size_t>(h)].nonzero)
      numbers.set_p(h, static_cast<int>(static_cast<std::size_t>(cell) / width),
                    static_cast<int>(static_cast<std::size_t>(cell) % width), value);
  for (int i = 0; i <= d; ++i) {
    const auto& f = first[static_cast<std::size_t>(i)];
    numbers.set_star(i, part.label(f.y, f.x));
  }
  for (int i = 0; i <= d; ++i) numbers.set_k(i, numbers.p(0, i, numbers.star(i)));
  return SchemeBuilder::make(part, std::move(numbers));
}

bool is_scheme(const RelationPartition& partition, int jobs) {
  BuildOptions options;
  options.jobs = jobs;
  options.collect_all = false;
  return std::holds_alternative<AssociationScheme>(build_scheme(partition, options));
}

ConsistencyReport check_consistency(const IntersectionNumbers& s) {
  const int d = s.d();
  for (int h = 0; h <= d; ++h)
    for (int i = 0; i <= d; ++i)
      for (int j = 0; j <= d; ++j) {
        Count a = s.p(h, i, j) * s.k(h);
        Count b = s.p(i, h, s.star(j)) * s.k(i);
        Count c = s.p(j, s.star(i), h) * s.k(j);
        if (a != b) return {false, "valency", {h, i, j}, a, b};
        if (a != c) return {false, "valency", {h, i, j}, a, c};
      }
  for (int e = 0; e <= d; ++e)
    for (int l = 0; l <= d; ++l)
      for (int m = 0; m <= d; ++m)
        for (int h = 0; h <= d; ++h) {
          Count lhs = 0;
          Count rhs = 0;
          for (int r = 0; r <= d; ++r) lhs += s.p(r, e, l) * s.p(h, m, r);
          for (int t = 0; t <= d; ++t) rhs += s.p(t, m, e) * s.p(h, t, l);
          if (lhs != rhs) return {false, "associativity", {e, l, m, h}, lhs, rhs};
        }
  return {};
}

bool is_commutative(const IntersectionNumbers& s) {
  for (int h = 0; h <= s.d(); ++h)
    for (int i = 0; i <= s.d(); ++i)
      for (int j = i + 1; j <= s.d(); ++j)
        if (s.p(h, i, j) != s.p(h, j, i)) return false;
  return true;
}

}  // namespace wdrd
