#include "wdrd/ppoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "parallel.hpp"

namespace wdrd {

Ordering::Ordering(std::vector<int> classes) : classes_(std::move(classes)) {
  const int d = static_cast<int>(classes_.size());
  positions_.assign(static_cast<std::size_t>(d) + 1, -1);
  positions_[0] = 0;
  for (int pos = 1; pos <= d; ++pos) {
    int c = classes_[static_cast<std::size_t>(pos - 1)];
    if (c < 1 || c > d || positions_[static_cast<std::size_t>(c)] != -1)
      throw std::invalid_argument("ordering is not a permutation of 1.." + std::to_string(d));
    positions_[static_cast<std::size_t>(c)] = pos;
  }
}

Ordering Ordering::identity(int d) {
  std::vector<int> classes(static_cast<std::size_t>(d));
  std::iota(classes.begin(), classes.end(), 1);
  return Ordering(std::move(classes));
}

const char* to_string(SchemeType t) { return t == SchemeType::short_type ? "short" : "long"; }

const char* to_string(RejectReason r) {
  switch (r) {
    case RejectReason::nonzero_above_subdiagonal: return "nonzero_above_subdiagonal";
    case RejectReason::zero_subdiagonal: return "zero_subdiagonal";
    case RejectReason::symmetric_first_relation: return "symmetric_first_relation";
    case RejectReason::diameter_not_girth_related: return "diameter_not_girth_related";
  }
  return "unknown";
}

namespace {

Digraph relation_digraph(const AssociationScheme& s, int cls) {
  const int n = s.points();
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(n));
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y)
      if (s.label(x, y) == cls) out[static_cast<std::size_t>(x)].push_back(y);
  return Digraph(n, std::move(out));
}

void require_matching(const AssociationScheme& s, const Ordering& o) {
  if (o.d() != s.d())
    throw std::invalid_argument("ordering has " + std::to_string(o.d()) + " classes, scheme has " +
                                std::to_string(s.d()));
}

}  // namespace

PPolyResult is_p_polynomial(const AssociationScheme& s, const Ordering& o) {
  require_matching(s, o);
  const int d = s.d();
  const int c1 = o.class_at(1);
  for (int i = 1; i <= d; ++i) {
    const int ci = o.class_at(i);
    for (int h = i + 1; h <= d; ++h) {
      const Count v = s.p(o.class_at(h), c1, ci);
      if (h == i + 1 && v == 0) return PPolyRejection{RejectReason::zero_subdiagonal, i, h};
      if (h > i + 1 && v != 0) return PPolyRejection{RejectReason::nonzero_above_subdiagonal, i, h};
    }
  }
  if (s.star(c1) == c1) return PPolyRejection{RejectReason::symmetric_first_relation, 1, 1};

  PPolyProfile profile;
  profile.ordering = o;
  profile.d = d;
  // R_1 is non-symmetric and every pair of a scheme lies on some R_1-walk
  // (A_d is a polynomial in A_1), so (X, R_1) has a circuit.
  auto g = girth(relation_digraph(s, c1));
  if (!g) throw std::logic_error("first relation of a P-polynomial ordering is acyclic");
  profile.girth = *g;
  if (d == profile.girth - 1) {
    profile.type = SchemeType::short_type;
  } else if (d == profile.girth) {
    profile.type = SchemeType::long_type;
  } else {
    return PPolyRejection{RejectReason::diameter_not_girth_related, d, profile.girth};
  }
  profile.k1 = s.valency(c1);
  profile.kg = profile.type == SchemeType::long_type ? s.valency(o.class_at(profile.girth)) : 0;
  profile.stable = check_stability(s, profile);
  return profile;
}

OracleResult matrix_oracle(const AssociationScheme& s, const Ordering& o) {
  require_matching(s, o);
  const int d = s.d();
  const int n = s.points();
  const int c1 = o.class_at(1);

  PolySequence polys;
  polys.coefficients.push_back({Rational(1)});
  if (d >= 1) polys.coefficients.push_back({Rational(0), Rational(1)});
  for (int i = 1; i < d; ++i) {
    const Count pivot = s.p(o.class_at(i + 1), c1, o.class_at(i));
    if (pivot == 0)
      return {false, std::nullopt, "p^{i+1}_{1,i} = 0 at i = " + std::to_string(i)};
    std::vector<Rational> next(static_cast<std::size_t>(i) + 2, Rational(0));
    const auto& vi = polys.coefficients[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k < vi.size(); ++k) next[k + 1] += vi[k];
    for (int h = 0; h <= i; ++h) {
      const Count c = s.p(o.class_at(h), c1, o.class_at(i));
      if (c == 0) continue;
      const auto& vh = polys.coefficients[static_cast<std::size_t>(h)];
      for (std::size_t k = 0; k < vh.size(); ++k) next[k] -= vh[k] * c;
    }
    for (auto& coeff : next) coeff /= pivot;
    polys.coefficients.push_back(std::move(next));
  }

  // Powers of A_1, multiplied on the left through its adjacency lists.
  std::vector<std::vector<Vertex>> r1(static_cast<std::size_t>(n));
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y)
      if (s.label(x, y) == c1) r1[static_cast<std::size_t>(x)].push_back(y);
  std::vector<ExactMatrix> powers;
  powers.push_back(ExactMatrix::identity(n));
  for (int k = 1; k <= d; ++k) {
    const ExactMatrix& prev = powers.back();
    ExactMatrix next(n);
    for (Vertex x = 0; x < n; ++x)
      for (Vertex z : r1[static_cast<std::size_t>(x)])
        for (Vertex y = 0; y < n; ++y)
          if (prev(z, y) != 0) next(x, y) += prev(z, y);
    powers.push_back(std::move(next));
  }

  for (int i = 0; i <= d; ++i) {
    const int ci = o.class_at(i);
    const auto& coeffs = polys.coefficients[static_cast<std::size_t>(i)];
    ExactMatrix value(n);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      if (coeffs[k] != 0) value += powers[k] * coeffs[k];
    for (Vertex x = 0; x < n; ++x)
      for (Vertex y = 0; y < n; ++y) {
        const Rational expected = s.label(x, y) == ci ? 1 : 0;
        if (value(x, y) != expected)
          return {false, std::nullopt,
                  "A_" + std::to_string(i) + " != v_" + std::to_string(i) + "(A_1) at (" + std::to_string(x) + "," +
                      std::to_string(y) + ")"};
      }
  }
  return {true, std::move(polys), ""};
}

OrderingSearch search_p_poly_orderings(const AssociationScheme& s, int jobs) {
  const int d = s.d();
  struct Branch {
    std::optional<Ordering> ordering;
    std::optional<AmbiguousBranch> ambiguous;
  };
  std::vector<Branch> branches(static_cast<std::size_t>(d));
  detail::parallel_for(static_cast<std::size_t>(d), jobs, [&](std::size_t slot) {
    const int first = static_cast<int>(slot) + 1;
    std::vector<int> chosen{first};
    std::vector<bool> used(static_cast<std::size_t>(d) + 1, false);
    used[0] = true;
    used[static_cast<std::size_t>(first)] = true;
    for (int pos = 1; pos < d; ++pos) {
      std::vector<int> candidates;
      for (int h = 1; h <= d; ++h)
        if (!used[static_cast<std::size_t>(h)] && s.p(h, first, chosen.back()) != 0) candidates.push_back(h);
      if (candidates.size() > 1) {
        // Any choice leaves another nonzero p^h_{1,i} beyond position i+1.
        branches[slot].ambiguous = AmbiguousBranch{first, pos, candidates};
        return;
      }
      if (candidates.empty()) return;
      used[static_cast<std::size_t>(candidates.front())] = true;
      chosen.push_back(candidates.front());
    }
    Ordering ordering(chosen);
    if (std::holds_alternative<PPolyProfile>(is_p_polynomial(s, ordering))) branches[slot].ordering = ordering;
  });
  OrderingSearch result;
  for (auto& b : branches) {
    if (b.ordering) result.orderings.push_back(std::move(*b.ordering));
    if (b.ambiguous) result.ambiguous.push_back(std::move(*b.ambiguous));
  }
  std::sort(result.orderings.begin(), result.orderings.end());
  return result;
}

std::vector<Ordering> find_p_poly_orderings(const AssociationScheme& s, int jobs) {
  return search_p_poly_orderings(s, jobs).orderings;
}

bool check_stability(const AssociationScheme& s, const PPolyProfile& profile) {
  const auto& o = profile.ordering;
  const int g = profile.girth;
  for (int i = 1; i < g; ++i) {
    if (i > o.d() || g - i > o.d()) return false;
    if (s.star(o.class_at(i)) != o.class_at(g - i)) return false;
  }
  return true;
}

std::variant<LongTypeStructure, NotLong> long_type_structure(const AssociationScheme& s, const PPolyProfile& profile) {
  if (profile.type != SchemeType::long_type) return NotLong{};
  const auto& o = profile.ordering;
  const int n = s.points();
  const int g = profile.girth;
  const int cg = o.class_at(g);
  if (s.star(cg) != cg) throw std::logic_error("R_g is not symmetric in a long-type scheme");

  // Fibers: connected components of R_g, each of which must be a clique of R_g.
  std::vector<int> fiber_of(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<Vertex>> fibers;
  for (Vertex x = 0; x < n; ++x) {
    if (fiber_of[static_cast<std::size_t>(x)] != -1) continue;
    std::vector<Vertex> members{x};
    fiber_of[static_cast<std::size_t>(x)] = static_cast<int>(fibers.size());
    for (Vertex y = 0; y < n; ++y)
      if (s.label(x, y) == cg) {
        members.push_back(y);
        fiber_of[static_cast<std::size_t>(y)] = static_cast<int>(fibers.size());
      }
    fibers.push_back(std::move(members));
  }
  const auto expected_size = static_cast<std::size_t>(profile.kg + 1);
  for (const auto& f : fibers) {
    if (f.size() != expected_size)
      throw std::logic_error("R_0 u R_g class of size " + std::to_string(f.size()) + ", expected " +
                             std::to_string(expected_size));
    for (Vertex a : f)
      for (Vertex b : f)
        if (a != b && s.label(a, b) != cg) throw std::logic_error("R_0 u R_g is not transitive");
  }
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y)
      if (s.label(x, y) == cg && fiber_of[static_cast<std::size_t>(x)] != fiber_of[static_cast<std::size_t>(y)])
        throw std::logic_error("R_g pair crosses fibers");

  const int q = static_cast<int>(fibers.size());
  std::vector<int> labels(static_cast<std::size_t>(q) * static_cast<std::size_t>(q));
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      const int pos = o.position_of(s.label(fibers[static_cast<std::size_t>(a)][0], fibers[static_cast<std::size_t>(b)][0]));
      for (Vertex x : fibers[static_cast<std::size_t>(a)])
        for (Vertex y : fibers[static_cast<std::size_t>(b)])
          if (a != b && o.position_of(s.label(x, y)) != pos)
            throw std::logic_error("relations are not constant between fibers");
      labels[static_cast<std::size_t>(a) * static_cast<std::size_t>(q) + static_cast<std::size_t>(b)] =
          a == b ? 0 : pos;
    }
  RelationPartition quotient(q, g - 1, std::move(labels));
  auto built = build_scheme(quotient, BuildOptions{1, false});
  auto* qs = std::get_if<AssociationScheme>(&built);
  if (!qs) throw std::logic_error("fiber quotient is not an association scheme");
  auto qp = is_p_polynomial(*qs, Ordering::identity(g - 1));
  auto* qprofile = std::get_if<PPolyProfile>(&qp);
  if (!qprofile || qprofile->type != SchemeType::short_type || qprofile->girth != g)
    throw std::logic_error("fiber quotient is not a short-type P-polynomial scheme of the same girth");
  return LongTypeStructure{static_cast<int>(expected_size), std::move(fibers), std::move(quotient), *qprofile};
}

}  // namespace wdrd
