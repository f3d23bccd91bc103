#include "wdrd/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace wdrd {

const char* to_string(TheoremCase c) {
  switch (c) {
    case TheoremCase::i: return "i";
    case TheoremCase::ii: return "ii";
    case TheoremCase::iii: return "iii";
    case TheoremCase::iv: return "iv";
    case TheoremCase::v: return "v";
    case TheoremCase::vi: return "vi";
  }
  return "?";
}

std::vector<UnionCandidate> theorem_menu(const PPolyProfile& profile) {
  const int g = profile.girth;
  const int d = profile.d;
  const bool thick = profile.k1 > profile.kg + 1;
  const bool g_six_or_eight = g == 6 || g == 8;
  const bool even = g % 2 == 0;
  const bool long_type = d == g;

  std::vector<UnionCandidate> menu;
  auto add = [&](TheoremCase tag, PositionSet a, PositionSet b) {
    for (PositionSet* s : {&a, &b}) {
      std::sort(s->begin(), s->end());
      s->erase(std::unique(s->begin(), s->end()), s->end());
      if (s->front() < 1 || s->back() > d) continue;
      bool listed = std::any_of(menu.begin(), menu.end(), [&](const auto& u) { return u.positions == *s; });
      if (!listed) menu.push_back({*s, tag});
    }
  };
  add(TheoremCase::i, {1}, {g - 1});
  if (thick && g_six_or_eight) add(TheoremCase::ii, {2}, {g - 2});
  if (even) add(TheoremCase::iii, {1, 2}, {g - 2, g - 1});
  if (long_type) add(TheoremCase::iv, {1, g}, {g - 1, g});
  if (thick && long_type && g_six_or_eight) add(TheoremCase::v, {2, g}, {g - 2, g});
  if (long_type && even && g > 4) add(TheoremCase::vi, {1, 2, g}, {g - 2, g - 1, g});
  return menu;
}

Digraph build_union(const AssociationScheme& s, const Ordering& o, const PositionSet& positions) {
  if (positions.empty()) throw std::invalid_argument("empty position set");
  const int d = s.d();
  std::vector<bool> chosen(static_cast<std::size_t>(d) + 1, false);
  for (int pos : positions) {
    if (pos == 0) throw std::invalid_argument("position 0 (the diagonal) would create loops");
    if (pos < 0 || pos > d) throw std::invalid_argument("position " + std::to_string(pos) + " outside 1..d");
    chosen[static_cast<std::size_t>(o.class_at(pos))] = true;
  }
  const int n = s.points();
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(n));
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y)
      if (chosen[static_cast<std::size_t>(s.label(x, y))]) out[static_cast<std::size_t>(x)].push_back(y);
  return Digraph(n, std::move(out));
}

PositionSet star_image(const AssociationScheme& s, const Ordering& o, const PositionSet& positions) {
  PositionSet image;
  image.reserve(positions.size());
  for (int pos : positions) image.push_back(o.position_of(s.star(o.class_at(pos))));
  std::sort(image.begin(), image.end());
  return image;
}

std::string to_string(const PositionSet& positions) {
  std::string out;
  for (std::size_t k = 0; k < positions.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(positions[k]);
  }
  return out;
}

}  // namespace wdrd
