#include "wdrd/io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace wdrd {

namespace {

struct Line {
  int number;
  std::string_view text;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  while (!text.empty()) {
    auto end = text.find('\n');
    auto line = text.substr(0, end);
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") != std::string_view::npos) lines.push_back({number, line});
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    pos = line.find_first_not_of(" \t", pos);
    if (pos == std::string_view::npos) break;
    auto end = line.find_first_of(" \t", pos);
    out.push_back(line.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos));
    if (end == std::string_view::npos) break;
    pos = end;
  }
  return out;
}

int to_int(std::string_view token, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  return value;
}

DistancePair parse_pair(std::string_view token, int line) {
  if (token.size() < 5 || token.front() != '(' || token.back() != ')')
    throw ParseError(line, "malformed distance pair '" + std::string(token) + "'");
  auto inner = token.substr(1, token.size() - 2);
  auto comma = inner.find(',');
  if (comma == std::string_view::npos) throw ParseError(line, "malformed distance pair '" + std::string(token) + "'");
  auto part = [&](std::string_view s) { return s == "inf" ? kUnreachable : to_int(s, line); };
  return {part(inner.substr(0, comma)), part(inner.substr(comma + 1))};
}

}  // namespace

Digraph parse_digraph(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "missing vertex count");
  auto head = tokens(lines[0].text);
  if (head.size() != 1) throw ParseError(lines[0].number, "expected a single vertex count");
  const int n = to_int(head[0], lines[0].number);
  if (n <= 0) throw ParseError(lines[0].number, "vertex count must be positive");
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(n));
  std::set<Arc> seen;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& [number, line] = lines[k];
    auto parts = tokens(line);
    if (parts.size() != 2) throw ParseError(number, "expected 'u v'");
    const int u = to_int(parts[0], number);
    const int v = to_int(parts[1], number);
    if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError(number, "vertex out of range");
    if (u == v) throw ParseError(number, "loop");
    if (!seen.emplace(u, v).second) throw ParseError(number, "duplicate arc");
    out[static_cast<std::size_t>(u)].push_back(v);
  }
  return Digraph(n, std::move(out));
}

std::string format_digraph(const Digraph& g) {
  std::ostringstream out;
  out << g.size() << '\n';
  for (auto [u, v] : g.arcs()) out << u << ' ' << v << '\n';
  return out.str();
}

SchemeFile parse_scheme_file(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "missing header 'n d'");
  auto head = tokens(lines[0].text);
  if (head.size() != 2) throw ParseError(lines[0].number, "expected header 'n d'");
  const int n = to_int(head[0], lines[0].number);
  const int d = to_int(head[1], lines[0].number);
  if (n <= 0 || d < 0) throw ParseError(lines[0].number, "invalid header");
  if (lines.size() < static_cast<std::size_t>(n) + 1) throw ParseError(lines.back().number + 1, "missing label rows");
  std::vector<int> labels;
  labels.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    const auto& [number, line] = lines[static_cast<std::size_t>(r) + 1];
    auto parts = tokens(line);
    if (parts.size() != static_cast<std::size_t>(n)) throw ParseError(number, "expected " + std::to_string(n) + " labels");
    for (auto t : parts) labels.push_back(to_int(t, number));
  }
  std::optional<std::vector<DistancePair>> names;
  for (std::size_t k = static_cast<std::size_t>(n) + 1; k < lines.size(); ++k) {
    const auto& [number, line] = lines[k];
    auto parts = tokens(line);
    if (parts.empty() || parts[0] != "labels:" || names) throw ParseError(number, "unexpected trailing content");
    names.emplace();
    for (std::size_t t = 1; t < parts.size(); ++t) names->push_back(parse_pair(parts[t], number));
    if (names->size() != static_cast<std::size_t>(d) + 1)
      throw ParseError(number, "expected " + std::to_string(d + 1) + " class labels");
  }
  try {
    return {RelationPartition(n, d, std::move(labels)), std::move(names)};
  } catch (const std::invalid_argument& e) {
    throw ParseError(lines[0].number, e.what());
  }
}

std::string format_scheme_file(const RelationPartition& partition,
                               const std::optional<std::vector<DistancePair>>& labels) {
  std::ostringstream out;
  const int n = partition.points();
  out << n << ' ' << partition.d() << '\n';
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) out << (y ? " " : "") << partition.label(x, y);
    out << '\n';
  }
  if (labels) {
    out << "labels:";
    for (auto p : *labels) out << ' ' << to_string(p);
    out << '\n';
  }
  return out.str();
}

Ordering parse_ordering(std::string_view text) {
  std::vector<int> classes;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = text.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    classes.push_back(to_int(item, 1));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Ordering(std::move(classes));
}

std::string format_profile(const PPolyProfile& p) {
  std::ostringstream out;
  out << "ordering: " << to_string(p.ordering.classes()) << '\n'
      << "g: " << p.girth << '\n'
      << "d: " << p.d << '\n'
      << "type: " << to_string(p.type) << '\n'
      << "stable: " << (p.stable ? "true" : "false") << '\n'
      << "k1: " << p.k1 << '\n'
      << "kg: " << p.kg << '\n'
      << "girth_le_8_expected: " << (p.k1 > p.kg + 1 ? "true" : "false") << '\n';
  return out.str();
}

std::string format_rejection(const PPolyRejection& r) {
  std::ostringstream out;
  out << "rejected: " << to_string(r.reason) << " i=" << r.i << " h=" << r.h << '\n';
  return out.str();
}

std::string format_menu(const std::vector<UnionCandidate>& menu) {
  std::ostringstream out;
  for (const auto& u : menu)
    out << "case=" << (u.case_tag ? to_string(*u.case_tag) : "none") << " positions=" << to_string(u.positions)
        << '\n';
  return out.str();
}

std::string format_violation(const SchemeViolation& v, const std::optional<std::vector<DistancePair>>& labels) {
  auto name = [&](int c) {
    return labels ? to_string((*labels)[static_cast<std::size_t>(c)]) : std::to_string(c);
  };
  auto pair = [](VertexPair p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; };
  auto constancy = [&](const ConstancyWitness& w) {
    return "h=" + name(w.h) + " i=" + name(w.i) + " j=" + name(w.j) + " pair_a=" + pair(w.first) +
           " count_a=" + std::to_string(w.count_first) + " pair_b=" + pair(w.second) +
           " count_b=" + std::to_string(w.count_second);
  };
  std::ostringstream out;
  out << "violation: " << (labels ? "not_weakly_distance_regular" : "not_a_scheme") << '\n';
  if (auto* t = std::get_if<TransposeWitness>(&v.first)) {
    out << "witness: transpose class=" << name(t->label) << " pair_a=" << pair(t->first)
        << " pair_b=" << pair(t->offender) << " reverse_a=" << name(t->expected_reverse)
        << " reverse_b=" << name(t->actual_reverse) << '\n';
  } else {
    out << "witness: constancy " << constancy(std::get<ConstancyWitness>(v.first)) << '\n';
  }
  for (const auto& w : v.constancy) out << "failure: " << constancy(w) << '\n';
  return out.str();
}

std::string format_enumeration(const UnionEnumeration& e) {
  std::ostringstream out;
  out << "FOUND\n";
  for (const auto& f : e.found) out << "positions=" << to_string(f) << '\n';
  out << "REJECTIONS\n";
  for (const auto& r : e.rejections) out << "positions=" << to_string(r.positions) << " reason=" << to_string(r.reason) << '\n';
  return out.str();
}

std::string format_report(const ClassificationReport& r) {
  std::ostringstream out;
  if (!r.scheme_id.empty()) out << "scheme: " << r.scheme_id << '\n';
  out << format_profile(r.profile);
  out << "FOUND\n";
  for (const auto& f : r.found) out << "positions=" << to_string(f) << '\n';
  out << "PREDICTED\n" << format_menu(r.predicted);
  out << "VERDICT\n" << to_string(r.verdict) << '\n';
  for (const auto& f : r.found_not_predicted) out << "found_not_predicted=" << to_string(f) << '\n';
  for (const auto& p : r.predicted_not_found) out << "predicted_not_found=" << to_string(p) << '\n';
  out << "REJECTIONS\n";
  for (const auto& x : r.rejections) out << "positions=" << to_string(x.positions) << " reason=" << to_string(x.reason) << '\n';
  return out.str();
}

std::string format_lemmas(const LemmaReport& report) {
  std::ostringstream out;
  for (const auto& r : report.results) {
    out << "check=" << to_string(r.id) << " status=" << to_string(r.status);
    if (r.witness) out << " witness_i=" << *r.witness;
    out << " condition=\"" << formula(r.id) << "\"\n";
  }
  return out.str();
}

}  // namespace wdrd
