#include "wdrd/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "wdrd/io.hpp"

namespace wdrd {

namespace {

struct Settings {
  std::string input = "-";
  std::string output = "-";
  std::string ordering;
  int max_d = 24;
  int jobs = 0;
  std::vector<std::string> generate_args;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open output '" + path + "'");
  file << text;
}

/// A digraph file has a one-token header, a scheme file a two-token one.
bool looks_like_digraph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::string w;
    int count = 0;
    while (words >> w) ++count;
    if (count > 0) return count == 1;
  }
  return true;
}

Digraph checked_digraph(const std::string& text) {
  Digraph g = parse_digraph(text);
  if (!is_strongly_connected(g)) throw UsageError("input digraph is not strongly connected");
  if (is_undirected(g)) throw UsageError("input digraph is undirected (arc relation is symmetric)");
  return g;
}

/// Loaded scheme or the reason there is none (already formatted).
struct LoadedScheme {
  std::optional<AssociationScheme> scheme;
  std::optional<std::vector<DistancePair>> labels;
  std::string failure;
};

LoadedScheme load_scheme(const std::string& text, const Settings& s) {
  BuildOptions options;
  options.jobs = s.jobs;
  if (looks_like_digraph(text)) {
    auto result = attached_scheme(checked_digraph(text), options);
    if (auto* ok = std::get_if<AttachedScheme>(&result)) return {std::move(ok->scheme), std::move(ok->labels), {}};
    auto& bad = std::get<WdrdViolation>(result);
    return {std::nullopt, bad.labels, format_violation(bad.violation, bad.labels)};
  }
  auto file = parse_scheme_file(text);
  auto result = build_scheme(file.partition, options);
  if (auto* ok = std::get_if<AssociationScheme>(&result)) return {std::move(*ok), std::move(file.labels), {}};
  return {std::nullopt, file.labels, format_violation(std::get<SchemeViolation>(result), file.labels)};
}

/// The --ordering flag, or else the first discovered P-polynomial ordering.
std::optional<Ordering> choose_ordering(const AssociationScheme& scheme, const Settings& s) {
  if (!s.ordering.empty()) return parse_ordering(s.ordering);
  auto found = find_p_poly_orderings(scheme, s.jobs);
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::string cmd_generate(const Settings& s) {
  const auto& a = s.generate_args;
  if (a.empty()) throw UsageError("generate needs a family: cycle N | circulant N s1,s2,.. | lexprod M complete|empty | transpose");
  auto number = [](const std::string& t) {
    try {
      std::size_t used = 0;
      int v = std::stoi(t, &used);
      if (used != t.size()) throw UsageError("not an integer: " + t);
      return v;
    } catch (const std::logic_error&) {
      throw UsageError("not an integer: " + t);
    }
  };
  if (a[0] == "cycle" && a.size() == 2) return format_digraph(directed_cycle(number(a[1])));
  if (a[0] == "circulant" && a.size() == 3) {
    std::vector<int> steps;
    std::stringstream list(a[2]);
    for (std::string item; std::getline(list, item, ',');) steps.push_back(number(item));
    return format_digraph(circulant(number(a[1]), steps));
  }
  if (a[0] == "lexprod" && a.size() == 3) {
    FiberKind kind;
    if (a[2] == "complete") kind = FiberKind::complete;
    else if (a[2] == "empty") kind = FiberKind::empty;
    else throw UsageError("fiber kind must be 'complete' or 'empty'");
    return format_digraph(lex_product(parse_digraph(read_input(s.input)), number(a[1]), kind));
  }
  if (a[0] == "transpose" && a.size() == 1) return format_digraph(transpose(parse_digraph(read_input(s.input))));
  throw UsageError("unknown generate form");
}

std::string cmd_attached(const Settings& s) {
  BuildOptions options;
  options.jobs = s.jobs;
  auto result = attached_scheme(checked_digraph(read_input(s.input)), options);
  if (auto* ok = std::get_if<AttachedScheme>(&result)) return format_scheme_file(ok->scheme.partition(), ok->labels);
  auto& bad = std::get<WdrdViolation>(result);
  return format_violation(bad.violation, bad.labels);
}

std::string cmd_check_scheme(const Settings& s) {
  auto loaded = load_scheme(read_input(s.input), s);
  if (!loaded.scheme) return loaded.failure;
  const auto& scheme = *loaded.scheme;
  std::ostringstream out;
  out << "scheme: valid\n"
      << "n: " << scheme.points() << '\n'
      << "d: " << scheme.d() << '\n'
      << "commutative: " << (is_commutative(scheme) ? "true" : "false") << '\n';
  out << "valencies:";
  for (int i = 0; i <= scheme.d(); ++i) out << ' ' << scheme.valency(i);
  out << "\nstar:";
  for (int i = 0; i <= scheme.d(); ++i) out << ' ' << scheme.star(i);
  out << '\n';
  auto consistency = check_consistency(scheme);
  if (consistency.holds) {
    out << "consistency: holds\n";
  } else {
    out << "consistency: violated identity=" << consistency.identity << " indices=";
    for (std::size_t k = 0; k < consistency.indices.size(); ++k) out << (k ? "," : "") << consistency.indices[k];
    out << " lhs=" << consistency.lhs << " rhs=" << consistency.rhs << '\n';
  }
  return out.str();
}

std::string cmd_check_ppoly(const Settings& s) {
  auto loaded = load_scheme(read_input(s.input), s);
  if (!loaded.scheme) return loaded.failure;
  const auto& scheme = *loaded.scheme;
  std::ostringstream out;
  auto describe = [&](const Ordering& o) {
    auto result = is_p_polynomial(scheme, o);
    auto oracle = matrix_oracle(scheme, o);
    if (auto* p = std::get_if<PPolyProfile>(&result)) {
      out << format_profile(*p);
    } else {
      out << "ordering: " << to_string(o.classes()) << '\n' << format_rejection(std::get<PPolyRejection>(result));
    }
    out << "oracle: " << (oracle.accept ? "accept" : "reject") << '\n';
    if (oracle.polys)
      for (int i = 0; i < oracle.polys->count(); ++i) out << "v" << i << ": " << oracle.polys->to_string(i) << '\n';
  };
  if (!s.ordering.empty()) {
    describe(parse_ordering(s.ordering));
    return out.str();
  }
  auto search = search_p_poly_orderings(scheme, s.jobs);
  out << "orderings: " << search.orderings.size() << '\n';
  for (const auto& b : search.ambiguous) {
    out << "ambiguous_branch: first=" << b.first_class << " position=" << b.position << " candidates=";
    out << to_string(b.candidates) << '\n';
  }
  for (const auto& o : search.orderings) {
    out << '\n';
    describe(o);
  }
  return out.str();
}

template <typename Body>
std::string with_ppoly(const Settings& s, Body&& body) {
  auto loaded = load_scheme(read_input(s.input), s);
  if (!loaded.scheme) return loaded.failure;
  auto ordering = choose_ordering(*loaded.scheme, s);
  if (!ordering) return "rejected: no P-polynomial ordering\n";
  auto checked = is_p_polynomial(*loaded.scheme, *ordering);
  if (auto* r = std::get_if<PPolyRejection>(&checked))
    return "ordering: " + to_string(ordering->classes()) + "\n" + format_rejection(*r);
  return body(*loaded.scheme, *ordering, std::get<PPolyProfile>(checked));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weakly distance-regular digraph and P-polynomial scheme toolkit", "wdrd"};
  app.require_subcommand(1, 1);
  Settings s;

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("-i,--input", s.input, "Input file ('-' for stdin)");
    sub->add_option("-o,--output", s.output, "Output file ('-' for stdout)");
    sub->add_option("--jobs", s.jobs, "Worker threads (0 = available parallelism)")->check(CLI::NonNegativeNumber);
  };
  auto add_ordering = [&](CLI::App* sub) {
    sub->add_option("--ordering", s.ordering, "Classes of R_1..R_d, comma-separated");
  };

  auto* generate = app.add_subcommand("generate", "Emit a digraph file");
  add_io(generate);
  generate->add_option("family", s.generate_args, "cycle N | circulant N s1,s2,.. | lexprod M complete|empty | transpose")
      ->required();
  auto* attached = app.add_subcommand("attached", "Attached scheme of a digraph, or a violation witness");
  add_io(attached);
  auto* check_scheme = app.add_subcommand("check-scheme", "Validate a scheme file and its intersection numbers");
  add_io(check_scheme);
  auto* check_ppoly = app.add_subcommand("check-ppoly", "P-polynomial profile for an ordering, or all orderings");
  add_io(check_ppoly);
  add_ordering(check_ppoly);
  auto* enumerate = app.add_subcommand("enumerate-unions", "All weakly distance-regular relation unions");
  add_io(enumerate);
  add_ordering(enumerate);
  enumerate->add_option("--max-d", s.max_d, "Enumeration cap on d");
  auto* verify = app.add_subcommand("verify-theorem", "Compare enumerated unions with the predicted menu");
  add_io(verify);
  add_ordering(verify);
  verify->add_option("--max-d", s.max_d, "Enumeration cap on d");
  auto* lemmas = app.add_subcommand("check-lemmas", "Evaluate the intersection-number inequalities");
  add_io(lemmas);
  add_ordering(lemmas);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    EnumerateOptions eopts;
    eopts.max_d = s.max_d;
    eopts.jobs = s.jobs;
    std::string text;
    if (generate->parsed()) {
      text = cmd_generate(s);
    } else if (attached->parsed()) {
      text = cmd_attached(s);
    } else if (check_scheme->parsed()) {
      text = cmd_check_scheme(s);
    } else if (check_ppoly->parsed()) {
      text = cmd_check_ppoly(s);
    } else if (enumerate->parsed()) {
      text = with_ppoly(s, [&](const AssociationScheme& sc, const Ordering& o, const PPolyProfile&) {
        return "ordering: " + to_string(o.classes()) + "\n" + format_enumeration(enumerate_valid_unions(sc, o, eopts));
      });
    } else if (verify->parsed()) {
      text = with_ppoly(s, [&](const AssociationScheme& sc, const Ordering& o, const PPolyProfile&) {
        return format_report(verify_theorem(sc, o, eopts, s.input == "-" ? "stdin" : s.input));
      });
    } else if (lemmas->parsed()) {
      text = with_ppoly(s, [&](const AssociationScheme& sc, const Ordering&, const PPolyProfile& p) {
        return format_lemmas(check_lemmas(sc, p));
      });
    }
    write_output(s.output, text, out);
    return 0;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace wdrd
