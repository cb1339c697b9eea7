#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include "mis/agreement.hpp"
#include "mis/enumeration.hpp"
#include "mis/ir/index.hpp"
#include "mis/ir/query.hpp"
#include "mis/ir/ranking.hpp"

namespace mis::cli {

namespace {

// Raised for bad flag values detected after CLI11 has accepted the syntax.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct IndexArgs {
  std::vector<std::string> paths;
  std::string output;
};

int run_index(const IndexArgs& a, std::ostream& out) {
  std::vector<std::pair<std::string, std::string>> docs;
  for (const auto& p : a.paths) {
    docs.emplace_back(std::filesystem::path(p).filename().string(), read_file(p));
  }
  const auto index = ir::build_index(docs);
  std::ofstream file(a.output, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + a.output);
  index.write_jsonl(file);
  file.close();
  if (!file) throw std::runtime_error("failed writing " + a.output);
  out << "indexed " << index.size() << (index.size() == 1 ? " document" : " documents") << '\n';
  return kExitOk;
}

struct QueryArgs {
  std::string index_path;
  std::string query;
  std::optional<std::size_t> snippets;
  bool score = false;
  std::optional<std::string> doc;
};

int run_query(const QueryArgs& a, std::ostream& out) {
  std::ifstream in(a.index_path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + a.index_path);
  const auto index = ir::PositionalIndex::read_jsonl(in);
  if (a.doc && !index.contains(*a.doc)) throw std::runtime_error("unknown document " + *a.doc);

  for (const auto& r : ir::search(index, a.query, a.snippets.value_or(0))) {
    if (a.doc && r.doc_id != *a.doc) continue;
    out << r.doc_id;
    if (a.score) out << '\t' << ir::format_score(r.score);
    if (a.snippets) {
      out << '\t';
      const char* sep = "";
      for (const auto& iv : r.snippets) {
        out << sep << iv;
        sep = " ";
      }
    }
    out << '\n';
  }
  return kExitOk;
}

struct EnumArgs {
  Position n = 0;
  bool count = false;
  bool levels = false;
  bool width = false;
  bool list = false;
};

int run_enum(const EnumArgs& a, std::ostream& out) {
  if (a.n < 0) throw UsageError("--n must be non-negative");
  const int modes = a.count + a.levels + a.width + a.list;
  if (modes > 1) throw UsageError("choose one of --count, --levels, --width, --list");
  if (a.levels) {
    if (a.n < 1) throw UsageError("--levels needs --n >= 1");
    const auto profile = level_profile(a.n);
    for (std::size_t r = 0; r < profile.counts_by_rank.size(); ++r) {
      out << r << ':' << profile.counts_by_rank[r] << '\n';
    }
  } else if (a.width) {
    out << width(a.n) << '\n';
  } else if (a.list) {
    enumerate_all(a.n, [&](const Antichain& x) { out << x << '\n'; });
  } else {
    out << cardinality(a.n) << '\n';
  }
  return kExitOk;
}

struct CheckArgs {
  Position n = 4;
  std::string ops = "all";
  std::optional<std::uint64_t> samples;
};

std::vector<CheckedOp> parse_ops(const std::string& list) {
  if (list == "all") return all_checked_ops();
  std::vector<CheckedOp> ops;
  std::stringstream in(list);
  for (std::string name; std::getline(in, name, ',');) {
    const auto op = parse_checked_op(name);
    if (!op) throw UsageError("unknown operator '" + name + "'");
    if (std::find(ops.begin(), ops.end(), *op) == ops.end()) ops.push_back(*op);
  }
  if (ops.empty()) throw UsageError("--ops is empty");
  return ops;
}

int run_check(const CheckArgs& a, std::ostream& out) {
  CheckOptions options;
  options.n = a.n;
  options.ops = parse_ops(a.ops);
  options.samples = a.samples;
  if (a.n < 1) throw UsageError("--n must be positive");

  bool ok = true;
  for (const auto& report : check_agreement(options)) {
    out << to_string(report.op) << ": " << (report.passed() ? "pass" : "fail") << " ("
        << report.cases << " cases, " << report.mismatches << " mismatches)\n";
    if (!report.passed()) {
      out << "  first mismatch: " << report.first_mismatch << '\n';
      ok = false;
    }
  }
  out << (ok ? "OK" : "FAIL") << '\n';
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimal-interval semantics: lattice operators, enumeration and search"};
  app.name("mis");
  app.require_subcommand(1);

  IndexArgs index_args;
  auto* index = app.add_subcommand("index", "Tokenize text files into a JSON-lines index");
  index->add_option("paths", index_args.paths, "Text files, one document each")->required();
  index->add_option("-o,--output", index_args.output, "Index file to write")->required();

  QueryArgs query_args;
  auto* query = app.add_subcommand("query", "Evaluate a query against an index");
  query->add_option("index", query_args.index_path, "Index file")->required();
  query->add_option("--q", query_args.query, "Query text")->required();
  query->add_option("--snippets", query_args.snippets, "Print up to K snippets per document");
  query->add_flag("--score", query_args.score, "Print the score of each document");
  query->add_option("--doc", query_args.doc, "Restrict output to one document");

  EnumArgs enum_args;
  auto* enumerate = app.add_subcommand("enum", "Enumerate the lattice over {0..n-1}");
  enumerate->add_option("--n", enum_args.n, "Universe size")->required();
  enumerate->add_flag("--count", enum_args.count, "Print the number of elements (default)");
  enumerate->add_flag("--levels", enum_args.levels, "Print rank:count for every rank");
  enumerate->add_flag("--width", enum_args.width, "Print the size of a largest antichain");
  enumerate->add_flag("--list", enum_args.list, "Print every element in generation order");

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Compare closed forms against the brute-force oracle");
  check->add_option("--n", check_args.n, "Universe size");
  check->add_option("--ops", check_args.ops, "Comma-separated operators, or all");
  check->add_option("--samples", check_args.samples, "Random pairs instead of all pairs");

  std::vector<const char*> argv{"mis"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  try {
    if (chosen == index) return run_index(index_args, out);
    if (chosen == query) return run_query(query_args, out);
    if (chosen == enumerate) return run_enum(enum_args, out);
    return run_check(check_args, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << chosen->help();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace mis::cli
