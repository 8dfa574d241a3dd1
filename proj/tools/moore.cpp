// moore: bounds, enumeration and verification for totally regular mixed graphs.
//
// Exit codes: 0 success, 1 `iso` found the graphs non-isomorphic, 2 bad
// arguments, 3 closed form requested for degenerate parameters, 4 search
// order cap exceeded, 5 unreadable or invalid MGF input.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mixedmoore/bounds.hpp"
#include "mixedmoore/canonical.hpp"
#include "mixedmoore/constructions.hpp"
#include "mixedmoore/mgf.hpp"
#include "mixedmoore/mixed_graph.hpp"
#include "mixedmoore/search.hpp"
#include "mixedmoore/spectral.hpp"
#include "mixedmoore/walks.hpp"

namespace mm = mixedmoore;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotIsomorphic = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitCap = 4;
constexpr int kExitFormat = 5;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

mm::MixedGraph load(const std::string& path) {
  try {
    return mm::read_mgf(path);
  } catch (const mm::MgfFormatError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const mm::GraphError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw InputError(e.what());
  }
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

nlohmann::json big_json(const mm::BigInt& value) {
  if (value >= std::numeric_limits<long long>::min() &&
      value <= std::numeric_limits<long long>::max()) {
    return static_cast<long long>(value);
  }
  return value.str();
}

std::string rule_list(const std::vector<std::string>& rules) {
  std::string out = "[";
  for (std::size_t i = 0; i < rules.size(); ++i) out += (i ? "," : "") + rules[i];
  return out + "]";
}

// ---------------------------------------------------------------- bound

struct BoundArgs {
  int r = 0;
  int z = 0;
  int k = 0;
  bool improved = false;
  bool closed_form = false;
  bool json = false;
};

int run_bound(const BoundArgs& a) {
  const mm::DegreePair dp{a.r, a.z};
  mm::validate(dp);
  const mm::BoundReport report = mm::improved_bound(dp, a.k);
  double closed = 0;
  if (a.closed_form) {
    try {
      closed = mm::moore_bound_closed_form(dp, a.k);
    } catch (const mm::DegenerateParameters& e) {
      std::cerr << "degenerate parameters: " << e.what() << "\n";
      return kExitDegenerate;
    }
  }
  if (a.json) {
    nlohmann::json j{{"r", a.r}, {"z", a.z}, {"k", a.k}, {"moore", big_json(report.moore)}};
    if (a.improved) {
      j["improved"] = big_json(report.improved);
      j["parity_applied"] = report.parity_applied;
      j["rules"] = report.rule_trace;
    }
    if (a.closed_form) j["closed_form"] = closed;
    std::cout << j.dump() << "\n";
    return kExitOk;
  }
  std::cout << "M=" << report.moore;
  if (a.improved) {
    std::cout << " improved=" << report.improved << " rules=" << rule_list(report.rule_trace);
  }
  if (a.closed_form) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", closed);
    std::cout << " closed_form=" << buf;
  }
  std::cout << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- table

int run_table(int d_max, int k_max, const std::string& format) {
  const mm::MooreTable table = mm::moore_table(d_max, k_max);
  if (format == "csv") {
    std::cout << "d,z,r,k,M\n";
    for (const auto& e : table.entries()) {
      std::cout << e.d << ',' << e.z << ',' << e.r << ',' << e.k << ',' << e.bound << "\n";
    }
    return kExitOk;
  }
  // Rows by degree d (one line per z), columns by diameter k.
  std::ostringstream header;
  header << " d  z  r |";
  for (int k = 1; k <= k_max; ++k) {
    std::string label = "k=" + std::to_string(k);
    header << std::string(std::max<std::size_t>(1, 10 - label.size()), ' ') << label;
  }
  std::cout << header.str() << "\n";
  std::cout << std::string(header.str().size(), '-') << "\n";
  for (int d = 1; d <= d_max; ++d) {
    for (int z = 0; z <= d; ++z) {
      char lead[64];
      std::snprintf(lead, sizeof lead, "%2d %2d %2d |", d, z, d - z);
      std::cout << lead;
      for (int k = 1; k <= k_max; ++k) {
        const std::string cell = table.at(d, z, k).str();
        std::cout << std::string(std::max<std::size_t>(1, 10 - cell.size()), ' ') << cell;
      }
      std::cout << "\n";
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- search

struct SearchArgs {
  int r = 1;
  int z = 1;
  int k = 3;
  int n = 10;
  std::string mode = "exact";
  bool count_only = false;
  int jobs = 1;
  std::string out;
};

int run_search(const SearchArgs& a) {
  mm::SearchSpec spec;
  spec.dp = {a.r, a.z};
  spec.k = a.k;
  spec.n = a.n;
  spec.mode = a.mode == "exact" ? mm::DiameterMode::Exact : mm::DiameterMode::AtMost;
  spec.count_only = a.count_only;
  spec.jobs = a.jobs;
  spec.cap = mm::search_cap_from_env();

  mm::SearchResult result;
  try {
    result = mm::enumerate(spec);
  } catch (const mm::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  }

  std::cout << "classes=" << result.class_count << "\n";
  if (result.infeasible_reason) std::cout << "infeasible: " << *result.infeasible_reason << "\n";
  std::cout << "skeletons=" << result.skeletons << " nodes=" << result.counters.nodes
            << " leaves=" << result.counters.leaves << "\n";
  for (const auto& [rule, count] : result.counters.pruned) {
    std::cout << "pruned." << rule << "=" << count << "\n";
  }
  if (!a.out.empty()) {
    std::filesystem::create_directories(a.out);
    if (!a.count_only) {
      for (const auto& path : mm::write_classes(spec, result, a.out)) {
        std::cout << "wrote " << path.string() << "\n";
      }
    }
    const std::string log_name = std::to_string(a.r) + "_" + std::to_string(a.z) + "_k" +
                                 std::to_string(a.k) + "_n" + std::to_string(a.n) + "_log.jsonl";
    emit(mm::run_log_jsonl(spec, result), (std::filesystem::path(a.out) / log_name).string());
  }
  std::cerr << "wall_time=" << result.wall_time.count() << "s\n";
  return kExitOk;
}

// ---------------------------------------------------------------- verify

int run_verify(const std::string& file, int k) {
  const mm::MixedGraph g = load(file);
  const auto regular = mm::total_regularity(g);
  const auto diam = mm::diameter(g);

  mm::BigInt min_rep = -1;
  mm::BigInt max_rep = -1;
  std::string per_vertex;
  for (mm::Vertex u = 0; u < g.order(); ++u) {
    const mm::BigInt total = mm::repeat_multiset(g, u, k).total;
    if (min_rep < 0 || total < min_rep) min_rep = total;
    if (total > max_rep) max_rep = total;
    per_vertex += (u ? " " : "") + total.str();
  }

  std::cout << "regular=";
  if (regular) {
    std::cout << "(" << regular->r << "," << regular->z << ")";
  } else {
    std::cout << "none";
  }
  std::cout << " diameter=" << (diam ? std::to_string(*diam) : "inf");
  std::cout << " min_rep=" << (g.order() ? min_rep.str() : "n/a");
  std::cout << " slack=";
  if (regular && g.order() > 0) {
    // Tightest per-vertex bound n <= M - |Rep(u)|.
    std::cout << (mm::moore_bound(*regular, k) - max_rep - g.order());
  } else {
    std::cout << "n/a";
  }
  std::cout << "\n";
  std::cout << "rep=" << per_vertex << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- construct

mm::MixedGraph construct(const std::string& name, int n) {
  if (name == "cycle") return mm::cycle(n, false);
  if (name == "directed-cycle") return mm::cycle(n, true);
  if (name == "line-digraph-cycle") return mm::line_digraph_of_cycle_digons(n);
  if (name == "cayley-dihedral") return mm::cayley_dihedral(n);
  throw std::invalid_argument("unknown construction '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Moore-like bounds and extremal (r,z)-regular mixed graphs"};
  app.require_subcommand(1);

  BoundArgs bound;
  auto* bound_cmd = app.add_subcommand("bound", "Moore bound M(r,z,k) and its refinements");
  bound_cmd->add_option("-r", bound.r, "undirected degree")->required()->check(CLI::NonNegativeNumber);
  bound_cmd->add_option("-z", bound.z, "directed degree")->required()->check(CLI::NonNegativeNumber);
  bound_cmd->add_option("-k", bound.k, "diameter")->required()->check(CLI::NonNegativeNumber);
  bound_cmd->add_flag("--improved", bound.improved, "apply the diameter >= 3 and parity refinements");
  bound_cmd->add_flag("--closed-form", bound.closed_form, "also evaluate the irrational closed form");
  bound_cmd->add_flag("--json", bound.json, "emit JSON");

  int d_max = 5;
  int k_max = 5;
  std::string format = "text";
  auto* table_cmd = app.add_subcommand("table", "table of M(d - z, z, k)");
  table_cmd->add_option("--dmax", d_max, "largest total degree")->check(CLI::PositiveNumber);
  table_cmd->add_option("--kmax", k_max, "largest diameter")->check(CLI::PositiveNumber);
  table_cmd->add_option("--format", format, "text or csv")->check(CLI::IsMember({"text", "csv"}));

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "enumerate (r,z)-regular mixed graphs up to isomorphism");
  search_cmd->add_option("-r", search.r, "undirected degree")->required()->check(CLI::NonNegativeNumber);
  search_cmd->add_option("-z", search.z, "directed degree")->required()->check(CLI::NonNegativeNumber);
  search_cmd->add_option("-k", search.k, "diameter")->required()->check(CLI::NonNegativeNumber);
  search_cmd->add_option("-n", search.n, "order")->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--mode", search.mode, "exact or at-most")
      ->check(CLI::IsMember({"exact", "at-most"}));
  search_cmd->add_flag("--count-only", search.count_only, "count classes without writing files");
  search_cmd->add_option("--jobs", search.jobs, "worker threads")->check(CLI::PositiveNumber);
  search_cmd->add_option("--out", search.out, "directory for MGF files and the run log");

  std::string verify_file;
  int verify_k = 3;
  auto* verify_cmd = app.add_subcommand("verify", "regularity, diameter and repeats of an MGF graph");
  verify_cmd->add_option("file", verify_file, "MGF file")->required();
  verify_cmd->add_option("-k", verify_k, "walk radius")->required()->check(CLI::NonNegativeNumber);

  std::string spectrum_file;
  bool factor = false;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "characteristic polynomial coefficients");
  spectrum_cmd->add_option("file", spectrum_file, "MGF file")->required();
  spectrum_cmd->add_flag("--factor", factor, "also print integer factors of degree <= 2");

  std::string iso_a;
  std::string iso_b;
  auto* iso_cmd = app.add_subcommand("iso", "exit 0 if the two graphs are isomorphic, 1 otherwise");
  iso_cmd->add_option("first", iso_a, "MGF file")->required();
  iso_cmd->add_option("second", iso_b, "MGF file")->required();

  std::string converse_file;
  std::string converse_out;
  auto* converse_cmd = app.add_subcommand("converse", "reverse every arc");
  converse_cmd->add_option("file", converse_file, "MGF file")->required();
  converse_cmd->add_option("-o,--output", converse_out, "write here instead of stdout");

  std::string construct_name;
  int construct_n = 5;
  std::string construct_out;
  auto* construct_cmd = app.add_subcommand("construct", "named constructions");
  construct_cmd
      ->add_option("name", construct_name,
                   "cycle | directed-cycle | line-digraph-cycle | cayley-dihedral")
      ->required()
      ->check(CLI::IsMember({"cycle", "directed-cycle", "line-digraph-cycle", "cayley-dihedral"}));
  construct_cmd->add_option("n", construct_n, "size parameter")->required()->check(CLI::PositiveNumber);
  construct_cmd->add_option("-o,--output", construct_out, "write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*bound_cmd) return run_bound(bound);
    if (*table_cmd) return run_table(d_max, k_max, format);
    if (*search_cmd) return run_search(search);
    if (*verify_cmd) return run_verify(verify_file, verify_k);
    if (*spectrum_cmd) {
      const mm::CharPoly p = mm::char_poly(load(spectrum_file));
      std::cout << mm::coefficient_line(p) << "\n";
      if (factor) std::cout << mm::to_string(mm::factor_low_degree(p)) << "\n";
      return kExitOk;
    }
    if (*iso_cmd) {
      const bool same = mm::is_isomorphic(load(iso_a), load(iso_b));
      std::cout << (same ? "isomorphic" : "not isomorphic") << "\n";
      return same ? kExitOk : kExitNotIsomorphic;
    }
    if (*converse_cmd) {
      emit(mm::to_mgf(mm::converse(load(converse_file))), converse_out);
      return kExitOk;
    }
    if (*construct_cmd) {
      emit(mm::to_mgf(construct(construct_name, construct_n)), construct_out);
      return kExitOk;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFormat;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
