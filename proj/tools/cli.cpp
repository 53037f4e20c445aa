#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "icolor/coloring_json.hpp"
#include "icolor/constructor.hpp"
#include "icolor/error.hpp"
#include "icolor/obstruction.hpp"
#include "icolor/oracle.hpp"
#include "icolor/survey.hpp"
#include "icolor/verifier.hpp"

namespace icolor::cli {

namespace {

struct ColorArgs {
  int m = 0;
  int n = 0;
  std::string out_path;
  bool human = false;
};

struct VerifyArgs {
  std::string in_path;
  bool human = false;
};

struct BudgetArgs {
  std::optional<std::uint64_t> node_limit;
  std::size_t edge_limit = kDefaultEdgeLimit;
  bool no_reflection = false;

  SearchOptions options() const {
    SearchOptions o;
    o.node_limit = node_limit ? *node_limit : node_limit_from_env();
    o.edge_limit = edge_limit;
    o.reflection = !no_reflection;
    return o;
  }
};

struct SearchArgs {
  std::string parts;
  std::optional<int> t;
  bool t_range = false;
  std::string witness_path;
  BudgetArgs budget;
  bool human = false;
};

struct SurveyArgs {
  std::string mode;
  std::optional<int> max;
  std::optional<int> max_m;
  std::optional<int> max_n;
  int max_total = 9;
  int oracle_max_vertices = 8;
  unsigned jobs = 1;
  std::string out_path;
  bool resume = false;
  BudgetArgs budget;
  bool human = false;
};

struct DotArgs {
  int m = 0;
  int n = 0;
  std::string out_path;
  bool matching = false;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot open " + path + " for writing");
  f << content;
  if (!f) throw Error("failed writing " + path);
}

std::vector<int> parse_parts(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InvalidPartSizes("part sizes must be comma-separated integers, got \"" + text + "\"");
    }
    if (used != item.size()) {
      throw InvalidPartSizes("part sizes must be comma-separated integers, got \"" + text + "\"");
    }
    parts.push_back(value);
  }
  return parts;
}

int cmd_color(const ColorArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const EdgeColoring coloring = extend_to_k1mn(args.m, args.n);
    const std::string doc = format_coloring(coloring);
    if (args.out_path.empty()) {
      out << doc;
      err << "t=" << coloring.t() << "\n";
    } else {
      write_file(args.out_path, doc);
      out << "t=" << coloring.t() << "\n";
    }
    if (args.human) {
      out << "star colors at w for K_{1," << args.m << "," << args.n << "}\n";
      for (int i = 0; i < args.m; ++i) {
        out << "  u" << std::left << std::setw(6) << i << coloring.color(k1mn_w(), k1mn_u(i)) << "\n";
      }
      for (int j = 0; j < args.n; ++j) {
        out << "  v" << std::left << std::setw(6) << j << coloring.color(k1mn_w(), k1mn_v(j)) << "\n";
      }
    }
    return kExitOk;
  } catch (const NotColorable& e) {
    err << to_json(e.certificate()).dump() << "\n";
    return kExitImpossible;
  }
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  std::ifstream in(args.in_path);
  if (!in) {
    err << "error: cannot open " << args.in_path << "\n";
    return kExitUsage;
  }
  const EdgeColoring coloring = read_coloring(in);
  const VerifyReport report = verify(coloring);
  out << to_json(report).dump(2) << "\n";
  if (args.human) {
    out << (report.valid() ? "valid" : "INVALID") << " interval " << coloring.t()
        << "-coloring of K_{";
    const auto& sizes = coloring.graph().part_sizes();
    for (std::size_t i = 0; i < sizes.size(); ++i) out << (i ? "," : "") << sizes[i];
    out << "}\n";
    for (const auto& v : report.violations) {
      out << "  " << std::left << std::setw(22) << to_string(v.kind) << v.detail << "\n";
    }
  }
  return report.valid() ? kExitOk : kExitImpossible;
}

nlohmann::json verdict_json(int t, std::optional<bool> exists, std::uint64_t nodes) {
  return {{"t", t},
          {"exists", exists ? nlohmann::json(*exists) : nlohmann::json(nullptr)},
          {"nodes", nodes}};
}

int cmd_search(const SearchArgs& args, std::ostream& out, std::ostream& err) {
  auto graph = build_graph(parse_parts(args.parts));
  const SearchOptions options = args.budget.options();

  int t_lo = 0;
  int t_hi = 0;
  if (args.t && !args.t_range) {
    t_lo = t_hi = *args.t;
  } else {
    if (graph->vertex_count() < 3) {
      throw PreconditionError("the t range needs at least 3 vertices");
    }
    t_lo = graph->max_degree();
    t_hi = 2 * graph->vertex_count() - 4;
  }

  nlohmann::json verdicts = nlohmann::json::array();
  std::optional<EdgeColoring> witness;
  std::vector<int> feasible;
  bool complete = true;
  for (int t = t_lo; t <= t_hi; ++t) {
    try {
      SearchOutcome outcome = search(graph, t, options);
      verdicts.push_back(verdict_json(t, outcome.exists, outcome.nodes_explored));
      if (outcome.exists) {
        feasible.push_back(t);
        if (!witness) witness = std::move(outcome.witness);
      }
    } catch (const ResourceLimit& e) {
      complete = false;
      verdicts.push_back(verdict_json(t, std::nullopt, 0));
      err << "t=" << t << ": " << e.what() << "\n";
    }
  }

  nlohmann::json result;
  result["part_sizes"] = graph->part_sizes();
  result["verdicts"] = verdicts;
  result["complete"] = complete;
  if (!feasible.empty()) {
    result["colorable"] = true;
  } else {
    result["colorable"] = complete ? nlohmann::json(false) : nlohmann::json(nullptr);
  }
  const bool full_range = !(args.t && !args.t_range);
  if (full_range && complete && !feasible.empty()) {
    result["w"] = feasible.front();
    result["W"] = feasible.back();
  } else {
    result["w"] = nullptr;
    result["W"] = nullptr;
  }
  out << result.dump(2) << "\n";

  if (args.human) {
    out << "   t  verdict\n";
    for (const auto& v : verdicts) {
      const auto& e = v.at("exists");
      out << std::right << std::setw(4) << v.at("t").get<int>() << "  "
          << (e.is_null() ? "budget exceeded" : e.get<bool>() ? "yes" : "no") << "\n";
    }
  }

  if (!args.witness_path.empty() && witness) {
    write_file(args.witness_path, format_coloring(*witness));
  }
  if (!complete) return kExitBudget;
  return feasible.empty() ? kExitImpossible : kExitOk;
}

int cmd_survey(const SurveyArgs& args, std::ostream& out, std::ostream& err) {
  SurveyOptions options;
  options.oracle_max_vertices = args.oracle_max_vertices;
  options.search = args.budget.options();
  options.jobs = std::max(1u, args.jobs);

  nlohmann::json limits;
  int max_m = 0;
  int max_n = 0;
  if (args.mode == "k1mn") {
    max_m = args.max_m.value_or(args.max.value_or(6));
    max_n = args.max_n.value_or(args.max.value_or(6));
    limits = {{"max_m", max_m}, {"max_n", max_n}};
  } else {
    limits = {{"max_total", args.max_total}};
  }
  const nlohmann::json manifest = survey_manifest(args.mode, limits, options);

  std::vector<SurveyRecord> records;
  std::optional<SurveyFile> file;
  SweepHooks hooks;
  if (!args.out_path.empty()) {
    file.emplace(args.out_path, manifest, args.resume);
    hooks = file->hooks();
  }

  try {
    if (args.mode == "k1mn") {
      records = sweep_k1mn(max_m, max_n, options, hooks);
    } else {
      records = sweep_kkmn(args.max_total, options, hooks);
    }
  } catch (const SurveyDisagreement& e) {
    err << "survey aborted: " << e.what() << "\n";
    return kExitUsage;
  }

  if (file) {
    file->finalize();
  } else {
    write_survey(out, manifest, records);
  }

  std::size_t flagged = 0;
  std::size_t unknown = 0;
  for (const auto& r : records) {
    if (r.flagged()) {
      ++flagged;
      err << "finding: K_{" << r.key() << "} disagrees with";
      for (const auto& [name, note] : r.conjectures) {
        if (note.status == Agreement::kDisagree) err << " " << name;
      }
      err << "\n";
    }
    if (!r.colorable) ++unknown;
  }
  err << records.size() << " records, " << flagged << " flagged, " << unknown
      << " resource-limited\n";

  if (args.human) {
    std::ostream& table = file ? out : err;
    table << std::left << std::setw(12) << "graph" << std::setw(14) << "method"
          << std::setw(11) << "colorable" << "feasible t / conjectures\n";
    for (const auto& r : records) {
      table << std::left << std::setw(12) << r.key() << std::setw(14) << to_string(r.method)
            << std::setw(11)
            << (r.colorable ? (*r.colorable ? "yes" : "no") : "unknown");
      for (int t : r.feasible_t()) table << t << " ";
      for (const auto& [name, note] : r.conjectures) {
        table << name << "=" << to_string(note.status) << " ";
      }
      table << "\n";
    }
  }
  return kExitOk;
}

int cmd_export_dot(const DotArgs& args, std::ostream& out) {
  const AuxiliaryGraph h = build_aux_graph(args.m, args.n);
  std::optional<Matching> matching;
  if (args.matching) {
    auto result = find_matching(h);
    if (auto* found = std::get_if<Matching>(&result)) matching = *found;
  }
  const std::string dot = aux_graph_to_dot(h, matching ? &*matching : nullptr);
  if (args.out_path.empty()) {
    out << dot;
  } else {
    write_file(args.out_path, dot);
  }
  return kExitOk;
}

void add_budget_flags(CLI::App* cmd, BudgetArgs& budget) {
  cmd->add_option("--node-limit", budget.node_limit,
                  "Search node budget per t (default: $ICOLOR_NODE_LIMIT or 1e8)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--edge-limit", budget.edge_limit, "Largest edge count the oracle accepts")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--no-reflection", budget.no_reflection,
                "Disable the c -> t+1-c symmetry reduction");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Interval edge-colorings of complete multipartite graphs", "icolor"};
  app.require_subcommand(1);

  ColorArgs color;
  auto* color_cmd = app.add_subcommand("color", "Interval (m+n)-coloring of K_{1,m,n}");
  color_cmd->add_option("m", color.m)->required()->check(CLI::PositiveNumber);
  color_cmd->add_option("n", color.n)->required()->check(CLI::PositiveNumber);
  color_cmd->add_option("-o,--out", color.out_path, "Write the coloring document here");
  color_cmd->add_flag("--human", color.human, "Also print the star colors as a table");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check a coloring document");
  verify_cmd->add_option("file", verify_args.in_path)->required();
  verify_cmd->add_flag("--human", verify_args.human, "Also print violations as text");

  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand("search", "Exhaustive search for interval t-colorings");
  search_cmd->add_option("parts", search_args.parts, "Part sizes, e.g. 1,1,2")->required();
  auto* t_opt = search_cmd->add_option("--t", search_args.t, "Search a single t")
                    ->check(CLI::PositiveNumber);
  search_cmd->add_flag("--t-range", search_args.t_range,
                       "Scan t from max degree to 2|V|-4 (default)")
      ->excludes(t_opt);
  search_cmd->add_option("--witness", search_args.witness_path,
                         "Write the smallest-t witness here");
  search_cmd->add_flag("--human", search_args.human, "Also print a verdict table");
  add_budget_flags(search_cmd, search_args.budget);

  SurveyArgs survey_args;
  auto* survey_cmd = app.add_subcommand("survey", "Sweep K_{1,m,n} or K_{k,m,n} families");
  survey_cmd->add_option("mode", survey_args.mode)
      ->required()
      ->check(CLI::IsMember({"k1mn", "kkmn"}));
  survey_cmd->add_option("--max", survey_args.max, "k1mn: bound for both m and n (default 6)")
      ->check(CLI::NonNegativeNumber);
  survey_cmd->add_option("--max-m", survey_args.max_m)->check(CLI::NonNegativeNumber);
  survey_cmd->add_option("--max-n", survey_args.max_n)->check(CLI::NonNegativeNumber);
  survey_cmd->add_option("--max-total", survey_args.max_total, "kkmn: bound on k+m+n")
      ->check(CLI::NonNegativeNumber);
  survey_cmd->add_option("--oracle-max-vertices", survey_args.oracle_max_vertices,
                         "k1mn: run the oracle when 1+m+n is at most this")
      ->check(CLI::NonNegativeNumber);
  survey_cmd->add_option("--jobs", survey_args.jobs, "Parallel instances")
      ->check(CLI::PositiveNumber);
  survey_cmd->add_option("-o,--out", survey_args.out_path, "JSONL output file");
  survey_cmd->add_flag("--resume", survey_args.resume,
                       "Keep records already in the output file and skip them");
  survey_cmd->add_flag("--human", survey_args.human, "Also print a summary table");
  add_budget_flags(survey_cmd, survey_args.budget);

  DotArgs dot_args;
  auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz drawing of the auxiliary graph H");
  dot_cmd->add_option("m", dot_args.m)->required()->check(CLI::PositiveNumber);
  dot_cmd->add_option("n", dot_args.n)->required()->check(CLI::PositiveNumber);
  dot_cmd->add_option("-o,--out", dot_args.out_path);
  dot_cmd->add_flag("--matching", dot_args.matching, "Draw the perfect matching in bold");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (color_cmd->parsed()) return cmd_color(color, out, err);
    if (verify_cmd->parsed()) return cmd_verify(verify_args, out, err);
    if (search_cmd->parsed()) return cmd_search(search_args, out, err);
    if (survey_cmd->parsed()) return cmd_survey(survey_args, out, err);
    if (dot_cmd->parsed()) return cmd_export_dot(dot_args, out);
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace icolor::cli
