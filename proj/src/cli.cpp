#include "augecc/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "augecc/enumerate.hpp"
#include "augecc/extremal.hpp"
#include "augecc/families.hpp"
#include "augecc/graph.hpp"
#include "augecc/graph_io.hpp"
#include "augecc/transforms.hpp"

namespace augecc::cli {
namespace {

const std::map<std::string, GraphFormat> kFormats{{"edgelist", GraphFormat::EdgeList},
                                                  {"graph6", GraphFormat::Graph6}};
const std::map<std::string, IndexKind> kIndices{{"aeci", IndexKind::Augmented},
                                                {"saeci", IndexKind::SuperAugmented}};
const std::map<std::string, GraphClass> kClasses{{"trees", GraphClass::AllTrees},
                                                 {"pm-trees", GraphClass::PmTrees},
                                                 {"graphs", GraphClass::ConnectedGraphs}};
const std::map<std::string, Direction> kDirections{{"decreasing", Direction::Decreasing},
                                                   {"increasing", Direction::Increasing},
                                                   {"pm-increasing", Direction::PmIncreasing}};

std::string read_input(const std::string &path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string value_line(const Rational &v) { return v.str() + " ≈ " + v.decimal(); }

void emit_graph(std::ostream &out, const Graph &g, const std::string &emit) {
  if (emit == "edges" || emit == "both")
    out << write_edge_list(g);
  if (emit == "graph6" || emit == "both")
    out << write_graph6(g) << '\n';
}

// Writes CSV to --out when given, else to stdout.
void write_csv(std::ostream &out, const std::string &path, const std::string &csv) {
  if (path.empty()) {
    out << csv;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f)
    throw Error("cannot write '" + path + "'");
  f << csv;
}

int default_threads() {
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Augmented eccentric connectivity index: exact values, extremal "
               "families, tree transformations and exhaustive verification",
               "augecc"};
  app.require_subcommand(1);

  std::string format_name = "edgelist", index_name = "aeci";
  std::string emit = "edges", out_path;
  int threads = default_threads();

  // compute
  auto *compute = app.add_subcommand("compute", "Index value of each input graph");
  std::string compute_file;
  compute->add_option("--index", index_name)->check(CLI::IsMember({"aeci", "saeci"}));
  compute->add_option("--format", format_name)->check(CLI::IsMember({"edgelist", "graph6"}));
  compute->add_option("file", compute_file, "Input file, - for stdin")->required();

  // family
  auto *family = app.add_subcommand("family", "Construct P_n, S_n, K_n or TB_{n,k}");
  std::string kind_name;
  int fam_n = 0, fam_k = 0;
  family->add_option("--kind", kind_name)
      ->required()
      ->check(CLI::IsMember({"path", "star", "complete", "tb"}));
  family->add_option("--n", fam_n)->required()->check(CLI::PositiveNumber);
  family->add_option("--k", fam_k, "Central degree (tb); default ceil((n-1)/3)");
  family->add_option("--emit", emit)->check(CLI::IsMember({"edges", "graph6", "both"}));
  family->add_option("--index", index_name)->check(CLI::IsMember({"aeci", "saeci"}));

  // enumerate
  auto *enumerate = app.add_subcommand("enumerate", "Dump a graph class as graph6 lines");
  int enum_n = 0;
  std::string class_name = "trees";
  enumerate->add_option("--n", enum_n)->required();
  enumerate->add_option("--class", class_name)
      ->check(CLI::IsMember({"trees", "pm-trees", "graphs"}));
  enumerate->add_option("--out", out_path);

  // transform
  auto *transform = app.add_subcommand("transform", "Apply one tree transformation");
  std::string rule_name, transform_file;
  transform->add_option("--rule", rule_name)
      ->check(CLI::IsMember({"pathmin", "starmax", "balance", "degreduce", "p3", "pmshift"}));
  transform->add_option("--format", format_name)->check(CLI::IsMember({"edgelist", "graph6"}));
  transform->add_option("--emit", emit)->check(CLI::IsMember({"edges", "graph6", "both"}));
  transform->add_option("file", transform_file, "Input tree, - for stdin");
  auto *trace = transform->add_subcommand("trace", "Iterate rules to a fixed point");
  std::string direction_name = "decreasing", trace_file;
  int trace_n = 0;
  std::uint64_t seed = 0;
  trace->add_option("--direction", direction_name)
      ->check(CLI::IsMember({"decreasing", "increasing", "pm-increasing"}));
  trace->add_option("--format", format_name)->check(CLI::IsMember({"edgelist", "graph6"}));
  trace->add_option("--emit", emit)->check(CLI::IsMember({"edges", "graph6", "both"}));
  trace->add_option("--n", trace_n, "Random start tree on n vertices (no file)");
  trace->add_option("--seed", seed);
  trace->add_option("file", trace_file, "Input tree, - for stdin");

  // scan
  auto *scan_cmd = app.add_subcommand("scan", "Exhaustive min/max over a class, or a table");
  int scan_n = 0, n_min = 0, n_max = 0;
  std::string table;
  scan_cmd->add_option("--class", class_name)
      ->check(CLI::IsMember({"trees", "pm-trees", "graphs"}));
  scan_cmd->add_option("--n", scan_n);
  scan_cmd->add_option("--n-min", n_min);
  scan_cmd->add_option("--n-max", n_max);
  scan_cmd->add_option("--index", index_name)->check(CLI::IsMember({"aeci", "saeci"}));
  scan_cmd->add_option("--table", table)->check(CLI::IsMember({"crossover", "p2"}));
  scan_cmd->add_option("--threads", threads)->check(CLI::PositiveNumber);
  scan_cmd->add_option("--out", out_path);

  // verify
  auto *verify = app.add_subcommand("verify", "Check every extremal claim exhaustively");
  std::string claims = "all";
  bool deep = false;
  verify->add_option("--claims", claims,
                     "all, or a comma list of trees,pm-trees,graphs,crossover,super");
  verify->add_option("--n-min", n_min);
  verify->add_option("--n-max", n_max);
  verify->add_flag("--deep", deep, "Trees to 18 and graphs to 7");
  verify->add_option("--threads", threads)->check(CLI::PositiveNumber);
  verify->add_option("--out", out_path);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    std::ostringstream msg;
    app.exit(e, msg, msg);
    err << msg.str();
    return kExitUsage;
  }

  try {
    const GraphFormat format = kFormats.at(format_name);
    const IndexKind kind = kIndices.at(index_name);

    if (*compute) {
      std::string text = read_input(compute_file);
      std::vector<Graph> graphs;
      if (format == GraphFormat::Graph6) {
        std::istringstream lines(text);
        for (std::string line; std::getline(lines, line);)
          if (line.find_first_not_of(" \t\r") != std::string::npos)
            graphs.push_back(parse_graph6(line));
        if (graphs.empty())
          throw GraphError("no graph6 lines in input");
      } else {
        graphs.push_back(parse_edge_list(text));
      }
      for (const auto &g : graphs)
        out << value_line(index_value(g, kind)) << '\n';
      return kExitOk;
    }

    if (*family) {
      FamilyKind fk = kind_name == "path"   ? FamilyKind::path()
                      : kind_name == "star" ? FamilyKind::star()
                      : kind_name == "complete"
                          ? FamilyKind::complete()
                          : FamilyKind::degree_balanced(fam_k > 0 ? fam_k
                                                                  : tb_third_degree(fam_n));
      Graph g = make_family(fk, fam_n);
      emit_graph(out, g, emit);
      Rational computed = index_value(g, kind);
      out << "family = " << to_string(fk, fam_n);
      if (fk.tag == FamilyKind::Tag::DegreeBalanced)
        out << ", balance = " << to_string(balance_class(fam_n, fk.central_degree));
      out << '\n';
      if (kind == IndexKind::Augmented && has_closed_form(fk, fam_n)) {
        Rational closed = closed_form_value(fk, fam_n);
        out << "closed_form = " << closed << ", computed = " << computed << ", "
            << (closed == computed ? "match" : "MISMATCH") << '\n';
        Rational printed = closed_form_value(fk, fam_n, ClosedFormVariant::AsPrinted);
        if (printed != closed)
          out << "printed_form = " << printed
              << " (n = 3k-1 variant with constant -1/2; disagrees with direct computation)\n";
        if (closed != computed)
          return kExitDomainError;
      } else {
        out << "closed_form = n/a, computed = " << computed << '\n';
      }
      out << "value = " << value_line(computed) << '\n';
      return kExitOk;
    }

    if (*enumerate) {
      std::ostringstream os;
      auto sink = [&](const Graph &g) { os << write_graph6(g) << '\n'; };
      switch (kClasses.at(class_name)) {
      case GraphClass::AllTrees: for_each_free_tree(enum_n, sink); break;
      case GraphClass::PmTrees: for_each_pm_tree(enum_n, sink); break;
      case GraphClass::ConnectedGraphs: for_each_connected_labeled_graph(enum_n, sink); break;
      }
      write_csv(out, out_path, os.str());
      return kExitOk;
    }

    if (*transform && *trace) {
      Graph start;
      if (!trace_file.empty()) {
        start = parse_graph(read_input(trace_file), format);
      } else if (trace_n >= 2) {
        start = random_tree(trace_n, seed);
        out << "# random tree n = " << trace_n << ", seed = " << seed << '\n';
      } else {
        err << "transform trace: give an input file or --n (>= 2) with --seed\n";
        return kExitUsage;
      }
      TreeTrace tr = reduce(start, kDirections.at(direction_name));
      out << "step 0 start value = " << value_line(tr.start_value) << '\n';
      emit_graph(out, tr.start, emit);
      for (std::size_t i = 0; i < tr.steps.size(); ++i) {
        const auto &s = tr.steps[i];
        out << "step " << i + 1 << " rule = " << to_string(s.rule)
            << " value = " << value_line(s.value) << '\n';
        emit_graph(out, s.graph, emit);
      }
      out << "steps = " << tr.steps.size() << ", final = "
          << canonical_code(tr.final_graph()).str() << '\n';
      return kExitOk;
    }

    if (*transform) {
      if (rule_name.empty() || transform_file.empty()) {
        err << "transform: --rule and an input file are required\n";
        return kExitUsage;
      }
      Graph t = parse_graph(read_input(transform_file), format);
      TransformRule rule = *parse_rule(rule_name);
      Graph next = apply_rule(rule, t);
      emit_graph(out, next, emit);
      out << "before = " << value_line(index_value(t, IndexKind::Augmented)) << '\n';
      out << "after = " << value_line(index_value(next, IndexKind::Augmented)) << '\n';
      return kExitOk;
    }

    if (*scan_cmd) {
      if (table == "crossover") {
        write_csv(out, out_path,
                  crossover_csv(crossover_table(n_min > 0 ? n_min : 8, n_max > 0 ? n_max : 40)));
        return kExitOk;
      }
      if (table == "p2") {
        if (scan_n <= 0) {
          err << "scan --table p2 needs --n\n";
          return kExitUsage;
        }
        write_csv(out, out_path, p2_csv(scan_n, p2_profile(scan_n)));
        return kExitOk;
      }
      int lo = scan_n > 0 ? scan_n : n_min, hi = scan_n > 0 ? scan_n : n_max;
      if (lo <= 0 || hi < lo) {
        err << "scan needs --n or --n-min/--n-max\n";
        return kExitUsage;
      }
      const GraphClass cls = kClasses.at(class_name);
      std::vector<ExtremalReport> reports;
      for (int n = lo; n <= hi; ++n)
        if (cls != GraphClass::PmTrees || n % 2 == 0)
          reports.push_back(scan(cls, n, kind, threads));
      write_csv(out, out_path, report_csv(reports));
      return kExitOk;
    }

    if (*verify) {
      VerifyOptions opt;
      opt.threads = threads;
      opt.n_min = n_min > 0 ? n_min : 4;
      opt.n_max = n_max > 0 ? n_max : (deep ? 18 : 16);
      opt.graph_n_max = std::min(deep ? 7 : 6, opt.n_max);
      bool super = false;
      if (claims != "all") {
        opt.classes.clear();
        opt.crossover = false;
        std::istringstream parts(claims);
        for (std::string c; std::getline(parts, c, ',');) {
          if (kClasses.count(c))
            opt.classes.push_back(kClasses.at(c));
          else if (c == "crossover")
            opt.crossover = true;
          else if (c == "super")
            super = true;
          else {
            err << "verify: unknown claim group '" << c << "'\n";
            return kExitUsage;
          }
        }
      }
      auto verdicts = verify_claims(opt);
      std::string csv = verdicts.empty() && super ? "" : verdicts_csv(verdicts);
      if (super)
        csv += (csv.empty() ? "" : "\n") + super_augmented_csv(super_augmented_exploration(
                          opt.n_min, std::min(opt.n_max, 14), threads));
      write_csv(out, out_path, csv);
      std::size_t failed = 0;
      for (const auto &v : verdicts)
        failed += v.pass ? 0 : 1;
      err << verdicts.size() - failed << "/" << verdicts.size() << " verdicts PASS\n";
      return failed == 0 ? kExitOk : kExitDomainError;
    }
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitUsage;
}

} // namespace augecc::cli
