#include "eep/cli.hpp"

#include <algorithm>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"

#include "eep/atlas.hpp"
#include "eep/io.hpp"
#include "eep/poly.hpp"
#include "eep/specializations.hpp"
#include "eep/verify.hpp"
#include "eep/xi.hpp"

namespace eep {

namespace {

void add_common(CLI::App* sub, Command& cmd) {
  sub->add_option("--format", cmd.output_format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  sub->add_option("--threads", cmd.threads, "Worker threads")->envname("EEP_THREADS")->check(CLI::Range(1u, 256u));
  sub->add_option("--cache-size", cmd.cache_size, "Memo entries kept (0: unbounded)")->envname("EEP_CACHE_SIZE");
}

void add_input(CLI::App* sub, Command& cmd) {
  sub->add_option("input", cmd.input_path, "Graph file, '-' for stdin");
  sub->add_option("-g,--graph", cmd.inline_graph, "Inline graph; ';' separates lines");
  sub->add_option("-i,--input-format", cmd.input_format, "Input format")
      ->check(CLI::IsMember({"edge-list", "graph6", "labeled-edge-list"}))
      ->capture_default_str();
  sub->add_flag("--no-canon", [&cmd](std::int64_t) { cmd.canonicalize = false; },
                "Memoise by plain encoding instead of canonical form");
}

ParsedGraph load_graph(const Command& cmd) {
  const GraphFormat format = parse_graph_format(cmd.input_format);
  if (!cmd.inline_graph.empty() && !cmd.input_path.empty()) throw InputError("give either a file or --graph, not both");
  if (!cmd.inline_graph.empty()) {
    std::string text = cmd.inline_graph;
    if (format != GraphFormat::kGraph6) std::replace(text.begin(), text.end(), ';', '\n');
    return parse_graph(text, format);
  }
  if (cmd.input_path.empty()) throw InputError("no graph given (file argument or --graph)");
  if (cmd.input_path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return parse_graph(buffer.str(), format);
  }
  return parse_graph_file(cmd.input_path, format);
}

XiOptions xi_options(const Command& cmd) {
  XiOptions options;
  options.canonicalize = cmd.canonicalize;
  options.memo = std::make_shared<MemoTable>(cmd.cache_size);
  return options;
}

std::string render(const MPoly& p, const std::string& format) {
  return (format == "structured" ? p.to_json().dump() : p.to_string()) + "\n";
}

std::string render(const Rational& r, const std::string& format) {
  if (format == "structured") return nlohmann::json{{"value", to_string(r)}}.dump() + "\n";
  return to_string(r) + "\n";
}

std::string atlas_text(const CollisionReport& report) {
  std::ostringstream out;
  out << "search " << report.search << " over " << report.family << ": " << report.examined << " graphs\n";
  for (const auto& [n, count] : report.examined_by_order) out << "  n=" << n << ": " << count << "\n";
  std::size_t index = 0;
  for (const CollisionGroup& g : report.groups) {
    out << "group " << ++index << " (" << g.members.size() << " members, " << g.verdict;
    if (report.search == "oq2") out << ", " << g.xi_classes << " xi classes";
    out << "):";
    for (const auto& code : g.codes) out << ' ' << code;
    out << "\n";
    for (const PairVerdict& p : g.pairs) {
      out << "  " << g.codes[p.first] << " vs " << g.codes[p.second] << ": T " << (p.tutte_equal ? "equal" : "distinct")
          << ", P " << (p.dpt_equal ? "equal" : "distinct") << ", U " << (p.u_equal ? "equal" : "distinct") << "\n";
    }
  }
  if (report.groups.empty()) {
    out << "no groups; every member listed above was examined\n";
  }
  return out.str();
}

int run_command(const Command& cmd, std::ostream& out, std::ostream& err) {
  std::string result;
  int code = kExitOk;

  if (cmd.verb == "compute") {
    const ParsedGraph in = load_graph(cmd);
    MPoly p;
    if (cmd.method == "expansion") {
      p = in.labels ? xi_lab_expansion(in.graph, *in.labels, cmd.threads) : xi_expansion(in.graph, cmd.threads);
    } else {
      p = in.labels ? xi_lab(in.graph, *in.labels, xi_options(cmd)) : xi(in.graph, xi_options(cmd));
    }
    result = render(p, cmd.output_format);
  } else if (cmd.verb == "specialize") {
    const ParsedGraph in = load_graph(cmd);
    result = render(specialize(cmd.poly, in.graph, in.labels ? &*in.labels : nullptr, xi_options(cmd)),
                    cmd.output_format);
  } else if (cmd.verb == "eval") {
    const ParsedGraph in = load_graph(cmd);
    std::map<std::string, Rational> point;
    for (const auto& [name, text] : cmd.bindings) {
      try {
        point[name] = parse_rational(text);
      } catch (const std::exception& ex) {
        throw InputError("value of " + name + ": " + ex.what());
      }
    }
    const MPoly p = in.labels ? xi_lab(in.graph, *in.labels, xi_options(cmd)) : xi(in.graph, xi_options(cmd));
    result = render(evaluate(p, point), cmd.output_format);
  } else if (cmd.verb == "verify") {
    SuiteOptions options{cmd.max_vertices, cmd.trials, cmd.seed, cmd.threads};
    const VerifyReport report = run_suite(cmd.suite, options);
    result = cmd.output_format == "structured" ? report.to_json().dump(2) + "\n" : report.to_text();
    if (!report.passed()) code = kExitVerificationFailure;
  } else if (cmd.verb == "atlas") {
    const Family family = cmd.family == "trees" ? tree_family(cmd.max_n, cmd.min_n) : graph_family(cmd.graph_n, cmd.m_max);
    const CollisionReport report =
        cmd.search == "oq2" ? search_oq2(family, cmd.threads) : find_xi_collisions(family, cmd.threads);
    result = cmd.output_format == "structured" ? report.to_json().dump(2) + "\n" : atlas_text(report);
    if (!report.consistent()) code = kExitVerificationFailure;
  } else {
    err << "unknown verb '" << cmd.verb << "'\n";
    return kExitInputError;
  }
  out << result;
  out.flush();
  return code;
}

}  // namespace

ParsedCommand parse_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Command cmd;
  CLI::App app{"Edge elimination polynomial toolkit"};
  app.require_subcommand(1, 1);

  auto* compute = app.add_subcommand("compute", "Print xi (xi_lab for labeled input)");
  add_input(compute, cmd);
  add_common(compute, cmd);
  compute->add_option("--method", cmd.method, "recurrence or expansion")
      ->check(CLI::IsMember({"recurrence", "expansion"}))
      ->capture_default_str();

  auto* spec = app.add_subcommand("specialize", "Print a substitution instance");
  add_input(spec, cmd);
  add_common(spec, cmd);
  spec->add_option("--poly", cmd.poly, "Polynomial name")->required()->check(CLI::IsMember(specialization_names()));

  auto* eval = app.add_subcommand("eval", "Evaluate xi (or xi_lab) at a rational point");
  add_input(eval, cmd);
  add_common(eval, cmd);
  std::string ex, ey, ez;
  std::vector<std::string> et;
  eval->add_option("-x", ex, "Value of x");
  eval->add_option("-y", ey, "Value of y");
  eval->add_option("-z", ez, "Value of z");
  eval->add_option("-t", et, "Label value as label=value (repeatable)");

  auto* verify = app.add_subcommand("verify", "Run oracle and confluence suites");
  add_common(verify, cmd);
  verify->add_option("--suite", cmd.suite, "Suite name")->check(CLI::IsMember(suite_names()))->capture_default_str();
  verify->add_option("--max-vertices", cmd.max_vertices, "Largest connected corpus graph")
      ->check(CLI::Range(1, 7))
      ->capture_default_str();
  verify->add_option("--trials", cmd.trials, "Random orders per graph")->check(CLI::Range(1, 100000))->capture_default_str();
  verify->add_option("--seed", cmd.seed, "Corpus and order seed")->capture_default_str();

  auto* atlas = app.add_subcommand("atlas", "Enumerate a family and group it by invariants");
  add_common(atlas, cmd);
  atlas->add_option("--family", cmd.family, "trees or graphs")->check(CLI::IsMember({"trees", "graphs"}))->capture_default_str();
  atlas->add_option("--search", cmd.search, "collisions or oq2")
      ->check(CLI::IsMember({"collisions", "oq2"}))
      ->capture_default_str();
  atlas->add_option("--min-n", cmd.min_n, "Smallest tree order")->check(CLI::Range(1, 16))->capture_default_str();
  atlas->add_option("--max-n", cmd.max_n, "Largest tree order")->check(CLI::Range(1, 16))->capture_default_str();
  atlas->add_option("--n", cmd.graph_n, "Graph order")->check(CLI::Range(0, 8))->capture_default_str();
  atlas->add_option("--m-max", cmd.m_max, "Most edges per graph")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {std::nullopt, code == 0 ? kExitOk : kExitInputError};
  }

  cmd.verb = app.get_subcommands().front()->get_name();
  if (cmd.verb == "eval") {
    if (!ex.empty()) cmd.bindings["x"] = ex;
    if (!ey.empty()) cmd.bindings["y"] = ey;
    if (!ez.empty()) cmd.bindings["z"] = ez;
    for (const auto& item : et) {
      const auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0) {
        err << "-t expects label=value, got '" << item << "'\n";
        return {std::nullopt, kExitInputError};
      }
      cmd.bindings[label_variable("t", item.substr(0, eq))] = item.substr(eq + 1);
    }
  }
  if (cmd.verb == "atlas" && cmd.family == "trees" && cmd.min_n > cmd.max_n) {
    err << "--min-n exceeds --max-n\n";
    return {std::nullopt, kExitInputError};
  }
  return {cmd, kExitOk};
}

int run(const Command& command, std::ostream& out, std::ostream& err) {
  try {
    return run_command(command, out, err);
  } catch (const DivisionError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitVerificationFailure;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitInputError;
  }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  ParsedCommand parsed = parse_command(argc, argv, out, err);
  if (!parsed.command) return parsed.exit_code;
  return run(*parsed.command, out, err);
}

}  // namespace eep
