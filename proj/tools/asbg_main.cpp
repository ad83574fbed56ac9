// asbg: command-line front end for difference-1 colourings, ASBG
// configurations and ASM conversion. Inputs are graph JSON documents
// {"vertices": [...], "edges": [[a, b], ...]}, optionally with a
// "colouring" object; "-" reads stdin.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "asbg/asm.hpp"
#include "asbg/colouring.hpp"
#include "asbg/config_space.hpp"
#include "asbg/flow.hpp"
#include "asbg/io.hpp"
#include "asbg/oracle.hpp"
#include "asbg/structure.hpp"

using namespace asbg;

namespace {

enum Exit { kYes = 0, kNo = 1, kInvalid = 2 };

struct Outcome {
  std::string text;  // complete stdout block, newline-terminated
  int code = kYes;
};

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::MalformedInput, "cannot read '" + path + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& ex) {
    throw Error(ErrorKind::MalformedInput, std::string("malformed JSON: ") + ex.what());
  }
}

std::string fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char out[17];
  std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
  return out;
}

struct Options {
  std::vector<std::string> inputs;
  std::string format = "json";
  std::string method = "auto";
  int k = 1;
  int jobs = 1;
  bool report = false;
};

using Handler = std::function<Outcome(const Json& doc)>;

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Outcome error_outcome(const std::string& what) {
  Json doc;
  doc["error"] = what;
  return {dump(doc), kInvalid};
}

// Runs the handler on every input, up to `jobs` at a time; blocks are
// printed in input order.
int run_all(const std::string& command, const Options& opt, const Handler& handler) {
  std::vector<Outcome> results(opt.inputs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < opt.inputs.size(); i = next++) {
      auto start = std::chrono::steady_clock::now();
      std::string text;
      try {
        text = read_input(opt.inputs[i]);
        results[i] = handler(parse_document(text));
      } catch (const std::exception& ex) {
        results[i] = error_outcome(ex.what());
      }
      if (opt.report) {
        std::chrono::duration<double, std::milli> spent = std::chrono::steady_clock::now() - start;
        Json report;
        report["command"] = command;
        report["input"] = opt.inputs[i];
        report["input_digest"] = fnv1a(text);
        report["exit_code"] = results[i].code;
        report["outcome"] = opt.format == "json" ? Json::parse(results[i].text) : Json(results[i].text);
        report["elapsed_ms"] = spent.count();
        results[i].text = dump(report);
      }
    }
  };
  std::size_t threads = std::min<std::size_t>(std::max(opt.jobs, 1), opt.inputs.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  int code = kYes;
  for (const Outcome& r : results) {
    std::cout << r.text;
    code = std::max(code, r.code);
  }
  return code;
}

ColouredGraph coloured_input(const Json& doc) {
  Graph g = graph_from_json(doc);
  if (doc.contains("colouring")) {
    Colouring c = colouring_from_json(g, doc["colouring"]);
    return make_coloured(std::move(g), std::move(c));
  }
  Decision d = decide_difference1(g);
  if (!d.colourable())
    throw Error(ErrorKind::NotColourable, "no difference-1 colouring (" + std::string(to_string(*d.certificate)) + ")");
  return make_coloured(std::move(g), std::move(*d.colouring));
}

Json coloured_to_json(const Graph& g, const Colouring& c) {
  Json doc = graph_to_json(g);
  doc["colouring"] = colouring_to_json(g, c);
  return doc;
}

Outcome cmd_decide(const Json& doc, int k) {
  Graph g = graph_from_json(doc);
  if (k == 1) {
    Decision d = decide_difference1(g);
    return {dump(decision_to_json(g, d)), d.colourable() ? kYes : kNo};
  }
  std::optional<Colouring> c;
  Json out;
  try {
    c = k == 0 ? decide_difference_0(g) : decide_difference_k(g, k);
    out["colourable"] = c.has_value();
    out["colouring"] = c ? colouring_to_json(g, *c) : Json(nullptr);
    out["certificate"] = nullptr;
  } catch (const OddCycleError&) {
    out["colourable"] = false;
    out["colouring"] = nullptr;
    out["certificate"] = "NotBipartite";
  }
  out["k"] = k;
  return {dump(out), c ? kYes : kNo};
}

Outcome cmd_colour(const Json& doc, const std::string& format) {
  Graph g = graph_from_json(doc);
  Decision d = decide_difference1(g);
  if (!d.colourable()) return {dump(decision_to_json(g, d)), kNo};
  if (format == "dot") return {to_dot(make_coloured(g, *d.colouring), std::nullopt), kYes};
  return {dump(coloured_to_json(g, *d.colouring)), kYes};
}

Outcome cmd_configure(const Json& doc, const std::string& method, const std::string& format) {
  ColouredGraph cg = coloured_input(doc);
  std::string used = method;
  if (used == "auto") used = is_cactus(cg.graph) ? "cactus" : "brute";
  std::optional<Configuration> cfg;
  if (used == "cactus") {
    cfg = configure_cactus(cg);
  } else {
    cfg = brute_force_configuration(cg);
  }
  if (format == "dot") return {to_dot(cg, cfg), cfg ? kYes : kNo};
  Json out;
  out["method"] = used;
  out["colouring"] = colouring_to_json(cg.graph, cg.colouring);
  out["configuration"] = cfg ? configuration_to_json(cg.graph, *cfg) : Json("none");
  return {dump(out), cfg ? kYes : kNo};
}

Outcome cmd_enumerate(const Json& doc) {
  Graph g = graph_from_json(doc);
  Decision d = decide_difference1(g);
  if (!d.colourable()) return {dump(decision_to_json(g, d)), kNo};
  auto all = enumerate_colourings(g);
  Json out;
  out["count"] = all.size();
  out["colourings"] = Json::array();
  for (const auto& c : all) out["colourings"].push_back(colouring_to_json(g, c));
  return {dump(out), kYes};
}

Outcome cmd_reduce(const Json& doc) {
  Graph g = graph_from_json(doc);
  Reduction r = reduce_with_trace(g);
  Json out = graph_to_json(r.reduced);
  out["removed"] = Json::array();
  for (const LeafTwig& cfg : r.removed)
    out["removed"].push_back({{"anchor", cfg.anchor},
                              {"leaf", cfg.leaf},
                              {"twig_base", cfg.twig_base},
                              {"twig_leaves", cfg.twig_leaves}});
  return {dump(out), kYes};
}

Outcome cmd_classify(const Json& doc) {
  Graph g = graph_from_json(doc);
  return {dump(structure_to_json(analyze_structure(g))), kYes};
}

Outcome cmd_oracle(const Json& doc, const std::string& what, int k) {
  if (what == "difference-k") {
    Graph g = graph_from_json(doc);
    auto all = oracle_difference_k(g, k);
    Json out;
    out["k"] = k;
    out["count"] = all.size();
    out["colourings"] = Json::array();
    for (const auto& c : all) out["colourings"].push_back(colouring_to_json(g, c));
    return {dump(out), all.empty() ? kNo : kYes};
  }
  if (what == "cycles") {
    Graph g = graph_from_json(doc);
    Json out = Json::array();
    for (const auto& cls : oracle_cycle_relation(g)) {
      Json edges = Json::array();
      for (EdgeId e : cls) edges.push_back(edge_key(g, e));
      out.push_back(std::move(edges));
    }
    return {dump(Json{{"cycle_classes", out}}), kYes};
  }
  ColouredGraph cg = coloured_input(doc);
  bool yes = oracle_configurable(cg);
  return {dump(Json{{"configurable", yes}}), yes ? kYes : kNo};
}

std::vector<std::string> split_names(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream in(csv);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const std::exception& ex) {
    std::cout << error_outcome(ex.what()).text;
    return kInvalid;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Difference-1 colourings, ASBG configurations and ASM conversion"};
  app.require_subcommand(1);
  Options opt;

  auto add_inputs = [&](CLI::App* sub) {
    sub->add_option("inputs", opt.inputs, "graph JSON files ('-' for stdin)")->required();
    sub->add_option("--jobs", opt.jobs, "files processed concurrently")->check(CLI::PositiveNumber);
    sub->add_flag("--report", opt.report, "wrap each result with command, digest and timing");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  };

  auto* decide = app.add_subcommand("decide", "decide difference-k colourability (exit 0 yes, 1 no, 2 invalid)");
  add_inputs(decide);
  decide->add_option("--k", opt.k, "difference k")->check(CLI::NonNegativeNumber);

  auto* colour = app.add_subcommand("colour", "construct a difference-1 colouring");
  add_inputs(colour);
  add_format(colour);

  auto* configure = app.add_subcommand("configure", "find an ASBG vertex ordering");
  add_inputs(configure);
  add_format(configure);
  configure->add_option("--method", opt.method, "auto, cactus or brute")
      ->check(CLI::IsMember({"auto", "cactus", "brute"}));

  auto* enumerate = app.add_subcommand("enumerate", "list every difference-1 colouring");
  add_inputs(enumerate);
  auto* reduce_cmd = app.add_subcommand("reduce", "strip leaf-twig configurations");
  add_inputs(reduce_cmd);
  auto* classify = app.add_subcommand("classify", "skeleton, vertex types, limbs and cycle classes");
  add_inputs(classify);

  auto* oracle = app.add_subcommand("oracle", "brute-force reference answers");
  std::string oracle_what;
  oracle->add_option("what", oracle_what, "difference-k, cycles or configurable")
      ->required()
      ->check(CLI::IsMember({"difference-k", "cycles", "configurable"}));
  add_inputs(oracle);
  oracle->add_option("--k", opt.k, "difference k")->check(CLI::NonNegativeNumber);

  auto* asm_cmd = app.add_subcommand("asm", "alternating sign matrices");
  asm_cmd->require_subcommand(1);
  int order = 0;
  auto* asm_count = asm_cmd->add_subcommand("count", "number of n x n ASMs (n <= 5)");
  asm_count->add_option("n", order)->required();
  std::string matrix_path, rows_csv, cols_csv, graph_path;
  auto* asm_to = asm_cmd->add_subcommand("to-graph", "matrix file to coloured graph JSON");
  asm_to->add_option("matrix", matrix_path)->required();
  auto* asm_from = asm_cmd->add_subcommand("from-graph", "coloured graph JSON to matrix");
  asm_from->add_option("graph", graph_path)->required();
  asm_from->add_option("--rows", rows_csv, "comma-separated row vertex order");
  asm_from->add_option("--cols", cols_csv, "comma-separated column vertex order");

  CLI11_PARSE(app, argc, argv);

  if (*decide) return run_all("decide", opt, [&](const Json& d) { return cmd_decide(d, opt.k); });
  if (*colour) return run_all("colour", opt, [&](const Json& d) { return cmd_colour(d, opt.format); });
  if (*configure)
    return run_all("configure", opt, [&](const Json& d) { return cmd_configure(d, opt.method, opt.format); });
  if (*enumerate) return run_all("enumerate", opt, cmd_enumerate);
  if (*reduce_cmd) return run_all("reduce", opt, cmd_reduce);
  if (*classify) return run_all("classify", opt, cmd_classify);
  if (*oracle) return run_all("oracle", opt, [&](const Json& d) { return cmd_oracle(d, oracle_what, opt.k); });

  return guarded([&] {
    if (*asm_count) {
      std::cout << count_asms(order) << "\n";
      return int{kYes};
    }
    if (*asm_to) {
      SignMatrix m = parse_matrix(read_input(matrix_path));
      if (!is_asm(m)) throw Error(ErrorKind::NotAnAsm, "matrix is not an alternating sign matrix");
      ColouredGraph cg = asm_to_asbg(m);
      Json out = coloured_to_json(cg.graph, cg.colouring);
      out["row_order"] = asm_row_names(m.rows());
      out["col_order"] = asm_col_names(m.cols());
      std::cout << dump(out);
      return int{kYes};
    }
    Json doc = parse_document(read_input(graph_path));
    ColouredGraph cg = coloured_input(doc);
    std::vector<std::string> rows = split_names(rows_csv), cols = split_names(cols_csv);
    if (rows.empty() && doc.contains("row_order")) rows = doc["row_order"].get<std::vector<std::string>>();
    if (cols.empty() && doc.contains("col_order")) cols = doc["col_order"].get<std::vector<std::string>>();
    if (rows.empty() || cols.empty()) {
      auto cfg = is_cactus(cg.graph) ? std::optional(configure_cactus(cg)) : brute_force_configuration(cg);
      if (!cfg) throw Error(ErrorKind::InvalidOrder, "colouring is not configurable; pass --rows and --cols");
      rows.clear();
      cols.clear();
      for (VertexId v : cfg->order1) rows.push_back(cg.graph.name(v));
      for (VertexId v : cfg->order2) cols.push_back(cg.graph.name(v));
    }
    SignMatrix m = asbg_to_asm(cg, rows, cols);
    std::cout << format_matrix(m);
    return is_asm(m) ? int{kYes} : int{kNo};
  });
}
