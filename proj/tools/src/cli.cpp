#include "deckclass_cli/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

#include "deckclass/json_io.hpp"
#include "deckclass/patterns.hpp"

namespace deckclass::cli {

namespace {

struct Failure : std::runtime_error {
  Failure(int code, const std::string& kind, const std::string& what)
      : std::runtime_error(what), code(code), kind(kind) {}
  int code;
  std::string kind;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure(kParseError, "io", "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GraphFormat format_for(const std::string& name, const std::string& path) {
  if (name == "edgelist") return GraphFormat::edgelist;
  if (name == "graph6") return GraphFormat::graph6;
  if (name == "auto") {
    auto dot = path.rfind('.');
    std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    return ext == "g6" || ext == "graph6" ? GraphFormat::graph6 : GraphFormat::edgelist;
  }
  throw Failure(kParseError, "usage", "unknown format '" + name + "'");
}

// A graph6 file may hold one graph per line.
std::vector<Graph> read_graphs(const std::string& path, const std::string& format) {
  std::string text = read_file(path);
  if (format_for(format, path) == GraphFormat::graph6) return parse_graph6_lines(text);
  return {parse_edgelist(text)};
}

Graph read_one(const std::string& path, const std::string& format) {
  auto gs = read_graphs(path, format);
  if (gs.size() != 1) throw Failure(kParseError, "parse", "expected exactly one graph in '" + path + "'");
  return gs.front();
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw Failure(kParseError, "parse", path + ": " + e.what());
  }
}

struct ClassifyResult {
  Json json;
  bool failed = false;
};

ClassifyResult classify_one(const Graph& g, bool check_class2, bool check_null) {
  GraphVerdict v = classify_graph(g);
  ClassifyResult r{verdict_json(v)};
  r.json["graph6"] = to_graph6(g);
  if (check_class2 && v.status == VerdictStatus::not_locally_common) {
    WitnessReport rep = verify_class2(g);
    r.json["witness"] = report_json(rep);
    r.failed = !rep.certified();
  }
  if (check_null && v.deck_class == DeckClass::III) {
    WitnessReport rep = verify_class3_null(g);
    r.json["null_witness"] = report_json(rep);
    r.failed = r.failed || !rep.certified();
  }
  return r;
}

std::string summary_line(const Json& j) {
  std::ostringstream s;
  s << j.at("graph6").get<std::string>() << ' ' << j.at("status").get<std::string>();
  if (!j.at("deck_class").is_null()) s << " class=" << j.at("deck_class").get<std::string>();
  s << " depth=" << j.at("depth").get<int>();
  if (!j.at("trace").empty()) s << " rule=" << j.at("trace").back().at("rule").get<std::string>();
  if (j.contains("witness")) s << " witness=" << j.at("witness").at("verdict").get<std::string>();
  if (j.contains("null_witness")) s << " null_witness=" << j.at("null_witness").at("verdict").get<std::string>();
  return s.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local commonness classification from the first twelve perturbation terms"};
  app.require_subcommand(1);

  std::string input, format = "auto", input_list, kernel_path, spec_path, p_text = "1/2";
  bool as_json = false, verify = false, no_verify = false;
  int edges = -1, max_degree = -1, max_cells = 512;

  auto* classify = app.add_subcommand("classify", "Classify graphs");
  classify->add_option("--input", input, "Graph file");
  classify->add_option("--input-list", input_list, "File listing graph files, one per line");
  classify->add_option("--format", format, "edgelist, graph6 or auto (by extension)");
  classify->add_flag("--json", as_json, "JSON output, one document per line");
  classify->add_flag("--verify", verify, "Also certify Class III null witnesses");
  classify->add_flag("--no-verify", no_verify, "Skip the Class II witness check");

  auto* counts = app.add_subcommand("counts", "Catalogue subgraph counts");
  counts->add_option("--input", input, "Graph file")->required();
  counts->add_option("--format", format, "edgelist, graph6 or auto");

  auto* cat = app.add_subcommand("catalogue", "Principal graphs or the named catalogue");
  cat->add_option("--edges", edges, "Edge count of the principal graphs to list");
  cat->add_flag("--json", as_json, "Named catalogue as JSON");

  auto* witness = app.add_subcommand("witness", "Witness kernel recipe");
  witness->add_option("--input", input, "Graph file")->required();
  witness->add_option("--format", format, "edgelist, graph6 or auto");

  auto* poly = app.add_subcommand("poly", "Perturbation coefficients");
  poly->add_option("--input", input, "Graph file")->required();
  poly->add_option("--format", format, "edgelist, graph6 or auto");
  poly->add_option("--kernel", kernel_path, "Kernel JSON")->required();
  poly->add_option("--max-degree", max_degree, "Largest even coefficient degree")->required();
  poly->add_option("--p", p_text, "Base density p/q");

  auto* vcore = app.add_subcommand("verify-core", "Check the core kernel identities");
  vcore->add_option("--spec", spec_path, "Kernel parameter JSON")->required();
  vcore->add_option("--max-cells", max_cells, "Materialization budget");

  auto fail = [&](int code, const std::string& kind, const std::string& what) {
    err << Json{{"schema", kSchema}, {"error", kind}, {"message", what}, {"exit_code", code}}.dump() << '\n';
    return code;
  };

  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return kOk;
    } catch (const CLI::ParseError& e) {
      return fail(kParseError, "usage", e.what());
    }

    if (*classify) {
      std::vector<std::string> paths;
      if (!input.empty()) paths.push_back(input);
      if (!input_list.empty()) {
        std::istringstream list(read_file(input_list));
        for (std::string line; std::getline(list, line);)
          if (!line.empty() && line[0] != '#') paths.push_back(line);
      }
      if (paths.empty()) throw Failure(kParseError, "usage", "classify needs --input or --input-list");
      std::vector<Graph> graphs;
      for (const auto& p : paths)
        for (auto& g : read_graphs(p, format)) graphs.push_back(std::move(g));
      // Independent inputs run concurrently in batches; output keeps input order.
      const std::size_t batch = std::max(1u, std::thread::hardware_concurrency());
      bool failed = false;
      for (std::size_t start = 0; start < graphs.size(); start += batch) {
        std::vector<std::future<ClassifyResult>> jobs;
        for (std::size_t i = start; i < std::min(graphs.size(), start + batch); ++i)
          jobs.push_back(std::async(std::launch::async, classify_one, std::cref(graphs[i]), !no_verify, verify));
        for (auto& j : jobs) {
          ClassifyResult r = j.get();
          failed = failed || r.failed;
          out << (as_json ? r.json.dump() : summary_line(r.json)) << '\n';
        }
      }
      return failed ? fail(kVerificationFailed, "verification", "a witness failed certification") : kOk;
    }
    if (*counts) {
      Graph g = read_one(input, format);
      CountVector cv = count_vector(g);
      out << counts_json(cv).dump() << '\n';
      return kOk;
    }
    if (*cat) {
      if (edges >= 0) {
        for (const auto& g : enumerate_principal(edges)) out << to_graph6(g) << '\n';
        return kOk;
      }
      Json a = Json::array();
      for (const auto& info : catalogue())
        a.push_back({{"id", info.name}, {"graph6", to_graph6(info.graph)}, {"edges", info.graph.size()}});
      out << (as_json ? a.dump() : a.dump(2)) << '\n';
      return kOk;
    }
    if (*witness) {
      Graph g = read_one(input, format);
      GraphVerdict v = classify_graph(g);
      Json j{{"schema", kSchema}, {"graph6", to_graph6(g)}, {"status", to_string(v.status)}};
      if (v.status == VerdictStatus::not_locally_common) {
        WitnessReport rep = verify_class2(g);
        j["recipe"] = recipe_json(*rep.recipe);
        j["verdict"] = rep.certified() ? "certified" : "failed";
        out << j.dump() << '\n';
        return rep.certified() ? kOk : fail(kVerificationFailed, "verification", "witness failed certification");
      }
      if (v.deck_class == DeckClass::III) {
        WitnessReport rep = verify_class3_null(g);
        j["recipe"] = recipe_json(*rep.recipe);
        j["verdict"] = rep.certified() ? "certified" : "failed";
        out << j.dump() << '\n';
        return rep.certified() ? kOk : fail(kVerificationFailed, "verification", "null witness failed certification");
      }
      throw Failure(kOutOfScope, "out_of_scope", "no finite witness exists for status " + to_string(v.status));
    }
    if (*poly) {
      Graph g = read_one(input, format);
      StepKernel u = kernel_from_json(read_json(kernel_path));
      EpsPolynomial e = perturbation_coefficients(g, u, parse_rational(p_text), max_degree);
      out << poly_json(e).dump() << '\n';
      return kOk;
    }
    if (*vcore) {
      CoreKernelSpec spec = build_core_kernel(params_from_json(read_json(spec_path)));
      WitnessReport rep = verify_core_identities(spec, max_cells);
      Json j = report_json(rep);
      j["schema"] = kSchema;
      j["spec"] = spec_json(spec);
      out << j.dump() << '\n';
      return rep.certified() ? kOk : fail(kVerificationFailed, "verification", "core identities failed");
    }
  } catch (const Failure& e) {
    return fail(e.code, e.kind, e.what());
  } catch (const ParseError& e) {
    return fail(kParseError, "parse", e.what());
  } catch (const Json::exception& e) {
    return fail(kParseError, "parse", e.what());
  } catch (const OutOfScopeError& e) {
    return fail(kOutOfScope, "out_of_scope", e.what());
  } catch (const MaterializationRefused& e) {
    return fail(kOutOfScope, "budget", e.what());
  } catch (const std::invalid_argument& e) {
    return fail(kOutOfScope, "invalid_argument", e.what());
  } catch (const std::exception& e) {
    return fail(kVerificationFailed, "internal", e.what());
  }
  return kOk;
}

}  // namespace deckclass::cli
