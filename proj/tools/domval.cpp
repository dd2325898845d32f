#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "domval/formulas.hpp"
#include "domval/graph.hpp"
#include "domval/oracle.hpp"
#include "domval/strip_dp.hpp"
#include "domval/verify.hpp"

namespace {

using domval::Count;
using domval::Family;
using domval::FamilyId;
using domval::VertexRef;
using domval::verify::Engine;
using nlohmann::json;

struct Options {
  std::string family;
  int n = 0;
  std::string vertex;
  std::string method;
  std::string engines;
  int min_n = 0;
  int max_n = 0;
  std::string input;
  bool list_sets = false;
  std::string format = "json";
};

int oracle_cap_from_env() {
  const char* raw = std::getenv("DOMVAL_ORACLE_CAP");
  if (!raw) return domval::oracle::kDefaultPickBudget;
  try {
    const int cap = std::stoi(raw);
    if (cap < 1) throw std::invalid_argument("");
    return cap;
  } catch (const std::exception&) {
    throw domval::DomainError("DOMVAL_ORACLE_CAP must be a positive integer");
  }
}

bool is_strip(Family f) { return f == Family::ladder || f == Family::prism; }

bool formula_in_domain(const std::string& command, FamilyId id) {
  switch (id.family) {
    case Family::path: return command == "gamma" ? id.n >= 1 : id.n >= 2;
    case Family::cycle: return id.n >= 3;
    case Family::ladder: return id.n >= 2;
    case Family::prism: return id.n >= 3;
  }
  return false;
}

Engine pick_engine(const std::string& command, const Options& opt, FamilyId id) {
  if (!opt.method.empty()) return domval::verify::parse_engine(opt.method);
  return formula_in_domain(command, id) ? Engine::formula : Engine::oracle;
}

std::vector<std::string> vertex_labels(Family family, int n) {
  std::vector<std::string> labels;
  if (is_strip(family)) {
    for (int i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
    for (int i = 1; i <= n; ++i) labels.push_back("y" + std::to_string(i));
  } else {
    for (int v = 1; v <= n; ++v) labels.push_back(std::to_string(v));
  }
  return labels;
}

json dv_to_json(Family family, int n, const std::vector<Count>& dv) {
  if (!is_strip(family)) return json(dv);
  json rows;
  rows["x"] = std::vector<Count>(dv.begin(), dv.begin() + n);
  rows["y"] = std::vector<Count>(dv.begin() + n, dv.end());
  return rows;
}

json sets_to_json(const std::vector<domval::VertexSet>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(s.members);
  return out;
}

void append_dv_csv(std::ostream& out, Family family, int n,
                   const std::vector<Count>& dv) {
  const auto labels = vertex_labels(family, n);
  for (size_t i = 0; i < dv.size(); ++i)
    out << labels[i] << "," << dv[i] << "\n";
}

const char* status_name(domval::verify::Verdict::Status s) {
  using Status = domval::verify::Verdict::Status;
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

// --- command implementations --------------------------------------------
// Each returns the fully assembled stdout payload; nothing is printed until
// the command has succeeded, so failures never leave partial envelopes.

std::string run_scalar(const std::string& command, const Options& opt) {
  const FamilyId id{domval::parse_family(opt.family), opt.n};
  const Engine engine = pick_engine(command, opt, id);

  Count value = 0;
  if (engine == Engine::formula) {
    value = command == "gamma" ? domval::formulas::gamma_of(id)
                               : domval::formulas::tau_of(id);
  } else {
    const auto report =
        domval::verify::report_for(id.family, id.n, engine, oracle_cap_from_env());
    value = command == "gamma" ? report.gamma : report.tau;
  }

  std::ostringstream out;
  if (opt.format == "json") {
    json j;
    j["command"] = command;
    j["family"] = opt.family;
    j["n"] = opt.n;
    j["engine"] = domval::verify::engine_name(engine);
    j[command] = value;
    out << j.dump() << "\n";
  } else if (opt.format == "csv") {
    out << "family,n,engine," << command << "\n"
        << opt.family << "," << opt.n << ","
        << domval::verify::engine_name(engine) << "," << value << "\n";
  } else {
    out << "family " << opt.family << "\n"
        << "n " << opt.n << "\n"
        << "engine " << domval::verify::engine_name(engine) << "\n"
        << command << " " << value << "\n";
  }
  return out.str();
}

std::string run_dv(const Options& opt) {
  const FamilyId id{domval::parse_family(opt.family), opt.n};
  const Engine engine = pick_engine("dv", opt, id);

  const std::vector<Count> dv =
      engine == Engine::formula
          ? domval::formulas::dv_vector(id)
          : domval::verify::report_for(id.family, id.n, engine, oracle_cap_from_env()).dv;

  std::optional<std::pair<std::string, Count>> single;
  if (!opt.vertex.empty()) {
    const VertexRef ref = VertexRef::parse(opt.vertex, id.family);
    single = {ref.label(), dv[static_cast<size_t>(ref.flatten(opt.n) - 1)]};
  }

  std::ostringstream out;
  if (opt.format == "json") {
    json j;
    j["command"] = "dv";
    j["family"] = opt.family;
    j["n"] = opt.n;
    j["engine"] = domval::verify::engine_name(engine);
    if (single) {
      j["vertex"] = single->first;
      j["dv"] = single->second;
    } else {
      j["dv"] = dv_to_json(id.family, opt.n, dv);
    }
    out << j.dump() << "\n";
  } else if (opt.format == "csv") {
    out << "vertex,dv\n";
    if (single)
      out << single->first << "," << single->second << "\n";
    else
      append_dv_csv(out, id.family, opt.n, dv);
  } else {
    out << "family " << opt.family << "\n"
        << "n " << opt.n << "\n"
        << "engine " << domval::verify::engine_name(engine) << "\n";
    if (single) {
      out << "dv " << single->first << " " << single->second << "\n";
    } else {
      const auto labels = vertex_labels(id.family, opt.n);
      for (size_t i = 0; i < dv.size(); ++i)
        out << "dv " << labels[i] << " " << dv[i] << "\n";
    }
  }
  return out.str();
}

std::string render_report(const std::string& command, const Options& opt,
                          Family family, int n, const json& header,
                          const domval::DominationReport& report) {
  std::ostringstream out;
  if (opt.format == "json") {
    json j = header;
    j["command"] = command;
    j["gamma"] = report.gamma;
    j["tau"] = report.tau;
    j["dv"] = dv_to_json(family, n, report.dv);
    if (report.sets) j["sets"] = sets_to_json(*report.sets);
    out << j.dump() << "\n";
  } else if (opt.format == "csv") {
    out << "metric,vertex,value\n";
    out << "gamma,," << report.gamma << "\n";
    out << "tau,," << report.tau << "\n";
    const auto labels = vertex_labels(family, n);
    for (size_t i = 0; i < report.dv.size(); ++i)
      out << "dv," << labels[i] << "," << report.dv[i] << "\n";
  } else {
    for (auto& [key, value] : header.items()) {
      out << key << " ";
      if (value.is_string())
        out << value.get<std::string>();
      else
        out << value;
      out << "\n";
    }
    out << "gamma " << report.gamma << "\n"
        << "tau " << report.tau << "\n";
    const auto labels = vertex_labels(family, n);
    for (size_t i = 0; i < report.dv.size(); ++i)
      out << "dv " << labels[i] << " " << report.dv[i] << "\n";
    if (report.sets) {
      for (const auto& s : *report.sets) {
        out << "set";
        for (int v : s.members) out << " " << v;
        out << "\n";
      }
    }
  }
  return out.str();
}

std::string run_report(const Options& opt) {
  const FamilyId id{domval::parse_family(opt.family), opt.n};
  const Engine engine = pick_engine("report", opt, id);
  if (opt.list_sets && engine != Engine::oracle)
    throw domval::DomainError("--list-sets requires the oracle method");
  if (opt.list_sets && opt.format == "csv")
    throw domval::DomainError("sets are not representable in csv");

  domval::DominationReport report;
  if (opt.list_sets) {
    const auto g = [&] {
      switch (id.family) {
        case Family::path: return domval::make_path(id.n);
        case Family::cycle: return domval::make_cycle(id.n);
        case Family::ladder: return domval::make_ladder(id.n);
        case Family::prism: return domval::make_prism(id.n);
      }
      throw domval::DomainError("unknown family");
    }();
    report = domval::oracle::domination_report(g, true, oracle_cap_from_env());
  } else {
    report = domval::verify::report_for(id.family, id.n, engine, oracle_cap_from_env());
  }

  json header;
  header["family"] = opt.family;
  header["n"] = opt.n;
  header["engine"] = domval::verify::engine_name(engine);
  return render_report("report", opt, id.family, id.n, header, report);
}

std::string run_enumerate(const Options& opt) {
  if (opt.list_sets && opt.format == "csv")
    throw domval::DomainError("sets are not representable in csv");
  std::ifstream in(opt.input);
  if (!in) throw domval::DomainError("cannot open input file: " + opt.input);
  const domval::Graph g = domval::read_edge_list(in);
  const auto report =
      domval::oracle::domination_report(g, opt.list_sets, oracle_cap_from_env());

  json header;
  header["source"] = opt.input;
  header["n"] = g.num_vertices();
  header["engine"] = "oracle";
  // arbitrary graphs are plain-indexed regardless of shape
  return render_report("enumerate", opt, Family::path, g.num_vertices(), header,
                       report);
}

std::string run_verify(const Options& opt, bool& any_fail) {
  const Family family = domval::parse_family(opt.family);
  const auto colon = opt.engines.find(':');
  if (colon == std::string::npos)
    throw domval::DomainError("--engines expects a pair like formula:oracle");
  const Engine a = domval::verify::parse_engine(opt.engines.substr(0, colon));
  const Engine b = domval::verify::parse_engine(opt.engines.substr(colon + 1));
  if (opt.min_n > opt.max_n) throw domval::DomainError("--min-n exceeds --max-n");

  const auto verdicts = domval::verify::cross_check(family, opt.min_n, opt.max_n,
                                                    a, b, oracle_cap_from_env());
  any_fail = false;
  for (const auto& v : verdicts)
    if (v.status == domval::verify::Verdict::Status::fail) any_fail = true;

  std::ostringstream out;
  if (opt.format == "json") {
    json j;
    j["command"] = "verify";
    j["family"] = opt.family;
    j["min_n"] = opt.min_n;
    j["max_n"] = opt.max_n;
    j["engines"] = {domval::verify::engine_name(a), domval::verify::engine_name(b)};
    j["all_pass"] = !any_fail;
    json list = json::array();
    for (const auto& v : verdicts) {
      json item;
      item["check"] = v.check;
      item["family"] = v.family;
      item["n"] = v.n;
      item["status"] = status_name(v.status);
      if (!v.detail.empty()) item["detail"] = v.detail;
      list.push_back(std::move(item));
    }
    j["verdicts"] = std::move(list);
    out << j.dump() << "\n";
  } else if (opt.format == "csv") {
    out << "check,family,n,status,detail\n";
    for (const auto& v : verdicts)
      out << v.check << "," << v.family << "," << v.n << ","
          << status_name(v.status) << "," << v.detail << "\n";
  } else {
    for (const auto& v : verdicts) {
      out << status_name(v.status) << " " << v.check << " " << v.family << " n="
          << v.n;
      if (!v.detail.empty()) out << " (" << v.detail << ")";
      out << "\n";
    }
    out << "all-pass " << (any_fail ? "false" : "true") << "\n";
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact domination numbers, minimum-set counts, and per-vertex "
               "domination values for paths, cycles, ladders, and prisms"};
  app.require_subcommand(1);

  Options opt;
  const auto add_common = [&](CLI::App* cmd, bool needs_instance) {
    if (needs_instance) {
      cmd->add_option("--family", opt.family, "path, cycle, ladder, or prism")
          ->required();
      cmd->add_option("--n", opt.n, "order parameter")->required();
      cmd->add_option("--method", opt.method, "formula, dp, or oracle");
    }
    cmd->add_option("--format", opt.format, "json, csv, or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
  };

  CLI::App* cmd_gamma = app.add_subcommand("gamma", "domination number");
  add_common(cmd_gamma, true);
  CLI::App* cmd_tau = app.add_subcommand("tau", "number of minimum dominating sets");
  add_common(cmd_tau, true);
  CLI::App* cmd_dv = app.add_subcommand("dv", "per-vertex domination values");
  add_common(cmd_dv, true);
  cmd_dv->add_option("--vertex", opt.vertex, "single vertex, e.g. 3 or x3");
  CLI::App* cmd_report = app.add_subcommand("report", "gamma, tau, and dv together");
  add_common(cmd_report, true);
  cmd_report->add_flag("--list-sets", opt.list_sets, "include the sets themselves");

  CLI::App* cmd_enumerate =
      app.add_subcommand("enumerate", "run the oracle on an edge-list file");
  cmd_enumerate->add_option("--input", opt.input, "edge-list file")->required();
  cmd_enumerate->add_flag("--list-sets", opt.list_sets,
                          "include the sets themselves");
  add_common(cmd_enumerate, false);

  CLI::App* cmd_verify = app.add_subcommand("verify", "cross-check two engines");
  cmd_verify->add_option("--family", opt.family, "path, cycle, ladder, or prism")
      ->required();
  cmd_verify->add_option("--min-n", opt.min_n, "first order")->required();
  cmd_verify->add_option("--max-n", opt.max_n, "last order")->required();
  cmd_verify->add_option("--engines", opt.engines, "pair like formula:oracle")
      ->required();
  add_common(cmd_verify, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    std::string payload;
    bool any_fail = false;
    if (cmd_gamma->parsed())
      payload = run_scalar("gamma", opt);
    else if (cmd_tau->parsed())
      payload = run_scalar("tau", opt);
    else if (cmd_dv->parsed())
      payload = run_dv(opt);
    else if (cmd_report->parsed())
      payload = run_report(opt);
    else if (cmd_enumerate->parsed())
      payload = run_enumerate(opt);
    else
      payload = run_verify(opt, any_fail);
    std::cout << payload;
    return any_fail ? 1 : 0;
  } catch (const domval::CountOverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const domval::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const domval::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
