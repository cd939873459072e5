#include "spinform/cli.hpp"

#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "spinform/config.hpp"
#include "spinform/derham.hpp"
#include "spinform/verify.hpp"

namespace spinform {

namespace {

Weight parse_weight(const std::string& text, int rank, bool epsilon_coords) {
  std::vector<HalfInt> coords;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    auto h = HalfInt::parse(token);
    if (!h) throw DomainError("cannot parse coordinate '" + token + "'");
    coords.push_back(*h);
  }
  if (static_cast<int>(coords.size()) != rank)
    throw DomainError("expected " + std::to_string(rank) + " coordinates, got " +
                      std::to_string(coords.size()));
  return epsilon_coords ? Weight::from_epsilon(coords) : Weight::from_fundamental(coords);
}

void check_cli_rank(int rank) {
  if (rank < 2) throw DomainError("rank must be at least 2");
  check_rank_guard(rank);
}

void print_decomposition(const Decomposition& dec, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << to_json(dec).dump(2) << "\n";
    return;
  }
  for (const auto& [label, m] : dec.summands) {
    if (m != 1) out << m << " x ";
    out << label.str() << "\n";
  }
}

void print_table_text(int rank, std::ostream& out) {
  std::map<NodeIndex, std::string> cells;
  size_t width = 0;
  for (const NodeIndex& idx : node_indices(rank)) {
    std::string text = node_label(rank, idx).hw.str();
    width = std::max(width, text.size());
    cells.emplace(idx, std::move(text));
  }
  width += 2;
  for (int j = 0; j <= rank; ++j) {
    std::string row;
    for (int i = 0; i <= 2 * rank; ++i) {
      auto it = cells.find({i, j});
      std::string cell = it == cells.end() ? "" : it->second;
      cell.resize(width, ' ');
      row += cell;
    }
    while (!row.empty() && row.back() == ' ') row.pop_back();
    if (!row.empty()) out << row << "\n";
  }
}

void print_reports_text(const std::vector<SuiteReport>& reports, std::ostream& out) {
  for (const SuiteReport& r : reports) {
    out << (r.passed() ? "PASS" : "FAIL") << "  " << r.name << "  (" << r.cases << " cases)\n";
    for (const CaseFailure& f : r.failures) out << "      failure: " << f.case_name << ": " << f.message << "\n";
    for (const std::string& n : r.notes) out << "      note: " << n << "\n";
  }
}

int run_parsed(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"decompositions of symplectic-spinor-valued forms over sp(2l,C)"};
  app.require_subcommand(1);

  int rank = 0, degree = 0, depth = -1;
  std::string weight_text, format = "text";
  bool epsilon_coords = false;

  auto add_format = [&](CLI::App* cmd, bool with_dot) {
    cmd->add_option("--format", format,
                    with_dot ? "output format: text, json or dot" : "output format: text or json")
        ->check(with_dot ? CLI::IsMember({"text", "json", "dot"}) : CLI::IsMember({"text", "json"}));
  };

  CLI::App* wedge = app.add_subcommand("wedge", "decompose a wedge power of the defining representation");
  wedge->add_option("rank", rank)->required();
  wedge->add_option("degree", degree)->required();
  add_format(wedge, false);

  CLI::App* tspin = app.add_subcommand("tensor-spinor", "decompose a finite module tensored with the basic spinor");
  tspin->add_option("rank", rank)->required();
  tspin->add_option("weight", weight_text)->required();
  tspin->add_flag("--epsilon", epsilon_coords, "read the weight in epsilon coordinates");
  add_format(tspin, false);

  CLI::App* tdef =
      app.add_subcommand("tensor-defining", "decompose a higher spinor module tensored with the defining module");
  tdef->add_option("rank", rank)->required();
  tdef->add_option("weight", weight_text)->required();
  tdef->add_flag("--epsilon", epsilon_coords, "read the weight in epsilon coordinates");
  add_format(tdef, false);

  CLI::App* forms = app.add_subcommand("forms", "decompose spinor-valued forms of one degree");
  forms->add_option("rank", rank)->required();
  forms->add_option("degree", degree)->required();
  add_format(forms, false);

  CLI::App* table = app.add_subcommand("ejtable", "print the full label table");
  table->add_option("rank", rank)->required();
  add_format(table, false);

  CLI::App* diag = app.add_subcommand("diagram", "emit the derived-sequence diagram");
  diag->add_option("rank", rank)->required();
  add_format(diag, true);

  CLI::App* verify = app.add_subcommand("verify", "run every verification suite for one rank");
  verify->add_option("rank", rank)->required();
  verify->add_option("--depth", depth, "truncation depth for the character checks");
  add_format(verify, false);

  std::vector<const char*> argv;
  argv.push_back("spinform");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << nlohmann::json{{"error", {{"type", "usage"}, {"message", e.what()}}}}.dump() << "\n";
    return 1;
  }

  if (wedge->parsed()) {
    check_cli_rank(rank);
    print_decomposition(wedge_decomposition(rank, degree), format, out);
  } else if (tspin->parsed()) {
    check_cli_rank(rank);
    print_decomposition(tensor_with_spinor(parse_weight(weight_text, rank, epsilon_coords)), format, out);
  } else if (tdef->parsed()) {
    check_cli_rank(rank);
    print_decomposition(tensor_with_defining(parse_weight(weight_text, rank, epsilon_coords)), format, out);
  } else if (forms->parsed()) {
    check_cli_rank(rank);
    print_decomposition(forms_spinor_decomposition(rank, degree), format, out);
  } else if (table->parsed()) {
    check_cli_rank(rank);
    if (format == "json") {
      nlohmann::json nodes = nlohmann::json::array();
      for (const NodeIndex& idx : node_indices(rank)) {
        nlohmann::json coords = nlohmann::json::array();
        for (const HalfInt& h : node_label(rank, idx).hw.fundamental_coords()) coords.push_back(h.str());
        nodes.push_back(nlohmann::json{
            {"i", idx.i}, {"j", idx.j}, {"label", {{"family", "Bounded"}, {"fundamental_coords", coords}}}});
      }
      out << nlohmann::json{{"rank", rank}, {"nodes", nodes}}.dump(2) << "\n";
    } else {
      print_table_text(rank, out);
    }
  } else if (diag->parsed()) {
    check_cli_rank(rank);
    DiagramFormat f = format == "dot" ? DiagramFormat::dot
                      : format == "json" ? DiagramFormat::json
                                         : DiagramFormat::text;
    out << emit(diagram(rank), f);
  } else if (verify->parsed()) {
    check_cli_rank(rank);
    if (depth < 0) depth = default_depth(rank);
    check_depth_guard(depth);
    std::vector<SuiteReport> reports = run_verification(rank, depth);
    if (format == "json")
      out << to_json(reports, rank, depth).dump(2) << "\n";
    else
      print_reports_text(reports, out);
    if (!all_passed(reports)) {
      if (format != "json") out << "FAILED\n";
      return 2;
    }
    if (format != "json") out << "OK\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run_parsed(args, out, err);
  } catch (const RankError& e) {
    err << nlohmann::json{{"error", {{"type", "rank"}, {"message", e.what()}}}}.dump() << "\n";
  } catch (const DomainError& e) {
    err << nlohmann::json{{"error", {{"type", "domain"}, {"message", e.what()}}}}.dump() << "\n";
  } catch (const TruncationError& e) {
    err << nlohmann::json{{"error", {{"type", "truncation"}, {"message", e.what()}}}}.dump() << "\n";
  } catch (const ResourceError& e) {
    err << nlohmann::json{{"error", {{"type", "resource"}, {"message", e.what()}}}}.dump() << "\n";
  } catch (const ConsistencyError& e) {
    err << nlohmann::json{{"error", {{"type", "consistency"}, {"message", e.what()}}}}.dump() << "\n";
  }
  return 1;
}

}  // namespace spinform
