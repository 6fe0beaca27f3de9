#include <doctest.h>

#include <json.hpp>

#include "gion/commands.hpp"
#include "gion/geometry.hpp"
#include "gion/record.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using nlohmann::json;

namespace {

struct CommandResult {
  int status = -1;
  std::string out;
  std::string err;
};

template <typename Args, typename Fn>
CommandResult run_command(Fn fn, const Args& args) {
  std::ostringstream out, err;
  CommandResult result;
  result.status = fn(args, out, err);
  result.out = out.str();
  result.err = err.str();
  return result;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    lines.push_back(line);
  }
  return lines;
}

// minimal well-formedness scan: every opened tag is closed in order
bool xml_balanced(const std::string& text) {
  std::vector<std::string> stack;
  std::size_t i = 0;
  while ((i = text.find('<', i)) != std::string::npos) {
    const std::size_t end = text.find('>', i);
    if (end == std::string::npos) {
      return false;
    }
    std::string tag = text.substr(i + 1, end - i - 1);
    i = end + 1;
    if (tag.empty() || tag.front() == '?' || tag.front() == '!') {
      continue;
    }
    if (tag.back() == '/') {
      continue;  // self-closing
    }
    if (tag.front() == '/') {
      const std::string name = tag.substr(1);
      if (stack.empty() || stack.back() != name) {
        return false;
      }
      stack.pop_back();
      continue;
    }
    const std::size_t space = tag.find_first_of(" \t\n");
    stack.push_back(space == std::string::npos ? tag : tag.substr(0, space));
  }
  return stack.empty();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("format_double renders twelve significant digits") {
  CHECK(gion::format_double(1.0) == "1");
  CHECK(gion::format_double(0.1) == "0.1");
  CHECK(gion::format_double(-2.5) == "-2.5");
  CHECK(gion::format_double(2.1819805153394639) == "2.18198051534");
  CHECK(gion::format_double(1e20) == "1e+20");
  CHECK(gion::format_double(0.0) == "0");
  CHECK_THROWS_AS(gion::format_double(std::nan("")), std::domain_error);
  CHECK_THROWS_AS(gion::format_double(INFINITY), std::domain_error);
}

TEST_CASE("parse_output_format accepts the three formats") {
  CHECK(gion::parse_output_format("text") == gion::OutputFormat::Text);
  CHECK(gion::parse_output_format("json") == gion::OutputFormat::Json);
  CHECK(gion::parse_output_format("csv") == gion::OutputFormat::Csv);
  CHECK_THROWS_AS(gion::parse_output_format("yaml"), std::invalid_argument);
}

TEST_CASE("output records serialize deterministically in all formats") {
  gion::OutputRecord rec("demo");
  rec.input("p", 2.5);
  rec.input("label", std::string("a,b \"c\""));
  rec.output("count", static_cast<long long>(3));
  rec.output("flag", true);
  rec.diagnostic("residual", 1.5e-13);

  CHECK(rec.to_json() ==
        "{\"mode\":\"demo\",\"inputs\":{\"p\":2.5,\"label\":\"a,b \\\"c\\\"\"},"
        "\"outputs\":{\"count\":3,\"flag\":true},"
        "\"diagnostics\":{\"residual\":1.5e-13}}");
  // the csv header row carries the mode plus every key in order
  const auto csv_lines = split_lines(rec.to_csv());
  REQUIRE(csv_lines.size() == 2);
  CHECK(csv_lines[0] == "mode,p,label,count,flag,residual");
  CHECK(csv_lines[1] == "demo,2.5,\"a,b \"\"c\"\"\",3,true,1.5e-13");
  const auto text_lines = split_lines(rec.to_text());
  CHECK(text_lines.front() == "mode: demo");
  CHECK(rec.serialize(gion::OutputFormat::Json) == rec.to_json() + "\n");
  // identical records serialize to identical bytes
  gion::OutputRecord again("demo");
  again.input("p", 2.5);
  again.input("label", std::string("a,b \"c\""));
  again.output("count", static_cast<long long>(3));
  again.output("flag", true);
  again.diagnostic("residual", 1.5e-13);
  CHECK(again.to_json() == rec.to_json());
  CHECK(again.to_text() == rec.to_text());
}

TEST_CASE("solve command emits a parsable feasible record") {
  gion::SolveArgs args;
  args.p = 4.5355339059327378;
  args.q = "2.1819805153394639";
  args.format = gion::OutputFormat::Json;
  const auto run = run_command(gion::cmd_solve, args);
  CHECK(run.status == gion::kExitOk);
  CHECK(run.err.empty());
  const json doc = json::parse(run.out);
  CHECK(doc["mode"] == "solve");
  CHECK(doc["outputs"]["verdict"] == "Feasible");
  CHECK(std::abs(doc["outputs"]["a"].get<double>() - 2.0) <= 1e-10);
  CHECK(std::abs(doc["outputs"]["s"].get<double>() - std::sqrt(0.5)) <= 1e-10);
  CHECK(std::abs(doc["outputs"]["t"].get<double>() - (std::sqrt(2.0) - 1)) <=
        1e-9);
  CHECK(std::abs(doc["diagnostics"]["q_residual"].get<double>()) <= 1e-10);
}

TEST_CASE("solve command accepts exact fractions for q") {
  gion::SolveArgs args;
  args.p = 1.0;
  args.q = "9/4";
  args.format = gion::OutputFormat::Json;
  const auto run = run_command(gion::cmd_solve, args);
  CHECK(run.status == gion::kExitOk);
  const json doc = json::parse(run.out);
  CHECK(std::abs(doc["outputs"]["t"].get<double>() - 0.47629381878125278) <=
        1e-12);
}

TEST_CASE("solve command reports infeasible input on exit code 2") {
  gion::SolveArgs args;
  args.p = 1.0;
  args.q = "2.5";
  args.format = gion::OutputFormat::Json;
  const auto run = run_command(gion::cmd_solve, args);
  CHECK(run.status == gion::kExitInfeasible);
  const json doc = json::parse(run.out);
  CHECK(doc["outputs"]["verdict"] == "QTooLarge");
  // serialized values carry 12 significant digits
  CHECK(std::abs(doc["outputs"]["violated_bound"].get<double>() -
                 gion::constants().q0) <= 1e-11);
  CHECK(run.err.find("exceeds the feasibility limit") != std::string::npos);

  args.q = "garbage";
  CHECK(run_command(gion::cmd_solve, args).status == gion::kExitInternal);
}

TEST_CASE("solve command output is byte-stable across runs") {
  gion::SolveArgs args;
  args.p = 10.0;
  args.q = "2.3";
  for (const auto format :
       {gion::OutputFormat::Text, gion::OutputFormat::Json,
        gion::OutputFormat::Csv}) {
    args.format = format;
    const auto first = run_command(gion::cmd_solve, args);
    const auto second = run_command(gion::cmd_solve, args);
    CHECK(first.status == gion::kExitOk);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("forward command reproduces the right-angle instance from t") {
  gion::ForwardArgs args;
  args.param = "t";
  args.value = "0.4142135624";  // 10-digit sqrt(2)-1
  args.format = gion::OutputFormat::Json;
  const auto run = run_command(gion::cmd_forward, args);
  CHECK(run.status == gion::kExitOk);
  const json doc = json::parse(run.out);
  CHECK(std::abs(doc["outputs"]["a"].get<double>() - 2.0) <= 1e-7);
  CHECK(std::abs(doc["outputs"]["m"].get<double>() - 1.0) <= 1e-7);
  CHECK(std::abs(doc["outputs"]["q"].get<double>() - 2.1819805153394639) <=
        1e-9);
  CHECK(std::abs(doc["diagnostics"]["phi"].get<double>() -
                 std::numbers::pi / 2) <= 1e-9);
}

TEST_CASE("forward command understands angle units and scales") {
  gion::ForwardArgs args;
  args.param = "phi";
  args.value = "117deg";
  args.format = gion::OutputFormat::Json;
  CHECK(run_command(gion::cmd_forward, args).status == gion::kExitInfeasible);

  args.value = "116.565deg";
  const auto feasible = run_command(gion::cmd_forward, args);
  CHECK(feasible.status == gion::kExitOk);

  // radians are the default unit
  args.value = "1.5707963267948966";
  const auto rad = run_command(gion::cmd_forward, args);
  CHECK(rad.status == gion::kExitOk);
  const json doc = json::parse(rad.out);
  CHECK(std::abs(doc["outputs"]["a"].get<double>() - 2.0) <= 1e-12);

  args.value = "90deg";
  const auto deg = run_command(gion::cmd_forward, args);
  const json deg_doc = json::parse(deg.out);
  CHECK(std::abs(deg_doc["outputs"]["a"].get<double>() - 2.0) <= 1e-12);

  // natural scale multiplies all lengths by the arc radius
  args.scale = "natural";
  const auto natural = run_command(gion::cmd_forward, args);
  const json nat_doc = json::parse(natural.out);
  const double radius = nat_doc["diagnostics"]["arc_radius"].get<double>();
  CHECK(std::abs(radius - 2 * std::pow(1 + std::pow(std::sqrt(2.0) - 1, 2), 2)) <=
        1e-9);
  CHECK(std::abs(nat_doc["outputs"]["a"].get<double>() - 2.0 * radius) <=
        1e-9);
  CHECK(std::abs(nat_doc["outputs"]["q"].get<double>() -
                 deg_doc["outputs"]["q"].get<double>()) <= 1e-13);
}

TEST_CASE("forward command rejects out-of-range parameters") {
  gion::ForwardArgs args;
  args.param = "r";
  args.value = "0.6";
  CHECK(run_command(gion::cmd_forward, args).status == gion::kExitInfeasible);
  args.param = "x";
  args.value = "1.5";
  CHECK(run_command(gion::cmd_forward, args).status == gion::kExitInfeasible);
  args.param = "t";
  args.value = "not-a-number";
  CHECK(run_command(gion::cmd_forward, args).status == gion::kExitInternal);
  args.param = "bogus";
  args.value = "0.5";
  CHECK(run_command(gion::cmd_forward, args).status == gion::kExitInternal);
}

TEST_CASE("scan command writes a strictly increasing q column") {
  const std::string path = "/tmp/gion_test_scan.csv";
  gion::ScanArgs args;
  args.n = 100;
  args.output = path;
  CHECK(run_command(gion::cmd_scan, args).status == gion::kExitOk);

  const auto lines = split_lines(read_file(path));
  REQUIRE(lines.size() == 101);
  CHECK(lines[0] == "t,q,p,a,m,s,d");
  double prev_q = 2.0;
  double last_q = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream row(lines[i]);
    std::string cell;
    std::vector<double> cells;
    while (std::getline(row, cell, ',')) {
      cells.push_back(std::stod(cell));
    }
    REQUIRE(cells.size() == 7);
    CHECK(cells[1] > prev_q);
    prev_q = cells[1];
    last_q = cells[1];
    // p, a, m, s, d at unit radius are consistent within the row
    CHECK(std::abs(cells[2] - (cells[3] + cells[4] + cells[5] + cells[6])) <=
          1e-9);
  }
  CHECK(std::abs(last_q - gion::constants().q0) <= 1e-9);
  std::remove(path.c_str());

  args.n = 2;
  args.output = path;
  CHECK(run_command(gion::cmd_scan, args).status == gion::kExitOk);
  CHECK(split_lines(read_file(path)).size() == 3);
  std::remove(path.c_str());

  args.n = 1;
  CHECK(run_command(gion::cmd_scan, args).status == gion::kExitInternal);
  args.n = 10;
  args.output = "/nonexistent-dir/x.csv";
  CHECK(run_command(gion::cmd_scan, args).status == gion::kExitInternal);
}

TEST_CASE("plot command renders well-formed labeled SVG files") {
  const std::string path = "/tmp/gion_test_plot.svg";
  for (const std::string kind : {"q_of_t", "phi_of_q"}) {
    CAPTURE(kind);
    gion::PlotArgs args;
    args.kind = kind;
    args.output = path;
    CHECK(run_command(gion::cmd_plot, args).status == gion::kExitOk);
    const std::string svg = read_file(path);
    CHECK(xml_balanced(svg));
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("polyline") != std::string::npos);
    std::remove(path.c_str());
  }

  gion::PlotArgs args;
  args.kind = "q_of_t";
  args.output = "/nonexistent-dir/x.svg";
  CHECK(run_command(gion::cmd_plot, args).status == gion::kExitInternal);
  args.kind = "mystery";
  args.output = path;
  CHECK(run_command(gion::cmd_plot, args).status == gion::kExitInternal);
}

TEST_CASE("plot curves carry their axis labels") {
  const std::string path = "/tmp/gion_test_plot_labels.svg";
  gion::PlotArgs args;
  args.kind = "phi_of_q";
  args.output = path;
  REQUIRE(run_command(gion::cmd_plot, args).status == gion::kExitOk);
  const std::string svg = read_file(path);
  CHECK(svg.find("phi as a function of q") != std::string::npos);
  CHECK(svg.find("phi (degrees)") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("verify command passes genuine aggregates and notes the boundary") {
  gion::VerifyArgs args;
  args.p = 10.0;
  args.q = "2.3";
  args.format = gion::OutputFormat::Json;
  const auto run = run_command(gion::cmd_verify, args);
  CHECK(run.status == gion::kExitOk);
  const json doc = json::parse(run.out);
  CHECK(doc["outputs"]["passed"] == true);
  CHECK(doc["outputs"]["max_rel_deviation"].get<double>() <= 1e-8);
  CHECK_FALSE(doc["diagnostics"].contains("note"));

  args.q = "2.3949722";  // within 1e-6 of the feasibility limit
  const auto boundary = run_command(gion::cmd_verify, args);
  CHECK(boundary.status == gion::kExitOk);
  const json bdoc = json::parse(boundary.out);
  CHECK(bdoc["diagnostics"].contains("note"));

  args.q = "2.5";
  CHECK(run_command(gion::cmd_verify, args).status == gion::kExitInfeasible);
  args.q = "bad";
  CHECK(run_command(gion::cmd_verify, args).status == gion::kExitInternal);
}

TEST_CASE("certify command emits exact coefficients and certificates") {
  gion::CertifyArgs args;
  args.q_num = 9;
  args.q_den = 4;
  args.format = gion::OutputFormat::Json;
  const auto run = run_command(gion::cmd_certify, args);
  CHECK(run.status == gion::kExitOk);
  const json doc = json::parse(run.out);
  CHECK(doc["inputs"]["q"] == "9/4");
  CHECK(doc["outputs"]["c0"] == "1/4");
  CHECK(doc["outputs"]["c10"] == "8");
  CHECK(doc["outputs"]["sturm_count"] == 1);
  CHECK(doc["outputs"]["verdict"] == "Irreducible");
  CHECK(doc["outputs"]["witness_prime"] == 13);

  args.q_num = 2;
  args.q_den = 1;
  const auto at2 = run_command(gion::cmd_certify, args);
  CHECK(at2.status == gion::kExitOk);
  const json doc2 = json::parse(at2.out);
  CHECK(doc2["outputs"]["c0"] == "0");
  CHECK(doc2["outputs"]["sturm_count"] == 0);
  CHECK(doc2["outputs"]["verdict"] == "Reducible");
  CHECK(doc2["outputs"]["witness_root"] == "0");
  CHECK(doc2["diagnostics"]["root_at_zero_multiplicity"] == 1);

  args.q_num = 3;
  const auto at3 = run_command(gion::cmd_certify, args);
  CHECK(json::parse(at3.out)["outputs"]["sturm_count"] == 0);

  args.q_den = 0;
  CHECK(run_command(gion::cmd_certify, args).status == gion::kExitInternal);
}

#ifdef GION_CLI_PATH

namespace {

CommandResult run_binary(const std::string& args) {
  const std::string cmd =
      std::string(GION_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CommandResult result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.out.append(buffer, got);
  }
  const int rc = pclose(pipe);
  result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return result;
}

}  // namespace

TEST_CASE("the installed binary wires flags through to the commands") {
  const auto solve = run_binary("solve --p 1 --q 9/4 --format json");
  CHECK(solve.status == 0);
  const json doc = json::parse(solve.out);
  CHECK(std::abs(doc["outputs"]["t"].get<double>() - 0.47629381878125278) <=
        1e-12);

  const auto again = run_binary("solve --p 1 --q 9/4 --format json");
  CHECK(again.out == solve.out);  // byte-identical across processes

  CHECK(run_binary("solve --p 1 --q 2.5").status == 2);
  CHECK(run_binary("solve --p -3 --q 2.2").status == 2);
  CHECK(run_binary("forward --phi 117deg").status == 2);
  CHECK(run_binary("forward --phi 116.565deg").status == 0);
  CHECK(run_binary("certify --q-num 9 --q-den 4").status == 0);

  // argument errors are caught by the parser, not the commands
  CHECK(run_binary("").status != 0);
  CHECK(run_binary("solve --p 1").status != 0);
  CHECK(run_binary("solve --p 1 --q 2.2 --format yaml").status != 0);
  CHECK(run_binary("forward --phi 1.0 --t 0.2").status != 0);
  CHECK(run_binary("plot --kind mystery --output /tmp/x.svg").status != 0);
}

#endif  // GION_CLI_PATH
