#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "bdc/errors.hpp"
#include "bdc_cli/cli.hpp"
#include "detail.hpp"

namespace bdc::cli {

int exit_code(ErrorCode code) noexcept {
  switch (classify(code)) {
    case ErrorClass::Input: return 2;
    case ErrorClass::Topology: return 3;
    case ErrorClass::Hypothesis:
    case ErrorClass::Internal: return 4;
  }
  return 4;
}

namespace {

std::string_view class_name(ErrorClass c) {
  switch (c) {
    case ErrorClass::Input: return "input";
    case ErrorClass::Topology: return "topology";
    case ErrorClass::Hypothesis: return "hypothesis";
    case ErrorClass::Internal: return "internal";
  }
  return "internal";
}

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::MalformedInput, "cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(f), {});
}

Outcome emit(const Json& report, bool json) {
  Outcome o;
  // A report that fails its own validation is a bug, never a result.
  const auto problems = validate_report(report);
  if (!problems.empty()) {
    o.code = 4;
    o.err = "internal: report failed validation: " + problems.front() + "\n";
    return o;
  }
  o.out = json ? report.dump(2) + "\n" : render_text(report);
  return o;
}

Outcome fail(const std::string& command, const Error& e, bool json) {
  Outcome o;
  o.code = exit_code(e.code());
  o.err = std::string("error: ") + e.what() + "\n";
  if (json) {
    Json j = header(command);
    j["error"] = {{"code", to_string(e.code())}, {"class", class_name(classify(e.code()))}, {"message", e.what()}};
    o.out = j.dump(2) + "\n";
  }
  return o;
}

}  // namespace

Outcome run(const std::vector<std::string>& args) {
  CLI::App app{"Branched double cover invariants of alternating links", "bdc"};
  app.require_subcommand(1);

  Options opt;
  std::string mark;
  std::uint64_t seed = 0;
  std::string path;
  std::int64_t a = 0;
  std::int64_t b = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", opt.json, "Machine-readable output");
    sub->add_option("--threads", opt.threads, "Worker threads (results do not depend on it)")
        ->check(CLI::Range(1U, 256U));
  };
  auto with_input = [&](CLI::App* sub, bool markable) {
    common(sub);
    sub->add_option("input", path, "Input document, - for stdin")->required();
    if (markable) sub->add_option("--mark", mark, "Marked arc (diagram) or marked vertex id (graph)");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "Full report for a diagram or white graph");
  with_input(analyze, true);
  CLI::App* obstruct = app.add_subcommand("obstruct", "Obstruction verdicts only");
  with_input(obstruct, true);
  CLI::App* mk1 = app.add_subcommand("mk1", "Handle-slide simulation on the chainmail link");
  with_input(mk1, true);
  CLI::App* witness = app.add_subcommand("witness", "White graph realising a weighted plane graph");
  with_input(witness, false);

  CLI::App* plumb = app.add_subcommand("plumb", "Plumbing tree calculus");
  plumb->require_subcommand(1);
  CLI::App* check = plumb->add_subcommand("check", "Normal form conditions");
  with_input(check, false);
  CLI::App* reduce = plumb->add_subcommand("reduce", "Reduce to normal form");
  with_input(reduce, false);
  reduce->add_option("--seed", seed, "Random move order");
  CLI::App* decide = plumb->add_subcommand("decide", "Spin filling decision");
  with_input(decide, false);

  CLI::App* cf = app.add_subcommand("cf", "Negative continued fraction of p/q");
  common(cf);
  cf->add_option("p", a)->required();
  cf->add_option("q", b)->required();
  CLI::App* berge = app.add_subcommand("berge", "Lens spaces L(ik +- 1, k^2)");
  common(berge);
  berge->add_option("i", a)->required();
  berge->add_option("k", b)->required();

  std::ostringstream out;
  std::ostringstream err;
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    Outcome o;
    o.code = app.exit(e, out, err);
    if (o.code != 0) o.code = 2;
    o.out = out.str();
    o.err = err.str();
    return o;
  }

  if (!mark.empty()) opt.mark = mark;
  if (reduce->parsed() && reduce->count("--seed") > 0) opt.seed = seed;

  std::string command;
  for (const CLI::App* s : app.get_subcommands()) {
    command = s->get_name();
    for (const CLI::App* t : s->get_subcommands()) command += " " + t->get_name();
  }

  try {
    Json report;
    if (analyze->parsed()) report = analyze_report(read_input(path), opt);
    else if (obstruct->parsed()) report = obstruct_report(read_input(path), opt);
    else if (mk1->parsed()) report = mk1_report(read_input(path), opt);
    else if (witness->parsed()) report = witness_report(read_input(path));
    else if (check->parsed()) report = plumb_check_report(read_input(path));
    else if (reduce->parsed()) report = plumb_reduce_report(read_input(path), opt);
    else if (decide->parsed()) report = plumb_decide_report(read_input(path));
    else if (cf->parsed()) report = cf_report(a, b);
    else if (berge->parsed()) report = berge_report(a, b);
    return emit(report, opt.json);
  } catch (const Error& e) {
    return fail(command, e, opt.json);
  } catch (const std::exception& e) {
    return fail(command, Error(ErrorCode::Internal, e.what()), opt.json);
  }
}

}  // namespace bdc::cli
