#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "schema.hpp"

namespace reeb::cli {

namespace {

using schema::Json;

Json load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return schema::parse_document(buf.str(), path);
}

void emit(const Command& cmd, const Json& doc, std::ostream& out) {
  const std::string text = schema::dump(doc);
  if (!cmd.output) {
    out << text;
    return;
  }
  std::ofstream file(*cmd.output);
  if (!file) throw InputError(*cmd.output + ": cannot open for writing");
  file << text;
}

int run_check(const Command& cmd, std::ostream& out) {
  const TargetSequence target = schema::target_from_json(load(cmd.inputs[0]), cmd.inputs[0]);
  const FeasibilityReport report = assess(target);
  emit(cmd, schema::to_json(report), out);
  bool pass = false;
  if (cmd.criterion == "auto") {
    pass = report.verdict == Verdict::Realized;
  } else if (cmd.criterion == "necessary") {
    pass = report.checks.necessary;
  } else if (cmd.criterion == "thm1") {
    pass = report.checks.strict_increase;
  } else if (cmd.criterion == "remark1") {
    pass = report.checks.mirrored_increase;
  } else {
    pass = report.checks.top_dominance;
  }
  return pass ? kExitOk : kExitInfeasible;
}

int run_plan(const Command& cmd, std::ostream& out) {
  const TargetSequence target = schema::target_from_json(load(cmd.inputs[0]), cmd.inputs[0]);
  if (cmd.strategy == "auto") {
    const FeasibilityReport report = assess(target);
    if (report.verdict != Verdict::Realized) {
      out << schema::dump(schema::to_json(report));
      return kExitInfeasible;
    }
    emit(cmd, schema::to_json(*report.plan), out);
    return kExitOk;
  }

  Json failure = {{"strategy", cmd.strategy}};
  if (!target.groups().is_free()) {
    failure["verdict"] = to_string(Verdict::UnsupportedTorsion);
    out << schema::dump(failure);
    return kExitInfeasible;
  }
  if (cmd.strategy == "prop3") {
    try {
      emit(cmd, schema::to_json(plan_spheres_and_points(target)), out);
      return kExitOk;
    } catch (const StrategyInfeasible& e) {
      failure["error"] = e.what();
      out << schema::dump(failure);
      return kExitInfeasible;
    }
  }
  const PeelResult peeled = plan_peel(target);
  if (!peeled.ok()) {
    failure["verdict"] = to_string(Verdict::PeelFailed);
    failure["certificate"] = schema::to_json(
        Certificate{"peel", {peeled.failure->degree}, peeled.failure->round, peeled.failure->detail});
    out << schema::dump(failure);
    return kExitInfeasible;
  }
  emit(cmd, schema::to_json(*peeled.plan), out);
  return kExitOk;
}

int run_apply(const Command& cmd, std::ostream& out) {
  const Plan plan = schema::plan_from_json(load(cmd.inputs[0]), cmd.inputs[0]);
  emit(cmd, schema::to_json(apply_plan(plan)), out);
  return kExitOk;
}

int run_verify(const Command& cmd, std::ostream& out) {
  const Plan plan = schema::plan_from_json(load(cmd.inputs[0]), cmd.inputs[0]);
  const TargetSequence target = schema::target_from_json(load(cmd.inputs[1]), cmd.inputs[1]);
  const bool ok = verify_plan(plan, target);
  emit(cmd, {{"verified", ok}, {"delta", schema::to_json(delta_of_plan(plan))}}, out);
  return ok ? kExitOk : kExitInfeasible;
}

int run_from_function(const Command& cmd, std::ostream& out) {
  const FunctionSpec spec = schema::function_from_json(load(cmd.inputs[0]), cmd.inputs[0]);
  if (cmd.find_min_n) {
    const MinimalDimension result = find_min_n(spec, *cmd.find_min_n);
    emit(cmd, schema::to_json(result), out);
    return result.min_n ? kExitOk : kExitInfeasible;
  }
  emit(cmd, schema::to_json(sequence_from_function(spec, *cmd.n)), out);
  return kExitOk;
}

int run_search(const Command& cmd, std::ostream& out) {
  const TargetSequence target = schema::target_from_json(load(cmd.inputs[0]), cmd.inputs[0]);
  Json doc = {{"bounds", schema::to_json(cmd.bounds)}};
  if (!target.groups().is_free()) {
    doc.update({{"found", false}, {"plan", nullptr}, {"nodes", 0}, {"reason", "torsion"}});
    emit(cmd, doc, out);
    return kExitInfeasible;
  }
  const SearchOutcome outcome = search_realization(target, cmd.bounds);
  doc["found"] = outcome.plan.has_value();
  doc["plan"] = outcome.plan ? schema::to_json(*outcome.plan) : Json(nullptr);
  doc["nodes"] = outcome.nodes;
  emit(cmd, doc, out);
  return outcome.plan ? kExitOk : kExitInfeasible;
}

}  // namespace

ParseOutcome parse_and_validate(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homology of Reeb spaces under bubbling operations: check, plan, apply, verify, search"};
  app.name("reebcalc");
  app.require_subcommand(1, 1);

  Command cmd;
  std::string output;
  auto add_output = [&](CLI::App* sub) { sub->add_option("-o,--output", output, "Write JSON here instead of stdout"); };

  auto* check = app.add_subcommand("check", "Run every feasibility checker on a target and print the report");
  check->add_option("target", cmd.inputs, "Target JSON")->required()->expected(1)->check(CLI::ExistingFile);
  check->add_option("--criterion", cmd.criterion, "Condition deciding the exit code")
      ->check(CLI::IsMember({"auto", "necessary", "thm1", "remark1", "prop3"}));
  add_output(check);

  auto* plan = app.add_subcommand("plan", "Construct a verified plan realizing a target");
  plan->add_option("target", cmd.inputs, "Target JSON")->required()->expected(1)->check(CLI::ExistingFile);
  plan->add_option("--strategy", cmd.strategy, "auto = prop3 when it applies, else peel")
      ->check(CLI::IsMember({"auto", "prop3", "peel"}));
  add_output(plan);

  auto* apply = app.add_subcommand("apply", "Replay a plan and print the resulting Reeb space homology");
  apply->add_option("plan", cmd.inputs, "Plan JSON")->required()->expected(1)->check(CLI::ExistingFile);
  add_output(apply);

  auto* verify = app.add_subcommand("verify", "Compare a plan's homology increments with a target");
  verify->add_option("files", cmd.inputs, "Plan JSON then target JSON")->required()->expected(2)->check(
      CLI::ExistingFile);
  add_output(verify);

  auto* from_fn = app.add_subcommand("from-function", "Build the rank sequence floor(c(j)) of a function");
  from_fn->add_option("spec", cmd.inputs, "Function spec JSON")->required()->expected(1)->check(CLI::ExistingFile);
  auto* n_opt = from_fn->add_option("-n,--n", cmd.n, "Target dimension")->check(CLI::Range(1, 1 << 16));
  auto* min_opt =
      from_fn->add_option("--find-min-n", cmd.find_min_n, "Search n = 1..N for the least realizable n")
          ->check(CLI::Range(1, 1 << 16));
  n_opt->excludes(min_opt);
  add_output(from_fn);

  auto* search = app.add_subcommand("search", "Exhaustive realization search on a small target");
  search->add_option("target", cmd.inputs, "Target JSON")->required()->expected(1)->check(CLI::ExistingFile);
  search->add_option("--max-n", cmd.bounds.max_n, "Largest n accepted")->check(CLI::Range(1, 16));
  search->add_option("--max-copies", cmd.bounds.max_copies, "Summand multiplicity cap")->check(CLI::Range(1, 64));
  search->add_option("--max-total-rank", cmd.bounds.max_total_rank, "Cap on the total target rank")
      ->check(CLI::Range(1, 256));
  add_output(search);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return {std::nullopt, kExitOk};
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return {std::nullopt, kExitOk};
  } catch (const CLI::ParseError& e) {
    err << "reebcalc: " << e.what() << "\n";
    return {std::nullopt, kExitInputError};
  }

  if (check->parsed()) cmd.subcommand = Subcommand::Check;
  if (plan->parsed()) cmd.subcommand = Subcommand::Plan;
  if (apply->parsed()) cmd.subcommand = Subcommand::Apply;
  if (verify->parsed()) cmd.subcommand = Subcommand::Verify;
  if (from_fn->parsed()) {
    cmd.subcommand = Subcommand::FromFunction;
    if (!cmd.n && !cmd.find_min_n) {
      err << "reebcalc: from-function needs --n or --find-min-n\n";
      return {std::nullopt, kExitInputError};
    }
  }
  if (search->parsed()) cmd.subcommand = Subcommand::Search;
  if (!output.empty()) cmd.output = output;
  return {std::move(cmd), kExitOk};
}

int execute(const Command& cmd, std::ostream& out, std::ostream& err) {
  try {
    switch (cmd.subcommand) {
      case Subcommand::Check:
        return run_check(cmd, out);
      case Subcommand::Plan:
        return run_plan(cmd, out);
      case Subcommand::Apply:
        return run_apply(cmd, out);
      case Subcommand::Verify:
        return run_verify(cmd, out);
      case Subcommand::FromFunction:
        return run_from_function(cmd, out);
      case Subcommand::Search:
        return run_search(cmd, out);
    }
  } catch (const InputError& e) {
    err << "reebcalc: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  ParseOutcome parsed = parse_and_validate(args, out, err);
  if (!parsed.command) return parsed.exit_code;
  return execute(*parsed.command, out, err);
}

}  // namespace reeb::cli
