#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "isoforge/classify.hpp"
#include "isoforge/doubling.hpp"
#include "isoforge/error.hpp"
#include "isoforge/hull.hpp"
#include "isoforge/io.hpp"
#include "isoforge/metric.hpp"
#include "isoforge/perturb.hpp"
#include "isoforge/rigidify.hpp"

namespace {

using namespace isoforge;

struct CommonFlags {
  std::string group_source;
  std::string action_path;
  std::string metric_path;
  std::string out_path;
  std::string epsilon_text = "1/10";
  std::string scheme_text = "direct";
  bool verify_on = false;
  bool verify_off = false;
  std::uint64_t seed = 0;
  int trials = 100;
  int points = 0;
  int expect_order = -1;
  std::int64_t budget = 0;
};

NamedGroup resolve_group(const std::string &source) {
  if (source.rfind("zoo:", 0) == 0) {
    ZooEntry entry = zoo(source.substr(4));
    return NamedGroup{entry.name, std::move(entry.group)};
  }
  return load_group(source);
}

GroupAction resolve_action(const CommonFlags &flags) {
  if (!flags.action_path.empty()) return load_action(flags.action_path);
  if (!flags.group_source.empty())
    return GroupAction::left_translations(resolve_group(flags.group_source).group);
  throw Error(ErrorKind::Usage, "need --action or --group");
}

Rat parse_epsilon(const std::string &text) {
  const Rat eps = parse_rational(text);
  if (eps <= 0)
    throw Error(ErrorKind::Usage, "--epsilon must be positive");
  return eps;
}

SeparationScheme parse_scheme(const std::string &text) {
  if (text == "direct") return SeparationScheme::kDirect;
  if (text == "paper") return SeparationScheme::kPaper;
  throw Error(ErrorKind::Usage, "--scheme must be 'paper' or 'direct'");
}

bool resolve_verify(const CommonFlags &flags, int degree) {
  if (flags.verify_on && flags.verify_off)
    throw Error(ErrorKind::Usage, "--verify conflicts with --no-verify");
  if (flags.verify_on) return true;
  if (flags.verify_off) return false;
  return degree <= 16;  // oracle cost cutoff
}

std::int64_t resolve_budget(const CommonFlags &flags) {
  return flags.budget > 0 ? flags.budget : search_budget_from_env();
}

const char *yesno(bool b) { return b ? "true" : "false"; }

void print_rigidity(const RigidityReport &report, const std::string &out_path) {
  std::cout << "order=" << report.realized_group_order << "\n";
  std::cout << "exact=" << yesno(report.exact) << "\n";
  std::cout << "verified=" << yesno(report.verified) << "\n";
  std::cout << "corridor=" << format_rational(report.corridor.first) << ","
            << format_rational(report.corridor.second) << "\n";
  if (!out_path.empty()) save_metric(out_path, report.metric);
}

void add_common(CLI::App *cmd, CommonFlags &flags) {
  cmd->add_option("--group", flags.group_source,
                  "group source: zoo:<name> or a group file");
  cmd->add_option("--action", flags.action_path, "action file");
  cmd->add_option("--metric", flags.metric_path, "metric file");
  cmd->add_option("--epsilon", flags.epsilon_text, "corridor width p/q");
  cmd->add_option("--scheme", flags.scheme_text, "paper|direct");
  cmd->add_flag("--verify", flags.verify_on, "run the isometry oracle");
  cmd->add_flag("--no-verify", flags.verify_off, "skip the isometry oracle");
  cmd->add_option("--seed", flags.seed, "random seed");
  cmd->add_option("--trials", flags.trials, "trial count");
  cmd->add_option("--points", flags.points, "point count");
  cmd->add_option("--budget", flags.budget, "search node budget");
  cmd->add_option("--expect-order", flags.expect_order, "expected group order");
  cmd->add_option("--out", flags.out_path, "output file");
}

int dispatch(const std::string &cmd, const CommonFlags &flags) {
  const std::int64_t budget = resolve_budget(flags);

  if (cmd == "classify") {
    if (flags.group_source.empty())
      throw Error(ErrorKind::Usage, "classify needs --group");
    const NamedGroup named = resolve_group(flags.group_source);
    const Classification cls = classify(named.group, budget);
    std::cout << "name=" << named.name << "\n";
    std::cout << "order=" << named.group.order() << "\n";
    std::cout << "case=" << group_case_name(cls.group_case) << "\n";
    std::cout << "hull_e=" << cls.hull_e.maps.size() << "\n";
    std::cout << "kappa_in_hull=" << yesno(cls.kappa_in_hull) << "\n";
    return 0;
  }

  if (cmd == "hull") {
    const GroupAction action = resolve_action(flags);
    const HullSet hull = symmetrized_hull(action, budget);
    std::cout << "order=" << hull.maps.size() << "\n";
    std::cout << "closed=" << yesno(hull.closed) << "\n";
    return 0;
  }

  if (cmd == "rigidify") {
    const GroupAction action = resolve_action(flags);
    std::optional<RationalMetric> seed;
    if (!flags.metric_path.empty()) seed = load_metric(flags.metric_path);
    const RigidityReport report =
        rigid_metric(action, seed, parse_epsilon(flags.epsilon_text),
                     parse_scheme(flags.scheme_text),
                     resolve_verify(flags, action.degree()), budget);
    print_rigidity(report, flags.out_path);
    return 0;
  }

  if (cmd == "verify") {
    if (flags.metric_path.empty())
      throw Error(ErrorKind::Usage, "verify needs --metric");
    const RationalMetric d = load_metric(flags.metric_path);
    const auto order = isometry_perms(d, budget).size();
    std::cout << "order=" << order << "\n";
    if (flags.expect_order >= 0) {
      const bool match = order == static_cast<std::size_t>(flags.expect_order);
      std::cout << "match=" << yesno(match) << "\n";
      if (!match) return 1;
    }
    return 0;
  }

  if (cmd == "zoo") {
    if (flags.group_source.empty())
      throw Error(ErrorKind::Usage, "zoo needs --group");
    const NamedGroup named = resolve_group(flags.group_source);
    const StructureReport st = named.group.structure();
    std::cout << "name=" << named.name << "\n";
    std::cout << "order=" << named.group.order() << "\n";
    std::cout << "abelian=" << yesno(st.abelian) << "\n";
    std::cout << "boolean=" << yesno(st.boolean) << "\n";
    std::cout << "exponent=" << st.exponent << "\n";
    if (!flags.out_path.empty()) {
      std::ofstream out(flags.out_path);
      if (!out)
        throw Error(ErrorKind::IoError, "cannot write '" + flags.out_path + "'");
      write_group(out, named.name, named.group);
    }
    return 0;
  }

  if (cmd == "product-rigid") {
    if (flags.group_source.empty() || flags.points < 1)
      throw Error(ErrorKind::Usage, "product-rigid needs --group and --points");
    const NamedGroup named = resolve_group(flags.group_source);
    const int degree = named.group.order() * flags.points;
    auto [report, action] = product_rigid(
        named.group, flags.points, parse_epsilon(flags.epsilon_text),
        resolve_verify(flags, degree), budget);
    print_rigidity(report, flags.out_path);
    return 0;
  }

  if (cmd == "union-rigid") {
    if (flags.action_path.empty())
      throw Error(ErrorKind::Usage, "union-rigid needs --action");
    const GroupAction base = load_action(flags.action_path);
    const int degree = base.degree() + base.group().order();
    auto [report, action] = disjoint_union_rigid(
        base, parse_epsilon(flags.epsilon_text), resolve_verify(flags, degree),
        budget);
    print_rigidity(report, flags.out_path);
    return 0;
  }

  if (cmd == "abelian-rigid") {
    if (flags.group_source.empty())
      throw Error(ErrorKind::Usage, "abelian-rigid needs --group");
    const NamedGroup named = resolve_group(flags.group_source);
    const RigidityReport report = abelian_rigid(
        named.group, parse_epsilon(flags.epsilon_text),
        resolve_verify(flags, named.group.order()), budget);
    print_rigidity(report, flags.out_path);
    return 0;
  }

  if (cmd == "density") {
    if (flags.points < 3)
      throw Error(ErrorKind::Usage, "density needs --points >= 3");
    const DensityReport report =
        density_trial(flags.points, flags.trials, flags.seed);
    std::cout << "trials=" << report.trials << "\n";
    std::cout << "trivial=" << report.trivial_count << "\n";
    std::cout << "fraction=" << format_rational(report.fraction) << "\n";
    std::cout << "corridor_all_trivial=" << yesno(report.corridor_all_trivial)
              << "\n";
    return 0;
  }

  if (cmd == "census") {
    const CensusReport report = iso_singular_census(curated_zoo(), budget);
    for (const CensusEntry &e : report.iso_singular)
      std::cout << "member=" << e.name << ",order=" << e.order
                << ",exponent=" << e.exponent << "\n";
    std::cout << "all_exponent_four=" << yesno(report.all_exponent_four) << "\n";
    std::cout << "same_order_isomorphic=" << yesno(report.same_order_isomorphic)
              << "\n";
    std::cout << "is_family_orders_match="
              << yesno(report.is_family_orders_match) << "\n";
    return 0;
  }

  if (cmd == "break-symmetry") {
    if (flags.group_source.empty())
      throw Error(ErrorKind::Usage, "break-symmetry needs --group");
    const NamedGroup named = resolve_group(flags.group_source);
    const FiniteGroup &g = named.group;
    const RationalMetric d = flags.metric_path.empty()
                                 ? RationalMetric::discrete(g.order())
                                 : load_metric(flags.metric_path);
    std::vector<int> kappa_im(g.order());
    for (int x = 0; x < g.order(); ++x) kappa_im[x] = g.inv(x);
    const Perm kappa(std::move(kappa_im));
    const RationalMetric rho =
        break_symmetry(d, g, kappa, parse_epsilon(flags.epsilon_text));
    bool still_isometry = true;
    for (int x = 0; x < g.order() && still_isometry; ++x)
      for (int y = x + 1; y < g.order(); ++y)
        if (rho.at(kappa[x], kappa[y]) != rho.at(x, y)) {
          still_isometry = false;
          break;
        }
    std::cout << "broken=" << yesno(!still_isometry) << "\n";
    if (!flags.out_path.empty()) save_metric(flags.out_path, rho);
    return 0;
  }

  throw Error(ErrorKind::Usage, "unknown command '" + cmd + "'");
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"exact isometry-group realization toolkit"};
  app.require_subcommand(1);
  CommonFlags flags;
  const char *names[] = {"classify",      "hull",        "rigidify",
                         "verify",        "zoo",         "product-rigid",
                         "union-rigid",   "abelian-rigid", "density",
                         "census",        "break-symmetry"};
  for (const char *name : names) add_common(app.add_subcommand(name), flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    return dispatch(app.get_subcommands().front()->get_name(), flags);
  } catch (const Error &e) {
    std::cerr << "error=" << error_kind_name(e.kind()) << "\n"
              << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::SearchBudgetExceeded:
      case ErrorKind::BudgetUnderflow:
        return 2;
      case ErrorKind::Usage:
        return 3;
      default:
        return 1;
    }
  } catch (const std::exception &e) {
    std::cerr << "error=Internal\n" << e.what() << "\n";
    return 1;
  }
}
