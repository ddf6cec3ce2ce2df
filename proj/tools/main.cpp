#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "uag/error.hpp"

namespace {

using uag::cli::Overrides;

struct Common {
  std::string config;
  std::string format;
  std::uint64_t seed = 0;
};

/// Registers --config, --format and --seed on a subcommand.
void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--config", c.config, "JSON config file (falls back to $UAG_CONFIG)");
  cmd->add_option("--format", c.format, "Output format: json, text or dot")
      ->check(CLI::IsMember({"json", "text", "dot"}));
  cmd->add_option("--seed", c.seed, "Seed for sampled checks");
}

uag::cli::Settings settings(const CLI::App* cmd, const Common& c) {
  Overrides o;
  o.config_path = c.config;
  if (cmd->count("--format") > 0) o.format = c.format;
  if (cmd->count("--seed") > 0) o.seed = c.seed;
  return uag::cli::resolve_settings(o);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace uag::cli;
  CLI::App app{"Equations, solution sets and geometric equivalence over finite algebras", "uag"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  Common common;
  std::function<int(const Settings&)> run;
  const CLI::App* active = nullptr;

  std::string alg, alg2, sys;
  std::size_t vars = 1;
  auto* solve = app.add_subcommand("solve", "Solution set of an equation system");
  solve->add_option("algebra", alg, "Algebra file (.alg or .palg)")->required();
  solve->add_option("system", sys, "Equation system file")->required();
  add_common(solve, common);
  solve->callback([&] {
    active = solve;
    run = [&](const Settings& s) { return cmd_solve(alg, sys, s, std::cout); };
  });

  std::string pair;
  std::optional<std::size_t> depth, window_vars;
  auto* closure = app.add_subcommand("closure", "Closed congruence of a system: one pair or the depth window");
  closure->add_option("algebra", alg, "Algebra file")->required();
  closure->add_option("system", sys, "Equation system file")->required();
  closure->add_option("--pair", pair, "Decide a single pair 'w = w2'");
  closure->add_option("--depth", depth, "Window depth");
  add_common(closure, common);
  closure->callback([&] {
    active = closure;
    run = [&](const Settings& s) {
      Settings t = s;
      if (depth) t.bound.max_depth = *depth;
      return cmd_closure(alg, sys, closure->count("--pair") ? std::optional(pair) : std::nullopt, t, std::cout);
    };
  });

  auto* lat = app.add_subcommand("lattice", "Lattice of algebraic sets");
  lat->add_option("algebra", alg, "Algebra file")->required();
  lat->add_option("--vars", vars, "Number of variables")->check(CLI::PositiveNumber);
  add_common(lat, common);
  lat->callback([&] {
    active = lat;
    run = [&](const Settings& s) { return cmd_lattice(alg, vars, s, std::cout); };
  });

  bool cross = false;
  auto* equiv = app.add_subcommand("equiv", "Decide geometric equivalence of two algebras");
  equiv->add_option("first", alg, "First algebra file")->required();
  equiv->add_option("second", alg2, "Second algebra file")->required();
  equiv->add_flag("--cross-validate", cross, "Also compare closures over the bounded window");
  equiv->add_option("--depth", depth, "Window depth");
  equiv->add_option("--vars", window_vars, "Largest number of window variables");
  add_common(equiv, common);
  equiv->callback([&] {
    active = equiv;
    run = [&](const Settings& s) {
      Settings t = s;
      if (depth) t.bound.max_depth = *depth;
      if (window_vars) t.bound.max_vars = *window_vars;
      return cmd_equiv(alg, alg2, cross, t, std::cout);
    };
  });

  std::string sigma = "frob";
  auto* tw = app.add_subcommand("twist", "Twist a structure algebra by a field automorphism");
  tw->add_option("palgebra", alg, "Structure algebra file (.palg)")->required();
  tw->add_option("--sigma", sigma, "Automorphism: id, frob or frob^e");
  add_common(tw, common);
  tw->callback([&] {
    active = tw;
    run = [&](const Settings& s) { return cmd_twist(alg, sigma, s, std::cout); };
  });

  auto* op = app.add_subcommand("opposite", "Opposite of an associative structure algebra");
  op->add_option("palgebra", alg, "Structure algebra file (.palg)")->required();
  add_common(op, common);
  op->callback([&] {
    active = op;
    run = [&](const Settings& s) { return cmd_opposite(alg, s, std::cout); };
  });

  std::string poly, field = "2";
  auto* mir = app.add_subcommand("mirror", "Mirror image of a noncommutative polynomial");
  mir->add_option("polynomial", poly, "Polynomial such as 'x1*x2 + 3*x2'")->required();
  mir->add_option("--field", field, "Coefficient field: q or p^k");
  add_common(mir, common);
  mir->callback([&] {
    active = mir;
    run = [&](const Settings& s) { return cmd_mirror(poly, field, s, std::cout); };
  });

  auto* aeq = app.add_subcommand("aequiv", "Almost equivalence of two associative structure algebras");
  aeq->add_option("first", alg, "First structure algebra (.palg)")->required();
  aeq->add_option("second", alg2, "Second structure algebra (.palg)")->required();
  add_common(aeq, common);
  aeq->callback([&] {
    active = aeq;
    run = [&](const Settings& s) { return cmd_aequiv(alg, alg2, s, std::cout); };
  });

  std::size_t min_vars = 1, max_vars = 1, cat_depth = 1;
  auto* cat = app.add_subcommand("category", "Category of algebraic sets");
  cat->require_subcommand(1);
  auto* cat_export = cat->add_subcommand("export", "Objects and morphism classes within a bound");
  cat_export->add_option("algebra", alg, "Algebra file")->required();
  cat_export->add_option("--min-vars", min_vars, "Smallest number of variables")->check(CLI::PositiveNumber);
  cat_export->add_option("--max-vars", max_vars, "Largest number of variables");
  cat_export->add_option("--depth", cat_depth, "Depth of the substitution terms");
  add_common(cat_export, common);
  cat_export->callback([&] {
    active = cat_export;
    run = [&](const Settings& s) { return cmd_category_export(alg, min_vars, max_vars, cat_depth, s, std::cout); };
  });

  std::size_t samples = 20, max_listed = 64;
  auto* alpha_cmd = app.add_subcommand("alpha", "Functor from a semiinner automorphism");
  alpha_cmd->require_subcommand(1);
  auto* alpha_check = alpha_cmd->add_subcommand("check", "Check alpha, naturality, compatibility and the lattice map");
  alpha_check->add_option("palgebra", alg, "Structure algebra file (.palg)")->required();
  alpha_check->add_option("--sigma", sigma, "Automorphism: id, frob or frob^e");
  alpha_check->add_option("--system", sys, "Generating system of the congruence")->required();
  alpha_check->add_option("--samples", samples, "Sampled substitution pairs");
  alpha_check->add_option("--max-listed", max_listed, "Pairs of the lattice bijection listed in the report");
  add_common(alpha_check, common);
  alpha_check->callback([&] {
    active = alpha_check;
    run = [&](const Settings& s) { return cmd_alpha_check(alg, sigma, sys, samples, max_listed, s, std::cout); };
  });

  std::string points;
  std::optional<std::size_t> point_vars;
  auto* dual = app.add_subcommand("duality", "Duality between algebraic sets and closed congruences");
  dual->require_subcommand(1);
  auto* dual_check = dual->add_subcommand("check", "Round trip through the congruence and the quotient model");
  dual_check->add_option("algebra", alg, "Algebra file")->required();
  dual_check->add_option("--system", sys, "System whose solution set is checked");
  dual_check->add_option("--points", points, "Point set as a JSON array of tuples");
  dual_check->add_option("--vars", point_vars, "Number of variables for an empty point set");
  add_common(dual_check, common);
  dual_check->callback([&] {
    active = dual_check;
    run = [&](const Settings& s) {
      return cmd_duality_check(alg, dual_check->count("--system") ? std::optional(sys) : std::nullopt,
                               dual_check->count("--points") ? std::optional(points) : std::nullopt, point_vars, s,
                               std::cout);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    return run(settings(active, common));
  } catch (const uag::CapExceeded& e) {
    std::cerr << "uag: cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const uag::Error& e) {
    std::cerr << "uag: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "uag: " << e.what() << '\n';
    return kInputError;
  }
}
