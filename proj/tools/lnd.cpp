// lnd: exact computations with locally nilpotent derivations, unipotent
// automorphisms, invariant rings, slices and coordinate certificates.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "lnd/cli.hpp"
#include "lnd/errors.hpp"

namespace {

struct CommonArgs {
  std::string in_path;
  bool json = false;
  lnd::cli::RunOptions options;
  std::vector<std::string> names;
  std::string t_text = "1";
  std::string alpha_text;
  std::string f_name;
  std::vector<std::string> gens;
  std::vector<std::string> span;
  long index = 0;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool wants_names = true) {
  cmd->add_option("--in", args.in_path, "session file (.lnd)")->required();
  cmd->add_flag("--json", args.json, "emit the machine-readable JSON report");
  cmd->add_option("--max-degree", args.options.max_degree,
                  "degree bound for truncated kernel/preslice searches");
  cmd->add_option("--max-power", args.options.max_power,
                  "iteration bound for nilpotency certificates");
  cmd->add_option("--max-iter", args.options.max_iter,
                  "iteration bound for the logarithm series");
  if (wants_names)
    cmd->add_option("names", args.names,
                    "named derivations/automorphisms/polynomials");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "lnd: exact algebra of locally nilpotent derivations and unipotent "
      "automorphisms over Q"};
  app.require_subcommand(1);

  struct Sub {
    CLI::App* cmd;
    CommonArgs args;
    std::string name;
  };
  std::vector<Sub> subs;
  auto make = [&](const std::string& name,
                  const std::string& desc) -> CommonArgs& {
    subs.push_back(Sub{});
    Sub& sub = subs.back();
    sub.name = name;
    sub.cmd = app.add_subcommand(name, desc);
    add_common(sub.cmd, sub.args);
    return sub.args;
  };

  make("check",
       "nilpotency certificates, quotient induction and the triangular-basis "
       "check");
  {
    CommonArgs& a = make("bracket", "Lie bracket [D,E] plus span membership");
    subs.back().cmd->add_option("--span", a.span,
                                "derivations spanning the comparison space");
  }
  make("span", "exact span membership: span E B1 B2 ...");
  {
    CommonArgs& a = make("exp", "exponential of a certified derivation");
    subs.back().cmd->add_option("--t", a.t_text, "rational parameter t");
  }
  make("log", "logarithm of a unipotent automorphism");
  make("compose", "composition of two automorphisms");
  make("invariants", "basis of the common kernel up to the degree bound");
  make("kernel", "generator f of the invariant ring up to the degree bound");
  {
    CommonArgs& a = make("preslice", "preslice p and ideal generator q_i");
    subs.back().cmd->add_option("--index", a.index, "1-based index i")
        ->required();
    subs.back().cmd->add_option("--f", a.f_name,
                                "invariant generator (default: computed)");
  }
  {
    CommonArgs& a = make("fibers", "degenerate fibers via the q_i");
    subs.back().cmd->add_option("--f", a.f_name,
                                "invariant generator (default: computed)");
    subs.back().cmd->add_flag(
        "--oracle", a.options.oracle,
        "cross-check alpha in {-3..3} against the dependence solver");
  }
  {
    CommonArgs& a = make("descent", "lexicographic slice descent from p");
    subs.back()
        .cmd->add_option("--gens", a.gens, "slice generators s_2,...,s_n")
        ->delimiter(',');
  }
  make("rectify", "full rectification A = Q[s_1,...,s_n]");
  make("certify", "coordinate certificate A = Q[s_1,...,s_n,f]");
  {
    CommonArgs& a =
        make("fiber-rectify", "rectify the fiber A/(f - alpha)");
    subs.back().cmd->add_option("--f", a.f_name, "distinguished variable")
        ->required();
    subs.back().cmd->add_option("--alpha", a.alpha_text, "fiber value")
        ->required();
  }
  make("mates", "derivations dual to a constant-Jacobian coordinate system");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  for (Sub& sub : subs) {
    if (!sub.cmd->parsed()) continue;
    try {
      sub.args.options.in_path = sub.args.in_path;
      sub.args.options.span = sub.args.span;
      sub.args.options.gens = sub.args.gens;
      sub.args.options.t = lnd::rat_from_string(sub.args.t_text);
      if (!sub.args.alpha_text.empty())
        sub.args.options.alpha = lnd::rat_from_string(sub.args.alpha_text);
      if (!sub.args.f_name.empty()) sub.args.options.f_name = sub.args.f_name;
      if (sub.args.index != 0) sub.args.options.index = sub.args.index;

      lnd::SessionFile session = lnd::load_session(sub.args.in_path);
      lnd::cli::Report report = lnd::cli::run_command(
          sub.name, sub.args.names, sub.args.options, session);
      if (sub.args.json) {
        std::fputs(report.machine.c_str(), stdout);
      } else {
        std::fputs(report.human.c_str(), stdout);
      }
      return report.exit_code;
    } catch (const lnd::Error& e) {
      std::fprintf(stderr, "error: %s\n", e.what());
      return e.exit_code();
    }
  }
  return 3;
}
