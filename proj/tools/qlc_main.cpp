// Command-line driver: solve, convergence, infsup, potential-table.
// Exit codes: 0 success, 2 config error, 3 solver failure, 4 physicality
// failure.

#include <CLI11.hpp>
#include <iostream>

#include "qlc/drivers.hpp"

namespace {

struct CommonArgs {
  std::string config_path;
  std::string out_dir = "out";
  std::vector<std::string> overrides;
  bool allow_nonelliptic = false;
  bool deterministic = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "key=value config file");
  cmd->add_option("--out", args.out_dir, "output directory");
  cmd->add_option("--set", args.overrides, "config override key=value");
  cmd->add_flag("--allow-nonelliptic", args.allow_nonelliptic,
                "proceed with non-elliptic elastic constants");
  cmd->add_flag("--deterministic", args.deterministic,
                "deterministic accumulation (assembly is already ordered)");
}

qlc::KeyValueConfig load(const CommonArgs& args) {
  qlc::KeyValueConfig cfg;
  if (!args.config_path.empty())
    cfg = qlc::KeyValueConfig::from_file(args.config_path);
  for (const auto& kv : args.overrides) cfg.set_override(kv);
  if (args.allow_nonelliptic) cfg.set("allow_nonelliptic", "1");
  return cfg;
}

int dispatch(const std::string& name, const CommonArgs& args) {
  qlc::KeyValueConfig cfg = load(args);
  if (name == "solve") return qlc::cmd_solve(cfg, args.out_dir);
  if (name == "convergence") return qlc::cmd_convergence(cfg, args.out_dir);
  if (name == "infsup") return qlc::cmd_infsup(cfg, args.out_dir);
  if (name == "potential-table")
    return qlc::cmd_potential_table(cfg, args.out_dir);
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Landau-de Gennes Q-tensor finite element solver"};
  app.require_subcommand(1);

  CommonArgs args;
  for (const char* name :
       {"solve", "convergence", "infsup", "potential-table"}) {
    CLI::App* cmd = app.add_subcommand(name);
    add_common(cmd, args);
  }

  CLI11_PARSE(app, argc, argv);
  std::string name = app.get_subcommands().front()->get_name();
  try {
    return dispatch(name, args);
  } catch (const qlc::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const qlc::EllipticityError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const qlc::NotPhysicalError& e) {
    std::cerr << "physicality failure: " << e.what() << "\n";
    return 4;
  } catch (const qlc::NotPhysicalAtQuadPointError& e) {
    std::cerr << "physicality failure: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return 3;
  }
}
