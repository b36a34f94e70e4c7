// abflux: command-line front end.
//
//   abflux smatrix --config run.cfg --out results --format json --threads 4
//   abflux run --config run.cfg        (all outputs listed in the config)

#include "abflux/config.hpp"
#include "abflux/errors.hpp"
#include "abflux/run.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

struct Options {
  std::string config;
  std::string out = ".";
  std::string format;
  unsigned threads = 1;
};

void add_common(CLI::App* sub, Options& opt, bool config_required)
{
  auto* c = sub->add_option("--config", opt.config, "configuration file (key = value or JSON)");
  if (config_required) c->required();
  c->check(CLI::ExistingFile);
  sub->add_option("--out", opt.out, "output directory");
  sub->add_option("--format", opt.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--threads", opt.threads, "worker threads")->check(CLI::Range(1u, 256u));
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Aharonov-Bohm point-interaction extensions: spectra, scattering and wave-operator symbols"};
  app.require_subcommand(1);
  Options opt;
  const std::vector<std::string> names = {"spectrum", "smatrix", "classify", "wavesymbol", "verify", "run"};
  for (const auto& n : names) {
    auto* sub = app.add_subcommand(n, n == "run" ? "all outputs listed in the config" : "write the " + n + " table");
    add_common(sub, opt, n != "verify");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // help and version exit 0; every other parse failure is a usage error
    return app.exit(e) == 0 ? abflux::cli::ok : abflux::cli::usage_error;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();

  try {
    abflux::cli::RunConfig cfg;
    if (!opt.config.empty()) {
      std::ifstream in(opt.config);
      std::stringstream ss;
      ss << in.rdbuf();
      cfg = abflux::cli::parse_config(ss.str());
    }
    if (!opt.format.empty()) cfg.format = opt.format;
    if (cmd != "run") cfg.outputs = {cmd};
    if (cfg.outputs.empty()) {
      std::cerr << "abflux: no outputs requested\n";
      return abflux::cli::usage_error;
    }
    const auto res = abflux::cli::run(cfg, opt.out, opt.threads);
    for (const auto& f : res.files) std::cout << f.string() << "\n";
    for (const auto& r : res.reports)
      if (!r.passed) std::cerr << "FAILED " << r.name << ": " << r.metadata << "\n";
    if (res.exit_code == abflux::cli::io_error) std::cerr << "abflux: cannot write to " << opt.out << "\n";
    return res.exit_code;
  } catch (const abflux::ConfigError& e) {
    std::cerr << "abflux: config error: " << e.what() << "\n";
    return abflux::cli::usage_error;
  } catch (const abflux::Error& e) {
    std::cerr << "abflux: " << e.what() << "\n";
    return abflux::cli::verification_failed;
  }
}
