// Command-line front end: verification suites, packet synthesis, and the
// fixed-schema CSV exports. Exit codes: 0 all checks pass, 1 a check failed,
// 2 usage or configuration error, 3 I/O error.
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "prahm/config.hpp"
#include "prahm/csv.hpp"
#include "prahm/error.hpp"
#include "prahm/suites.hpp"

namespace {

int run(int argc, char** argv) {
  CLI::App app{"Guided-mode field toolkit: verification suites and CSV exports"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path,
                 "JSON configuration file; every key is optional");

  std::string suite = "all";
  std::string verify_out, synth_out, sweep_out, disp_out, tx_out, spec_out;
  std::vector<int> Ms;
  double phi = 0.0, zeta = 0.0, from = 0.0, to = 0.0;
  int Q = 0, steps = 0;

  CLI::App* verify = app.add_subcommand("verify", "run verification checks");
  verify->add_option("--suite", suite,
                     "all, maxwell, helical, packet, interaction, ladder, txline");
  verify->add_option("--out", verify_out, "also write the report to this file");

  CLI::App* synth = app.add_subcommand("synth", "packet time-series CSV");
  synth->add_option("--M", Ms, "packet index (first listed value is used)");
  synth->add_option("--phi", phi, "inter-wave rotation angle in radians");
  synth->add_option("--Q", Q, "trapped whole periods");
  synth->add_option("--out", synth_out, "output CSV path");

  CLI::App* sweep = app.add_subcommand("sweep-vh", "modulation-speed sweep CSV");
  sweep->add_option("--from", from, "lowest speed ratio");
  sweep->add_option("--to", to, "highest speed ratio");
  sweep->add_option("--steps", steps, "number of sweep points");
  sweep->add_option("--out", sweep_out, "output CSV path");

  CLI::App* disp = app.add_subcommand("dispersion", "packet velocity CSV");
  disp->add_option("--M", Ms, "packet indices");
  disp->add_option("--out", disp_out, "output CSV path");

  CLI::App* tx = app.add_subcommand("txline", "delay-line energy trace CSV");
  tx->add_option("--zeta", zeta, "drive amplitude scale");
  tx->add_option("--out", tx_out, "output CSV path");

  CLI::App* spectrum = app.add_subcommand("spectrum", "bandwidth-duration CSV");
  spectrum->add_option("--M", Ms, "packet indices");
  spectrum->add_option("--Q", Q, "trapped whole periods");
  spectrum->add_option("--out", spec_out, "output CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const prahm::RunConfig cfg =
      config_path.empty() ? prahm::RunConfig{} : prahm::load_config(config_path);
  const std::vector<int>& use_Ms = Ms.empty() ? cfg.M_list : Ms;
  if (use_Ms.empty())
    throw prahm::Error(prahm::Errc::bad_config, "need at least one packet index");

  if (verify->parsed()) {
    const auto reports = prahm::run_suites(suite, cfg);
    const std::string text = prahm::format_reports(reports);
    std::cout << text;
    if (!verify_out.empty()) prahm::write_file(verify_out, text);
    for (const auto& r : reports)
      if (!r.all_pass()) return 1;
    return 0;
  }
  if (synth->parsed()) {
    const double use_phi = synth->count("--phi") ? phi : cfg.phi;
    const int use_Q = synth->count("--Q") ? Q : cfg.Q;
    const std::string& out = !synth_out.empty() ? synth_out : cfg.out;
    prahm::write_file(out, prahm::synth_csv(cfg, use_Ms.front(), use_phi, use_Q));
    return 0;
  }
  if (sweep->parsed()) {
    const double f = sweep->count("--from") ? from : cfg.sweep_from;
    const double t = sweep->count("--to") ? to : cfg.sweep_to;
    const int s = sweep->count("--steps") ? steps : cfg.sweep_steps;
    const std::string& out = !sweep_out.empty() ? sweep_out : cfg.out;
    prahm::write_file(out, prahm::sweep_csv(cfg, f, t, s));
    return 0;
  }
  if (disp->parsed()) {
    const std::string& out = !disp_out.empty() ? disp_out : cfg.out;
    prahm::write_file(out, prahm::dispersion_csv(cfg, use_Ms));
    return 0;
  }
  if (tx->parsed()) {
    const double use_zeta = tx->count("--zeta") ? zeta : cfg.tx_zeta;
    const std::string& out = !tx_out.empty() ? tx_out : cfg.out;
    prahm::write_file(out, prahm::txline_csv(cfg, use_zeta));
    return 0;
  }
  if (spectrum->parsed()) {
    const int use_Q = spectrum->count("--Q") ? Q : cfg.Q;
    const std::string& out = !spec_out.empty() ? spec_out : cfg.out;
    prahm::write_file(out, prahm::spectrum_csv(cfg, use_Ms, use_Q));
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const prahm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == prahm::Errc::io_error ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
