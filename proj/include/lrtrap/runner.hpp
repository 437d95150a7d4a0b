#pragma once

#include <string>

#include "lrtrap/scenario.hpp"

namespace lrtrap {

// Subcommand bodies; each writes CSV artifacts into out_dir and throws on
// error.  Kept in the library so tests can drive the CLI surfaces directly.

void run_ep(const Scenario& sc, const std::string& out_dir);
void run_invariant(const Scenario& sc, const std::string& out_dir);
void run_eigen(const Scenario& sc, const std::string& out_dir);
void run_wavefn(const Scenario& sc, const std::string& out_dir);
void run_observables(const Scenario& sc, const std::string& out_dir);
void run_autocorr(const Scenario& sc, const std::string& out_dir);
void run_figures(int id, const std::string& out_dir);

}  // namespace lrtrap
