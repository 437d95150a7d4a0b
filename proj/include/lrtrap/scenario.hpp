#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lrtrap/models.hpp"

namespace lrtrap {

struct GridSpec {
    double xmin = 0.0;
    double xmax = 0.0;
    int n = 0;
};

struct TimeSpec {
    double t0 = 0.0;
    double t1 = 0.0;
    int steps = 0;
};

enum class SeriesKind { none, gaussian, soft_coulomb };

// Fully deterministic run description; parseable from one JSON document.
// Keys: model, m, omega, tau, E0, c_kappa, Omega, ell, hbar, n,
//       grid{xmin,xmax,N}, time{t0,t1,steps}, methods[].
struct Scenario {
    ModelConfig model;
    std::vector<int> n_list{0};
    std::vector<Method> methods{Method::exact};
    std::optional<GridSpec> grid;
    std::optional<TimeSpec> time;

    // invariant-subcommand series selection (flags only)
    SeriesKind series = SeriesKind::none;
    int series_order = 8;
    double series_k = 1.0;
};

Scenario scenario_from_json_text(const std::string& text);
Scenario scenario_from_file(const std::string& path);

// "3" -> {3}; "0..5" -> {0,...,5}; "0,2,5" -> {0,2,5}
std::vector<int> parse_n_list(const std::string& spec);
std::vector<Method> parse_method_list(const std::string& spec);

}  // namespace lrtrap
