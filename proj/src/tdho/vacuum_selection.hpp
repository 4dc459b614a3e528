#pragma once

// Minimum-uncertainty selection over the squeezed family built on a base
// mode, and the pointwise inequality checks between base and squeezed states.

#include "tdho/mode_solver.hpp"
#include "tdho/squeeze.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace tdho {

enum class Functional { max_over_window, mean_over_window, at_time };

const char* functional_name(Functional f) noexcept;
Functional parse_functional(const std::string& name);

struct Window {
    double t_begin = 0.0;
    double t_end = 0.0;
};

struct SelectionPoint {
    double r = 0.0;
    double delta = 0.0;
    double value = 0.0;
};

struct SelectionReport {
    Functional functional = Functional::max_over_window;
    std::vector<SelectionPoint> points;  // r-major, in grid order
    std::size_t argmin_index = 0;
    double argmin_r = 0.0;
    double argmin_delta = 0.0;
    double argmin_value = 0.0;
    // Best value among grid points whose (mu, nu) differs from the argmin,
    // minus the argmin value; +inf if there is none.
    double margin = 0.0;
};

inline constexpr double kSelectionTieTol = 1e-12;

// The functional is evaluated on the base samples inside the window; t_star
// is used by Functional::at_time only and picks the nearest sample.
SelectionReport scan_squeeze_grid(const ModeTrajectory& base, std::span<const double> r_grid,
                                  std::span<const double> delta_grid, Functional functional,
                                  Window window, double t_star = 0.0);

// Argmin, tie-breaking and margin for precomputed values. Exposed so the
// reduction can be checked independently of the scan.
SelectionReport reduce_selection(std::vector<SelectionPoint> points, Functional functional);

struct InequalityRow {
    double t = 0.0;
    double product_margin_a = 0.0;  // P_nu - (|mu|-|nu|)^2 P_0
    double product_margin_b = 0.0;  // P_nu - P_0
    double energy_margin_a = 0.0;   // e_nu - (|mu|-|nu|)^2 e_0
    double energy_margin_b = 0.0;   // e_nu - e_0
};

inline constexpr double kBoundTolA = 1e-12;
inline constexpr double kBoundTolB = 1e-9;

struct InequalityReport {
    std::vector<InequalityRow> rows;
    double worst_product_a = 0.0;
    double worst_energy_a = 0.0;
    double worst_product_b = 0.0;
    double worst_energy_b = 0.0;
    bool pass_a = true;
    bool pass_b = true;
};

// Checks at the base samples nearest to each t in t_grid (all samples if
// t_grid is empty).
InequalityReport verify_inequalities(const ModeTrajectory& base, const SqueezeParams& params,
                                     std::span<const double> t_grid = {});

}  // namespace tdho
