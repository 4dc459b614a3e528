#pragma once

// CSV serialization. Every table starts with a header row and floats are
// printed with 17 significant digits so that output round-trips exactly.

#include "tdho/desitter.hpp"
#include "tdho/mode_solver.hpp"
#include "tdho/squeeze.hpp"
#include "tdho/vacuum_selection.hpp"

#include <ostream>
#include <span>
#include <string>

namespace tdho {

std::string format_double(double v);

// t,re_u,im_u,re_du,im_du,mass,wronskian_residual
void write_trajectory_csv(std::ostream& os, const ModeTrajectory& trajectory);
// t,var_q,var_p,cov_qp,product,epsilon
void write_reports_csv(std::ostream& os, const ModeTrajectory& trajectory);
// mu_re,mu_im,nu_re,nu_im,r,delta
void write_params_csv(std::ostream& os, std::span<const SqueezeParams> params);
// k,t,z,re_u,im_u,product,epsilon,wronskian_residual
void write_kscan_csv(std::ostream& os, std::span<const KScanRow> rows);
// r,delta,value followed by one `# summary ...` line
void write_selection_csv(std::ostream& os, const SelectionReport& report);
// t,product_margin_a,product_margin_b,energy_margin_a,energy_margin_b
void write_inequality_csv(std::ostream& os, const InequalityReport& report);
// k,z,t,re_u_analytic,im_u_analytic,re_u_numeric,im_u_numeric,rel_dev_u,rel_dev_du,wronskian_residual
void write_comparison_csv(std::ostream& os, const BunchDaviesComparison& cmp,
                          const DeSitterSpec& spec);

}  // namespace tdho
