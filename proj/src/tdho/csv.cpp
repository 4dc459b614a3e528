#include "tdho/csv.hpp"

#include "tdho/invariant_states.hpp"

#include <charconv>
#include <cmath>

namespace tdho {

namespace {

struct Row {
    std::ostream& os;
    bool first = true;

    Row& operator<<(double v) {
        if (!first) os << ',';
        first = false;
        os << format_double(v);
        return *this;
    }
    ~Row() { os << '\n'; }
};

}  // namespace

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

void write_trajectory_csv(std::ostream& os, const ModeTrajectory& trajectory) {
    os << "t,re_u,im_u,re_du,im_du,mass,wronskian_residual\n";
    for (const ModeSample& s : trajectory.samples())
        Row{os} << s.t << s.u.real() << s.u.imag() << s.du.real() << s.du.imag() << s.mass
                << wronskian_residual(s);
}

void write_reports_csv(std::ostream& os, const ModeTrajectory& trajectory) {
    os << "t,var_q,var_p,cov_qp,product,epsilon\n";
    for (const ModeSample& s : trajectory.samples()) {
        const UncertaintyReport m = moments(s);
        Row{os} << s.t << m.var_q << m.var_p << m.cov_qp << m.product
                << energy_expectation(s, trajectory.spec()).epsilon;
    }
}

void write_params_csv(std::ostream& os, std::span<const SqueezeParams> params) {
    os << "mu_re,mu_im,nu_re,nu_im,r,delta\n";
    for (const SqueezeParams& p : params)
        Row{os} << p.mu.real() << p.mu.imag() << p.nu.real() << p.nu.imag() << p.r << p.delta;
}

void write_kscan_csv(std::ostream& os, std::span<const KScanRow> rows) {
    os << "k,t,z,re_u,im_u,product,epsilon,wronskian_residual\n";
    for (const KScanRow& r : rows)
        Row{os} << r.k << r.t << r.z << r.u.real() << r.u.imag() << r.product << r.epsilon
                << r.wronskian_residual;
}

void write_selection_csv(std::ostream& os, const SelectionReport& report) {
    os << "r,delta,value\n";
    for (const SelectionPoint& p : report.points) Row{os} << p.r << p.delta << p.value;
    os << "# summary functional=" << functional_name(report.functional)
       << " argmin_r=" << format_double(report.argmin_r)
       << " argmin_delta=" << format_double(report.argmin_delta)
       << " argmin_value=" << format_double(report.argmin_value)
       << " margin=" << format_double(report.margin) << '\n';
}

void write_inequality_csv(std::ostream& os, const InequalityReport& report) {
    os << "t,product_margin_a,product_margin_b,energy_margin_a,energy_margin_b\n";
    for (const InequalityRow& r : report.rows)
        Row{os} << r.t << r.product_margin_a << r.product_margin_b << r.energy_margin_a
                << r.energy_margin_b;
}

void write_comparison_csv(std::ostream& os, const BunchDaviesComparison& cmp,
                          const DeSitterSpec& spec) {
    os << "k,z,t,re_u_analytic,im_u_analytic,re_u_numeric,im_u_numeric,rel_dev_u,rel_dev_du,"
          "wronskian_residual\n";
    const auto num = cmp.numeric.samples();
    for (std::size_t i = 0; i < num.size(); ++i) {
        const ModeSample& n = num[i];
        const bool have = i < cmp.analytic.size();
        const cplx au = have ? cmp.analytic[i].u : cplx{NAN, NAN};
        const cplx adu = have ? cmp.analytic[i].du : cplx{NAN, NAN};
        const double dev_u = have ? std::abs(n.u - au) / std::abs(au) : NAN;
        const double dev_du = have ? std::abs(n.du - adu) / std::abs(adu) : NAN;
        Row{os} << spec.k << z_at_time(spec, n.t) << n.t << au.real() << au.imag() << n.u.real()
                << n.u.imag() << dev_u << dev_du << wronskian_residual(n);
    }
}

}  // namespace tdho
