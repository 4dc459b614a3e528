#include "tdho/vacuum_selection.hpp"

#include "tdho/error.hpp"
#include "tdho/invariant_states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace tdho {

namespace {

double time_slack(double a, double b) {
    return 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

std::vector<std::size_t> window_indices(const ModeTrajectory& base, Window w) {
    if (base.size() == 0)
        fail(ErrorCode::insufficient_data, "base trajectory is empty");
    if (!(w.t_begin <= w.t_end))
        fail(ErrorCode::invalid_argument, "window must satisfy t_begin <= t_end");
    const double first = base[0].t, last = base[base.size() - 1].t;
    const double slack = time_slack(first, last);
    if (w.t_begin < first - slack || w.t_end > last + slack) {
        std::ostringstream os;
        os << "window [" << w.t_begin << ", " << w.t_end << "] outside trajectory [" << first
           << ", " << last << "]";
        fail(ErrorCode::domain, os.str());
    }
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < base.size(); ++i)
        if (base[i].t >= w.t_begin - slack && base[i].t <= w.t_end + slack) idx.push_back(i);
    if (idx.empty())
        fail(ErrorCode::insufficient_data, "no trajectory samples inside the window");
    return idx;
}

std::size_t nearest_sample(const ModeTrajectory& base, double t) {
    const auto samples = base.samples();
    auto it = std::lower_bound(samples.begin(), samples.end(), t,
                               [](const ModeSample& s, double v) { return s.t < v; });
    if (it == samples.end()) return samples.size() - 1;
    const std::size_t i = static_cast<std::size_t>(it - samples.begin());
    if (i > 0 && t - samples[i - 1].t <= samples[i].t - t) return i - 1;
    return i;
}

double evaluate(Functional f, std::span<const ModeSample> samples,
                std::span<const std::size_t> idx, std::size_t star, const SqueezeParams& p) {
    switch (f) {
    case Functional::max_over_window: {
        double best = -std::numeric_limits<double>::infinity();
        for (std::size_t i : idx) best = std::max(best, uncertainty_product(mix_mode(samples[i], p)));
        return best;
    }
    case Functional::mean_over_window: {
        if (idx.size() == 1) return uncertainty_product(mix_mode(samples[idx[0]], p));
        double acc = 0.0;
        double prev = uncertainty_product(mix_mode(samples[idx[0]], p));
        for (std::size_t j = 1; j < idx.size(); ++j) {
            const double cur = uncertainty_product(mix_mode(samples[idx[j]], p));
            acc += 0.5 * (prev + cur) * (samples[idx[j]].t - samples[idx[j - 1]].t);
            prev = cur;
        }
        return acc / (samples[idx.back()].t - samples[idx.front()].t);
    }
    case Functional::at_time:
        return uncertainty_product(mix_mode(samples[star], p));
    }
    return 0.0;
}

}  // namespace

const char* functional_name(Functional f) noexcept {
    switch (f) {
    case Functional::max_over_window: return "max";
    case Functional::mean_over_window: return "mean";
    case Functional::at_time: return "at-time";
    }
    return "?";
}

Functional parse_functional(const std::string& name) {
    if (name == "max" || name == "max-over-window") return Functional::max_over_window;
    if (name == "mean" || name == "mean-over-window") return Functional::mean_over_window;
    if (name == "at-time" || name == "at_time") return Functional::at_time;
    fail(ErrorCode::invalid_argument, "unknown functional '" + name + "' (max, mean, at-time)");
}

SelectionReport reduce_selection(std::vector<SelectionPoint> points, Functional functional) {
    if (points.empty())
        fail(ErrorCode::invalid_argument, "selection grid is empty");
    double best = std::numeric_limits<double>::infinity();
    for (const SelectionPoint& p : points)
        if (p.value < best) best = p.value;
    if (!std::isfinite(best))
        fail(ErrorCode::invalid_argument, "no finite functional value on the grid");

    std::size_t arg = points.size();
    for (std::size_t i = 0; i < points.size(); ++i) {
        const SelectionPoint& p = points[i];
        if (!(p.value <= best + kSelectionTieTol)) continue;
        if (arg == points.size() || p.r < points[arg].r ||
            (p.r == points[arg].r && p.delta < points[arg].delta))
            arg = i;
    }

    SelectionReport rep;
    rep.functional = functional;
    rep.argmin_index = arg;
    rep.argmin_r = points[arg].r;
    rep.argmin_delta = points[arg].delta;
    rep.argmin_value = points[arg].value;

    const SqueezeParams chosen = polar_to_bogoliubov(rep.argmin_r, rep.argmin_delta);
    double second = std::numeric_limits<double>::infinity();
    for (const SelectionPoint& p : points) {
        const SqueezeParams q = polar_to_bogoliubov(p.r, p.delta);
        if (std::abs(q.mu - chosen.mu) + std::abs(q.nu - chosen.nu) <= 1e-12) continue;
        second = std::min(second, p.value);
    }
    rep.margin = second - rep.argmin_value;
    rep.points = std::move(points);
    return rep;
}

SelectionReport scan_squeeze_grid(const ModeTrajectory& base, std::span<const double> r_grid,
                                  std::span<const double> delta_grid, Functional functional,
                                  Window window, double t_star) {
    if (r_grid.empty() || delta_grid.empty())
        fail(ErrorCode::invalid_argument, "r and delta grids must be non-empty");
    if (std::find(r_grid.begin(), r_grid.end(), 0.0) == r_grid.end())
        fail(ErrorCode::invalid_argument, "r grid must contain 0 (the base state)");
    const std::vector<std::size_t> idx = window_indices(base, window);
    std::size_t star = 0;
    if (functional == Functional::at_time) {
        const double slack = time_slack(window.t_begin, window.t_end);
        if (t_star < window.t_begin - slack || t_star > window.t_end + slack)
            fail(ErrorCode::domain, "t* lies outside the window");
        star = nearest_sample(base, t_star);
    }

    std::vector<SelectionPoint> points;
    points.reserve(r_grid.size() * delta_grid.size());
    for (double r : r_grid)
        for (double d : delta_grid) {
            const SqueezeParams p = polar_to_bogoliubov(r, d);
            points.push_back({p.r, p.delta, evaluate(functional, base.samples(), idx, star, p)});
        }
    return reduce_selection(std::move(points), functional);
}

InequalityReport verify_inequalities(const ModeTrajectory& base, const SqueezeParams& params,
                                     std::span<const double> t_grid) {
    validate(params);
    std::vector<std::size_t> idx;
    if (t_grid.empty()) {
        idx.resize(base.size());
        for (std::size_t i = 0; i < base.size(); ++i) idx[i] = i;
    } else {
        if (base.size() == 0)
            fail(ErrorCode::insufficient_data, "base trajectory is empty");
        const double first = base[0].t, last = base[base.size() - 1].t;
        const double slack = time_slack(first, last);
        for (double t : t_grid) {
            if (t < first - slack || t > last + slack)
                fail(ErrorCode::domain, "verification time outside the trajectory");
            idx.push_back(nearest_sample(base, t));
        }
    }

    const double gap = std::abs(params.mu) - std::abs(params.nu);
    const double factor = gap * gap;
    const OscillatorSpec& spec = base.spec();
    InequalityReport rep;
    rep.worst_product_a = rep.worst_energy_a = std::numeric_limits<double>::infinity();
    rep.worst_product_b = rep.worst_energy_b = std::numeric_limits<double>::infinity();
    rep.rows.reserve(idx.size());
    for (std::size_t i : idx) {
        const ModeSample& s0 = base[i];
        const ModeSample s1 = mix_mode(s0, params);
        const double p0 = uncertainty_product(s0), p1 = uncertainty_product(s1);
        const double e0 = energy_expectation(s0, spec).epsilon;
        const double e1 = energy_expectation(s1, spec).epsilon;
        InequalityRow row{s0.t, p1 - factor * p0, p1 - p0, e1 - factor * e0, e1 - e0};
        rep.worst_product_a = std::min(rep.worst_product_a, row.product_margin_a);
        rep.worst_product_b = std::min(rep.worst_product_b, row.product_margin_b);
        rep.worst_energy_a = std::min(rep.worst_energy_a, row.energy_margin_a);
        rep.worst_energy_b = std::min(rep.worst_energy_b, row.energy_margin_b);
        rep.rows.push_back(row);
    }
    rep.pass_a = rep.worst_product_a >= -kBoundTolA && rep.worst_energy_a >= -kBoundTolA;
    rep.pass_b = rep.worst_product_b >= -kBoundTolB && rep.worst_energy_b >= -kBoundTolB;
    return rep;
}

}  // namespace tdho
