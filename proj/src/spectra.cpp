#include "shellpc/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "shellpc/specfun.hpp"

namespace shellpc {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double row_slack = 1e-14;

} // namespace

std::string_view to_string(Operator op) noexcept
{
    return op == Operator::Laplace ? "laplace" : "stokes";
}

std::string_view to_string(Method m) noexcept
{
    switch (m) {
    case Method::ClosedForm: return "closed_form";
    case Method::RootFind: return "root_find";
    case Method::Oracle: return "oracle";
    }
    return "unknown";
}

std::string_view to_string(Frame f) noexcept
{
    return f == Frame::A ? "A" : "sigma";
}

EigenResult make_result(Operator op, Frame frame, double kappa, Method method)
{
    EigenResult r;
    r.op = op;
    r.frame = frame;
    r.kappa = kappa;
    r.lambda = kappa * kappa;
    r.multiplicity = op == Operator::Laplace ? 1 : 3;
    r.poincare = 1.0 / kappa;
    r.method = method;
    return r;
}

double laplace_root(const ShellGeometry& geom, const RootSearchConfig& cfg)
{
    if (geom.R_inner == 0.0) {
        return smallest_positive_root(
            [&](double k) { return specfun::laplace_eigencondition(k, geom); }, cfg);
    }
    return smallest_positive_root(
        [&](double k) { return specfun::laplace_eigencondition_cross(k, geom); }, cfg);
}

EigenResult laplace_first(const ShellGeometry& geom, bool verify)
{
    const double kappa = pi / geom.gap();
    if (!verify) {
        return make_result(Operator::Laplace, geom.frame, kappa, Method::ClosedForm);
    }
    const double root = laplace_root(geom);
    if (std::abs(root - kappa) > 1e-10) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "Laplace root " << root << " disagrees with pi/gap = " << kappa;
        throw Error(ErrorCode::InvariantViolated, msg.str());
    }
    return make_result(Operator::Laplace, geom.frame, kappa, Method::RootFind);
}

EigenResult stokes_first(const ShellGeometry& geom, const RootSearchConfig& cfg)
{
    double kappa_A = 0.0;
    if (geom.A == 0.0) {
        kappa_A = smallest_positive_root(specfun::stokes_ball_eigencondition, cfg);
    } else {
        const ShellGeometry a_frame = geom.in_frame(Frame::A);
        kappa_A = smallest_positive_root(
            [&](double k) { return specfun::stokes_eigencondition(k, a_frame); }, cfg);
    }
    // kappa scales with the inverse gap width; the A frame has gap 1.
    return make_result(Operator::Stokes, geom.frame, kappa_A / geom.gap(), Method::RootFind);
}

BoundSet bounds_for(const ShellGeometry& geom)
{
    BoundSet b;
    b.A = geom.A;
    b.diam_half = 0.5 * (geom.A + 2.0);
    b.diam_over_pi_sqrt2 = std::numbers::sqrt2 / pi * (1.0 + 0.5 * geom.A);
    b.best = std::min(b.diam_half, b.diam_over_pi_sqrt2);
    if (geom.A > 0.0) {
        b.nazarov = (1.0 + 2.0 / geom.A) / pi;
        b.best = std::min(b.best, *b.nazarov);
    }
    return b;
}

double small_gap_reference() noexcept { return pi * pi; }

TableRow table_row(double A)
{
    const ShellGeometry g = ShellGeometry::from_A(A);
    const EigenResult lap = laplace_first(g);
    const EigenResult sto = stokes_first(g);
    TableRow row;
    row.A = g.A;
    row.sigma = g.sigma;
    row.kappa_L = lap.kappa;
    row.lambda_L = lap.lambda;
    row.c_p = lap.poincare;
    row.kappa_S = sto.kappa;
    row.lambda_S = sto.lambda;
    row.c_pS = sto.poincare;
    return row;
}

void check_row_invariants(const TableRow& row)
{
    std::ostringstream msg;
    msg.precision(17);
    msg << "row A=" << row.A << ": ";
    if (!(row.c_pS <= row.c_p + row_slack)) {
        msg << "c_pS " << row.c_pS << " exceeds c_p " << row.c_p;
        throw Error(ErrorCode::InvariantViolated, msg.str());
    }
    if (!(row.kappa_S >= pi - row_slack && row.kappa_S <= kStokesBallKappaBound)) {
        msg << "kappa_S " << row.kappa_S << " outside [pi, " << kStokesBallKappaBound << "]";
        throw Error(ErrorCode::InvariantViolated, msg.str());
    }
    if (row.A > 0.0) {
        const BoundSet b = bounds_for(ShellGeometry::from_A(row.A));
        if (!(row.c_p <= b.best + row_slack)) {
            msg << "c_p " << row.c_p << " exceeds analytic bound " << b.best;
            throw Error(ErrorCode::InvariantViolated, msg.str());
        }
    }
}

std::vector<double> make_grid(double min, double max, int points, GridScale scale,
                              std::optional<double> densify_below)
{
    const bool ok = std::isfinite(min) && std::isfinite(max) && min < max && points >= 2
                 && (scale == GridScale::Linear || min > 0.0);
    if (!ok) {
        throw Error(ErrorCode::Domain, "invalid grid specification");
    }
    std::vector<double> base(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(points - 1);
        base[i] = scale == GridScale::Log ? std::exp(std::log(min) + t * (std::log(max) - std::log(min)))
                                          : min + t * (max - min);
    }
    base.front() = min;
    base.back() = max;
    if (!densify_below || scale != GridScale::Log) {
        return base;
    }
    std::vector<double> out;
    out.reserve(base.size() * 4);
    for (std::size_t i = 0; i + 1 < base.size(); ++i) {
        out.push_back(base[i]);
        if (base[i + 1] <= *densify_below) {
            const double l0 = std::log(base[i]);
            const double l1 = std::log(base[i + 1]);
            for (int j = 1; j < 4; ++j) {
                out.push_back(std::exp(l0 + 0.25 * j * (l1 - l0)));
            }
        }
    }
    out.push_back(base.back());
    return out;
}

std::vector<double> default_table_grid()
{
    return make_grid(1e-3, 1e3, 400, GridScale::Log, 1.0);
}

} // namespace shellpc
