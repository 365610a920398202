#pragma once

#include <numbers>
#include <optional>
#include <string_view>
#include <vector>

#include "shellpc/geometry.hpp"
#include "shellpc/rootfind.hpp"

namespace shellpc {

enum class Operator { Laplace, Stokes };
enum class Method { ClosedForm, RootFind, Oracle };

std::string_view to_string(Operator op) noexcept;
std::string_view to_string(Method m) noexcept;
std::string_view to_string(Frame f) noexcept;

/// First eigenvalue of an operator on a shell. kappa is expressed in `frame`.
struct EigenResult {
    Operator op = Operator::Laplace;
    Frame frame = Frame::A;
    double kappa = 0.0;
    double lambda = 0.0;      // kappa^2
    int multiplicity = 1;     // 1 for Laplace, 3 for Stokes
    double poincare = 0.0;    // lambda^{-1/2}
    Method method = Method::ClosedForm;
};

/// Analytic upper bounds on the Laplace Poincare constant of the A-frame shell.
struct BoundSet {
    double A = 0.0;
    double diam_half = 0.0;
    double diam_over_pi_sqrt2 = 0.0;
    std::optional<double> nazarov; // vacuous (absent) at A = 0
    double best = 0.0;
};

/// One row of the constant table, A frame.
struct TableRow {
    double A = 0.0;
    double sigma = 0.0;
    double kappa_L = 0.0;
    double lambda_L = 0.0;
    double c_p = 0.0;
    double kappa_S = 0.0;
    double lambda_S = 0.0;
    double c_pS = 0.0;
};

/// First positive zero of J_{3/2}, i.e. of tan x = x, used as the upper end of the
/// Stokes sandwich pi <= kappa_S(A) <= kStokesBallKappaBound.
inline constexpr double kStokesBallKappaBound = 4.4934094580;

EigenResult make_result(Operator op, Frame frame, double kappa, Method method);

/// kappa = pi / gap for every shell. With `verify`, the cross-product eigencondition
/// is root-found as well and must agree to 1e-10; the result is then tagged RootFind.
EigenResult laplace_first(const ShellGeometry& geom, bool verify = false);

/// Smallest positive root of the Laplace cross-product eigencondition, in the frame of geom.
double laplace_root(const ShellGeometry& geom, const RootSearchConfig& cfg = {});

/// Smallest root of the Stokes eigencondition. A = 0 takes the tan x = x path.
EigenResult stokes_first(const ShellGeometry& geom, const RootSearchConfig& cfg = {});

BoundSet bounds_for(const ShellGeometry& geom);

/// pi^2, the unit-interval Dirichlet eigenvalue both operators approach as A grows.
double small_gap_reference() noexcept;

TableRow table_row(double A);

/// Throws InvariantViolated unless c_pS <= c_p <= bounds.best (1e-14 slack) and
/// pi <= kappa_S <= kStokesBallKappaBound.
void check_row_invariants(const TableRow& row);

enum class GridScale { Log, Linear };

/// `points` values from min to max inclusive. For log grids, each interval lying below
/// `densify_below` is subdivided into four.
std::vector<double> make_grid(double min, double max, int points, GridScale scale,
                              std::optional<double> densify_below = std::nullopt);

/// 400 log-spaced points over [1e-3, 1e3], four times denser below A = 1.
std::vector<double> default_table_grid();

} // namespace shellpc
