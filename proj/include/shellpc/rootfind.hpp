#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "shellpc/error.hpp"

namespace shellpc {

struct RootSearchConfig {
    double scan_start = 0.05;
    double scan_step = 0.05;
    double scan_max = 60.0;
    double abs_tol = 1e-13;
    int max_bisections = 200;

    void validate() const;
};

struct Bracket {
    double lo;
    double hi;
    double f_lo;
    double f_hi;
};

namespace detail {

inline bool opposite_or_zero(double a, double b) { return (a <= 0.0 && b >= 0.0) || (a >= 0.0 && b <= 0.0); }

/// First grid interval [x, x + step] on which f changes sign, scanning upward from `start`.
/// Returns false if none is found before `stop`. A grid point with f == 0 is
/// reported as a degenerate bracket lo == hi.
template <class F>
bool scan_for_sign_change(F& f, double start, double step, double stop, Bracket& out)
{
    double x = start;
    double fx = f(x);
    for (long i = 1;; ++i) {
        if (fx == 0.0) {
            out = {x, x, fx, fx};
            return true;
        }
        if (x >= stop) {
            return false;
        }
        // Grid by index, not accumulation, so halving the step revisits the same points.
        const double xn = std::min(start + static_cast<double>(i) * step, stop);
        const double fn = f(xn);
        if (opposite_or_zero(fx, fn)) {
            if (fn == 0.0) {
                out = {xn, xn, fn, fn};
            } else {
                out = {x, xn, fx, fn};
            }
            return true;
        }
        x = xn;
        fx = fn;
    }
}

} // namespace detail

/// Smallest positive root of `f`: the root in the first sign-change interval found
/// scanning upward from cfg.scan_start, refined by bisection until the bracket is no
/// wider than cfg.abs_tol. After refinement, [scan_start, lo] is re-scanned at a
/// quarter of the step; an earlier sign change there throws SkippedRoot.
///
/// If `trace` is given, every retained bracket is appended to it.
template <class F>
double smallest_positive_root(F&& f, const RootSearchConfig& cfg = {}, std::vector<Bracket>* trace = nullptr)
{
    cfg.validate();
    Bracket b{};
    if (!detail::scan_for_sign_change(f, cfg.scan_start, cfg.scan_step, cfg.scan_max, b)) {
        std::ostringstream msg;
        msg << "no sign change in [" << cfg.scan_start << ", " << cfg.scan_max << "]";
        throw Error(ErrorCode::NoSignChange, msg.str());
    }
    if (trace) {
        trace->push_back(b);
    }
    if (b.lo == b.hi) {
        return b.lo;
    }

    int iter = 0;
    while (b.hi - b.lo > cfg.abs_tol) {
        if (iter++ >= cfg.max_bisections) {
            throw Error(ErrorCode::Unconverged, "bisection budget exhausted");
        }
        const double mid = b.lo + 0.5 * (b.hi - b.lo);
        if (mid <= b.lo || mid >= b.hi) {
            break; // adjacent doubles
        }
        const double fm = f(mid);
        if (fm == 0.0) {
            b = {mid, mid, fm, fm};
        } else if (detail::opposite_or_zero(b.f_lo, fm)) {
            b.hi = mid;
            b.f_hi = fm;
        } else {
            b.lo = mid;
            b.f_lo = fm;
        }
        if (trace) {
            trace->push_back(b);
        }
    }
    const double root = b.lo + 0.5 * (b.hi - b.lo);

    Bracket early{};
    if (b.lo > cfg.scan_start
        && detail::scan_for_sign_change(f, cfg.scan_start, 0.25 * cfg.scan_step, b.lo, early)) {
        std::ostringstream msg;
        msg << "sign change in [" << early.lo << ", " << early.hi << "] precedes root " << root;
        throw Error(ErrorCode::SkippedRoot, msg.str());
    }
    return root;
}

} // namespace shellpc
