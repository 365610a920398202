#pragma once

// Data-parallel kernels. Each has a plain serial reference next to the OpenMP
// version; the tests require the two to agree bit for bit.

#include <cstddef>
#include <exception>
#include <span>
#include <vector>

#include "shellpc/spectra.hpp"

namespace shellpc::kernels {

/// Threads the OpenMP kernels will use (1 without OpenMP).
int max_threads() noexcept;

std::vector<TableRow> sweep_table_serial(std::span<const double> A);
/// Rows ordered by grid index regardless of scheduling.
std::vector<TableRow> sweep_table(std::span<const double> A);

/// Row-major n x n matrix M_ij = scale_i * kernel(x_i, x_j) * scale_j for a symmetric
/// kernel; only the upper triangle is evaluated.
template <class Kernel>
std::vector<double> assemble_symmetric_serial(std::span<const double> x, std::span<const double> scale, Kernel&& kernel)
{
    const std::size_t n = x.size();
    std::vector<double> m(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const double v = scale[i] * kernel(x[i], x[j]) * scale[j];
            m[i * n + j] = v;
            m[j * n + i] = v;
        }
    }
    return m;
}

template <class Kernel>
std::vector<double> assemble_symmetric(std::span<const double> x, std::span<const double> scale, Kernel&& kernel)
{
    const long n = static_cast<long>(x.size());
    std::vector<double> m(static_cast<std::size_t>(n * n));
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4)
    for (long i = 0; i < n; ++i) {
        try {
            for (long j = i; j < n; ++j) {
                const double v = scale[i] * kernel(x[i], x[j]) * scale[j];
                m[i * n + j] = v;
                m[j * n + i] = v;
            }
        } catch (...) {
#pragma omp critical(shellpc_assemble_failure)
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return m;
}

/// y = M x for a row-major square M.
void matvec_serial(std::span<const double> m, std::span<const double> x, std::span<double> y);
void matvec(std::span<const double> m, std::span<const double> x, std::span<double> y);

} // namespace shellpc::kernels
