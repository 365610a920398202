#include "shellpc/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace shellpc::kernels {

int max_threads() noexcept
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

std::vector<TableRow> sweep_table_serial(std::span<const double> A)
{
    std::vector<TableRow> rows;
    rows.reserve(A.size());
    for (double a : A) {
        rows.push_back(table_row(a));
    }
    return rows;
}

std::vector<TableRow> sweep_table(std::span<const double> A)
{
    const long n = static_cast<long>(A.size());
    std::vector<TableRow> rows(A.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
        try {
            rows[i] = table_row(A[i]);
        } catch (...) {
#pragma omp critical(shellpc_sweep_failure)
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return rows;
}

void matvec_serial(std::span<const double> m, std::span<const double> x, std::span<double> y)
{
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            s += m[i * n + j] * x[j];
        }
        y[i] = s;
    }
}

void matvec(std::span<const double> m, std::span<const double> x, std::span<double> y)
{
    const long n = static_cast<long>(x.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) {
        double s = 0.0;
        for (long j = 0; j < n; ++j) {
            s += m[i * n + j] * x[j];
        }
        y[i] = s;
    }
}

} // namespace shellpc::kernels
