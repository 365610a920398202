#include "shellpc/rootfind.hpp"

namespace shellpc {

void RootSearchConfig::validate() const
{
    const bool ok = scan_start > 0.0 && scan_step > 0.0 && scan_start < scan_max && abs_tol > 0.0
                 && max_bisections > 0 && std::isfinite(scan_max);
    if (!ok) {
        throw Error(ErrorCode::Domain, "invalid RootSearchConfig");
    }
}

} // namespace shellpc
