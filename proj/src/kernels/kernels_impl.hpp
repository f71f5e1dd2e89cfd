#pragma once

#include "ls2pc/kernels.hpp"

namespace ls2pc::kernels::detail {

// Defined in the per-ISA translation units; only referenced when the
// matching LS2PC_HAVE_* macro is set.
const KernelTable& avx2_table_unchecked();
const KernelTable& neon_table_unchecked();

}  // namespace ls2pc::kernels::detail
