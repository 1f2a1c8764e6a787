#pragma once

#include "jetinv/report.hpp"

namespace jetinv {

/// Dispatches to the owning module. Suites: invariance, counts, syzygy,
/// lowrel, eikonal, compat, forms, tresse, frames. Exact suites use
/// residual = 0 as the pass criterion; numeric suites use cfg.tolerance.
/// Reports are reproducible bit-for-bit given (suite, n, order, trials, seed).
Report run_suite(const SuiteConfig& cfg);

} // namespace jetinv
