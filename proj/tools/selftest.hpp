#ifndef GALDIST_TOOLS_SELFTEST_HPP
#define GALDIST_TOOLS_SELFTEST_HPP

#include "galdist/json_io.hpp"

namespace galdist::tools {

// Runs the oracle suites at the given depth (1 is quick, larger values widen
// the search grids) and reports per-suite pass/fail counts.
io::Json run_selftest(int depth);

}  // namespace galdist::tools

#endif
