#pragma once
#include <ostream>

namespace toricsod {

/* Runs the built-in acceptance checks — the golden examples and property
 * sweeps the library is contracted to satisfy — printing one pass/fail line
 * per item plus a summary.  The whole run is executed twice and the outputs
 * compared, so the report also certifies its own determinism.  Returns true
 * only when every item passes. */
bool run_selftest(std::ostream& os);

}  // namespace toricsod
