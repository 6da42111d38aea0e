#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mocposite/report.hpp"
#include "mocposite/rng.hpp"
#include "mocposite/slit_domain.hpp"

namespace mocposite {

enum class Suite { all, branches, continuation, quadrature, exercises };

Suite suite_from_string(const std::string& name);
std::string to_string(Suite suite);

struct SuiteOptions {
  std::optional<double> tol_override;  // replaces every record's tolerance
  std::optional<int> n_override;       // replaces quadrature orders
  std::uint64_t seed = 0;              // seeds the pseudo-random grids
};

// Runs the named suite and returns the finalized, name-sorted report.
VerificationReport run_suite(Suite suite, const SuiteOptions& opts = {});

// Seeded geometry shared between the suite runner and the acceptance checks.

// Closed random polygon with every segment at distance >= 0.1 from +1 and -1.
PolyPath random_loop_avoiding_pm1(Rng& rng);

// Three in-domain probe paths from 3i to -3i around the comb region
// (outer arcs; the comb's slits are all bounded).
std::vector<PolyPath> comb_probe_paths(Rng& rng);

// Three in-domain probe paths from 3i to -3i for the double-spiral region:
// outer travel is blocked by the spiral tails, so the route threads the
// inter-arm corridor inward, crosses the central disk through 0, and spirals
// back out through the point-reflected corridor.
std::vector<PolyPath> spiral_probe_paths(Rng& rng);

}  // namespace mocposite
