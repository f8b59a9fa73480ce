#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "xyzcyclic/decoder.h"
#include "xyzcyclic/noise.h"
#include "xyzcyclic/xyz_code.h"

namespace xyz::cli {

/// Sweep campaign read from a flat `key = value` document. Lines starting
/// with '#' are comments; unknown keys are rejected.
struct CampaignConfig {
  std::vector<XYZParams> codes;
  std::string noise = "depolarizing";
  double eta = 1000.0;
  std::vector<double> p_grid;
  std::size_t trials = 0;
  std::uint64_t seed = 1;
  DecoderConfig decoder = default_simulation_decoder();
  bool pure_on_circulant = true;
  std::string out;
};

CampaignConfig parse_campaign(const std::string& text);
CampaignConfig load_campaign(const std::string& path);

/// Runs the xyzc command line. Results go to `out` (or the file named by
/// --out), diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xyz::cli
