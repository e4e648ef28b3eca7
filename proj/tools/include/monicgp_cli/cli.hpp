#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace monicgp::cli {

/// Exit codes: 0 all pass, 1 a claim fails, 2 a claim is undecided, 3 usage
/// or validation error.
enum Exit : int { Ok = 0, Failed = 1, Undecided = 2, Usage = 3 };

struct WorkspaceConfig {
  std::string field = "Q";
  std::size_t bound = 6;
  std::size_t cap = 512;
  std::uint64_t seed = 1;
  std::string format = "json";
};

/// Reads the file named by MONICGP_CONFIG when set; throws on a bad file.
WorkspaceConfig load_config();

/// args excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monicgp::cli
