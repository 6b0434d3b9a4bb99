#pragma once

#include <string>
#include <vector>

namespace fmd::cli {

std::vector<std::string> preset_names();

// Writes the artifact files for one named parameter set into out_dir and
// returns the log lines describing what was produced (already printed
// format-ready, one per line).
std::vector<std::string> run_preset(const std::string& name,
                                    const std::string& out_dir,
                                    const std::string& format);

} // namespace fmd::cli
