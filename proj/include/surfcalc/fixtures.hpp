#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace surfcalc {

struct FixtureInfo {
  std::string file;
  std::string note;
};

// Bundled surface files with one-line provenance notes.
const std::vector<FixtureInfo>& fixture_catalog();

// Directory holding the bundled files; SURFCALC_FIXTURE_DIR overrides the
// compiled-in default when set in the environment.
std::filesystem::path fixture_dir();

}  // namespace surfcalc
