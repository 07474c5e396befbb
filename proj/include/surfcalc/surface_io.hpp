#pragma once

#include "surfcalc/lattice.hpp"

#include "json.hpp"

#include <filesystem>

namespace surfcalc {

// Surface description files. Schema-level problems throw InputError;
// mathematical problems (signature, parity) are left for validate_surface.
SurfaceModel parse_surface(const nlohmann::json& doc);
SurfaceModel read_surface(const std::filesystem::path& path);

nlohmann::ordered_json surface_to_json(const SurfaceModel& model);
void write_surface(const std::filesystem::path& path, const SurfaceModel& model);

nlohmann::ordered_json class_to_json(const DivisorClass& cls);

}  // namespace surfcalc
