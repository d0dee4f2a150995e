#pragma once

#include "algoeff/arch.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace algoeff::arch {

// Canonical names of the built-in ImageNet classifiers, in efficiency-table order.
const std::vector<std::string>& builtin_arch_names();

// The eight architectures whose counts are held to the reference table.
const std::vector<std::string>& mandatory_arch_names();

// Lookup ignores case and the separators '-', '_', ' ', '.'.
// Throws NotFoundError listing the available names.
ArchitectureSpec builtin_arch(std::string_view name);

// Lower-cased name with separators removed; used for name matching everywhere.
std::string normalize_model_name(std::string_view name);

} // namespace algoeff::arch
