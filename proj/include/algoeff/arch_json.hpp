#pragma once

#include "algoeff/arch.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace algoeff::arch {

// Architecture documents:
//   {"name", "default_input": {"c","h","w"},
//    "nodes": [{"id","kind","params":{...},"inputs":[...]}],
//    "output", "metadata"?: {string: string}}
// Unknown fields anywhere are rejected with ParseError.
ArchitectureSpec parse_arch_json(std::string_view text);
ArchitectureSpec load_arch_file(const std::filesystem::path& path);
std::string arch_to_json(const ArchitectureSpec& arch, int indent = 2);

// Built-in name, or a path to an architecture document when the name is not
// a built-in and the file exists.
ArchitectureSpec resolve_arch(const std::string& name_or_path);

} // namespace algoeff::arch
