#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace skossim {

/// Entry point of the `skossim` tool. `args` excludes the program name.
/// Returns 0 on success, 1 on usage errors and 2 on data or parse errors.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace skossim
