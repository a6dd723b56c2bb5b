#ifndef MSYM_COMMANDS_HPP
#define MSYM_COMMANDS_HPP

#include <string>
#include <vector>

#include "msym/io.hpp"

namespace msym {

/// Subcommands understood by run_command, in CLI order.
const std::vector<std::string>& command_names();

/// Validates `request`, runs the named operation and returns its report with
/// a "provenance" field. Errors propagate as msym::Error subclasses.
Json run_command(const std::string& name, const Json& request);

}  // namespace msym

#endif  // MSYM_COMMANDS_HPP
