#pragma once

#include <iosfwd>
#include <string>

namespace phoenix {

// Line-based UCI session over the given streams. store_path optionally names
// a chromosome store; chromosome_id selects a record from it (default: the
// highest-fitness record, or the all-zero table set when no store is given).
// Returns the process exit status. Throws Error only for startup problems
// (unreadable store, unknown chromosome id); protocol input never throws.
int uci_loop(std::istream& in, std::ostream& out, const std::string& store_path = "",
             const std::string& chromosome_id = "");

}  // namespace phoenix
