#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "sccpref/framework.hpp"
#include "sccpref/labelling.hpp"

namespace sccpref {

// Parses `arg(x).` and `att(x,y).` statements. Several statements may share a
// line; whitespace is free and `%` starts a comment running to end of line.
// Every attack endpoint must be declared by some arg statement. Throws
// ParseError carrying the 1-based line number.
ArgumentationFramework parse_apx(std::string_view text);

// Reads and parses a file; an unreadable file is a ParseError at line 0.
ArgumentationFramework read_apx_file(const std::filesystem::path& path);

// Arguments in identifier order, then attacks in (attacker, target) order.
void write_apx(const ArgumentationFramework& af, std::ostream& os);
std::string to_apx(const ArgumentationFramework& af);

// "EXTENSIONS: n" followed by one "[a,b,c]" line per labelling's in-set, names
// sorted ascending within a line and lines sorted lexicographically. Every
// line ends with a newline.
void print_extensions(const LabellingSet& result, const ArgumentationFramework& af, std::ostream& os);
std::string format_extensions(const LabellingSet& result, const ArgumentationFramework& af);

}  // namespace sccpref
