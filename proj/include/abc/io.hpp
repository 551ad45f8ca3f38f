#pragma once

#include <iosfwd>
#include <string>

#include "abc/tree.hpp"

namespace abc {

// Text format: first line "n <N>", then N-1 lines "<u> <v>" (0-based ids).
Tree read_tree_text(std::istream& in);
void write_tree_text(std::ostream& out, const Tree& t);

// JSON form: {"n": N, "edges": [[u,v],...]}.
Tree tree_from_json(const std::string& text);
std::string tree_to_json(const Tree& t);

// Reads either format, deciding by the first non-space character.
Tree read_tree_file(const std::string& path);
void write_tree_file(const std::string& path, const Tree& t, bool json);

std::string tree_to_dot(const Tree& t);

// 17-significant-digit rendering used by all text/CSV output.
std::string format_real(double v);

}  // namespace abc
