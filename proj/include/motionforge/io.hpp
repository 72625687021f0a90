#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "motionforge/perm_group.hpp"

namespace mf {

/**
 * Generator files: the first non-comment line is the degree n, each further
 * line one permutation in 1-based cycle notation. Blank lines and text after
 * '#' are ignored.
 */
PermGroup parse_generators(std::istream& in);
PermGroup parse_generators(const std::string& text);
PermGroup read_generators(const std::filesystem::path& path);
std::string format_generators(const PermGroup& g);

/// Returns path if it exists, else $MOTIONFORGE_DATA/path if that exists,
/// else throws DomainError.
std::filesystem::path resolve_data_path(const std::filesystem::path& path);

/// Subsets: 1-based points separated by whitespace or commas.
Subset parse_subset(const std::string& text, std::size_t n);
std::string format_subset(const Subset& s);

/// Colourings: one "point:colour" pair per line (or whitespace separated),
/// both 1-based. Unlisted points get colour 1.
std::vector<std::uint32_t> parse_coloring(const std::string& text, std::size_t n);
std::string format_coloring(const std::vector<std::uint32_t>& colors);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace mf
