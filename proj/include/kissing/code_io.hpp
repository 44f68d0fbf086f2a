#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "kissing/code.hpp"

namespace kissing {

/// Code file:
///
///     # comments
///     code n=<n> d=<d> [w=<w>] size=<k>
///     <n bits, position 0 leftmost>   (k lines)
Code read_code(std::istream& in);
Code read_code_file(const std::filesystem::path& path);

/// `comments` are written as `# ...` lines ahead of the header.
void write_code(std::ostream& out, const Code& code, const std::vector<std::string>& comments = {});
void write_code_file(const std::filesystem::path& path, const Code& code,
                     const std::vector<std::string>& comments = {});

}  // namespace kissing
