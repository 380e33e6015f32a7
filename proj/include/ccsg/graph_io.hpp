#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ccsg/signed_graph.hpp"

namespace ccsg::io {

struct ParseError : Error {
    ParseError(int line_number, const std::string& message)
        : Error("line " + std::to_string(line_number) + ": " + message), line(line_number) {}
    int line;
};

/// Text format, DIMACS-flavored:
///   c <comment>
///   p sg <n> <m>
///   e <u> <v> <+|->     (1-based vertex ids, m such lines)
SignedGraph parse_graph(std::istream& in);
SignedGraph parse_graph(const std::string& text);
SignedGraph load_graph(const std::string& path);

std::string serialize_graph(const SignedGraph& g,
                            const std::vector<std::string>& comments = {});

std::string read_file(const std::string& path);

/// Writes via a temporary file and rename, so failures leave no partial file.
void write_file_atomic(const std::string& path, const std::string& content);

std::uint64_t fnv1a64(std::string_view bytes);
std::string checksum_hex(std::string_view bytes);

}  // namespace ccsg::io
