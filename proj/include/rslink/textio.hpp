#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace rslink {

/// Plain-text word / polynomial file:
///
///   # optional comment lines
///   q
///   v0 v1 v2 ...
///
/// Comment lines of the form `# rslink key=value ...` carry metadata such as
/// the code dimension and primitive element, so a codeword written by one
/// command can be decoded by another without repeating parameters.
struct WordText {
  std::uint32_t q = 0;
  std::vector<std::uint32_t> values;
  std::map<std::string, std::string> meta;
};

/// Throws Error(parse_error) on malformed input or residues >= q.
WordText parse_word_text(std::string_view text);

std::string format_word_text(const WordText& w);

}  // namespace rslink
