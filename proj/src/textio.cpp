#include "rslink/textio.hpp"

#include <charconv>
#include <sstream>

#include "rslink/error.hpp"

namespace rslink {

namespace {

constexpr std::string_view kMetaTag = "rslink";

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw Error(Errc::parse_error,
                "line " + std::to_string(line) + ": '" + std::string(tok) + "' is not a decimal residue");
  return v;
}

void parse_meta(std::string_view body, WordText& out) {
  std::istringstream in{std::string(body)};
  std::string tok;
  if (!(in >> tok) || tok != kMetaTag) return;
  while (in >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0) continue;
    out.meta[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
}

}  // namespace

WordText parse_word_text(std::string_view text) {
  WordText out;
  std::size_t line_no = 0;
  bool have_q = false, have_values = false;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      parse_meta(line.substr(1), out);
      continue;
    }
    if (!have_q) {
      const auto q = parse_uint(line, line_no);
      if (q < 2 || q > 65536) throw Error(Errc::parse_error, "field size out of range");
      out.q = static_cast<std::uint32_t>(q);
      have_q = true;
      continue;
    }
    if (have_values) throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": unexpected data");
    std::string_view rest = line;
    while (!rest.empty()) {
      const auto sp = rest.find_first_of(" \t");
      const std::string_view tok = rest.substr(0, sp);
      rest = sp == std::string_view::npos ? std::string_view{} : trim(rest.substr(sp));
      const auto v = parse_uint(tok, line_no);
      if (v >= out.q)
        throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": residue " +
                                           std::string(tok) + " is not below q");
      out.values.push_back(static_cast<std::uint32_t>(v));
    }
    have_values = true;
  }
  if (!have_q) throw Error(Errc::parse_error, "missing field size line");
  return out;
}

std::string format_word_text(const WordText& w) {
  std::ostringstream out;
  if (!w.meta.empty()) {
    out << "# " << kMetaTag;
    for (const auto& [k, v] : w.meta) out << ' ' << k << '=' << v;
    out << '\n';
  }
  out << w.q << '\n';
  for (std::size_t i = 0; i < w.values.size(); ++i) out << (i ? " " : "") << w.values[i];
  out << '\n';
  return out.str();
}

}  // namespace rslink
