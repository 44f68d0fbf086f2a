#include "kissing/code_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "kissing/text_format.hpp"

namespace kissing {

Code read_code(std::istream& in) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw FormatError(reader.line_number(), "missing code header");
  const Header header = parse_header(line, reader.line_number());
  if (header.tag != "code") throw FormatError(reader.line_number(), "expected 'code' header, got '" + header.tag + "'");
  const std::size_t header_line = reader.line_number();
  const auto n = header.get_uint("n", header_line);
  const auto d = header.get_uint("d", header_line);
  const auto size = header.get_uint("size", header_line);
  std::optional<std::size_t> w;
  if (header.has("w")) w = header.get_uint("w", header_line);
  if (n == 0 || n > Codeword::kMaxLength) throw FormatError(header_line, "n must be in [1, 256]");

  std::vector<Codeword> words;
  words.reserve(size);
  while (reader.next(line)) {
    if (line.size() != n)
      throw FormatError(reader.line_number(),
                        "word has " + std::to_string(line.size()) + " characters, expected " + std::to_string(n));
    try {
      words.push_back(Codeword::from_string(line));
    } catch (const std::invalid_argument& e) {
      throw FormatError(reader.line_number(), e.what());
    }
  }
  if (words.size() != size)
    throw FormatError(reader.line_number(),
                      "header declares size=" + std::to_string(size) + " but file has " + std::to_string(words.size()) + " words");
  try {
    return Code(n, d, std::move(words), w);
  } catch (const std::invalid_argument& e) {
    throw FormatError(header_line, e.what());
  }
}

Code read_code_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open code file " + path.string());
  try {
    return read_code(in);
  } catch (const FormatError& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

void write_code(std::ostream& out, const Code& code, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << "code n=" << code.length() << " d=" << code.declared_distance();
  if (code.weight()) out << " w=" << *code.weight();
  out << " size=" << code.size() << '\n';
  for (const auto& w : code.words()) out << w.to_string() << '\n';
}

void write_code_file(const std::filesystem::path& path, const Code& code, const std::vector<std::string>& comments) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_code(out, code, comments);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace kissing
