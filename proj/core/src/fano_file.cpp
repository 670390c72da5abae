#include "smoothfano/fano_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "smoothfano/errors.hpp"

namespace sfano {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

Integer parse_integer(const Token& t, std::size_t line) {
  std::string_view s = t.text;
  std::size_t digits_from = (s.front() == '-' || s.front() == '+') ? 1 : 0;
  if (digits_from == s.size()) throw ParseError(line, t.column, "expected an integer, got '" + std::string(s) + "'");
  for (std::size_t i = digits_from; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw ParseError(line, t.column + i, "unexpected character '" + std::string(1, s[i]) + "' in integer");
    }
  }
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

std::size_t parse_count(const Token& t, std::size_t line, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) {
    throw ParseError(line, t.column, std::string("expected ") + what + ", got '" + std::string(t.text) + "'");
  }
  return value;
}

}  // namespace

FanoFile parse_fano(std::string_view text) {
  FanoFile out;
  enum class Stage { Header, Size, Rows } stage = Stage::Header;
  std::size_t expected_rows = 0;
  std::size_t line_no = 0;
  std::size_t last_line = 1;
  while (!text.empty()) {
    ++line_no;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::vector<Token> tokens = tokenize(line);
    if (tokens.empty()) continue;
    last_line = line_no;

    switch (stage) {
      case Stage::Header:
        if (tokens.size() != 2 || tokens[0].text != "fano") throw ParseError(line_no, tokens[0].column, "expected header 'fano 1'");
        if (tokens[1].text != "1") {
          throw ParseError(line_no, tokens[1].column, "unsupported format version '" + std::string(tokens[1].text) + "'");
        }
        stage = Stage::Size;
        break;
      case Stage::Size:
        if (tokens.size() != 2) throw ParseError(line_no, tokens[0].column, "expected '<d> <n>'");
        out.dim = parse_count(tokens[0], line_no, "a dimension");
        expected_rows = parse_count(tokens[1], line_no, "a vertex count");
        if (out.dim == 0) throw ParseError(line_no, tokens[0].column, "dimension must be positive");
        stage = Stage::Rows;
        break;
      case Stage::Rows: {
        if (out.rows.size() == expected_rows) {
          throw ParseError(line_no, tokens[0].column, "more than " + std::to_string(expected_rows) + " rows");
        }
        if (tokens.size() != out.dim) {
          const std::size_t col = tokens.size() > out.dim ? tokens[out.dim].column : line.size() + 1;
          throw ParseError(line_no, col,
                           "expected " + std::to_string(out.dim) + " entries, got " + std::to_string(tokens.size()));
        }
        LatticeVector row(out.dim);
        for (std::size_t i = 0; i < out.dim; ++i) row[i] = parse_integer(tokens[i], line_no);
        out.rows.push_back(std::move(row));
        break;
      }
    }
  }
  if (stage == Stage::Header) throw ParseError(line_no + 1, 1, "missing header 'fano 1'");
  if (stage == Stage::Size) throw ParseError(line_no + 1, 1, "missing '<d> <n>' line");
  if (out.rows.size() != expected_rows) {
    throw ParseError(last_line + 1, 1,
                     "expected " + std::to_string(expected_rows) + " rows, got " + std::to_string(out.rows.size()));
  }
  return out;
}

std::string serialize_fano(const FanoFile& file) {
  std::string out = "fano 1\n" + std::to_string(file.dim) + " " + std::to_string(file.rows.size()) + "\n";
  for (const auto& row : file.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ' ';
      out += row[i].str();
    }
    out += '\n';
  }
  return out;
}

std::string serialize_fano(const Polytope& p) { return serialize_fano(FanoFile{p.dim(), p.vertices()}); }

FanoFile read_fano_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_fano(buffer.str());
}

void write_fano_file(const std::filesystem::path& path, const Polytope& p) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << serialize_fano(p);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace sfano
