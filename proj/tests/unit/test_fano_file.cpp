#include <doctest.h>

#include <filesystem>

#include "corpus.hpp"
#include "smoothfano/errors.hpp"
#include "smoothfano/fano_file.hpp"
#include "smoothfano/generators.hpp"

using namespace sfano;

namespace {

void check_parse_error(const std::string& text, std::size_t line, std::size_t column) {
  try {
    parse_fano(text);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == line);
    CHECK(e.column() == column);
  }
}

}  // namespace

TEST_SUITE("fano_file") {
  TEST_CASE("serialize the hexagon") {
    CHECK(serialize_fano(hexagon()) == "fano 1\n2 6\n1 0\n0 1\n-1 1\n1 -1\n-1 0\n0 -1\n");
  }

  TEST_CASE("comments and blank lines") {
    const FanoFile f = parse_fano("# a triangle\n\nfano 1\n2 3   # d n\n1 0\n\n0 1\n-1 -1 # last\n");
    CHECK(f.dim == 2);
    CHECK(f.rows == std::vector<LatticeVector>{{1, 0}, {0, 1}, {-1, -1}});
    CHECK(serialize_fano(f) == "fano 1\n2 3\n1 0\n0 1\n-1 -1\n");
  }

  TEST_CASE("big integers survive") {
    const std::string text = "fano 1\n1 2\n123456789012345678901234567890\n-98765432109876543210\n";
    CHECK(serialize_fano(parse_fano(text)) == text);
  }

  TEST_CASE("round trip on the corpus") {
    for (const auto& inst : corpus::standing(10, 1)) {
      const std::string text = serialize_fano(inst.polytope);
      const FanoFile parsed = parse_fano(text);
      CHECK(parsed.rows == inst.polytope.vertices());
      CHECK(serialize_fano(parsed) == text);
    }
  }

  TEST_CASE("diagnostics carry line and column") {
    check_parse_error("", 1, 1);
    check_parse_error("fano 2\n", 1, 6);
    check_parse_error("polytope 1\n", 1, 1);
    check_parse_error("fano 1\n2\n", 2, 1);
    check_parse_error("fano 1\n2 x\n", 2, 3);
    check_parse_error("fano 1\n2 2\n1 0\n0 1 5\n", 4, 5);
    check_parse_error("fano 1\n2 2\n1 0\n0 a\n", 4, 3);
    check_parse_error("fano 1\n2 2\n1 0\n0 1x\n", 4, 4);
    check_parse_error("fano 1\n2 3\n1 0\n0 1\n", 5, 1);
    check_parse_error("fano 1\n2 1\n1 0\n0 1\n", 4, 1);
    check_parse_error("fano 1\n0 0\n", 2, 1);
  }

  TEST_CASE("file io") {
    const auto path = std::filesystem::temp_directory_path() / "smoothfano_test_io.fano";
    write_fano_file(path, bundle_b(1));
    CHECK(read_fano_file(path).rows == bundle_b(1).vertices());
    std::filesystem::remove(path);
    CHECK_THROWS_AS(read_fano_file(path), std::runtime_error);
  }
}
