#include <doctest.h>

#include "asbg/asm.hpp"
#include "asbg/colouring.hpp"
#include "support/reference.hpp"

using namespace asbg;

namespace {

SignMatrix central() { return SignMatrix({{0, 1, 0}, {1, -1, 1}, {0, 1, 0}}); }
SignMatrix identity3() { return SignMatrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }

// Every 3^(n*n) sign matrix, filtered by is_asm.
std::uint64_t brute_asm_count(int n) {
  std::uint64_t total = 1, count = 0;
  for (int i = 0; i < n * n; ++i) total *= 3;
  for (std::uint64_t code = 0; code < total; ++code) {
    SignMatrix m(n, n);
    std::uint64_t x = code;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j, x /= 3) m.set(i, j, static_cast<int>(x % 3) - 1);
    count += is_asm(m);
  }
  return count;
}

}  // namespace

TEST_CASE("is_asm") {
  CHECK(is_asm(identity3()));
  CHECK(is_asm(central()));
  CHECK_FALSE(is_asm(SignMatrix(2, 2)));
  CHECK_FALSE(is_asm(SignMatrix({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 0, 0}})));
  // sums are 1 but the -1 leads its row
  CHECK_FALSE(is_asm(SignMatrix({{-1, 1, 1}, {1, 0, 0}, {1, 0, 0}})));
}

TEST_CASE("parse and format") {
  SignMatrix m = parse_matrix("0 1 0\n1 -1 1\n0 1 0\n");
  CHECK(m == central());
  CHECK(parse_matrix(format_matrix(m)) == m);
  CHECK_THROWS_AS(SignMatrix({{1, 2}}), Error);
  CHECK_THROWS_AS(SignMatrix({{1, 0}, {1}}), Error);
}

TEST_CASE("asm_to_asbg") {
  ColouredGraph one = asm_to_asbg(SignMatrix(std::vector<std::vector<int>>{{1}}));
  CHECK(one.graph.vertex_count() == 2);
  REQUIRE(one.graph.edge_count() == 1);
  CHECK(one.colouring[0] == Colour::Blue);

  ColouredGraph c = asm_to_asbg(central());
  CHECK(c.graph.vertex_count() == 6);
  CHECK(c.graph.edge_count() == 5);
  int red = 0;
  for (EdgeId e = 0; e < c.graph.edge_count(); ++e) red += c.colouring[e] == Colour::Red;
  CHECK(red == 1);
  CHECK(c.colouring[*c.graph.edge_between(c.graph.id("r2"), c.graph.id("c2"))] == Colour::Red);

  ColouredGraph id = asm_to_asbg(identity3());
  CHECK(components(id.graph).size() == 3);
  for (Colour col : id.colouring.colour) CHECK(col == Colour::Blue);
}

TEST_CASE("asbg_to_asm") {
  ColouredGraph id = asm_to_asbg(identity3());
  CHECK(asbg_to_asm(id, asm_row_names(3), asm_col_names(3)) == identity3());

  ColouredGraph c = asm_to_asbg(central());
  SignMatrix permuted = asbg_to_asm(c, {"r2", "r1", "r3"}, {"c2", "c1", "c3"});
  SignMatrix expected({{-1, 1, 1}, {1, 0, 0}, {1, 0, 0}});
  CHECK(permuted == expected);
  CHECK_FALSE(is_asm(permuted));

  CHECK_THROWS_AS(asbg_to_asm(c, {"r1", "r2"}, asm_col_names(3)), Error);
}

TEST_CASE("count_asms against the product formula") {
  for (int n = 1; n <= kMaxAsmOrder; ++n) CHECK(count_asms(n) == reference::asm_product_formula(n));
  CHECK(count_asms(1) == 1);
  CHECK(count_asms(3) == 7);
  CHECK(count_asms(4) == 42);
  CHECK(count_asms(5) == 429);
  CHECK_THROWS_AS(count_asms(0), Error);
  CHECK_THROWS_AS(count_asms(6), Error);
}

TEST_CASE("count_asms against exhaustive sign matrices") {
  for (int n = 1; n <= 3; ++n) CHECK(count_asms(n) == brute_asm_count(n));
}

TEST_CASE("property: every small ASM survives the graph round trip") {
  for (int n = 1; n <= 3; ++n) {
    std::uint64_t total = 1;
    for (int i = 0; i < n * n; ++i) total *= 3;
    for (std::uint64_t code = 0; code < total; ++code) {
      SignMatrix m(n, n);
      std::uint64_t x = code;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j, x /= 3) m.set(i, j, static_cast<int>(x % 3) - 1);
      if (!is_asm(m)) continue;
      ColouredGraph cg = asm_to_asbg(m);
      CHECK(verify_difference1(cg));
      for (const Graph& part : components(cg.graph)) {
        Bipartition bp = bipartition(part);
        CHECK(bp.part1.size() == bp.part2.size());
      }
      CHECK(asbg_to_asm(cg, asm_row_names(n), asm_col_names(n)) == m);
    }
  }
}
