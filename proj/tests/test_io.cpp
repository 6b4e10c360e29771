#include <doctest.h>

#include "ovf/canon.hpp"
#include "ovf/io.hpp"
#include "test_support.hpp"

using namespace ovf;
using testing::Rng;

TEST_CASE("monomial text syntax") {
  CHECK(monomial_to_string(mask_of({0, 1, 9})) == "x0^x1^y1");
  CHECK(parse_monomial("x0^x1^y1", 16) == mask_of({0, 1, 9}));
  CHECK(parse_monomial("x3", 8) == mask_of({3}));
  CHECK(parse_monomial("1", 16) == 0);
  CHECK_THROWS_AS(parse_monomial("x1^x0", 16), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial("x0^x0", 16), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial("z0", 16), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial("y0", 8), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial("x9", 16), std::invalid_argument);

  Rng rng(61);
  for (int n = 0; n < 40; ++n) {
    const Mask m = rng.rmask(16, rng.geti(1, 8));
    CHECK(parse_monomial(monomial_to_string(m), 16) == m);
  }
}

TEST_CASE("monomial files skip comments and blanks") {
  const std::string text =
      "# comparison set\n"
      "x0^x1^x2^x3^x4^x5^x6^x7\n"
      "\n"
      "  y0^y1^y2^y3^y4^y5^y6^y7  # the other block\n";
  const auto monomials = parse_monomial_file(text, 16);
  REQUIRE(monomials.size() == 2);
  CHECK(monomials[0] == 0xFFu);
  CHECK(monomials[1] == 0xFF00u);
}

TEST_CASE("json round trip") {
  Rng rng(62);
  ExtForm f(16, 3);
  for (int n = 0; n < 12; ++n) f.add_term(rng.rmask(16, 3), rng.rq());
  CHECK(form_from_json(form_to_json(f)) == f);

  const ExtForm scaled = scaled_psi8();
  CHECK(form_from_json(form_to_json(scaled)) == scaled);
  const std::string text = form_to_json(scaled);
  CHECK(text.find("\"schema\": \"ovf-form/1\"") != std::string::npos);
  CHECK(text.find("\"dimension\": 16") != std::string::npos);
}

TEST_CASE("csv round trip") {
  const ExtForm scaled = scaled_psi8();
  CHECK(form_from_csv(form_to_csv(scaled)) == scaled);

  Rng rng(63);
  ExtForm f(8, 2);
  f.add_term(mask_of({0, 7}), Rational(-22, 7));
  f.add_term(mask_of({1, 2}), Rational(355, 113));
  CHECK(form_from_csv(form_to_csv(f)) == f);
  CHECK(form_from_csv(form_to_csv(cayley())) == cayley());
  CHECK_THROWS_AS(form_from_csv("bogus\n"), std::invalid_argument);
}

TEST_CASE("structural classification of the scaled form") {
  const ExtForm scaled = scaled_psi8();
  const Table3Report report = classify_table3(scaled);
  CHECK(report.total == 702);

  static const long expected[11] = {1, 28, 84, 14, 56, 336, 56, 14, 84, 28, 1};
  long sum = 0;
  for (int r = 0; r < 11; ++r) {
    CHECK(report.rows[r].count == expected[r]);
    CHECK(report.rows[r].positive + report.rows[r].negative == expected[r]);
    sum += report.rows[r].count;
  }
  CHECK(sum == 702);

  CHECK(report.rows[0].count == 1);
  CHECK(report.rows[0].negative == 1);
  CHECK(report.rows[10].negative == 1);
  CHECK(report.rows[5].count == 336);

  CHECK(table3_row_of(0xFFu) == 1);
  CHECK(table3_row_of(0xFF00u) == 11);
  // x{0,1,2,4} has unit product, so the disjoint (4,4) split lands in the
  // +-2 class and the equal-blocks split in its mirror
  CHECK(table3_row_of(mask_of({0, 1, 2, 4}) | (mask_of({3, 5, 6, 7}) << 8)) == 4);
  CHECK(table3_row_of(mask_of({0, 1, 2, 4}) | (mask_of({0, 1, 2, 4}) << 8)) == 8);
  CHECK(table3_row_of(mask_of({0, 1, 2, 3}) | (mask_of({0, 1, 2, 3}) << 8)) == 7);

  CHECK_THROWS_AS(table3_row_of(0x7Fu | (Mask(1) << 8)), std::logic_error);
  CHECK_THROWS_AS(classify_table3(ExtForm::term(16, 0x7Fu | (Mask(1) << 8), Rational(1))),
                  std::logic_error);
}

TEST_CASE("table3 serialization") {
  const Table3Report report = classify_table3(scaled_psi8());
  const std::string csv = table3_to_csv(report);
  CHECK(csv.find("Coefficient,Basis vector,Specification,Number") == 0);
  // 11 data rows
  long rows = -1;  // header
  for (char ch : csv)
    if (ch == '\n') ++rows;
  CHECK(rows == 11);
  const std::string json = table3_to_json(report);
  CHECK(json.find("\"total\": 702") != std::string::npos);
}

TEST_CASE("representative monomials") {
  const ExtForm scaled = scaled_psi8();
  const auto monomials = representative_monomials(scaled);
  REQUIRE(monomials.size() == 16);
  for (int t = 0; t < 11; ++t) {
    CHECK(!scaled.coeff(monomials[t]).is_zero());
    CHECK(table3_row_of(monomials[t]) == t + 1);
  }
  for (int t = 11; t < 16; ++t) CHECK(scaled.coeff(monomials[t]).is_zero());
}
