#pragma once

#include <array>
#include <string>
#include <vector>

#include "ovf/berger.hpp"
#include "ovf/exterior.hpp"

namespace ovf {

// Serializable view of an ExtForm: ascending index lists (0-7 = x block,
// 8-15 = y block on R^16) with exact coefficients.
struct FormEntry {
  std::vector<int> indices;
  Rational coefficient;
};

struct FormExport {
  int dimension = 0;
  int degree = 0;
  std::vector<FormEntry> entries;
};

FormExport to_export(const ExtForm& f);
ExtForm from_export(const FormExport& e);

// JSON round trip (object with a schema version field); coefficients are
// decimal integers or "p/q" strings.
std::string form_to_json(const ExtForm& f);
ExtForm form_from_json(const std::string& text);

// CSV round trip: header "monomial,coefficient", one term per row.
std::string form_to_csv(const ExtForm& f);
ExtForm form_from_csv(const std::string& text);

// Monomial text syntax: tokens x0..x7 (bits 0-7) and y0..y7 (bits 8-15)
// joined by '^', ascending order required; "1" denotes the empty monomial.
std::string monomial_to_string(Mask m);
Mask parse_monomial(const std::string& text, int dim);

// One monomial per line; blank lines and '#' comments are skipped.
std::vector<Mask> parse_monomial_file(const std::string& text, int dim);

// Classification of the 702 monomials of the scaled invariant 8-form into
// the eleven structural classes (bidegree plus index-product predicates).
struct Table3Row {
  int row = 0;
  std::string coefficient;    // "-14", "+-2" or "+-1"
  std::string pattern;        // basis vector shape
  std::string specification;  // structural predicate
  long count = 0;
  long positive = 0;
  long negative = 0;
};

struct Table3Report {
  std::array<Table3Row, 11> rows;
  long total = 0;
};

// Expects scaled_psi8(); throws std::logic_error on any monomial that fits
// no class or whose coefficient magnitude disagrees with its class.
Table3Report classify_table3(const ExtForm& scaled);

std::string table3_to_json(const Table3Report& report);
std::string table3_to_csv(const Table3Report& report);

// Which structural class a degree-8 monomial of the scaled form falls in
// (1-11); throws std::logic_error for monomials outside all classes.
int table3_row_of(Mask m);

// Default comparison set for the Monte Carlo cross-check: the smallest
// monomial of each of the eleven classes plus five monomials that the
// invariant form provably misses.
std::vector<Mask> representative_monomials(const ExtForm& scaled);

// Comparison of a Monte Carlo run against the exact coefficients. The
// global sign of the proportionality constant is fixed from the x-block
// monomial when present (from the largest reference coefficient otherwise).
struct BergerComparison {
  MonteCarloStats stats;
  std::vector<Rational> reference;
  int sign = 1;
  double cosine = 0.0;
};

BergerComparison compare_berger(const MonteCarloStats& stats, const ExtForm& scaled);

// Deterministic text report: one line per monomial (mean, standard error,
// exact coefficient) plus the sign-fixed cosine similarity.
std::string berger_report(const BergerComparison& cmp);

}  // namespace ovf
