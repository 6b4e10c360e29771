#include "ovf/io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "ovf/octonion.hpp"

namespace ovf {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kFormSchema = "ovf-form/1";
constexpr const char* kTable3Schema = "ovf-table3/1";

// Index product over a set of basis indices: the index p with
// e_{i_1} ... e_{i_k} = +-e_p. Commutative and associative, e_0 = 1 acts as
// the neutral element, so "product = 0" means the product is +-1.
int index_product(Mask s) {
  int p = 0;
  for (int i : mask_indices(s)) p = basis_index_product(p, i);
  return p;
}

bool unit_product(Mask s) { return index_product(s) == 0; }

long expected_magnitude(int row) {
  switch (row) {
    case 1: case 11: return 14;
    case 2: case 3: case 4: case 8: case 9: case 10: return 2;
    default: return 1;
  }
}

Table3Row row_template(int row) {
  switch (row) {
    case 1: return {1, "-14", "dx^0...dx^7", "-", 0, 0, 0};
    case 2: return {2, "+-2", "dx^i0...dx^i5 dy^i6 dy^i7", "i0<...<i5; i6<i7", 0, 0, 0};
    case 3: return {3, "+-2", "dx^i0...dx^i5 dy^i4 dy^i5",
                    "i0<...<i3; i4<i5; i0i1i2i3=0", 0, 0, 0};
    case 4: return {4, "+-2", "dx^i0...dx^i3 dy^i4...dy^i7",
                    "i0<...<i3; i4<...<i7; i0i1i2i3=0", 0, 0, 0};
    case 5: return {5, "+-1", "dx^i0...dx^i3 dy^i4...dy^i7",
                    "i0<...<i3; i4<...<i7; i0i1i2i3!=0", 0, 0, 0};
    case 6: return {6, "+-1", "dx^i0...dx^i3 dy^i2...dy^i5",
                    "i0<i1; i2<i3; i0i1i2i3!=0; i4=i0i2i3; i5=i1i2i3", 0, 0, 0};
    case 7: return {7, "+-1", "dx^i0...dx^i3 dy^i0...dy^i3",
                    "i0<...<i3; i0i1i2i3!=0", 0, 0, 0};
    case 8: return {8, "+-2", "dx^i0...dx^i3 dy^i0...dy^i3",
                    "i0<...<i3; i0i1i2i3=0", 0, 0, 0};
    case 9: return {9, "+-2", "dx^i0 dx^i1 dy^i0...dy^i5",
                    "i0<i1; i2<...<i5; i2i3i4i5=0", 0, 0, 0};
    case 10: return {10, "+-2", "dx^i0 dx^i1 dy^i2...dy^i7", "i0<i1; i2<...<i7", 0, 0, 0};
    case 11: return {11, "-14", "dy^0...dy^7", "-", 0, 0, 0};
    default: throw std::out_of_range("row_template: bad row");
  }
}

}  // namespace

int table3_row_of(Mask m) {
  const Mask xs = m & 0xFFu;
  const Mask ys = (m >> 8) & 0xFFu;
  const int k = mask_degree(xs), l = mask_degree(ys);

  if (k == 8 && l == 0) return 1;
  if (k == 0 && l == 8) return 11;
  if (k == 6 && l == 2) {
    if ((xs & ys) == 0) return 2;
    if ((ys & ~xs) == 0 && unit_product(xs & ~ys)) return 3;
  } else if (k == 2 && l == 6) {
    if ((xs & ys) == 0) return 10;
    if ((xs & ~ys) == 0 && unit_product(ys & ~xs)) return 9;
  } else if (k == 4 && l == 4) {
    const Mask shared = xs & ys;
    const int overlap = mask_degree(shared);
    if (overlap == 0) return unit_product(xs) ? 4 : 5;
    if (overlap == 4) return unit_product(xs) ? 8 : 7;
    if (overlap == 2 && !unit_product(xs)) {
      const auto xonly = mask_indices(xs & ~ys);
      const int p = index_product(shared);
      const Mask partners = (Mask(1) << basis_index_product(xonly[0], p)) |
                            (Mask(1) << basis_index_product(xonly[1], p));
      if (partners == (ys & ~xs)) return 6;
    }
  }
  throw std::logic_error("monomial fits no structural class: " + monomial_to_string(m));
}

Table3Report classify_table3(const ExtForm& scaled) {
  if (scaled.dim() != 16 || scaled.degree() != 8)
    throw std::invalid_argument("classify_table3: expected a degree-8 form on R^16");
  Table3Report report;
  for (int r = 1; r <= 11; ++r) report.rows[r - 1] = row_template(r);
  for (const auto& [m, c] : scaled.terms()) {
    const int row = table3_row_of(m);
    if (!(abs(c) == Rational(expected_magnitude(row))))
      throw std::logic_error("coefficient magnitude disagrees with class " +
                             std::to_string(row) + " at " + monomial_to_string(m));
    auto& entry = report.rows[row - 1];
    ++entry.count;
    (c.sign() > 0 ? entry.positive : entry.negative)++;
    ++report.total;
  }
  return report;
}

FormExport to_export(const ExtForm& f) {
  FormExport e;
  e.dimension = f.dim();
  e.degree = f.degree();
  for (const auto& [m, c] : f.terms()) e.entries.push_back({mask_indices(m), c});
  return e;
}

ExtForm from_export(const FormExport& e) {
  ExtForm f(e.dimension, e.degree);
  for (const auto& entry : e.entries) {
    Mask m = 0;
    int prev = -1;
    for (int i : entry.indices) {
      if (i <= prev) throw std::invalid_argument("from_export: indices must strictly ascend");
      if (i < 0 || i >= e.dimension)
        throw std::out_of_range("from_export: index outside ambient dimension");
      m |= Mask(1) << i;
      prev = i;
    }
    f.add_term(m, entry.coefficient);
  }
  return f;
}

std::string form_to_json(const ExtForm& f) {
  const FormExport e = to_export(f);
  json root;
  root["schema"] = kFormSchema;
  root["dimension"] = e.dimension;
  root["degree"] = e.degree;
  json terms = json::array();
  for (const auto& entry : e.entries) {
    json t;
    t["indices"] = entry.indices;
    t["coefficient"] = entry.coefficient.str();
    terms.push_back(std::move(t));
  }
  root["terms"] = std::move(terms);
  return root.dump(2) + "\n";
}

ExtForm form_from_json(const std::string& text) {
  const json root = json::parse(text);
  if (root.at("schema").get<std::string>() != kFormSchema)
    throw std::invalid_argument("form_from_json: unknown schema");
  FormExport e;
  e.dimension = root.at("dimension").get<int>();
  e.degree = root.at("degree").get<int>();
  for (const auto& t : root.at("terms")) {
    FormEntry entry;
    entry.indices = t.at("indices").get<std::vector<int>>();
    entry.coefficient = Rational(t.at("coefficient").get<std::string>());
    e.entries.push_back(std::move(entry));
  }
  return from_export(e);
}

std::string form_to_csv(const ExtForm& f) {
  std::ostringstream out;
  out << "monomial,coefficient\n";
  for (const auto& [m, c] : f.terms())
    out << monomial_to_string(m) << "," << c.str() << "\n";
  return out.str();
}

ExtForm form_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "monomial,coefficient")
    throw std::invalid_argument("form_from_csv: missing header row");
  std::vector<std::pair<Mask, Rational>> terms;
  Mask all = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("form_from_csv: malformed row");
    const Mask m = parse_monomial(line.substr(0, comma), kMaxDim);
    terms.emplace_back(m, Rational(line.substr(comma + 1)));
    all |= m;
  }
  if (terms.empty()) throw std::invalid_argument("form_from_csv: no terms");
  // The CSV carries no dimension field; the smallest ambient containing all
  // indices is used.
  int dim = 0;
  while (all >> dim) ++dim;
  ExtForm f(dim, mask_degree(terms.front().first));
  for (const auto& [m, c] : terms) f.add_term(m, c);
  return f;
}

std::string monomial_to_string(Mask m) {
  if (m == 0) return "1";
  std::string out;
  for (int i : mask_indices(m)) {
    if (!out.empty()) out += '^';
    out += (i < 8) ? "x" + std::to_string(i) : "y" + std::to_string(i - 8);
  }
  return out;
}

Mask parse_monomial(const std::string& text, int dim) {
  if (text == "1") return 0;
  Mask m = 0;
  int prev = -1;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t next = text.find('^', pos);
    const std::string token =
        text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (token.size() < 2 || (token[0] != 'x' && token[0] != 'y'))
      throw std::invalid_argument("parse_monomial: bad token '" + token + "'");
    int value = 0;
    for (std::size_t i = 1; i < token.size(); ++i) {
      if (token[i] < '0' || token[i] > '9')
        throw std::invalid_argument("parse_monomial: bad token '" + token + "'");
      value = 10 * value + (token[i] - '0');
    }
    if (value > 7) throw std::invalid_argument("parse_monomial: index above 7 in '" + token + "'");
    const int bit = (token[0] == 'x') ? value : 8 + value;
    if (bit >= dim)
      throw std::invalid_argument("parse_monomial: token '" + token + "' outside dimension");
    if (bit <= prev)
      throw std::invalid_argument("parse_monomial: tokens must strictly ascend");
    m |= Mask(1) << bit;
    prev = bit;
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (m == 0) throw std::invalid_argument("parse_monomial: empty monomial");
  return m;
}

std::vector<Mask> parse_monomial_file(const std::string& text, int dim) {
  std::vector<Mask> monomials;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
      line.pop_back();
    std::size_t start = 0;
    while (start < line.size() && (line[start] == ' ' || line[start] == '\t')) ++start;
    line.erase(0, start);
    if (line.empty()) continue;
    monomials.push_back(parse_monomial(line, dim));
  }
  return monomials;
}

std::string table3_to_json(const Table3Report& report) {
  json root;
  root["schema"] = kTable3Schema;
  root["total"] = report.total;
  json rows = json::array();
  for (const auto& r : report.rows) {
    json row;
    row["row"] = r.row;
    row["coefficient"] = r.coefficient;
    row["pattern"] = r.pattern;
    row["specification"] = r.specification;
    row["count"] = r.count;
    row["positive"] = r.positive;
    row["negative"] = r.negative;
    rows.push_back(std::move(row));
  }
  root["rows"] = std::move(rows);
  return root.dump(2) + "\n";
}

std::string table3_to_csv(const Table3Report& report) {
  std::ostringstream out;
  out << "Coefficient,Basis vector,Specification,Number\n";
  for (const auto& r : report.rows)
    out << r.coefficient << "," << r.pattern << "," << r.specification << ","
        << r.count << "\n";
  return out.str();
}

std::vector<Mask> representative_monomials(const ExtForm& scaled) {
  std::array<Mask, 11> first{};
  std::array<bool, 11> seen{};
  for (const auto& [m, c] : scaled.terms()) {
    const int row = table3_row_of(m);
    if (!seen[row - 1]) {
      seen[row - 1] = true;
      first[row - 1] = m;
    }
  }
  std::vector<Mask> monomials;
  for (int r = 0; r < 11; ++r) {
    if (!seen[r]) throw std::logic_error("representative_monomials: class with no monomial");
    monomials.push_back(first[r]);
  }
  // Five monomials the invariant form misses: odd bidegrees and a (6,2)
  // split whose blocks overlap in exactly one index.
  monomials.push_back(0x7Fu | (Mask(1) << 8));            // (7,1)
  monomials.push_back(0x1Fu | (Mask(0x07) << 8));         // (5,3)
  monomials.push_back(0x07u | (Mask(0x1F) << 8));         // (3,5)
  monomials.push_back(0x01u | (Mask(0x7F) << 8));         // (1,7)
  monomials.push_back(0x3Fu | (Mask(0x60) << 8));         // (6,2), one shared index
  return monomials;
}

BergerComparison compare_berger(const MonteCarloStats& stats, const ExtForm& scaled) {
  BergerComparison cmp;
  cmp.stats = stats;
  cmp.reference.reserve(stats.monomials.size());
  for (Mask m : stats.monomials) cmp.reference.push_back(scaled.coeff(m));

  int anchor = -1;
  for (std::size_t t = 0; t < stats.monomials.size(); ++t)
    if (stats.monomials[t] == 0xFFu) anchor = static_cast<int>(t);
  if (anchor < 0) {
    Rational best(0);
    for (std::size_t t = 0; t < cmp.reference.size(); ++t)
      if (abs(cmp.reference[t]) > best) {
        best = abs(cmp.reference[t]);
        anchor = static_cast<int>(t);
      }
  }
  if (anchor >= 0) {
    const double mc = stats.mean[anchor];
    const double ref = cmp.reference[anchor].to_double();
    cmp.sign = (mc < 0) == (ref < 0) ? 1 : -1;
  }

  double dot = 0.0, mc_sq = 0.0, ref_sq = 0.0;
  for (std::size_t t = 0; t < cmp.reference.size(); ++t) {
    const double mc = cmp.sign * stats.mean[t];
    const double ref = cmp.reference[t].to_double();
    dot += mc * ref;
    mc_sq += mc * mc;
    ref_sq += ref * ref;
  }
  cmp.cosine = (mc_sq > 0 && ref_sq > 0) ? dot / std::sqrt(mc_sq * ref_sq) : 0.0;
  return cmp;
}

std::string berger_report(const BergerComparison& cmp) {
  std::ostringstream out;
  out << "berger monte carlo: samples=" << cmp.stats.samples
      << " seed=" << cmp.stats.seed << "\n";
  out << "monomial,mean,std_error,exact\n";
  char buffer[64];
  for (std::size_t t = 0; t < cmp.stats.monomials.size(); ++t) {
    out << monomial_to_string(cmp.stats.monomials[t]);
    std::snprintf(buffer, sizeof(buffer), ",%.12e,%.6e,", cmp.stats.mean[t],
                  cmp.stats.std_error[t]);
    out << buffer << cmp.reference[t].str() << "\n";
  }
  std::snprintf(buffer, sizeof(buffer), "%.9f", cmp.cosine);
  out << "cosine similarity (sign " << (cmp.sign > 0 ? "+" : "-") << "): "
      << buffer << "\n";
  return out.str();
}

}  // namespace ovf
