#include "ovf/octonion.hpp"

#include <stdexcept>

namespace ovf {

namespace {

constexpr int kTriples[7][3] = {
    {1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {5, 6, 1}, {6, 7, 2}, {7, 1, 3},
};

MultTable build_mult_table() {
  MultTable t{};
  std::array<std::array<bool, 8>, 8> set{};

  auto put = [&](int i, int j, int s, int k) {
    if (set[i][j] && (t.sign[i][j] != s || t.index[i][j] != k))
      throw std::logic_error("octonion multiplication table is inconsistent");
    t.sign[i][j] = static_cast<std::int8_t>(s);
    t.index[i][j] = static_cast<std::uint8_t>(k);
    set[i][j] = true;
  };

  for (int j = 0; j < 8; ++j) {
    put(0, j, +1, j);
    put(j, 0, +1, j);
  }
  for (int j = 1; j < 8; ++j) put(j, j, -1, 0);

  for (const auto& tr : kTriples) {
    const int a = tr[0], b = tr[1], c = tr[2];
    put(a, b, +1, c);
    put(b, c, +1, a);
    put(c, a, +1, b);
    put(b, a, -1, c);
    put(c, b, -1, a);
    put(a, c, -1, b);
  }

  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (!set[i][j]) throw std::logic_error("octonion multiplication table has a hole");
  return t;
}

}  // namespace

const MultTable& mult_table() {
  static const MultTable table = build_mult_table();
  return table;
}

int basis_index_product(int a, int b) {
  if (a < 0 || a > 7 || b < 0 || b > 7)
    throw std::out_of_range("basis_index_product: index out of range");
  return mult_table().index[a][b];
}

}  // namespace ovf
