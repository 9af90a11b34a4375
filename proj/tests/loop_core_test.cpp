#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "aloops/construct.hpp"
#include "aloops/group_tables.hpp"
#include "aloops/io.hpp"
#include "aloops/loop.hpp"

using namespace aloops;

namespace {

// Cayley table of S_3 under composition, neutral-first labeling.
LoopTable s3_table() {
  std::vector<std::vector<int>> perms;
  std::vector<int> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int n = 6;
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> c(3);
      for (int k = 0; k < 3; ++k) c[k] = perms[i][perms[j][k]];
      rows[i][j] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return LoopTable::from_rows(n, rows);
}

// First commutative order-n loop (neutral 0) that is not power-associative,
// by exhaustive search over symmetric Latin squares. Also counts the loops
// visited before a witness appears (all of them when none exists).
bool search_non_pa(int n, std::vector<std::vector<int>>& rows, int i, int j, LoopTable* out, int* visited) {
  if (i == n) {
    LoopTable L = LoopTable::from_rows(n, rows);
    ++*visited;
    if (!is_power_associative(L)) {
      *out = L;
      return true;
    }
    return false;
  }
  const int ni = j == n - 1 ? i + 1 : i;
  const int nj = j == n - 1 ? ni : j + 1;
  for (int v = 0; v < n; ++v) {
    bool ok = true;
    for (int k = 0; k < n && ok; ++k) ok = rows[i][k] != v;
    for (int k = 0; k < n && ok; ++k) ok = rows[k][j] != v;
    if (!ok) continue;
    rows[i][j] = v;
    rows[j][i] = v;
    if (search_non_pa(n, rows, ni, nj, out, visited)) return true;
    rows[i][j] = -1;
    rows[j][i] = -1;
  }
  return false;
}

LoopTable identity_bordered(int n, std::vector<std::vector<int>>& rows) {
  rows.assign(n, std::vector<int>(n, -1));
  for (int k = 0; k < n; ++k) rows[0][k] = rows[k][0] = k;
  return LoopTable();
}

}  // namespace

TEST(FromRows, AcceptsZ2AndRejectsNonLatin) {
  const LoopTable z2 = LoopTable::from_rows(2, {{0, 1}, {1, 0}});
  EXPECT_EQ(z2.mul(1, 1), 0);
  try {
    LoopTable::from_rows(2, {{0, 1}, {0, 1}});
    FAIL() << "expected NotLatin";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotLatin);
  }
}

TEST(FromRows, RelabelsNeutralToZero) {
  // neutral element sits at index 1; relabeling gives the Z_2 table
  const LoopTable L = LoopTable::from_rows(2, {{1, 0}, {0, 1}});
  EXPECT_EQ(L.mul(0, 1), 1);
  EXPECT_EQ(L.mul(1, 1), 0);
  const LoopTable z2 = LoopTable::from_rows(2, {{0, 1}, {1, 0}});
  EXPECT_EQ(L, z2);
}

TEST(FromRows, NoNeutral) {
  try {
    LoopTable::from_rows(3, {{1, 0, 2}, {0, 2, 1}, {2, 1, 0}});
    FAIL() << "expected NoNeutral";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NoNeutral);
  }
}

TEST(Multiply, NeutralAndRangeChecks) {
  const LoopTable g = cyclic_group(6);
  for (Elem y = 0; y < 6; ++y) EXPECT_EQ(multiply(g, 0, y), y);
  EXPECT_THROW(multiply(g, 6, 0), Error);
}

TEST(Multiply, TergDirectFormulaOracle) {
  // direct evaluation of the defining formula, independent of the table
  const LoopTable L = build_terg({2, 0, 0});
  const Elem x = terg_index(2, {1, 1, 1});
  const Elem y = terg_index(2, {0, 1, 1});
  EXPECT_EQ(L.mul(x, y), terg_index(2, {1, 0, 0}));
}

TEST(Multiply, GfBarProductIsF) {
  const LoopTable G = cyclic_group(4);
  Permutation f;
  f.img = {0, 3, 2, 1};  // inversion
  const LoopTable L = build_gf({G, f, std::nullopt});
  const int m = 4;
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y) EXPECT_EQ(L.mul(m + x, m + y), f.img[G.mul(x, y)]);
}

TEST(Divide, BasicsAndTergClosedForm) {
  const LoopTable g = cyclic_group(5);
  for (Elem x = 0; x < 5; ++x) EXPECT_EQ(divide(g, Side::left, x, x), 0);

  const int n = 3, a = 1, b = 2;
  const LoopTable L = build_terg({n, a, b});
  for (Elem xi = 0; xi < L.order(); ++xi) {
    const Triple x = terg_triple(n, xi);
    for (Elem yi = 0; yi < L.order(); ++yi) {
      const Triple y = terg_triple(n, yi);
      // closed form from the left-division identity
      const int d2 = ((y.x2 - x.x2) % n + n) % n;
      const int d3 = ((y.x3 - x.x3) % n + n) % n;
      const int first =
          ((y.x1 - x.x1 - d3 * x.x3 % n * y.x2 - a * overflow_indicator(x.x2, d2, n) - b * overflow_indicator(x.x3, d3, n)) % n +
           n * n) %
          n;
      const Elem expect = terg_index(n, Triple{first, d2, d3});
      EXPECT_EQ(divide(L, Side::left, xi, yi), expect);
      // brute-force scan of row x as an independent oracle
      Elem scan = 0;
      while (L.mul(xi, scan) != yi) ++scan;
      EXPECT_EQ(expect, scan);
    }
  }
}

TEST(Divide, RightDivision) {
  const LoopTable L = build_terg({2, 1, 0});
  for (Elem x = 0; x < L.order(); ++x)
    for (Elem y = 0; y < L.order(); ++y) {
      EXPECT_EQ(L.mul(divide(L, Side::right, x, y), x), y);  // (y/x) x = y
      EXPECT_EQ(L.mul(x, divide(L, Side::left, x, y)), y);   // x (x\y) = y
    }
}

TEST(GfDivisionFormula, LeftDivisionInBar) {
  // x-bar \ y-bar = x^{-1} y
  const LoopTable G = abelian_group({2, 2});
  Permutation f;
  f.img = {0, 2, 1, 3};
  const LoopTable L = build_gf({G, f, std::nullopt});
  for (Elem x = 0; x < 4; ++x)
    for (Elem y = 0; y < 4; ++y) EXPECT_EQ(L.ldiv(4 + x, 4 + y), G.mul(G.ldiv(x, 0), y));
}

TEST(IsCommutative, PositiveAndNegative) {
  EXPECT_TRUE(is_commutative(build_terg({2, 1, 1})));
  const LoopTable G = abelian_group({2, 2});
  Permutation f;
  f.img = {1, 2, 3, 0};
  EXPECT_TRUE(is_commutative(build_gf({G, f, std::nullopt})));
  EXPECT_FALSE(is_commutative(s3_table()));
}

TEST(PowerAssociativity, GroupsAndWitness) {
  EXPECT_TRUE(is_power_associative(abelian_group({4, 2})));
  EXPECT_TRUE(is_power_associative(build_terg({2, 0, 0})));

  std::vector<std::vector<int>> rows(5, std::vector<int>(5, -1));
  for (int k = 0; k < 5; ++k) rows[0][k] = rows[k][0] = k;
  LoopTable witness;
  ASSERT_TRUE(search_non_pa(rows, 1, 1, &witness));
  EXPECT_TRUE(is_commutative(witness));
  EXPECT_FALSE(is_power_associative(witness));
  EXPECT_THROW(element_order(witness, 1), Error);
}

TEST(ElementOrder, TergOrderNineCounts) {
  EXPECT_EQ(element_order(build_terg({2, 0, 0}), 0), 1);
  const LoopTable L = build_terg({3, 1, 0});
  int order9 = 0;
  for (int o : element_orders(L))
    if (o == 9) ++order9;
  EXPECT_EQ(order9, 6);
}

TEST(ElementOrder, SecondCoordinateGeneratorHasOrderPSquared) {
  for (int p : {3, 5}) {
    const LoopTable L = build_terg({p, 2 % p, 1});
    EXPECT_EQ(element_order(L, terg_index(p, {0, 1, 0})), p * p);
  }
}

TEST(Exponent, TergAndElementaryAbelian) {
  EXPECT_EQ(exponent(build_terg({5, 0, 0})), 5);
  EXPECT_EQ(exponent(build_terg({3, 0, 0})), 9);
  EXPECT_EQ(exponent(elementary_abelian(2, 3)), 2);
}

TEST(DirectProduct, TrivialFactorAndExponentLcm) {
  const LoopTable L = build_terg({2, 1, 0});
  const LoopTable triv = cyclic_group(1);
  EXPECT_EQ(direct_product(L, triv), L);
  const LoopTable prod = direct_product(cyclic_group(3), L);
  EXPECT_EQ(exponent(prod), std::lcm(3ll, exponent(L)));
  // componentwise multiplication
  EXPECT_EQ(prod.mul(1 * L.order() + 3, 2 * L.order() + 5), ((1 + 2) % 3) * L.order() + L.mul(3, 5));
}

TEST(DivideInverseProperty, ExhaustiveUpTo32) {
  for (const LoopTable& L : {build_qn(2), build_terg({3, 1, 2}), abelian_group({8, 2}), build_qn(4)}) {
    ASSERT_LE(L.order(), 32);
    for (Elem x = 0; x < L.order(); ++x)
      for (Elem y = 0; y < L.order(); ++y) ASSERT_EQ(L.mul(x, divide(L, Side::left, x, y)), y);
  }
}

TEST(AloopFormat, RoundTripAndComments) {
  const LoopTable L = build_qn(2);
  const std::string text = write_aloop(L);
  EXPECT_EQ(text.substr(0, 9), "ALOOP v1\n");
  const LoopTable back = read_aloop_string(text);
  EXPECT_EQ(back, L);
  EXPECT_EQ(write_aloop(back), text);  // bit-exact round trip

  const LoopTable commented = read_aloop_string("# header comment\nALOOP v1\nn=2\n# body\n0 1\n1 0\n");
  EXPECT_EQ(commented.order(), 2);
}

TEST(AloopFormat, ParseErrors) {
  try {
    read_aloop_string("ALOOP v1\nn=2\n0 1\n0 1\n");
    FAIL() << "expected ParseError";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ParseError);
    EXPECT_NE(std::string(e.what()).find("column"), std::string::npos);
  }
  EXPECT_THROW(read_aloop_string("ALOOP v2\nn=1\n0\n"), Error);
  EXPECT_THROW(read_aloop_string("ALOOP v1\nn=2\n0 1\n"), Error);
}

TEST(AbelianGroups, EnumerationMatchesPartitionCounts) {
  EXPECT_EQ(abelian_group_count(8), 3u);
  EXPECT_EQ(abelian_group_count(16), 5u);
  EXPECT_EQ(abelian_group_count(24), 3u);
  EXPECT_EQ(abelian_group_count(27), 3u);
  EXPECT_EQ(abelian_group_count(32), 7u);
  for (int n : {8, 16, 24, 27, 32}) {
    const auto groups = abelian_groups_of_order(n);
    EXPECT_EQ(groups.size(), abelian_group_count(n));
    for (const auto& g : groups) {
      EXPECT_EQ(g.table.order(), n);
      EXPECT_TRUE(is_abelian_group(g.table));
    }
  }
}
