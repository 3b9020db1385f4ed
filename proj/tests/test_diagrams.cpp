#include "doctest.h"
#include "test_support.hpp"

#include <algorithm>
#include <numeric>
#include <set>

using namespace test;

namespace {

std::vector<int> one_based(const BrauerDiagram& d) { return d.partners_one_based(); }

// All fixed-point-free involutions of {0..2n-1}, found by filtering permutations.
std::set<std::vector<int>> involutions_by_brute_force(int n) {
  std::vector<int> perm(static_cast<std::size_t>(2 * n));
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::vector<int>> out;
  do {
    bool ok = true;
    for (int i = 0; i < 2 * n && ok; ++i) {
      int j = perm[static_cast<std::size_t>(i)];
      ok = j != i && perm[static_cast<std::size_t>(j)] == i;
    }
    if (ok) out.insert(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Stacks d1 over d2 on three rows of dots (top, middle, bottom) and follows
// strands with a union-find; components with no outer dot are loops.
std::pair<std::vector<int>, int> stack_by_union_find(const BrauerDiagram& d1, const BrauerDiagram& d2) {
  const int n = d1.n();
  // dots: top 0..n-1, middle n..2n-1, bottom 2n..3n-1
  std::vector<int> parent(static_cast<std::size_t>(3 * n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
  for (int i = 0; i < 2 * n; ++i) {
    unite(i, d1.partner(i));                     // d1 occupies rows top, middle
    int a = i + n, b = d2.partner(i) + n;        // d2 occupies rows middle, bottom
    unite(a, b);
  }
  std::vector<int> result(static_cast<std::size_t>(2 * n), -1);
  std::vector<int> outer;
  for (int i = 0; i < n; ++i) outer.push_back(i);
  for (int i = 2 * n; i < 3 * n; ++i) outer.push_back(i);
  auto to_result = [&](int dot) { return dot < n ? dot : dot - n; };
  for (int a : outer)
    for (int b : outer)
      if (a != b && find(a) == find(b)) result[static_cast<std::size_t>(to_result(a))] = to_result(b);
  std::set<int> roots, outer_roots;
  for (int i = 0; i < 3 * n; ++i) roots.insert(find(i));
  for (int a : outer) outer_roots.insert(find(a));
  return {result, static_cast<int>(roots.size() - outer_roots.size())};
}

std::uint64_t double_factorial(int n) {
  std::uint64_t r = 1;
  for (int k = 1; k <= 2 * n - 1; k += 2) r *= static_cast<std::uint64_t>(k);
  return r;
}

}  // namespace

TEST_SUITE("diagrams") {

TEST_CASE("generator matchings") {
  CHECK(one_based(BrauerDiagram::e(2, 1)) == std::vector<int>{2, 1, 4, 3});
  CHECK(one_based(BrauerDiagram::s(2, 1)) == std::vector<int>{4, 3, 2, 1});
  CHECK(one_based(BrauerDiagram::s(3, 1, 3)) == std::vector<int>{6, 5, 4, 3, 2, 1});
  CHECK(one_based(BrauerDiagram::identity(3)) == std::vector<int>{4, 5, 6, 1, 2, 3});
  CHECK(one_based(BrauerDiagram::e(4, 2, 4)) == std::vector<int>{5, 4, 7, 2, 1, 8, 3, 6});
  CHECK(generator(3, {Generator::Kind::e_pair, 1, 3}) == BrauerDiagram::e(3, 1, 3));
  CHECK_THROWS_AS(BrauerDiagram::s(3, 3), IndexOutOfRange);
  CHECK_THROWS_AS(BrauerDiagram::e(3, 2, 2), IndexOutOfRange);
  CHECK_THROWS_AS(BrauerDiagram(2, {1, 0, 2, 2}), IndexOutOfRange);
  CHECK(BrauerDiagram::s(3, 1).to_string() == "[5,4,6,2,1,3]");
}

TEST_CASE("s_ij and e_ij are the displayed words") {
  for (int n = 2; n <= 5; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        // s_ij = s_i s_{i+1} ... s_{j-1} ... s_{i+1} s_i
        BrauerDiagram word = BrauerDiagram::identity(n);
        for (int k = i; k < j; ++k) word = multiply(word, BrauerDiagram::s(n, k)).diagram;
        for (int k = j - 2; k >= i; --k) word = multiply(word, BrauerDiagram::s(n, k)).diagram;
        CHECK(word == BrauerDiagram::s(n, i, j));
        // e_ij is e_i conjugated by the transposition of i+1 and j
        BrauerDiagram conj = j == i + 1 ? BrauerDiagram::identity(n) : BrauerDiagram::s(n, i + 1, j);
        auto e = multiply(multiply(conj, BrauerDiagram::e(n, i)).diagram, conj);
        CHECK(e.loops == 0);
        CHECK(e.diagram == BrauerDiagram::e(n, i, j));
      }
    }
  }
}

TEST_CASE("presentation instances on diagrams") {
  auto ee = multiply(BrauerDiagram::e(2, 1), BrauerDiagram::e(2, 1));
  CHECK(ee.diagram == BrauerDiagram::e(2, 1));
  CHECK(ee.loops == 1);
  auto ss = multiply(BrauerDiagram::s(2, 1), BrauerDiagram::s(2, 1));
  CHECK(ss.diagram == BrauerDiagram::identity(2));
  CHECK(ss.loops == 0);
  auto e1e2 = multiply(BrauerDiagram::e(3, 1), BrauerDiagram::e(3, 2));
  auto e1e2e1 = multiply(e1e2.diagram, BrauerDiagram::e(3, 1));
  CHECK(e1e2e1.diagram == BrauerDiagram::e(3, 1));
  CHECK(e1e2.loops + e1e2e1.loops == 0);
  CHECK_THROWS_AS(multiply(BrauerDiagram::e(2, 1), BrauerDiagram::e(3, 1)), SizeMismatch);
}

TEST_CASE("enumeration matches brute force") {
  for (int n = 1; n <= 4; ++n) {
    std::set<std::vector<int>> found;
    auto all = enumerate_diagrams(n);
    for (const auto& d : all) {
      std::vector<int> v;
      for (int i = 0; i < 2 * n; ++i) v.push_back(d.partner(i));
      found.insert(v);
    }
    CHECK(found.size() == all.size());
    CHECK(found == involutions_by_brute_force(n));
    CHECK(std::is_sorted(all.begin(), all.end()));
  }
  for (int n = 1; n <= 6; ++n) {
    CHECK(enumerate_diagrams(n).size() == double_factorial(n));
    CHECK(brauer_dimension(n) == double_factorial(n));
  }
  CHECK(enumerate_diagrams(1).size() == 1);
  CHECK(enumerate_diagrams(2).size() == 3);
  CHECK(enumerate_diagrams(3).size() == 15);
  CHECK_THROWS_AS(enumerate_diagrams(7), BoundExceeded);
  CHECK(enumerate_diagrams(7, 7).size() == 135135);
}

TEST_CASE("products agree with a union-find stacking") {
  for (int n = 1; n <= 3; ++n) {
    auto all = enumerate_diagrams(n);
    for (const auto& a : all)
      for (const auto& b : all) {
        auto [partner, loops] = stack_by_union_find(a, b);
        auto prod = multiply(a, b);
        std::vector<int> got;
        for (int i = 0; i < 2 * n; ++i) got.push_back(prod.diagram.partner(i));
        CHECK(got == partner);
        CHECK(prod.loops == loops);
      }
  }
  std::mt19937_64 rng(3);
  for (int n : {5, 6}) {
    auto all = enumerate_diagrams(n);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int trial = 0; trial < 300; ++trial) {
      const auto& a = all[pick(rng)];
      const auto& b = all[pick(rng)];
      auto [partner, loops] = stack_by_union_find(a, b);
      auto prod = multiply(a, b);
      CHECK(prod.diagram == BrauerDiagram(n, partner));
      CHECK(prod.loops == loops);
    }
  }
}

TEST_CASE("diagram products are associative with additive loop counts") {
  std::mt19937_64 rng(11);
  for (int n = 2; n <= 5; ++n) {
    auto all = enumerate_diagrams(n);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      const auto &a = all[pick(rng)], &b = all[pick(rng)], &c = all[pick(rng)];
      auto ab = multiply(a, b), bc = multiply(b, c);
      auto left = multiply(ab.diagram, c), right = multiply(a, bc.diagram);
      CHECK(left.diagram == right.diagram);
      CHECK(ab.loops + left.loops == bc.loops + right.loops);
    }
  }
}

TEST_CASE("permutation diagrams form the symmetric group") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<BrauerDiagram> perms;
    for (const auto& d : enumerate_diagrams(n))
      if (d.is_permutation()) perms.push_back(d);
    std::uint64_t factorial = 1;
    for (int k = 2; k <= n; ++k) factorial *= static_cast<std::uint64_t>(k);
    CHECK(perms.size() == factorial);
    // top dot i goes to bottom dot sigma(i); stacking composes the maps
    auto sigma = [n](const BrauerDiagram& d) {
      std::vector<int> s;
      for (int i = 0; i < n; ++i) s.push_back(d.partner(i) - n);
      return s;
    };
    for (const auto& a : perms)
      for (const auto& b : perms) {
        auto p = multiply(a, b);
        CHECK(p.loops == 0);
        CHECK(p.diagram.is_permutation());
        auto sa = sigma(a), sb = sigma(b), sp = sigma(p.diagram);
        for (int i = 0; i < n; ++i) CHECK(sp[static_cast<std::size_t>(i)] == sb[static_cast<std::size_t>(sa[static_cast<std::size_t>(i)])]);
      }
  }
}

TEST_CASE("embedding adds vertical strands") {
  CHECK(embed(BrauerDiagram::identity(2), 3) == BrauerDiagram::identity(3));
  CHECK(embed(BrauerDiagram::e(2, 1), 3) == BrauerDiagram::e(3, 1));
  CHECK(embed(BrauerDiagram::s(3, 1, 3), 5) == BrauerDiagram::s(5, 1, 3));
  auto d = BrauerDiagram::e(3, 2);
  CHECK(embed(d, 3) == d);
  CHECK_THROWS_AS(embed(d, 2), ShrinkNotAllowed);
  // embedding is a homomorphism
  for (const auto& a : enumerate_diagrams(3))
    for (const auto& b : enumerate_diagrams(3)) {
      auto p = multiply(a, b);
      auto q = multiply(embed(a, 4), embed(b, 4));
      CHECK(q.diagram == embed(p.diagram, 4));
      CHECK(q.loops == p.loops);
    }
}

}  // TEST_SUITE
