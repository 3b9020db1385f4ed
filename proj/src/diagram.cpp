#include "brauer/diagram.hpp"

#include <algorithm>

namespace brauer {

struct DiagramAccess {
  static BrauerDiagram blank(int n) {
    BrauerDiagram d;
    d.n_ = static_cast<std::uint8_t>(n);
    return d;
  }
  static void join(BrauerDiagram& d, int a, int b) {
    d.partner_[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b);
    d.partner_[static_cast<std::size_t>(b)] = static_cast<std::uint8_t>(a);
  }
};

namespace {

void check_degree(int n) {
  if (n < 1 || n > kMaxDegree)
    throw IndexOutOfRange("diagram degree " + std::to_string(n) + " outside [1, " +
                          std::to_string(kMaxDegree) + "]");
}

void check_pair(int n, int i, int j) {
  check_degree(n);
  if (i < 1 || j > n || i >= j)
    throw IndexOutOfRange("pair (" + std::to_string(i) + "," + std::to_string(j) +
                          ") invalid for n = " + std::to_string(n));
}

}  // namespace

BrauerDiagram::BrauerDiagram(int n, const std::vector<int>& partner) {
  check_degree(n);
  if (partner.size() != static_cast<std::size_t>(2 * n))
    throw SizeMismatch("partner array must have length 2n");
  n_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < 2 * n; ++i) {
    int p = partner[static_cast<std::size_t>(i)];
    if (p < 0 || p >= 2 * n || p == i || partner[static_cast<std::size_t>(p)] != i)
      throw IndexOutOfRange("partner array is not a fixed-point-free involution");
    partner_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(p);
  }
}

BrauerDiagram BrauerDiagram::identity(int n) {
  check_degree(n);
  auto d = DiagramAccess::blank(n);
  for (int i = 0; i < n; ++i) DiagramAccess::join(d, i, i + n);
  return d;
}

BrauerDiagram BrauerDiagram::s(int n, int i) { return s(n, i, i + 1); }
BrauerDiagram BrauerDiagram::e(int n, int i) { return e(n, i, i + 1); }

BrauerDiagram BrauerDiagram::s(int n, int i, int j) {
  check_pair(n, i, j);
  auto d = identity(n);
  DiagramAccess::join(d, i - 1, j - 1 + n);
  DiagramAccess::join(d, j - 1, i - 1 + n);
  return d;
}

BrauerDiagram BrauerDiagram::e(int n, int i, int j) {
  check_pair(n, i, j);
  auto d = identity(n);
  DiagramAccess::join(d, i - 1, j - 1);
  DiagramAccess::join(d, i - 1 + n, j - 1 + n);
  return d;
}

std::vector<int> BrauerDiagram::partners_one_based() const {
  std::vector<int> out;
  for (int i = 0; i < 2 * n_; ++i) out.push_back(partner(i) + 1);
  return out;
}

bool BrauerDiagram::is_permutation() const {
  for (int i = 0; i < n_; ++i)
    if (partner(i) < n_) return false;
  return true;
}

std::string BrauerDiagram::to_string() const {
  std::string s = "[";
  for (int i = 0; i < 2 * n_; ++i) {
    if (i) s += ',';
    s += std::to_string(partner(i) + 1);
  }
  return s + "]";
}

BrauerDiagram generator(int n, const Generator& g) {
  switch (g.kind) {
    case Generator::Kind::identity:
      return BrauerDiagram::identity(n);
    case Generator::Kind::s:
      check_pair(n, g.i, g.i + 1);
      return BrauerDiagram::s(n, g.i);
    case Generator::Kind::e:
      check_pair(n, g.i, g.i + 1);
      return BrauerDiagram::e(n, g.i);
    case Generator::Kind::s_pair:
      return BrauerDiagram::s(n, g.i, g.j);
    case Generator::Kind::e_pair:
      return BrauerDiagram::e(n, g.i, g.j);
  }
  throw IndexOutOfRange("unknown generator kind");
}

DiagramProduct multiply(const BrauerDiagram& d1, const BrauerDiagram& d2) {
  if (d1.n() != d2.n()) throw SizeMismatch("multiplying diagrams of different degree");
  const int n = d1.n();
  // Outer dots: 0..n-1 are the top of d1, n..2n-1 the bottom of d2.
  // Middle dot m is the bottom of d1 (index n+m) glued to the top of d2 (index m).
  auto result = DiagramAccess::blank(n);
  std::array<bool, kMaxDegree> middle_seen{};

  // Follows a strand entering the middle row at m, coming from d1 (from_top) or d2.
  auto walk = [&](int m, bool from_top) {
    for (;;) {
      middle_seen[static_cast<std::size_t>(m)] = true;
      if (from_top) {
        int q = d2.partner(m);
        if (q >= n) return q;  // bottom of d2
        m = q;
        from_top = false;
      } else {
        int q = d1.partner(n + m);
        if (q < n) return q;  // top of d1
        m = q - n;
        from_top = true;
      }
    }
  };

  for (int i = 0; i < n; ++i) {
    int p = d1.partner(i);
    int end = p < n ? p : walk(p - n, true);
    DiagramAccess::join(result, i, end);
  }
  for (int i = n; i < 2 * n; ++i) {
    int p = d2.partner(i);
    if (p >= n) {
      DiagramAccess::join(result, i, p);
      continue;
    }
    int end = walk(p, false);
    if (end >= n) DiagramAccess::join(result, i, end);
  }

  int loops = 0;
  for (int m = 0; m < n; ++m) {
    if (middle_seen[static_cast<std::size_t>(m)]) continue;
    ++loops;
    int cur = m;
    do {
      middle_seen[static_cast<std::size_t>(cur)] = true;
      int down = d2.partner(cur);        // top-of-d2 edge, stays in the middle row
      middle_seen[static_cast<std::size_t>(down)] = true;
      cur = d1.partner(n + down) - n;    // bottom-of-d1 edge
    } while (cur != m);
  }
  return {result, loops};
}

std::vector<BrauerDiagram> enumerate_diagrams(int n, int bound) {
  if (n > bound) throw BoundExceeded("enumeration bound " + std::to_string(bound) + " exceeded");
  check_degree(n);
  std::vector<BrauerDiagram> out;
  auto d = DiagramAccess::blank(n);
  std::array<bool, 2 * kMaxDegree> used{};
  auto rec = [&](auto&& self, int first) -> void {
    while (first < 2 * n && used[static_cast<std::size_t>(first)]) ++first;
    if (first == 2 * n) {
      out.push_back(d);
      return;
    }
    used[static_cast<std::size_t>(first)] = true;
    for (int j = first + 1; j < 2 * n; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      used[static_cast<std::size_t>(j)] = true;
      DiagramAccess::join(d, first, j);
      self(self, first + 1);
      used[static_cast<std::size_t>(j)] = false;
    }
    used[static_cast<std::size_t>(first)] = false;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

BrauerDiagram embed(const BrauerDiagram& d, int m) {
  if (m < d.n()) throw ShrinkNotAllowed("cannot embed B_" + std::to_string(d.n()) + " into B_" +
                                        std::to_string(m));
  check_degree(m);
  const int n = d.n();
  auto r = DiagramAccess::blank(m);
  auto lift = [&](int dot) { return dot < n ? dot : dot - n + m; };
  for (int i = 0; i < 2 * n; ++i) DiagramAccess::join(r, lift(i), lift(d.partner(i)));
  for (int k = n; k < m; ++k) DiagramAccess::join(r, k, k + m);
  return r;
}

std::uint64_t brauer_dimension(int n) {
  std::uint64_t r = 1;
  for (int k = 1; k <= 2 * n - 1; k += 2) r *= static_cast<std::uint64_t>(k);
  return r;
}

}  // namespace brauer
