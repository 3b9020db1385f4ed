#pragma once

#include "brauer/errors.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace brauer {

/// Largest n for which diagrams can be represented.
inline constexpr int kMaxDegree = 8;
/// Default bound for exhaustive enumeration.
inline constexpr int kDefaultEnumerationBound = 6;

/// A Brauer n-diagram: a fixed-point-free involution on 2n dots.
///
/// Dots 0..n-1 are the top row left to right, n..2n-1 the bottom row.
/// The partner array is itself the canonical form.
class BrauerDiagram {
 public:
  /// Validates `partner` (0-based) as a perfect matching.
  BrauerDiagram(int n, const std::vector<int>& partner);

  static BrauerDiagram identity(int n);
  /// s_i = (i, i+1), 1-based.
  static BrauerDiagram s(int n, int i);
  /// e_i: top i--top i+1 and bottom i--bottom i+1.
  static BrauerDiagram e(int n, int i);
  /// Transposition s_ij.
  static BrauerDiagram s(int n, int i, int j);
  /// e_ij: dots i and j joined in both rows.
  static BrauerDiagram e(int n, int i, int j);

  int n() const { return n_; }
  int partner(int dot) const { return partner_[static_cast<std::size_t>(dot)]; }
  /// 1-based partner list, as used by the JSON form.
  std::vector<int> partners_one_based() const;

  /// True if every edge joins the two rows.
  bool is_permutation() const;

  friend auto operator<=>(const BrauerDiagram&, const BrauerDiagram&) = default;
  friend bool operator==(const BrauerDiagram&, const BrauerDiagram&) = default;

  std::string to_string() const;

 private:
  BrauerDiagram() = default;
  friend struct DiagramAccess;

  std::uint8_t n_ = 0;
  std::array<std::uint8_t, 2 * kMaxDegree> partner_{};
};

/// Which generator to build; indices are 1-based.
struct Generator {
  enum class Kind { identity, s, e, s_pair, e_pair };
  Kind kind = Kind::identity;
  int i = 0;
  int j = 0;
};

BrauerDiagram generator(int n, const Generator& g);

struct DiagramProduct {
  BrauerDiagram diagram;
  int loops = 0;
};

/// Stack d1 over d2; the product is w^loops times the returned diagram.
DiagramProduct multiply(const BrauerDiagram& d1, const BrauerDiagram& d2);

/// All n-diagrams in lexicographic order of partner arrays.
std::vector<BrauerDiagram> enumerate_diagrams(int n, int bound = kDefaultEnumerationBound);

/// Adds vertical strands at positions n+1..m.
BrauerDiagram embed(const BrauerDiagram& d, int m);

/// (2n-1)!!
std::uint64_t brauer_dimension(int n);

}  // namespace brauer
