#pragma once

#include "brauer/field_mode.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace brauer {

/// Box in row `row`, column `col` (both 1-based).
struct Box {
  int row = 1;
  int col = 1;

  int diagonal() const { return col - row; }
  friend auto operator<=>(const Box&, const Box&) = default;
};

/// Weakly decreasing list of positive parts, identified with its diagram.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidTableau unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  /// "21" -> (2,1); "" or "0" -> empty; "10,2" -> (10,2).
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  bool empty() const { return parts_.empty(); }
  int length() const { return static_cast<int>(parts_.size()); }
  bool contains(const Box& b) const;

  std::vector<Box> addable_boxes() const;
  std::vector<Box> removable_boxes() const;
  Partition with_box(const Box& b) const;
  Partition without_box(const Box& b) const;
  std::vector<Box> boxes() const;

  /// Inverse of parse: digits, commas when a part exceeds 9, "0" for empty.
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// +/- ((w-1)/2 + diagonal)
struct ContentSymbol {
  int sign = 1;
  int diagonal = 0;

  template <class K>
  K value(const K& omega) const {
    K v = (omega - K(1)) / K(2) + K(diagonal);
    return sign > 0 ? v : -v;
  }
  QOmega exact() const { return value(omega_symbol()); }
  std::string to_string() const;

  friend auto operator<=>(const ContentSymbol&, const ContentSymbol&) = default;
};

struct BoxContent {
  Box box;
  ContentSymbol content;
};

struct BoxesWithContents {
  std::vector<BoxContent> addable;
  std::vector<BoxContent> removable;
};

/// Addable (+) and removable (-) boxes of mu, each list sorted by diagonal.
BoxesWithContents boxes_with_contents(const Partition& mu);

/// One step of an updown tableau.
struct TableauStep {
  Box box;
  bool added = true;
  int diagonal() const { return box.diagonal(); }
  ContentSymbol content() const { return {added ? 1 : -1, box.diagonal()}; }
};

/// (Lambda_1, ..., Lambda_n) with Lambda_0 = empty, consecutive shapes
/// differing by exactly one box.
class UpdownTableau {
 public:
  UpdownTableau() = default;
  /// Throws InvalidTableau if two consecutive shapes do not differ by one box.
  explicit UpdownTableau(std::vector<Partition> shapes);

  /// "1|2|21|11|1|11"
  static UpdownTableau parse(std::string_view text);

  int length() const { return static_cast<int>(shapes_.size()); }
  const std::vector<Partition>& shapes() const { return shapes_; }
  /// Lambda_r for r in [0, n].
  const Partition& shape(int r) const;
  const Partition& final_shape() const { return shape(length()); }
  /// The step producing Lambda_r from Lambda_{r-1}, r in [1, n].
  TableauStep step(int r) const;
  /// (Lambda_1, ..., Lambda_r)
  UpdownTableau prefix(int r) const;
  UpdownTableau extended(const Partition& next) const;

  /// True if every step adds a box.
  bool all_additions() const;

  std::string to_string() const;

  friend auto operator<=>(const UpdownTableau&, const UpdownTableau&) = default;

 private:
  std::vector<Partition> shapes_;
};

/// Every updown tableau of length n ending at `lambda` (or at any shape),
/// depth first over addable then removable boxes sorted by diagonal.
std::vector<UpdownTableau> enumerate_updown(int n, const std::optional<Partition>& lambda,
                                            int bound = 6);

/// Shapes that occur as Lambda_n: partitions of n, n-2, ...
std::vector<Partition> updown_shapes(int n);

std::vector<ContentSymbol> contents(const UpdownTableau& t);

/// Add/remove counts per box and the derived diagonal parameters.
struct TableauStatistics {
  std::map<Box, int> m;
  std::map<Box, int> m_prime;
  std::map<int, int> d;
  std::map<int, int> d_prime;
  std::map<int, int> g;
  std::map<int, int> g_prime;

  static int at(const std::map<int, int>& f, int k) {
    auto it = f.find(k);
    return it == f.end() ? 0 : it->second;
  }
};

TableauStatistics tableau_statistics(const UpdownTableau& u);

/// p_1, ..., p_n
std::vector<int> exponents(const UpdownTableau& t);

struct FConstant {
  QOmega value;
  /// Per-step factors; value is their product.
  std::vector<QOmega> factors;
};

/// Step factor for extending u by `step`, in Q(w).
QOmega f_step_factor(const UpdownTableau& u, const TableauStep& step);

FConstant f_constant(const UpdownTableau& t);

/// Product of hook lengths.
std::uint64_t hooks(const Partition& lambda);

}  // namespace brauer
