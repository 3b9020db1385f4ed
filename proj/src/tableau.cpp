#include "brauer/tableau.hpp"

#include "brauer/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace brauer {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw InvalidTableau("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidTableau("partition parts must not increase");
  }
}

Partition Partition::parse(std::string_view text) {
  if (text.empty() || text == "0") return {};
  std::vector<int> parts;
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto next = text.find(',', pos);
      auto piece = text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
      if (piece.empty() || !std::all_of(piece.begin(), piece.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw ParseError("bad partition '" + std::string(text) + "'");
      parts.push_back(std::atoi(std::string(piece).c_str()));
      if (next == std::string_view::npos) break;
      pos = next + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw ParseError("bad partition '" + std::string(text) + "'");
      parts.push_back(c - '0');
    }
  }
  try {
    return Partition(std::move(parts));
  } catch (const InvalidTableau& e) {
    throw ParseError(std::string(e.what()) + " in '" + std::string(text) + "'");
  }
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

bool Partition::contains(const Box& b) const {
  return b.row >= 1 && b.col >= 1 && b.row <= length() &&
         b.col <= parts_[static_cast<std::size_t>(b.row - 1)];
}

std::vector<Box> Partition::addable_boxes() const {
  std::vector<Box> out;
  for (int i = 1; i <= length() + 1; ++i) {
    int here = i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    if (i == 1 || parts_[static_cast<std::size_t>(i - 2)] > here) out.push_back({i, here + 1});
  }
  std::sort(out.begin(), out.end(), [](const Box& a, const Box& b) { return a.diagonal() < b.diagonal(); });
  return out;
}

std::vector<Box> Partition::removable_boxes() const {
  std::vector<Box> out;
  for (int i = 1; i <= length(); ++i) {
    int here = parts_[static_cast<std::size_t>(i - 1)];
    int below = i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
    if (here > below) out.push_back({i, here});
  }
  std::sort(out.begin(), out.end(), [](const Box& a, const Box& b) { return a.diagonal() < b.diagonal(); });
  return out;
}

Partition Partition::with_box(const Box& b) const {
  auto adds = addable_boxes();
  if (std::find(adds.begin(), adds.end(), b) == adds.end()) throw InvalidTableau("box is not addable");
  auto parts = parts_;
  if (b.row > length()) parts.push_back(1);
  else ++parts[static_cast<std::size_t>(b.row - 1)];
  return Partition(std::move(parts));
}

Partition Partition::without_box(const Box& b) const {
  auto rems = removable_boxes();
  if (std::find(rems.begin(), rems.end(), b) == rems.end()) throw InvalidTableau("box is not removable");
  auto parts = parts_;
  if (--parts[static_cast<std::size_t>(b.row - 1)] == 0) parts.pop_back();
  return Partition(std::move(parts));
}

std::vector<Box> Partition::boxes() const {
  std::vector<Box> out;
  for (int i = 1; i <= length(); ++i)
    for (int j = 1; j <= parts_[static_cast<std::size_t>(i - 1)]; ++j) out.push_back({i, j});
  return out;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  bool wide = std::any_of(parts_.begin(), parts_.end(), [](int p) { return p > 9; });
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (wide && i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::string ContentSymbol::to_string() const {
  std::string k = std::to_string(diagonal);
  return std::string(sign > 0 ? "+" : "-") + (diagonal < 0 ? "(" + k + ")" : k);
}

BoxesWithContents boxes_with_contents(const Partition& mu) {
  BoxesWithContents out;
  for (const Box& b : mu.addable_boxes()) out.addable.push_back({b, {1, b.diagonal()}});
  for (const Box& b : mu.removable_boxes()) out.removable.push_back({b, {-1, b.diagonal()}});
  return out;
}

UpdownTableau::UpdownTableau(std::vector<Partition> shapes) : shapes_(std::move(shapes)) {
  for (int r = 1; r <= length(); ++r) (void)step(r);
}

UpdownTableau UpdownTableau::parse(std::string_view text) {
  std::vector<Partition> shapes;
  std::size_t pos = 0;
  if (text.empty()) throw ParseError("empty tableau");
  for (;;) {
    auto next = text.find('|', pos);
    shapes.push_back(Partition::parse(text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  try {
    return UpdownTableau(std::move(shapes));
  } catch (const InvalidTableau& e) {
    throw ParseError(std::string(e.what()) + " in '" + std::string(text) + "'");
  }
}

const Partition& UpdownTableau::shape(int r) const {
  static const Partition kEmpty;
  if (r < 0 || r > length()) throw IndexOutOfRange("tableau index out of range");
  return r == 0 ? kEmpty : shapes_[static_cast<std::size_t>(r - 1)];
}

TableauStep UpdownTableau::step(int r) const {
  const Partition& before = shape(r - 1);
  const Partition& after = shape(r);
  if (after.size() == before.size() + 1) {
    for (const Box& b : before.addable_boxes())
      if (before.with_box(b) == after) return {b, true};
  } else if (after.size() + 1 == before.size()) {
    for (const Box& b : before.removable_boxes())
      if (before.without_box(b) == after) return {b, false};
  }
  throw InvalidTableau("shapes " + std::to_string(r - 1) + " and " + std::to_string(r) +
                       " do not differ by one box");
}

UpdownTableau UpdownTableau::prefix(int r) const {
  if (r < 0 || r > length()) throw IndexOutOfRange("prefix length out of range");
  UpdownTableau t;
  t.shapes_.assign(shapes_.begin(), shapes_.begin() + r);
  return t;
}

UpdownTableau UpdownTableau::extended(const Partition& next) const {
  auto shapes = shapes_;
  shapes.push_back(next);
  return UpdownTableau(std::move(shapes));
}

bool UpdownTableau::all_additions() const {
  for (int r = 1; r <= length(); ++r)
    if (!step(r).added) return false;
  return true;
}

std::string UpdownTableau::to_string() const {
  std::string s;
  for (int r = 1; r <= length(); ++r) {
    if (r > 1) s += '|';
    s += shape(r).to_string();
  }
  return s;
}

namespace {

// Boxes in exactly one of the two diagrams.
int symmetric_difference(const Partition& a, const Partition& b) {
  int count = 0;
  int rows = std::max(a.length(), b.length());
  for (int i = 0; i < rows; ++i) {
    int x = i < a.length() ? a.parts()[static_cast<std::size_t>(i)] : 0;
    int y = i < b.length() ? b.parts()[static_cast<std::size_t>(i)] : 0;
    count += std::abs(x - y);
  }
  return count;
}

}  // namespace

std::vector<UpdownTableau> enumerate_updown(int n, const std::optional<Partition>& lambda, int bound) {
  if (n > bound) throw BoundExceeded("enumeration bound " + std::to_string(bound) + " exceeded");
  if (n < 0) throw IndexOutOfRange("negative tableau length");
  if (lambda && (lambda->size() > n || (n - lambda->size()) % 2 != 0))
    throw ShapeParityMismatch("|lambda| must be one of n, n-2, ...");
  std::vector<UpdownTableau> out;
  std::vector<Partition> path;
  auto rec = [&](auto&& self, const Partition& mu) -> void {
    int remaining = n - static_cast<int>(path.size());
    if (remaining == 0) {
      if (!lambda || mu == *lambda) out.emplace_back(path);
      return;
    }
    auto visit = [&](const Partition& next) {
      if (lambda && symmetric_difference(next, *lambda) > remaining - 1) return;
      path.push_back(next);
      self(self, next);
      path.pop_back();
    };
    for (const Box& b : mu.addable_boxes()) visit(mu.with_box(b));
    for (const Box& b : mu.removable_boxes()) visit(mu.without_box(b));
  };
  rec(rec, Partition{});
  return out;
}

std::vector<Partition> updown_shapes(int n) {
  std::vector<Partition> out;
  for (const auto& t : enumerate_updown(n, std::nullopt, n)) out.push_back(t.final_shape());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ContentSymbol> contents(const UpdownTableau& t) {
  std::vector<ContentSymbol> out;
  for (int r = 1; r <= t.length(); ++r) out.push_back(t.step(r).content());
  return out;
}

TableauStatistics tableau_statistics(const UpdownTableau& u) {
  TableauStatistics s;
  for (int r = 1; r <= u.length(); ++r) {
    auto st = u.step(r);
    ++(st.added ? s.m : s.m_prime)[st.box];
  }
  for (const auto& [b, c] : s.m) s.d[b.diagonal()] += c;
  for (const auto& [b, c] : s.m_prime) s.d_prime[b.diagonal()] += c;

  auto second_difference = [](const std::map<int, int>& d, int delta_at_zero) {
    std::map<int, int> g;
    std::vector<int> keys{0};
    for (const auto& [k, v] : d) keys.insert(keys.end(), {k - 1, k, k + 1});
    for (int k : keys) {
      if (g.count(k)) continue;
      int v = (k == 0 ? delta_at_zero : 0) + TableauStatistics::at(d, k - 1) +
              TableauStatistics::at(d, k + 1) - 2 * TableauStatistics::at(d, k);
      g[k] = v;
    }
    std::erase_if(g, [](const auto& kv) { return kv.second == 0; });
    return g;
  };
  s.g = second_difference(s.d, 1);
  s.g_prime = second_difference(s.d_prime, 0);
  return s;
}

std::vector<int> exponents(const UpdownTableau& t) {
  std::vector<int> p;
  for (int r = 1; r <= t.length(); ++r) {
    auto stats = tableau_statistics(t.prefix(r - 1));
    auto st = t.step(r);
    p.push_back(1 - TableauStatistics::at(st.added ? stats.g : stats.g_prime, st.diagonal()));
  }
  return p;
}

namespace {

QOmega power(const QOmega& base, int exponent) {
  if (exponent == 0) return QOmega(1);
  if (base.is_zero()) throw ZeroFactor("zero base in the f(T) product");
  QOmega b = exponent > 0 ? base : base.inverse();
  QOmega acc(1);
  for (int i = 0; i < std::abs(exponent); ++i) acc *= b;
  return acc;
}

}  // namespace

QOmega f_step_factor(const UpdownTableau& u, const TableauStep& step) {
  auto stats = tableau_statistics(u);
  const int kn = step.diagonal();
  const QOmega w = omega_symbol();
  QOmega phi(1);
  if (step.added) {
    for (const auto& [k, g] : stats.g)
      if (k != kn) phi *= power(QOmega(kn - k), g);
    for (const auto& [k, g] : stats.g_prime) phi *= power(QOmega(kn + k - 1) + w, g);
  } else {
    for (const auto& [k, g] : stats.g_prime)
      if (k != kn) phi *= power(QOmega(k - kn), g);
    for (const auto& [k, g] : stats.g) phi *= power(QOmega(1 - kn - k) - w, g);
  }
  if (phi.is_zero()) throw ZeroFactor("f(T) step factor vanished");
  return phi;
}

FConstant f_constant(const UpdownTableau& t) {
  FConstant f{QOmega(1), {}};
  for (int r = 1; r <= t.length(); ++r) {
    f.factors.push_back(f_step_factor(t.prefix(r - 1), t.step(r)));
    f.value *= f.factors.back();
  }
  return f;
}

std::uint64_t hooks(const Partition& lambda) {
  std::uint64_t h = 1;
  const auto& parts = lambda.parts();
  for (const Box& b : lambda.boxes()) {
    int arm = parts[static_cast<std::size_t>(b.row - 1)] - b.col;
    int leg = 0;
    for (int i = b.row + 1; i <= lambda.length() && parts[static_cast<std::size_t>(i - 1)] >= b.col; ++i) ++leg;
    h *= static_cast<std::uint64_t>(arm + leg + 1);
  }
  return h;
}

}  // namespace brauer
