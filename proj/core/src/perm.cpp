#include "stablerep/perm.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace stablerep {

namespace {

void check_point(Point p) {
  if (p < 1) throw std::invalid_argument("permutation points must be positive, got " + std::to_string(p));
}

}  // namespace

Permutation Permutation::from_cycles(const std::vector<std::vector<Point>>& cycles) {
  std::map<Point, Point> m;
  std::vector<Point> seen;
  for (const auto& c : cycles) {
    for (Point p : c) {
      check_point(p);
      seen.push_back(p);
    }
    if (c.size() < 2) continue;
    for (std::size_t i = 0; i < c.size(); ++i) m[c[i]] = c[(i + 1) % c.size()];
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw std::invalid_argument("cycles are not disjoint");
  return Permutation(std::vector<std::pair<Point, Point>>(m.begin(), m.end()));
}

Permutation Permutation::from_images(std::span<const Point> images) {
  const int n = static_cast<int>(images.size());
  std::vector<char> hit(n + 1, 0);
  std::vector<std::pair<Point, Point>> moved;
  for (int i = 1; i <= n; ++i) {
    const Point t = images[i - 1];
    if (t < 1 || t > n || hit[t]) throw std::invalid_argument("images do not form a bijection of {1..n}");
    hit[t] = 1;
    if (t != i) moved.emplace_back(i, t);
  }
  return Permutation(std::move(moved));
}

Permutation Permutation::transposition(Point a, Point b) {
  check_point(a);
  check_point(b);
  if (a == b) return {};
  if (a > b) std::swap(a, b);
  return Permutation({{a, b}, {b, a}});
}

Permutation Permutation::cycle(std::span<const Point> points) {
  return from_cycles({std::vector<Point>(points.begin(), points.end())});
}

Point Permutation::operator()(Point i) const {
  auto it = std::lower_bound(moved_.begin(), moved_.end(), i,
                             [](const auto& pr, Point v) { return pr.first < v; });
  if (it != moved_.end() && it->first == i) return it->second;
  return i;
}

Permutation Permutation::inverse() const {
  std::vector<std::pair<Point, Point>> inv;
  inv.reserve(moved_.size());
  for (const auto& [s, t] : moved_) inv.emplace_back(t, s);
  std::sort(inv.begin(), inv.end());
  return Permutation(std::move(inv));
}

std::vector<Point> Permutation::support() const {
  std::vector<Point> out;
  out.reserve(moved_.size());
  for (const auto& pr : moved_) out.push_back(pr.first);
  return out;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<Point> done;
  for (const auto& [start, unused] : moved_) {
    if (std::binary_search(done.begin(), done.end(), start)) continue;
    std::vector<Point> c{start};
    for (Point p = (*this)(start); p != start; p = (*this)(p)) c.push_back(p);
    for (Point p : c) done.insert(std::upper_bound(done.begin(), done.end(), p), p);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Point> Permutation::images(int n) const {
  if (n < level()) throw std::invalid_argument("images(n) requires n >= level()");
  std::vector<Point> out(n);
  std::iota(out.begin(), out.end(), 1);
  for (const auto& [s, t] : moved_) out[s - 1] = t;
  return out;
}

std::string Permutation::to_string() const {
  if (moved_.empty()) return "e";
  std::ostringstream os;
  for (const auto& c : cycles()) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
  }
  return os.str();
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  std::vector<Point> pts;
  pts.reserve(p.moved_.size() + q.moved_.size());
  for (const auto& pr : p.moved_) pts.push_back(pr.first);
  for (const auto& pr : q.moved_) pts.push_back(pr.first);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<std::pair<Point, Point>> out;
  out.reserve(pts.size());
  for (Point i : pts) {
    const Point t = p(q(i));
    if (t != i) out.emplace_back(i, t);
  }
  return Permutation(std::move(out));
}

Permutation compose(const Permutation& p, const Permutation& q) { return p * q; }

Permutation conjugate(const Permutation& t, const Permutation& s) {
  // t s t^-1 maps t(i) to t(s(i)).
  std::vector<std::pair<Point, Point>> out;
  out.reserve(s.moved_.size());
  for (const auto& [i, si] : s.moved_) out.emplace_back(t(i), t(si));
  std::sort(out.begin(), out.end());
  return Permutation(std::move(out));
}

int CycleType::weight() const { return std::accumulate(lengths.begin(), lengths.end(), 0); }

std::string CycleType::to_string() const {
  if (lengths.empty()) return "[]";
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < lengths.size(); ++i) os << (i ? "," : "") << lengths[i];
  os << ']';
  return os.str();
}

CycleType cycle_type(const Permutation& s) {
  CycleType c;
  for (const auto& cyc : s.cycles()) c.lengths.push_back(static_cast<int>(cyc.size()));
  std::sort(c.lengths.begin(), c.lengths.end(), std::greater<>());
  return c;
}

CycleType make_cycle_type(std::vector<int> lengths) {
  CycleType c;
  for (int k : lengths) {
    if (k < 1) throw std::invalid_argument("cycle lengths must be positive");
    if (k >= 2) c.lengths.push_back(k);
  }
  std::sort(c.lengths.begin(), c.lengths.end(), std::greater<>());
  return c;
}

Permutation representative(const CycleType& c) {
  std::vector<std::vector<Point>> cycles;
  Point next = 1;
  for (int k : c.lengths) {
    std::vector<Point> cyc(k);
    std::iota(cyc.begin(), cyc.end(), next);
    next += k;
    cycles.push_back(std::move(cyc));
  }
  return Permutation::from_cycles(cycles);
}

int sign(const CycleType& c) {
  int parity = 0;
  for (int k : c.lengths) parity += k - 1;
  return parity % 2 == 0 ? 1 : -1;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

Partition as_partition(const CycleType& c, int n) {
  if (c.weight() > n) throw std::invalid_argument("cycle type " + c.to_string() + " does not fit in S_" + std::to_string(n));
  std::vector<int> parts = c.lengths;
  parts.resize(parts.size() + static_cast<std::size_t>(n - c.weight()), 1);
  return Partition(std::move(parts));
}

CycleType as_cycle_type(const Partition& p) { return make_cycle_type(p.parts()); }

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(remaining - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("factorial out of range");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t hook_dimension(const Partition& lambda) {
  const int n = lambda.weight();
  if (n > 20) throw std::invalid_argument("hook_dimension: weight too large");
  // conjugate partition column lengths
  std::vector<int> cols(lambda.empty() ? 0 : lambda[0], 0);
  for (int r : lambda.parts())
    for (int j = 0; j < r; ++j) ++cols[j];
  // n! / prod(hooks), accumulated with exact division by cancelling
  // factors: product of hooks divides n!, so divide at the end in 128 bits.
  unsigned __int128 hooks = 1;
  for (std::size_t i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j)
      hooks *= static_cast<unsigned>((lambda[i] - j - 1) + (cols[j] - static_cast<int>(i) - 1) + 1);
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(factorial(n)) / hooks);
}

std::uint64_t class_size(const CycleType& c, int n) {
  if (c.weight() > n) throw std::invalid_argument("class_size: cycle type does not fit");
  // n! / z_c with z_c = prod k^{a_k} a_k!, fixed points included.
  std::map<int, int> mult;
  for (int k : c.lengths) ++mult[k];
  mult[1] += n - c.weight();
  std::uint64_t z = 1;
  for (const auto& [k, a] : mult) {
    for (int i = 0; i < a; ++i) z *= static_cast<std::uint64_t>(k);
    z *= factorial(a);
  }
  return factorial(n) / z;
}

std::optional<std::pair<Permutation, Permutation>> split_product(const Permutation& s, int n) {
  if (n < 0) throw std::invalid_argument("split_product: level must be nonnegative");
  std::vector<std::vector<Point>> low, high;
  for (auto& c : s.cycles()) {
    const bool in_low = c.front() <= n;
    for (Point p : c)
      if ((p <= n) != in_low) return std::nullopt;
    (in_low ? low : high).push_back(std::move(c));
  }
  return std::make_pair(Permutation::from_cycles(low), Permutation::from_cycles(high));
}

const SymmetricGroup& SymmetricGroup::of(int n) {
  if (n < 0 || n > kMaxLevel)
    throw std::invalid_argument("SymmetricGroup::of: level " + std::to_string(n) + " outside 0.." +
                                std::to_string(kMaxLevel));
  static std::array<std::unique_ptr<SymmetricGroup>, kMaxLevel + 1> cache;
  static std::mutex mu;
  std::lock_guard lock(mu);
  if (!cache[n]) cache[n].reset(new SymmetricGroup(n));
  return *cache[n];
}

SymmetricGroup::SymmetricGroup(int n) : n_(n) {
  const std::size_t order = factorial(n);
  elements_.resize(order);
  std::vector<Point> root(n);
  std::iota(root.begin(), root.end(), 1);
  walk_right(
      n, root, [](std::vector<Point>& img, int i) { std::swap(img[i - 1], img[i]); },
      [&](std::size_t idx, const std::vector<Point>& img) {
        elements_[idx] = Permutation::from_images(img);
      });
  inverse_.resize(order);
  for (std::size_t i = 0; i < order; ++i) inverse_[i] = index_of(elements_[i].inverse());
}

std::size_t SymmetricGroup::index_of(const Permutation& s) const {
  if (s.level() > n_)
    throw std::out_of_range("permutation " + s.to_string() + " is not in S_" + std::to_string(n_));
  std::vector<Point> img = s.images(n_);
  std::size_t index = 0;
  std::size_t stride = 1;  // n!/k! for k = n, n-1, ...
  for (int k = n_; k >= 2; --k) {
    // j = g^-1(k): position of k in the one-line images
    int j = 1;
    while (img[j - 1] != k) ++j;
    index += static_cast<std::size_t>(k - j) * stride;
    // g <- g * s_j * s_{j+1} * ... * s_{k-1}
    for (int i = j; i < k; ++i) std::swap(img[i - 1], img[i]);
    stride *= static_cast<std::size_t>(k);
  }
  return index;
}

}  // namespace stablerep
