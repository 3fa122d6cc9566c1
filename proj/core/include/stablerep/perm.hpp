#pragma once

// Finitely supported permutations of the positive integers, cycle types,
// partitions, and enumeration of the finite symmetric groups S_n.
//
// Conventions used throughout the library:
//   * points are positive integers 1, 2, 3, ...
//   * composition applies the right operand first: (p * q)(i) = p(q(i))
//   * S_n is the subgroup moving only points in {1..n}; S_{N\n} is the
//     subgroup fixing every point in {1..n}.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace stablerep {

using Point = int;

class Permutation {
 public:
  /// Identity.
  Permutation() = default;

  /// Builds from disjoint cycles, e.g. {{1,2},{5,6}}. Cycles of length one
  /// are allowed and ignored. Throws std::invalid_argument on repeated or
  /// non-positive points.
  static Permutation from_cycles(const std::vector<std::vector<Point>>& cycles);

  /// Builds from one-line notation: images[i-1] = s(i) for i = 1..size.
  static Permutation from_images(std::span<const Point> images);

  static Permutation transposition(Point a, Point b);

  /// The cycle a_1 -> a_2 -> ... -> a_k -> a_1.
  static Permutation cycle(std::span<const Point> points);

  Point operator()(Point i) const;

  Permutation inverse() const;

  bool is_identity() const { return moved_.empty(); }

  /// Sorted non-fixed points.
  std::vector<Point> support() const;
  std::size_t support_size() const { return moved_.size(); }

  /// Smallest n with support contained in {1..n}; 0 for the identity.
  int level() const { return moved_.empty() ? 0 : moved_.back().first; }

  /// Canonical cycle form: smallest point first in each cycle, cycles
  /// ordered by their smallest point.
  std::vector<std::vector<Point>> cycles() const;

  /// One-line images of 1..n; requires n >= level().
  std::vector<Point> images(int n) const;

  /// "(1 2)(5 6)", or "e" for the identity.
  std::string to_string() const;

  /// (source, target) pairs of the non-fixed points, sorted by source.
  const std::vector<std::pair<Point, Point>>& moved() const { return moved_; }

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend Permutation conjugate(const Permutation& t, const Permutation& s);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.moved_ <=> b.moved_;
  }

 private:
  explicit Permutation(std::vector<std::pair<Point, Point>> moved) : moved_(std::move(moved)) {}

  std::vector<std::pair<Point, Point>> moved_;
};

/// p * q, i.e. apply q first.
Permutation compose(const Permutation& p, const Permutation& q);

/// t s t^-1.
Permutation conjugate(const Permutation& t, const Permutation& s);

/// Multiset of cycle lengths >= 2, stored in weakly decreasing order.
struct CycleType {
  std::vector<int> lengths;

  /// Number of moved points.
  int weight() const;
  bool is_identity() const { return lengths.empty(); }
  std::string to_string() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType&, const CycleType&) = default;
};

CycleType cycle_type(const Permutation& s);

/// Validates and sorts lengths; lengths of 1 are dropped.
CycleType make_cycle_type(std::vector<int> lengths);

/// A representative permutation of the given cycle type: consecutive blocks
/// starting at point 1.
Permutation representative(const CycleType& c);

/// Sign (+1 / -1) of a permutation with this cycle type.
int sign(const CycleType& c);

/// Weakly decreasing positive parts. The empty partition has weight 0.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly
  /// decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  std::size_t length() const { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  bool empty() const { return parts_.empty(); }

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// The cycle type of a permutation of {1..n} read as a partition of n
/// (fixed points become parts equal to 1).
Partition as_partition(const CycleType& c, int n);
CycleType as_cycle_type(const Partition& p);

/// All partitions of n in reverse lexicographic order, (n) first.
/// Throws std::invalid_argument for n < 0.
std::vector<Partition> partitions_of(int n);

/// Number of standard Young tableaux of shape lambda (hook length formula).
std::uint64_t hook_dimension(const Partition& lambda);

std::uint64_t factorial(int n);

/// Number of permutations in S_n with cycle type c.
std::uint64_t class_size(const CycleType& c, int n);

/// Factorization s = s1 * s2 with s1 in S_n and s2 in S_{N\n}; present iff s
/// maps {1..n} onto itself. Throws for n < 0.
std::optional<std::pair<Permutation, Permutation>> split_product(const Permutation& s, int n);

/// The finite group S_n with a fixed enumeration of its elements.
///
/// Every g in S_n factors uniquely as g = c2 * c3 * ... * cn where ck is a
/// right coset representative of S_{k-1} in S_k of the form
/// s_{k-1} * s_{k-2} * ... * s_j (s_i the adjacent transposition (i, i+1);
/// j = k gives the identity). The digit of ck is k - j and elements are
/// indexed in mixed radix with c2 the most significant digit. Walking the
/// group in index order therefore only ever right-multiplies by a single
/// adjacent transposition, which is what walk_right() exposes.
class SymmetricGroup {
 public:
  static constexpr int kMaxLevel = 10;

  /// Cached instance; throws std::invalid_argument outside 0..kMaxLevel.
  static const SymmetricGroup& of(int n);

  int level() const { return n_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(std::size_t index) const { return elements_[index]; }

  /// Index of s; throws std::out_of_range if level(s) > level().
  std::size_t index_of(const Permutation& s) const;
  std::size_t inverse_index(std::size_t index) const { return inverse_[index]; }

  /// Visits every element of S_n in index order. `value` starts at `root`
  /// and `step(value, i)` must replace value by value * rho(s_i) for the
  /// homomorphism being tracked. `visit(index, value)` is called once per
  /// element.
  template <class Value, class Step, class Visit>
  static void walk_right(int n, Value root, Step&& step, Visit&& visit);

 private:
  explicit SymmetricGroup(int n);

  int n_;
  std::vector<Permutation> elements_;
  std::vector<std::size_t> inverse_;
};

namespace detail {

template <class Value, class Step, class Visit>
void walk_level(int k, int n, std::size_t base, std::size_t stride_numer, const Value& prefix,
                Step& step, Visit& visit) {
  if (k > n) {
    visit(base, prefix);
    return;
  }
  // stride of digit k is n!/k!
  const std::size_t stride = stride_numer / static_cast<std::size_t>(k);
  Value current = prefix;
  for (int j = k; j >= 1; --j) {
    if (j < k) step(current, j);
    walk_level(k + 1, n, base + static_cast<std::size_t>(k - j) * stride, stride, current, step,
               visit);
  }
}

}  // namespace detail

template <class Value, class Step, class Visit>
void SymmetricGroup::walk_right(int n, Value root, Step&& step, Visit&& visit) {
  if (n <= 1) {
    visit(std::size_t{0}, root);
    return;
  }
  detail::walk_level(2, n, 0, factorial(n), root, step, visit);
}

}  // namespace stablerep
