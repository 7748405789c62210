#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "trimaps/common.hpp"

namespace trimaps {

using Point = std::uint32_t;

/// A bijection of {0, ..., N-1}.
///
/// Composition is left-to-right throughout the library: `compose(a, b)` (also
/// written `a * b`) applies a first and then b, so a point w goes to
/// b[a[w]]. This matches maps acting on the right of their blades, where a
/// blade w is sent to w r0 r2 by applying r0 and then r2.
class Permutation {
 public:
  Permutation() = default;
  /// Validates that `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  /// 0-indexed cycles; points not mentioned are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::initializer_list<Point>> cycles);
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point p) const { return images_[p]; }
  std::span<const Point> images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  /// Least moved point, or degree() when the permutation is the identity.
  Point first_moved_point() const;

  /// Disjoint-cycle notation with 1-indexed points, e.g. "(1,3,5,2,4)".
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}
  friend Permutation compose(const Permutation& a, const Permutation& b);

  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

Permutation compose(const Permutation& a, const Permutation& b);
inline Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }
Permutation power(const Permutation& a, std::int64_t exponent);

/// Order of the permutation: the lcm of its cycle lengths.
std::uint64_t order_of(const Permutation& a);

bool is_fixed_point_free(const Permutation& a);

/// Closure of {point} under the generators, sorted ascending.
std::vector<Point> orbit(Point point, std::span<const Permutation> gens);

/// Orbit decomposition of {0..degree-1}: label[w] is the index of w's orbit,
/// orbits numbered in order of their least point.
struct OrbitPartition {
  std::vector<std::uint32_t> label;
  std::size_t count = 0;
};
OrbitPartition orbit_partition(std::span<const Permutation> gens, std::size_t degree);

bool is_transitive(std::span<const Permutation> gens, std::size_t degree);

/// Exact order of the group generated by `gens`, via a base and strong
/// generating set (deterministic Schreier-Sims, base points chosen as the
/// first moved point of a generator fixing the current base).
BigInt group_order(std::span<const Permutation> gens);

inline constexpr std::size_t kDefaultElementCap = 1'000'000;

/// Elements of a permutation group stored contiguously, numbered by breadth-first
/// search over words in the generators: start at the identity, and expand each
/// element in discovery order by right-multiplying with the generators in the
/// order given.
class FiniteGroup {
 public:
  FiniteGroup(std::span<const Permutation> gens, std::size_t cap = kDefaultElementCap);

  std::size_t size() const { return size_; }
  std::size_t degree() const { return degree_; }
  std::span<const Permutation> generators() const { return generators_; }

  Permutation element(std::size_t index) const;
  std::span<const Point> element_images(std::size_t index) const {
    return {storage_.data() + index * degree_, degree_};
  }
  /// Index of g, or size() when g is not in the group.
  std::size_t index_of(const Permutation& g) const;

  /// The right-regular action of g: element i goes to the index of (element i) * g.
  Permutation right_multiplication(const Permutation& g) const;

 private:
  std::size_t lookup(std::span<const Point> images) const;
  void insert_slot(std::size_t index);
  void rehash(std::size_t buckets);

  std::vector<Permutation> generators_;
  std::size_t degree_ = 0;
  std::size_t size_ = 0;
  std::vector<Point> storage_;         // size_ rows of degree_ images
  std::vector<std::uint32_t> table_;   // open addressing; kEmpty or element index
};

/// All elements of <gens>, in FiniteGroup's breadth-first order.
std::vector<Permutation> elements_of(std::span<const Permutation> gens,
                                     std::size_t cap = kDefaultElementCap);

}  // namespace trimaps
