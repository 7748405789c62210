#include "trimaps/permgroup.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <numeric>

namespace trimaps {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (const Point p : images_) {
    require(p < images_.size() && !seen[p], "image list is not a permutation");
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return {std::move(images), Unchecked{}};
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::initializer_list<std::initializer_list<Point>> cycles) {
  std::vector<std::vector<Point>> copy;
  for (const auto& c : cycles) copy.emplace_back(c);
  return from_cycles(degree, copy);
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Point p = cycle[i];
      require(p < degree && !used[p], "cycles must be disjoint and within the degree");
      used[p] = true;
      images[p] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return {std::move(inv), Unchecked{}};
}

bool Permutation::is_identity() const { return first_moved_point() == images_.size(); }

Point Permutation::first_moved_point() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return static_cast<Point>(i);
  }
  return static_cast<Point>(images_.size());
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += '(';
    for (Point p = static_cast<Point>(start); !seen[p]; p = images_[p]) {
      if (p != start) out += ',';
      out += std::to_string(p + 1);
      seen[p] = true;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const Point x : p.images()) h = (h ^ x) * 0x100000001b3ULL;
  return static_cast<std::size_t>(h);
}

Permutation compose(const Permutation& a, const Permutation& b) {
  require(a.degree() == b.degree(), "cannot compose permutations of different degrees");
  std::vector<Point> images(a.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = b.images_[a.images_[i]];
  return {std::move(images), Permutation::Unchecked{}};
}

Permutation power(const Permutation& a, std::int64_t exponent) {
  Permutation base = exponent < 0 ? a.inverse() : a;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-exponent) : static_cast<std::uint64_t>(exponent);
  Permutation result = Permutation::identity(a.degree());
  while (e != 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::uint64_t order_of(const Permutation& a) {
  std::uint64_t order = 1;
  std::vector<bool> seen(a.degree(), false);
  for (std::size_t start = 0; start < a.degree(); ++start) {
    if (seen[start]) continue;
    std::uint64_t length = 0;
    for (Point p = static_cast<Point>(start); !seen[p]; p = a[p]) {
      seen[p] = true;
      ++length;
    }
    const std::uint64_t g = std::gcd(order, length);
    ensure(order / g <= std::numeric_limits<std::uint64_t>::max() / length,
           "permutation order overflows 64 bits");
    order = order / g * length;
  }
  return order;
}

bool is_fixed_point_free(const Permutation& a) {
  for (std::size_t i = 0; i < a.degree(); ++i) {
    if (a[static_cast<Point>(i)] == i) return false;
  }
  return true;
}

std::vector<Point> orbit(Point point, std::span<const Permutation> gens) {
  std::vector<Point> members{point};
  if (gens.empty()) return members;
  const std::size_t degree = gens.front().degree();
  require(point < degree, "orbit point outside the permutation degree");
  std::vector<bool> seen(degree, false);
  seen[point] = true;
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (const auto& g : gens) {
      require(g.degree() == degree, "generators have different degrees");
      const Point next = g[members[head]];
      if (!seen[next]) {
        seen[next] = true;
        members.push_back(next);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

OrbitPartition orbit_partition(std::span<const Permutation> gens, std::size_t degree) {
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  OrbitPartition result;
  result.label.assign(degree, kUnset);
  std::vector<Point> queue;
  queue.reserve(degree);
  for (std::size_t start = 0; start < degree; ++start) {
    if (result.label[start] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(result.count++);
    queue.clear();
    queue.push_back(static_cast<Point>(start));
    result.label[start] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const auto& g : gens) {
        const Point next = g[queue[head]];
        if (result.label[next] == kUnset) {
          result.label[next] = id;
          queue.push_back(next);
        }
      }
    }
  }
  return result;
}

bool is_transitive(std::span<const Permutation> gens, std::size_t degree) {
  if (degree <= 1) return true;
  if (gens.empty()) return false;
  return orbit(0, gens).size() == degree;
}

namespace {

struct StabilizerLevel {
  Point base = 0;
  std::vector<Permutation> generators;
  std::vector<std::int32_t> slot;  // point -> index in orbit, or -1
  std::vector<Point> orbit;
  std::vector<Permutation> transversal;  // base^transversal[k] == orbit[k]

  void rebuild(std::size_t degree) {
    slot.assign(degree, -1);
    orbit.assign(1, base);
    transversal.assign(1, Permutation::identity(degree));
    slot[base] = 0;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const auto& s : generators) {
        const Point next = s[orbit[head]];
        if (slot[next] >= 0) continue;
        slot[next] = static_cast<std::int32_t>(orbit.size());
        orbit.push_back(next);
        transversal.push_back(transversal[head] * s);
      }
    }
  }
};

struct SiftResult {
  Permutation residue;
  std::size_t level;
};

SiftResult sift(Permutation g, const std::vector<StabilizerLevel>& levels, std::size_t start) {
  for (std::size_t j = start; j < levels.size(); ++j) {
    const Point beta = g[levels[j].base];
    const std::int32_t k = levels[j].slot[beta];
    if (k < 0) return {std::move(g), j};
    g = g * levels[j].transversal[static_cast<std::size_t>(k)].inverse();
  }
  return {std::move(g), levels.size()};
}

bool fixes_all(const Permutation& g, const std::vector<StabilizerLevel>& levels, std::size_t count) {
  for (std::size_t j = 0; j < count; ++j) {
    if (g[levels[j].base] != levels[j].base) return false;
  }
  return true;
}

}  // namespace

BigInt group_order(std::span<const Permutation> gens) {
  require(!gens.empty(), "group_order needs at least one generator");
  const std::size_t degree = gens.front().degree();
  std::vector<Permutation> moving;
  for (const auto& g : gens) {
    require(g.degree() == degree, "generators have different degrees");
    if (!g.is_identity()) moving.push_back(g);
  }
  if (moving.empty()) return 1;

  std::vector<StabilizerLevel> levels;
  for (const auto& g : moving) {
    if (fixes_all(g, levels, levels.size())) {
      levels.emplace_back();
      levels.back().base = g.first_moved_point();
    }
  }
  for (std::size_t i = 0; i < levels.size(); ++i) {
    for (const auto& g : moving) {
      if (fixes_all(g, levels, i)) levels[i].generators.push_back(g);
    }
    levels[i].rebuild(degree);
  }

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels.size()) - 1;
  while (i >= 0) {
    auto& level = levels[static_cast<std::size_t>(i)];
    bool extended = false;
    for (std::size_t k = 0; k < level.orbit.size() && !extended; ++k) {
      for (std::size_t s = 0; s < level.generators.size() && !extended; ++s) {
        const Permutation& gen = level.generators[s];
        const Point image = gen[level.orbit[k]];
        const auto& back = level.transversal[static_cast<std::size_t>(level.slot[image])];
        Permutation schreier = level.transversal[k] * gen * back.inverse();
        if (schreier.is_identity()) continue;
        auto [residue, j] = sift(std::move(schreier), levels, static_cast<std::size_t>(i) + 1);
        if (j == levels.size() && residue.is_identity()) continue;
        if (j == levels.size()) {
          levels.emplace_back();
          levels.back().base = residue.first_moved_point();
        }
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
          levels[l].generators.push_back(residue);
          levels[l].rebuild(degree);
        }
        i = static_cast<std::ptrdiff_t>(j);
        extended = true;
      }
    }
    if (!extended) --i;
  }

  BigInt order = 1;
  for (const auto& level : levels) order *= level.orbit.size();
  return order;
}

namespace {

constexpr std::uint32_t kEmptySlot = std::numeric_limits<std::uint32_t>::max();

std::uint64_t hash_images(std::span<const Point> images) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const Point x : images) h = (h ^ x) * 0x100000001b3ULL;
  return h ^ (h >> 29);
}

}  // namespace

FiniteGroup::FiniteGroup(std::span<const Permutation> gens, std::size_t cap)
    : generators_(gens.begin(), gens.end()) {
  require(!generators_.empty(), "a finite group needs at least one generator");
  degree_ = generators_.front().degree();
  for (const auto& g : generators_) require(g.degree() == degree_, "generators have different degrees");

  rehash(64);
  const Permutation id = Permutation::identity(degree_);
  storage_.assign(id.images().begin(), id.images().end());
  size_ = 1;
  insert_slot(0);

  std::vector<Point> candidate(degree_);
  for (std::size_t current = 0; current < size_; ++current) {
    for (const auto& g : generators_) {
      const Point* row = storage_.data() + current * degree_;
      for (std::size_t w = 0; w < degree_; ++w) candidate[w] = g[row[w]];
      if (lookup(candidate) != size_) continue;
      require(size_ < cap, "group has more than " + std::to_string(cap) + " elements");
      storage_.insert(storage_.end(), candidate.begin(), candidate.end());
      ++size_;
      insert_slot(size_ - 1);
    }
  }
}

void FiniteGroup::rehash(std::size_t buckets) {
  table_.assign(buckets, kEmptySlot);
  for (std::size_t idx = 0; idx < size_; ++idx) insert_slot(idx);
}

void FiniteGroup::insert_slot(std::size_t index) {
  if (2 * (size_ + 1) > table_.size()) {
    rehash(table_.size() * 2);  // rehash re-inserts every stored row, including `index`
    return;
  }
  const std::size_t mask = table_.size() - 1;
  std::size_t pos = hash_images(element_images(index)) & mask;
  while (table_[pos] != kEmptySlot) pos = (pos + 1) & mask;
  table_[pos] = static_cast<std::uint32_t>(index);
}

std::size_t FiniteGroup::lookup(std::span<const Point> images) const {
  const std::size_t mask = table_.size() - 1;
  std::size_t pos = hash_images(images) & mask;
  while (table_[pos] != kEmptySlot) {
    const auto row = element_images(table_[pos]);
    if (std::equal(row.begin(), row.end(), images.begin())) return table_[pos];
    pos = (pos + 1) & mask;
  }
  return size_;
}

Permutation FiniteGroup::element(std::size_t index) const {
  const auto row = element_images(index);
  return Permutation(std::vector<Point>(row.begin(), row.end()));
}

std::size_t FiniteGroup::index_of(const Permutation& g) const {
  if (g.degree() != degree_) return size_;
  return lookup(g.images());
}

Permutation FiniteGroup::right_multiplication(const Permutation& g) const {
  require(g.degree() == degree_, "element has the wrong degree");
  std::vector<Point> images(size_);
  std::vector<Point> product(degree_);
  for (std::size_t i = 0; i < size_; ++i) {
    const auto row = element_images(i);
    for (std::size_t w = 0; w < degree_; ++w) product[w] = g[row[w]];
    const std::size_t j = lookup(product);
    require(j != size_, "element is not in the group");
    images[i] = static_cast<Point>(j);
  }
  return Permutation(std::move(images));
}

std::vector<Permutation> elements_of(std::span<const Permutation> gens, std::size_t cap) {
  const FiniteGroup group(gens, cap);
  std::vector<Permutation> out;
  out.reserve(group.size());
  for (std::size_t i = 0; i < group.size(); ++i) out.push_back(group.element(i));
  return out;
}

}  // namespace trimaps
