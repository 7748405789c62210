#include "trimaps/mapcore.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <unordered_map>

namespace trimaps {

namespace {

constexpr Point kUnset = std::numeric_limits<Point>::max();

}  // namespace

MapTriple::MapTriple(Permutation r0, Permutation r1, Permutation r2)
    : r_{std::move(r0), std::move(r1), std::move(r2)} {
  require(r_[0].degree() == r_[1].degree() && r_[1].degree() == r_[2].degree(),
          "r0, r1, r2 must have the same degree");
}

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

}  // namespace

InvalidMapError::InvalidMapError(std::vector<std::string> violations)
    : DomainError("invalid map: " + join(violations)), violations_(std::move(violations)) {}

std::vector<std::string> map_violations(const MapTriple& m) {
  std::vector<std::string> out;
  if (m.degree() == 0) return {"empty blade set"};
  const Permutation r0r2 = m.r0() * m.r2();
  for (int i = 0; i < 3; ++i) {
    if (!(m.r(i) * m.r(i)).is_identity()) out.push_back("r" + std::to_string(i) + "^2 != 1");
  }
  if (!(r0r2 * r0r2).is_identity()) out.push_back("(r0r2)^2 != 1");
  if (!is_transitive(m.involutions(), m.degree())) out.push_back("not transitive");
  for (int i = 0; i < 3; ++i) {
    if (!is_fixed_point_free(m.r(i))) out.push_back("r" + std::to_string(i) + " has fixed points");
  }
  if (!is_fixed_point_free(r0r2)) out.push_back("r0r2 has fixed points");
  return out;
}

const MapTriple& validate(const MapTriple& m) {
  auto violations = map_violations(m);
  if (!violations.empty()) throw InvalidMapError(std::move(violations));
  return m;
}

MapType map_type(const MapTriple& m) {
  const Permutation r0r1 = m.r0() * m.r1();
  return {order_of(r0r1), order_of(m.r1() * m.r2()), order_of(r0r1 * m.r2())};
}

MapCounts counts(const MapTriple& m) {
  const std::size_t n = m.degree();
  const std::array<Permutation, 2> vertex{m.r1(), m.r2()};
  const std::array<Permutation, 2> edge{m.r0(), m.r2()};
  const std::array<Permutation, 2> face{m.r0(), m.r1()};
  const std::array<Permutation, 2> petrie{m.r0() * m.r2(), m.r1()};
  return {orbit_partition(vertex, n).count, orbit_partition(edge, n).count, orbit_partition(face, n).count,
          orbit_partition(petrie, n).count};
}

std::int64_t euler_characteristic(const MapTriple& m) {
  const MapCounts c = counts(m);
  return static_cast<std::int64_t>(c.vertices) - static_cast<std::int64_t>(c.edges) +
         static_cast<std::int64_t>(c.faces);
}

BigInt chi_formula(const BigInt& group_order, std::uint64_t n) {
  require(n >= 1, "valency must be positive");
  const BigInt numerator = group_order * (BigInt(4) - BigInt(n));
  const BigInt denominator = BigInt(4) * BigInt(n);
  ensure(numerator % denominator == 0, "Euler characteristic formula is not integral");
  return numerator / denominator;
}

bool orientability(const MapTriple& m) {
  const std::array<Permutation, 2> even{m.r0() * m.r1(), m.r1() * m.r2()};
  return orbit_partition(even, m.degree()).count == 2;
}

Multiplicities multiplicities(const MapTriple& m) {
  const std::size_t n = m.degree();
  const std::array<Permutation, 2> vertex_gens{m.r1(), m.r2()};
  const std::array<Permutation, 2> face_gens{m.r0(), m.r1()};
  const std::array<Permutation, 2> edge_gens{m.r0(), m.r2()};
  const auto vertex = orbit_partition(vertex_gens, n);
  const auto face = orbit_partition(face_gens, n);
  const auto edge = orbit_partition(edge_gens, n);

  // Representative blade of each edge, and the multiset of vertex / face pairs.
  auto pair_key = [](std::uint32_t a, std::uint32_t b) {
    if (a > b) std::swap(a, b);
    return (std::uint64_t{a} << 32) | b;
  };
  std::vector<Point> rep(edge.count, kUnset);
  std::unordered_map<std::uint64_t, std::uint64_t> vertex_pairs;
  std::unordered_map<std::uint64_t, std::uint64_t> face_pairs;
  for (Point w = 0; w < n; ++w) {
    if (rep[edge.label[w]] != kUnset) continue;
    rep[edge.label[w]] = w;
    ++vertex_pairs[pair_key(vertex.label[w], vertex.label[m.r0()[w]])];
    ++face_pairs[pair_key(face.label[w], face.label[m.r2()[w]])];
  }

  auto at_edge = [&](Point w) {
    Multiplicities out;
    out.vertex = vertex_pairs.at(pair_key(vertex.label[w], vertex.label[m.r0()[w]]));
    out.face = face_pairs.at(pair_key(face.label[w], face.label[m.r2()[w]]));
    out.vertex_loop = vertex.label[w] == vertex.label[m.r0()[w]];
    out.face_loop = face.label[w] == face.label[m.r2()[w]];
    return out;
  };

  const Multiplicities result = at_edge(0);
  std::mt19937 rng(20240611u);
  std::uniform_int_distribution<std::size_t> pick(0, edge.count - 1);
  for (int sample = 0; sample < 10; ++sample) {
    ensure(at_edge(rep[pick(rng)]) == result, "edge multiplicities differ between edges of a regular map");
  }
  return result;
}

std::string_view sigma_name(Sigma s) {
  switch (s) {
    case Sigma::kId: return "Id";
    case Sigma::kD: return "D";
    case Sigma::kP: return "P";
    case Sigma::kDPD: return "DPD";
    case Sigma::kDP: return "DP";
    case Sigma::kPD: return "PD";
  }
  return "?";
}

Sigma parse_sigma(std::string_view name) {
  for (const Sigma s : kSigmaElements) {
    if (sigma_name(s) == name) return s;
  }
  throw DomainError("unknown operation '" + std::string(name) + "'");
}

std::array<int, 3> sigma_slots(Sigma s) {
  switch (s) {
    case Sigma::kId: return {0, 1, 2};
    case Sigma::kD: return {1, 0, 2};
    case Sigma::kP: return {2, 1, 0};
    case Sigma::kDPD: return {0, 2, 1};
    case Sigma::kDP: return {2, 0, 1};
    case Sigma::kPD: return {1, 2, 0};
  }
  return {0, 1, 2};
}

Sigma operator*(Sigma s, Sigma t) {
  const auto ps = sigma_slots(s);
  const auto pt = sigma_slots(t);
  std::array<int, 3> composite{};
  for (std::size_t k = 0; k < 3; ++k) composite[k] = ps[static_cast<std::size_t>(pt[k])];
  for (const Sigma u : kSigmaElements) {
    if (sigma_slots(u) == composite) return u;
  }
  throw InvariantViolation("Sigma product left the group");
}

MapTriple sigma_apply(const MapTriple& m, Sigma s) {
  if (s == Sigma::kId) return m;
  const std::array<Permutation, 3> slots{m.r0(), m.r2(), m.r0() * m.r2()};
  const auto perm = sigma_slots(s);
  return {slots[static_cast<std::size_t>(perm[0])], m.r1(), slots[static_cast<std::size_t>(perm[1])]};
}

std::array<MapTriple, 6> derivates(const MapTriple& m) {
  return {sigma_apply(m, Sigma::kId),  sigma_apply(m, Sigma::kD),  sigma_apply(m, Sigma::kP),
          sigma_apply(m, Sigma::kDPD), sigma_apply(m, Sigma::kDP), sigma_apply(m, Sigma::kPD)};
}

std::optional<std::vector<Point>> rooted_isomorphism(const MapTriple& from, const MapTriple& to, Point root) {
  const std::size_t n = from.degree();
  if (to.degree() != n || root >= n) return std::nullopt;
  std::vector<Point> phi(n, kUnset);
  std::vector<Point> queue;
  queue.reserve(n);
  phi[0] = root;
  queue.push_back(0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Point w = queue[head];
    for (int i = 0; i < 3; ++i) {
      const Point source = from.r(i)[w];
      const Point target = to.r(i)[phi[w]];
      if (phi[source] == kUnset) {
        phi[source] = target;
        queue.push_back(source);
      } else if (phi[source] != target) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != n) return std::nullopt;
  // Equal degrees and a transitive target make phi onto; check injectivity anyway
  // because the target may be intransitive for unvalidated input.
  std::vector<bool> hit(n, false);
  for (const Point x : phi) {
    if (hit[x]) return std::nullopt;
    hit[x] = true;
  }
  return phi;
}

bool are_isomorphic(const MapTriple& m1, const MapTriple& m2, bool assume_regular) {
  if (m1.degree() != m2.degree()) return false;
  if (assume_regular) return rooted_isomorphism(m1, m2, 0).has_value();
  for (Point root = 0; root < m2.degree(); ++root) {
    if (rooted_isomorphism(m1, m2, root)) return true;
  }
  return false;
}

namespace {

// Marks the orbit of `start` under the given blade maps.
void mark_orbit(Point start, const std::vector<std::vector<Point>>& maps, std::vector<char>& marked) {
  std::vector<Point> queue{start};
  marked[start] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& phi : maps) {
      const Point next = phi[queue[head]];
      if (!marked[next]) {
        marked[next] = 1;
        queue.push_back(next);
      }
    }
  }
}

}  // namespace

RegularityReport is_regular(const MapTriple& m) {
  const std::size_t n = m.degree();
  require(n > 0 && is_transitive(m.involutions(), n), "regularity test needs a transitive triple");
  std::vector<std::vector<Point>> automorphisms;
  std::vector<char> reached(n, 0);
  std::vector<char> excluded(n, 0);
  reached[0] = 1;
  for (Point w = 1; w < n; ++w) {
    if (reached[w] || excluded[w]) continue;
    if (auto phi = rooted_isomorphism(m, m, w)) {
      automorphisms.push_back(std::move(*phi));
      std::fill(reached.begin(), reached.end(), 0);
      mark_orbit(0, automorphisms, reached);
    } else {
      // The roots reachable from 0 form an Aut-orbit, so w's orbit is disjoint from it.
      mark_orbit(w, automorphisms, excluded);
    }
  }
  const auto count = static_cast<std::size_t>(std::count(reached.begin(), reached.end(), 1));
  return {count == n, count};
}

std::string_view wilson_class_name(WilsonClass c) {
  switch (c) {
    case WilsonClass::kI: return "I";
    case WilsonClass::kII: return "II";
    case WilsonClass::kIII: return "III";
    case WilsonClass::kIV: return "IV";
  }
  return "?";
}

ClassificationReport classify(const MapTriple& m, RegularityCheck check) {
  if (check == RegularityCheck::kVerify) require(is_regular(m).regular, "classification needs a regular map");
  const auto images = derivates(m);
  ClassificationReport report;
  for (std::size_t k = 0; k < images.size(); ++k) {
    bool placed = false;
    for (auto& part : report.partition) {
      const auto rep = static_cast<std::size_t>(part.front());
      if (are_isomorphic(images[k], images[rep], true)) {
        part.push_back(kSigmaElements[k]);
        placed = true;
        break;
      }
    }
    if (!placed) report.partition.push_back({kSigmaElements[k]});
  }
  report.derivate_count = static_cast<int>(report.partition.size());
  switch (report.derivate_count) {
    case 6: report.wilson_class = WilsonClass::kI; break;
    case 3: report.wilson_class = WilsonClass::kII; break;
    case 2: report.wilson_class = WilsonClass::kIII; break;
    case 1: report.wilson_class = WilsonClass::kIV; break;
    default:
      throw InvariantViolation("Sigma-orbit of size " + std::to_string(report.derivate_count) +
                               " is impossible for a regular map");
  }
  return report;
}

InvariantsReport analyze(const MapTriple& m) {
  InvariantsReport report;
  report.degree = m.degree();
  report.type = map_type(m);
  report.counts = counts(m);
  ensure(report.counts.edges * 4 == m.degree(), "edge count differs from N/4");
  report.chi = static_cast<std::int64_t>(report.counts.vertices) - static_cast<std::int64_t>(report.counts.edges) +
               static_cast<std::int64_t>(report.counts.faces);
  report.orientable = orientability(m);
  report.genus = report.orientable ? 1 - report.chi / 2 : 2 - report.chi;
  report.multiplicities = multiplicities(m);
  return report;
}

bool character_factors(const MapTriple& m, unsigned character) {
  const std::size_t n = m.degree();
  std::vector<std::int8_t> label(n, -1);
  std::vector<Point> queue{0};
  label[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Point w = queue[head];
    for (int i = 0; i < 3; ++i) {
      const Point next = m.r(i)[w];
      const auto expected = static_cast<std::int8_t>(label[w] ^ ((character >> i) & 1));
      if (label[next] < 0) {
        label[next] = expected;
        queue.push_back(next);
      } else if (label[next] != expected) {
        return false;
      }
    }
  }
  return true;
}

std::vector<unsigned> factoring_characters(const MapTriple& m) {
  std::vector<unsigned> out{0};
  for (unsigned c = 1; c < 8; ++c) {
    if (character_factors(m, c)) out.push_back(c);
  }
  return out;
}

}  // namespace trimaps
