#include "twoclosed/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <stdexcept>

#include "twoclosed/errors.hpp"

namespace twoclosed {

namespace {

constexpr std::size_t kQuietSifts = 40;
constexpr std::size_t kStallLimit = 200000;

struct UnionFind {
  std::vector<Point> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), Point{0}); }
  Point find(Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(Point a, Point b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

class ProductReplacement {
 public:
  ProductReplacement(const std::vector<Permutation>& gens, std::size_t degree, std::uint64_t seed)
      : rng_(seed), acc_(Permutation::identity(degree)) {
    std::size_t len = std::max<std::size_t>(10, gens.size() + 2);
    for (std::size_t i = 0; i < len; ++i)
      slots_.push_back(gens.empty() ? Permutation::identity(degree) : gens[i % gens.size()]);
    for (int i = 0; i < 60; ++i) next();
  }

  Permutation next() {
    std::uniform_int_distribution<std::size_t> pick(0, slots_.size() - 1);
    std::size_t i = pick(rng_), j = pick(rng_);
    while (j == i) j = pick(rng_);
    bool inv = rng_() & 1;
    if (rng_() & 1)
      slots_[i] = slots_[i] * (inv ? slots_[j].inverse() : slots_[j]);
    else
      slots_[i] = (inv ? slots_[j].inverse() : slots_[j]) * slots_[i];
    acc_ = acc_ * slots_[i];
    return acc_;
  }

 private:
  std::mt19937_64 rng_;
  std::vector<Permutation> slots_;
  Permutation acc_;
};

}  // namespace

PermGroup PermGroup::generate(std::size_t degree, std::vector<Permutation> gens,
                              const GroupOptions& opts) {
  PermGroup g;
  g.degree_ = degree;
  for (const auto& s : gens)
    if (s.degree() != degree) throw std::invalid_argument("PermGroup: generator degree mismatch");
  for (Point b : opts.base_prefix)
    if (b >= degree) throw std::invalid_argument("PermGroup: base point out of range");
  gens.erase(std::remove_if(gens.begin(), gens.end(), [](const Permutation& s) { return s.is_identity(); }),
             gens.end());
  g.gens_ = std::move(gens);
  g.schreier_sims(opts);
  return g;
}

void PermGroup::rebuild_orbit(std::size_t level) {
  Level& L = levels_[level];
  L.schreier.assign(degree_, -1);
  L.schreier[L.base_point] = -2;
  L.orbit.assign(1, L.base_point);
  for (std::size_t head = 0; head < L.orbit.size(); ++head) {
    Point x = L.orbit[head];
    for (std::size_t idx : L.gens) {
      Point y = strong_[idx][x];
      if (L.schreier[y] == -1) {
        L.schreier[y] = static_cast<std::int32_t>(idx);
        L.orbit.push_back(y);
      }
    }
  }
}

void PermGroup::add_strong(const Permutation& g, std::size_t level) {
  std::size_t idx = strong_.size();
  strong_.push_back(g);
  strong_inv_.push_back(g.inverse());
  if (level == levels_.size()) {
    Level L;
    L.base_point = g.first_moved();
    levels_.push_back(std::move(L));
  }
  for (std::size_t i = 0; i <= level; ++i) {
    levels_[i].gens.push_back(idx);
    rebuild_orbit(i);
  }
}

PermGroup::SiftResult PermGroup::sift(Permutation g, std::size_t from_level) const {
  for (std::size_t i = from_level; i < levels_.size(); ++i) {
    const Level& L = levels_[i];
    Point y = g[L.base_point];
    if (L.schreier[y] == -1) return {std::move(g), i};
    while (y != L.base_point) {
      auto idx = static_cast<std::size_t>(L.schreier[y]);
      g *= strong_inv_[idx];
      y = strong_inv_[idx][y];
    }
  }
  return {std::move(g), levels_.size()};
}

Order PermGroup::product_of_orbits() const {
  Order r = 1;
  for (const auto& L : levels_) r *= L.orbit.size();
  return r;
}

void PermGroup::schreier_sims(const GroupOptions& opts) {
  for (Point b : opts.base_prefix) {
    if (std::any_of(levels_.begin(), levels_.end(), [&](const Level& L) { return L.base_point == b; }))
      continue;
    Level L;
    L.base_point = b;
    levels_.push_back(std::move(L));
    rebuild_orbit(levels_.size() - 1);
  }
  for (const auto& s : gens_) {
    auto r = sift(s);
    if (!r.residue.is_identity()) add_strong(r.residue, r.level);
  }

  auto done = [&] { return opts.known_order && product_of_orbits() == *opts.known_order; };

  if (!gens_.empty() && !done()) {
    ProductReplacement pr(gens_, degree_, kSchreierSimsSeed);
    std::size_t quiet = 0, stall = 0;
    while (!done()) {
      auto r = sift(pr.next());
      if (r.residue.is_identity()) {
        ++quiet;
        ++stall;
        if (!opts.known_order && quiet >= kQuietSifts) break;
        if (opts.known_order && stall > kStallLimit)
          throw std::logic_error("PermGroup: known order not reached");
      } else {
        add_strong(r.residue, r.level);
        quiet = stall = 0;
      }
    }
    if (opts.known_order && product_of_orbits() > *opts.known_order)
      throw std::logic_error("PermGroup: order exceeds the supplied known order");
  }
  if (!opts.known_order)
    while (!verify()) {
    }
  finalize();
}

bool PermGroup::verify() {
  auto word = [&](std::size_t level, Point y) {
    const Level& L = levels_[level];
    std::vector<std::size_t> path;
    while (y != L.base_point) {
      auto idx = static_cast<std::size_t>(L.schreier[y]);
      path.push_back(idx);
      y = strong_inv_[idx][y];
    }
    Permutation u = Permutation::identity(degree_);
    for (auto it = path.rbegin(); it != path.rend(); ++it) u *= strong_[*it];
    return u;
  };
  for (std::size_t i = levels_.size(); i-- > 0;) {
    const Level L = levels_[i];
    for (Point y : L.orbit) {
      Permutation uy = word(i, y);
      for (std::size_t idx : L.gens) {
        Point z = strong_[idx][y];
        Permutation sg = uy * strong_[idx] * word(i, z).inverse();
        auto r = sift(std::move(sg), i + 1);
        if (!r.residue.is_identity()) {
          add_strong(r.residue, r.level);
          return false;
        }
      }
    }
  }
  return true;
}

void PermGroup::finalize() {
  base_.clear();
  for (const auto& L : levels_) base_.push_back(L.base_point);
  order_ = product_of_orbits();
}

std::vector<std::size_t> PermGroup::basic_orbit_lengths() const {
  std::vector<std::size_t> r;
  for (const auto& L : levels_) r.push_back(L.orbit.size());
  return r;
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto r = sift(g);
  return r.level == levels_.size() && r.residue.is_identity();
}

std::vector<Point> PermGroup::orbit(Point x) const {
  std::vector<Point> orb{x};
  std::vector<bool> seen(degree_, false);
  seen[x] = true;
  for (std::size_t h = 0; h < orb.size(); ++h)
    for (const auto& s : gens_) {
      Point y = s[orb[h]];
      if (!seen[y]) {
        seen[y] = true;
        orb.push_back(y);
      }
    }
  return orb;
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(degree_, false);
  for (Point x = 0; x < degree_; ++x) {
    if (seen[x]) continue;
    auto orb = orbit(x);
    for (Point y : orb) seen[y] = true;
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

PermGroup PermGroup::with_base(const std::vector<Point>& prefix) const {
  GroupOptions opts;
  opts.known_order = order_;
  opts.base_prefix = prefix;
  PermGroup g = generate(degree_, strong_.empty() ? gens_ : strong_, opts);
  g.gens_ = gens_;
  return g;
}

PermGroup PermGroup::pointwise_stabilizer(const std::vector<Point>& points) const {
  bool prefix_ok = points.size() <= base_.size() && std::equal(points.begin(), points.end(), base_.begin());
  std::optional<PermGroup> rebased;
  if (!prefix_ok) rebased = with_base(points);
  const PermGroup& src = prefix_ok ? *this : *rebased;
  std::size_t k = 0;
  for (Point p : points)
    if (k < src.base_.size() && src.base_[k] == p) ++k;

  PermGroup r;
  r.degree_ = degree_;
  if (k >= src.levels_.size()) {
    r.finalize();
    return r;
  }
  const auto& keep = src.levels_[k].gens;
  std::vector<std::int32_t> remap(src.strong_.size(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    remap[keep[i]] = static_cast<std::int32_t>(i);
    r.strong_.push_back(src.strong_[keep[i]]);
    r.strong_inv_.push_back(src.strong_inv_[keep[i]]);
  }
  r.gens_ = r.strong_;
  for (std::size_t i = k; i < src.levels_.size(); ++i) {
    Level L = src.levels_[i];
    for (auto& idx : L.gens) idx = static_cast<std::size_t>(remap[idx]);
    for (auto& sv : L.schreier)
      if (sv >= 0) sv = remap[static_cast<std::size_t>(sv)];
    r.levels_.push_back(std::move(L));
  }
  r.finalize();
  return r;
}

PermGroup PermGroup::stabilizer(Point x) const { return pointwise_stabilizer({x}); }

bool PermGroup::is_transitive() const { return degree_ <= 1 || orbit(0).size() == degree_; }

bool PermGroup::is_regular() const { return is_transitive() && order_ == degree_; }

std::vector<Permutation> PermGroup::orbit_transversal(Point x) const {
  std::vector<Permutation> t(degree_);
  t[x] = Permutation::identity(degree_);
  std::vector<Point> queue{x};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    Point y = queue[h];
    for (const auto& s : gens_) {
      Point z = s[y];
      if (t[z].degree() == 0) {
        t[z] = t[y] * s;
        queue.push_back(z);
      }
    }
  }
  return t;
}

bool PermGroup::is_primitive() const {
  if (!is_transitive()) throw PreconditionError("is_primitive: group is not transitive");
  if (degree_ <= 2) return true;
  auto t = orbit_transversal(0);
  PermGroup stab = stabilizer(0);
  for (const auto& sub : stab.orbits()) {
    if (sub.size() == 1 && sub[0] == 0) continue;
    UnionFind uf(degree_);
    std::size_t comps = degree_;
    for (Point x = 0; x < degree_ && comps > 1; ++x)
      for (Point d : sub)
        if (uf.unite(x, t[x][d])) --comps;
    if (comps > 1) return false;
  }
  return true;
}

PermGroup PermGroup::conjugate(const Permutation& g) const {
  Permutation gi = g.inverse();
  std::vector<Permutation> gens;
  for (const auto& s : gens_) gens.push_back(gi * s * g);
  GroupOptions opts;
  opts.known_order = order_;
  for (Point b : base_) opts.base_prefix.push_back(g[b]);
  return generate(degree_, std::move(gens), opts);
}

PermGroup PermGroup::closure_with(const std::vector<Permutation>& extra) const {
  std::vector<Permutation> gens = gens_;
  gens.insert(gens.end(), extra.begin(), extra.end());
  GroupOptions opts;
  opts.base_prefix = base_;
  return generate(degree_, std::move(gens), opts);
}

std::vector<Permutation> PermGroup::random_elements(std::size_t count, std::uint64_t seed) const {
  std::vector<Permutation> out;
  ProductReplacement pr(gens_, degree_, seed);
  for (std::size_t i = 0; i < count; ++i) out.push_back(pr.next());
  return out;
}

std::vector<Point> minimal_block_system(const PermGroup& g, Point a, Point b) {
  const std::size_t n = g.degree();
  UnionFind uf(n);
  std::deque<std::pair<Point, Point>> queue;
  if (uf.unite(a, b)) queue.emplace_back(a, b);
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    for (const auto& s : g.generators()) {
      Point u = uf.find(s[x]), v = uf.find(s[y]);
      if (u != v) {
        uf.unite(u, v);
        queue.emplace_back(u, v);
      }
    }
  }
  std::vector<Point> label(n);
  for (Point x = 0; x < n; ++x) label[x] = uf.find(x);
  return label;
}

std::size_t pair_orbit_count(const PermGroup& g) {
  const std::size_t n = g.degree();
  UnionFind uf(n * n);
  std::size_t count = n * n;
  for (const auto& s : g.generators())
    for (Point x = 0; x < n; ++x)
      for (Point y = 0; y < n; ++y)
        if (uf.unite(static_cast<Point>(x * n + y), static_cast<Point>(s[x] * n + s[y]))) --count;
  return count;
}

}  // namespace twoclosed
