#include "twoclosed/graphauto.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "twoclosed/errors.hpp"

namespace twoclosed {

ColoredDigraph ColoredDigraph::from_dense(std::size_t n, std::vector<std::uint32_t> pair_colors,
                                          std::vector<std::uint32_t> vertex_colors) {
  if (pair_colors.size() != n * n) throw std::invalid_argument("ColoredDigraph: matrix size mismatch");
  if (vertex_colors.empty()) vertex_colors.assign(n, 0);
  if (vertex_colors.size() != n) throw std::invalid_argument("ColoredDigraph: vertex colour count mismatch");
  ColoredDigraph g;
  g.n_ = n;
  g.m_ = std::move(pair_colors);
  g.vcol_ = std::move(vertex_colors);
  return g;
}

ColoredDigraph ColoredDigraph::from_arcs(std::size_t n, const std::vector<std::pair<Point, Point>>& arcs,
                                         const std::vector<std::uint32_t>& arc_colors,
                                         std::vector<std::uint32_t> vertex_colors) {
  if (!arc_colors.empty() && arc_colors.size() != arcs.size())
    throw ValidationError("ColoredDigraph: arc colour count mismatch");
  std::vector<std::uint32_t> m(n * n, 0);
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    auto [v, w] = arcs[k];
    if (v >= n || w >= n) throw ValidationError("ColoredDigraph: arc endpoint out of range");
    std::uint32_t c = arc_colors.empty() ? 1 : arc_colors[k];
    if (c == 0) throw ValidationError("ColoredDigraph: arc colours must be positive");
    if (m[v * n + w] != 0) throw ValidationError("ColoredDigraph: duplicate arc");
    m[v * n + w] = c;
  }
  return from_dense(n, std::move(m), std::move(vertex_colors));
}

ColoredDigraph ColoredDigraph::from_digraph(const Digraph& d, std::vector<std::uint32_t> vertex_colors) {
  return from_arcs(d.n, d.arcs, {}, std::move(vertex_colors));
}

bool ColoredDigraph::is_automorphism(const Permutation& g) const {
  if (g.degree() != n_) return false;
  for (Point v = 0; v < n_; ++v)
    if (vcol_[g[v]] != vcol_[v]) return false;
  for (Point v = 0; v < n_; ++v) {
    const std::uint32_t* row = &m_[v * n_];
    const std::uint32_t* img = &m_[g[v] * n_];
    for (Point w = 0; w < n_; ++w)
      if (img[g[w]] != row[w]) return false;
  }
  return true;
}

ColoredDigraph ColoredDigraph::relabel(const Permutation& g) const {
  ColoredDigraph r;
  r.n_ = n_;
  r.vcol_.assign(n_, 0);
  r.m_.assign(n_ * n_, 0);
  for (Point v = 0; v < n_; ++v) {
    r.vcol_[g[v]] = vcol_[v];
    for (Point w = 0; w < n_; ++w) r.m_[g[v] * n_ + g[w]] = m_[v * n_ + w];
  }
  return r;
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) { return splitmix(h ^ splitmix(v)); }

// Ordered partition of the vertices into cells. A cell is named by the
// position of its first element.
struct Partition {
  std::vector<Point> elem;
  std::vector<std::uint32_t> pos;
  std::vector<std::uint32_t> cell;  // vertex -> cell start
  std::vector<std::uint32_t> end;   // cell start -> one past its last position
  std::size_t cells = 0;

  std::size_t size() const { return elem.size(); }
  bool discrete() const { return cells == elem.size(); }

  std::uint32_t target_cell() const {
    std::uint32_t best = 0, best_len = UINT32_MAX;
    for (std::uint32_t c = 0; c < elem.size(); c = end[c]) {
      std::uint32_t len = end[c] - c;
      if (len > 1 && len < best_len) {
        best = c;
        best_len = len;
      }
    }
    return best;
  }

  std::vector<Point> cell_members(std::uint32_t c) const {
    std::vector<Point> r(elem.begin() + c, elem.begin() + end[c]);
    std::sort(r.begin(), r.end());
    return r;
  }
};

class Refiner {
 public:
  explicit Refiner(const ColoredDigraph& g) : g_(g), n_(g.n()), key_(g.n(), 0) {
    // Hash of the colour pair (c(v,w), c(w,v)) per ordered pair.
    hk_.resize(n_ * n_);
    const auto& m = g.matrix();
    for (std::size_t v = 0; v < n_; ++v)
      for (std::size_t w = 0; w < n_; ++w) {
        std::uint64_t a = m[v * n_ + w], b = m[w * n_ + v];
        hk_[v * n_ + w] = static_cast<std::uint32_t>(splitmix((a << 32) | b) >> 32);
      }
  }

  // Unit partition split by vertex colour, refined to equitability.
  Partition initial(std::uint64_t& trace) {
    Partition p;
    p.elem.resize(n_);
    std::iota(p.elem.begin(), p.elem.end(), Point{0});
    std::stable_sort(p.elem.begin(), p.elem.end(),
                     [&](Point a, Point b) { return g_.vertex_color(a) < g_.vertex_color(b); });
    p.pos.resize(n_);
    p.cell.resize(n_);
    p.end.assign(n_, 0);
    std::vector<std::uint32_t> starts;
    for (std::uint32_t i = 0; i < n_; ++i) {
      p.pos[p.elem[i]] = i;
      if (i == 0 || g_.vertex_color(p.elem[i]) != g_.vertex_color(p.elem[i - 1])) starts.push_back(i);
    }
    for (std::size_t k = 0; k < starts.size(); ++k) {
      std::uint32_t e = k + 1 < starts.size() ? starts[k + 1] : static_cast<std::uint32_t>(n_);
      p.end[starts[k]] = e;
      for (std::uint32_t i = starts[k]; i < e; ++i) p.cell[p.elem[i]] = starts[k];
    }
    p.cells = starts.size();
    trace = mix(0, p.cells);
    for (auto s : starts) trace = mix(trace, p.end[s] - s);
    refine(p, starts, trace);
    return p;
  }

  // Individualizes v and refines; returns the trace of this step.
  std::uint64_t individualize(Partition& p, Point v) {
    std::uint32_t c = p.cell[v];
    std::uint32_t e = p.end[c];
    std::uint32_t at = p.pos[v];
    std::swap(p.elem[c], p.elem[at]);
    p.pos[p.elem[at]] = at;
    p.pos[v] = c;
    p.end[c] = c + 1;
    p.end[c + 1] = e;
    for (std::uint32_t i = c + 1; i < e; ++i) p.cell[p.elem[i]] = c + 1;
    ++p.cells;
    std::uint64_t trace = mix(c, e - c);
    refine(p, {c}, trace);
    return trace;
  }

 private:
  void refine(Partition& p, const std::vector<std::uint32_t>& splitters, std::uint64_t& trace) {
    std::vector<char> queued(n_, 0);
    std::vector<std::uint32_t> queue;
    std::size_t head = 0;
    for (auto s : splitters) {
      queue.push_back(s);
      queued[s] = 1;
    }
    std::vector<Point> w;
    std::vector<std::pair<std::uint64_t, Point>> buf;
    while (head < queue.size() && !p.discrete()) {
      std::uint32_t s = queue[head++];
      queued[s] = 0;
      w.assign(p.elem.begin() + s, p.elem.begin() + p.end[s]);
      std::sort(w.begin(), w.end());

      for (std::uint32_t c = 0; c < n_; c = p.end[c]) {
        if (p.end[c] - c == 1) continue;
        for (std::uint32_t i = c; i < p.end[c]; ++i) {
          Point v = p.elem[i];
          const std::uint32_t* row = &hk_[v * n_];
          std::uint64_t k = 0;
          for (Point x : w) k += row[x];
          key_[v] = k;
        }
      }

      for (std::uint32_t c = 0; c < n_;) {
        std::uint32_t e = p.end[c];
        if (e - c == 1) {
          c = e;
          continue;
        }
        bool uniform = true;
        for (std::uint32_t i = c + 1; i < e && uniform; ++i) uniform = key_[p.elem[i]] == key_[p.elem[c]];
        if (uniform) {
          c = e;
          continue;
        }
        buf.clear();
        for (std::uint32_t i = c; i < e; ++i) buf.emplace_back(key_[p.elem[i]], p.elem[i]);
        std::sort(buf.begin(), buf.end());
        std::vector<std::uint32_t> frag;
        for (std::uint32_t i = 0; i < buf.size(); ++i) {
          p.elem[c + i] = buf[i].second;
          p.pos[buf[i].second] = c + i;
          if (i == 0 || buf[i].first != buf[i - 1].first) frag.push_back(c + i);
        }
        trace = mix(trace, c);
        std::uint32_t largest = frag[0], largest_len = 0;
        for (std::size_t f = 0; f < frag.size(); ++f) {
          std::uint32_t fs = frag[f], fe = f + 1 < frag.size() ? frag[f + 1] : e;
          p.end[fs] = fe;
          for (std::uint32_t i = fs; i < fe; ++i) p.cell[p.elem[i]] = fs;
          trace = mix(trace, mix(fe - fs, key_[p.elem[fs]]));
          if (fe - fs > largest_len) {
            largest = fs;
            largest_len = fe - fs;
          }
        }
        p.cells += frag.size() - 1;
        bool was_queued = queued[c];
        for (auto fs : frag) {
          if (queued[fs]) continue;
          if (!was_queued && fs == largest) continue;
          queued[fs] = 1;
          queue.push_back(fs);
        }
        c = e;
      }
      trace = mix(trace, p.cells);
    }
  }

  const ColoredDigraph& g_;
  std::size_t n_;
  std::vector<std::uint32_t> hk_;
  std::vector<std::uint64_t> key_;
};

Permutation leaf_map(const Partition& from, const Partition& to) {
  std::vector<Point> im(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) im[from.elem[i]] = to.elem[i];
  return Permutation(std::move(im));
}

// Orbit labels (least point) of the group generated by gens.
std::vector<Point> orbit_labels(std::size_t n, const std::vector<const Permutation*>& gens) {
  std::vector<Point> parent(n);
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto* g : gens)
    for (Point x = 0; x < n; ++x) {
      Point a = find(x), b = find((*g)[x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  for (Point x = 0; x < n; ++x) parent[x] = find(x);
  return parent;
}

struct PathNode {
  Partition part;
  std::uint64_t trace = 0;
};

class AutSearch {
 public:
  AutSearch(const ColoredDigraph& g, SearchStats* stats) : g_(g), n_(g.n()), ref_(g), stats_(stats) {}

  PermGroup run() {
    PathNode root;
    root.part = ref_.initial(root.trace);
    path_.push_back(std::move(root));
    count_node();
    while (!path_.back().part.discrete()) {
      const Partition& p = path_.back().part;
      std::uint32_t tc = p.target_cell();
      auto members = p.cell_members(tc);
      PathNode child;
      child.part = p;
      child.trace = ref_.individualize(child.part, members[0]);
      cells_.push_back(std::move(members));
      fixed_.push_back(cells_.back()[0]);
      path_.push_back(std::move(child));
      count_node();
    }
    if (stats_) ++stats_->leaves;

    Order order = 1;
    for (std::size_t k = fixed_.size(); k-- > 0;) {
      std::vector<const Permutation*> gptr;
      for (const auto& s : gens_) gptr.push_back(&s);
      auto lab = orbit_labels(n_, gptr);
      for (Point c : cells_[k]) {
        if (lab[c] == lab[fixed_[k]]) continue;
        PathNode child;
        child.part = path_[k].part;
        child.trace = ref_.individualize(child.part, c);
        count_node();
        if (child.trace != path_[k + 1].trace || child.part.cells != path_[k + 1].part.cells) continue;
        std::vector<Point> prefix(fixed_.begin(), fixed_.begin() + static_cast<std::ptrdiff_t>(k));
        prefix.push_back(c);
        if (auto found = search(child.part, k + 1, prefix)) {
          gens_.push_back(std::move(*found));
          if (stats_) ++stats_->generators;
          gptr.clear();
          for (const auto& s : gens_) gptr.push_back(&s);
          lab = orbit_labels(n_, gptr);
        }
      }
      std::size_t orbit = 0;
      for (Point x = 0; x < n_; ++x) orbit += lab[x] == lab[fixed_[k]];
      order *= orbit;
    }

    GroupOptions opts;
    opts.known_order = order;
    opts.base_prefix = fixed_;
    return PermGroup::generate(n_, gens_, opts);
  }

  const std::vector<Point>& first_path() const { return fixed_; }

 private:
  void count_node() {
    if (stats_) ++stats_->nodes;
  }

  // Looks below a node at the given depth for a leaf equivalent to the first
  // leaf. `prefix` lists the vertices individualized on the way down.
  std::optional<Permutation> search(const Partition& p, std::size_t depth, std::vector<Point>& prefix) {
    if (p.discrete()) {
      if (stats_) ++stats_->leaves;
      if (depth != path_.size() - 1) return std::nullopt;
      Permutation g = leaf_map(path_.back().part, p);
      if (g_.is_automorphism(g)) return g;
      return std::nullopt;
    }
    if (depth + 1 >= path_.size()) return std::nullopt;
    std::uint32_t tc = p.target_cell();
    auto members = p.cell_members(tc);

    std::vector<const Permutation*> fixing;
    for (const auto& s : gens_)
      if (std::all_of(prefix.begin(), prefix.end(), [&](Point x) { return s[x] == x; })) fixing.push_back(&s);
    std::vector<Point> lab;
    if (!fixing.empty()) lab = orbit_labels(n_, fixing);
    std::vector<Point> failed;

    for (Point x : members) {
      if (!lab.empty() &&
          std::any_of(failed.begin(), failed.end(), [&](Point f) { return lab[f] == lab[x]; }))
        continue;
      Partition child = p;
      std::uint64_t t = ref_.individualize(child, x);
      count_node();
      if (t != path_[depth + 1].trace || child.cells != path_[depth + 1].part.cells) {
        failed.push_back(x);
        continue;
      }
      prefix.push_back(x);
      auto found = search(child, depth + 1, prefix);
      prefix.pop_back();
      if (found) return found;
      failed.push_back(x);
    }
    return std::nullopt;
  }

  const ColoredDigraph& g_;
  std::size_t n_;
  Refiner ref_;
  SearchStats* stats_;
  std::vector<PathNode> path_;
  std::vector<std::vector<Point>> cells_;
  std::vector<Point> fixed_;
  std::vector<Permutation> gens_;
};

// Lexicographic comparison of relabelled digraphs given by two discrete
// partitions.
int compare_leaves(const ColoredDigraph& g, const Partition& a, const Partition& b) {
  const std::size_t n = g.n();
  for (std::size_t i = 0; i < n; ++i) {
    auto ca = g.vertex_color(a.elem[i]), cb = g.vertex_color(b.elem[i]);
    if (ca != cb) return ca < cb ? -1 : 1;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto ca = g.arc_color(a.elem[i], a.elem[j]), cb = g.arc_color(b.elem[i], b.elem[j]);
      if (ca != cb) return ca < cb ? -1 : 1;
    }
  return 0;
}

class CanonSearch {
 public:
  CanonSearch(const ColoredDigraph& g, SearchStats* stats) : g_(g), n_(g.n()), ref_(g), stats_(stats) {}

  Partition run(const PermGroup& aut) {
    std::uint64_t t0 = 0;
    Partition root = ref_.initial(t0);
    std::vector<std::uint64_t> traces{t0};
    std::vector<Point> prefix;
    if (stats_) ++stats_->nodes;
    dfs(root, traces, aut, prefix);
    return best_;
  }

 private:
  // Sign of the current trace sequence against the best one over their
  // common length.
  int compare_traces(const std::vector<std::uint64_t>& t) const {
    for (std::size_t i = 0; i < t.size() && i < best_traces_.size(); ++i)
      if (t[i] != best_traces_[i]) return t[i] < best_traces_[i] ? -1 : 1;
    return 0;
  }

  void dfs(const Partition& p, std::vector<std::uint64_t>& traces, const PermGroup& stab,
           std::vector<Point>& prefix) {
    if (have_best_) {
      int c = compare_traces(traces);
      if (c > 0) return;
      if (c == 0 && p.discrete() && traces.size() > best_traces_.size()) return;
    }
    if (p.discrete()) {
      if (stats_) ++stats_->leaves;
      int c = have_best_ ? compare_traces(traces) : -1;
      if (c == 0) {
        if (traces.size() != best_traces_.size())
          c = traces.size() < best_traces_.size() ? -1 : 1;
        else
          c = compare_leaves(g_, p, best_);
      }
      if (c < 0) {
        best_ = p;
        best_traces_ = traces;
        have_best_ = true;
      }
      return;
    }
    auto members = p.cell_members(p.target_cell());
    std::vector<const Permutation*> gens;
    for (const auto& s : stab.generators()) gens.push_back(&s);
    auto lab = orbit_labels(n_, gens);
    std::vector<bool> seen_orbit(n_, false);
    for (Point x : members) {
      if (seen_orbit[lab[x]]) continue;
      seen_orbit[lab[x]] = true;
      Partition child = p;
      traces.push_back(ref_.individualize(child, x));
      if (stats_) ++stats_->nodes;
      PermGroup sub = child.discrete() ? PermGroup() : stab.stabilizer(x);
      prefix.push_back(x);
      dfs(child, traces, sub, prefix);
      prefix.pop_back();
      traces.pop_back();
    }
  }

  const ColoredDigraph& g_;
  std::size_t n_;
  Refiner ref_;
  SearchStats* stats_;
  Partition best_;
  std::vector<std::uint64_t> best_traces_;
  bool have_best_ = false;
};

}  // namespace

PermGroup automorphism_group(const ColoredDigraph& g, SearchStats* stats) {
  if (g.n() == 0) throw std::invalid_argument("automorphism_group: empty digraph");
  AutSearch search(g, stats);
  return search.run();
}

CanonicalForm canonical_form(const ColoredDigraph& g, const PermGroup& aut, SearchStats* stats) {
  CanonSearch search(g, stats);
  Partition leaf = search.run(aut);
  const std::size_t n = g.n();
  CanonicalForm out;
  std::vector<Point> lab(n);
  for (std::size_t i = 0; i < n; ++i) lab[leaf.elem[i]] = static_cast<Point>(i);
  out.labeling = Permutation(std::move(lab));
  out.certificate.reserve(n + n * n);
  for (std::size_t i = 0; i < n; ++i) out.certificate.push_back(g.vertex_color(leaf.elem[i]));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.certificate.push_back(g.arc_color(leaf.elem[i], leaf.elem[j]));
  return out;
}

CanonicalForm canonical_form(const ColoredDigraph& g, SearchStats* stats) {
  return canonical_form(g, automorphism_group(g, stats), stats);
}

IsomorphismResult is_isomorphic(const ColoredDigraph& a, const ColoredDigraph& b) {
  IsomorphismResult r;
  if (a.n() != b.n()) return r;
  auto ca = canonical_form(a), cb = canonical_form(b);
  if (ca.certificate != cb.certificate) return r;
  Permutation w = ca.labeling * cb.labeling.inverse();
  if (a.relabel(w).matrix() != b.matrix() || a.relabel(w).vertex_colors() != b.vertex_colors())
    throw std::logic_error("is_isomorphic: witness failed verification");
  r.isomorphic = true;
  r.witness = std::move(w);
  return r;
}

}  // namespace twoclosed
