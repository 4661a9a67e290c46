#include "twoclosed/orbitals.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "twoclosed/errors.hpp"

namespace twoclosed {

OrbitalDecomposition decompose(const PermGroup& g, Point alpha) {
  if (alpha >= g.degree()) throw std::out_of_range("decompose: base point out of range");
  if (!g.is_transitive()) throw PreconditionError("decompose: group is not transitive");
  OrbitalDecomposition dec;
  dec.degree = g.degree();
  dec.base_point = alpha;
  dec.suborbits = g.stabilizer(alpha).orbits();
  std::sort(dec.suborbits.begin(), dec.suborbits.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  auto it = std::find_if(dec.suborbits.begin(), dec.suborbits.end(),
                         [&](const auto& s) { return s.size() == 1 && s[0] == alpha; });
  std::rotate(dec.suborbits.begin(), it, it + 1);

  dec.label.assign(dec.degree, 0);
  for (std::size_t i = 0; i < dec.suborbits.size(); ++i) {
    dec.subdegrees.push_back(dec.suborbits[i].size());
    for (Point x : dec.suborbits[i]) dec.label[x] = static_cast<std::uint32_t>(i);
  }
  for (const auto& sub : dec.suborbits) {
    Permutation h = element_mapping(g, sub.front(), alpha);
    dec.pairing.push_back(dec.label[h[alpha]]);
  }
  return dec;
}

Permutation element_mapping(const PermGroup& g, Point from, Point to) {
  const std::size_t n = g.degree();
  const auto& gens = g.generators();
  std::vector<std::int32_t> via(n, -1);
  std::vector<Point> queue{from};
  via[from] = -2;
  for (std::size_t h = 0; h < queue.size() && via[to] == -1; ++h)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Point y = gens[k][queue[h]];
      if (via[y] == -1) {
        via[y] = static_cast<std::int32_t>(k);
        queue.push_back(y);
      }
    }
  if (via[to] == -1) throw std::invalid_argument("element_mapping: points lie in different orbits");
  std::vector<std::size_t> word;
  for (Point y = to; y != from;) {
    auto k = static_cast<std::size_t>(via[y]);
    word.push_back(k);
    y = gens[k].inverse()[y];
  }
  Permutation r = Permutation::identity(n);
  for (auto it = word.rbegin(); it != word.rend(); ++it) r *= gens[*it];
  return r;
}

std::vector<std::uint32_t> pair_coloring(const PermGroup& g, const OrbitalDecomposition& dec) {
  const std::size_t n = g.degree();
  const auto& gens = g.generators();
  std::vector<Permutation> inv;
  for (const auto& s : gens) inv.push_back(s.inverse());

  // Row x is label composed with t_x^-1, t_x mapping the base point to x;
  // row(x^s)[y] = row(x)[y^(s^-1)].
  std::vector<std::uint32_t> colors(n * n);
  std::vector<bool> done(n, false);
  const Point a = dec.base_point;
  std::copy(dec.label.begin(), dec.label.end(), colors.begin() + static_cast<std::ptrdiff_t>(a * n));
  done[a] = true;
  std::vector<Point> queue{a};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    Point x = queue[h];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Point z = gens[k][x];
      if (done[z]) continue;
      done[z] = true;
      const std::uint32_t* src = &colors[x * n];
      std::uint32_t* dst = &colors[z * n];
      for (Point y = 0; y < n; ++y) dst[y] = src[inv[k][y]];
      queue.push_back(z);
    }
  }
  return colors;
}

Digraph digraph_from_coloring(std::size_t n, const std::vector<std::uint32_t>& colors,
                              const std::vector<std::size_t>& indices) {
  std::uint32_t top = 0;
  for (auto c : colors) top = std::max(top, c);
  std::vector<bool> in(top + 1, false);
  for (auto i : indices)
    if (i <= top) in[i] = true;
  Digraph d;
  d.n = n;
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y)
      if (in[colors[x * n + y]]) d.arcs.emplace_back(x, y);
  d.is_graph = true;
  for (const auto& [x, y] : d.arcs)
    if (!in[colors[y * n + x]]) {
      d.is_graph = false;
      break;
    }
  return d;
}

Digraph generalized_orbital_digraph(const PermGroup& g, const OrbitalDecomposition& dec,
                                    const std::vector<std::size_t>& indices) {
  if (indices.empty()) throw std::out_of_range("generalized_orbital_digraph: empty index set");
  for (auto i : indices)
    if (i == 0 || i >= dec.rank()) throw std::out_of_range("orbital index out of range");
  return digraph_from_coloring(g.degree(), pair_coloring(g, dec), indices);
}

Digraph orbital_digraph(const PermGroup& g, const OrbitalDecomposition& dec, std::size_t i) {
  return generalized_orbital_digraph(g, dec, {i});
}

bool self_paired_check(const OrbitalDecomposition& dec, std::size_t i) {
  if (i >= dec.rank()) throw std::out_of_range("self_paired_check: index out of range");
  return dec.pairing[i] == i;
}

std::string to_edge_list(const Digraph& d) {
  std::ostringstream out;
  out << d.n << ' ' << d.arcs.size() << '\n';
  for (const auto& [x, y] : d.arcs) out << x << ' ' << y << '\n';
  return out.str();
}

std::string to_dimacs(const Digraph& d) {
  std::ostringstream out;
  out << "p edge " << d.n << ' ' << d.arcs.size() << '\n';
  for (const auto& [x, y] : d.arcs) out << "a " << x + 1 << ' ' << y + 1 << '\n';
  return out.str();
}

Digraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::size_t n = 0, m = 0;
  if (!(in >> n >> m)) throw ValidationError("edge list: missing \"n m\" header");
  Digraph d;
  d.n = n;
  for (std::size_t k = 0; k < m; ++k) {
    long long x, y;
    if (!(in >> x >> y)) throw ValidationError("edge list: expected " + std::to_string(m) + " arcs");
    if (x < 0 || y < 0 || static_cast<std::size_t>(x) >= n || static_cast<std::size_t>(y) >= n)
      throw ValidationError("edge list: vertex out of range");
    d.arcs.emplace_back(static_cast<Point>(x), static_cast<Point>(y));
  }
  std::string extra;
  if (in >> extra) throw ValidationError("edge list: trailing data");
  std::sort(d.arcs.begin(), d.arcs.end());
  if (std::adjacent_find(d.arcs.begin(), d.arcs.end()) != d.arcs.end())
    throw ValidationError("edge list: duplicate arc");
  d.is_graph = std::all_of(d.arcs.begin(), d.arcs.end(), [&](const auto& a) {
    return std::binary_search(d.arcs.begin(), d.arcs.end(), std::make_pair(a.second, a.first));
  });
  return d;
}

std::vector<std::uint32_t> brute_force_pair_orbits(const PermGroup& g) {
  const std::size_t n = g.degree();
  std::vector<std::uint32_t> label(n * n, UINT32_MAX);
  std::uint32_t next = 0;
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < n * n; ++start) {
    if (label[start] != UINT32_MAX) continue;
    label[start] = next;
    stack.assign(1, start);
    while (!stack.empty()) {
      std::size_t c = stack.back();
      stack.pop_back();
      for (const auto& s : g.generators()) {
        std::size_t d = s[static_cast<Point>(c / n)] * n + s[static_cast<Point>(c % n)];
        if (label[d] == UINT32_MAX) {
          label[d] = next;
          stack.push_back(d);
        }
      }
    }
    ++next;
  }
  return label;
}

}  // namespace twoclosed
