#include "twoclosed/closure.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "twoclosed/errors.hpp"
#include "twoclosed/graphauto.hpp"

namespace twoclosed {

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& f) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(threads, count); ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < count;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

PermGroup orbital_union_autgroup(std::size_t n, const std::vector<std::uint32_t>& colors,
                                 const std::vector<std::size_t>& indices) {
  std::uint32_t top = 0;
  for (auto c : colors) top = std::max(top, c);
  std::vector<std::uint8_t> in(top + 1, 0);
  for (auto i : indices) in.at(i) = 1;
  std::vector<std::uint32_t> m(colors.size());
  for (std::size_t k = 0; k < colors.size(); ++k) m[k] = in[colors[k]];
  return automorphism_group(ColoredDigraph::from_dense(n, std::move(m)));
}

PermGroup two_closure(const PermGroup& g) {
  auto dec = decompose(g);
  return automorphism_group(ColoredDigraph::from_dense(g.degree(), pair_coloring(g, dec)));
}

bool is_two_closed(const PermGroup& g) { return two_closure(g).order() == g.order(); }

namespace {

Order factorial(std::size_t n) {
  Order r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

AutgroupResult is_digraph_autgroup(const PermGroup& g, AutgroupMode mode, unsigned threads) {
  auto dec = decompose(g);
  const std::size_t r = dec.rank();
  if (mode == AutgroupMode::Rank4Shortcut && r != 4)
    throw PreconditionError("rank-4 shortcut requested for a group of rank " + std::to_string(r));
  if (mode == AutgroupMode::Exhaustive && r > 21)
    throw PreconditionError("exhaustive mode: too many orbitals (rank " + std::to_string(r) + ")");

  const std::size_t n = g.degree();
  auto colors = pair_coloring(g, dec);
  AutgroupResult res;
  res.two_closed = automorphism_group(ColoredDigraph::from_dense(n, colors)).order() == g.order();
  if (!res.two_closed) return res;

  std::vector<std::vector<std::size_t>> sets;
  if (mode == AutgroupMode::Rank4Shortcut) {
    for (std::size_t i = 1; i < r; ++i) sets.push_back({i});
  } else {
    // Proper non-empty subsets of {1..r-1} up to complement: those without
    // the last index.
    const std::size_t k = r - 1;
    for (std::uint64_t mask = 1; k > 1 && mask < (std::uint64_t{1} << (k - 1)); ++mask) {
      std::vector<std::size_t> s;
      for (std::size_t b = 0; b < k; ++b)
        if (mask >> b & 1) s.push_back(b + 1);
      sets.push_back(std::move(s));
    }
    std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
  }

  std::vector<Order> orders(sets.size());
  parallel_for(sets.size(), threads, [&](std::size_t i) { orders[i] = orbital_union_autgroup(n, colors, sets[i]).order(); });
  for (std::size_t i = 0; i < sets.size(); ++i) {
    res.tested.emplace_back(sets[i], orders[i]);
    if (!res.witness && orders[i] == g.order()) res.witness = sets[i];
  }
  if (mode == AutgroupMode::Exhaustive && r > 1) {
    std::vector<std::size_t> all;
    for (std::size_t i = 1; i < r; ++i) all.push_back(i);
    Order full = factorial(n);
    res.tested.emplace_back(all, full);
    if (!res.witness && full == g.order()) res.witness = all;
  }
  res.is_autgroup = res.witness.has_value();
  return res;
}

ClosureReport closure_report(const PermGroup& g, const ClosureOptions& opts) {
  auto dec = decompose(g);
  const std::size_t n = g.degree();
  auto colors = pair_coloring(g, dec);
  ClosureReport rep;
  rep.input_order = g.order();
  rep.rank = dec.rank();
  rep.subdegrees = dec.subdegrees;

  PermGroup closure = automorphism_group(ColoredDigraph::from_dense(n, colors));
  rep.closure_order = closure.order();
  rep.is_two_closed = rep.closure_order == rep.input_order;

  std::vector<PermGroup> auts(rep.rank > 0 ? rep.rank - 1 : 0);
  parallel_for(auts.size(), opts.threads, [&](std::size_t i) { auts[i] = orbital_union_autgroup(n, colors, {i + 1}); });
  rep.closure_in_orbital_auts = true;
  for (std::size_t i = 0; i < auts.size(); ++i) {
    rep.orbital_aut_orders.push_back(auts[i].order());
    for (const auto& s : closure.generators())
      rep.closure_in_orbital_auts = rep.closure_in_orbital_auts && auts[i].contains(s);
  }

  if (opts.check_autgroup) {
    rep.mode = opts.mode;
    if (!rep.is_two_closed) {
      rep.digraph_autgroup = false;
    } else if (opts.mode == AutgroupMode::Rank4Shortcut) {
      if (rep.rank != 4) throw PreconditionError("rank-4 shortcut requested for a group of rank " + std::to_string(rep.rank));
      rep.digraph_autgroup = false;
      for (std::size_t i = 0; i < auts.size(); ++i)
        if (rep.orbital_aut_orders[i] == rep.input_order) {
          rep.digraph_autgroup = true;
          rep.witness = std::vector<std::size_t>{i + 1};
          break;
        }
    } else {
      auto res = is_digraph_autgroup(g, AutgroupMode::Exhaustive, opts.threads);
      rep.digraph_autgroup = res.is_autgroup;
      rep.witness = res.witness;
    }
  }
  return rep;
}

nlohmann::json to_json(const ClosureReport& r) {
  nlohmann::json j;
  j["input_order"] = r.input_order.str();
  j["closure_order"] = r.closure_order.str();
  j["is_two_closed"] = r.is_two_closed;
  j["rank"] = r.rank;
  j["subdegrees"] = r.subdegrees;
  std::vector<std::string> orders;
  for (const auto& o : r.orbital_aut_orders) orders.push_back(o.str());
  j["orbital_aut_orders"] = orders;
  j["closure_in_orbital_auts"] = r.closure_in_orbital_auts;
  if (r.mode) j["mode"] = *r.mode == AutgroupMode::Rank4Shortcut ? "rank4" : "exhaustive";
  if (r.digraph_autgroup) j["digraph_autgroup"] = *r.digraph_autgroup;
  j["digraph_autgroup_witness"] = r.witness ? nlohmann::json(*r.witness) : nlohmann::json(nullptr);
  return j;
}

}  // namespace twoclosed
