#include "twoclosed/tables.hpp"

#include <algorithm>
#include <cmath>

#include "twoclosed/errors.hpp"
#include "twoclosed/gfield.hpp"

namespace twoclosed {

namespace {

using u128 = unsigned __int128;
constexpr std::uint64_t kMaxDegree = std::uint64_t{1} << 62;

std::uint64_t power(std::uint64_t b, unsigned e) {
  u128 r = 1;
  for (unsigned i = 0; i < e; ++i) {
    r *= b;
    if (r > kMaxDegree) throw ValidationError("class A: degree too large");
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t narrow(u128 x) {
  if (x > kMaxDegree) throw ValidationError("class A: subdegree too large");
  return static_cast<std::uint64_t>(x);
}

// (p, k) with q = p^k, or (0, 0).
std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q) {
  if (q < 2) return {0, 0};
  std::uint64_t p = q;
  for (std::uint64_t f = 2; f * f <= q; ++f)
    if (q % f == 0) {
      p = f;
      break;
    }
  unsigned k = 0;
  for (std::uint64_t x = q; x > 1; x /= p, ++k)
    if (x % p) return {0, 0};
  return {p, k};
}

std::uint64_t need_prime_power(const Table1Params& pr, const char* row) {
  auto [p, k] = prime_power(pr.q);
  if (p == 0) throw ValidationError(std::string("class A ") + row + ": q = " + std::to_string(pr.q) + " is not a prime power");
  return p;
}

SubdegreePair make(Table1Type t, std::uint64_t degree, u128 m1, u128 m2, nlohmann::json params) {
  return SubdegreePair{to_string(t), degree, narrow(m1), narrow(m2), std::move(params)};
}

SubdegreePair a1_pair(std::uint64_t p, unsigned d, std::uint64_t n, std::uint64_t v) {
  return SubdegreePair{"A1", n, (n - 1) / v, narrow(u128(v - 1) * ((n - 1) / v)),
                       {{"p", p}, {"d", d}, {"v", v}}};
}

// m1, m2 for the A6 / A7 shapes: plus = (q^(a-1)+1)(q^a-1), q^(a-1)(q-1)(q^a-1).
std::pair<u128, u128> unitary_orthogonal(std::uint64_t q, unsigned a, bool plus) {
  u128 qa = power(q, a), qa1 = power(q, a - 1);
  if (plus) return {(qa1 + 1) * (qa - 1), qa1 * (q - 1) * (qa - 1)};
  return {(qa1 - 1) * (qa + 1), qa1 * (q - 1) * (qa + 1)};
}

}  // namespace

std::string to_string(Table1Type t) {
  switch (t) {
    case Table1Type::A1: return "A1";
    case Table1Type::A2: return "A2";
    case Table1Type::A3: return "A3";
    case Table1Type::A6: return "A6";
    case Table1Type::A7: return "A7";
    case Table1Type::A8: return "A8";
    case Table1Type::A9: return "A9";
    case Table1Type::A10: return "A10";
    case Table1Type::A11: return "A11";
  }
  return "?";
}

Table1Type parse_table1_type(const std::string& s) {
  if (s == "A4" || s == "A5") return Table1Type::A3;
  for (auto t : table1_types())
    if (to_string(t) == s) return t;
  throw ValidationError("class A: unknown type \"" + s + "\"");
}

std::vector<Table1Type> table1_types() {
  using T = Table1Type;
  return {T::A1, T::A2, T::A3, T::A6, T::A7, T::A8, T::A9, T::A10, T::A11};
}

SubdegreePair table1_subdegrees(Table1Type t, const Table1Params& pr) {
  using T = Table1Type;
  const std::uint64_t q = pr.q;
  switch (t) {
    case T::A1: {
      if (!is_prime(pr.p)) throw ValidationError("class A A1: p must be prime");
      if (pr.d < 1) throw ValidationError("class A A1: d must be positive");
      if (!is_prime(pr.v)) throw ValidationError("class A A1: v must be prime");
      std::uint64_t n = power(pr.p, pr.d);
      if ((n - 1) % pr.v) throw ValidationError("class A A1: v must divide p^d - 1");
      return a1_pair(pr.p, pr.d, n, pr.v);
    }
    case T::A2: {
      if (!is_prime(pr.p)) throw ValidationError("class A A2: p must be prime");
      if (pr.m < 1) throw ValidationError("class A A2: m must be positive");
      u128 pm = power(pr.p, pr.m);
      return make(t, power(pr.p, 2 * pr.m), 2 * (pm - 1), (pm - 1) * (pm - 1), {{"p", pr.p}, {"m", pr.m}});
    }
    case T::A3: {
      need_prime_power(pr, "A3");
      if (pr.m < 2) throw ValidationError("class A A3: m must exceed 1");
      u128 qm = power(q, pr.m), qm1 = power(q, pr.m - 1);
      return make(t, power(q, 2 * pr.m), (q + 1) * (qm - 1), q * (qm - 1) * (qm1 - 1), {{"q", q}, {"m", pr.m}});
    }
    case T::A6: {
      need_prime_power(pr, "A6");
      if (pr.a < 2) throw ValidationError("class A A6: a must exceed 1");
      auto [m1, m2] = unitary_orthogonal(q, pr.a, pr.a % 2 == 0);
      return make(t, power(q, 2 * pr.a), m1, m2, {{"q", q}, {"a", pr.a}});
    }
    case T::A7: {
      need_prime_power(pr, "A7");
      if (pr.a < 2) throw ValidationError("class A A7: a must exceed 1");
      if (pr.eps != 1 && pr.eps != -1) throw ValidationError("class A A7: eps must be +1 or -1");
      auto [m1, m2] = unitary_orthogonal(q, pr.a, pr.eps == 1);
      return make(t, power(q, 2 * pr.a), m1, m2, {{"q", q}, {"a", pr.a}, {"eps", pr.eps}});
    }
    case T::A8: {
      need_prime_power(pr, "A8");
      u128 q2 = power(q, 2), q3 = power(q, 3), q5 = power(q, 5);
      return make(t, power(q, 10), (q5 - 1) * (q2 + 1), q2 * (q5 - 1) * (q3 - 1), {{"q", q}});
    }
    case T::A9: {
      need_prime_power(pr, "A9");
      u128 q3 = power(q, 3), q4 = power(q, 4);
      return make(t, power(q, 8), (q4 - 1) * (q3 + 1), q3 * (q4 - 1) * (q - 1), {{"q", q}});
    }
    case T::A10: {
      need_prime_power(pr, "A10");
      u128 q3 = power(q, 3), q5 = power(q, 5), q8 = power(q, 8);
      return make(t, power(q, 16), (q8 - 1) * (q3 + 1), q3 * (q8 - 1) * (q5 - 1), {{"q", q}});
    }
    case T::A11: {
      auto [p, k] = prime_power(q);
      if (p != 2 || k < 3 || k % 2 == 0) throw ValidationError("class A A11: q must be 2^(2k+1) with k >= 1");
      u128 q2 = power(q, 2);
      return make(t, power(q, 4), (q2 + 1) * (q - 1), q * (q2 + 1) * (q - 1), {{"q", q}});
    }
  }
  throw ValidationError("class A: unknown type");
}

LargerReport check_larger(Table1Type t, const Table1Params& pr) {
  if (t == Table1Type::A1 || t == Table1Type::A2)
    throw PreconditionError("check_larger: only types A3-A11 are covered");
  LargerReport r;
  r.pair = table1_subdegrees(t, pr);
  if (r.pair.degree < 4096) throw PreconditionError("check_larger: degree must be at least 4096");
  r.p = prime_power(pr.q).first;
  r.p_divides_m1 = r.pair.m1 % r.p == 0;
  r.p_divides_m2 = r.pair.m2 % r.p == 0;
  if (pr.q == 2 && (t == Table1Type::A6 || t == Table1Type::A7)) {
    u128 a1 = power(2, pr.a - 1), a = power(2, pr.a);
    r.exception = r.pair.m1 == (a1 + 1) * (a - 1) && r.pair.m2 == a1 * (a - 1) && r.pair.m1 > r.pair.m2;
  }
  r.ok = r.p_divides_m1 != r.p_divides_m2 && r.p_divides_m2 && (r.pair.m1 < r.pair.m2 || r.exception);
  return r;
}

bool SweepReport::ok() const {
  for (const auto& row : rows)
    if (row.sum_failures || row.larger_failures) return false;
  for (const auto& e : exceptional) {
    if (e.tag != "A6" && e.tag != "A7") return false;
    if (e.params.value("q", std::uint64_t{0}) != 2) return false;
  }
  return true;
}

SweepReport sweep_table1(std::uint64_t max_degree, std::uint64_t larger_min) {
  SweepReport rep;
  rep.max_degree = max_degree;
  const std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(max_degree))) + 1;

  std::vector<bool> composite(max_degree + 1, false);
  for (std::uint64_t i = 2; i * i <= max_degree; ++i)
    if (!composite[i])
      for (std::uint64_t j = i * i; j <= max_degree; j += i) composite[j] = true;
  std::vector<std::uint64_t> small_primes;
  for (std::uint64_t i = 2; i <= root && i <= max_degree; ++i)
    if (!composite[i]) small_primes.push_back(i);
  // Prime powers p^k, k >= 2.
  std::vector<std::uint64_t> higher;
  for (auto p : small_primes)
    for (u128 x = u128(p) * p; x <= max_degree; x *= p) higher.push_back(static_cast<std::uint64_t>(x));
  std::sort(higher.begin(), higher.end());

  // A1: every prime power n and every prime v | n - 1, by a segmented
  // factorisation of n - 1.
  SweepRow a1{"A1"};
  const std::uint64_t seg = std::uint64_t{1} << 20;
  std::vector<std::uint64_t> rem(seg);
  for (std::uint64_t lo = 1; lo < max_degree; lo += seg) {
    const std::uint64_t hi = std::min(lo + seg, max_degree);
    for (std::uint64_t x = lo; x < hi; ++x) {
      std::uint64_t n = x + 1;
      bool pp = !composite[n] || std::binary_search(higher.begin(), higher.end(), n);
      rem[x - lo] = pp ? x : 0;
    }
    auto check = [&](std::uint64_t x, std::uint64_t v) {
      auto pair = SubdegreePair{"A1", x + 1, x / v, (v - 1) * (x / v), {}};
      ++a1.instances;
      if (pair.m1 + pair.m2 != x || x % v) ++a1.sum_failures;
    };
    for (auto r : small_primes) {
      for (std::uint64_t x = (lo + r - 1) / r * r; x < hi; x += r) {
        auto& y = rem[x - lo];
        if (y == 0 || y % r) continue;
        check(x, r);
        while (y % r == 0) y /= r;
      }
    }
    for (std::uint64_t x = lo; x < hi; ++x)
      if (rem[x - lo] > 1) check(x, rem[x - lo]);
  }
  rep.rows.push_back(a1);

  std::vector<std::uint64_t> qs;
  for (std::uint64_t q = 2; q <= root; ++q)
    if (prime_power(q).first) qs.push_back(q);

  auto run = [&](Table1Type t, const std::vector<Table1Params>& params) {
    SweepRow row{to_string(t)};
    for (const auto& pr : params) {
      SubdegreePair s;
      try {
        s = table1_subdegrees(t, pr);
      } catch (const ValidationError&) {
        continue;
      }
      if (s.degree > max_degree) continue;
      ++row.instances;
      if (s.m1 + s.m2 != s.degree - 1) ++row.sum_failures;
      if (t != Table1Type::A1 && t != Table1Type::A2 && s.degree >= larger_min && s.degree >= 4096) {
        auto lr = check_larger(t, pr);
        ++row.larger_checked;
        if (!lr.ok) ++row.larger_failures;
        if (lr.exception) ++row.exceptions;
        if (s.m1 > s.m2) rep.exceptional.push_back(s);
      }
    }
    rep.rows.push_back(row);
  };
  auto fits = [&](std::uint64_t b, unsigned e) {
    u128 x = 1;
    for (unsigned i = 0; i < e; ++i) {
      x *= b;
      if (x > max_degree) return false;
    }
    return true;
  };

  std::vector<Table1Params> ps;
  for (auto p : small_primes)
    for (unsigned m = 1; fits(p, 2 * m); ++m) ps.push_back({.p = p, .m = m});
  run(Table1Type::A2, ps);
  ps.clear();
  for (auto q : qs)
    for (unsigned m = 2; fits(q, 2 * m); ++m) ps.push_back({.q = q, .m = m});
  run(Table1Type::A3, ps);
  ps.clear();
  for (auto q : qs)
    for (unsigned a = 2; fits(q, 2 * a); ++a) ps.push_back({.q = q, .a = a});
  run(Table1Type::A6, ps);
  ps.clear();
  for (auto q : qs)
    for (unsigned a = 2; fits(q, 2 * a); ++a)
      for (int eps : {1, -1}) ps.push_back({.q = q, .a = a, .eps = eps});
  run(Table1Type::A7, ps);
  for (auto [t, e] : {std::pair{Table1Type::A8, 10u}, std::pair{Table1Type::A9, 8u}, std::pair{Table1Type::A10, 16u},
                      std::pair{Table1Type::A11, 4u}}) {
    ps.clear();
    for (auto q : qs)
      if (fits(q, e)) ps.push_back({.q = q});
    run(t, ps);
  }
  return rep;
}

std::uint64_t StaticRecord::degree() const { return ipow(p, d); }

const std::vector<StaticRecord>& class_b_records() {
  static const std::vector<StaticRecord> r = [] {
    const std::vector<std::string> r1{"R1_1", "R1_2"};
    auto rec = [](std::vector<std::string> tags, std::uint32_t p, unsigned d,
                  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs, std::string col, unsigned row,
                  std::string note = "") {
      StaticRecord s;
      s.cls = 'B';
      s.tags = std::move(tags);
      s.p = p;
      s.d = d;
      s.pairs = std::move(pairs);
      s.column = std::move(col);
      s.row = row;
      s.note = std::move(note);
      return s;
    };
    const std::string shifted = "printed against ";
    std::vector<StaticRecord> v{
        rec({"3^(1+2)"}, 2, 6, {{27, 36}}, "left", 1),
        rec(r1, 3, 4, {{32, 48}}, "left", 2),
        rec(r1, 7, 2, {{24, 24}}, "left", 3),
        rec(r1, 13, 2, {{72, 96}}, "left", 4),
        rec(r1, 17, 2, {{96, 192}}, "left", 5, shifted + "19^2; degree fixed by the subdegree sum"),
        rec(r1, 19, 2, {{144, 216}}, "left", 6, shifted + "23^2; degree fixed by the subdegree sum"),
        rec(r1, 23, 2, {{264, 264}}, "left", 7, shifted + "3^6; degree fixed by the subdegree sum"),
        rec(r1, 29, 2, {{168, 672}}, "left", 8),
        rec(r1, 31, 2, {{240, 720}}, "right", 1),
        rec(r1, 47, 2, {{1104, 1104}}, "right", 2),
        rec({"R1_2"}, 3, 4, {{32, 48}}, "right", 3),
        rec({"R2_2"}, 3, 4, {}, "right", 4, "16a, 16b with a + b = 5"),
        rec({"R2_2"}, 5, 4, {{240, 384}}, "right", 5),
        rec({"R2_3"}, 5, 4, {{240, 384}}, "right", 6),
        rec({"R2_2"}, 7, 4, {{480, 1920}}, "right", 7),
        rec({"R2_3"}, 3, 8, {{1440, 5120}}, "right", 8),
    };
    v[11].unit = 16;
    v[11].unit_sum = 5;
    return v;
  }();
  return r;
}

const std::vector<StaticRecord>& class_c_records() {
  static const std::vector<StaticRecord> r = [] {
    auto rec = [](std::string tag, std::uint32_t p, unsigned d,
                  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs, std::string col, unsigned row,
                  std::string note = "") {
      StaticRecord s;
      s.cls = 'C';
      s.tags = {std::move(tag)};
      s.p = p;
      s.d = d;
      s.pairs = std::move(pairs);
      s.column = std::move(col);
      s.row = row;
      s.note = std::move(note);
      return s;
    };
    return std::vector<StaticRecord>{
        rec("A5", 3, 4, {{40, 40}}, "left", 1),
        rec("A5", 31, 2, {{360, 600}}, "left", 2),
        rec("A5", 41, 2, {{480, 1200}}, "left", 3),
        rec("A5", 7, 4, {{960, 1440}}, "left", 4),
        rec("A5", 71, 2, {{840, 4200}}, "left", 5),
        rec("A5", 79, 2, {{1560, 4680}}, "left", 6),
        rec("A5", 89, 2, {{2640, 5280}}, "left", 7),
        rec("A6", 2, 6, {{18, 45}}, "left", 8),
        rec("A6", 5, 4, {{144, 480}}, "middle", 1),
        rec("A7", 2, 8, {{45, 210}}, "middle", 2),
        rec("A7", 7, 4, {{720, 1680}}, "middle", 3),
        rec("A9", 2, 8, {{120, 135}}, "middle", 4, "corrected values"),
        rec("A10", 2, 8, {{45, 210}}, "middle", 5),
        rec("L2(17)", 2, 8, {{102, 153}}, "middle", 6),
        rec("L3(4)", 3, 6, {{224, 504}}, "middle", 7),
        rec("U4(2)", 7, 4, {{240, 2160}}, "middle", 8),
        rec("M11", 3, 5, {{22, 220}, {110, 132}}, "right", 1),
        rec("M24", 2, 11, {{276, 1771}, {759, 1288}}, "right", 2),
        rec("Suz", 3, 12, {{65520, 465920}}, "right", 3),
        rec("G2(4)", 3, 12, {{65520, 465920}}, "right", 4),
        rec("J2", 2, 12, {{1575, 2520}}, "right", 5),
        rec("J2", 5, 6, {{7560, 8064}}, "right", 6),
    };
  }();
  return r;
}

bool record_consistent(const StaticRecord& r) {
  const std::uint64_t n1 = r.degree() - 1;
  if (r.pairs.empty()) return r.unit > 0 && r.unit * r.unit_sum == n1;
  return std::all_of(r.pairs.begin(), r.pairs.end(), [&](const auto& pr) { return pr.first + pr.second == n1; });
}

std::vector<SubdegreePair> tables23_lookup(std::uint64_t degree, const std::string& tag) {
  std::vector<SubdegreePair> out;
  bool known = false;
  for (const auto* table : {&class_b_records(), &class_c_records()})
    for (const auto& r : *table) {
      if (r.degree() != degree) continue;
      known = true;
      if (!tag.empty() && std::find(r.tags.begin(), r.tags.end(), tag) == r.tags.end()) continue;
      std::string joined;
      for (const auto& t : r.tags) joined += (joined.empty() ? "" : "|") + t;
      nlohmann::json params{{"class", std::string(1, r.cls)}, {"p", r.p}, {"d", r.d}};
      for (const auto& [a, b] : r.pairs) out.push_back({joined, degree, a, b, params});
      for (std::uint64_t a = 1; r.pairs.empty() && a < r.unit_sum; ++a) {
        auto sp = params;
        sp["a"] = a;
        sp["b"] = r.unit_sum - a;
        out.push_back({joined, degree, r.unit * a, r.unit * (r.unit_sum - a), sp});
      }
    }
  if (!known) throw ValidationError("tables: no class B or C record of degree " + std::to_string(degree));
  return out;
}

nlohmann::json tables_json() {
  using nlohmann::json;
  json a = json::array();
  auto row = [&](const char* type, const char* degree, const char* m1, const char* m2, const char* remark,
                 unsigned index) {
    a.push_back({{"type", type},
                 {"degree", degree},
                 {"subdegrees", {m1, m2}},
                 {"remark", remark},
                 {"source", {{"class", "A"}, {"row", index}}}});
  };
  row("A1", "p^d", "(p^d-1)/v", "(v-1)(p^d-1)/v", "v is a prime", 1);
  row("A2", "p^(2m)", "2(p^m-1)", "(p^m-1)^2", "", 2);
  row("A3-A5", "q^(2m)", "(q+1)(q^m-1)", "q(q^m-1)(q^(m-1)-1)", "m > 1", 3);
  row("A6", "q^(2a)", "(q^(a-1)+1)(q^a-1)", "q^(a-1)(q-1)(q^a-1)", "a even, a > 1", 4);
  row("A6", "q^(2a)", "(q^(a-1)-1)(q^a+1)", "q^(a-1)(q-1)(q^a+1)", "a odd, a > 1", 4);
  row("A7", "q^(2a)", "(q^(a-1)+1)(q^a-1)", "q^(a-1)(q-1)(q^a-1)", "eps = +", 5);
  row("A7", "q^(2a)", "(q^(a-1)-1)(q^a+1)", "q^(a-1)(q-1)(q^a+1)", "eps = -", 5);
  row("A8", "q^10", "(q^5-1)(q^2+1)", "q^2(q^5-1)(q^3-1)", "", 6);
  row("A9", "q^8", "(q^4-1)(q^3+1)", "q^3(q^4-1)(q-1)", "", 7);
  row("A10", "q^16", "(q^8-1)(q^3+1)", "q^3(q^8-1)(q^5-1)", "", 8);
  row("A11", "q^4", "(q^2+1)(q-1)", "q(q^2+1)(q-1)", "q = 2^(2k+1), k >= 1", 9);

  auto records = [](const std::vector<StaticRecord>& rs) {
    json out = json::array();
    for (const auto& r : rs) {
      json pairs = json::array();
      for (const auto& [x, y] : r.pairs) pairs.push_back({x, y});
      json j{{"tags", r.tags},
             {"p", r.p},
             {"d", r.d},
             {"degree", r.degree()},
             {"subdegrees", pairs},
             {"consistent", record_consistent(r)},
             {"source", {{"class", std::string(1, r.cls)}, {"column", r.column}, {"row", r.row}}}};
      if (r.pairs.empty()) j["symbolic"] = {{"unit", r.unit}, {"sum_of_multipliers", r.unit_sum}};
      if (!r.note.empty()) j["note"] = r.note;
      out.push_back(j);
    }
    return out;
  };
  return json{{"class_a", a}, {"class_b", records(class_b_records())}, {"class_c", records(class_c_records())}};
}

}  // namespace twoclosed
