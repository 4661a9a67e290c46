#pragma once

// Subdegrees of the primitive affine rank 3 groups: the parametric class (A)
// rows as formulas and the finite classes (B) and (C) as static records.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace twoclosed {

/// A3 stands for the merged A3-A5 row.
enum class Table1Type { A1, A2, A3, A6, A7, A8, A9, A10, A11 };

std::string to_string(Table1Type t);
/// Accepts "A1".."A11"; "A4" and "A5" map to A3. Throws ValidationError.
Table1Type parse_table1_type(const std::string& s);
std::vector<Table1Type> table1_types();

/// Only the fields a row uses are read: A1 (p, d, v), A2 (p, m), A3 (q, m),
/// A6 (q, a), A7 (q, a, eps), A8-A11 (q).
struct Table1Params {
  std::uint64_t p = 0;
  unsigned d = 0;
  std::uint64_t q = 0;
  unsigned m = 0;
  unsigned a = 0;
  int eps = 1;
  std::uint64_t v = 0;
};

struct SubdegreePair {
  std::string tag;
  std::uint64_t degree = 0;
  std::uint64_t m1 = 0;
  std::uint64_t m2 = 0;
  nlohmann::json params = nlohmann::json::object();
};

/// Throws ValidationError for parameters outside the row's range.
SubdegreePair table1_subdegrees(Table1Type t, const Table1Params& params);

struct LargerReport {
  SubdegreePair pair;
  std::uint64_t p = 0;
  bool p_divides_m1 = false;
  bool p_divides_m2 = false;
  /// q = 2, type A6 or A7, m1 = (2^(a-1)+1)(2^a-1) > m2 = 2^(a-1)(2^a-1).
  bool exception = false;
  bool ok = false;
};

/// Throws PreconditionError for A1, A2 or degree below 4096.
LargerReport check_larger(Table1Type t, const Table1Params& params);

struct SweepRow {
  std::string tag;
  std::size_t instances = 0;
  std::size_t sum_failures = 0;
  std::size_t larger_checked = 0;
  std::size_t larger_failures = 0;
  std::size_t exceptions = 0;
};

struct SweepReport {
  std::uint64_t max_degree = 0;
  std::vector<SweepRow> rows;
  /// Instances with m1 > m2; all must be the q = 2 family.
  std::vector<SubdegreePair> exceptional;
  bool ok() const;
};

/// Every row, every valid parameter set with degree <= max_degree; the
/// larger-subdegree check for A3-A11 from larger_min upwards.
SweepReport sweep_table1(std::uint64_t max_degree = 100000000, std::uint64_t larger_min = 4096);

struct StaticRecord {
  char cls = 'B';  // 'B' extraspecial, 'C' exceptional
  std::vector<std::string> tags;
  std::uint32_t p = 0;
  unsigned d = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  /// Pairs (unit a, unit b) with a + b = unit_sum, when the row is symbolic.
  std::uint64_t unit = 0;
  std::uint64_t unit_sum = 0;
  /// Position in the printed table: column ("left", "middle", "right") and
  /// row, counted from 1.
  std::string column;
  unsigned row = 0;
  std::string note;
  std::uint64_t degree() const;
};

const std::vector<StaticRecord>& class_b_records();
const std::vector<StaticRecord>& class_c_records();
/// Every concrete pair sums to p^d - 1; a symbolic row needs unit*unit_sum = p^d - 1.
bool record_consistent(const StaticRecord& r);

/// Pairs stored for the degree, optionally restricted to records carrying
/// the tag. Throws ValidationError for a degree with no record.
std::vector<SubdegreePair> tables23_lookup(std::uint64_t degree, const std::string& tag = "");

nlohmann::json tables_json();

}  // namespace twoclosed
