#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braidloom/braid.hpp"
#include "braidloom/codec.hpp"
#include "braidloom/invariants.hpp"

namespace braidloom {

enum class Superscript { none, s, a, n, an };
std::string to_string(Superscript s);

/// One printed integer of a table row with its markers.
struct TableEntry {
  std::int64_t code = 0;
  bool both_signs = false;  // printed with a +- prefix
  Superscript sup = Superscript::none;
  bool italic = false;

  /// {code} or {code, -code} for +- entries.
  std::vector<std::int64_t> signed_codes() const;
  /// Webs represented: 1 per signed code if superscripted, else 2 (w and inv(w)).
  int webs() const;
};

struct KnotRow {
  std::string label;  // Alexander-Briggs, e.g. "9_34"
  std::vector<TableEntry> entries;
  int b = 0;  // braid index
  int l = 0;  // tight length
  int n = 0;  // number of minimal webs
  char sym = 'r';

  int webs_by_rule() const;
};

/// Embedded dataset; parsed once, checksum verified (throws Error on mismatch).
const std::vector<KnotRow>& load_table();
std::vector<KnotRow> parse_table(std::string_view text);
std::uint64_t fnv1a64(std::string_view text);
const KnotRow* find_row(std::string_view label);

struct EntryReport {
  std::int64_t code = 0;
  std::string word;
  int length = 0;
  int strands = 0;
  std::optional<std::int64_t> inv_code;  // code of the rotated web, when it is a valid tight word
  SymmetryClass symmetry = SymmetryClass::none;
  bool alternating = false;
  int mfw = 0;
  std::string homfly;
  std::string jones;

  bool decodes = false;
  bool length_ok = false;
  bool strands_ok = false;
  bool cycle_ok = false;
  bool symmetry_ok = false;
  bool italic_ok = false;
  bool jones_agree = false;
  bool listing_ok = false;  // |code| <= |inv code| for two-web entries
};

struct RowReport {
  std::string label;
  int b = 0, l = 0, n = 0;
  std::vector<EntryReport> entries;
  std::vector<std::string> notes;

  bool decode_ok = false;       // every code decodes to length l on b strands, b-cycle
  bool n_webs_ok = false;
  bool homfly_equal = false;    // every web of the row shares one HOMFLY
  bool mirror_pairs_ok = false; // +- entries: P(-j) is the mirror of P(j)
  bool symmetry_ok = false;     // s, a, an, n and plain markers agree with symmetry_class
  bool italics_ok = false;
  bool jones_agree = false;     // HOMFLY specialization equals the bracket value
  bool mfw_bound_ok = false;    // mfw <= b
  bool mfw_equal = false;       // reported only
  bool listing_ok = false;      // reported only

  bool passed() const;
};

struct TableReport {
  std::vector<RowReport> rows;
  int total_webs = 0;
  double webs_per_knot = 0;
  double mean_length_per_web = 0;  // sum(l * n) / sum(n)
  double mean_length_per_row = 0;  // sum(l) / rows
  int mfw_equal_rows = 0;

  bool passed() const;
};

RowReport verify_row(const KnotRow& row);
/// Rows are verified in parallel; the report order follows `rows`.
TableReport verify_table(const std::vector<KnotRow>& rows, unsigned jobs = 1);

/// A tight type-(n) woven word and its code tuple.
struct Web {
  CodeTuple tuple;
  BraidWord word;
  int strands() const { return word.strands(); }
};

/// Every valid code tuple of length 1..max_len whose web has between
/// min_strands and max_strands strands (max_strands 0 = unbounded). Sorted
/// by length, then lead sign, then digits. Throws ResourceLimit when 3^max_len
/// exceeds Limits::enumeration_frontier.
std::vector<Web> enumerate_webs(int max_len, int min_strands = 2, int max_strands = 0, unsigned jobs = 1);

struct MinimalityReport {
  int strands = 0;  // 0 = every strand count
  int length = 0;
  std::vector<Web> shorter;    // matches with tight length < length
  std::vector<Web> at_length;  // matches with tight length == length

  bool minimal() const { return shorter.empty() && !at_length.empty(); }
};

/// Enumerates all webs up to `length` (on exactly `strands` strands, or any
/// count when 0) and collects those whose HOMFLY equals `target`.
MinimalityReport minimality_check(const TwoVarLaurent& target, int strands, int length, unsigned jobs = 1);

/// Minimality spot check of one row: no web on b strands shorter than l shares
/// the row's HOMFLY, and the length-l matches are exactly the listed codes
/// together with the codes of their inv-images.
struct RowMinimality {
  std::string label;
  bool feasible = false;  // b <= 3 and the enumeration fits the frontier cap
  MinimalityReport report;
  std::vector<std::int64_t> expected_codes;  // sorted
  std::vector<std::int64_t> found_codes;     // sorted

  bool no_shorter() const { return report.shorter.empty(); }
  bool codes_match() const { return expected_codes == found_codes; }
  bool passed() const { return feasible && no_shorter() && codes_match(); }
};

bool minimality_feasible(const KnotRow& row);
RowMinimality row_minimality(const KnotRow& row, unsigned jobs = 1);

/// Runs `fn(k)` for k in [0, count) on up to `jobs` threads.
template <class Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn);

}  // namespace braidloom

#include "braidloom/detail/parallel.hpp"
