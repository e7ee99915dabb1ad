#include "braidloom/tables.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <regex>
#include <set>
#include <sstream>

#include "braidloom/errors.hpp"

namespace braidloom {

namespace detail {
extern const std::string_view kKnotTableText;
}

namespace {

constexpr std::uint64_t kTableChecksum = 0x0dfe18b04ef5ceb5ULL;

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    const auto k = s.find(sep);
    out.push_back(s.substr(0, k));
    if (k == std::string_view::npos) return out;
    s.remove_prefix(k + 1);
  }
}

int parse_int(std::string_view s, const std::string& what) {
  int v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) detail::throw_invalid("table: bad " + what + " '" + std::string(s) + "'");
  return v;
}

TableEntry parse_entry(std::string_view token) {
  static const std::regex re(R"(^(pm)?(-?[0-9]+)(\^(s|a|n|an))?(\*)?$)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(token.begin(), token.end(), m, re))
    detail::throw_invalid("table: bad code '" + std::string(token) + "'");
  TableEntry e;
  e.both_signs = m[1].matched;
  e.code = std::stoll(m[2].str());
  const std::string sup = m[4].str();
  e.sup = sup == "s" ? Superscript::s : sup == "a" ? Superscript::a : sup == "n" ? Superscript::n
        : sup == "an" ? Superscript::an : Superscript::none;
  e.italic = m[5].matched;
  return e;
}

}  // namespace

std::string to_string(Superscript s) {
  switch (s) {
    case Superscript::none: return "";
    case Superscript::s: return "s";
    case Superscript::a: return "a";
    case Superscript::n: return "n";
    case Superscript::an: return "an";
  }
  return "?";
}

std::vector<std::int64_t> TableEntry::signed_codes() const {
  if (both_signs) return {std::llabs(code), -std::llabs(code)};
  return {code};
}

int TableEntry::webs() const {
  const int per_code = sup == Superscript::none ? 2 : 1;
  return per_code * static_cast<int>(signed_codes().size());
}

int KnotRow::webs_by_rule() const {
  int total = 0;
  for (const auto& e : entries) total += e.webs();
  return total;
}

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<KnotRow> parse_table(std::string_view text) {
  std::vector<KnotRow> rows;
  for (std::string_view line : split(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    const auto f = split(line, ';');
    if (f.size() != 6) detail::throw_invalid("table: expected 6 fields in '" + std::string(line) + "'");
    KnotRow r;
    r.label = std::string(f[0]);
    for (std::string_view tok : split(f[1], ',')) r.entries.push_back(parse_entry(tok));
    r.b = parse_int(f[2], "braid index");
    r.l = parse_int(f[3], "length");
    r.n = parse_int(f[4], "web count");
    if (f[5].size() != 1 || std::string_view("rfin").find(f[5][0]) == std::string_view::npos)
      detail::throw_invalid("table: bad symmetry column '" + std::string(f[5]) + "'");
    r.sym = f[5][0];
    rows.push_back(std::move(r));
  }
  return rows;
}

const std::vector<KnotRow>& load_table() {
  static const std::vector<KnotRow> rows = [] {
    const std::uint64_t h = fnv1a64(detail::kKnotTableText);
    if (h != kTableChecksum) throw Error("embedded knot table failed its integrity check");
    return parse_table(detail::kKnotTableText);
  }();
  return rows;
}

const KnotRow* find_row(std::string_view label) {
  for (const auto& r : load_table())
    if (r.label == label) return &r;
  return nullptr;
}

// ---------------------------------------------------------------- verification

bool RowReport::passed() const {
  return decode_ok && n_webs_ok && homfly_equal && mirror_pairs_ok && symmetry_ok && italics_ok && jones_agree &&
         mfw_bound_ok;
}

bool TableReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const RowReport& r) { return r.passed(); });
}

namespace {

bool symmetry_matches(Superscript sup, SymmetryClass c) {
  switch (sup) {
    case Superscript::s: return c == SymmetryClass::symmetric;
    case Superscript::a:
    case Superscript::an: return c == SymmetryClass::antisymmetric;
    case Superscript::n:
    case Superscript::none: return c == SymmetryClass::none;
  }
  return false;
}

}  // namespace

RowReport verify_row(const KnotRow& row) {
  RowReport rep;
  rep.label = row.label;
  rep.b = row.b;
  rep.l = row.l;
  rep.n = row.n;
  rep.decode_ok = rep.homfly_equal = rep.mirror_pairs_ok = rep.symmetry_ok = rep.italics_ok = rep.jones_agree =
      rep.mfw_bound_ok = rep.mfw_equal = rep.listing_ok = true;

  rep.n_webs_ok = row.webs_by_rule() == row.n;
  if (!rep.n_webs_ok)
    rep.notes.push_back("superscript rule gives " + std::to_string(row.webs_by_rule()) + " webs, column n is " +
                        std::to_string(row.n));
  if (row.sym == 'f' && std::none_of(row.entries.begin(), row.entries.end(), [](const TableEntry& e) { return e.both_signs; })) {
    rep.symmetry_ok = false;
    rep.notes.push_back("row marked f has no +- entry");
  }

  std::optional<TwoVarLaurent> row_homfly;
  auto check_homfly = [&](const TwoVarLaurent& p, const std::string& what) {
    if (!row_homfly) {
      row_homfly = p;
    } else if (!(*row_homfly == p)) {
      rep.homfly_equal = false;
      rep.notes.push_back("HOMFLY of " + what + " differs from the rest of the row");
    }
  };

  for (const TableEntry& entry : row.entries) {
    std::optional<TwoVarLaurent> positive_homfly;
    for (std::int64_t code : entry.signed_codes()) {
      EntryReport er;
      er.code = code;
      BraidWord w;
      try {
        w = decode_int(WebCode{code});
        er.decodes = true;
      } catch (const InvalidInput& ex) {
        rep.decode_ok = false;
        rep.notes.push_back(std::to_string(code) + ": " + ex.what());
        rep.entries.push_back(er);
        continue;
      }
      er.word = w.to_string();
      er.length = static_cast<int>(w.size());
      er.strands = w.strands();
      er.length_ok = er.length == row.l;
      er.strands_ok = er.strands == row.b;
      er.cycle_ok = closure_components(w) == 1 && permutation_of(w).cycles().front().size() == static_cast<std::size_t>(w.strands());
      if (!(er.length_ok && er.strands_ok && er.cycle_ok)) {
        rep.decode_ok = false;
        rep.notes.push_back(std::to_string(code) + ": decoded to length " + std::to_string(er.length) + " on " +
                            std::to_string(er.strands) + " strands");
      }

      const BraidWord r = inv(w);
      try {
        er.inv_code = encode_int(encode_tuple(r)).value;
      } catch (const InvalidInput&) {
      }

      er.symmetry = symmetry_class(w);
      er.symmetry_ok = symmetry_matches(entry.sup, er.symmetry);
      if (!er.symmetry_ok) {
        rep.symmetry_ok = false;
        rep.notes.push_back(std::to_string(code) + ": marker '" + to_string(entry.sup) + "' but symmetry class is " +
                            to_string(er.symmetry));
      }

      er.alternating = is_alternating_tight(w);
      er.italic_ok = er.alternating == entry.italic;
      if (!er.italic_ok) {
        rep.italics_ok = false;
        rep.notes.push_back(std::to_string(code) + ": italic marker disagrees with alternation");
      }

      er.listing_ok = entry.sup != Superscript::none || (er.inv_code && std::llabs(code) <= std::llabs(*er.inv_code));
      if (!er.listing_ok) {
        rep.listing_ok = false;
        rep.notes.push_back(std::to_string(code) + ": inv code " +
                            (er.inv_code ? std::to_string(*er.inv_code) : std::string("n/a")) +
                            " is absolutely smaller (reported only)");
      }

      const TwoVarLaurent p = homfly(w);
      er.homfly = homfly_to_string(p);
      check_homfly(p, std::to_string(code));
      if (entry.sup == Superscript::none) check_homfly(homfly(r), "inv(" + std::to_string(code) + ")");

      const OneVarLaurent j_bracket = jones_via_bracket(w);
      er.jones = jones_to_string(j_bracket);
      er.jones_agree = jones_from_homfly(p) == j_bracket;
      if (!er.jones_agree) {
        rep.jones_agree = false;
        rep.notes.push_back(std::to_string(code) + ": HOMFLY specialization disagrees with the bracket");
      }

      er.mfw = mfw_bound(p);
      if (er.mfw > row.b) {
        rep.mfw_bound_ok = false;
        rep.notes.push_back(std::to_string(code) + ": MFW bound " + std::to_string(er.mfw) + " exceeds b");
      }
      if (er.mfw != row.b) rep.mfw_equal = false;

      if (entry.both_signs) {
        if (code > 0) {
          positive_homfly = p;
        } else if (positive_homfly) {
          const BraidWord wp = decode_int(WebCode{-code});
          if (!(w == mirror(wp)) || !(p == homfly_mirror(*positive_homfly))) {
            rep.mirror_pairs_ok = false;
            rep.notes.push_back(std::to_string(code) + ": not the mirror of " + std::to_string(-code));
          }
        }
      }
      rep.entries.push_back(std::move(er));
    }
  }
  if (!rep.mfw_equal && rep.mfw_bound_ok) rep.notes.push_back("MFW bound is strictly below b (reported only)");
  return rep;
}

TableReport verify_table(const std::vector<KnotRow>& rows, unsigned jobs) {
  TableReport t;
  t.rows.resize(rows.size());
  parallel_for(rows.size(), jobs, [&](std::size_t k) { t.rows[k] = verify_row(rows[k]); });
  long weighted = 0;
  long lengths = 0;
  for (const auto& r : rows) {
    t.total_webs += r.webs_by_rule();
    weighted += static_cast<long>(r.l) * r.webs_by_rule();
    lengths += r.l;
  }
  for (const auto& r : t.rows) t.mfw_equal_rows += r.mfw_equal ? 1 : 0;
  if (!rows.empty()) {
    t.webs_per_knot = static_cast<double>(t.total_webs) / static_cast<double>(rows.size());
    t.mean_length_per_row = static_cast<double>(lengths) / static_cast<double>(rows.size());
  }
  if (t.total_webs) t.mean_length_per_web = static_cast<double>(weighted) / t.total_webs;
  return t;
}

// ---------------------------------------------------------------- enumeration

namespace {

struct WalkState {
  int i = 1, d = 1, e = 1, max = 1;
};

WalkState step(WalkState s, int c) {
  if (c == 2) {
    s.d = -s.d;
  } else {
    s.i += s.d;
    if (c == 1) s.e = -s.e;
  }
  s.max = std::max(s.max, s.i);
  return s;
}

struct Enumerator {
  int max_len, min_strands, max_strands;
  std::vector<Web>* out;

  void visit(int lead, std::vector<int>& cs, WalkState s) {
    const int strands = s.max + 1;
    if (static_cast<int>(cs.size()) >= max_len || (max_strands && strands > max_strands)) return;
    if (s.d == 1 && s.i == s.max && strands >= min_strands) {
      CodeTuple t{lead, cs};
      BraidWord w = decode_tuple(t);
      out->push_back({std::move(t), std::move(w)});
    }
    for (int c = 0; c < 3; ++c) {
      const WalkState n = step(s, c);
      if (n.i < 1) continue;
      cs.push_back(c);
      visit(lead, cs, n);
      cs.pop_back();
    }
  }
};

bool web_less(const Web& a, const Web& b) {
  if (a.tuple.cs.size() != b.tuple.cs.size()) return a.tuple.cs.size() < b.tuple.cs.size();
  if (a.tuple.lead_sign != b.tuple.lead_sign) return a.tuple.lead_sign > b.tuple.lead_sign;
  return a.tuple.cs < b.tuple.cs;
}

}  // namespace

std::vector<Web> enumerate_webs(int max_len, int min_strands, int max_strands, unsigned jobs) {
  if (max_len < 0) detail::throw_invalid("enumerate_webs: negative length");
  double frontier = 1;
  for (int k = 0; k < max_len; ++k) frontier *= 3;
  if (frontier - 1 > static_cast<double>(current_limits().enumeration_frontier))
    detail::throw_limit("enumeration to length " + std::to_string(max_len) + " exceeds the frontier cap of " +
                        std::to_string(current_limits().enumeration_frontier) + " tuples");
  if (max_len == 0) return {};

  // tuples with fewer than `depth` digits are emitted here; each task owns one
  // digit prefix of exactly `depth` digits and its whole subtree
  const int depth = std::min(2, max_len - 1);
  struct Task {
    int lead;
    std::vector<int> prefix;
    WalkState state;
  };
  std::vector<Task> tasks;
  std::vector<Web> short_webs;
  for (int lead : {1, -1}) {
    Enumerator shallow{depth, min_strands, max_strands, &short_webs};
    std::vector<int> cs;
    shallow.visit(lead, cs, {1, 1, lead, 1});
    std::vector<Task> frontier{{lead, {}, {1, 1, lead, 1}}};
    for (int k = 0; k < depth; ++k) {
      std::vector<Task> next;
      for (const Task& t : frontier)
        for (int c = 0; c < 3; ++c) {
          Task u{lead, t.prefix, step(t.state, c)};
          if (u.state.i < 1) continue;
          u.prefix.push_back(c);
          next.push_back(std::move(u));
        }
      frontier = std::move(next);
    }
    std::move(frontier.begin(), frontier.end(), std::back_inserter(tasks));
  }

  std::vector<std::vector<Web>> parts(tasks.size());
  parallel_for(tasks.size(), jobs, [&](std::size_t k) {
    Enumerator e{max_len, min_strands, max_strands, &parts[k]};
    std::vector<int> cs = tasks[k].prefix;
    e.visit(tasks[k].lead, cs, tasks[k].state);
  });

  std::vector<Web> all = std::move(short_webs);
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(all));
  std::sort(all.begin(), all.end(), web_less);
  return all;
}

MinimalityReport minimality_check(const TwoVarLaurent& target, int strands, int length, unsigned jobs) {
  MinimalityReport rep;
  rep.strands = strands;
  rep.length = length;
  const std::vector<Web> webs = enumerate_webs(length, strands ? strands : 2, strands, jobs);
  std::vector<char> match(webs.size(), 0);
  parallel_for(webs.size(), jobs, [&](std::size_t k) {
    // MFW bound and degree checks are cheaper, but exact HOMFLY is decisive
    match[k] = homfly(webs[k].word) == target ? 1 : 0;
  });
  for (std::size_t k = 0; k < webs.size(); ++k) {
    if (!match[k]) continue;
    if (static_cast<int>(webs[k].word.size()) < length)
      rep.shorter.push_back(webs[k]);
    else
      rep.at_length.push_back(webs[k]);
  }
  return rep;
}

bool minimality_feasible(const KnotRow& row) {
  if (row.b > 3) return false;
  double frontier = 1;
  for (int k = 0; k < row.l; ++k) frontier *= 3;
  return frontier - 1 <= static_cast<double>(current_limits().enumeration_frontier);
}

RowMinimality row_minimality(const KnotRow& row, unsigned jobs) {
  RowMinimality r;
  r.label = row.label;
  r.feasible = minimality_feasible(row);
  if (!r.feasible) return r;
  std::set<std::int64_t> expected;
  std::optional<TwoVarLaurent> target;
  for (const auto& e : row.entries)
    for (std::int64_t code : e.signed_codes()) {
      const BraidWord w = decode_int(WebCode{code});
      if (!target) target = homfly(w);
      expected.insert(code);
      expected.insert(encode_int(encode_tuple(inv(w))).value);
    }
  r.expected_codes.assign(expected.begin(), expected.end());
  r.report = minimality_check(*target, row.b, row.l, jobs);
  for (const Web& w : r.report.at_length) r.found_codes.push_back(encode_int(w.tuple).value);
  std::sort(r.found_codes.begin(), r.found_codes.end());
  return r;
}

}  // namespace braidloom
