#include "braidloom_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <braidloom/codec.hpp>
#include <braidloom/errors.hpp>
#include <braidloom/invariants.hpp>
#include <braidloom/moves.hpp>
#include <braidloom/tables.hpp>
#include <braidloom/weave.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

namespace braidloom::cli {

using nlohmann::json;

namespace {

const char* const kVerbs[] = {"weave", "comb", "move", "encode", "decode", "invariant", "verify-table", "enumerate"};

std::optional<std::size_t> env_size(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  char* end = nullptr;
  const unsigned long long x = std::strtoull(v, &end, 10);
  if (*end || x == 0) throw CLI::ValidationError(std::string(name), "must be a positive integer");
  return static_cast<std::size_t>(x);
}

// ---------------------------------------------------------------- input helpers

BraidWord input_word(const Command& c) {
  if (c.word) return BraidWord::parse(*c.word, c.strands);
  if (c.code) return decode_int(WebCode{*c.code});
  detail::throw_invalid(c.verb + ": give --word or --code");
}

WovenBraid input_woven(const Command& c) {
  const BraidWord w = input_word(c);
  const TypeVector t = c.type ? TypeVector::parse(*c.type) : TypeVector::single(w.strands());
  auto woven = as_woven(w, t);
  if (!woven) detail::throw_invalid(c.verb + ": '" + w.to_string() + "' is not woven of type " + t.to_string());
  return *woven;
}

std::string components_text(const WovenBraid& w) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [j, a] : w.components()) {
    os << (first ? "" : "; ") << j << ": " << a.to_string();
    first = false;
  }
  return first ? "(none)" : os.str();
}

json components_json(const WovenBraid& w) {
  json j = json::object();
  for (const auto& [k, a] : w.components()) j[std::to_string(k)] = a.to_string();
  return j;
}

json tuple_json(const CodeTuple& t) { return {{"lead_sign", t.lead_sign}, {"cs", t.cs}}; }

void emit(std::ostream& out, const json& record) { out << record.dump() << '\n'; }

// ---------------------------------------------------------------- verbs

int do_weave(const Command& c, std::ostream& out) {
  const BraidWord b = input_word(c);
  if (c.type) {
    const TypeVector t = TypeVector::parse(*c.type);
    const bool ok = is_woven(b, t);
    if (c.records)
      emit(out, {{"verb", "weave"}, {"word", b.to_string()}, {"type", t.to_string()}, {"is_woven", ok}});
    else
      out << "is_woven " << t.to_string() << ": " << (ok ? "yes" : "no") << '\n';
    return kOk;
  }
  const WeaveResult r = weave(b);
  const BraidWord w = r.woven.word();
  const bool certified = braids_equal(w, r.conjugator.inverse() * b * r.conjugator);
  if (c.records) {
    emit(out, {{"verb", "weave"},
               {"input", b.to_string()},
               {"strands", b.strands()},
               {"type", r.woven.type().to_string()},
               {"woven", w.to_string()},
               {"components", components_json(r.woven)},
               {"conjugator", r.conjugator.to_string()},
               {"certified", certified}});
  } else {
    out << "type: " << r.woven.type().to_string() << '\n'
        << "woven: " << w.to_string() << '\n'
        << "components: " << components_text(r.woven) << '\n'
        << "conjugator: " << r.conjugator.to_string() << '\n'
        << "certified: " << (certified ? "yes" : "no") << '\n';
  }
  return certified ? kOk : kVerificationFailed;
}

int do_comb(const Command& c, std::ostream& out) {
  const BraidWord p = input_word(c);
  const PureFactorization asc = comb(p, CombOrder::ascending);
  const PureFactorization desc = comb(p, CombOrder::descending);
  if (c.records) {
    json a = json::object(), d = json::object();
    for (int j = 2; j <= p.strands(); ++j) {
      a[std::to_string(j)] = asc.component(j).to_string();
      d[std::to_string(j)] = desc.component(j).to_string();
    }
    emit(out, {{"verb", "comb"}, {"word", p.to_string()}, {"strands", p.strands()}, {"ascending", a}, {"descending", d}});
  } else {
    for (int j = 2; j <= p.strands(); ++j) out << "ascending  beta_" << j << ": " << asc.component(j).to_string() << '\n';
    for (int j = p.strands(); j >= 2; --j) out << "descending " << j << "_beta: " << desc.component(j).to_string() << '\n';
  }
  return kOk;
}

int do_move(const Command& c, std::ostream& out) {
  MoveRecord r;
  if (c.kind == "I") {
    const WovenBraid omega = input_woven(c);
    const AWord kappa = c.kappa ? AWord::parse(*c.kappa, omega.strands()) : AWord(omega.strands());
    r = record_move_I(omega, kappa);
  } else if (c.kind == "II+") {
    r = record_move_II_plus(input_woven(c), c.sign);
  } else if (c.kind == "II-") {
    r = record_move_II_minus(input_word(c));
  } else {
    detail::throw_invalid("move: --kind must be I, II+ or II-");
  }
  const bool same = homfly(r.before.word()) == homfly(r.after.word());
  if (c.records) {
    json j{{"verb", "move"},
           {"kind", to_string(r.kind)},
           {"before", r.before.word().to_string()},
           {"before_type", r.before.type().to_string()},
           {"after", r.after.word().to_string()},
           {"after_type", r.after.type().to_string()},
           {"homfly_preserved", same}};
    if (r.kappa) j["kappa"] = r.kappa->to_string();
    if (r.kind != MoveKind::conjugate_kn) j["sign"] = r.sign;
    emit(out, j);
  } else {
    out << "move " << to_string(r.kind) << '\n'
        << "before: " << r.before.word().to_string() << "  type " << r.before.type().to_string() << '\n'
        << "after:  " << r.after.word().to_string() << "  type " << r.after.type().to_string() << '\n'
        << "HOMFLY preserved: " << (same ? "yes" : "no") << '\n';
  }
  return same ? kOk : kVerificationFailed;
}

int do_encode(const Command& c, std::ostream& out) {
  const BraidWord w = input_word(c);
  auto woven = as_woven(w, TypeVector::single(w.strands()));
  if (!woven) detail::throw_invalid("encode: '" + w.to_string() + "' is not woven of type (" + std::to_string(w.strands()) + ")");
  const BraidWord tight = tighten(*woven);
  const CodeTuple t = encode_tuple(tight);
  const WebCode code = encode_int(t);
  if (c.records)
    emit(out, {{"verb", "encode"}, {"tight", tight.to_string()}, {"tuple", tuple_json(t)}, {"code", code.value}});
  else
    out << "tight: " << tight.to_string() << '\n' << "tuple: " << t.to_string() << '\n' << "code: " << code.value << '\n';
  return kOk;
}

int do_decode(const Command& c, std::ostream& out) {
  if (!c.code) detail::throw_invalid("decode: missing code");
  const BraidWord w = decode_int(WebCode{*c.code});
  const CodeTuple t = encode_tuple(w);
  if (c.records)
    emit(out, {{"verb", "decode"}, {"code", *c.code}, {"word", w.to_string()}, {"strands", w.strands()},
               {"length", w.size()}, {"tuple", tuple_json(t)}});
  else
    out << "word: " << w.to_string() << '\n' << "strands: " << w.strands() << '\n' << "tuple: " << t.to_string() << '\n';
  return kOk;
}

int do_invariant(const Command& c, std::ostream& out) {
  const BraidWord w = input_word(c);
  const TwoVarLaurent p = homfly(w);
  const OneVarLaurent j = jones_via_bracket(w);
  const bool agree = jones_from_homfly(p) == j;
  if (c.records) {
    emit(out, {{"verb", "invariant"},
               {"word", w.to_string()},
               {"strands", w.strands()},
               {"components", closure_components(w)},
               {"writhe", writhe(w)},
               {"jones", jones_to_string(j)},
               {"homfly", homfly_to_string(p)},
               {"mfw_bound", mfw_bound(p)},
               {"oracles_agree", agree}});
  } else {
    out << "components: " << closure_components(w) << '\n'
        << "writhe: " << writhe(w) << '\n'
        << "jones (t = A^-4): " << jones_to_string(j) << '\n'
        << "homfly (v, z): " << homfly_to_string(p) << '\n'
        << "mfw bound: " << mfw_bound(p) << '\n'
        << "oracles agree: " << (agree ? "yes" : "no") << '\n';
  }
  return agree ? kOk : kVerificationFailed;
}

json row_json(const RowReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    json j{{"code", e.code},          {"word", e.word},        {"length", e.length},
           {"strands", e.strands},    {"symmetry", to_string(e.symmetry)},
           {"alternating", e.alternating}, {"mfw", e.mfw},     {"homfly", e.homfly},
           {"jones", e.jones}};
    j["inv_code"] = e.inv_code ? json(*e.inv_code) : json(nullptr);
    entries.push_back(j);
  }
  return {{"row", r.label},
          {"b", r.b},
          {"l", r.l},
          {"n", r.n},
          {"passed", r.passed()},
          {"checks",
           {{"decode", r.decode_ok},
            {"n_webs", r.n_webs_ok},
            {"homfly_equal", r.homfly_equal},
            {"mirror_pairs", r.mirror_pairs_ok},
            {"symmetry", r.symmetry_ok},
            {"italics", r.italics_ok},
            {"jones_agree", r.jones_agree},
            {"mfw_bound", r.mfw_bound_ok},
            {"mfw_equal", r.mfw_equal},
            {"listing", r.listing_ok}}},
          {"entries", entries},
          {"notes", r.notes}};
}

std::string codes_text(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  return os.str();
}

int do_verify_table(const Command& c, std::ostream& out) {
  std::vector<KnotRow> rows;
  if (c.row) {
    const KnotRow* r = find_row(*c.row);
    if (!r) detail::throw_invalid("verify-table: no row '" + *c.row + "'");
    rows.push_back(*r);
  } else {
    rows = load_table();
  }
  const TableReport t = verify_table(rows, c.jobs);
  bool ok = t.passed();
  for (const auto& r : t.rows) {
    if (c.records) {
      emit(out, row_json(r));
      continue;
    }
    out << std::left << std::setw(6) << r.label << (r.passed() ? " PASS" : " FAIL") << "  b=" << r.b << " l=" << r.l
        << " n=" << r.n << " mfw=" << (r.mfw_equal ? "b" : "<b") << '\n';
    for (const auto& note : r.notes) out << "       " << note << '\n';
  }
  std::ostringstream avg;
  avg << std::fixed << std::setprecision(3);
  if (c.records) {
    emit(out, {{"summary", true},
               {"rows", t.rows.size()},
               {"webs", t.total_webs},
               {"webs_per_knot", t.webs_per_knot},
               {"mean_length_per_web", t.mean_length_per_web},
               {"mean_length_per_row", t.mean_length_per_row},
               {"mfw_equal_rows", t.mfw_equal_rows},
               {"passed", t.passed()}});
  } else {
    avg << "rows: " << t.rows.size() << "  webs: " << t.total_webs << "  webs per knot: " << t.webs_per_knot
        << "  mean length per web: " << t.mean_length_per_web << "  per row: " << t.mean_length_per_row
        << "  mfw = b on " << t.mfw_equal_rows << " rows\n";
    out << avg.str() << (t.passed() ? "all rows pass\n" : "some rows FAIL\n");
  }

  if (c.minimality) {
    for (const auto& row : rows) {
      const RowMinimality m = row_minimality(row, c.jobs);
      if (!m.feasible) {
        if (c.row) {
          if (c.records)
            emit(out, {{"minimality", row.label}, {"feasible", false}});
          else
            out << "minimality " << row.label << ": skipped (needs b <= 3 and 3^l within the enumeration cap)\n";
        }
        continue;
      }
      ok = ok && m.passed();
      if (c.records) {
        emit(out, {{"minimality", row.label},
                   {"feasible", true},
                   {"passed", m.passed()},
                   {"shorter_matches", m.report.shorter.size()},
                   {"expected_codes", m.expected_codes},
                   {"found_codes", m.found_codes}});
      } else {
        out << "minimality " << row.label << (m.passed() ? " PASS" : " FAIL") << "  shorter matches: "
            << m.report.shorter.size() << "  length-" << row.l << " codes: " << codes_text(m.found_codes)
            << " (expected " << codes_text(m.expected_codes) << ")\n";
      }
    }
  }
  return ok ? kOk : kVerificationFailed;
}

int do_enumerate(const Command& c, std::ostream& out) {
  const int lo = c.strands ? *c.strands : 2;
  const int hi = c.strands ? *c.strands : 0;
  const auto webs = enumerate_webs(c.max_len, lo, hi, c.jobs);
  for (const Web& w : webs) {
    const std::int64_t code = encode_int(w.tuple).value;
    if (c.records)
      emit(out, {{"code", code}, {"tuple", tuple_json(w.tuple)}, {"word", w.word.to_string()}, {"strands", w.strands()}});
    else
      out << std::setw(10) << code << "  " << w.tuple.to_string() << "  " << w.word.to_string() << '\n';
  }
  if (!c.records) out << webs.size() << " webs\n";
  return kOk;
}

}  // namespace

Parsed parse_args(int argc, const char* const* argv) {
  Parsed result;
  Command c;
  try {
    if (auto j = env_size("BRAIDLOOM_JOBS")) c.jobs = static_cast<unsigned>(*j);
    c.max_word = env_size("BRAIDLOOM_MAX_WORD");
  } catch (const CLI::Error& e) {
    result.exit_code = kUsage;
    result.message = e.what();
    return result;
  }

  CLI::App app{"Woven braids: weaving, combing, moves, web codes, invariants and the knot table.", "braidloom"};
  app.require_subcommand(1);
  std::string format = "text";
  std::size_t max_word = 0;
  auto add_common = [&](CLI::App* s) {
    s->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "records"}));
    s->add_option("--jobs", c.jobs, "Worker threads (env BRAIDLOOM_JOBS)")->check(CLI::PositiveNumber);
    s->add_option("--max-word", max_word, "Cap on intermediate word length (env BRAIDLOOM_MAX_WORD)")
        ->check(CLI::PositiveNumber);
  };
  auto add_word = [&](CLI::App* s, bool with_code) {
    s->add_option("--word", c.word, "Braid word, e.g. '1 -2 -2 1'");
    s->add_option("--strands", c.strands, "Strand count (default: max index + 1)")->check(CLI::PositiveNumber);
    if (with_code) s->add_option("--code", c.code, "Web code instead of a word");
  };

  auto* weave_cmd = app.add_subcommand("weave", "Conjugate a braid into woven form");
  add_word(weave_cmd, true);
  weave_cmd->add_option("--type", c.type, "Only test wovenness for this type, e.g. 3,1,2");
  auto* comb_cmd = app.add_subcommand("comb", "Comb a pure braid (both orders)");
  add_word(comb_cmd, false);
  auto* move_cmd = app.add_subcommand("move", "Apply a move of type I, II+ or II-");
  add_word(move_cmd, true);
  move_cmd->add_option("--kind", c.kind, "I, II+ or II-")->check(CLI::IsMember({"I", "II+", "II-"}));
  move_cmd->add_option("--kappa", c.kappa, "A-word for a type I move, e.g. 'A[1,4]'");
  move_cmd->add_option("--sign", c.sign, "Sign of the II+ crossing")->check(CLI::IsMember({1, -1}));
  move_cmd->add_option("--type", c.type, "Type of the input (default: single cycle)");
  auto* encode_cmd = app.add_subcommand("encode", "Web code of a type-(n) woven braid");
  add_word(encode_cmd, false);
  auto* decode_cmd = app.add_subcommand("decode", "Tight word of a web code");
  decode_cmd->add_option("code,--code", c.code, "Web code, e.g. -5");
  auto* inv_cmd = app.add_subcommand("invariant", "Components, writhe, Jones, HOMFLY, MFW bound of the closure");
  add_word(inv_cmd, true);
  auto* verify_cmd = app.add_subcommand("verify-table", "Verify the embedded knot table");
  verify_cmd->add_option("--row", c.row, "Only this row, e.g. 9_34");
  verify_cmd->add_flag("--minimality", c.minimality, "Also run enumeration-based minimality checks (b <= 3)");
  auto* enum_cmd = app.add_subcommand("enumerate", "List all webs up to a tight length");
  enum_cmd->add_option("--max-len", c.max_len, "Maximal tight length")->check(CLI::NonNegativeNumber);
  enum_cmd->add_option("--strands", c.strands, "Only webs on this many strands")->check(CLI::PositiveNumber);
  for (auto* s : {weave_cmd, comb_cmd, move_cmd, encode_cmd, decode_cmd, inv_cmd, verify_cmd, enum_cmd}) add_common(s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream os;
    const int code = app.exit(e, os, os);
    result.exit_code = code == 0 ? kOk : kUsage;
    result.message = os.str();
    return result;
  }
  for (const char* v : kVerbs)
    if (app.got_subcommand(v)) c.verb = v;
  c.records = format == "records";
  if (max_word) c.max_word = max_word;
  if (c.verb == "decode" && !c.code) {
    result.exit_code = kUsage;
    result.message = "decode: missing code\n";
    return result;
  }
  result.command = c;
  return result;
}

int execute(const Command& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.max_word) {
      Limits lim = current_limits();
      lim.max_free_word = *c.max_word;
      lim.max_a_word = *c.max_word;
      set_limits(lim);
    }
    if (c.verb == "weave") return do_weave(c, out);
    if (c.verb == "comb") return do_comb(c, out);
    if (c.verb == "move") return do_move(c, out);
    if (c.verb == "encode") return do_encode(c, out);
    if (c.verb == "decode") return do_decode(c, out);
    if (c.verb == "invariant") return do_invariant(c, out);
    if (c.verb == "verify-table") return do_verify_table(c, out);
    if (c.verb == "enumerate") return do_enumerate(c, out);
    err << "braidloom: unknown verb '" << c.verb << "'\n";
    return kUsage;
  } catch (const ResourceLimit& e) {
    err << "braidloom " << c.verb << ": resource cap: " << e.what() << '\n';
    return kResourceCap;
  } catch (const InvalidInput& e) {
    err << "braidloom " << c.verb << ": invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "braidloom " << c.verb << ": " << e.what() << '\n';
    return kVerificationFailed;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  const Parsed p = parse_args(argc, argv);
  if (!p.command) {
    (p.exit_code == kOk ? out : err) << p.message;
    return p.exit_code;
  }
  return execute(*p.command, out, err);
}

}  // namespace braidloom::cli
