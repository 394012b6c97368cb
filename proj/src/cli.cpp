#include "circulant/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "circulant/families.hpp"
#include "circulant/groups.hpp"
#include "circulant/oracle.hpp"
#include "circulant/parallel.hpp"
#include "circulant/theta.hpp"
#include "circulant/type1.hpp"

namespace circulant::cli {

namespace {

using json = nlohmann::ordered_json;

struct Output {
  json inputs = json::object();
  json result = json::object();
  json findings = json::array();
  std::string table;
  std::string csv;
  /// Newline-delimited records written ahead of the envelope (census).
  std::vector<json> records;
  int code = kOk;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidThetaParams: return kThetaParams;
    case ErrorKind::InvalidFamilyParams:
    case ErrorKind::DegenerateFamily: return kFamilyParams;
    case ErrorKind::VerificationFailure:
    case ErrorKind::SubgroupViolation: return kVerification;
    case ErrorKind::BudgetExceeded: return kBudget;
    default: return kInputError;
  }
}

json jumps_json(const JumpSet& s) { return json(s.jumps()); }

json graph_json(const CirculantGraph& g) {
  return json{{"n", g.order()}, {"jumps", jumps_json(g.jumps())}};
}

std::string braces(const JumpSet& s) {
  std::string text = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) text += ",";
    text += std::to_string(s.jumps()[i]);
  }
  return text + "}";
}

template <class Range>
std::string joined(const Range& values, const char* sep = " ") {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : values) {
    if (!first) os << sep;
    os << v;
    first = false;
  }
  return os.str();
}

std::string verdict_label(Verdict v) {
  switch (v) {
    case Verdict::Identity: return "Yes (Identity)";
    case Verdict::Type2: return "Yes (Type-2)";
    case Verdict::Type1: return "T1";
    case Verdict::NonCirculant: return "NS";
    case Verdict::Untyped: return "Untyped";
  }
  return "?";
}

json group_json(const OrbitGroup& g) {
  json labels = json::array();
  for (const auto& l : g.labels) labels.push_back(l ? jumps_json(*l) : json(nullptr));
  return json{{"modulus", g.modulus},
              {"generator", g.generator},
              {"order", g.quotient_order()},
              {"index_count", g.order()},
              {"indices", g.indices},
              {"labels", std::move(labels)}};
}

// "a..b" or "a"; both ends inclusive.
std::pair<Int, Int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const Int v = std::stoll(text, &used);
      if (used != text.size()) throw InputError("bad range");
      return {v, v};
    }
    const std::string lo_text = text.substr(0, dots);
    const std::string hi_text = text.substr(dots + 2);
    const Int lo = std::stoll(lo_text, &used);
    if (used != lo_text.size()) throw InputError("bad range");
    const Int hi = std::stoll(hi_text, &used);
    if (used != hi_text.size()) throw InputError("bad range");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw InputError("malformed range '" + text + "', expected a..b");
  }
}

Output cmd_reduce(Int n, const std::vector<Int>& values) {
  Output o;
  o.inputs = {{"n", n}, {"values", values}};
  const auto g = make_circulant(n, values);
  o.result = graph_json(g);
  o.table = braces(g.jumps()) + "\n";
  o.csv = "n,jumps\n" + std::to_string(n) + "," + joined(g.jumps()) + "\n";
  return o;
}

Output cmd_t1set(Int n, const std::vector<Int>& set) {
  Output o;
  o.inputs = {{"n", n}, {"set", set}};
  const auto g = make_circulant(n, set);
  const auto grp = type1_group(g);
  const auto& s = grp.carrier;
  json members = json::array();
  std::ostringstream table;
  table << "T1(" << g.to_string() << "): " << s.size() << " members, |units| = "
        << units(n).elements.size() << "\n";
  std::string csv = "index,jumps,representative,witnesses\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    members.push_back({{"jumps", jumps_json(s.members[i].jumps())},
                       {"representative", grp.representatives[i]},
                       {"witnesses", s.witnesses[i]}});
    table << "  " << s.members[i].to_string() << "  x = " << grp.representatives[i] << "\n";
    csv += std::to_string(i) + "," + joined(s.members[i].jumps()) + "," +
           std::to_string(grp.representatives[i]) + "," + joined(s.witnesses[i]) + "\n";
  }
  o.result = {{"base", graph_json(g)},
              {"order", s.size()},
              {"unit_count", units(n).elements.size()},
              {"members", std::move(members)},
              {"stabilizer", grp.stabilizer}};
  o.table = table.str();
  o.csv = csv;
  return o;
}

void check_t2_findings(const Type2Set& s, Output& o) {
  for (const auto& member : s.members) {
    if (!gcd_signature_check(s.base, member)) {
      o.findings.push_back("gcd signature of " + member.to_string() + " differs from the base");
    }
  }
  if (s.modulus % s.graph_period != 0) {
    o.findings.push_back("graph period " + std::to_string(s.graph_period) +
                         " does not divide " + std::to_string(s.modulus));
  }
}

Output cmd_t2set(Int n, Int m, const std::vector<Int>& set, unsigned threads) {
  Output o;
  o.inputs = {{"n", n}, {"m", m}, {"set", set}};
  const auto g = make_circulant(n, set);
  const auto s = t2_set(n, m, g, threads);
  const auto grp = t2_group(s);
  json members = json::array();
  std::ostringstream table;
  table << "T2_{" << n << "," << m << "}(" << g.to_string() << "): " << s.size()
        << " members\n";
  std::string csv = "index,jumps\n";
  for (std::size_t i = 0; i < s.members.size(); ++i) {
    members.push_back(jumps_json(s.members[i].jumps()));
    table << "  " << s.members[i].to_string() << "\n";
    csv += std::to_string(i) + "," + joined(s.members[i].jumps()) + "\n";
  }
  table << "indices: " << joined(s.t2_indices) << " (generator " << grp.generator
        << ", group order " << grp.quotient_order() << ")\n";
  o.result = {{"base", graph_json(g)},
              {"m", m},
              {"members", std::move(members)},
              {"t2_indices", s.t2_indices},
              {"graph_period", s.graph_period},
              {"equals_v", s.equals_v},
              {"group", group_json(grp)}};
  o.table = table.str();
  o.csv = csv;
  check_t2_findings(s, o);
  return o;
}

Output cmd_vset(Int n, Int m, const std::vector<Int>& set, unsigned threads) {
  Output o;
  o.inputs = {{"n", n}, {"m", m}, {"set", set}};
  const auto g = make_circulant(n, set);
  const auto v = v_set(n, m, g, threads);
  const auto grp = v_group(v);
  json rows = json::array();
  std::vector<Int> type2_t;
  std::ostringstream table;
  table << "V_{" << n << "," << m << "}(" << g.to_string() << "): period " << v.graph_period
        << ", " << v.distinct_image_count() << " distinct images\n";
  std::string csv = "t,verdict,jumps\n";
  for (const auto& row : v.rows) {
    if (row.verdict == Verdict::Type2) type2_t.push_back(row.t);
    rows.push_back({{"t", row.t},
                    {"verdict", to_string(row.verdict)},
                    {"jumps", row.image ? jumps_json(*row.image) : json(nullptr)}});
    table << "  " << row.t << "  " << verdict_label(row.verdict);
    if (row.image && row.verdict != Verdict::Identity) table << "  " << braces(*row.image);
    table << "\n";
    csv += std::to_string(row.t) + "," + std::string(to_string(row.verdict)) + "," +
           (row.image ? joined(row.image->jumps()) : std::string()) + "\n";
  }
  json distinct = json::array();
  for (const auto& d : v.distinct) distinct.push_back(jumps_json(d.jumps()));
  o.result = {{"base", graph_json(g)},
              {"m", m},
              {"modulus", v.modulus},
              {"graph_period", v.graph_period},
              {"distinct_images", v.distinct_image_count()},
              {"distinct_circulant", std::move(distinct)},
              {"type2_t", type2_t},
              {"rows", std::move(rows)},
              {"group", group_json(grp)}};
  o.table = table.str();
  o.csv = csv;
  if (v.modulus % v.graph_period != 0) {
    o.findings.push_back("graph period does not divide n/m");
  }
  return o;
}

Output cmd_table(Int n, Int m, const std::vector<Int>& set, const std::string& range,
                 unsigned threads) {
  Output o;
  const auto g = make_circulant(n, set);
  require_admissible(n, m, g.jumps());
  Int lo = 0;
  Int hi = n / m - 1;
  if (!range.empty()) std::tie(lo, hi) = parse_range(range);
  o.inputs = {{"n", n}, {"m", m}, {"set", set}, {"t", {lo, hi}}};
  if (lo < 0 || hi >= n / m || lo > hi) {
    throw Error(ErrorKind::InvalidThetaParams,
                "t range must lie in [0, " + std::to_string(n / m - 1) + "]");
  }
  std::vector<TClassification> rows(static_cast<std::size_t>(hi - lo + 1));
  detail::parallel_for(rows.size(), threads, [&](std::size_t i) {
    rows[i] = classify_t(ThetaParams::make(n, m, lo + static_cast<Int>(i)), g);
  });

  const auto closure = symmetric_closure(g).values;
  json jrows = json::array();
  std::ostringstream table;
  table << "t";
  for (Int v : closure) table << "\t" << v;
  table << "\tverdict\n";
  std::string csv = "t";
  for (Int v : closure) csv += "," + std::to_string(v);
  csv += ",verdict,image\n";
  for (const auto& row : rows) {
    jrows.push_back({{"t", row.t},
                     {"transformed", row.transformed},
                     {"verdict", verdict_label(row.verdict)},
                     {"image", row.image ? jumps_json(*row.image) : json(nullptr)}});
    table << row.t;
    for (Int v : row.transformed) table << "\t" << v;
    table << "\t" << verdict_label(row.verdict);
    if (row.verdict == Verdict::Type2 || row.verdict == Verdict::Type1) {
      table << " " << braces(*row.image);
    }
    table << "\n";
    csv += std::to_string(row.t) + "," + joined(row.transformed, ",") + "," +
           verdict_label(row.verdict) + "," + (row.image ? joined(row.image->jumps()) : "") +
           "\n";
  }
  o.result = {{"base", graph_json(g)}, {"columns", closure}, {"rows", std::move(jrows)}};
  o.table = table.str();
  o.csv = csv;
  return o;
}

struct FamilyArgs {
  std::string kind;
  std::optional<Int> n, s, p, x, y;
  std::vector<Int> p_list;
  Int max_order = 100'000;
};

Int need(const std::optional<Int>& v, const char* name) {
  if (!v) throw InputError(std::string("--") + name + " is required for this family");
  return *v;
}

FamilyInstance make_family(const FamilyArgs& a) {
  const std::vector<Int> list = a.p_list.empty() ? std::vector<Int>{1} : a.p_list;
  if (a.kind == "m2") return family_m2(need(a.n, "n"), need(a.s, "s"));
  if (a.kind == "m2-general") {
    return family_m2_general(need(a.n, "n"), need(a.s, "s"), list, a.y.value_or(1));
  }
  if (a.kind == "m3") return family_m3(need(a.n, "n"));
  if (a.kind == "m5") return family_m5(need(a.n, "n"));
  if (a.kind == "m7") return family_m7(need(a.n, "n"));
  if (a.kind == "m3-general") return family_m3_general(need(a.n, "n"), list);
  if (a.kind == "m5-general") return family_m5_general(need(a.n, "n"), list);
  if (a.kind == "m7-general") return family_m7_general(need(a.n, "n"), list);
  if (a.kind == "general-p") {
    return family_general_p({need(a.p, "p"), need(a.n, "n"), need(a.x, "x"), need(a.y, "y")});
  }
  throw InputError("unknown family kind '" + a.kind + "'");
}

Output cmd_family(const FamilyArgs& a, unsigned threads) {
  Output o;
  o.inputs = {{"kind", a.kind}};
  for (auto [name, value] : {std::pair{"n", a.n}, {"s", a.s}, {"p", a.p}, {"x", a.x}, {"y", a.y}}) {
    if (value) o.inputs[name] = *value;
  }
  if (!a.p_list.empty()) o.inputs["p_list"] = a.p_list;

  const auto f = make_family(a);
  const auto rep = family_verify(f, {a.max_order, threads});
  json sets = json::array();
  for (const auto& s : f.sets) sets.push_back(jumps_json(s));
  json relations = json::array();
  for (const auto& rc : rep.relations) {
    relations.push_back({{"t", rc.relation.t},
                         {"from", rc.relation.from + 1},
                         {"to", rc.relation.to + 1},
                         {"holds", rc.holds}});
  }
  json pairs = json::array();
  for (const auto& pw : rep.type1_pairs) {
    pairs.push_back({{"i", pw.i + 1}, {"j", pw.j + 1}, {"witnesses", pw.witnesses}});
  }
  json t2 = json::array();
  for (const auto& g : rep.t2_members) t2.push_back(jumps_json(g.jumps()));
  o.result = {{"kind", f.kind},
              {"order", f.order},
              {"m", f.m},
              {"claim", to_string(f.claim)},
              {"resolved", to_string(rep.resolved)},
              {"notes", f.notes},
              {"sets", std::move(sets)},
              {"relations", std::move(relations)},
              {"type1_pairs", std::move(pairs)},
              {"t2_members", std::move(t2)},
              {"t2_matches_sets", rep.t2_matches_sets},
              {"group", {{"order", rep.group_order}, {"generator", rep.group_generator}}}};

  std::ostringstream table;
  table << f.kind << ": order " << f.order << ", m = " << f.m << ", claim "
        << to_string(f.claim) << ", resolved " << to_string(rep.resolved) << "\n";
  std::string csv = "index,jumps\n";
  for (std::size_t i = 0; i < f.sets.size(); ++i) {
    table << "  R_" << i + 1 << " = " << braces(f.sets[i]) << "\n";
    csv += std::to_string(i + 1) + "," + joined(f.sets[i].jumps()) + "\n";
  }
  table << "relations: " << rep.relations.size() << " verified; T2 group order "
        << rep.group_order << " (generator " << rep.group_generator << ")\n";
  for (const auto& note : f.notes) table << "note: " << note << "\n";
  o.table = table.str();
  o.csv = csv;
  return o;
}

struct IsoArgs {
  Int n = 0;
  std::vector<Int> a, b;
  std::optional<Int> m;
  Int cap = 24;
  std::uint64_t budget = 50'000'000;
};

Output cmd_iso(const IsoArgs& args, unsigned threads) {
  Output o;
  o.inputs = {{"n", args.n}, {"a", args.a}, {"b", args.b}};
  if (args.m) o.inputs["m"] = *args.m;
  const auto g = make_circulant(args.n, args.a);
  const auto h = make_circulant(args.n, args.b);
  json result = {{"a", graph_json(g)}, {"b", graph_json(h)}};
  std::string relation;
  std::string detail;

  const auto witnesses = type1_witnesses(g, h);
  if (g == h) {
    relation = "equal";
  } else if (!witnesses.empty()) {
    relation = "type1";
    result["type1_witnesses"] = witnesses;
    detail = "x = " + joined(witnesses, ",");
  } else {
    std::vector<Int> moduli;
    if (args.m) {
      require_admissible(args.n, *args.m, g.jumps());
      moduli.push_back(*args.m);
    } else {
      moduli = admissible_moduli(g.jumps());
    }
    json type2 = json::array();
    for (Int m : moduli) {
      const auto v = v_set(args.n, m, g, threads);
      std::vector<Int> ts;
      for (const auto& row : v.rows) {
        if (row.verdict == Verdict::Type2 && *row.image == h.jumps()) ts.push_back(row.t);
      }
      if (!ts.empty()) {
        type2.push_back({{"m", m}, {"t", ts}});
        if (relation.empty()) detail = "m = " + std::to_string(m) + ", t = " + joined(ts, ",");
        relation = "type2";
      }
    }
    if (!type2.empty()) result["type2"] = std::move(type2);
  }

  if (relation.empty()) {
    json oracle = json::object();
    const bool gcd_ok = gcd_signature_check(g, h);
    const bool spec_ok = spectra_match(spectral_fingerprint(g), spectral_fingerprint(h));
    oracle["gcd_signature"] = gcd_ok;
    oracle["spectrum"] = spec_ok;
    if (!gcd_ok || !spec_ok) {
      relation = "not-isomorphic";
      detail = !gcd_ok ? "gcd signatures differ" : "spectra differ";
    } else if (args.n > args.cap) {
      relation = "inconclusive";
      detail = "order above the brute-force cap";
    } else {
      try {
        const auto w = brute_force_isomorphic(g, h, {args.cap, args.budget});
        if (w) {
          relation = "isomorphic-unclassified";
          oracle["permutation"] = w->permutation;
          detail = "explicit witness found";
        } else {
          relation = "not-isomorphic";
          detail = "exhaustive search refuted";
        }
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::BudgetExceeded) throw;
        relation = "inconclusive";
        detail = e.what();
      }
    }
    result["oracle"] = std::move(oracle);
  }
  result["relation"] = relation;
  o.result = std::move(result);
  o.table = g.to_string() + " vs " + h.to_string() + ": " + relation +
            (detail.empty() ? "" : " (" + detail + ")") + "\n";
  o.csv = "a,b,relation\n" + joined(g.jumps()) + "," + joined(h.jumps()) + "," + relation + "\n";
  return o;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto [lo, hi] = parse_range(part);
    if (lo < 1 || hi < lo) throw InputError("invalid size range '" + part + "'");
    for (Int k = lo; k <= hi; ++k) sizes.push_back(static_cast<std::size_t>(k));
  }
  if (sizes.empty()) throw InputError("--sizes must not be empty");
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  return sizes;
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv(kBudgetEnv)) {
    try {
      return std::stoull(env);
    } catch (const std::logic_error&) {
      throw InputError(std::string(kBudgetEnv) + " is not a number");
    }
  }
  return 10'000'000;
}

Output cmd_census(Int n, Int m, const std::string& sizes_text, std::optional<std::uint64_t> budget,
                  unsigned threads) {
  Output o;
  const auto sizes = parse_sizes(sizes_text);
  const std::uint64_t cap = budget ? *budget : default_budget();
  o.inputs = {{"n", n}, {"m", m}, {"sizes", sizes}, {"budget", cap}};
  CensusConfig config;
  config.min_size = sizes.front();
  config.max_size = sizes.back();
  config.max_candidates = cap;
  config.threads = threads;
  if (sizes.size() != config.max_size - config.min_size + 1) {
    config.predicate = [&sizes](const JumpSet& r) {
      return std::binary_search(sizes.begin(), sizes.end(), r.size());
    };
  }
  std::ostringstream table;
  std::string csv = "key,members,t2_indices,graph_period,group_order,equals_v\n";
  const auto res = census(n, m, config, [&](const CensusClass& c) {
    json members = json::array();
    std::vector<std::string> texts;
    for (const auto& g : c.members) {
      members.push_back(jumps_json(g.jumps()));
      texts.push_back(braces(g.jumps()));
    }
    o.records.push_back({{"record", "class"},
                         {"members", std::move(members)},
                         {"t2_indices", c.t2_indices},
                         {"graph_period", c.graph_period},
                         {"group_order", c.group_order},
                         {"equals_v", c.equals_v}});
    table << joined(texts) << (c.equals_v ? "  T2 = V" : "") << "\n";
    csv += "\"" + texts.front() + "\",\"" + joined(texts) + "\",\"" + joined(c.t2_indices) +
           "\"," + std::to_string(c.graph_period) + "," + std::to_string(c.group_order) + "," +
           (c.equals_v ? "true" : "false") + "\n";
  });
  o.result = {{"classes", res.classes.size()},
              {"t2_equals_v", res.equals_v_count},
              {"candidates_total", res.candidates_total},
              {"candidates_examined", res.candidates_examined},
              {"anchored", res.anchored},
              {"singletons", res.singleton_count},
              {"budget_exceeded", res.budget_exceeded}};
  table << res.classes.size() << " classes with |T2| > 1, " << res.equals_v_count
        << " with T2 = V; " << res.candidates_examined << " of " << res.candidates_total
        << " candidate sets examined\n";
  o.table = table.str();
  o.csv = csv;
  if (res.budget_exceeded) o.code = kBudget;
  return o;
}

void emit(const std::string& command, const Output& o, const std::string& format,
          std::ostream& out, std::ostream& err) {
  for (const auto& f : o.findings) err << "finding: " << f.get<std::string>() << "\n";
  if (format == "table") {
    out << o.table;
  } else if (format == "csv") {
    out << o.csv;
  } else {
    json envelope = {{"command", command},
                     {"inputs", o.inputs},
                     {"result", o.result},
                     {"findings", o.findings}};
    if (o.records.empty() && command != "census") {
      out << envelope.dump(2) << "\n";
    } else {
      for (const auto& r : o.records) out << r.dump() << "\n";
      out << envelope.dump() << "\n";
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Circulant graph isomorphism toolkit", "circulant"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string format = "json";
  unsigned threads = 1;
  std::string out_path;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "table", "csv"}));
  app.add_option("--threads", threads, "Worker threads for sweeps")->check(CLI::Range(1U, 1024U));
  app.add_option("--out", out_path, "Write output to this file instead of stdout");

  Int n = 0;
  Int m = 0;
  std::vector<Int> values;
  std::string range;

  auto* reduce = app.add_subcommand("reduce", "Canonical connection set of a raw jump list");
  reduce->add_option("--n", n, "Graph order")->required();
  reduce->add_option("--values", values, "Raw jumps")->required()->delimiter(',');

  auto* t1 = app.add_subcommand("t1set", "Type-1 set and its group");
  t1->add_option("--n", n)->required();
  t1->add_option("--set", values)->required()->delimiter(',');

  auto* t2 = app.add_subcommand("t2set", "Type-2 set w.r.t. m and its group");
  t2->add_option("--n", n)->required();
  t2->add_option("--m", m)->required();
  t2->add_option("--set", values)->required()->delimiter(',');

  auto* vs = app.add_subcommand("vset", "Orbit of all theta shifts");
  vs->add_option("--n", n)->required();
  vs->add_option("--m", m)->required();
  vs->add_option("--set", values)->required()->delimiter(',');

  auto* tab = app.add_subcommand("table", "Per-shift transformed jumps and verdicts");
  tab->add_option("--n", n)->required();
  tab->add_option("--m", m)->required();
  tab->add_option("--set", values)->required()->delimiter(',');
  tab->add_option("--t", range, "Shift range a..b");

  FamilyArgs fam;
  std::optional<Int> fn, fs, fp, fx, fy;
  auto* family = app.add_subcommand("family", "Generate and verify a Type-2 family");
  family->add_option("--kind", fam.kind)
      ->required()
      ->check(CLI::IsMember({"m2", "m2-general", "m3", "m3-general", "m5", "m5-general", "m7",
                             "m7-general", "general-p"}));
  family->add_option("--n", fn);
  family->add_option("--s", fs);
  family->add_option("--p", fp);
  family->add_option("--x", fx);
  family->add_option("--y", fy);
  family->add_option("--p-list", fam.p_list)->delimiter(',');
  family->add_option("--max-order", fam.max_order, "Largest order family_verify accepts");

  IsoArgs iso_args;
  std::optional<Int> iso_m;
  auto* iso = app.add_subcommand("iso", "Classify the relation between two circulants");
  iso->add_option("--n", iso_args.n)->required();
  iso->add_option("--a", iso_args.a)->required()->delimiter(',');
  iso->add_option("--b", iso_args.b)->required()->delimiter(',');
  iso->add_option("--m", iso_m);
  iso->add_option("--cap", iso_args.cap, "Brute-force order cap");
  iso->add_option("--budget", iso_args.budget, "Brute-force node budget");

  std::string sizes;
  std::optional<std::uint64_t> census_budget;
  auto* cen = app.add_subcommand("census", "Enumerate Type-2 classes");
  cen->add_option("--n", n)->required();
  cen->add_option("--m", m)->required();
  cen->add_option("--sizes", sizes, "Set sizes, e.g. 4 or 3..5")->required();
  cen->add_option("--budget", census_budget, "Maximum candidate sets");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  try {
    Output o;
    if (sub == reduce) {
      o = cmd_reduce(n, values);
    } else if (sub == t1) {
      o = cmd_t1set(n, values);
    } else if (sub == t2) {
      o = cmd_t2set(n, m, values, threads);
    } else if (sub == vs) {
      o = cmd_vset(n, m, values, threads);
    } else if (sub == tab) {
      o = cmd_table(n, m, values, range, threads);
    } else if (sub == family) {
      fam.n = fn;
      fam.s = fs;
      fam.p = fp;
      fam.x = fx;
      fam.y = fy;
      o = cmd_family(fam, threads);
    } else if (sub == iso) {
      iso_args.m = iso_m;
      o = cmd_iso(iso_args, threads);
    } else {
      o = cmd_census(n, m, sizes, census_budget, threads);
    }

    if (!out_path.empty()) {
      std::ofstream file(out_path);
      if (!file) {
        err << "error: cannot open " << out_path << "\n";
        return kInputError;
      }
      emit(command, o, format, file, err);
    } else {
      emit(command, o, format, out, err);
    }
    if (o.code == kBudget) err << "error: BudgetExceeded: census stopped at the budget\n";
    return o.code;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace circulant::cli
