// Command-line front end: continued fraction utilities, filling
// classification queries, cobordism searches, and the golden-table
// verification harness.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lenfill/cobordism.hpp"
#include "lenfill/fillings.hpp"

using json = nlohmann::ordered_json;
using namespace lenfill;

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

LensSpace parse_lens(const std::string& text) {
  std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      Int p = std::stoll(text);
      if (p == 1) return lens_space(1, 0);
      return lens_space(p, 1);
    }
    Int p = std::stoll(text.substr(0, slash));
    Int q = std::stoll(text.substr(slash + 1));
    if (p == 1) return lens_space(1, 0);
    return lens_space(p, q);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("cannot parse lens space '") + text + "': " + e.what());
  } catch (const std::out_of_range&) {
    throw UsageError("number out of range in '" + text + "'");
  }
}

NegCF parse_cf_or_lens(const std::string& text, LensSpace* lens_out = nullptr) {
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw UsageError("unterminated bracket list in '" + text + "'");
    NegCF cf;
    std::stringstream ss(text.substr(1, text.size() - 2));
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) cf.coeffs.push_back(std::stoll(item));
    if (lens_out) *lens_out = lens_of(cf);
    return cf;
  }
  LensSpace l = parse_lens(text);
  if (lens_out) *lens_out = l;
  if (l.p == 1) return NegCF{};
  return neg_cf(l.p, l.q);
}

std::vector<Int> parse_rot(const std::string& text) {
  std::vector<Int> rot;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) rot.push_back(std::stoll(item));
  return rot;
}

std::string seq_str(const NullSequence& s) { return s.str(); }

std::string rot_str(const std::vector<Int>& rot) {
  std::string out = "(";
  for (std::size_t i = 0; i < rot.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(rot[i]);
  }
  return out + ")";
}

json lens_json(const LensSpace& l) { return json{{"p", l.p}, {"q", l.q}}; }

json filling_json(const Filling& f) {
  return json{{"seq", f.seq.entries}, {"b2", f.b2},           {"euler", f.euler},
              {"h1", f.h1_order},     {"plumbing", f.is_plumbing},
              {"rational_ball", f.is_rational_ball}};
}

json filling_set_json(const FillingSet& fs, const std::vector<Int>& rot, bool ut) {
  json out;
  out["lens"] = lens_json(fs.lens);
  out["structure"] = json{{"rot", rot}, {"universally_tight", ut}};
  json members = json::array();
  for (const auto& f : fs.members) members.push_back(filling_json(f));
  out["fillings"] = std::move(members);
  out["count"] = fs.count();
  return out;
}

std::string data_dir() {
  if (const char* env = std::getenv("LENFILL_DATA_DIR")) return env;
#ifdef LENFILL_DATA_DIR
  return LENFILL_DATA_DIR;
#else
  return "data";
#endif
}

// ---------------------------------------------------------------------------
// verify: golden tables

struct TableEntry {
  LensSpace lens;
  bool ut = false;
  std::vector<Int> rot;
  std::size_t expected_count = 0;
  std::vector<NullSequence> expected_seqs;  // optional
  std::string source_line;
};

struct SweepEntry {
  std::string name;
  Int max_p = 0;
};

struct GoldenTable {
  std::string name;
  std::vector<TableEntry> entries;
  std::vector<SweepEntry> sweeps;
};

std::vector<NullSequence> parse_seq_list(const std::string& text) {
  std::vector<NullSequence> out;
  std::string cur;
  for (char ch : text) {
    if (ch == '(' || ch == ' ') continue;
    if (ch == ')') {
      NullSequence s;
      std::stringstream ss(cur);
      std::string item;
      while (std::getline(ss, item, ','))
        if (!item.empty()) s.entries.push_back(std::stoll(item));
      out.push_back(std::move(s));
      cur.clear();
      continue;
    }
    if (ch == ';') continue;
    cur.push_back(ch);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

GoldenTable load_table(const std::string& name) {
  std::string path = data_dir() + "/tables/" + name + ".tbl";
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open golden table " + path);
  GoldenTable table;
  table.name = name;
  std::string line;
  while (std::getline(in, line)) {
    std::string text = trim(line.substr(0, line.find('#')));
    if (text.empty()) continue;
    if (text.rfind("sweep", 0) == 0) {
      std::stringstream ss(text);
      std::string kw, sweep_name;
      Int max_p = 0;
      ss >> kw >> sweep_name >> max_p;
      if (sweep_name.empty() || max_p <= 0)
        throw UsageError("bad sweep line in " + path + ": " + line);
      table.sweeps.push_back({sweep_name, max_p});
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream ss(text);
    std::string field;
    while (std::getline(ss, field, '|')) fields.push_back(trim(field));
    if (fields.size() < 3 || fields.size() > 4)
      throw UsageError("bad table line in " + path + ": " + line);
    TableEntry entry;
    entry.source_line = text;
    entry.lens = parse_lens(fields[0]);
    if (fields[1] == "ut")
      entry.ut = true;
    else
      entry.rot = parse_rot(fields[1]);
    entry.expected_count = static_cast<std::size_t>(std::stoll(fields[2]));
    if (fields.size() == 4) entry.expected_seqs = parse_seq_list(fields[3]);
    table.entries.push_back(std::move(entry));
  }
  return table;
}

struct VerifyReport {
  std::size_t passed = 0;
  std::size_t failed = 0;
  json lines = json::array();

  void record(bool ok, const std::string& what, const std::string& detail, bool json_mode) {
    (ok ? passed : failed) += 1;
    if (json_mode) {
      lines.push_back(json{{"entry", what}, {"pass", ok}, {"detail", detail}});
    } else {
      std::cout << (ok ? "[ok]   " : "[FAIL] ") << what;
      if (!detail.empty()) std::cout << "  (" << detail << ")";
      std::cout << "\n";
    }
  }
};

// A universally tight structure on a one- or two-component space has two
// fillings exactly on L(4,1), L(8,3), L(9,2) and L(4n-1,4), up to
// equivalence; a virtually overtwisted one exactly when a framing-4
// component is consistently stabilized. Everything else gets the plumbing
// alone.
std::size_t two_component_expected(const LensSpace& l, const Chain& c) {
  NegCF cf = chain_cf(c);
  if (is_universally_tight(c)) {
    if (lens_equivalent(l, lens_space(4, 1))) return 2;
    if (l.p == 8 && lens_equivalent(l, lens_space(8, 3))) return 2;
    if (l.p == 9 && lens_equivalent(l, lens_space(9, 2))) return 2;
    if (l.p % 4 == 3 && l.p >= 7 && lens_equivalent(l, lens_space(l.p, 4))) return 2;
    return 1;
  }
  for (const auto& comp : c.components)
    if (comp.a == 4 && comp.pos + comp.neg == 2 && (comp.pos == 0 || comp.neg == 0)) return 2;
  return 1;
}

void run_sweep(const SweepEntry& sweep, Int cap, VerifyReport& report, bool json_mode) {
  Int max_p = std::min(sweep.max_p, cap);
  if (sweep.name == "two-component-rule") {
    std::size_t checked = 0, bad = 0;
    std::string first_bad;
    for (Int p = 2; p <= max_p; ++p)
      for (Int q = 1; q < p; ++q) {
        if (gcd_int(p, q) != 1 || cf_length(p, q) > 2) continue;
        LensSpace l = lens_space(p, q);
        for (const Chain& c : enumerate_structures(p, q)) {
          std::size_t expect = two_component_expected(l, c);
          std::size_t got = fillings_of_chain(c).count();
          ++checked;
          if (expect != got && bad++ == 0)
            first_bad = l.str() + " rot" + rot_str(rotation_vector(c)) + " expected " +
                        std::to_string(expect) + " got " + std::to_string(got);
        }
      }
    report.record(bad == 0,
                  "sweep two-component-rule p<=" + std::to_string(max_p) + " (" +
                      std::to_string(checked) + " structures)",
                  first_bad, json_mode);
    return;
  }
  if (sweep.name == "three-component-single") {
    std::size_t checked = 0, bad = 0;
    std::string first_bad;
    for (Int p = 2; p <= max_p; ++p)
      for (Int q = 1; q < p; ++q) {
        if (gcd_int(p, q) != 1 || cf_length(p, q) != 3) continue;
        bool has_single = false;
        for (const Chain& c : enumerate_structures(p, q))
          if (fillings_of_chain(c).count() == 1) {
            has_single = true;
            break;
          }
        ++checked;
        if (!has_single && bad++ == 0) first_bad = lens_space(p, q).str();
      }
    report.record(bad == 0,
                  "sweep three-component-single p<=" + std::to_string(max_p) + " (" +
                      std::to_string(checked) + " spaces)",
                  first_bad, json_mode);
    return;
  }
  throw UsageError("unknown sweep '" + sweep.name + "'");
}

void run_table(const GoldenTable& table, Int cap, VerifyReport& report, bool json_mode) {
  for (const auto& entry : table.entries) {
    FillingSet fs;
    std::string what = table.name + ": " + entry.lens.str() + " " +
                       (entry.ut ? std::string("ut") : ("rot" + rot_str(entry.rot)));
    try {
      if (entry.ut)
        fs = ut_fillings(entry.lens.p, entry.lens.q);
      else
        fs = fillings_of_chain(chain_from_rotation(entry.lens.p, entry.lens.q, entry.rot));
    } catch (const std::exception& e) {
      report.record(false, what, e.what(), json_mode);
      continue;
    }
    bool ok = fs.count() == entry.expected_count;
    std::string detail =
        "count " + std::to_string(fs.count()) + ", expected " + std::to_string(entry.expected_count);
    if (ok && !entry.expected_seqs.empty()) {
      std::vector<NullSequence> got;
      for (const auto& f : fs.members) got.push_back(f.seq);
      std::sort(got.begin(), got.end());
      if (got != entry.expected_seqs) {
        ok = false;
        detail = "descriptor mismatch:";
        for (const auto& s : got) detail += " " + seq_str(s);
      }
    }
    report.record(ok, what, ok ? "" : detail, json_mode);
  }
  for (const auto& sweep : table.sweeps) run_sweep(sweep, cap, report, json_mode);
}

// ---------------------------------------------------------------------------
// cobordism search

json move_json(const CobordismMove& m) {
  json out;
  out["kind"] = move_kind_str(m.kind);
  if (m.kind == MoveKind::RolledUp1 || m.kind == MoveKind::RolledUp2 ||
      m.kind == MoveKind::RolledUp3) {
    out["index"] = m.index;
    out["reversed"] = m.reversed;
  }
  if (m.kind == MoveKind::TorusPlusOne || m.kind == MoveKind::TorusMinusOne)
    out["slope"] = m.slope.str();
  return out;
}

int cmd_cobordism(const LensSpace& src, const LensSpace& dst, const std::optional<std::vector<Int>>& rot,
                  int depth, bool json_mode) {
  json out;
  out["src"] = lens_json(src);
  out["dst"] = lens_json(dst);
  Verdict v = length_obstruction(src, dst);
  out["verdict"] = verdict_str(v);
  json path = nullptr;
  bool depth_exhausted = false;
  if (v == Verdict::Rigid) out["equivalent"] = lens_equivalent(src, dst);
  if (v == Verdict::Open) {
    NegCF src_cf = src.p == 1 ? NegCF{} : neg_cf(src.p, src.q);
    NegCF dst_cf = dst.p == 1 ? NegCF{} : neg_cf(dst.p, dst.q);
    RolledUpSearch search = rolled_up_reachable(src_cf, dst_cf, depth);
    depth_exhausted = search.depth_exhausted;
    if (search.path) {
      json moves = json::array();
      NegCF at = src_cf;
      for (const auto& step : search.path->steps) {
        json mj = move_json(step.move);
        mj["to"] = step.result.empty() ? "S3" : lens_of(step.result).str();
        moves.push_back(std::move(mj));
        at = step.result;
      }
      path = json{{"moves", std::move(moves)}};
    }
    if (path.is_null() && rot) {
      Chain c = chain_from_rotation(src.p, src.q, *rot);
      // One torus-plus-one surgery along a balanced length-4 block.
      for (const auto& [comp, slope] : balanced_central_slopes(c, 2)) {
        LensSpace got = torus_plus_one(src, slope);
        if (lens_equivalent(got, dst)) {
          CobordismMove m{MoveKind::TorusPlusOne, comp, false, slope};
          json mj = move_json(m);
          mj["to"] = got.str();
          path = json{{"moves", json::array({mj})}};
          break;
        }
      }
    }
    if (path.is_null()) {
      // One torus-minus-one surgery along a small slope in (-p/q, 0); these
      // exist in every tight structure.
      for (Int a = 1; a <= 12 && path.is_null(); ++a)
        for (Int b = -12; b < 0; ++b) {
          if (gcd_int(a, b) != 1) continue;
          Slope s(b, a);
          if (!(Slope(-src.p, src.q) < s && s < Slope(0, 1))) continue;
          LensSpace got = torus_minus_one(src, s);
          if (lens_equivalent(got, dst)) {
            CobordismMove m{MoveKind::TorusMinusOne, 0, false, s};
            json mj = move_json(m);
            mj["to"] = got.str();
            path = json{{"moves", json::array({mj})}};
            break;
          }
        }
    }
  }
  out["path"] = path;
  if (v == Verdict::Open && path.is_null()) out["depth_exhausted"] = depth_exhausted;
  if (json_mode) {
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << src.str() << " -> " << dst.str() << ": " << out["verdict"].get<std::string>()
            << "\n";
  if (v == Verdict::Rigid)
    std::cout << "  any Stein cobordism is an h-cobordism; spaces "
              << (out["equivalent"].get<bool>() ? "are" : "are NOT") << " equivalent\n";
  if (!path.is_null()) {
    for (const auto& mj : path["moves"])
      std::cout << "  " << mj["kind"].get<std::string>() << " -> " << mj["to"].get<std::string>()
                << (mj.contains("slope") ? " (slope " + mj["slope"].get<std::string>() + ")" : "")
                << "\n";
  } else if (v == Verdict::Open) {
    std::cout << "  no path found" << (depth_exhausted ? " within depth limit" : "") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lens space filling classification and cobordism search"};
  app.require_subcommand(1);
  bool json_mode = false;
  app.add_flag("--json", json_mode, "machine-readable output");

  std::string cf_arg;
  auto* cf_cmd = app.add_subcommand("cf", "negative continued fraction of p/q");
  cf_cmd->fallthrough();
  cf_cmd->add_option("p/q", cf_arg, "lens space as p/q")->required();

  std::string dual_arg;
  auto* dual_cmd = app.add_subcommand("dual", "expansion of p/(p-q)");
  dual_cmd->fallthrough();
  dual_cmd->add_option("p/q", dual_arg, "lens space as p/q or a bracket list")->required();

  std::string path_arg;
  auto* path_cmd = app.add_subcommand("path", "minimal Farey path from 0 to -p/q");
  path_cmd->fallthrough();
  path_cmd->add_option("p/q", path_arg, "lens space as p/q")->required();

  std::string fill_arg, rot_arg;
  bool want_ut = false;
  auto* fill_cmd = app.add_subcommand("fillings", "minimal fillings of a tight structure");
  fill_cmd->fallthrough();
  fill_cmd->add_option("p/q", fill_arg, "lens space as p/q")->required();
  auto* ut_flag = fill_cmd->add_flag("--ut", want_ut, "universally tight structure (default)");
  fill_cmd->add_option("--rot", rot_arg, "rotation numbers r1,r2,...")->excludes(ut_flag);

  std::string tables_arg;
  Int max_p = 1 << 20;
  auto* verify_cmd = app.add_subcommand("verify", "run the golden classification tables");
  verify_cmd->fallthrough();
  verify_cmd->add_option("--tables", tables_arg, "cor5, 3component or all")->required();
  verify_cmd->add_option("--max-p", max_p, "cap sweep ranges at this order");

  std::string cob_src, cob_dst, cob_rot;
  int depth = 6;
  auto* cob_cmd = app.add_subcommand("cobordism", "Stein cobordism verdict and move search");
  cob_cmd->fallthrough();
  cob_cmd->add_option("src", cob_src, "source lens space p/q")->required();
  cob_cmd->add_option("dst", cob_dst, "target lens space p/q")->required();
  cob_cmd->add_option("--rot", cob_rot, "source structure rotation numbers");
  cob_cmd->add_option("--depth", depth, "rolled-up search depth");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*cf_cmd) {
      LensSpace l = parse_lens(cf_arg);
      if (l.p == 1) throw UsageError("p must exceed q: the empty chain is S3");
      NegCF cf = neg_cf(l.p, l.q);
      if (json_mode)
        std::cout << json{{"lens", lens_json(l)}, {"cf", cf.coeffs}}.dump(2) << "\n";
      else
        std::cout << cf.str() << "\n";
      return 0;
    }
    if (*dual_cmd) {
      LensSpace l;
      NegCF cf = parse_cf_or_lens(dual_arg, &l);
      if (cf.empty()) throw UsageError("p must exceed q: the empty chain has no dual");
      NegCF dual = riemenschneider_dual(cf);
      if (json_mode)
        std::cout << json{{"lens", lens_json(l)}, {"cf", cf.coeffs}, {"dual", dual.coeffs}}.dump(2)
                  << "\n";
      else
        std::cout << dual.str() << "\n";
      return 0;
    }
    if (*path_cmd) {
      LensSpace l = parse_lens(path_arg);
      if (l.p == 1) throw UsageError("p must exceed q");
      FareyPath p = minimal_path(l.p, l.q);
      if (json_mode) {
        json verts = json::array();
        for (const auto& v : p.vertices) verts.push_back(v.str());
        std::cout << json{{"lens", lens_json(l)}, {"vertices", verts}}.dump(2) << "\n";
      } else {
        for (std::size_t i = 0; i < p.vertices.size(); ++i)
          std::cout << (i ? " " : "") << p.vertices[i].str();
        std::cout << "\n";
      }
      return 0;
    }
    if (*fill_cmd) {
      LensSpace l = parse_lens(fill_arg);
      if (l.p == 1) throw UsageError("p must exceed q");
      FillingSet fs;
      std::vector<Int> rot;
      bool ut;
      if (!rot_arg.empty()) {
        rot = parse_rot(rot_arg);
        Chain c = chain_from_rotation(l.p, l.q, rot);
        ut = is_universally_tight(c);
        fs = fillings_of_chain(c);
      } else {
        NegCF cf = neg_cf(l.p, l.q);
        for (Int a : cf.coeffs) rot.push_back(a - 2);
        ut = true;
        fs = ut_fillings(l.p, l.q);
      }
      if (json_mode) {
        std::cout << filling_set_json(fs, rot, ut).dump(2) << "\n";
      } else {
        std::cout << l.str() << (ut ? " universally tight" : " virtually overtwisted") << ": "
                  << fs.count() << " filling" << (fs.count() == 1 ? "" : "s") << "\n";
        for (const auto& f : fs.members)
          std::cout << "  " << seq_str(f.seq) << "  b2=" << f.b2 << " euler=" << f.euler
                    << " h1=" << f.h1_order << (f.is_plumbing ? " [plumbing]" : "")
                    << (f.is_rational_ball ? " [rational ball]" : "") << "\n";
      }
      return 0;
    }
    if (*verify_cmd) {
      std::vector<std::string> names;
      if (tables_arg == "all")
        names = {"cor5", "3component"};
      else if (tables_arg == "cor5" || tables_arg == "3component")
        names = {tables_arg};
      else
        throw UsageError("unknown table selection '" + tables_arg + "'");
      VerifyReport report;
      for (const auto& name : names) run_table(load_table(name), max_p, report, json_mode);
      if (json_mode) {
        std::cout << json{{"entries", report.lines},
                          {"passed", report.passed},
                          {"failed", report.failed}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << report.passed << "/" << (report.passed + report.failed)
                  << " entries passed\n";
      }
      return report.failed == 0 ? 0 : kExitVerifyFailure;
    }
    if (*cob_cmd) {
      LensSpace src = parse_lens(cob_src);
      LensSpace dst = parse_lens(cob_dst);
      std::optional<std::vector<Int>> rot;
      if (!cob_rot.empty()) rot = parse_rot(cob_rot);
      return cmd_cobordism(src, dst, rot, depth, json_mode);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailure;
  }
  return 0;
}
