#include "cli.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lcak/catalog.hpp"
#include "lcak/fuzz.hpp"
#include "lcak/report.hpp"
#include "lcak/spec_file.hpp"

namespace lcak::cli {

namespace {

using Q = Rational;

std::string join(const std::vector<std::string>& v, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

void render_text(const Report& r, std::ostream& out) {
  out << r.name << " (" << r.mode << ", dim " << r.dim << ")\n";
  out << "  kind: " << r.kind << "\n";
  for (const auto& [key, value] : r.flags)
    out << "  " << key << std::string(26 - std::min<std::size_t>(25, key.size()), ' ') << (value ? "yes" : "no") << "\n";
  out << "  theta: [" << join(r.theta) << "]\n";
  out << "  lee field T: [" << join(r.lee_field) << "]\n";
  if (!r.characteristic_field.empty()) out << "  characteristic field V: [" << join(r.characteristic_field) << "]\n";
  if (r.automorphism_T) out << "  automorphism T: [" << join(*r.automorphism_T) << "]\n";
  int held = 0;
  for (const auto& id : r.identities) held += id.holds;
  out << "  identities: " << held << "/" << r.identities.size() << " hold\n";
  for (const auto& id : r.identities)
    if (!id.holds) out << "    FAILED " << id.name << " residual " << id.value << "\n";
  for (const auto& e : r.equivalences)
    if (e.applicable)
      out << "  equivalence " << e.name << ": " << (e.lhs ? "true" : "false") << " / " << (e.rhs ? "true" : "false")
          << (e.lhs == e.rhs ? "" : "  INCONSISTENT") << "\n";
  for (const auto& w : r.warnings) out << "  warning: " << w << "\n";
  if (r.feasibility)
    out << "  symplectic feasibility: " << r.feasibility->status << " (optimum " << r.feasibility->optimum
        << ", subspace dim " << r.feasibility->subspace_dim << ", certificate " << r.feasibility->certificate << ")\n";
  if (r.classification) {
    if (!r.classification->error.empty())
      out << "  classification: " << r.classification->error << "\n";
    else
      out << "  classification: " << r.classification->label << " (jordan " << r.classification->jordan
          << (r.classification->agree ? ", agrees" : ", DISAGREES") << ")\n";
  }
}

Report report_for(const SpecFile& spec, ArithmeticMode mode, double tol, const std::string& name) {
  SpecFile s = spec;
  s.mode = mode;
  s.tolerance = tol;
  if (mode == ArithmeticMode::Exact) {
    std::optional<AlmostAbelianParams<Q>> aa = s.almost_abelian;
    return run_report(build_structure<Q>(s), name, aa);
  }
  std::optional<AlmostAbelianParams<double>> aa;
  if (s.almost_abelian) aa = s.almost_abelian->cast<double>();
  return run_report(build_structure<double>(s), name, aa);
}

Report catalog_report(const CatalogEntry& e, ArithmeticMode mode) {
  if (mode == ArithmeticMode::Exact) return run_report(e.structure, e.name, e.almost_abelian);
  const auto& s = e.structure;
  AlmostHermitianStructure<double> sd(s.algebra().cast<double>(), matrix_cast<double>(s.J()),
                                      matrix_cast<double>(s.g()));
  std::optional<AlmostAbelianParams<double>> aa;
  if (e.almost_abelian) aa = e.almost_abelian->cast<double>();
  return run_report(sd, e.name, aa);
}

void print_error(const Error& e, const std::string& source, std::ostream& err) {
  err << "error: " << e.reason();
  if (!source.empty()) err << " in " << source;
  if (e.line() > 0) err << " (line " << e.line() << ")";
  if (!e.field().empty() && e.field() != source) err << " [" << e.field() << "]";
  err << ": " << e.what() << "\n";
}

std::vector<Q> parse_list(const std::string& text, const std::string& what) {
  std::vector<Q> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    try {
      out.push_back(ScalarTraits<Q>::parse(item));
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, e.reason(), what + ": " + e.what(), what);
    }
  }
  return out;
}

AlmostAbelianParams<Q> parse_aa(const std::string& a, const std::string& b, const std::string& v,
                                const std::string& m) {
  auto p = AlmostAbelianParams<Q>::zero(2);
  const auto av = parse_list(a, "--a");
  const auto bv = parse_list(b, "--b");
  const auto vv = parse_list(v, "--v");
  std::vector<Q> mv;
  std::stringstream ss(m);
  std::string row;
  int rows = 0;
  while (std::getline(ss, row, ';')) {
    const auto r = parse_list(row, "--A");
    if (r.size() != 2) throw Error(ErrorCode::ParseError, "BAD_SHAPE", "--A: rows need 2 entries", "--A");
    mv.insert(mv.end(), r.begin(), r.end());
    ++rows;
  }
  if (av.size() != 1) throw Error(ErrorCode::ParseError, "BAD_SHAPE", "--a: expected one scalar", "--a");
  if (bv.size() != 2) throw Error(ErrorCode::ParseError, "BAD_SHAPE", "--b: expected 2 entries", "--b");
  if (vv.size() != 2) throw Error(ErrorCode::ParseError, "BAD_SHAPE", "--v: expected 2 entries", "--v");
  if (rows != 2) throw Error(ErrorCode::ParseError, "BAD_SHAPE", "--A: expected 2 rows", "--A");
  p.a = av[0];
  p.b = bv;
  p.v = vv;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) p.A(i, j) = mv[2 * i + j];
  return p;
}

struct CheckOptions {
  std::vector<std::string> files;
  bool json = false;
  double tol = -1;
  bool exact = false;
  bool floating = false;
  std::vector<std::string> require;
};

int cmd_check(const CheckOptions& o, std::ostream& out, std::ostream& err) {
  struct Outcome {
    std::optional<Report> report;
    std::optional<Error> error;
  };
  // Each file is independent; results are printed in argument order.
  std::vector<std::future<Outcome>> jobs;
  for (const auto& file : o.files)
    jobs.push_back(std::async(std::launch::async, [&o, file]() -> Outcome {
      try {
        const SpecFile spec = load_spec(file);
        const ArithmeticMode mode = o.exact ? ArithmeticMode::Exact : o.floating ? ArithmeticMode::Float : spec.mode;
        const double tol = o.tol >= 0 ? o.tol : spec.tolerance;
        return {report_for(spec, mode, tol, spec.name.empty() ? file : spec.name), std::nullopt};
      } catch (const Error& e) {
        return {std::nullopt, e};
      }
    }));

  int code = kPass;
  nlohmann::ordered_json batch = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    Outcome res = jobs[k].get();
    if (res.error) {
      print_error(*res.error, o.files[k], err);
      code = kInputError;
      continue;
    }
    const Report& r = *res.report;
    bool ok = r.consistent();
    for (const auto& want : o.require) {
      const bool known = std::any_of(r.flags.begin(), r.flags.end(), [&](const auto& f) { return f.first == want; });
      if (!known) {
        err << "error: UNKNOWN_FLAG: --require " << want << "\n";
        return kInputError;
      }
      if (!r.flag(want)) {
        err << r.name << ": required flag " << want << " is false\n";
        ok = false;
      }
    }
    if (!ok && code == kPass) code = kCheckFailed;
    if (o.json) {
      if (o.files.size() == 1)
        out << to_json(r) << "\n";
      else
        batch.push_back(nlohmann::ordered_json::parse(to_json(r)));
    } else {
      render_text(r, out);
    }
  }
  if (o.json && o.files.size() > 1) out << batch.dump(2) << "\n";
  return code;
}

int cmd_catalog(const std::string& name, bool json, bool floating, std::ostream& out, std::ostream& err) {
  if (name.empty()) {
    for (const auto& e : catalog()) out << e.name << "\t" << e.description << "\n";
    return kPass;
  }
  const CatalogEntry* entry = nullptr;
  try {
    entry = &catalog_entry(name);
  } catch (const Error& e) {
    print_error(e, "", err);
    err << "known entries: " << join(catalog_names()) << "\n";
    return kInputError;
  }
  const Report r = catalog_report(*entry, floating ? ArithmeticMode::Float : ArithmeticMode::Exact);
  if (json)
    out << to_json(r) << "\n";
  else
    render_text(r, out);
  return r.consistent() ? kPass : kCheckFailed;
}

int cmd_classify(const std::string& a, const std::string& b, const std::string& v, const std::string& m, bool json,
                 std::ostream& out, std::ostream& err) {
  try {
    const auto p = parse_aa(a, b, v, m);
    const auto c = classify_4d(p);
    if (json) {
      nlohmann::ordered_json j;
      j["label"] = c.label.str();
      j["jordan"] = c.jordan.str();
      j["b_dot_v"] = to_string(c.b_dot_v);
      j["agree"] = c.agree();
      out << j.dump(2) << "\n";
    } else {
      out << "label: " << c.label.str() << "\n"
          << "jordan cross-check: " << c.jordan.str() << "\n"
          << "b.v: " << to_string(c.b_dot_v) << "\n"
          << (c.agree() ? "agree" : "DISAGREE") << "\n";
    }
    return c.agree() ? kPass : kCheckFailed;
  } catch (const Error& e) {
    print_error(e, "", err);
    return kInputError;
  }
}

int cmd_fuzz(const FuzzOptions& o, std::ostream& out) {
  const FuzzSummary s = fuzz(o);
  out << s.to_json() << "\n";
  return s.ok() ? kPass : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Almost Hermitian structures on Lie algebras: LCS, adapted, pluricanonical and related conditions"};
  app.name("lcak");
  app.require_subcommand(0, 1);
  bool version = false;
  app.add_flag("--version", version, "Print version and sign conventions");

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Analyse structures described in JSON spec files");
  check_cmd->add_option("files", check.files, "Spec files")->required();
  check_cmd->add_flag("--json", check.json, "Emit the JSON report");
  check_cmd->add_option("--tol", check.tol, "Tolerance (float mode)")->check(CLI::NonNegativeNumber);
  auto* exact_flag = check_cmd->add_flag("--exact", check.exact, "Exact rational arithmetic");
  check_cmd->add_flag("--float", check.floating, "Double precision arithmetic")->excludes(exact_flag);
  check_cmd->add_option("--require", check.require, "Fail unless this flag is true (repeatable)");

  std::string cat_name;
  bool cat_json = false, cat_float = false;
  auto* cat_cmd = app.add_subcommand("catalog", "List built-in structures or report on one");
  cat_cmd->add_option("name", cat_name, "Entry name");
  cat_cmd->add_flag("--json", cat_json, "Emit the JSON report");
  cat_cmd->add_flag("--float", cat_float, "Double precision arithmetic");

  std::string aa_a, aa_b, aa_v, aa_m;
  bool aa_json = false;
  auto* cls_cmd = app.add_subcommand("classify-aa", "Classify 4-dimensional almost abelian data (a, b, v, A)");
  cls_cmd->add_option("--a", aa_a, "Scalar a")->required();
  cls_cmd->add_option("--b", aa_b, "\"b1,b2\"")->required();
  cls_cmd->add_option("--v", aa_v, "\"v1,v2\"")->required();
  cls_cmd->add_option("--A", aa_m, "\"a11,a12;a21,a22\"")->required();
  cls_cmd->add_flag("--json", aa_json, "Emit JSON");

  FuzzOptions fz;
  std::string family = "random_hermitian";
  bool fz_float = false;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Run the identity and implication checks on random structures");
  fuzz_cmd->add_option("--seed", fz.seed, "Seed");
  fuzz_cmd->add_option("--count", fz.count, "Number of samples")->check(CLI::NonNegativeNumber);
  fuzz_cmd->add_option("--family", family, "almost_abelian_4d | random_unimodular | random_hermitian");
  fuzz_cmd->add_flag("--float", fz_float, "Double precision arithmetic");
  fuzz_cmd->add_option("--tol", fz.tolerance, "Relative tolerance (float mode)");
  fuzz_cmd->add_option("--threads", fz.threads, "Worker threads (0: all cores)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  if (version) {
    for (const auto& [key, value] : convention_metadata()) out << key << ": " << value << "\n";
    return kPass;
  }
  if (*check_cmd) return cmd_check(check, out, err);
  if (*cat_cmd) return cmd_catalog(cat_name, cat_json, cat_float, out, err);
  if (*cls_cmd) return cmd_classify(aa_a, aa_b, aa_v, aa_m, aa_json, out, err);
  if (*fuzz_cmd) {
    const auto f = parse_family(family);
    if (!f) {
      err << "error: UNKNOWN_FAMILY: " << family << "\n";
      return kInputError;
    }
    fz.family = *f;
    fz.mode = fz_float ? ArithmeticMode::Float : ArithmeticMode::Exact;
    return cmd_fuzz(fz, out);
  }
  out << app.help();
  return kInputError;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace lcak::cli
