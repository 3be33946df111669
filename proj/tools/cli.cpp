#include "cli.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "polyzeta/errors.hpp"
#include "polyzeta/itword.hpp"
#include "polyzeta/multipolylog.hpp"
#include "polyzeta/polylog.hpp"
#include "polyzeta/precision.hpp"
#include "polyzeta/quadrature.hpp"
#include "polyzeta/rational.hpp"
#include "polyzeta/registry.hpp"
#include "polyzeta/sums.hpp"

namespace polyzeta::cli {
namespace {

using nlohmann::json;

struct Config {
  int digits = 50;
  bool json = false;
  bool parallel = false;

  PrecisionPolicy policy() const { return PrecisionPolicy::from_digits(digits); }
};

std::vector<BigRational> parse_rationals(const std::vector<std::string>& items) {
  std::vector<BigRational> out;
  out.reserve(items.size());
  for (const auto& s : items) out.push_back(BigRational::parse(s));
  return out;
}

std::string fmt(const XReal& x, const Config& cfg) { return x.to_string(cfg.digits); }
std::string fmt_short(const XReal& x) { return x.to_string(3); }

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

void emit_estimate(std::ostream& out, const Config& cfg, const std::string& label, const XReal& value,
                   const XReal& error, json extra = json::object()) {
  if (cfg.json) {
    json j = {{"value", fmt(value, cfg)}, {"est_error", fmt(error, cfg)}, {"digits", cfg.digits}};
    j.update(extra);
    print_json(out, j);
    return;
  }
  out << label << " = " << fmt(value, cfg) << "\n";
  out << "est_error = " << fmt_short(error) << "\n";
  for (const auto& [k, v] : extra.items()) out << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

// eval

struct EvalArgs {
  long s = 0;
  std::string z;
  std::string path = "auto";
  std::vector<int> weights;
  std::vector<std::string> args;
  std::vector<std::string> ys;
};

LiPath li_path_from_name(const std::string& name) {
  static const std::map<std::string, LiPath> kPaths = {{"auto", LiPath::kAutomatic},
                                                       {"series", LiPath::kSeries},
                                                       {"reflection", LiPath::kReflection},
                                                       {"inversion", LiPath::kInversion},
                                                       {"alternating", LiPath::kAlternating}};
  return kPaths.at(name);
}

int cmd_eval_li(const EvalArgs& a, const Config& cfg, std::ostream& out) {
  const auto prec = cfg.policy();
  const BigRational z = BigRational::parse(a.z);
  const XReal value = li(a.s, z.to_xreal(prec.work_bits), prec, li_path_from_name(a.path));
  emit_estimate(out, cfg, "Li_" + std::to_string(a.s) + "(" + z.to_string() + ")", value, prec.tol());
  return kExitOk;
}

int cmd_eval_mpl(const EvalArgs& a, const Config& cfg, std::ostream& out) {
  MPLSpec spec{a.weights, parse_rationals(a.args)};
  validate(spec);
  const auto r = mpl_eval(spec, cfg.policy());
  emit_estimate(out, cfg, spec.to_string(), r.value, r.error,
                {{"class", std::string(mpl_class_name(mpl_classify(spec)))}});
  return kExitOk;
}

int cmd_eval_l(const EvalArgs& a, const Config& cfg, std::ostream& out) {
  LNotationSpec spec{a.weights, parse_rationals(a.ys)};
  const auto r = l_eval(spec, cfg.policy());
  emit_estimate(out, cfg, spec.to_string(), r.value, r.error);
  return kExitOk;
}

// dual

struct DualArgs {
  std::vector<int> weights;
  std::vector<std::string> ys;
  std::string word;
  bool check = false;
};

int cmd_dual(const DualArgs& a, const Config& cfg, std::ostream& out) {
  json j;
  std::optional<LNotationSpec> input;
  SignedWord word;
  if (!a.word.empty()) {
    if (!a.weights.empty() || !a.ys.empty()) throw DomainError("--word cannot be combined with --weights/--ys");
    word = SignedWord::parse(a.word);
    if (!word.letters.empty() && !word.letters.back().is_zero()) {
      const Decoded d = decode(word);
      if (d.coefficient == 1) input = d.spec;
      j["input_decoded"] = {{"coefficient", d.coefficient}, {"l", d.spec.to_string()}};
    }
  } else {
    if (a.weights.empty()) throw DomainError("dual needs --weights and --ys, or --word");
    input = LNotationSpec{a.weights, parse_rationals(a.ys)};
    word = encode(*input);
    j["input"] = input->to_string();
  }
  const SignedWord dw = dual(word);
  j["word"] = word.to_string();
  j["dual"] = dw.to_string();
  const Decoded dec = decode(dw);
  j["decoded"] = dec.spec.to_string();
  j["coefficient"] = dec.coefficient;

  int code = kExitOk;
  std::string check_line;
  if (a.check) {
    const auto prec = cfg.policy();
    Estimate lhs;
    if (input) {
      lhs = l_eval(*input, prec);
    } else {
      const Decoded d = decode(word);
      lhs = l_eval(d.spec, prec);
      lhs.value *= d.coefficient;
    }
    Estimate rhs = l_eval(dec.spec, prec);
    rhs.value *= dec.coefficient;
    const XReal diff = abs(lhs.value - rhs.value);
    const XReal tolerance = prec.tol() + 10 * (lhs.error + rhs.error);
    const bool ok = diff <= tolerance;
    j["check"] = {{"lhs", fmt(lhs.value, cfg)},
                  {"rhs", fmt(rhs.value, cfg)},
                  {"abs_diff", fmt(diff, cfg)},
                  {"tolerance", fmt(tolerance, cfg)},
                  {"status", ok ? "pass" : "fail"}};
    if (!ok) code = kExitVerifyFailed;
    check_line = std::string(ok ? "pass" : "fail") + " (|diff| " + fmt_short(diff) + ", tolerance " + fmt_short(tolerance) + ")";
  }

  if (cfg.json) {
    j["digits"] = cfg.digits;
    print_json(out, j);
    return code;
  }
  if (j.contains("input")) out << "input   " << j["input"].get<std::string>() << "\n";
  if (j.contains("input_decoded")) {
    out << "input   " << (j["input_decoded"]["coefficient"].get<int>() < 0 ? "- " : "+ ")
        << j["input_decoded"]["l"].get<std::string>() << "\n";
  }
  out << "word    " << word.to_string() << "\n";
  out << "dual    " << dw.to_string() << "\n";
  out << "decoded " << (dec.coefficient < 0 ? "-" : "+") << " " << dec.spec.to_string() << "\n";
  if (a.check) {
    const auto& c = j["check"];
    out << "lhs     " << c["lhs"].get<std::string>() << "\n";
    out << "rhs     " << c["rhs"].get<std::string>() << "\n";
    out << "check   " << check_line << "\n";
  }
  return code;
}

// integrate

struct IntegrateArgs {
  std::string id;
  int n = 0;
  int m = 3;
  std::string sign = "-";
  std::string method;
  std::optional<int> level;
  std::string param;
};

int cmd_integrate(const IntegrateArgs& a, const Config& cfg, std::ostream& out) {
  const auto id = catalog_id_from_name(a.id);
  if (!id) {
    std::string names;
    for (auto c : catalog_ids()) names += (names.empty() ? "" : ", ") + std::string(catalog_name(c));
    throw DomainError("unknown catalog entry '" + a.id + "' (expected one of: " + names + ")");
  }
  IntegralSpec spec;
  spec.id = *id;
  spec.n = a.n;
  spec.m = a.m;
  if (a.sign != "+" && a.sign != "-") throw DomainError("--sign must be + or -");
  spec.sign = a.sign == "+" ? 1 : -1;
  if (!a.param.empty()) spec.param = BigRational::parse(a.param);
  if (a.method == "gl") spec.method = QuadMethod::kGaussLegendre;
  else if (a.method == "ts") spec.method = QuadMethod::kTanhSinh;
  else if (!a.method.empty()) throw DomainError("--method must be gl or ts");
  spec.level = a.level;

  const auto r = catalog_eval(spec, cfg.policy());
  emit_estimate(out, cfg, std::string(catalog_name(*id)), r.value, r.est_error,
                {{"evaluations", r.evaluations}, {"level", r.level}, {"converged", r.converged}});
  if (!r.converged && !a.level) return kExitUnconverged;
  return kExitOk;
}

// sum

struct SumArgs {
  std::string which;
  std::string z;
  std::string path = "series";
};

int cmd_sum(const SumArgs& a, const Config& cfg, std::ostream& out) {
  const auto prec = cfg.policy();
  auto double_sum_out = [&](DoubleSum which) {
    const auto t = double_sum(which, prec);
    emit_estimate(out, cfg, a.which, t.value, t.bound, {{"terms", t.terms}});
    return kExitOk;
  };
  if (a.which == "s3") return double_sum_out(DoubleSum::kS3);
  if (a.which == "s3plus") return double_sum_out(DoubleSum::kS3Plus);
  if (a.which == "ramanujan") return double_sum_out(DoubleSum::kRamanujan);
  if (a.which == "companion") {
    const auto e = companion(prec);
    emit_estimate(out, cfg, a.which, e.value, e.error);
    return kExitOk;
  }
  if (a.which == "g" || a.which == "h" || a.which == "htilde") {
    if (a.z.empty()) throw DomainError(a.which + " needs --z");
    const SumPath path = a.path == "closed" ? SumPath::kClosed : SumPath::kSeries;
    const XReal z = BigRational::parse(a.z).to_xreal(prec.work_bits);
    const XReal v = a.which == "g" ? g_fn(z, prec, path) : a.which == "h" ? h_fn(z, prec, path) : h_tilde(z, prec, path);
    emit_estimate(out, cfg, a.which + "(" + a.z + ")", v, prec.tol());
    return kExitOk;
  }
  throw DomainError("unknown sum '" + a.which + "' (expected s3, s3plus, ramanujan, companion, g, h or htilde)");
}

// verify

struct VerifyArgs {
  std::vector<std::string> ids;
  bool all = false;
};

void print_report_text(const VerificationReport& rep, std::ostream& out) {
  std::size_t width = 0;
  for (const auto& e : rep.results) width = std::max(width, e.id.size());
  for (const auto& e : rep.results) {
    std::string status(status_name(e.status));
    for (auto& c : status) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    out << status << std::string(12 - std::min<std::size_t>(status.size(), 11), ' ') << e.id
        << std::string(width + 2 - e.id.size(), ' ') << "|diff| " << fmt_short(e.abs_diff) << "  tol "
        << fmt_short(e.tolerance) << "  " << e.millis << " ms";
    if (e.status != Status::kPass && !e.worst_sample.empty()) out << "  [" << e.worst_sample << "]";
    if (!e.detail.empty()) out << "  " << e.detail;
    out << "\n";
  }
  out << rep.passed << " passed, " << rep.failed << " failed at " << rep.precision_digits << " digits\n";
}

int cmd_verify(const VerifyArgs& a, const Config& cfg, std::ostream& out) {
  const auto prec = cfg.policy();
  VerificationReport rep;
  if (a.all) {
    if (!a.ids.empty()) throw DomainError("give identity ids or --all, not both");
    rep = verify_all(prec, cfg.parallel);
  } else {
    if (a.ids.empty()) throw DomainError("verify needs identity ids or --all");
    std::vector<const IdentityRecord*> recs;
    for (const auto& id : a.ids) recs.push_back(&find_identity(id));
    rep.precision_digits = cfg.digits;
    EvalCache cache;
    for (const auto* rec : recs) {
      rep.results.push_back(verify(*rec, prec, cache));
      (rep.results.back().status == Status::kPass ? rep.passed : rep.failed) += 1;
    }
  }
  if (cfg.json) {
    out << rep.to_json() << "\n";
  } else {
    print_report_text(rep, out);
  }
  return rep.all_passed() ? kExitOk : kExitVerifyFailed;
}

// list

int cmd_list(bool catalog, const Config& cfg, std::ostream& out) {
  if (catalog) {
    json j = json::array();
    for (auto c : catalog_ids()) j.push_back(std::string(catalog_name(c)));
    if (cfg.json) {
      print_json(out, j);
    } else {
      for (const auto& name : j) out << name.get<std::string>() << "\n";
    }
    return kExitOk;
  }
  json j = json::array();
  for (const auto& rec : list_identities()) {
    j.push_back({{"id", rec.id},
                 {"paper_ref", rec.paper_ref},
                 {"kind", rec.kind == IdentityKind::kConstant ? "constant" : "parametric"},
                 {"samples", rec.samples.size()}});
  }
  if (cfg.json) {
    print_json(out, j);
    return kExitOk;
  }
  std::size_t width = 0;
  for (const auto& rec : list_identities()) width = std::max(width, rec.id.size());
  for (const auto& rec : list_identities()) {
    out << rec.id << std::string(width + 2 - rec.id.size(), ' ') << rec.paper_ref << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"High-precision polylogarithms, period integrals and identity verification", "polyzeta"};
  app.fallthrough();
  app.require_subcommand(1);

  Config cfg;
  app.add_option("--digits", cfg.digits, "Decimal digits of working precision")
      ->check(CLI::Range(15, 100000))
      ->capture_default_str();
  app.add_flag("--json", cfg.json, "Emit JSON instead of text");
  app.add_flag("--parallel", cfg.parallel, "Evaluate registry entries concurrently");

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "Evaluate a polylogarithm");
  eval->require_subcommand(1);
  auto* eval_li = eval->add_subcommand("li", "Classical polylogarithm Li_s(z)");
  eval_li->add_option("--s", ea.s, "Order s >= 1")->required()->check(CLI::PositiveNumber);
  eval_li->add_option("--z", ea.z, "Argument z <= 1 (rational or decimal)")->required()->allow_extra_args(false);
  eval_li->add_option("--path", ea.path, "Evaluation route")
      ->check(CLI::IsMember({"auto", "series", "reflection", "inversion", "alternating"}))
      ->capture_default_str();
  auto* eval_mpl = eval->add_subcommand("mpl", "Multiple polylogarithm Li_{s1..sk}(z1..zk)");
  eval_mpl->add_option("--weights", ea.weights, "Comma-separated weights")->required()->delimiter(',');
  eval_mpl->add_option("--args", ea.args, "Comma-separated arguments")->required()->delimiter(',');
  auto* eval_l = eval->add_subcommand("l", "l-notation l(s1..sk; y1..yk)");
  eval_l->add_option("--weights", ea.weights, "Comma-separated weights")->required()->delimiter(',');
  eval_l->add_option("--ys", ea.ys, "Comma-separated y values")->required()->delimiter(',');

  DualArgs da;
  auto* dual_cmd = app.add_subcommand("dual", "Encode, dualize and decode an iterated-integral word");
  dual_cmd->add_option("--weights", da.weights, "Comma-separated weights")->delimiter(',');
  dual_cmd->add_option("--ys", da.ys, "Comma-separated y values")->delimiter(',');
  dual_cmd->add_option("--word", da.word, "A signed word such as \"-[3,1,-1]\"");
  dual_cmd->add_flag("--check", da.check, "Evaluate both sides numerically");

  IntegrateArgs ia;
  auto* integ = app.add_subcommand("integrate", "Evaluate a catalog integral");
  integ->add_option("catalog_id", ia.id, "Catalog entry (see `list --catalog`)")->required();
  integ->add_option("--n", ia.n, "Beukers index or Mellin exponent");
  integ->add_option("--m", ia.m, "Zeta cube dimension")->capture_default_str();
  integ->add_option("--sign", ia.sign, "Zeta cube sign, + or -")->capture_default_str();
  integ->add_option("--method", ia.method, "Force gl or ts");
  integ->add_option("--level", ia.level, "Fixed refinement level");
  integ->add_option("--param,--x,--t", ia.param, "Upper endpoint t or Mellin point x");

  SumArgs sa;
  auto* sum_cmd = app.add_subcommand("sum", "Evaluate a series");
  sum_cmd->add_option("which", sa.which, "s3, s3plus, ramanujan, companion, g, h or htilde")->required();
  sum_cmd->add_option("--z", sa.z, "Argument of g, h or htilde");
  sum_cmd->add_option("--path", sa.path, "series or closed (g, h, htilde)")
      ->check(CLI::IsMember({"series", "closed"}))
      ->capture_default_str();

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Verify registry identities");
  ver->add_option("ids", va.ids, "Identity ids");
  ver->add_flag("--all", va.all, "Verify every identity");

  bool list_catalog = false;
  auto* list_cmd = app.add_subcommand("list", "List registry identities");
  list_cmd->add_flag("--catalog", list_catalog, "List catalog integrals instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*eval_li) return cmd_eval_li(ea, cfg, out);
    if (*eval_mpl) return cmd_eval_mpl(ea, cfg, out);
    if (*eval_l) return cmd_eval_l(ea, cfg, out);
    if (*dual_cmd) return cmd_dual(da, cfg, out);
    if (*integ) return cmd_integrate(ia, cfg, out);
    if (*sum_cmd) return cmd_sum(sa, cfg, out);
    if (*ver) return cmd_verify(va, cfg, out);
    if (*list_cmd) return cmd_list(list_catalog, cfg, out);
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUnconverged;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace polyzeta::cli
