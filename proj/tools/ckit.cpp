// ckit: command-line front end. Exit status 0 when every check in scope
// passed, 1 on a failed check, 2 on invalid input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ckit/json_io.hpp"
#include "ckit/rewriter.hpp"
#include "ckit/verify.hpp"

using namespace ckit;

namespace {

struct Options {
  int n = 3;
  int d = 2;
  long l = 1;
  long m = 2;
  std::string matrix;
  std::string word;
  std::string certificate;
  std::string family = "sl";
  std::uint64_t seed = kDefaultSeed;
  std::size_t budget = 0;  // 0: environment or default
  std::string format = "text";
  bool check = false;
  bool claims = false;
  bool exp = false;
  std::size_t dump = 0;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(slurp(path));
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

BigIntMatrix read_matrix(const std::string& path) {
  if (path.empty()) throw ParseError("--matrix is required");
  return matrix_from_json(read_json(path));
}

std::size_t budget_of(const Options& o) { return o.budget ? o.budget : default_budget(); }

int report_checks(const std::vector<CheckResult>& results, const Options& o) {
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed();
  if (o.format == "json") {
    json checks = json::array();
    for (const auto& r : results) {
      json c{{"id", r.id},
             {"about", r.about},
             {"instances", r.instances},
             {"failures", r.failures},
             {"passed", r.passed()},
             {"seconds", r.seconds}};
      if (!r.passed()) c["first_failure"] = r.first_failure;
      checks.push_back(std::move(c));
    }
    std::cout << json{{"seed", o.seed}, {"checks", std::move(checks)}, {"ok", ok}}.dump(2) << '\n';
  } else {
    std::cout << "seed " << o.seed << '\n';
    for (const auto& r : results) {
      std::cout << (r.passed() ? "PASS " : "FAIL ") << r.id << "  " << r.instances << " instances  " << r.seconds
                << "s  " << r.about << '\n';
      if (!r.passed()) std::cout << "     " << r.failures << " failures, first: " << r.first_failure << '\n';
    }
    std::cout << (ok ? "all checks passed" : "some checks FAILED") << '\n';
  }
  return ok ? 0 : 1;
}

int run_abelianize(const Options& o) {
  const AbelCoords a = abelianize(read_matrix(o.matrix), BigInt(o.d));
  json out = abel_to_json(a);
  out["seed"] = o.seed;
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_level(const Options& o) {
  const BigIntMatrix x = read_matrix(o.matrix);
  const Level lv = level(x);
  json out{{"level", lv.value.str()}, {"identity", lv.is_identity()}, {"det", mat_det(x).str()}, {"seed", o.seed}};
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_decompose(const Options& o) {
  if (!o.certificate.empty()) {
    const bool ok = check_certificate(read_json(o.certificate));
    std::cout << json{{"certificate", o.certificate}, {"valid", ok}, {"seed", o.seed}}.dump(2) << '\n';
    return ok ? 0 : 1;
  }
  const BigIntMatrix a = read_matrix(o.matrix);
  const Decomposition dec = decompose2(a, o.d);
  json cert = certificate_to_json(o.d, a, dec);
  int status = 0;
  if (o.check) {
    const bool ok = check_certificate(cert);
    cert["checked"] = ok;
    status = ok ? 0 : 1;
  }
  cert["seed"] = o.seed;
  std::cout << cert.dump(2) << '\n';
  return status;
}

int run_presentation(const Options& o) {
  if (!o.word.empty()) {
    std::istringstream in(slurp(o.word));
    bool ok = true;
    for (const Word& w : read_words(in, o.n)) {
      const GenWord g = rs_rewrite(w);
      const bool same = evaluate(g) == evaluate(w);
      ok = ok && same;
      json line{{"input", to_text(w)}, {"evaluation_equal", same}};
      json syl = json::array();
      for (const auto& s : g.syllables()) syl.push_back({{"label", s.label}, {"power", s.power.str()}});
      line["rewritten"] = std::move(syl);
      std::cout << line.dump() << '\n';
    }
    return ok ? 0 : 1;
  }
  std::vector<Relator> rs;
  if (o.family == "sl") {
    rs = relators_gamma2(o.n);
  } else if (o.family == "gl") {
    rs = relators_gamma2hat(o.n);
  } else {
    throw ParseError("--family must be sl or gl");
  }
  if (o.exp) {
    for (const auto& r : rs) std::cout << relator_to_json(r).dump() << '\n';
    return 0;
  }
  const RelatorReport rep = verify_relators(rs);
  json out = relator_report_to_json(rep);
  out["n"] = o.n;
  out["family"] = o.family;
  out["seed"] = o.seed;
  std::cout << out.dump(2) << '\n';
  return rep.all_ok() ? 0 : 1;
}

int run_quotient(const Options& o) {
  const std::size_t budget = budget_of(o);
  if (o.claims) {
    const QuotientReport rep = verify_quotient_claims(o.n, o.l, o.m, budget);
    json out = quotient_report_to_json(rep);
    out["budget"] = budget;
    out["seed"] = o.seed;
    std::cout << out.dump(2) << '\n';
    return rep.all_ok() ? 0 : 1;
  }
  const GroupTable t = enumerate_image(o.n, o.l, o.m, budget);
  json out = group_to_json(t, std::min<std::size_t>(o.dump, 10000));
  json census = json::object();
  for (const auto& [ord, count] : order_census(t)) census[std::to_string(ord)] = count;
  out["census"] = std::move(census);
  out["abelian"] = is_abelian(t);
  if (is_abelian(t)) out["factors"] = abelian_structure(t).factors;
  out["l"] = o.l;
  out["budget"] = budget;
  out["seed"] = o.seed;
  std::cout << out.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for principal congruence subgroups of SL(n, Z)"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };

  auto* rel = app.add_subcommand("verify-relations", "relations among elementary matrices over an index grid");
  rel->add_option("--n", o.n, "largest dimension (from 3)")->default_val(5);
  add_common(rel);

  auto* ids = app.add_subcommand("verify-identities", "word identities and the conjugation closure");
  ids->add_option("--n", o.n, "largest dimension (from 3)")->default_val(5);
  ids->add_option("--d", o.d, "largest level")->default_val(5);
  add_common(ids);

  auto* ab = app.add_subcommand("abelianize", "abelianization coordinates of a Gamma_d(n) matrix");
  ab->add_option("--d", o.d, "level")->required();
  ab->add_option("--matrix", o.matrix, "matrix JSON file ('-' for stdin)")->required();
  add_common(ab);

  auto* lv = app.add_subcommand("level", "gcd of the entries of X - I");
  lv->add_option("--matrix", o.matrix, "matrix JSON file")->required();
  add_common(lv);

  auto* dc = app.add_subcommand("decompose", "word over the level-d generators of Gamma_d(2), d = 3..6");
  dc->add_option("--d", o.d, "level");
  dc->add_option("--matrix", o.matrix, "matrix JSON file");
  dc->add_flag("--check", o.check, "re-evaluate the emitted word");
  dc->add_option("--certificate", o.certificate, "verify an existing certificate instead");
  add_common(dc);

  auto* pr = app.add_subcommand("presentation", "relators of Gamma_2(n) (sl) or its GL analogue (gl)");
  pr->add_option("--n", o.n, "dimension")->default_val(3);
  pr->add_option("--family", o.family, "sl or gl")->capture_default_str();
  pr->add_flag("--export", o.exp, "print relators as JSON lines");
  pr->add_option("--word", o.word, "word file to rewrite into E_ij, F_1k");
  add_common(pr);

  auto* qu = app.add_subcommand("quotient", "image of Gamma_l(n) in SL(n, Z/m)");
  qu->add_option("--n", o.n, "dimension")->required();
  qu->add_option("--l", o.l, "level of the subgroup")->default_val(1);
  qu->add_option("--m", o.m, "modulus")->required();
  qu->add_option("--budget", o.budget, "element budget (overrides CONGRUENCE_KIT_BUDGET)");
  qu->add_flag("--claims", o.claims, "check the quotient claims for (n, l, m)");
  qu->add_option("--dump", o.dump, "list up to this many elements (max 10000)");
  add_common(qu);

  auto* st = app.add_subcommand("selftest", "every property suite");
  add_common(st);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*rel) return report_checks(check_relations(3, o.n), o);
    if (*ids) return report_checks(check_identities(o.n, o.d), o);
    if (*ab) return run_abelianize(o);
    if (*lv) return run_level(o);
    if (*dc) {
      if (o.certificate.empty() && (o.matrix.empty() || dc->count("--d") == 0))
        throw ParseError("decompose needs --d and --matrix, or --certificate");
      return run_decompose(o);
    }
    if (*pr) return run_presentation(o);
    if (*qu) return run_quotient(o);
    if (*st) return report_checks(selftest(o.seed), o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const CheckFailure& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
