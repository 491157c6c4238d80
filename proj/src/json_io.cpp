#include "ckit/json_io.hpp"

namespace ckit {

json matrix_to_json(const BigIntMatrix& a) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < a.cols(); ++c) row.push_back(a(r, c).str());
    rows.push_back(std::move(row));
  }
  return json{{"n", a.rows()}, {"entries", std::move(rows)}};
}

BigIntMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("entries")) throw ParseError("matrix JSON needs an \"entries\" array");
  const json& rows = j.at("entries");
  if (!rows.is_array() || rows.empty()) throw ParseError("matrix entries must be a non-empty array");
  const auto n = static_cast<Eigen::Index>(rows.size());
  if (j.contains("n") && (!j.at("n").is_number_integer() || j.at("n").get<long>() != n))
    throw ParseError("matrix \"n\" does not match the number of rows");
  BigIntMatrix a(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const json& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) throw ParseError("matrix must be square");
    for (Eigen::Index c = 0; c < n; ++c) {
      const json& v = row[static_cast<std::size_t>(c)];
      if (v.is_string()) {
        a(r, c) = parse_bigint(v.get<std::string>());
      } else if (v.is_number_integer()) {
        a(r, c) = BigInt(v.get<long long>());
      } else {
        throw ParseError("matrix entries must be decimal strings or integers");
      }
    }
  }
  return a;
}

json abel_to_json(const AbelCoords& a) {
  json off = json::object(), diag = json::object();
  const int n = a.n();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) off[std::to_string(i) + "," + std::to_string(j)] = a.offdiag(i, j).str();
  for (int k = 2; k <= n; ++k) diag[std::to_string(k)] = a.diag(k).str();
  json out{{"n", n}, {"d", a.d().str()}, {"offdiag", std::move(off)}, {"diag", std::move(diag)}};
  if (!a.abelianization_valid())
    out["warning"] = "n = 2: homomorphism onto (Z/dZ)^3, not the abelianization";
  return out;
}

json certificate_to_json(int d, const BigIntMatrix& input, const Decomposition& dec) {
  json steps = json::array();
  for (const auto& s : dec.trace.steps)
    steps.push_back({{"l", s.l.str()},
                     {"m", s.m},
                     {"eps", s.eps},
                     {"branch", to_string(s.branch)},
                     {"remainder", s.remainder.str()},
                     {"corner", s.new_corner.str()}});
  json factors = json::array();
  for (const auto& s : dec.word.syllables()) factors.push_back({{"label", s.label}, {"power", s.power.str()}});
  return json{{"d", d},
              {"input", matrix_to_json(input)},
              {"word", to_text(dec.word)},
              {"trace", {{"steps", std::move(steps)}, {"b", dec.trace.b.str()}, {"c", dec.trace.c.str()}}},
              {"factors", std::move(factors)}};
}

bool check_certificate(const json& cert) {
  const BigIntMatrix input = matrix_from_json(cert.at("input"));
  const int n = static_cast<int>(input.rows());
  const Word w = parse_word(cert.at("word").get<std::string>(), n);
  if (evaluate(w) != input) return false;
  if (cert.contains("factors") && cert.contains("d")) {
    const GenFamily fam = gen_set(FamilyTag::Solver, n, cert.at("d").get<int>());
    for (const auto& f : cert.at("factors"))
      if (fam.find(f.at("label").get<std::string>()) == nullptr) return false;
  }
  return true;
}

json relator_to_json(const Relator& r) {
  return json{{"family", r.family}, {"form", r.form}, {"indices", r.indices}, {"word", to_text(r.word.flatten())}};
}

json relator_report_to_json(const RelatorReport& rep) {
  json fam = json::object();
  for (const auto& [name, c] : rep.families) fam[name] = {{"total", c.total}, {"passed", c.passed}};
  return json{{"families", std::move(fam)}, {"failures", rep.failures}, {"ok", rep.all_ok()}};
}

json group_to_json(const GroupTable& t, std::size_t dump_cap) {
  json gens = json::array();
  for (const auto& g : t.generators()) gens.push_back(g.first);
  json out{{"n", t.n()}, {"m", t.modulus()}, {"order", t.order()}, {"generators", std::move(gens)}};
  if (dump_cap > 0) {
    json elems = json::array();
    for (std::size_t i = 0; i < t.order() && i < dump_cap; ++i) {
      const ResidueMatrix x = t.element(i);
      json rows = json::array();
      for (int r = 0; r < x.n(); ++r) {
        json row = json::array();
        for (int c = 0; c < x.n(); ++c) row.push_back(x(r, c));
        rows.push_back(std::move(row));
      }
      elems.push_back(std::move(rows));
    }
    out["elements"] = std::move(elems);
    out["truncated"] = t.order() > dump_cap;
  }
  return out;
}

json quotient_report_to_json(const QuotientReport& rep) {
  json claims = json::array();
  for (const auto& c : rep.claims)
    claims.push_back({{"id", c.id}, {"asserted", c.asserted}, {"passed", c.passed}, {"detail", c.detail}});
  return json{{"n", rep.n}, {"l", rep.l}, {"m", rep.m}, {"claims", std::move(claims)}, {"ok", rep.all_ok()}};
}

}  // namespace ckit
