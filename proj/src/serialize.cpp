#include "msla/serialize.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "msla/index_tuple.hpp"
#include "msla/rational.hpp"

namespace msla {
namespace {

std::vector<std::string> row_to_strings(const std::vector<Rational>& row) {
  std::vector<std::string> out;
  out.reserve(row.size());
  for (const Rational& q : row) out.push_back(rational_to_string(q));
  return out;
}

std::vector<Rational> row_from_json(const Json& j, std::size_t expect_len) {
  if (!j.is_array())
    throw std::invalid_argument("serialize: row is not an array");
  if (j.size() != expect_len)
    throw std::invalid_argument("serialize: row length does not match ambient");
  std::vector<Rational> row;
  row.reserve(expect_len);
  for (const Json& e : j) row.push_back(parse_rational(e.get<std::string>()));
  return row;
}

template <typename Tag>
Json exterior_to_json(const Exterior<Tag>& x, const char* grade_key) {
  Json terms = Json::array();
  for (const auto& [t, c] : x.terms()) {
    Json term;
    term["indices"] = t.indices();
    term["coeff"] = rational_to_string(c);
    terms.push_back(term);
  }
  Json j;
  j["ambient"] = x.ambient();
  j[grade_key] = x.grade();
  j["terms"] = terms;
  return j;
}

template <typename Tag>
Exterior<Tag> exterior_from_json(const Json& j, const char* grade_key) {
  const int ambient = j.at("ambient").get<int>();
  const int grade = j.at(grade_key).get<int>();
  Exterior<Tag> x(ambient, grade);
  for (const Json& term : j.at("terms")) {
    std::vector<int> idx = term.at("indices").get<std::vector<int>>();
    x.add(IndexTuple(std::move(idx)),
          parse_rational(term.at("coeff").get<std::string>()));
  }
  return x;
}

}  // namespace

Json subspace_to_json(const Subspace& w) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < w.dim(); ++i)
    rows.push_back(row_to_strings(w.basis_row(i)));
  Json j;
  j["ambient"] = w.ambient();
  j["rows"] = rows;
  return j;
}

Subspace subspace_from_json(const Json& j) {
  const long long ambient = j.at("ambient").get<long long>();
  if (ambient < 0)
    throw std::invalid_argument("serialize: negative ambient dimension");
  std::vector<std::vector<Rational>> rows;
  for (const Json& r : j.at("rows"))
    rows.push_back(row_from_json(r, static_cast<std::size_t>(ambient)));
  return Subspace::span_rows(static_cast<std::size_t>(ambient), rows);
}

Json form_to_json(const AlternatingForm& f) {
  return exterior_to_json(f, "degree");
}

AlternatingForm form_from_json(const Json& j) {
  return exterior_from_json<FormTag>(j, "degree");
}

Json multivector_to_json(const Multivector& x) {
  return exterior_to_json(x, "grade");
}

Multivector multivector_from_json(const Json& j) {
  return exterior_from_json<MultivectorTag>(j, "grade");
}

FormPackage form_package_from_json(const Json& j) {
  FormPackage p{form_from_json(j), std::nullopt};
  if (j.contains("volume")) p.volume = form_from_json(j.at("volume"));
  return p;
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  if (v.is_proven()) {
    j["state"] = "proven";
  } else if (v.is_refuted()) {
    j["state"] = "refuted";
    j["witness"] = multivector_to_json(v.witness());
  } else {
    j["state"] = "unknown";
    j["trials"] = v.trials();
  }
  return j;
}

Json classification_to_json(const G2Classification& c) {
  Json j;
  j["label"] = c.label;
  j["dim"] = c.dim;
  j["one_isotropic"] = c.one_isotropic;
  j["one_coisotropic"] = c.one_coisotropic;
  j["one_lagrangian"] = c.one_lagrangian;
  j["multisymplectic1"] = c.multisymplectic1;
  j["type_i_isotropic2"] = c.type_i_isotropic2;
  j["type_i_coisotropic2"] = c.type_i_coisotropic2;
  j["type_i_lagrangian2"] = c.type_i_lagrangian2;
  j["type_ii_isotropic2"] = c.type_ii_isotropic2;
  j["type_ii_coisotropic2"] = verdict_to_json(c.type_ii_coisotropic2);
  j["fully_nondegenerate2"] = verdict_to_json(c.fully_nondegenerate2);
  j["cross_closed"] = c.cross_closed;
  j["associative"] = c.associative;
  j["coassociative"] = c.coassociative;
  j["associative_inside"] = c.associative_inside.has_value()
                                ? subspace_to_json(*c.associative_inside)
                                : Json();
  j["restricted_kernel_dim"] = c.restricted_kernel_dim;
  j["type_i_complement2_dim"] = c.type_i_complement2_dim;
  return j;
}

Json report_to_json(const SuiteReport& r) {
  Json failures = Json::array();
  for (const TrialFailure& f : r.failures) {
    Json e;
    e["trial"] = f.trial;
    e["input"] = f.input;
    e["expected"] = f.expected;
    e["got"] = f.got;
    failures.push_back(e);
  }
  Json j;
  j["suite"] = r.suite;
  j["trials"] = r.passed + r.failed + r.unknown;
  j["passed"] = r.passed;
  j["failed"] = r.failed;
  j["unknown"] = r.unknown;
  j["wall_ms"] = r.wall_ms;
  j["failures"] = failures;
  return j;
}

}  // namespace msla
