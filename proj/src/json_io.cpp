#include "skolem/json_io.hpp"

#include "skolem/errors.hpp"

namespace skolem {

namespace {

std::vector<Rational> rationals(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw Error(ErrorCode::ParseError, std::string("missing array '") + key + "'");
  }
  std::vector<Rational> out;
  for (const auto& item : j.at(key)) {
    if (item.is_string()) {
      out.push_back(parse_rational(item.get<std::string>()));
    } else if (item.is_number_integer()) {
      out.push_back(parse_rational(item.dump()));
    } else {
      throw Error(ErrorCode::ParseError, std::string("entries of '") + key + "' must be rational strings");
    }
  }
  return out;
}

ordered_json box_json(const RootBox& b) {
  return {{"re", b.center_re.to_string(20)},
          {"im", b.center_im.to_string(20)},
          {"radius", b.radius.to_string(3, MPFR_RNDU)},
          {"multiplicity", b.multiplicity}};
}

}  // namespace

LRSpec lrs_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "expected a JSON object");
  for (const auto& item : j.items()) {
    if (item.key() != "coefficients" && item.key() != "initial") {
      throw Error(ErrorCode::ParseError, "unexpected key '" + item.key() + "'");
    }
  }
  return validate_lrs(rationals(j, "coefficients"), rationals(j, "initial"));
}

LRSpec lrs_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return lrs_from_json(j);
}

ordered_json to_json(const LRSpec& spec) {
  ordered_json j;
  j["coefficients"] = ordered_json::array();
  for (const auto& a : spec.coefficients()) j["coefficients"].push_back(format_rational(a));
  j["initial"] = ordered_json::array();
  for (const auto& u : spec.initial_terms()) j["initial"].push_back(format_rational(u));
  return j;
}

std::string canonical_json(const LRSpec& spec) { return to_json(spec).dump(); }

std::string upper_string(const mp::Interval& value) { return value.hi().to_string(17, MPFR_RNDU); }

ordered_json to_json(const BigBound& bound) {
  ordered_json j;
  j["floor"] = bound.floor.get_str();
  j["ceiling"] = bound.ceiling.get_str();
  j["log10"] = bound.log10;
  j["value"] = upper_string(bound.value);
  ordered_json comps = ordered_json::object();
  for (const auto& [name, value] : bound.components) comps[name] = upper_string(value);
  j["components"] = std::move(comps);
  return j;
}

ordered_json to_json(const BoundReport& report) {
  ordered_json j;
  j["theorem"] = report.theorem;
  j["case"] = std::string(to_string(report.bound_case));
  const ordered_json bound = to_json(report.bound);
  for (const auto& item : bound.items()) j[item.key()] = item.value();
  return j;
}

ordered_json to_json(const RootProfile& p) {
  ordered_json j;
  j["m"] = p.m;
  j["is_squarefree"] = p.is_squarefree;
  j["k_max"] = p.k_max;
  j["dominant"] = p.dominant;
  j["dominant_root_real_sign"] = std::string(to_string(p.dominant_root_real_sign));
  j["positive_maximal_root"] = p.positive_maximal_root;
  j["all_roots_real"] = p.all_roots_real;
  j["max_pair_ratio_unity"] = std::string(to_string(p.max_pair_ratio_unity));
  j["globally_degenerate"] = std::string(to_string(p.globally_degenerate));
  j["zero_root_multiplicity"] = p.zero_root_multiplicity;
  j["boxes"] = ordered_json::array();
  for (const auto& b : p.boxes) j["boxes"].push_back(box_json(b));
  return j;
}

ordered_json to_json(const Classification& c) {
  ordered_json j;
  j["case"] = std::string(to_string(c.tag));
  j["minimal"] = to_json(c.minimal);
  j["f_star"] = primitive_char_poly(c.minimal).f_star.to_string();
  j["profile"] = to_json(c.profile);
  return j;
}

ordered_json to_json(const Verdict& v) {
  ordered_json j;
  j["problem"] = std::string(to_string(v.problem));
  j["answer"] = std::string(to_string(v.answer));
  j["mode"] = std::string(to_string(v.mode));
  j["case"] = std::string(to_string(v.case_tag));
  if (v.witness) {
    j["witness"] = *v.witness;
    j["witness_value"] = format_rational(*v.witness_value);
  }
  if (v.scanned) j["scanned"] = {v.scanned->first, v.scanned->second};
  if (v.n0) j["n0"] = *v.n0;
  if (v.sign_b1 != 0) j["sign_b1"] = v.sign_b1;
  if (v.bound) j["bound"] = to_json(*v.bound);
  j["reason"] = v.reason;
  return j;
}

ordered_json to_json(const DensityReport& r) {
  ordered_json j;
  j["m"] = r.m;
  j["H"] = r.H;
  j["family"] = std::string(to_string(r.family));
  j["exhaustive"] = r.exhaustive;
  if (!r.exhaustive) j["seed"] = r.seed;
  j["total"] = r.total;
  ordered_json counts;
  counts["k_max_1"] = r.k_max_1;
  counts["k_max_2"] = r.k_max_2;
  counts["k_max_3_plus"] = r.k_max_3_plus;
  counts["dominant"] = r.dominant;
  counts["degenerate"] = r.degenerate;
  counts["non_degenerate_dominant"] = r.non_degenerate_dominant;
  counts["residue"] = r.residue;
  counts["unresolved"] = r.unresolved;
  j["counts"] = counts;
  ordered_json fractions;
  for (const auto& [name, value] : counts.items()) fractions[name] = r.fraction(value.get<std::uint64_t>());
  j["fractions"] = fractions;
  return j;
}

}  // namespace skolem
