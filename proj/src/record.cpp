#include "qfaul/record.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace qfaul {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json record_json(const CoeffRecord &r) {
  ordered_json j;
  j["family"] = family_name(r.family);
  j["m"] = r.m;
  j["k"] = r.k;
  j["variable"] = "q";
  j["route"] = route_name(r.route);
  j["min_exp"] = r.value.min_exp();
  auto coeffs = ordered_json::array();
  for (const auto &c : r.value.coeffs())
    coeffs.push_back(c.get_str());
  j["coefficients"] = std::move(coeffs);
  return j;
}

} // namespace

std::string to_json(const CoeffRecord &r) { return record_json(r).dump(); }

std::string to_json(const std::vector<CoeffRecord> &rs) {
  std::string out = "[";
  for (std::size_t i = 0; i < rs.size(); ++i) {
    out += i ? ",\n " : "\n ";
    out += to_json(rs[i]);
  }
  out += rs.empty() ? "]" : "\n]";
  return out;
}

CoeffRecord record_from_json(const std::string &text) {
  try {
    auto j = ordered_json::parse(text);
    CoeffRecord r;
    auto fam = parse_family(j.at("family").get<std::string>());
    auto route = parse_route(j.at("route").get<std::string>());
    if (!fam || !route || j.at("variable").get<std::string>() != "q")
      throw std::invalid_argument("unknown family, route or variable");
    r.family = *fam;
    r.route = *route;
    r.m = j.at("m").get<int>();
    r.k = j.at("k").get<int>();
    std::vector<BigInt> coeffs;
    for (const auto &c : j.at("coefficients"))
      coeffs.emplace_back(c.get<std::string>());
    r.value = LaurentPoly(j.at("min_exp").get<int>(), std::move(coeffs));
    return r;
  } catch (const nlohmann::json::exception &e) {
    throw std::invalid_argument(std::string("bad coefficient record: ") +
                                e.what());
  }
}

std::string csv_header() { return "family,m,k,exp,coefficient\n"; }

std::string to_csv_rows(const CoeffRecord &r) {
  std::ostringstream out;
  auto coeffs = r.value.coeffs();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0)
      continue;
    out << family_name(r.family) << ',' << r.m << ',' << r.k << ','
        << r.value.min_exp() + static_cast<int>(i) << ',' << coeffs[i].get_str()
        << '\n';
  }
  return out.str();
}

std::string to_pretty(const CoeffRecord &r) {
  std::ostringstream out;
  out << family_name(r.family) << '(' << r.m << ',' << r.k
      << ") = " << to_string(r.value);
  return out.str();
}

} // namespace qfaul
