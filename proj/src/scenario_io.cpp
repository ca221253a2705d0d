#include "ptgame/scenario_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ptgame {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& why) {
  throw std::invalid_argument("scenario: " + field + ": " + why);
}

const json& member(const json& obj, const std::string& path,
                   const char* key) {
  if (!obj.contains(key)) fail(path.empty() ? key : path + "." + key, "missing");
  return obj.at(key);
}

void reject_unknown(const json& obj, const std::string& path,
                    std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* key : allowed) known = known || item.key() == key;
    if (!known)
      fail(path.empty() ? item.key() : path + "." + item.key(), "unknown key");
  }
}

double number(const json& j, const std::string& field) {
  if (!j.is_number()) fail(field, "expected a number");
  return j.get<double>();
}

std::vector<double> number_array(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) fail(field, "expected a non-empty array");
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t k = 0; k < j.size(); ++k)
    out.push_back(number(j[k], field + "[" + std::to_string(k) + "]"));
  return out;
}

ValueFunction parse_value_function(const json& j, const std::string& field) {
  if (!j.is_object()) fail(field, "expected an object");
  const json& jk = member(j, field, "kind");
  if (!jk.is_string()) fail(field + ".kind", "expected a string");
  const std::string kind = jk.get<std::string>();
  try {
    if (kind == "identity") {
      reject_unknown(j, field, {"kind"});
      return ValueFunction::identity();
    }
    if (kind == "log_gain") {
      reject_unknown(j, field, {"kind"});
      return ValueFunction::log_gain();
    }
    if (kind == "exponential") {
      reject_unknown(j, field, {"kind", "lambda"});
      return ValueFunction::exponential(
          number(member(j, field, "lambda"), field + ".lambda"));
    }
    if (kind == "linear_derivative") {
      reject_unknown(j, field, {"kind", "c", "d"});
      return ValueFunction::linear_derivative(
          number(member(j, field, "c"), field + ".c"),
          number(member(j, field, "d"), field + ".d"));
    }
  } catch (const std::invalid_argument& e) {
    fail(field, e.what());
  }
  fail(field + ".kind", "unknown value function kind '" + kind + "'");
}

WeightingFunction parse_weighting(const json& j, const std::string& field) {
  if (!j.is_object()) fail(field, "expected an object");
  const json& jk = member(j, field, "kind");
  if (!jk.is_string()) fail(field + ".kind", "expected a string");
  const std::string kind = jk.get<std::string>();
  try {
    if (kind == "identity") {
      reject_unknown(j, field, {"kind"});
      return WeightingFunction::identity();
    }
    if (kind == "tk") {
      reject_unknown(j, field, {"kind", "gamma"});
      return WeightingFunction::tversky_kahneman(
          number(member(j, field, "gamma"), field + ".gamma"));
    }
  } catch (const std::invalid_argument& e) {
    fail(field, e.what());
  }
  fail(field + ".kind", "unknown weighting kind '" + kind + "'");
}

// 17 significant digits: lossless for doubles and byte-stable across
// parse/serialize cycles.
std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void append_array(std::string& out, const std::vector<double>& v) {
  out += '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += g17(v[i]);
  }
  out += ']';
}

}  // namespace

ScenarioBundle parse_scenario_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("scenario: malformed JSON: ") +
                                e.what());
  }
  if (!doc.is_object()) fail("<document>", "expected a JSON object");
  reject_unknown(doc, "", {"players", "randomness", "prices",
                           "value_functions", "weighting"});

  const json& players = member(doc, "", "players");
  if (!players.is_object()) fail("players", "expected an object");
  reject_unknown(players, "players", {"a", "b", "y", "bounds"});
  const auto a = number_array(member(players, "players", "a"), "players.a");
  const auto b = number_array(member(players, "players", "b"), "players.b");
  const auto y = number_array(member(players, "players", "y"), "players.y");
  const std::size_t n = a.size();
  if (b.size() != n) fail("players.b", "length must match players.a");
  if (y.size() != n) fail("players.y", "length must match players.a");
  for (std::size_t i = 0; i < n; ++i) {
    if (!(a[i] > 0.0)) fail("players.a", "entries must be > 0");
    if (!(b[i] >= 0.0)) fail("players.b", "entries must be >= 0");
  }

  std::vector<std::array<double, 2>> bounds(n, {-100.0, 200.0});
  if (players.contains("bounds")) {
    const json& jb = players.at("bounds");
    if (!jb.is_array() || jb.size() != n)
      fail("players.bounds", "expected one [lo, hi] pair per player");
    for (std::size_t i = 0; i < n; ++i) {
      const std::string field = "players.bounds[" + std::to_string(i) + "]";
      if (!jb[i].is_array() || jb[i].size() != 2)
        fail(field, "expected [lo, hi]");
      bounds[i] = {number(jb[i][0], field), number(jb[i][1], field)};
      if (!(bounds[i][0] < bounds[i][1])) fail(field, "needs lo < hi");
    }
  }

  const json& randomness = member(doc, "", "randomness");
  if (!randomness.is_object()) fail("randomness", "expected an object");
  reject_unknown(randomness, "randomness", {"support", "probs"});
  const auto support = number_array(member(randomness, "randomness", "support"),
                                    "randomness.support");
  const auto probs = number_array(member(randomness, "randomness", "probs"),
                                  "randomness.probs");
  if (probs.size() != support.size())
    fail("randomness.probs", "length must match randomness.support");
  double sum_q = 0.0;
  for (double q : probs) {
    if (!(q >= 0.0)) fail("randomness.probs", "entries must be >= 0");
    sum_q += q;
  }
  if (std::abs(sum_q - 1.0) > 1e-12)
    fail("randomness.probs", "must sum to 1");

  const json& prices = member(doc, "", "prices");
  if (!prices.is_object()) fail("prices", "expected an object");
  reject_unknown(prices, "prices", {"min", "max"});
  const double p_lo = number(member(prices, "prices", "min"), "prices.min");
  const double p_hi = number(member(prices, "prices", "max"), "prices.max");
  if (!(p_lo > 0.0 && p_lo <= p_hi))
    fail("prices", "needs 0 < min <= max");

  std::vector<ValueFunction> vfs{ValueFunction::identity()};
  if (doc.contains("value_functions")) {
    const json& jv = doc.at("value_functions");
    if (!jv.is_array() || jv.empty())
      fail("value_functions", "expected a non-empty array");
    if (jv.size() != 1 && jv.size() != n)
      fail("value_functions", "length must be 1 (shared) or N");
    vfs.clear();
    for (std::size_t k = 0; k < jv.size(); ++k)
      vfs.push_back(parse_value_function(
          jv[k], "value_functions[" + std::to_string(k) + "]"));
  }

  WeightingFunction weighting = WeightingFunction::identity();
  if (doc.contains("weighting")) {
    weighting = parse_weighting(doc.at("weighting"), "weighting");
  }

  try {
    return ScenarioBundle{
        Scenario(a, b, y, support, probs, bounds, {p_lo, p_hi}),
        per_player(std::move(vfs), static_cast<int>(n)), weighting};
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("scenario: ") + e.what());
  }
}

ScenarioBundle load_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("scenario: cannot read file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_scenario_json(text.str());
}

std::string canonical_scenario_json(const ScenarioBundle& bundle) {
  const Scenario& s = bundle.scenario;
  std::string out = "{\"players\":{\"a\":";
  append_array(out, s.coeff_a());
  out += ",\"b\":";
  append_array(out, s.offset_b());
  out += ",\"bounds\":[";
  for (int i = 0; i < s.n_players(); ++i) {
    if (i) out += ',';
    out += '[';
    out += g17(s.lo(i));
    out += ',';
    out += g17(s.hi(i));
    out += ']';
  }
  out += "],\"y\":";
  append_array(out, s.target_y());
  out += "},\"prices\":{\"max\":";
  out += g17(s.price_hi());
  out += ",\"min\":";
  out += g17(s.price_lo());
  out += "},\"randomness\":{\"probs\":";
  append_array(out, s.outcome_probs());
  out += ",\"support\":";
  append_array(out, s.outcome_support());
  out += "},\"value_functions\":[";
  for (std::size_t k = 0; k < bundle.value_functions.size(); ++k) {
    const auto& vf = bundle.value_functions[k];
    if (k) out += ',';
    switch (vf.kind()) {
      case ValueFunction::Kind::Identity:
        out += "{\"kind\":\"identity\"}";
        break;
      case ValueFunction::Kind::LogGain:
        out += "{\"kind\":\"log_gain\"}";
        break;
      case ValueFunction::Kind::Exponential:
        out += "{\"kind\":\"exponential\",\"lambda\":" + g17(vf.lambda()) + "}";
        break;
      case ValueFunction::Kind::LinearDerivative:
        out += "{\"c\":" + g17(vf.c()) + ",\"d\":" + g17(vf.d()) +
               ",\"kind\":\"linear_derivative\"}";
        break;
    }
  }
  out += "],\"weighting\":";
  if (bundle.weighting.kind() == WeightingFunction::Kind::Identity) {
    out += "{\"kind\":\"identity\"}";
  } else {
    out += "{\"gamma\":" + g17(bundle.weighting.gamma()) + ",\"kind\":\"tk\"}";
  }
  out += "}";
  return out;
}

}  // namespace ptgame
