#include "spec_io.hpp"

#include <fstream>
#include <sstream>

#include "errors.hpp"
#include <json.hpp>

namespace biso {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& what) {
  throw Error(ErrorCode::Parse, "channel spec: " + what);
}

double number_field(const json& j, const char* name) {
  if (!j.contains(name)) parse_fail(std::string("missing field '") + name + "'");
  const json& v = j.at(name);
  if (!v.is_number()) parse_fail(std::string("field '") + name + "' must be a number");
  return v.get<double>();
}

std::vector<double> number_array(const json& j, const char* name) {
  if (!j.contains(name)) parse_fail(std::string("missing field '") + name + "'");
  const json& v = j.at(name);
  if (!v.is_array() || v.empty()) {
    parse_fail(std::string("field '") + name + "' must be a nonempty array");
  }
  std::vector<double> out;
  out.reserve(v.size());
  for (const json& x : v) {
    if (!x.is_number()) parse_fail(std::string("field '") + name + "' must hold numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

}  // namespace

BisoChannel parse_channel_spec(const std::string& text, const Tolerance& tol) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) parse_fail("not valid JSON");
  if (!j.is_object()) parse_fail("top level must be an object");
  if (!j.contains("type") || !j.at("type").is_string()) {
    parse_fail("missing string field 'type'");
  }
  std::string type = j.at("type").get<std::string>();

  BisoChannel ch = [&]() {
    if (type == "bsc") return BisoChannel::bsc(number_field(j, "p"), tol);
    if (type == "bec") return BisoChannel::bec(number_field(j, "e"), tol);
    if (type == "rows") {
      return BisoChannel::from_rows(number_array(j, "row0"),
                                    number_array(j, "row1"), tol);
    }
    if (type == "pairs") {
      if (!j.contains("pairs") || !j.at("pairs").is_array() ||
          j.at("pairs").empty()) {
        parse_fail("field 'pairs' must be a nonempty array of [p_pos, p_neg]");
      }
      std::vector<PairProb> pairs;
      for (const json& p : j.at("pairs")) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() ||
            !p[1].is_number()) {
          parse_fail("each pair must be a two-number array");
        }
        pairs.push_back({p[0].get<double>(), p[1].get<double>()});
      }
      return BisoChannel::from_pairs(std::move(pairs), tol);
    }
    parse_fail("unknown type '" + type + "' (expected bsc, bec, rows, or pairs)");
  }();
  if (j.contains("label")) {
    if (!j.at("label").is_string()) parse_fail("field 'label' must be a string");
    ch.set_label(j.at("label").get<std::string>());
  }
  return ch;
}

BisoChannel load_channel_spec(const std::string& path, const Tolerance& tol) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open channel spec file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_channel_spec(ss.str(), tol);
}

std::string channel_spec_text(const BisoChannel& ch) {
  json pairs = json::array();
  for (const auto& pr : ch.pairs()) {
    pairs.push_back(json::array({pr.p_pos, pr.p_neg}));
  }
  json j{{"type", "pairs"}, {"pairs", pairs}};
  if (!ch.label().empty()) j["label"] = ch.label();
  return j.dump(2) + "\n";
}

}  // namespace biso
