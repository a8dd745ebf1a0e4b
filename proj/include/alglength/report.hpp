#pragma once

#include <array>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include "alglength/bounds.hpp"
#include "alglength/length.hpp"
#include "alglength/oracle.hpp"

// JSON rendering of results. nlohmann::json keeps object keys sorted, so
// identical inputs give byte-identical reports.

namespace alglength {

inline constexpr int report_schema = 1;
inline constexpr std::string_view tool_version = "1.0.0";

using Json = nlohmann::json;

inline std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int size = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &size, EVP_sha256(), nullptr) != 1)
    throw InternalError("sha256 failed");
  std::string hex;
  for (unsigned int i = 0; i < size; ++i) {
    char buf[3];
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

inline Json to_json(const Vector &v) {
  Json out = Json::array();
  for (const auto &s : v)
    out.push_back(s.to_string());
  return out;
}

inline Json to_json(const CharSeq &seq) {
  return Json{{"terms", seq.terms}, {"partial", seq.partial}};
}

inline Json to_json(const LengthReport &r) {
  Json fresh = Json::array();
  for (const auto &g : r.fresh_basis) {
    Json vectors = Json::array();
    for (const auto &v : g.vectors)
      vectors.push_back(to_json(v));
    fresh.push_back(Json{{"length", g.length}, {"vectors", vectors}});
  }
  return Json{{"dims", r.dims},
              {"charseq", to_json(r.charseq)},
              {"length", r.length ? Json(*r.length) : Json(nullptr)},
              {"generating", r.generating()},
              {"stop_reason", to_string(r.stop_reason)},
              {"fresh_basis", fresh}};
}

inline Json to_json(const std::vector<Violation> &vs) {
  Json out = Json::array();
  for (const auto &v : vs)
    out.push_back(Json{{"h", v.h}, {"value", v.value}});
  return out;
}

inline Json to_json(const ChainVerdict &c) {
  Json witnesses = Json::array();
  for (const auto &d : c.witnesses)
    witnesses.push_back(Json{{"h", d.h}, {"t1", d.t1}, {"t2", d.t2}});
  return Json{{"holds", c.holds}, {"witnesses", witnesses}, {"violations", to_json(c.violations)}};
}

inline Json to_json(const BoundVerdict &b) {
  return Json{{"holds", b.holds}, {"tight", b.tight}, {"violations", to_json(b.violations)}};
}

inline Json to_json(const BoundReport &r) {
  auto opt = [](const auto &v) { return v ? to_json(*v) : Json(nullptr); };
  return Json{{"wellformed", r.wellformed},
              {"addition_chain", opt(r.addition_chain)},
              {"strict_addition_chain", opt(r.strict_addition_chain)},
              {"power_bound", opt(r.power_bound)},
              {"fibonacci_bound", opt(r.fibonacci_bound)},
              {"k_bound", opt(r.k_bound)},
              {"k", r.k}};
}

inline Json to_json(const WordSpanResult &w, const std::vector<std::string> &letters = {}) {
  Json counts = Json::array();
  for (const auto &c : w.word_counts)
    counts.push_back(c.str());
  Json fresh = Json::array();
  for (const auto &level : w.fresh_words) {
    Json words = Json::array();
    for (const auto &word : level)
      words.push_back(word.to_string(letters));
    fresh.push_back(words);
  }
  return Json{{"dims", w.dims}, {"word_counts", counts}, {"fresh_words", fresh}};
}

inline Json to_json(const BruteForceResult &b) {
  Json witness = Json::array();
  for (const auto &v : b.witness.vectors)
    witness.push_back(to_json(v));
  return Json{{"length", b.length},
              {"witness", witness},
              {"subspaces_examined", b.subspaces_examined}};
}

/// Report envelope shared by every subcommand.
inline Json make_run_report(std::string_view command, const Json &options, const Json &input,
                            const Json &result) {
  return Json{{"schema", report_schema},
              {"tool", Json{{"name", "alglength"}, {"version", std::string(tool_version)}}},
              {"command", std::string(command)},
              {"options", options},
              {"input", input},
              {"result", result}};
}

} // namespace alglength
