#pragma once

#include <json.hpp>
#include <string>

#include "ctm/monte_carlo.hpp"

namespace ctm {

// JSON payload of a simulation run. Key order is part of the output contract (the
// simulate output must be byte-stable across runs and worker counts), hence
// ordered_json and insertion in the documented order.
inline nlohmann::ordered_json simulate_json(const EmpiricalMoments& em) {
  nlohmann::ordered_json j;
  j["group"] = em.group.token();
  j["n"] = em.group.rank;
  j["k"] = em.k;
  j["seed"] = em.seed;
  j["samples"] = em.samples;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& m : em.moments) {
    nlohmann::ordered_json e;
    e["r"] = m.r;
    e["s"] = m.s;
    e["mean_re"] = m.mean.real();
    e["mean_im"] = m.mean.imag();
    e["stderr"] = m.std_error;
    arr.push_back(std::move(e));
  }
  j["moments"] = std::move(arr);
  j["histogram_re"] = em.histogram_re.counts;
  j["histogram_im"] = em.histogram_im.counts;
  return j;
}

// RFC 4180 field quoting: only fields containing separators, quotes or line breaks
// get wrapped, with embedded quotes doubled.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace ctm
