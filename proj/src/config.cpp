// Copyright 2026 The adiol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "adiol/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "adiol/errors.hpp"

namespace adiol {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool to_double(std::string_view token, double& out) {
  token = trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size() &&
         !token.empty();
}

std::vector<std::string_view> split_list(std::string_view value) {
  std::vector<std::string_view> items;
  std::size_t pos = 0;
  while (pos <= value.size()) {
    const auto comma = value.find(',', pos);
    const auto end = comma == std::string_view::npos ? value.size() : comma;
    items.push_back(trim(value.substr(pos, end - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return items;
}

struct Entry {
  std::size_t line;
  std::string value;
};

class Reader {
 public:
  Reader(std::map<std::string, Entry> entries) : entries_(std::move(entries)) {}

  bool has(const std::string& key) const { return entries_.count(key) != 0; }

  void number(const std::string& key, double& out) const {
    if (const Entry* e = find(key)) {
      if (!to_double(e->value, out)) {
        throw ParseError(e->line, key + ": expected a number, got '" +
                                      e->value + "'");
      }
    }
  }

  void integer(const std::string& key, int& out) const {
    if (const Entry* e = find(key)) {
      const std::string_view v = trim(e->value);
      const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
      if (ec != std::errc() || ptr != v.data() + v.size() || v.empty()) {
        throw ParseError(e->line, key + ": expected an integer");
      }
    }
  }

  void boolean(const std::string& key, bool& out) const {
    if (const Entry* e = find(key)) {
      const std::string_view v = trim(e->value);
      if (v == "true" || v == "on" || v == "1") {
        out = true;
      } else if (v == "false" || v == "off" || v == "0") {
        out = false;
      } else {
        throw ParseError(e->line, key + ": expected true or false");
      }
    }
  }

  template <int N>
  void vector(const std::string& key, Eigen::Matrix<double, N, 1>& out) const {
    if (const Entry* e = find(key)) {
      const auto items = split_list(e->value);
      if (items.size() != N) {
        throw ParseError(e->line, key + ": expected " + std::to_string(N) +
                                      " comma-separated numbers");
      }
      for (int i = 0; i < N; ++i) {
        if (!to_double(items[i], out(i))) {
          throw ParseError(e->line, key + ": bad number '" +
                                        std::string(items[i]) + "'");
        }
      }
    }
  }

  void poles(const std::string& key, std::array<Pole, 4>& out) const {
    if (const Entry* e = find(key)) {
      const auto items = split_list(e->value);
      if (items.size() != 4) {
        throw ParseError(e->line, key + ": expected 4 poles");
      }
      try {
        for (int i = 0; i < 4; ++i) out[i] = parse_pole(items[i]);
      } catch (const ParseError& pe) {
        throw ParseError(e->line, key + ": " + pe.what());
      }
    }
  }

  std::string text(const std::string& key, std::string fallback) const {
    if (const Entry* e = find(key)) return std::string(trim(e->value));
    return fallback;
  }

  std::size_t line_of(const std::string& key) const {
    const Entry* e = find(key);
    return e ? e->line : 0;
  }

 private:
  const Entry* find(const std::string& key) const {
    const auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
  }

  std::map<std::string, Entry> entries_;
};

const std::vector<std::string> kEllipseKeys = {
    "trajectory.a", "trajectory.b", "trajectory.phi_deg", "trajectory.omega"};
const std::vector<std::string> kHilbertKeys = {
    "trajectory.size", "trajectory.seg_time", "trajectory.origin"};

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "plant.m",
      "plant.J",
      "plant.ell",
      "plant.g",
      "control.poles",
      "control.u_min",
      "estimator.adaptive",
      "estimator.c1",
      "estimator.c2",
      "estimator.alpha1",
      "estimator.alpha2",
      "estimator.lambda",
      "estimator.gamma",
      "estimator.eps",
      "estimator.theta_floor",
      "estimator.theta0",
      "trajectory.kind",
      "trajectory.a",
      "trajectory.b",
      "trajectory.phi_deg",
      "trajectory.omega",
      "trajectory.size",
      "trajectory.seg_time",
      "trajectory.origin",
      "sim.dt",
      "sim.t_end",
      "sim.log_every",
      "sim.x0",
      "metrics.rmse_start",
  };
  return keys;
}

Pole parse_pole(std::string_view token) {
  token = trim(token);
  if (token.empty()) throw ParseError(0, "empty pole");
  double re = 0.0;
  if (token.back() != 'i' && token.back() != 'j') {
    if (!to_double(token, re)) {
      throw ParseError(0, "bad pole '" + std::string(token) + "'");
    }
    return Pole(re);
  }
  // a+bi / a-bi: split at the last sign that is not an exponent sign.
  const std::string_view body = token.substr(0, token.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' &&
        body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  double im = 0.0;
  const bool ok = split != std::string_view::npos &&
                  to_double(body.substr(0, split), re) &&
                  to_double(body.substr(split), im);
  if (!ok) throw ParseError(0, "bad pole '" + std::string(token) + "'");
  return Pole(re, im);
}

SimConfig parse_config(std::string_view text) {
  std::map<std::string, Entry> entries;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  const auto& known = config_keys();
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(line_no, "expected 'section.key = value'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw ParseError(line_no, "unknown key '" + key + "'");
    }
    if (value.empty()) throw ParseError(line_no, key + ": missing value");
    if (!entries.emplace(key, Entry{line_no, value}).second) {
      throw ParseError(line_no, "duplicate key '" + key + "'");
    }
  }

  const Reader r(std::move(entries));
  SimConfig cfg;
  r.number("plant.m", cfg.plant.m);
  r.number("plant.J", cfg.plant.J);
  r.number("plant.ell", cfg.plant.ell);
  r.number("plant.g", cfg.plant.g);
  r.poles("control.poles", cfg.poles);
  r.number("control.u_min", cfg.u_min);

  r.boolean("estimator.adaptive", cfg.adaptive);
  r.number("estimator.c1", cfg.est.c1);
  r.number("estimator.c2", cfg.est.c2);
  r.number("estimator.alpha1", cfg.est.alpha1);
  r.number("estimator.alpha2", cfg.est.alpha2);
  r.number("estimator.lambda", cfg.est.lambda);
  r.number("estimator.gamma", cfg.est.gamma);
  r.number("estimator.eps", cfg.est.eps);
  r.number("estimator.theta_floor", cfg.est.theta_floor);
  r.vector<2>("estimator.theta0", cfg.theta0);

  const std::string kind = r.text("trajectory.kind", "ellipse");
  const auto reject = [&r, &kind](const std::vector<std::string>& keys) {
    for (const std::string& key : keys) {
      if (r.has(key)) {
        throw ParseError(r.line_of(key), key + " does not apply to trajectory.kind = " + kind);
      }
    }
  };
  if (kind == "ellipse") {
    reject(kHilbertKeys);
    EllipseSpec e;
    double phi_deg = 45.0;
    r.number("trajectory.a", e.a);
    r.number("trajectory.b", e.b);
    r.number("trajectory.phi_deg", phi_deg);
    r.number("trajectory.omega", e.omega);
    e.phi = phi_deg * std::numbers::pi / 180.0;
    cfg.traj = e;
    cfg.t_end = 20.0;
  } else if (kind == "hilbert") {
    reject(kEllipseKeys);
    HilbertSpec h;
    r.number("trajectory.size", h.size);
    r.number("trajectory.seg_time", h.seg_time);
    r.vector<2>("trajectory.origin", h.origin);
    cfg.traj = h;
    cfg.t_end = h.duration();
  } else {
    throw ParseError(r.line_of("trajectory.kind"),
                     "trajectory.kind must be 'ellipse' or 'hilbert'");
  }

  r.number("sim.dt", cfg.dt);
  r.number("sim.t_end", cfg.t_end);
  r.integer("sim.log_every", cfg.log_every);
  if (r.has("sim.x0")) {
    PlantState x0;
    r.vector<6>("sim.x0", x0);
    cfg.x0 = x0;
  }
  r.number("metrics.rmse_start", cfg.rmse_start);

  cfg.validate();
  return cfg;
}

SimConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file '" + path + "': file not found");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

}  // namespace adiol
