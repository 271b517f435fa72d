// Copyright 2026 The facemill Authors
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

#include "facemill/app/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <utility>
#include <sstream>

#include <fmt/format.h>

#include "facemill/error.hpp"

namespace facemill::app {
namespace {

struct Binding {
  std::string name;
  std::function<std::string(const Settings&)> get;
  std::function<void(Settings&, std::string_view)> set;
};

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) {
    return {};
  }
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ConfigError(std::string(key), "cannot parse value '" + std::string(text) + "' for key '" +
                                            std::string(key) + "'");
  }
  return value;
}

template <typename Member>
Binding real(std::string name, Member member) {
  return {name, [member](const Settings& s) { return fmt::format("{}", std::invoke(member, s)); },
          [member, name](Settings& s, std::string_view v) { std::invoke(member, s) = parse_number<double>(name, v); }};
}

template <typename Member>
Binding whole(std::string name, Member member) {
  using T = std::remove_reference_t<decltype(std::invoke(member, std::declval<Settings&>()))>;
  return {name, [member](const Settings& s) { return fmt::format("{}", std::invoke(member, s)); },
          [member, name](Settings& s, std::string_view v) { std::invoke(member, s) = parse_number<T>(name, v); }};
}

Binding travel(std::string name, std::optional<double> ProblemData::*field) {
  return {name,
          [field](const Settings& s) {
            const auto& v = s.problem.*field;
            return v ? fmt::format("{}", *v) : std::string("geometric");
          },
          [field, name](Settings& s, std::string_view v) {
            if (v == "geometric") {
              s.problem.*field = std::nullopt;
            } else {
              s.problem.*field = parse_number<double>(name, v);
            }
          }};
}

#define FM_P(field) [](auto& s) -> auto& { return s.problem.field; }
#define FM_R(field) [](auto& s) -> auto& { return s.problem.reference.field; }
#define FM_G(field) [](auto& s) -> auto& { return s.ga.field; }

const std::vector<Binding>& bindings() {
  static const std::vector<Binding> table = [] {
    std::vector<Binding> b;
    b.push_back(real("L", FM_P(L)));
    b.push_back(real("B", FM_P(B)));
    b.push_back(real("D", FM_P(D)));
    b.push_back(whole("Z", FM_P(Z)));
    b.push_back(real("r_e", FM_P(r_e)));
    b.push_back(real("e_r", FM_P(e_r)));
    b.push_back(real("e_s", FM_P(e_s)));
    b.push_back(travel("L_tr", &ProblemData::L_tr));
    b.push_back(travel("L_ts", &ProblemData::L_ts));
    b.push_back(real("k0", FM_P(k0)));
    b.push_back(real("k_t", FM_P(k_t)));
    b.push_back(real("t_e", FM_P(t_e)));
    b.push_back(real("t_p", FM_P(t_p)));
    b.push_back(real("h1", FM_P(h1)));
    b.push_back(real("h2", FM_P(h2)));
    b.push_back(real("V_s_min", FM_P(V_s.min)));
    b.push_back(real("V_s_max", FM_P(V_s.max)));
    b.push_back(real("V_r_min", FM_P(V_r.min)));
    b.push_back(real("V_r_max", FM_P(V_r.max)));
    b.push_back(real("f_s_min", FM_P(f_s.min)));
    b.push_back(real("f_s_max", FM_P(f_s.max)));
    b.push_back(real("f_r_min", FM_P(f_r.min)));
    b.push_back(real("f_r_max", FM_P(f_r.max)));
    b.push_back(real("d_s_min", FM_P(d_s.min)));
    b.push_back(real("d_s_max", FM_P(d_s.max)));
    b.push_back(real("d_s_step", FM_P(d_s.step)));
    b.push_back(real("d_r_min", FM_P(d_r.min)));
    b.push_back(real("d_r_max", FM_P(d_r.max)));
    b.push_back(real("d_r_step", FM_P(d_r.step)));
    b.push_back(real("F_max", FM_P(F_max)));
    b.push_back(real("P_max", FM_P(P_max)));
    b.push_back(real("R_s_max", FM_P(R_s_max)));
    b.push_back(real("R_r_max", FM_P(R_r_max)));
    b.push_back(real("eta", FM_P(eta)));
    b.push_back(real("C_v", FM_P(C_v)));
    b.push_back(real("K_v", FM_P(K_v)));
    b.push_back(real("l", FM_P(l)));
    b.push_back(real("x_v", FM_P(x_v)));
    b.push_back(real("y_v", FM_P(y_v)));
    b.push_back(real("p_v", FM_P(p_v)));
    b.push_back(real("q_v", FM_P(q_v)));
    b.push_back(real("s_v", FM_P(s_v)));
    b.push_back(real("C_f", FM_P(C_f)));
    b.push_back(real("K_f", FM_P(K_f)));
    b.push_back(real("s_f", FM_P(s_f)));
    b.push_back(real("p_f", FM_P(p_f)));
    b.push_back(real("q_f", FM_P(q_f)));
    b.push_back(real("n4", FM_P(n4)));
    b.push_back(real("n5", FM_P(n5)));
    // printed reference coefficients
    b.push_back(real("C0", FM_R(C0)));
    b.push_back(real("C1", FM_R(C1)));
    b.push_back(real("C2", FM_R(C2)));
    b.push_back(real("n1", FM_R(n1)));
    b.push_back(real("n2", FM_R(n2)));
    b.push_back(real("n3", FM_R(n3)));
    b.push_back(real("a_s", FM_R(a_s)));
    b.push_back(real("a_r", FM_R(a_r)));
    b.push_back(real("b_s", FM_R(b_s)));
    b.push_back(real("b_r", FM_R(b_r)));
    b.push_back(real("c_s", FM_R(c_s)));
    b.push_back(real("c_r", FM_R(c_r)));
    b.push_back({"coefficients", [](const Settings& s) { return std::string(to_string(s.coefficients)); },
                 [](Settings& s, std::string_view v) {
                   if (v == "derived") {
                     s.coefficients = CoefficientSource::derived;
                   } else if (v == "printed") {
                     s.coefficients = CoefficientSource::printed;
                   } else {
                     throw ConfigError("coefficients", "coefficients must be 'derived' or 'printed'");
                   }
                 }});
    // GA
    b.push_back(whole("pop", FM_G(population)));
    b.push_back(whole("gens", FM_G(generations)));
    b.push_back(real("pc", FM_G(crossover_prob)));
    b.push_back(real("pm", FM_G(mutation_prob)));
    b.push_back(whole("bits", FM_G(bits_per_real)));
    b.push_back({"index_bits",
                 [](const Settings& s) {
                   return s.ga.index_bits ? fmt::format("{}", *s.ga.index_bits) : std::string("auto");
                 },
                 [](Settings& s, std::string_view v) {
                   if (v == "auto") {
                     s.ga.index_bits.reset();
                   } else {
                     s.ga.index_bits = parse_number<unsigned>("index_bits", v);
                   }
                 }});
    b.push_back(whole("seed", FM_G(seed)));
    b.push_back(real("gap_threshold", FM_G(gap_threshold)));
    return b;
  }();
  return table;
}

#undef FM_P
#undef FM_R
#undef FM_G

// Maps invariant messages back to the key they mention.
std::string key_in(const std::string& message) {
  std::string best;
  for (const auto& b : bindings()) {
    const auto pos = message.find(b.name);
    if (pos == std::string::npos) {
      continue;
    }
    const bool left = pos == 0 || message[pos - 1] == ' ' || message[pos - 1] == '(';
    const auto end = pos + b.name.size();
    const bool right = end == message.size() || message[end] == ' ' || message[end] == ',' || message[end] == ')';
    if (left && right && b.name.size() > best.size()) {
      best = b.name;
    }
  }
  return best;
}

} // namespace

std::vector<std::string> config_keys() {
  std::vector<std::string> keys;
  for (const auto& b : bindings()) {
    keys.push_back(b.name);
  }
  return keys;
}

void set_key(Settings& settings, std::string_view key, std::string_view value) {
  for (const auto& b : bindings()) {
    if (b.name == key) {
      b.set(settings, value);
      return;
    }
  }
  throw ConfigError(std::string(key), "unknown configuration key '" + std::string(key) + "'");
}

namespace {

// GA messages describe the setting rather than the key.
std::string ga_key(const std::string& message) {
  static const std::pair<const char*, const char*> kPrefixes[] = {
      {"population size", "pop"},        {"crossover probability", "pc"}, {"mutation probability", "pm"},
      {"bits per real", "bits"},         {"index bits", "index_bits"},    {"convergence gap", "gap_threshold"},
  };
  for (const auto& [prefix, key] : kPrefixes) {
    if (message.rfind(prefix, 0) == 0) {
      return key;
    }
  }
  return {};
}

} // namespace

void check(const Settings& settings) {
  try {
    validate(settings.problem);
  } catch (const InvalidInput& e) {
    throw ConfigError(key_in(e.what()), std::string("invalid configuration: ") + e.what());
  }
  try {
    validate(settings.ga);
  } catch (const InvalidInput& e) {
    throw ConfigError(ga_key(e.what()), std::string("invalid configuration: ") + e.what());
  }
}

Settings parse_config(std::string_view text, Settings base) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("", "line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    set_key(base, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  check(base);
  return base;
}

Settings load_config(const std::optional<std::filesystem::path>& path) {
  if (!path) {
    Settings s;
    check(s);
    return s;
  }
  std::ifstream in(*path);
  if (!in) {
    throw ConfigError("", "cannot open configuration file " + path->string());
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

std::string echo_config(const Settings& settings) {
  std::string out;
  for (const auto& b : bindings()) {
    out += b.name + " = " + b.get(settings) + "\n";
  }
  return out;
}

} // namespace facemill::app
