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

#include "facemill/app/report.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include <fmt/format.h>

namespace facemill::app {

std::string CsvDocument::render() const {
  std::string out;
  const auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) {
        out += ',';
      }
      out += cells[i];
    }
    out += '\n';
  };
  line(header);
  for (const auto& r : rows) {
    line(r);
  }
  return out;
}

std::string RunManifest::render() const {
  std::string out = "# facemill run manifest\n";
  out += "# subcommand: " + subcommand + "\n";
  if (!arguments.empty()) {
    out += "# arguments:";
    for (const auto& a : arguments) {
      out += " " + a;
    }
    out += "\n";
  }
  if (!seeds.empty()) {
    out += "# seeds:";
    for (auto s : seeds) {
      out += fmt::format(" {}", s);
    }
    out += "\n";
  }
  for (const auto& o : outputs) {
    out += "# output: " + o + "\n";
  }
  out += echo_config(settings);
  return out;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) {
    throw IoError("cannot write " + path.string());
  }
  f << text;
  if (!f) {
    throw IoError("write failed for " + path.string());
  }
}

} // namespace

void emit_report(const Report& report, RunManifest manifest, const std::optional<std::filesystem::path>& out_dir,
                 std::ostream& out, std::ostream& err) {
  if (!out_dir) {
    bool first = true;
    for (const auto& t : report.tables) {
      if (!t.primary) {
        continue;
      }
      if (!first) {
        out << '\n';
      }
      out << t.render();
      first = false;
    }
    for (const auto& s : report.summary) {
      err << s << '\n';
    }
    return;
  }
  std::error_code ec;
  std::filesystem::create_directories(*out_dir, ec);
  if (ec) {
    throw IoError("cannot create output directory " + out_dir->string() + ": " + ec.message());
  }
  for (const auto& t : report.tables) {
    const auto file = t.name + ".csv";
    write_file(*out_dir / file, t.render());
    manifest.outputs.push_back(file);
  }
  std::string summary;
  for (const auto& s : report.summary) {
    summary += s + '\n';
  }
  write_file(*out_dir / "summary.txt", summary);
  manifest.outputs.push_back("summary.txt");
  write_file(*out_dir / "manifest.cfg", manifest.render());
}

const std::vector<LiteratureValue>& literature_values() {
  static const std::vector<LiteratureValue> values{
      {6.0, "An and Chen (2003)", 1.4858},
      {8.0, "An and Chen (2003)", 1.8523},
      {8.0, "Shunmugam et al. (2000)", 2.0086},
  };
  return values;
}

double improvement_percent(double reference, double ours) { return 100.0 * (reference - ours) / ours; }

std::vector<std::string> comparison_lines(double total_depth, double unit_cost) {
  std::vector<std::string> lines;
  for (const auto& v : literature_values()) {
    if (std::abs(v.total_depth - total_depth) > 1e-9) {
      continue;
    }
    const double pct = improvement_percent(v.unit_cost, unit_cost);
    lines.push_back(fmt::format("d_t = {:g} mm: UC = {:.4f} is {:.1f}% {} than {} (literature value {:.4f})",
                                total_depth, unit_cost, std::abs(pct), pct >= 0 ? "better" : "worse", v.source,
                                v.unit_cost));
  }
  return lines;
}

} // namespace facemill::app
