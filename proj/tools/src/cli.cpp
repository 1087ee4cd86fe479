/*
   Copyright 2026 The specunits Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "specunits_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <ostream>

#include "CLI11.hpp"
#include "specunits_cli/record.hpp"

namespace specunits::cli {
namespace {

Json header(const std::string& command, int n) {
  Json j;
  j["command"] = command;
  j["n"] = n;
  return j;
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

CyclicVector parse_exact_vector(int n, std::string text) {
  if (text.rfind("vec:", 0) == 0) text.erase(0, 4);
  CyclicVector v = parse_vector(text);
  if (v.n() != n) {
    throw UsageError("vector has " + std::to_string(v.n()) + " entries, expected " + std::to_string(n));
  }
  return v;
}

struct Args {
  int n = 0;
  int k = 0;
  std::string set, a, b, u, out_file, policy = "rosenblatt", format = "json";
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max();
  bool max_n_override = false;
};

void cmd_iv(const Args& x, std::ostream& out) {
  Json j = header("iv", x.n);
  j["interval_content"] = to_json(interval_content(from_set(x.n, parse_set(x.n, x.set))));
  emit(out, j);
}

void cmd_homometric(const Args& x, std::ostream& out) {
  const CyclicVector a = parse_vector_or_set(x.n, x.a);
  const CyclicVector b = parse_vector_or_set(x.n, x.b);
  Json j = header("homometric", x.n);
  j["homometric"] = is_homometric(a, b);
  j["interval_content_a"] = to_json(interval_content(a));
  j["interval_content_b"] = to_json(interval_content(b));
  emit(out, j);
}

void cmd_units_order(const Args& x, std::ostream& out) {
  Json j = header("units order", x.n);
  const Json g = to_json(group_structure(x.n));
  for (const auto& [key, value] : g.items()) j[key] = value;
  emit(out, j);
}

void cmd_units_enumerate(const Args& x, std::ostream& out) {
  std::ofstream file;
  if (!x.out_file.empty()) {
    file.open(x.out_file);
    if (!file) throw UsageError("cannot open '" + x.out_file + "' for writing");
  }
  std::ostream& sink = x.out_file.empty() ? out : file;
  const bool csv = x.format == "csv";
  std::uint64_t index = 0;
  if (x.limit > 0) {
    enumerate_units(x.n, [&](const SpectralUnit& u) {
      if (csv) {
        sink << to_csv_row(u.vector()) << '\n';
      } else {
        Json j = header("units enumerate", x.n);
        j["index"] = index;
        j["u"] = to_json(u.vector());
        emit(sink, j);
      }
      return ++index < x.limit;
    });
  }
  if (!x.out_file.empty()) {
    file.close();
    if (!file) throw UsageError("write to '" + x.out_file + "' failed");
    Json j = header("units enumerate", x.n);
    j["count"] = index;
    j["out"] = x.out_file;
    emit(out, j);
  }
}

void cmd_units_check(const Args& x, std::ostream& out) {
  const CyclicVector u = parse_exact_vector(x.n, x.u);
  const bool unit = is_spectral_unit(u);
  Json j = header("units check", x.n);
  j["is_unit"] = unit;
  j["order"] = unit ? to_json(unit_order(u)) : Json(nullptr);
  Json spectrum = Json::array();
  const Spectrum s = dft(u);
  for (const auto& v : s.values()) spectrum.push_back(to_string(v));
  j["spectrum"] = std::move(spectrum);
  emit(out, j);
}

void cmd_units_connect(const Args& x, std::ostream& out) {
  const CyclicVector a = parse_vector_or_set(x.n, x.a);
  const CyclicVector b = parse_vector_or_set(x.n, x.b);
  const ConnectPolicy policy = x.policy == "enumerate" ? ConnectPolicy::enumerate : ConnectPolicy::rosenblatt;
  Json j = header("units connect", x.n);
  j["policy"] = x.policy;
  Json units = Json::array();
  for (const auto& c : connect(a, b, policy)) {
    Json e;
    e["u"] = to_json(c.u);
    e["order"] = to_json(c.order);
    units.push_back(std::move(e));
  }
  j["count"] = units.size();
  j["units"] = std::move(units);
  emit(out, j);
}

void cmd_zrel(const Args& x, std::ostream& out) {
  ZrelOptions opts;
  if (x.max_n_override) opts.max_n = std::numeric_limits<int>::max();
  Json j = header("zrel", x.n);
  j["k"] = x.k;
  Json pairs = Json::array();
  for (const auto& p : find_zrelated(x.n, x.k, opts)) {
    pairs.push_back(Json::array({to_json(p.first.canonical), to_json(p.second.canonical)}));
  }
  j["count"] = pairs.size();
  j["pairs"] = std::move(pairs);
  emit(out, j);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Args x;
  CLI::App app{"Exact spectral units of finite order on Z_n", "specunits"};
  app.require_subcommand(1);

  auto add_n = [&](CLI::App* sub) {
    sub->add_option("n", x.n, "Modulus")->required()->check(CLI::PositiveNumber);
  };

  auto* iv = app.add_subcommand("iv", "Interval content of a subset");
  add_n(iv);
  iv->add_option("--set", x.set, "Comma-separated residues")->required();

  auto* hom = app.add_subcommand("homometric", "Test two vectors or sets for homometry");
  add_n(hom);
  hom->add_option("--a", x.a)->required();
  hom->add_option("--b", x.b)->required();

  auto* units = app.add_subcommand("units", "Spectral unit group");
  units->require_subcommand(1);
  auto* order = units->add_subcommand("order", "Group order and invariant factors");
  add_n(order);
  auto* en = units->add_subcommand("enumerate", "Stream every unit, one record per line");
  add_n(en);
  en->add_option("--limit", x.limit, "Stop after this many units");
  en->add_option("--out", x.out_file, "Write records to FILE");
  en->add_option("--format", x.format)->check(CLI::IsMember({"json", "csv"}));
  auto* check = units->add_subcommand("check", "Unit test, order and spectrum of a vector");
  add_n(check);
  check->add_option("--u", x.u, "Comma-separated rationals")->required();
  auto* con = units->add_subcommand("connect", "Units mapping a onto b");
  add_n(con);
  con->add_option("--a", x.a)->required();
  con->add_option("--b", x.b)->required();
  con->add_option("--policy", x.policy)->check(CLI::IsMember({"rosenblatt", "enumerate"}));

  auto* zrel = app.add_subcommand("zrel", "Z-related pairs of k-subsets");
  add_n(zrel);
  zrel->add_option("k", x.k, "Subset size")->required()->check(CLI::NonNegativeNumber);
  zrel->add_flag("--max-n-override", x.max_n_override, "Lift the default bound on n");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (iv->parsed()) cmd_iv(x, out);
    else if (hom->parsed()) cmd_homometric(x, out);
    else if (order->parsed()) cmd_units_order(x, out);
    else if (en->parsed()) cmd_units_enumerate(x, out);
    else if (check->parsed()) cmd_units_check(x, out);
    else if (con->parsed()) cmd_units_connect(x, out);
    else if (zrel->parsed()) cmd_zrel(x, out);
    return kExitOk;
  } catch (const UsageError& e) {
    err << "specunits: usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "specunits: " << e.what() << '\n';
    return kExitDomain;
  } catch (const InconsistencyError& e) {
    err << "specunits: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "specunits: internal error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace specunits::cli
