// Copyright 2026 The Authors.
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

#include "lexin/cli.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"
#include "lexin/bench.hpp"
#include "lexin/text.hpp"

namespace lexin::cli {

namespace {

using nlohmann::json;

// Bad option values found after CLI11 parsing; mapped to the usage exit
// code like CLI11's own errors.
struct UsageError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return std::move(ss).str();
}

std::int64_t parse_i64(std::string_view s) {
  std::int64_t v = 0;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end) {
    throw UsageError("invalid integer '" + std::string(s) + "'");
  }
  return v;
}

Weight parse_weight(const std::string& s) {
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::int64_t num = parse_i64(s.substr(0, slash));
    std::int64_t den = parse_i64(s.substr(slash + 1));
    if (den <= 0) throw UsageError("invalid weighting step '" + s + "'");
    return Weight(num, den);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string ipart = s.substr(0, dot);
    std::string fpart = s.substr(dot + 1);
    bool negative = !ipart.empty() && ipart.front() == '-';
    if (negative) ipart.erase(0, 1);
    if ((ipart.empty() && fpart.empty()) || ipart.size() + fpart.size() > 18) {
      throw UsageError("invalid weighting step '" + s + "'");
    }
    for (char c : ipart + fpart) {
      if (c < '0' || c > '9') {
        throw UsageError("invalid weighting step '" + s + "'");
      }
    }
    std::int64_t den = 1;
    for (std::size_t i = 0; i < fpart.size(); ++i) den *= 10;
    std::int64_t num = (ipart.empty() ? 0 : parse_i64(ipart)) * den +
                       (fpart.empty() ? 0 : parse_i64(fpart));
    return Weight(negative ? -num : num, den);
  }
  return Weight(parse_i64(s));
}

std::vector<int> parse_int_list(const std::string& s, const char* which) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    std::size_t end = comma == std::string::npos ? s.size() : comma;
    std::int64_t v = parse_i64(std::string_view(s).substr(start, end - start));
    if (v < 0 || v > 1'000'000) {
      throw UsageError(std::string(which) + " value out of range: " + s);
    }
    out.push_back(static_cast<int>(v));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw UsageError(std::string(which) + " needs at least one value");
  return out;
}

std::pair<int, int> parse_size_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    int v = static_cast<int>(parse_i64(s));
    return {v, v};
  }
  int lo = static_cast<int>(parse_i64(s.substr(0, dots)));
  int hi = static_cast<int>(parse_i64(s.substr(dots + 2)));
  return {lo, hi};
}

bench::Preset parse_preset(const std::string& s) {
  if (s == "uniform") return bench::Preset::Uniform;
  if (s == "clashfree") return bench::Preset::ClashFree;
  if (s == "staircase") return bench::Preset::Staircase;
  throw UsageError("unknown preset '" + s +
                   "' (expected uniform, clashfree, or staircase)");
}

std::string features_inline(const FeatureSet& s) {
  std::string out = "{";
  for (const auto& [attribute, value] : s) {
    out += " " + attribute.str() + " = " + value.str();
  }
  out += " }";
  return out;
}

std::string features_compact(const FeatureSet& s) {
  std::string out;
  for (const auto& [attribute, value] : s) {
    if (!out.empty()) out += " ";
    out += attribute.str() + "=" + value.str();
  }
  return out;
}

json features_json(const FeatureSet& s) {
  json j = json::object();
  for (const auto& [attribute, value] : s) j[attribute.str()] = value.str();
  return j;
}

FeatureSet features_from_json(const json& j) {
  FeatureSet out;
  for (const auto& [key, value] : j.items()) {
    std::string v = value.get<std::string>();
    out.assign(Attribute(key), v == kUnknownToken ? Value::unknown()
                                                  : Value::known(std::move(v)));
  }
  return out;
}

json payoff_json(const Payoff& p) {
  if (p.denominator() == 1) return json(p.numerator());
  return json(to_string(p));
}

Payoff payoff_from_json(const json& j) {
  if (j.is_number_integer()) return Payoff(j.get<std::int64_t>());
  std::string s = j.get<std::string>();
  auto slash = s.find('/');
  if (slash == std::string::npos) return Payoff(parse_i64(s));
  return Payoff(parse_i64(s.substr(0, slash)), parse_i64(s.substr(slash + 1)));
}

}  // namespace

std::string render_entry_text(const InsertionResult& r, bool include_trace) {
  std::string out = r.object + " :";
  for (const std::string& p : r.parents) out += " " + p;
  out += " " + features_inline(r.local);
  out += " # cost " + std::to_string(r.cost) + "\n";
  if (include_trace) {
    int i = 0;
    for (const IterationRecord& rec : r.trace) {
      out += "# iter " + std::to_string(++i) + ": " + rec.chosen +
             " payoff=" + to_string(rec.payoff) + " covered=[" +
             features_compact(rec.covered_now) + "] new_clashes=[" +
             features_compact(rec.new_clashes) + "] runners_up=[";
      bool first = true;
      for (const auto& [name, payoff] : rec.runners_up) {
        if (!first) out += " ";
        out += name + "=" + to_string(payoff);
        first = false;
      }
      out += "]\n";
    }
  }
  return out;
}

std::string render_entry_json(const InsertionResult& r, bool include_trace) {
  json j;
  j["object"] = r.object;
  j["parents"] = r.parents;
  j["local"] = features_json(r.local);
  j["cost"] = r.cost;
  if (include_trace) {
    json trace = json::array();
    for (const IterationRecord& rec : r.trace) {
      json t;
      t["chosen"] = rec.chosen;
      t["payoff"] = payoff_json(rec.payoff);
      t["covered_now"] = features_json(rec.covered_now);
      t["new_clashes"] = features_json(rec.new_clashes);
      json runners = json::array();
      for (const auto& [name, payoff] : rec.runners_up) {
        runners.push_back(json::array({name, payoff_json(payoff)}));
      }
      t["runners_up"] = std::move(runners);
      trace.push_back(std::move(t));
    }
    j["trace"] = std::move(trace);
  }
  return j.dump(2) + "\n";
}

InsertionResult parse_entry_json(const std::string& text) {
  try {
    json j = json::parse(text);
    InsertionResult r;
    r.object = j.at("object").get<std::string>();
    r.parents = j.at("parents").get<std::vector<std::string>>();
    r.local = features_from_json(j.at("local"));
    r.cost = j.at("cost").get<int>();
    if (j.contains("trace")) {
      for (const json& t : j.at("trace")) {
        IterationRecord rec;
        rec.chosen = t.at("chosen").get<std::string>();
        rec.payoff = payoff_from_json(t.at("payoff"));
        rec.covered_now = features_from_json(t.at("covered_now"));
        rec.new_clashes = features_from_json(t.at("new_clashes"));
        for (const json& pair : t.at("runners_up")) {
          rec.runners_up.emplace_back(pair.at(0).get<std::string>(),
                                      payoff_from_json(pair.at(1)));
        }
        r.trace.push_back(std::move(rec));
      }
    }
    return r;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed entry json: ") + e.what());
  }
}

namespace {

struct InsertArgs {
  std::string file, object, epsilon;
  bool weighted = false, prune = false, trace = false, json_out = false;
};

struct ExactArgs {
  std::string file, object;
  int max_regular = 20;
  bool json_out = false;
};

struct CompileArgs {
  std::string file, epsilon;
  bool weighted = false, json_out = false;
};

struct BenchArgs {
  std::string out_path;
  std::string preset = "uniform";
  std::string attrs = "30", classes = "10", known = "12", size = "2..6";
  int trials = 20, values = 5, max_regular = 20;
  double density = 0.25;
  std::uint64_t seed = 1;
};

CompiledSet compiled_for(const Hierarchy& h, bool weighted,
                         const std::string& epsilon) {
  if (!weighted && epsilon.empty()) return compile_out(h);
  if (ValidationReport report = validate(h); !report.empty()) {
    throw ValidationError(std::move(report));
  }
  Weight step = epsilon.empty() ? default_epsilon(h) : parse_weight(epsilon);
  return compile_out_weighted(h, step);
}

int do_insert(const InsertArgs& a, std::ostream& out) {
  HierarchyDocument doc = parse(read_file(a.file));
  CompiledSet n = compiled_for(doc.hierarchy, a.weighted, a.epsilon);
  ObjectSpec spec = doc.object_spec(a.object);
  n = augment_singletons(std::move(n), spec);
  InsertionResult r = greedy_insert(spec, n);
  if (a.prune) r = prune_redundant(r, spec, n);
  out << (a.json_out ? render_entry_json(r, a.trace)
                     : render_entry_text(r, a.trace));
  return 0;
}

int do_exact(const ExactArgs& a, std::ostream& out) {
  HierarchyDocument doc = parse(read_file(a.file));
  CompiledSet n = compile_out(doc.hierarchy);
  ObjectSpec spec = doc.object_spec(a.object);
  InsertionResult r = exact_insert(spec, n, a.max_regular);
  out << (a.json_out ? render_entry_json(r, false) : render_entry_text(r, false));
  return 0;
}

int do_compile(const CompileArgs& a, std::ostream& out) {
  HierarchyDocument doc = parse(read_file(a.file));
  CompiledSet n = compiled_for(doc.hierarchy, a.weighted, a.epsilon);
  if (a.json_out) {
    json j;
    j["weighted"] = n.weighted;
    json classes = json::array();
    for (const CompiledClass& c : n.classes) {
      json jc;
      jc["name"] = c.name;
      jc["features"] = features_json(c.features);
      if (c.weights) {
        json w = json::object();
        for (const auto& [attribute, weight] : *c.weights) {
          w[attribute.str()] = to_string(weight);
        }
        jc["weights"] = std::move(w);
      }
      classes.push_back(std::move(jc));
    }
    j["classes"] = std::move(classes);
    out << j.dump(2) << "\n";
  } else {
    for (const CompiledClass& c : n.classes) {
      out << c.name << " {";
      for (const auto& [attribute, value] : c.features) {
        out << " " << attribute.str() << " = " << value.str();
        if (n.weighted) out << " @ " << to_string(c.weights->at(attribute));
      }
      out << " }\n";
    }
  }
  return 0;
}

int do_validate(const std::string& file, std::ostream& out) {
  HierarchyDocument doc = parse(read_file(file));
  ValidationReport report = validate(doc.hierarchy);
  if (report.empty()) {
    out << "ok\n";
    return 0;
  }
  for (const std::string& line : report.lines()) out << line << "\n";
  return 1;
}

int do_render(const std::string& file, std::ostream& out) {
  out << render(parse(read_file(file)));
  return 0;
}

int do_bench(const BenchArgs& a, std::ostream& out) {
  bench::Preset preset = parse_preset(a.preset);
  if (a.trials < 1) throw UsageError("--trials must be positive");
  std::vector<int> attrs = parse_int_list(a.attrs, "--attrs");
  std::vector<int> classes = parse_int_list(a.classes, "--classes");
  std::vector<int> known = parse_int_list(a.known, "--known");
  std::pair<int, int> size = parse_size_range(a.size);

  std::vector<bench::InstanceParams> sweep;
  for (int na : attrs) {
    for (int nc : classes) {
      for (int nk : known) {
        bench::InstanceParams p;
        p.n_attributes = na;
        p.n_regular_classes = nc;
        p.object_known_count = nk;
        p.n_values_per_attribute = a.values;
        p.class_size_range = size;
        p.clash_density = a.density;
        p.seed = a.seed;
        sweep.push_back(p);
      }
    }
  }

  bench::RatioReport report = bench::measure(preset, sweep, a.trials, a.max_regular);
  std::ofstream csv(a.out_path, std::ios::binary);
  if (!csv) throw Error("cannot write file '" + a.out_path + "'");
  bench::write_csv(report, csv);
  out << bench::summary(report) << "\n";
  return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"insert objects into feature-based default inheritance hierarchies"};
  app.name("lexin");
  app.require_subcommand(1);

  InsertArgs ia;
  CLI::App* insert =
      app.add_subcommand("insert", "choose parents for an object greedily");
  insert->add_option("file", ia.file, "hierarchy source")->required();
  insert->add_option("object", ia.object, "object block to insert")->required();
  insert->add_flag("--weighted", ia.weighted,
                   "break feature-count ties toward nearer declarations");
  insert->add_option("--epsilon", ia.epsilon,
                     "weighting step per inheritance link (1/32, 0.125, or 2); "
                     "implies --weighted");
  insert->add_flag("--prune", ia.prune, "drop redundant parents afterwards");
  insert->add_flag("--trace", ia.trace, "explain every iteration");
  insert->add_flag("--json", ia.json_out, "machine-readable output");

  ExactArgs ea;
  CLI::App* exact = app.add_subcommand(
      "exact", "reference search over all subsets of regular classes");
  exact->add_option("file", ea.file, "hierarchy source")->required();
  exact->add_option("object", ea.object, "object block to insert")->required();
  exact->add_option("--max-regular", ea.max_regular,
                    "largest regular-class count the search accepts");
  exact->add_flag("--json", ea.json_out, "machine-readable output");

  CompileArgs ca;
  CLI::App* compile =
      app.add_subcommand("compile", "print every class with inheritance compiled away");
  compile->add_option("file", ca.file, "hierarchy source")->required();
  compile->add_flag("--weighted", ca.weighted, "attach link-distance weights");
  compile->add_option("--epsilon", ca.epsilon,
                      "weighting step per inheritance link; implies --weighted");
  compile->add_flag("--json", ca.json_out, "machine-readable output");

  std::string validate_file;
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "report structural problems and exit");
  validate_cmd->add_option("file", validate_file, "hierarchy source")->required();

  std::string render_file;
  CLI::App* render_cmd =
      app.add_subcommand("render", "reprint the source in canonical form");
  render_cmd->add_option("file", render_file, "hierarchy source")->required();

  BenchArgs ba;
  CLI::App* bench_cmd = app.add_subcommand(
      "bench", "measure greedy cost against the exhaustive reference");
  bench_cmd->add_option("--out", ba.out_path, "CSV output path")->required();
  bench_cmd->add_option("--preset", ba.preset,
                        "uniform, clashfree, or staircase");
  bench_cmd->add_option("--trials", ba.trials, "instances per sweep point");
  bench_cmd->add_option("--seed", ba.seed, "base seed");
  bench_cmd->add_option("--attrs", ba.attrs, "attribute counts, comma separated");
  bench_cmd->add_option("--classes", ba.classes,
                        "regular class counts, comma separated");
  bench_cmd->add_option("--known", ba.known,
                        "known feature counts, comma separated");
  bench_cmd->add_option("--values", ba.values, "values per attribute");
  bench_cmd->add_option("--class-size", ba.size, "class size range, like 2..6");
  bench_cmd->add_option("--density", ba.density, "clash probability in [0, 1]");
  bench_cmd->add_option("--max-regular", ba.max_regular,
                        "skip the exhaustive reference above this class count");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    auto chosen = app.get_subcommands();
    out << (chosen.empty() ? app.help() : chosen.front()->help());
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  std::string current_file;
  try {
    if (insert->parsed()) {
      current_file = ia.file;
      return do_insert(ia, out);
    }
    if (exact->parsed()) {
      current_file = ea.file;
      return do_exact(ea, out);
    }
    if (compile->parsed()) {
      current_file = ca.file;
      return do_compile(ca, out);
    }
    if (validate_cmd->parsed()) {
      current_file = validate_file;
      return do_validate(validate_file, out);
    }
    if (render_cmd->parsed()) {
      current_file = render_file;
      return do_render(render_file, out);
    }
    if (bench_cmd->parsed()) return do_bench(ba, out);
    err << "error: no subcommand\n";
    return 2;
  } catch (const ParseError& e) {
    for (const Diagnostic& d : e.diagnostics()) {
      err << current_file << ":" << d.to_string() << "\n";
    }
    return 1;
  } catch (const ValidationError& e) {
    for (const std::string& line : e.report().lines()) err << line << "\n";
    return 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const GuardError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace lexin::cli
