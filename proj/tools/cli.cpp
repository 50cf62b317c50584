#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "conclab/conclab.hpp"

namespace conclab::cli {
namespace {

constexpr unsigned kMinPrecision = 64;

Json read_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::Parse, "malformed JSON in " + origin + ": " + e.what());
  }
}

/// Inline JSON, a path to a JSON file, or a bare string.
Json arg_json(const std::string& text, const std::string& origin) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) return read_json_text(text, origin);
  std::error_code ec;
  if (!text.empty() && std::filesystem::is_regular_file(text, ec)) {
    std::ifstream in(text);
    std::stringstream ss;
    ss << in.rdbuf();
    return read_json_text(ss.str(), text);
  }
  return Json(text);
}

/// Moves the fields of an --input document onto the command line, skipping
/// options that were given explicitly.
std::vector<std::string> expand_input(std::vector<std::string> args) {
  std::optional<std::string> input;
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--input" && i + 1 < args.size()) {
      input = args[++i];
    } else if (args[i].rfind("--input=", 0) == 0) {
      input = args[i].substr(8);
    } else {
      kept.push_back(args[i]);
    }
  }
  if (!input) return kept;
  Json doc = arg_json(*input, "--input");
  if (!doc.is_object()) throw Error(ErrorCode::Schema, "$: --input must be a JSON object");
  auto given = [&](const std::string& flag) {
    for (const auto& a : kept)
      if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
    return false;
  };
  for (const auto& [key, value] : doc.items()) {
    const std::string flag = "--" + key;
    if (given(flag) || value.is_null()) continue;
    if (value.is_boolean()) {
      if (value.get<bool>()) kept.push_back(flag);
      continue;
    }
    kept.push_back(flag);
    kept.push_back(value.is_string() ? value.get<std::string>() : value.dump());
  }
  return kept;
}

unsigned default_precision() {
  if (const char* env = std::getenv("CONCLAB_PRECISION")) {
    try {
      return static_cast<unsigned>(std::stoul(env));
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidArgument, "CONCLAB_PRECISION must be a positive integer");
    }
  }
  return kDefaultPrecision;
}

// ---- human-readable rendering ---------------------------------------------

void render_human(const Json& j, std::ostream& os, int indent, const std::string& key);

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

void render_human(const Json& j, std::ostream& os, int indent, const std::string& key) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string label = key.empty() ? "" : key + ": ";
  if (j.is_object() && j.size() == 1 && j.contains("coeffs")) {
    os << pad << label << to_string(laurent_from_json(j)) << '\n';
    return;
  }
  if (j.is_object()) {
    if (!key.empty()) os << pad << key << ":\n";
    for (const auto& [k, v] : j.items()) render_human(v, os, key.empty() ? indent : indent + 1, k);
    return;
  }
  if (j.is_array()) {
    bool flat = std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
    if (flat) {
      os << pad << label << '[';
      for (std::size_t i = 0; i < j.size(); ++i) os << (i ? ", " : "") << scalar_text(j[i]);
      os << "]\n";
      return;
    }
    os << pad << key << ":\n";
    for (std::size_t i = 0; i < j.size(); ++i) render_human(j[i], os, indent + 1, "- [" + std::to_string(i) + "]");
    return;
  }
  os << pad << label << scalar_text(j) << '\n';
}

// ---- command results --------------------------------------------------------

struct Outcome {
  Json payload;
  int exit = kExitOk;
};

int exit_for(Verdict v, bool strict) { return strict && v == Verdict::Inconclusive ? kExitInconclusive : kExitOk; }

SeifertMatrix knot_arg(const std::string& s, const std::string& name) { return seifert_from_json(arg_json(s, name), "$." + name); }

LaurentPoly poly_arg(const std::string& s, const std::string& name) { return laurent_from_json(arg_json(s, name), "$." + name); }

AlexanderPolynomial alexander_arg(const std::string& s, const std::string& name) {
  return alexander_from_json(arg_json(s, name), "$." + name);
}

PolySet polyset_arg(const std::string& s) { return polyset_from_json(arg_json(s, "D"), "$.D"); }

Rational rational_arg(const std::string& s, const std::string& name) {
  try {
    return parse_rational(s);
  } catch (const Error& e) {
    throw Error(ErrorCode::Schema, "$." + name + ": " + e.what());
  }
}

JumpFunction jumps_arg(const std::string& s, const std::string& name) {
  Json j = arg_json(s, name);
  if (j.is_object() && j.contains("jump_function")) j = j["jump_function"];
  return jump_function_from_json(j, "$." + name);
}

FiniteAbelianGroup group_arg(const std::string& s) {
  Json j = arg_json(s, "group");
  if (j.is_string()) {
    // "9" or "3,3": invariant factors separated by commas.
    std::vector<long> factors;
    std::stringstream ss(j.get<std::string>());
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        factors.push_back(std::stol(part));
      } catch (const std::logic_error&) {
        throw Error(ErrorCode::Schema, "$.group: expected invariant factors such as \"3,3\"");
      }
    }
    return FiniteAbelianGroup::from_cyclic_factors(factors);
  }
  if (j.is_array()) return group_from_json(Json{{"invariant_factors", j}}, "$.group");
  return group_from_json(j, "$.group");
}

std::optional<DTable> dtable_arg(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return dtable_from_json(arg_json(s, "dbar"), "$.dbar");
}

LinkFamilySpec link_spec(long m, const std::string& J, const std::string& J0) {
  if (m < 1) throw Error(ErrorCode::Schema, "$.m: m must be a positive integer");
  LinkFamilySpec spec;
  spec.m = static_cast<unsigned long>(m);
  spec.J = knot_arg(J, "J");
  if (!J0.empty()) spec.J0_alexander = alexander_arg(J0, "J0_alexander");
  return spec;
}

Json table_values(const std::vector<Rational>& values) {
  Json out = Json::object();
  for (std::size_t i = 0; i < values.size(); ++i) out[std::to_string(i)] = rational_to_json(values[i]);
  return out;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact concordance-obstruction calculator", "conclab"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string output;
  unsigned precision = 0;
  bool strict = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "human"}));
  app.add_option("--output,-o", output, "Write the report to this file");
  app.add_option("--precision", precision, "Bits for certified interval fallbacks (>= 64)");
  app.add_flag("--strict", strict, "Exit 3 when a verdict is INCONCLUSIVE");
  app.add_option("--input", "Inline JSON or a JSON file supplying the subcommand's options");
  app.fallthrough();

  std::function<Outcome()> action;

  // rd
  std::string poly;
  unsigned long d = 2;
  auto* rd = app.add_subcommand("rd", "R_d(f): |product of f over the d-th roots of unity|");
  rd->add_option("--poly", poly, "Polynomial expression, name, or coefficient JSON")->required();
  rd->add_option("--d", d, "Root-of-unity order")->required();
  rd->callback([&] {
    action = [&] {
      LaurentPoly f = poly_arg(poly, "poly");
      return Outcome{Json{{"d", d}, {"poly", to_json(f)}, {"r_d", integer_to_json(r_d(f, d))}}};
    };
  });

  // primeset
  std::string dset = "unit";
  std::optional<long> query;
  auto* primeset = app.add_subcommand("primeset", "Primes excluded from P_d(D)");
  primeset->add_option("--D", dset, "Polynomial set: \"unit\", \"f; g\", or {\"polys\": [...]}");
  primeset->add_option("--d", d, "Prime-power covering degree");
  primeset->add_option("--query", query, "Report whether this q lies in P_d(D)");
  primeset->callback([&] {
    action = [&] {
      PrimeSetComplement p = excluded_primes(polyset_arg(dset), d);
      Json j = to_json(p);
      if (query) j["query"] = Json{{"q", *query}, {"in_prime_set", p.contains(Integer(*query))}};
      return Outcome{j};
    };
  });

  // alexander
  std::string knot;
  auto* alexander = app.add_subcommand("alexander", "Alexander polynomial of a Seifert matrix, or normalize a polynomial");
  auto* knot_opt = alexander->add_option("--knot,--J", knot, "Knot expression or Seifert matrix JSON");
  auto* poly_opt = alexander->add_option("--poly", poly, "Raw polynomial to normalize");
  knot_opt->excludes(poly_opt);
  alexander->callback([&] {
    action = [&] {
      if (knot.empty() && poly.empty()) throw Error(ErrorCode::Schema, "$: one of --knot or --poly is required");
      LaurentPoly raw = knot.empty() ? poly_arg(poly, "poly") : alexander_from_seifert(knot_arg(knot, "knot"));
      NormalizedPolynomial n = normalize_alexander(raw);
      return Outcome{Json{{"alexander", to_json(n.poly)},
                          {"alexander_normalized", n.alexander_normalized},
                          {"human", to_string(n.poly)},
                          {"unit_sign", n.unit_sign}}};
    };
  });

  // signature
  std::string t_text;
  auto* signature = app.add_subcommand("signature", "Signature sigma_A(t) at a rational t in (0, 1)");
  signature->add_option("--knot,--J", knot, "Knot expression or Seifert matrix JSON")->required();
  signature->add_option("--t", t_text, "Rational circle parameter")->required();
  signature->callback([&] {
    action = [&] {
      Rational t = rational_arg(t_text, "t");
      int s = signature_at(knot_arg(knot, "knot"), t, precision);
      return Outcome{Json{{"signature", s}, {"t", rational_to_json(t)}}};
    };
  });

  // jumps
  unsigned long c = 1;
  auto* jumps = app.add_subcommand("jumps", "Jump locations and the jump function delta");
  jumps->add_option("--knot,--J", knot, "Knot expression or Seifert matrix JSON")->required();
  jumps->add_option("--c", c, "Reparametrization factor (ambient period)");
  jumps->callback([&] {
    action = [&] {
      SeifertMatrix a = knot_arg(knot, "knot");
      Json locations = Json::array();
      for (const auto& p : jump_locations(a, precision)) locations.push_back(to_json(p));
      JumpFunction f = jump_function(a, c, precision);
      Json violations = invariant_violations(f);
      return Outcome{Json{{"jump_function", to_json(f)}, {"locations", locations}, {"violations", violations}}};
    };
  });

  // period
  std::vector<std::string> jump_args;
  auto* period = app.add_subcommand("period", "Minimal period of a jump function");
  auto* period_jumps = period->add_option("--jumps", jump_args, "Jump-function JSON (inline or file)");
  auto* period_knot = period->add_option("--knot,--J", knot, "Compute the jump function of this knot");
  period->add_option("--c", c, "Reparametrization factor when --knot is used");
  period_jumps->excludes(period_knot);
  period->callback([&] {
    action = [&] {
      JumpFunction f;
      if (!knot.empty()) {
        f = jump_function(knot_arg(knot, "knot"), c, precision);
      } else if (jump_args.size() == 1) {
        f = jumps_arg(jump_args.front(), "jumps");
      } else {
        throw Error(ErrorCode::Schema, "$: period needs exactly one --jumps or a --knot");
      }
      return Outcome{to_json(minimal_period(f))};
    };
  });

  // sum
  auto* sum = app.add_subcommand("sum", "Pointwise sum of jump functions");
  sum->add_option("--jumps", jump_args, "Jump-function JSON, repeated")->required()->expected(1, -1);
  sum->callback([&] {
    action = [&] {
      JumpFunction total = jumps_arg(jump_args.front(), "jumps[0]");
      for (std::size_t i = 1; i < jump_args.size(); ++i) {
        total = add_jump_functions(total, jumps_arg(jump_args[i], "jumps[" + std::to_string(i) + "]"));
      }
      return Outcome{Json{{"jump_function", to_json(total)}}};
    };
  });

  // scale
  unsigned long q_scale = 1;
  auto* scale = app.add_subcommand("scale", "Precompose a jump function with theta -> theta / q");
  scale->add_option("--jumps", jump_args, "Jump-function JSON")->required()->expected(1);
  scale->add_option("--q", q_scale, "Scale factor")->required();
  scale->callback([&] {
    action = [&] {
      return Outcome{Json{{"jump_function", to_json(scale_jump_function(jumps_arg(jump_args.front(), "jumps"), q_scale))}}};
    };
  });

  // dlens
  long lp = 1, lq = 1;
  std::optional<long> label;
  bool reversed = false;
  auto* dlens = app.add_subcommand("dlens", "Correction terms of the lens space L(p, q)");
  dlens->add_option("--p", lp, "Order of H_1")->required();
  dlens->add_option("--q", lq, "Second lens parameter")->required();
  dlens->add_option("--i", label, "A single label in [0, p)");
  dlens->add_flag("--reversed", reversed, "Opposite orientation");
  dlens->callback([&] {
    action = [&] {
      Json j{{"p", lp}, {"q", lq}, {"reversed", reversed}};
      if (label) {
        j["d"] = rational_to_json(d_lens(lp, lq, *label, reversed));
        j["i"] = *label;
      } else {
        if (lp > 100000) throw Error(ErrorCode::SizeBoundExceeded, "full tables are limited to p <= 100000");
        std::vector<Rational> values;
        for (long i = 0; i < lp; ++i) values.push_back(d_lens(lp, lq, i, reversed));
        j["values"] = table_values(values);
      }
      return Outcome{j};
    };
  });

  // vseq
  auto* vseq = app.add_subcommand("vseq", "V-sequence of an L-space knot from its Alexander polynomial");
  vseq->add_option("--poly", poly, "Alexander polynomial")->required();
  vseq->callback([&] {
    action = [&] {
      AlexanderPolynomial f = alexander_arg(poly, "poly");
      Json t = Json::array();
      for (const auto& x : torsion_coefficients(f)) t.push_back(integer_to_json(x));
      return Outcome{Json{{"V", to_json(v_sequence_lspace(f))["values"]}, {"torsion_coefficients", t}}};
    };
  });

  // dsurgery
  long n_surg = 1;
  std::string v_text;
  auto* dsurgery = app.add_subcommand("dsurgery", "Correction terms of large n-surgery on an L-space knot");
  dsurgery->add_option("--n", n_surg, "Surgery coefficient")->required();
  auto* ds_poly = dsurgery->add_option("--poly", poly, "Alexander polynomial of an L-space knot");
  auto* ds_v = dsurgery->add_option("--V", v_text, "V-sequence as a JSON array");
  dsurgery->add_option("--i", label, "A single label in [0, n)");
  ds_poly->excludes(ds_v);
  dsurgery->callback([&] {
    action = [&] {
      VSequence v = VSequence::zero();
      if (!poly.empty()) {
        v = v_sequence_lspace(alexander_arg(poly, "poly"));
      } else if (!v_text.empty()) {
        v = vsequence_from_json(arg_json(v_text, "V"), "$.V");
      }
      Json j{{"V", v.values()}, {"n", n_surg}};
      if (label) {
        j["i"] = *label;
        j["d"] = rational_to_json(d_large_surgery(n_surg, v, *label));
      } else {
        if (n_surg > 100000) throw Error(ErrorCode::SizeBoundExceeded, "full tables are limited to n <= 100000");
        DTable t = large_surgery_table(n_surg, v);
        j["table"] = to_json(t);
        j["dbar"] = to_json(dbar(t));
      }
      return Outcome{j};
    };
  });

  // dbar
  std::string table_text;
  auto* dbar_cmd = app.add_subcommand("dbar", "d-bar = d(s) - d(0) of a d-table");
  dbar_cmd->add_option("--table", table_text, "DTable JSON")->required();
  dbar_cmd->callback([&] {
    action = [&] { return Outcome{to_json(dbar(dtable_from_json(arg_json(table_text, "table"), "$.table")))}; };
  });

  // metabolizers
  std::string group_text;
  long q_meta = 2;
  std::string dbar_text;
  auto* metabolizers = app.add_subcommand("metabolizers", "Subgroups H of G_q with |H|^2 = |G_q|, optionally tested against d-bar");
  metabolizers->add_option("--group", group_text, "Group JSON or invariant factors such as \"3,3\"")->required();
  metabolizers->add_option("--q", q_meta, "Prime")->required();
  metabolizers->add_option("--dbar", dbar_text, "d-bar table to test for vanishing");
  metabolizers->callback([&] {
    action = [&] {
      FiniteAbelianGroup g = group_arg(group_text);
      SquareRootSearch s = square_root_subgroups(g, q_meta);
      Json candidates = Json::array();
      for (const auto& h : s.candidates) candidates.push_back(to_json(h));
      Json j{{"group", to_json(g)},
             {"q", q_meta},
             {"primary_part", to_json(s.primary.group)},
             {"primary_order", integer_to_json(s.primary_order)},
             {"order_is_square", s.order_is_square},
             {"candidates", candidates}};
      int code = kExitOk;
      if (auto t = dtable_arg(dbar_text)) {
        if (!(t->group == g)) throw Error(ErrorCode::Schema, "$.dbar.group: does not match --group");
        VanishingResult r = dbar_vanishing_obstruction(g, q_meta, t->values);
        j["vanishing"] = to_json(r);
        if (strict && r.outcome == VanishingResult::Outcome::Inconclusive) code = kExitInconclusive;
      }
      return Outcome{j, code};
    };
  });

  // obstruct-top
  long m = 1;
  std::string J = "unknot";
  std::string J0;
  auto* top = app.add_subcommand("obstruct-top", "Topological period/complexity obstruction for L(m, J)");
  top->add_option("--m", m, "Link parameter; q = 2m + 1")->required();
  top->add_option("--J", J, "Knot expression or Seifert matrix JSON");
  top->add_option("--J0,--J0_alexander", J0, "Alexander polynomial of the first component");
  top->add_option("--D", dset, "Polynomial set");
  top->add_option("--d", d, "Covering degree (only 2 is supported)");
  top->callback([&] {
    action = [&] {
      TopologicalReport r = obstruct_topological(link_spec(m, J, J0), d, polyset_arg(dset), precision);
      return Outcome{to_json(r), exit_for(r.verdict, strict)};
    };
  });

  // obstruct-smooth
  auto* smooth = app.add_subcommand("obstruct-smooth", "Smooth d-bar obstruction for L(m, J)");
  smooth->add_option("--m", m, "Link parameter; q = 2m + 1 must be prime")->required();
  smooth->add_option("--J", J, "Knot expression or Seifert matrix JSON");
  smooth->add_option("--J0,--J0_alexander", J0, "Alexander polynomial of the first component");
  smooth->add_option("--D", dset, "Polynomial set");
  smooth->add_option("--dbar", dbar_text, "External d-bar table on H_1(M) = Z_{q^2}");
  smooth->callback([&] {
    action = [&] {
      SmoothReport r = obstruct_smooth(link_spec(m, J, J0), polyset_arg(dset), dtable_arg(dbar_text));
      return Outcome{to_json(r), exit_for(r.verdict, strict)};
    };
  });

  // batch
  std::string jobs_text;
  auto* batch = app.add_subcommand("batch", "Run several commands concurrently; results keep the job order");
  batch->add_option("--jobs", jobs_text, "JSON array of {\"command\": name, \"args\": {...}} or a file")->required();
  batch->callback([&] {
    action = [&] {
      Json jobs = arg_json(jobs_text, "jobs");
      if (!jobs.is_array()) throw Error(ErrorCode::Schema, "$.jobs: expected an array");
      std::vector<std::vector<std::string>> argvs;
      for (std::size_t i = 0; i < jobs.size(); ++i) {
        const std::string p = "$.jobs[" + std::to_string(i) + "]";
        const Json& job = jobs[i];
        if (!job.is_object() || !job.contains("command") || !job["command"].is_string()) {
          throw Error(ErrorCode::Schema, p + ": expected {\"command\": name, \"args\": {...}}");
        }
        const std::string cmd = job["command"].get<std::string>();
        if (cmd == "batch") throw Error(ErrorCode::Schema, p + ".command: batch jobs cannot nest");
        std::vector<std::string> argv{"--precision", std::to_string(precision), cmd};
        if (strict) argv.insert(argv.begin(), "--strict");
        if (auto it = job.find("args"); it != job.end() && !it->is_null()) {
          if (!it->is_object()) throw Error(ErrorCode::Schema, p + ".args: expected an object");
          argv.push_back("--input");
          argv.push_back(it->dump());
        }
        argvs.push_back(std::move(argv));
      }
      std::vector<std::future<std::pair<int, std::string>>> pending;
      for (const auto& argv : argvs) {
        pending.push_back(std::async(std::launch::async, [argv] {
          std::ostringstream o, e;
          int code = run(argv, o, e);
          return std::make_pair(code, code == kExitInvalid ? e.str() : o.str());
        }));
      }
      Json results = Json::array();
      int worst = kExitOk;
      for (std::size_t i = 0; i < pending.size(); ++i) {
        auto [code, text] = pending[i].get();
        Json entry{{"command", jobs[i]["command"]}, {"exit", code}};
        if (code == kExitInvalid) {
          Json parsed = Json::parse(text, nullptr, false);
          entry["error"] = parsed.is_discarded() ? Json(text) : parsed["error"];
        } else {
          entry["result"] = Json::parse(text);
        }
        if (code == kExitInconclusive) worst = kExitInconclusive;
        results.push_back(std::move(entry));
      }
      return Outcome{Json{{"results", results}}, worst};
    };
  });

  auto report_error = [&](const std::string& code, const std::string& message) {
    err << Json{{"error", {{"code", code}, {"message", message}}}}.dump() << '\n';
    return kExitInvalid;
  };

  try {
    std::vector<std::string> args = expand_input(raw_args);
    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    try {
      app.parse(reversed_args);
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return kExitOk;
    } catch (const CLI::ParseError& e) {
      return report_error("usage", e.what());
    }
    if (precision == 0) precision = default_precision();
    if (precision < kMinPrecision) {
      return report_error("invalid-argument", "precision must be at least " + std::to_string(kMinPrecision) + " bits");
    }
    if (!action) return report_error("usage", "no subcommand given");
    Outcome result = action();

    std::ostringstream rendered;
    if (format == "human") {
      render_human(result.payload, rendered, 0, "");
    } else {
      rendered << canonical_dump(result.payload) << '\n';
    }
    if (output.empty()) {
      out << rendered.str();
    } else {
      std::ofstream file(output);
      if (!file) return report_error("invalid-argument", "cannot write " + output);
      file << rendered.str();
    }
    return result.exit;
  } catch (const Error& e) {
    return report_error(std::string(to_string(e.code())), e.what());
  } catch (const Json::exception& e) {
    return report_error("schema", e.what());
  }
}

}  // namespace conclab::cli
