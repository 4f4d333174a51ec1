// Command-line front end over the shiftspace C API. Every subcommand builds
// one canonical JSON report; --json prints it verbatim, the default human
// mode renders the same document as indented key/value lines.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "shiftspace/shiftspace.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

int fail(shs_status st) {
  std::cerr << "error: " << shs_last_error() << "\n";
  return st == SHS_ERR_USAGE ? kExitUsage : kExitDomain;
}

std::string take_string(char* owned) {
  std::string out(owned ? owned : "");
  shs_string_free(owned);
  return out;
}

void render_human(const json& node, const std::string& prefix, std::ostream& os) {
  if (node.is_object()) {
    for (auto it = node.begin(); it != node.end(); ++it) {
      const std::string path = prefix.empty() ? it.key() : prefix + "." + it.key();
      render_human(it.value(), path, os);
    }
  } else if (node.is_array() && !node.empty() && (node.front().is_object())) {
    for (std::size_t i = 0; i < node.size(); ++i)
      render_human(node[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << prefix << ": " << (node.is_string() ? node.get<std::string>() : node.dump())
       << "\n";
  }
}

int emit(const std::string& json_text, bool as_json) {
  if (as_json) {
    std::cout << json_text;
    return kExitOk;
  }
  render_human(json::parse(json_text), "", std::cout);
  return kExitOk;
}

std::string read_file_or_die(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read file: " << path << "\n";
    std::exit(kExitDomain);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::size_t> parse_size_list(const std::string& csv) {
  std::vector<std::size_t> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(std::stoull(tok));
  }
  return out;
}

std::vector<std::string> parse_string_list(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shift spaces, induced hyperspace maps, and their dynamics"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit the canonical JSON report");

  // classify
  std::string classify_path;
  auto* classify = app.add_subcommand("classify", "dynamics flags of a vertex shift");
  classify->add_option("matrix", classify_path, "transition matrix file")->required();

  // kron
  std::string kron_path, kron_out;
  int kron_k = 2;
  auto* kron = app.add_subcommand("kron", "boolean Kronecker power");
  kron->add_option("matrix", kron_path)->required();
  kron->add_option("-k,--power", kron_k, "tuple length k")->required();
  kron->add_option("-o,--output", kron_out, "write the matrix to a file");

  // dist
  std::string dist_a, dist_b;
  auto* dist = app.add_subcommand("dist", "exact prefix-metric distance");
  dist->add_option("x", dist_a, "literal PRE(PER)")->required();
  dist->add_option("y", dist_b, "literal PRE(PER)")->required();

  // hausdorff
  std::string hd_a, hd_b;
  long hd_depth = 40;
  auto* hausdorff = app.add_subcommand("hausdorff", "Hausdorff distance of two sets");
  hausdorff->add_option("a", hd_a, "set file")->required();
  hausdorff->add_option("b", hd_b, "set file")->required();
  hausdorff->add_option("--depth", hd_depth, "bracket depth for generator elements");

  // sens
  std::string sens_system, sens_cyl;
  int sens_k = 3;
  long sens_t = 5000;
  auto* sens = app.add_subcommand("sens", "separation-time experiment for a cylinder");
  sens->add_option("--system", sens_system, "stream tag or sft:<matrix file>")->required();
  sens->add_option("--cylinder", sens_cyl, "cylinder word (may be empty)");
  sens->add_option("--delta-exp", sens_k, "delta = 2^-K")->required();
  sens->add_option("--horizon", sens_t, "largest time probed")->required();

  // witness
  std::string wit_kind, wit_prefixes, wit_set, wit_matrix, wit_stream, wit_offsets,
      wit_alphabet;
  std::size_t wit_depth = 3, wit_n0 = 2, wit_horizon = 0, wit_delta = 5;
  auto* witness = app.add_subcommand("witness", "constructive witnesses");
  witness->add_option("kind", wit_kind,
                      "periodize|leo|full-sens|liyorke|sft-sens|dense-periodic|example2-hyper")
      ->required();
  witness->add_option("--prefixes", wit_prefixes, "comma-separated words");
  witness->add_option("--set", wit_set, "set file (K for leo, A otherwise)");
  witness->add_option("--matrix", wit_matrix, "transition matrix file");
  witness->add_option("--stream", wit_stream, "stream spec");
  witness->add_option("--offsets", wit_offsets, "comma-separated orbit offsets");
  witness->add_option("--alphabet", wit_alphabet, "explicit alphabet letters");
  witness->add_option("--depth", wit_depth, "construction depth n");
  witness->add_option("--n0", wit_n0, "first flipped power of two");
  witness->add_option("--horizon", wit_horizon, "search/scan horizon");
  witness->add_option("--delta-exp", wit_delta, "delta = 2^-K for the scan");

  // expansivity-counterexample
  int exp_n = 3;
  auto* expans = app.add_subcommand("expansivity-counterexample",
                                    "one-block families S1/S2 and their distance");
  expans->add_option("-n,--n", exp_n, "block-length bound")->required();

  // probe-hyper
  std::string probe_path, probe_src, probe_dst;
  long probe_t = 12;
  auto* probe = app.add_subcommand("probe-hyper", "hyperspace transitivity probe");
  probe->add_option("matrix", probe_path)->required();
  probe->add_option("--src", probe_src, "comma-separated source cylinders")->required();
  probe->add_option("--dst", probe_dst, "comma-separated target cylinders")->required();
  probe->add_option("--horizon", probe_t, "largest iterate probed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  char* out = nullptr;

  if (*classify) {
    shs_matrix* m = nullptr;
    if (shs_status st = shs_matrix_read_file(classify_path.c_str(), &m); st != SHS_OK)
      return fail(st);
    const shs_status st = shs_classify_json(m, &out);
    shs_matrix_free(m);
    if (st != SHS_OK) return fail(st);
    return emit(take_string(out), as_json);
  }

  if (*kron) {
    shs_matrix* m = nullptr;
    if (shs_status st = shs_matrix_read_file(kron_path.c_str(), &m); st != SHS_OK)
      return fail(st);
    shs_matrix* p = nullptr;
    shs_status st = shs_matrix_kron_power(m, kron_k, &p);
    shs_matrix_free(m);
    if (st != SHS_OK) return fail(st);
    st = shs_matrix_format(p, &out);
    shs_matrix_free(p);
    if (st != SHS_OK) return fail(st);
    const std::string text = take_string(out);
    if (kron_out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(kron_out, std::ios::binary);
      if (!f) {
        std::cerr << "error: cannot write file: " << kron_out << "\n";
        return kExitDomain;
      }
      f << text;
    }
    return kExitOk;
  }

  if (*dist) {
    if (shs_status st = shs_dist_json(dist_a.c_str(), dist_b.c_str(), &out); st != SHS_OK)
      return fail(st);
    return emit(take_string(out), as_json);
  }

  if (*hausdorff) {
    shs_set *sa = nullptr, *sb = nullptr;
    if (shs_status st = shs_set_read_file(hd_a.c_str(), &sa); st != SHS_OK) return fail(st);
    if (shs_status st = shs_set_read_file(hd_b.c_str(), &sb); st != SHS_OK) {
      shs_set_free(sa);
      return fail(st);
    }
    const shs_status st = shs_hausdorff_json(sa, sb, hd_depth, &out);
    shs_set_free(sa);
    shs_set_free(sb);
    if (st != SHS_OK) return fail(st);
    return emit(take_string(out), as_json);
  }

  if (*sens) {
    if (shs_status st = shs_sens_json(sens_system.c_str(), sens_cyl.c_str(), sens_k,
                                      sens_t, &out);
        st != SHS_OK)
      return fail(st);
    return emit(take_string(out), as_json);
  }

  if (*witness) {
    json cfg = json::object();
    if (!wit_prefixes.empty()) cfg["prefixes"] = parse_string_list(wit_prefixes);
    if (!wit_set.empty()) {
      if (wit_kind == "leo")
        cfg["k_set"] = read_file_or_die(wit_set);
      else
        cfg["set"] = read_file_or_die(wit_set);
    }
    if (!wit_matrix.empty()) cfg["matrix"] = read_file_or_die(wit_matrix);
    if (!wit_stream.empty()) cfg["stream"] = wit_stream;
    if (!wit_offsets.empty()) cfg["offsets"] = parse_size_list(wit_offsets);
    if (!wit_alphabet.empty()) cfg["alphabet"] = wit_alphabet;
    if (witness->count("--depth")) cfg["depth"] = wit_depth;
    if (witness->count("--n0")) cfg["n0"] = wit_n0;
    if (witness->count("--horizon")) cfg["horizon"] = wit_horizon;
    if (witness->count("--delta-exp")) cfg["delta_exp"] = wit_delta;
    if (shs_status st = shs_witness_json(wit_kind.c_str(), cfg.dump().c_str(), &out);
        st != SHS_OK)
      return fail(st);
    return emit(take_string(out), as_json);
  }

  if (*expans) {
    if (shs_status st = shs_expansivity_json(exp_n, &out); st != SHS_OK) return fail(st);
    return emit(take_string(out), as_json);
  }

  if (*probe) {
    shs_matrix* m = nullptr;
    if (shs_status st = shs_matrix_read_file(probe_path.c_str(), &m); st != SHS_OK)
      return fail(st);
    const shs_status st =
        shs_probe_hyper_json(m, probe_src.c_str(), probe_dst.c_str(), probe_t, &out);
    shs_matrix_free(m);
    if (st != SHS_OK) return fail(st);
    return emit(take_string(out), as_json);
  }

  return kExitUsage;
}
