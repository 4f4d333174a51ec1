#include "shiftspace/shiftspace.h"

#include <cstring>
#include <fstream>
#include <sstream>

#include "report.hpp"

using namespace shiftspace;

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
shs_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return SHS_OK;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return SHS_ERR_DOMAIN;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return SHS_ERR_DOMAIN;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SHS_ERR_DOMAIN;
  }
}

shs_status usage_error(const char* message) {
  g_last_error = message;
  return SHS_ERR_USAGE;
}

std::string read_file(const char* path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::domain_error(std::string("cannot read file: ") + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Alphabet alphabet_for_lines(const std::vector<std::string>& lines) {
  // Union of the symbols of literal lines; tagged generator streams are
  // binary, so their presence contributes {0, 1}.
  std::vector<std::string> fragments;
  for (const std::string& l : lines) {
    if (l.rfind("sturmian:", 0) == 0 || l.rfind("wk:", 0) == 0) {
      fragments.push_back("01");
    } else if (l.rfind("ep:", 0) == 0) {
      fragments.push_back(l.substr(3));
    } else {
      fragments.push_back(l);
    }
  }
  return union_alphabet(fragments);
}

std::vector<std::string> clean_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    while (!line.empty() &&
           (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
      line.pop_back();
    const std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    lines.push_back(line.substr(start));
  }
  return lines;
}

FiniteCompactSet set_from_lines(const std::vector<std::string>& lines,
                                const Alphabet& alphabet) {
  if (lines.empty()) throw std::domain_error("set has no elements");
  std::vector<SymbolStream> elements;
  for (const std::string& l : lines) elements.push_back(parse_stream_spec(l, &alphabet));
  return FiniteCompactSet(std::move(elements));
}

}  // namespace

struct shs_matrix {
  TransitionMatrix m;
};

struct shs_set {
  std::vector<std::string> lines;
};

extern "C" {

const char* shs_version(void) { return "1.0.0"; }

const char* shs_last_error(void) { return g_last_error.c_str(); }

void shs_string_free(char* s) { std::free(s); }

shs_status shs_matrix_parse(const char* text, shs_matrix** out) {
  if (!text || !out) return usage_error("matrix_parse: null argument");
  return guarded([&] { *out = new shs_matrix{TransitionMatrix::parse(text)}; });
}

shs_status shs_matrix_read_file(const char* path, shs_matrix** out) {
  if (!path || !out) return usage_error("matrix_read_file: null argument");
  return guarded([&] { *out = new shs_matrix{TransitionMatrix::parse(read_file(path))}; });
}

void shs_matrix_free(shs_matrix* m) { delete m; }

size_t shs_matrix_dim(const shs_matrix* m) { return m ? m->m.dim() : 0; }

shs_status shs_matrix_format(const shs_matrix* m, char** text_out) {
  if (!m || !text_out) return usage_error("matrix_format: null argument");
  return guarded([&] { *text_out = dup_string(m->m.format()); });
}

shs_status shs_matrix_kron_power(const shs_matrix* m, int k, shs_matrix** out) {
  if (!m || !out) return usage_error("matrix_kron_power: null argument");
  if (k < 1) return usage_error("matrix_kron_power: k must be >= 1");
  return guarded([&] {
    *out = new shs_matrix{kron_power(m->m, static_cast<std::size_t>(k))};
  });
}

shs_status shs_classify_json(const shs_matrix* m, char** json_out) {
  if (!m || !json_out) return usage_error("classify: null argument");
  return guarded([&] {
    *json_out = dup_string(dump_report(classification_report(classify_sft(m->m))));
  });
}

shs_status shs_dist_json(const char* lit_a, const char* lit_b, char** json_out) {
  if (!lit_a || !lit_b || !json_out) return usage_error("dist: null argument");
  return guarded([&] {
    const Alphabet alphabet = union_alphabet({lit_a, lit_b});
    const EventuallyPeriodicWord x = parse_word_literal(alphabet, lit_a);
    const EventuallyPeriodicWord y = parse_word_literal(alphabet, lit_b);
    *json_out = dup_string(dump_report(dist_report(lit_a, lit_b, d1_exact(x, y))));
  });
}

shs_status shs_set_parse(const char* text, shs_set** out) {
  if (!text || !out) return usage_error("set_parse: null argument");
  return guarded([&] {
    auto lines = clean_lines(text);
    set_from_lines(lines, alphabet_for_lines(lines));  // validate now
    *out = new shs_set{std::move(lines)};
  });
}

shs_status shs_set_read_file(const char* path, shs_set** out) {
  if (!path || !out) return usage_error("set_read_file: null argument");
  shs_status st = SHS_OK;
  std::string text;
  st = guarded([&] { text = read_file(path); });
  if (st != SHS_OK) return st;
  return shs_set_parse(text.c_str(), out);
}

void shs_set_free(shs_set* s) { delete s; }

shs_status shs_set_format(const shs_set* s, char** text_out) {
  if (!s || !text_out) return usage_error("set_format: null argument");
  return guarded([&] {
    const FiniteCompactSet set = set_from_lines(s->lines, alphabet_for_lines(s->lines));
    *text_out = dup_string(set.format());
  });
}

shs_status shs_hausdorff_json(const shs_set* a, const shs_set* b, long depth,
                              char** json_out) {
  if (!a || !b || !json_out) return usage_error("hausdorff: null argument");
  if (depth < 1) return usage_error("hausdorff: depth must be >= 1");
  return guarded([&] {
    // Both sets live in one union alphabet so exact distances are defined.
    std::vector<std::string> all = a->lines;
    all.insert(all.end(), b->lines.begin(), b->lines.end());
    const Alphabet alphabet = alphabet_for_lines(all);
    const FiniteCompactSet sa = set_from_lines(a->lines, alphabet);
    const FiniteCompactSet sb = set_from_lines(b->lines, alphabet);
    *json_out = dup_string(
        dump_report(hausdorff_report(sa, sb, static_cast<std::size_t>(depth))));
  });
}

shs_status shs_sens_json(const char* system_spec, const char* cylinder, int delta_exp,
                         long horizon, char** json_out) {
  if (!system_spec || !cylinder || !json_out) return usage_error("sens: null argument");
  if (delta_exp < 1) return usage_error("sens: delta exponent must be >= 1");
  if (horizon < 1) return usage_error("sens: horizon must be >= 1");
  return guarded([&] {
    const std::string spec(system_spec);
    const std::size_t T = static_cast<std::size_t>(horizon);
    const std::size_t K = static_cast<std::size_t>(delta_exp);
    SensitivityTimeSet ts;
    if (spec.rfind("sft:", 0) == 0) {
      const TransitionMatrix m = TransitionMatrix::parse(read_file(spec.substr(4).c_str()));
      const TrimResult trimmed = trim_essential(m);
      const Alphabet alphabet = Alphabet::first_n(std::max<std::size_t>(1, trimmed.matrix.dim()));
      ts = sensitivity_times(trimmed.matrix, alphabet.scan(cylinder), K, T);
    } else {
      const SymbolStream s = parse_stream_spec(spec);
      ts = sensitivity_times(StreamLanguage{s, 10 * T}, s.alphabet().scan(cylinder), K, T);
    }
    *json_out = dup_string(dump_report(sens_report(spec, cylinder, ts)));
  });
}

shs_status shs_witness_json(const char* kind, const char* config_json, char** json_out) {
  if (!kind || !config_json || !json_out) return usage_error("witness: null argument");
  return guarded([&] {
    const std::string k(kind);
    const Json cfg = Json::parse(config_json);
    Json report;

    auto set_from_cfg = [&](const char* field, const Alphabet* alphabet) {
      if (!cfg.contains(field))
        throw std::domain_error(std::string("witness config needs \"") + field + "\"");
      const auto lines = clean_lines(cfg.at(field).get<std::string>());
      return set_from_lines(lines, alphabet ? *alphabet
                                            : alphabet_for_lines(lines));
    };
    auto explicit_alphabet = [&]() -> std::optional<Alphabet> {
      if (cfg.contains("alphabet")) return Alphabet(cfg.at("alphabet").get<std::string>());
      return std::nullopt;
    };

    if (k == "periodize" || k == "leo") {
      if (!cfg.contains("prefixes")) throw std::domain_error("witness config needs \"prefixes\"");
      std::vector<std::string> raw = cfg.at("prefixes").get<std::vector<std::string>>();
      std::optional<Alphabet> alpha = explicit_alphabet();
      if (!alpha) {
        std::vector<std::string> frags = raw;
        if (k == "leo" && cfg.contains("k_set")) {
          for (const auto& l : clean_lines(cfg.at("k_set").get<std::string>()))
            frags.push_back(l);
        }
        alpha = alphabet_for_lines(frags);
      }
      std::vector<Word> prefixes;
      for (const std::string& p : raw) prefixes.push_back(alpha->scan(p));
      if (k == "periodize") {
        report = periodize_report(periodize_set(*alpha, prefixes));
      } else {
        const FiniteCompactSet k_set = set_from_cfg("k_set", &*alpha);
        report = leo_report(leo_witness(prefixes, k_set), k_set);
      }
    } else if (k == "full-sens") {
      std::optional<Alphabet> alpha = explicit_alphabet();
      const FiniteCompactSet a = set_from_cfg("set", alpha ? &*alpha : nullptr);
      const std::size_t n = cfg.at("depth").get<std::size_t>();
      report = full_sens_report(full_shift_sensitivity_witness(a, n), a, n);
    } else if (k == "liyorke") {
      const SymbolStream x = parse_stream_spec(cfg.at("stream").get<std::string>());
      const std::size_t n0 = cfg.at("n0").get<std::size_t>();
      const SymbolStream y = liyorke_witness(x, n0);
      const std::size_t T = cfg.value("horizon", std::size_t{70});
      const std::size_t K = cfg.value("delta_exp", std::size_t{5});
      const LiYorkeScan scan = liyorke_scan(x, y, T, K, Rational(1, 2));
      report = liyorke_witness_report(x, y, n0, scan);
    } else if (k == "sft-sens" || k == "dense-periodic") {
      const TransitionMatrix m = TransitionMatrix::parse(cfg.at("matrix").get<std::string>());
      const Alphabet alphabet = Alphabet::first_n(m.dim());
      const FiniteCompactSet a = set_from_cfg("set", &alphabet);
      const std::size_t n = cfg.at("depth").get<std::size_t>();
      if (k == "sft-sens")
        report = sft_sens_report(sft_sensitivity_witness(m, alphabet, a, n), a);
      else
        report = dense_periodic_report(dense_periodic_hyper(m, alphabet, a, n), n);
    } else if (k == "example2-hyper") {
      const std::vector<std::size_t> offsets =
          cfg.at("offsets").get<std::vector<std::size_t>>();
      const std::size_t depth = cfg.at("depth").get<std::size_t>();
      const std::size_t T = cfg.value("horizon", std::size_t{5000});
      report = example2_report(example2_hyper_witness(offsets, depth, T), offsets, depth, T);
    } else {
      throw std::domain_error("unknown witness kind: " + k);
    }
    *json_out = dup_string(dump_report(report));
  });
}

shs_status shs_expansivity_json(int n, char** json_out) {
  if (!json_out) return usage_error("expansivity: null argument");
  if (n < 1) return usage_error("expansivity: n must be >= 1");
  return guarded([&] {
    *json_out = dup_string(dump_report(expansivity_report(static_cast<std::size_t>(n), 64)));
  });
}

shs_status shs_probe_hyper_json(const shs_matrix* m, const char* src_csv,
                                const char* dst_csv, long horizon, char** json_out) {
  if (!m || !src_csv || !dst_csv || !json_out) return usage_error("probe: null argument");
  if (horizon < 1) return usage_error("probe: horizon must be >= 1");
  return guarded([&] {
    const TrimResult trimmed = trim_essential(m->m);
    if (trimmed.matrix.dim() == 0) throw std::domain_error("probe: empty subshift");
    const Alphabet alphabet = Alphabet::first_n(trimmed.matrix.dim());
    auto parse_csv = [&](const char* csv) {
      std::vector<Word> words;
      std::string cur;
      for (const char* p = csv;; ++p) {
        if (*p == ',' || *p == '\0') {
          if (!cur.empty()) words.push_back(alphabet.scan(cur));
          cur.clear();
          if (*p == '\0') break;
        } else {
          cur.push_back(*p);
        }
      }
      return words;
    };
    const auto hit = hyper_orbit_probe(trimmed.matrix, alphabet, parse_csv(src_csv),
                                       parse_csv(dst_csv), static_cast<std::size_t>(horizon));
    *json_out = dup_string(dump_report(probe_report(src_csv, dst_csv,
                                                    static_cast<std::size_t>(horizon), hit)));
  });
}

}  // extern "C"
