// Command-line front end over the rslink C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rslink/rslink.h"

namespace {

enum Exit { kOk = 0, kUsage = 1, kDecodeFailure = 2, kEquivFailure = 3 };

// Thrown for anything that should end with exit status 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using FieldPtr = std::unique_ptr<rsl_field, Deleter<rsl_field, rsl_field_free>>;
using CodePtr = std::unique_ptr<rsl_code, Deleter<rsl_code, rsl_code_free>>;
using WordPtr = std::unique_ptr<rsl_word, Deleter<rsl_word, rsl_word_free>>;
using OutcomePtr = std::unique_ptr<rsl_outcome, Deleter<rsl_outcome, rsl_outcome_free>>;
using BiPolyPtr = std::unique_ptr<rsl_bipoly, Deleter<rsl_bipoly, rsl_bipoly_free>>;
using MatrixPtr = std::unique_ptr<rsl_matrix, Deleter<rsl_matrix, rsl_matrix_free>>;
using TextPtr = std::unique_ptr<rsl_text, Deleter<rsl_text, rsl_text_free>>;

void check(rsl_status st) {
  if (st != RSL_OK) throw UsageError(std::string(rsl_status_string(st)) + ": " + rsl_last_error());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::string join(const uint32_t* v, size_t n) {
  std::string s;
  for (size_t i = 0; i < n; ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::string join(const size_t* v, size_t n) {
  std::string s;
  for (size_t i = 0; i < n; ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::string format_word(uint32_t q, const rsl_word* w, const std::string& meta) {
  char* text = nullptr;
  check(rsl_text_format(q, rsl_word_data(w), rsl_word_length(w), meta.empty() ? nullptr : meta.c_str(),
                        &text));
  std::string out(text);
  rsl_string_free(text);
  return out;
}

// A word file together with the code it is meant to be read in.
struct Loaded {
  TextPtr text;
  FieldPtr field;
  CodePtr code;
  WordPtr word;
  size_t k = 0;
  uint32_t alpha = 0;

  std::string meta() const {
    return "n=" + std::to_string(rsl_word_length(word.get())) + " k=" + std::to_string(k) +
           " alpha=" + std::to_string(alpha);
  }
};

size_t meta_number(const rsl_text* t, const char* key) {
  const char* v = rsl_text_meta(t, key);
  if (!v) return 0;
  try {
    return std::stoul(v);
  } catch (const std::exception&) {
    throw UsageError(std::string("malformed metadata ") + key + "=" + v);
  }
}

Loaded load(const std::string& path, std::optional<size_t> k_flag, std::optional<uint32_t> alpha_flag,
            bool need_code = true) {
  Loaded l;
  rsl_text* t = nullptr;
  check(rsl_text_parse(read_file(path).c_str(), &t));
  l.text.reset(t);
  l.alpha = alpha_flag ? *alpha_flag : static_cast<uint32_t>(meta_number(t, "alpha"));
  rsl_field* f = nullptr;
  check(rsl_field_new(rsl_text_q(t), l.alpha, &f));
  l.field.reset(f);
  l.alpha = rsl_field_primitive(f);
  rsl_word* w = nullptr;
  check(rsl_word_new(f, rsl_text_values(t), rsl_text_length(t), &w));
  l.word.reset(w);
  l.k = k_flag ? *k_flag : meta_number(t, "k");
  if (need_code) {
    if (l.k == 0) throw UsageError("code dimension unknown: pass --k or use a file written by 'encode'");
    rsl_code* c = nullptr;
    check(rsl_code_new(f, rsl_text_length(t), l.k, nullptr, &c));
    l.code.reset(c);
  }
  return l;
}

std::vector<uint32_t> parse_coeffs(const std::string& csv) {
  std::vector<uint32_t> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t used = 0;
      const unsigned long v = std::stoul(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(static_cast<uint32_t>(v));
    } catch (const std::exception&) {
      throw UsageError("bad coefficient '" + tok + "'");
    }
  }
  return out;
}

int print_outcome(const rsl_outcome* o) {
  if (!rsl_outcome_success(o)) {
    std::cout << "failure: " << rsl_outcome_failure(o) << "\n";
    return kDecodeFailure;
  }
  size_t len = 0;
  const uint32_t* f = rsl_outcome_info(o, &len);
  std::cout << "f: " << join(f, len) << "\n";
  const uint32_t* lambda = rsl_outcome_locator(o, &len);
  std::cout << "lambda: " << join(lambda, len) << "\n";
  const size_t* pos = rsl_outcome_error_positions(o, &len);
  std::cout << "error_positions: " << join(pos, len) << "\n";
  const uint32_t* c = rsl_outcome_corrected(o, &len);
  std::cout << "corrected: " << join(c, len) << "\n";
  std::cout << "radius: " << rsl_outcome_radius(o) << "\n";
  return kOk;
}

// Largest tau for which the GS system is guaranteed a nonzero solution.
size_t default_gs_tau(size_t n, size_t k, size_t ell, size_t s) {
  for (size_t tau = n; tau-- > 0;) {
    int valid = 0;
    check(rsl_gs_count(n, k, ell, s, tau, &valid, nullptr, nullptr));
    if (valid) return tau;
  }
  throw UsageError("no radius admits a GS solution for these parameters");
}

size_t default_virs_tau(const Loaded& l, size_t s) {
  size_t tau = 0;
  check(rsl_virs_radius(rsl_code_n(l.code.get()), l.k, s, &tau));
  return tau;
}

struct McFile {
  rsl_mc_config cfg{};
  std::vector<size_t> weights;
};

McFile load_mc_config(const std::string& path, std::optional<unsigned> threads) {
  McFile m;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
    m.cfg.q = j.at("q").get<uint32_t>();
    m.cfg.alpha = j.value("alpha", 0u);
    m.cfg.n = j.at("n").get<size_t>();
    m.cfg.k = j.at("k").get<size_t>();
    m.cfg.s = j.value("s", size_t{1});
    m.weights = j.at("weights").get<std::vector<size_t>>();
    m.cfg.trials = j.at("trials").get<size_t>();
    m.cfg.seed = j.value("seed", uint64_t{0});
    m.cfg.threads = j.value("threads", 1u);
    const auto methods = j.value("methods", std::vector<std::string>{"wb", "virs", "mgs"});
    for (const auto& name : methods) {
      if (name == "wb") m.cfg.methods |= RSL_METHOD_BIT(RSL_METHOD_WB);
      else if (name == "virs") m.cfg.methods |= RSL_METHOD_BIT(RSL_METHOD_VIRS);
      else if (name == "mgs") m.cfg.methods |= RSL_METHOD_BIT(RSL_METHOD_MGS);
      else throw UsageError("unknown method '" + name + "' in config");
    }
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("bad config: ") + e.what());
  }
  if (threads) m.cfg.threads = *threads;
  m.cfg.weights = m.weights.data();
  m.cfg.num_weights = m.weights.size();
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reed-Solomon decoding beyond half the minimum distance: Welch-Berlekamp, "
               "virtual interleaving and modified Guruswami-Sudan interpolation"};
  app.require_subcommand(1);

  // encode
  auto* enc = app.add_subcommand("encode", "Encode an information polynomial");
  uint32_t q = 0;
  size_t n = 0, k_enc = 0;
  std::optional<uint32_t> alpha;
  std::string coeffs, out_path;
  enc->add_option("--q", q, "Field size (prime)")->required();
  enc->add_option("--n", n, "Code length")->required();
  enc->add_option("--k", k_enc, "Code dimension")->required();
  enc->add_option("--alpha", alpha, "Primitive element generating the locators");
  enc->add_option("--f", coeffs, "Coefficients c0,c1,... in ascending degree")->required();
  enc->add_option("-o,--out", out_path, "Output file (default stdout)");

  // corrupt
  auto* cor = app.add_subcommand("corrupt", "Add an error word to a codeword");
  std::string in_path, e_path;
  std::optional<size_t> weight;
  uint64_t seed = 0;
  cor->add_option("--in", in_path, "Codeword file")->required();
  auto* e_opt = cor->add_option("--e", e_path, "Error word file");
  auto* w_opt = cor->add_option("--weight", weight, "Random error of this weight");
  cor->add_option("--seed", seed, "Seed for the random error");
  e_opt->excludes(w_opt);
  cor->add_option("-o,--out", out_path, "Output file (default stdout)");

  // decode
  auto* dec = app.add_subcommand("decode", "Decode a received word");
  std::string method = "wb";
  size_t s = 1, ell = 1;
  std::optional<size_t> tau, k_flag;
  dec->add_option("--method", method, "wb, virs, mgs or gs")
      ->check(CLI::IsMember({"wb", "virs", "mgs", "gs"}));
  dec->add_option("--in", in_path, "Received word file")->required();
  dec->add_option("--s", s, "Interleaving order / multiplicity");
  dec->add_option("--ell", ell, "GS list size");
  dec->add_option("--tau", tau, "GS decoding radius");
  dec->add_option("--k", k_flag, "Code dimension (default: from file metadata)");
  dec->add_option("--alpha", alpha, "Primitive element (default: from file metadata)");

  // dump
  auto* dump = app.add_subcommand("dump", "Print one of the linear systems");
  std::string matrix = "A";
  dump->add_option("--matrix", matrix, "A, Bbar, B or wb")
      ->check(CLI::IsMember({"A", "Bbar", "B", "wb"}));
  dump->add_option("--in", in_path, "Received word file")->required();
  dump->add_option("--s", s, "Interleaving order");
  dump->add_option("--tau", tau, "Radius (default: maximal)");
  dump->add_option("--k", k_flag, "Code dimension (default: from file metadata)");
  dump->add_option("--alpha", alpha, "Primitive element (default: from file metadata)");

  // mc
  auto* mc = app.add_subcommand("mc", "Seeded Monte-Carlo decoding experiment");
  std::string config_path;
  std::optional<unsigned> threads;
  mc->add_option("--config", config_path, "JSON experiment config")->required();
  mc->add_option("-o,--out", out_path, "CSV output (default stdout)");
  mc->add_option("--threads", threads, "Worker threads (overrides config)");

  // equiv
  auto* eq = app.add_subcommand("equiv", "Check that A and Bbar have the same solution space");
  eq->add_option("--in", in_path, "Received word file")->required();
  eq->add_option("--s", s, "Interleaving order")->required();
  eq->add_option("--tau", tau, "Radius (default: maximal)");
  eq->add_option("--k", k_flag, "Code dimension (default: from file metadata)");
  eq->add_option("--alpha", alpha, "Primitive element (default: from file metadata)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*enc) {
      rsl_field* f = nullptr;
      check(rsl_field_new(q, alpha.value_or(0), &f));
      FieldPtr field(f);
      rsl_code* c = nullptr;
      check(rsl_code_new(f, n, k_enc, nullptr, &c));
      CodePtr code(c);
      const auto poly = parse_coeffs(coeffs);
      rsl_word* w = nullptr;
      check(rsl_encode(c, poly.data(), poly.size(), &w));
      WordPtr word(w);
      const std::string meta = "n=" + std::to_string(n) + " k=" + std::to_string(k_enc) +
                               " alpha=" + std::to_string(rsl_field_primitive(f));
      write_output(out_path, format_word(q, w, meta));
      return kOk;
    }

    if (*cor) {
      Loaded l = load(in_path, std::nullopt, std::nullopt, false);
      WordPtr err;
      if (!e_path.empty()) {
        Loaded e = load(e_path, std::nullopt, std::nullopt, false);
        if (rsl_text_q(e.text.get()) != rsl_text_q(l.text.get()))
          throw UsageError("error word is over a different field");
        err = std::move(e.word);
        // Rebind to the codeword's field handle.
        rsl_word* w = nullptr;
        check(rsl_word_new(l.field.get(), rsl_word_data(err.get()), rsl_word_length(err.get()), &w));
        err.reset(w);
      } else if (weight) {
        rsl_word* w = nullptr;
        check(rsl_random_error(l.field.get(), rsl_word_length(l.word.get()), *weight, seed, &w));
        err.reset(w);
      } else {
        throw UsageError("corrupt needs --e FILE or --weight W");
      }
      rsl_word* r = nullptr;
      check(rsl_corrupt(l.word.get(), err.get(), &r));
      WordPtr received(r);
      write_output(out_path, format_word(rsl_text_q(l.text.get()), r, l.k ? l.meta() : ""));
      return kOk;
    }

    if (*dec) {
      Loaded l = load(in_path, k_flag, alpha);
      rsl_outcome* o = nullptr;
      if (method == "gs") {
        const size_t nn = rsl_code_n(l.code.get());
        const size_t t = tau ? *tau : default_gs_tau(nn, l.k, ell, s);
        if (ell == 1) {
          check(rsl_decode_gs(l.code.get(), l.word.get(), s, t, &o));
        } else {
          rsl_bipoly* bp = nullptr;
          check(rsl_gs_interpolate(l.code.get(), l.word.get(), ell, s, t, &bp));
          BiPolyPtr poly(bp);
          for (int comp = 0; comp <= rsl_bipoly_ydeg(bp); ++comp) {
            size_t len = 0;
            const uint32_t* c = rsl_bipoly_component(bp, static_cast<size_t>(comp), &len);
            std::cout << "Q" << comp << ": " << join(c, len) << "\n";
          }
          int holds = 0;
          check(rsl_key_equation_check(bp, l.code.get(), l.word.get(), ell, s, t, &holds));
          std::cout << "key_equations: " << (holds ? "hold" : "violated") << "\n";
          return holds ? kOk : kDecodeFailure;
        }
      } else {
        const rsl_method m = method == "wb" ? RSL_METHOD_WB : method == "virs" ? RSL_METHOD_VIRS : RSL_METHOD_MGS;
        check(rsl_decode(l.code.get(), l.word.get(), m, s, &o));
      }
      OutcomePtr outcome(o);
      return print_outcome(o);
    }

    if (*dump) {
      Loaded l = load(in_path, k_flag, alpha);
      rsl_matrix_kind kind = RSL_MATRIX_A;
      if (matrix == "Bbar") kind = RSL_MATRIX_BBAR;
      else if (matrix == "B") kind = RSL_MATRIX_B;
      else if (matrix == "wb") kind = RSL_MATRIX_WB;
      const size_t t = tau ? *tau : (kind == RSL_MATRIX_WB ? 0 : default_virs_tau(l, s));
      rsl_matrix* m = nullptr;
      check(rsl_build_matrix(l.code.get(), l.word.get(), kind, s, t, &m));
      MatrixPtr mat(m);
      const size_t rows = rsl_matrix_rows(m), cols = rsl_matrix_cols(m);
      std::cout << rsl_text_q(l.text.get()) << "\n" << rows << " " << cols << "\n";
      const uint32_t* data = rsl_matrix_data(m);
      for (size_t r = 0; r < rows; ++r) std::cout << join(data + r * cols, cols) << "\n";
      return kOk;
    }

    if (*mc) {
      McFile m = load_mc_config(config_path, threads);
      char* csv = nullptr;
      check(rsl_montecarlo(&m.cfg, &csv));
      const std::string text(csv);
      rsl_string_free(csv);
      write_output(out_path, text);
      return kOk;
    }

    if (*eq) {
      Loaded l = load(in_path, k_flag, alpha);
      const size_t t = tau ? *tau : default_virs_tau(l, s);
      rsl_equiv_result res{};
      check(rsl_equivalence(l.code.get(), l.word.get(), s, t, &res));
      std::cout << "tau: " << t << "\n"
                << "dim_null_A: " << res.dim_a << "\n"
                << "dim_null_Bbar: " << res.dim_bbar << "\n"
                << "rank_A: " << res.rank_a << "\n"
                << "rank_Bbar: " << res.rank_bbar << "\n"
                << "row_spaces_equal: " << (res.row_spaces_equal ? "yes" : "no") << "\n"
                << "equivalent: " << (res.equivalent ? "yes" : "no") << "\n";
      return res.equivalent ? kOk : kEquivFailure;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
