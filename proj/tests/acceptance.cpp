// Acceptance suite: one PASS/FAIL line per criterion.
//
// Usage: acceptance [path-to-rslink-cli [scratch-dir]]
// Without a CLI path the byte-level CLI determinism check is skipped and only
// the library-level half of criterion 9 runs.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "helpers.hpp"
#include "oracles.hpp"
#include "rslink/equiv.hpp"
#include "rslink/gs.hpp"
#include "rslink/mgs.hpp"
#include "rslink/montecarlo.hpp"
#include "rslink/virs.hpp"
#include "rslink/wb.hpp"

using namespace rslink;

namespace {

// Collects failure messages for one criterion.
class Checker {
 public:
  void expect(bool cond, const std::string& what) {
    ++checks_;
    if (!cond && failures_.size() < 5) failures_.push_back(what);
    if (!cond) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::size_t checks() const { return checks_; }
  std::string summary() const {
    std::string s = std::to_string(failed_) + "/" + std::to_string(checks_) + " checks failed";
    for (const auto& f : failures_) s += "; " + f;
    return s;
  }
  std::string note;

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

std::string cli_path;
std::filesystem::path scratch;

const Word appendix_c() { return fixture::word(fixture::kC, WordRole::codeword); }
const Word appendix_r() { return fixture::word(fixture::kR); }

oracle::Vec appendix_lambda() {
  oracle::Vec l{1};
  for (auto a : fixture::kLocatorShifts) l = oracle::mul(l, {a, 1}, 17);
  return l;
}

std::vector<std::int64_t> sorted_error_locators() {
  std::vector<std::int64_t> v;
  for (int i = 0; i < 7; ++i) v.push_back(oracle::power(fixture::kAlpha, i, fixture::kQ));
  std::sort(v.begin(), v.end());
  return v;
}

// 1. Exact reproduction of the worked example.
void criterion1(Checker& ck) {
  const CodeSpec spec = fixture::code();
  const Field& f = spec.field();
  const Word c = encode(spec, UniPoly(f, fixture::kF));
  ck.expect(c.symbols == fixture::kC, "encode(f) != printed c");
  const Word r = corrupt(c, fixture::word(fixture::kE, WordRole::error));
  ck.expect(r.symbols == fixture::kR, "c + e != printed r");
  ck.expect(power_word(r, 2).symbols == fixture::kR2, "power_word(r, 2) != printed r^<2>");

  const MgsSystem sys = build_Bbar(spec, r, fixture::kS, fixture::kTau);
  const auto bbar_rows = helpers::rows(sys.matrix);
  ck.expect(sys.matrix.rows() == 32 && sys.matrix.cols() == 33, "Bbar is not 32 x 33");

  // The factored form W (y - f)^2 with W = 16 Lambda, expanded independently.
  const oracle::Bi factored = oracle::power_of_linear(oracle::scale(appendix_lambda(), 16, 17),
                                                      helpers::vec(fixture::kF), 2, 17);
  const BiPoly derived = BiPoly::from_stacked(f, fixture::qbar(), fixture::kBlocks);
  ck.expect(helpers::bi(derived) == factored, "D * golden vector != expanded factored form");
  ck.expect(oracle::all_zero(oracle::apply(bbar_rows, helpers::vec(fixture::qbar()), 17)),
            "factored Qbar is not in null(Bbar)");
  ck.expect(oracle::all_zero(oracle::apply(helpers::rows(build_A(spec, r, fixture::kS, fixture::kTau)),
                                           helpers::vec(fixture::kGolden), 17)),
            "golden vector is not in null(A)");

  // Literal comparison against the golden 33-entry vector. Its middle block is
  // W f where Bbar needs -2 W f, so these two cannot hold for any correct Bbar.
  ck.expect(oracle::all_zero(oracle::apply(bbar_rows, helpers::vec(fixture::kGolden), 17)),
            "golden Qbar is not in null(Bbar): its middle block is W f, the Bbar solution "
            "has -2 W f (the golden vector is D^-1 Qbar, the A-side solution)");

  const auto q = mgs_interpolate(spec, r, fixture::kS);
  ck.expect(q.has_value(), "mgs_interpolate found no solution");
  if (!q) return;
  const Residues qv = q->to_stacked(fixture::kBlocks);
  ck.expect(helpers::scalar_multiple(qv, fixture::kGolden, 17),
            "mgs_interpolate output is not a multiple of the golden Qbar (same middle-block mismatch)");
  ck.expect(helpers::scalar_multiple(qv, fixture::qbar(), 17),
            "mgs_interpolate output is not a multiple of the factored form");

  const PowerFactor pf = extract_power_factor(*q, 2, 4);
  ck.expect(static_cast<bool>(pf), std::string("extract_power_factor: ") + to_string(pf.status));
  ck.expect(pf.info == UniPoly(f, fixture::kF), "extracted f != 1+x+x^2+x^3");
  ck.expect(oracle::roots(helpers::vec(pf.locator), 17) == sorted_error_locators(),
            "locator roots != {alpha_1..alpha_7}");
  const oracle::Vec lambda = appendix_lambda();
  const Residues lambda_u(lambda.begin(), lambda.end());
  const auto lc = pf.locator.coeffs();
  ck.expect(helpers::scalar_multiple(Residues(lc.begin(), lc.end()), lambda_u, 17),
            "locator part is not a multiple of (x+2)(x+4)(x+7)(x+8)(x+12)(x+14)(x+16)");
}

// 2. Radius formula.
void criterion2(Checker& ck) {
  ck.expect(virs_radius(16, 4, 2) == 7, "virs_radius(16,4,2) != 7");
  ck.expect(virs_radius(31, 4, 3) == 18, "virs_radius(31,4,3) != 18");
  std::mt19937_64 rng(0xC2);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng() % 200;
    const std::size_t k = 1 + rng() % n;
    ck.expect(virs_radius(n, k, 1) == (n - k) / 2,
              "virs_radius(" + std::to_string(n) + "," + std::to_string(k) + ",1)");
  }
}

// 3. Decoding beyond half the minimum distance.
void criterion3(Checker& ck) {
  const CodeSpec spec = fixture::code();
  const Word c = appendix_c();
  std::size_t successes = 0;
  for (std::uint64_t t = 0; t < 200; ++t) {
    const Word r = corrupt(c, random_error(spec, 7, trial_seed(0xA3, 7, t)));
    const auto v = virs_decode(spec, r, 2);
    const auto m = mgs_decode(spec, r, 2);
    ck.expect(v.success == m.success, "virs/mgs verdicts differ on trial " + std::to_string(t));
    if (v.success && m.success) {
      ck.expect(v.info == m.info && v.locator == m.locator,
                "virs/mgs (f, Lambda) differ on trial " + std::to_string(t));
      ck.expect(v.locator.leading() == 1, "locator not monic");
    }
    for (const auto* d : {&v, &m})
      if (d->success) ck.expect(hamming_distance(d->corrected, r) <= 7, "success farther than 7");
    successes += m.success;
  }
  const auto ex = mgs_decode(spec, appendix_r(), 2);
  ck.expect(ex.success && ex.info == UniPoly(spec.field(), fixture::kF),
            "worked example does not decode");
  ck.expect(successes > 0, "no weight-7 pattern decoded");
  ck.note = "success rate " + std::to_string(successes) + "/200";
}

// 4. Welch-Berlekamp against exhaustive nearest-codeword search on RS(6,2)/GF(7).
void criterion4(Checker& ck) {
  const Field f(7);
  const CodeSpec spec(f, 6, 2);
  const oracle::Vec locs(spec.locators().begin(), spec.locators().end());
  std::vector<std::vector<std::uint32_t>> errors;
  errors.emplace_back(6, 0);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::uint32_t a = 1; a < 7; ++a) {
      std::vector<std::uint32_t> e(6, 0);
      e[i] = a;
      errors.push_back(e);
      for (std::size_t j = i + 1; j < 6; ++j)
        for (std::uint32_t b = 1; b < 7; ++b) {
          e[j] = b;
          errors.push_back(e);
          e[j] = 0;
        }
    }
  std::size_t decodes = 0;
  for (std::uint32_t c0 = 0; c0 < 7; ++c0)
    for (std::uint32_t c1 = 0; c1 < 7; ++c1) {
      const Word c = encode(spec, UniPoly(f, {c0, c1}));
      for (const auto& e : errors) {
        const Word r = corrupt(c, Word{f, e, WordRole::error});
        const auto got = wb_decode(spec, r);
        const auto [dist, best] = oracle::nearest(helpers::vec(r.symbols), locs, 2, 7);
        ++decodes;
        const bool unique = best.size() == 1 && dist <= 2;
        ck.expect(unique, "oracle found no unique nearest codeword");
        ck.expect(got.success, "wb failed within radius");
        if (!got.success || !unique) continue;
        oracle::Vec info = helpers::vec(got.info);
        info.resize(2, 0);
        ck.expect(info == best[0], "wb info differs from nearest codeword");
        ck.expect(helpers::vec(got.corrected.symbols) == helpers::vec(c.symbols),
                  "wb codeword differs from transmitted");
      }
    }
  ck.note = std::to_string(decodes) + " decodes";
}

// 5. Key equations for GS interpolants.
void criterion5(Checker& ck) {
  std::mt19937_64 rng(0xC5);
  auto run = [&](std::uint32_t q, std::size_t n, std::size_t k, std::size_t ell, std::size_t s,
                 int count, bool perturb) {
    std::size_t tau = n;
    while (tau-- > 0)
      if (gs_params_valid({n, k, ell, s, tau}).valid) break;
    const GsParams p{n, k, ell, s, tau};
    const Field f(q);
    const CodeSpec spec(f, n, k);
    for (int i = 0; i < count; ++i) {
      const Word c = encode(spec, helpers::random_poly(rng, f, k));
      const Word r = corrupt(c, helpers::random_error(rng, f, n, rng() % (tau + 1)));
      const BiPoly qq = gs_interpolate(spec, r, p);
      const auto rep = key_equations(qq, spec, r, p);
      ck.expect(rep.holds, "key equations fail for a GS interpolant");
      // Degree bound recomputed from the quotients.
      const long base = static_cast<long>(ell * (n - k)) - static_cast<long>(s * tau);
      for (unsigned b = 0; b < s; ++b) {
        const auto& quo = rep.quotients[b];
        ck.expect(quo.has_value(), "G^(s-b) does not divide");
        if (quo) ck.expect(quo->degree() < base + static_cast<long>(b), "deg B^(b) bound violated");
      }
      if (!perturb) continue;
      const auto lens = gs_block_lengths(p);
      Residues v = qq.to_stacked(lens);
      const std::size_t pos = rng() % v.size();
      v[pos] = f.add(v[pos], 1 + static_cast<std::uint32_t>(rng() % (q - 1)));
      ck.expect(!key_equation_check(BiPoly::from_stacked(f, v, lens), spec, r, p),
                "perturbed interpolant passes");
    }
  };
  run(17, 16, 4, 1, 1, 20, false);
  run(13, 12, 2, 2, 2, 10, false);
  run(11, 10, 2, 2, 2, 10, true);
}

// 6. Structure of successful modified-GS decodes.
void criterion6(Checker& ck) {
  std::mt19937_64 rng(0xC6);
  struct Param {
    std::uint32_t q;
    std::size_t n, k, s;
  };
  const Param params[] = {{17, 16, 4, 2}, {17, 16, 2, 3}, {31, 30, 3, 2}, {31, 24, 2, 3}};
  std::size_t done = 0, attempts = 0;
  while (done < 50 && attempts < 500) {
    const Param& pr = params[attempts++ % 4];
    const Field f(pr.q);
    const CodeSpec spec(f, pr.n, pr.k);
    const std::size_t tau = virs_radius(pr.n, pr.k, pr.s);
    const UniPoly info = helpers::random_poly(rng, f, pr.k);
    const Word c = encode(spec, info);
    const Word e = helpers::random_error(rng, f, pr.n, tau - rng() % 2);
    const Word r = corrupt(c, e);
    const auto d = mgs_decode(spec, r, pr.s);
    if (!d.success) continue;
    ++done;
    const auto q = mgs_interpolate(spec, r, pr.s);
    ck.expect(q.has_value(), "no interpolant for a successful decode");
    if (!q) continue;
    const auto ob = helpers::bi(*q);
    ck.expect(ob == oracle::power_of_linear(helpers::vec(q->component(pr.s)), helpers::vec(d.info),
                                             static_cast<int>(pr.s), pr.q),
              "Qbar != Qbar^(s) (y - f)^s");
    const auto err = helpers::support(e);
    const std::set<std::size_t> bad(err.begin(), err.end());
    for (std::size_t i = 0; i < pr.n; ++i) {
      const unsigned m = multiplicity_at(*q, spec.locator(i), r.symbols[i]);
      const unsigned need = bad.count(i) ? 1 : static_cast<unsigned>(pr.s);
      ck.expect(m >= need, "multiplicity too small at position " + std::to_string(i));
      ck.expect(static_cast<int>(m) == oracle::multiplicity(ob, spec.locator(i), r.symbols[i], pr.q),
                "multiplicity disagrees with the Hasse oracle");
    }
    ck.expect(errorfree_divisibility_check(*q, spec, r, err, pr.s), "error-free divisibility fails");
  }
  ck.expect(done == 50, "only " + std::to_string(done) + " successful decodes");
  ck.note = std::to_string(done) + " decodes from " + std::to_string(attempts) + " attempts";
}

// 7. Solution spaces of A and Bbar coincide.
void criterion7(Checker& ck) {
  auto check_instance = [&](const CodeSpec& spec, const Word& r, std::size_t s, std::size_t tau) {
    const Field& f = spec.field();
    const VirsParams p = VirsParams::make(spec.n(), spec.k(), s, tau);
    const Mat a = build_A(spec, r, s, tau);
    const Mat bbar = build_Bbar(spec, r, s, tau).matrix;
    const ScalingMap d = scaling_map(s, f);
    const auto rep = nullspace_equivalence(a, bbar, d, p.block_lengths());
    ck.expect(rep.equivalent, "null(Bbar) != D null(A)");
    ck.expect(rep.dim_a == rep.dim_bbar, "nullspace dimensions differ");
    ck.expect(rep.row_spaces_equal, "row spaces differ");
    ck.expect(oracle::rank(helpers::rows(a), f.q()) == rep.rank_a, "rank(A) disagrees with oracle");

    // Negative control: perturb Bbar in a column that a solution uses.
    const auto basis = nullspace(a);
    if (basis.empty()) return;
    std::size_t col = 0;
    while (basis[0][col] == 0) ++col;
    Mat bad = bbar;
    bad(0, col) = f.add(bad(0, col), 1);
    const auto neg = nullspace_equivalence(a, bad, d, p.block_lengths());
    ck.expect(!neg.equivalent && neg.counterexample.has_value(), "mutated Bbar still equivalent");
  };

  check_instance(fixture::code(), appendix_r(), 2, 7);
  const auto ex = nullspace_equivalence(build_A(fixture::code(), appendix_r(), 2, 7),
                                        build_Bbar(fixture::code(), appendix_r(), 2, 7).matrix,
                                        scaling_map(2, fixture::field()), fixture::kBlocks);
  ck.expect(ex.dim_a == 1, "worked example nullspace is not one-dimensional");

  std::mt19937_64 rng(0xC7);
  std::size_t done = 0;
  while (done < 50) {
    const std::uint32_t q = std::vector<std::uint32_t>{17, 19, 23, 29, 31}[rng() % 5];
    const std::size_t n = 8 + rng() % (q - 8);
    const std::size_t k = 1 + rng() % 5;
    const std::size_t s = 1 + rng() % 3;
    if (s * (k - 1) + 1 > n) continue;
    const Field f(q);
    const CodeSpec spec(f, n, k);
    const std::size_t radius = virs_radius(n, k, s);
    const std::size_t tau = radius == 0 ? 0 : radius - rng() % 2;
    const Word c = encode(spec, helpers::random_poly(rng, f, k));
    const Word r = corrupt(c, helpers::random_error(rng, f, n, rng() % (n / 2 + 1)));
    check_instance(spec, r, s, tau);
    ++done;
  }
}

// 8. GS with l = s = 1 is the Welch-Berlekamp system.
void criterion8(Checker& ck) {
  std::mt19937_64 rng(0xC8);
  for (int i = 0; i < 20; ++i) {
    const std::uint32_t q = std::vector<std::uint32_t>{11, 13, 17, 19}[rng() % 4];
    const std::size_t n = 4 + rng() % (q - 4);
    const std::size_t k = 1 + rng() % (n - 1);
    const Field f(q);
    const CodeSpec spec(f, n, k);
    const Word r{f, helpers::random_residues(rng, n, q)};
    const WbSystem wb = wb_build(spec, r);
    const Mat gs = gs_build(spec, r, {n, k, 1, 1, wb_radius(n, k)});
    ck.expect(gs == wb.matrix, "GS and WB matrices differ");
    const auto nw = nullspace(wb.matrix), ng = nullspace(gs);
    ck.expect(nw.size() == ng.size(), "nullspace dimensions differ");
    oracle::Rows both, only_w;
    for (const auto& v : nw) {
      both.push_back(helpers::vec(v));
      only_w.push_back(helpers::vec(v));
    }
    for (const auto& v : ng) {
      both.push_back(helpers::vec(v));
      ck.expect(oracle::all_zero(oracle::apply(helpers::rows(wb.matrix), helpers::vec(v), q)),
                "GS solution not in the WB nullspace");
    }
    if (!both.empty()) ck.expect(oracle::rank(both, q) == oracle::rank(only_w, q), "nullspaces differ");
  }
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 9. Seeded Monte-Carlo runs are byte-identical.
void criterion9(Checker& ck) {
  ExperimentConfig cfg;
  cfg.q = 17;
  cfg.alpha = 3;
  cfg.n = 16;
  cfg.k = 4;
  cfg.s = 2;
  cfg.weights = {5, 6, 7, 8};
  cfg.trials = 30;
  cfg.seed = 123456789;
  cfg.methods = {Method::wb, Method::virs, Method::mgs};
  cfg.threads = 1;
  const std::string a = run_montecarlo(cfg);
  const std::string b = run_montecarlo(cfg);
  cfg.threads = 8;
  const std::string c = run_montecarlo(cfg);
  ck.expect(a == b, "library: two runs differ");
  ck.expect(a == c, "library: threads 1 vs 8 differ");

  if (cli_path.empty()) {
    ck.note = "CLI check skipped (no CLI path given)";
    return;
  }
  std::filesystem::create_directories(scratch);
  const auto config = scratch / "mc_config.json";
  std::ofstream(config) << R"({"q": 17, "alpha": 3, "n": 16, "k": 4, "s": 2,
 "weights": [5, 6, 7, 8], "trials": 30, "seed": 123456789,
 "methods": ["wb", "virs", "mgs"]})";
  std::vector<std::string> outputs;
  for (const auto& [name, threads] :
       std::vector<std::pair<std::string, int>>{{"run1", 1}, {"run2", 1}, {"run8", 8}}) {
    const auto out = scratch / (name + ".csv");
    const std::string cmd = "\"" + cli_path + "\" mc --config \"" + config.string() + "\" -o \"" +
                            out.string() + "\" --threads " + std::to_string(threads);
    ck.expect(std::system(cmd.c_str()) == 0, "CLI mc failed: " + cmd);
    outputs.push_back(slurp(out));
  }
  ck.expect(!outputs[0].empty(), "CLI wrote no CSV");
  ck.expect(outputs[0] == outputs[1], "CLI: two runs differ");
  ck.expect(outputs[0] == outputs[2], "CLI: threads 1 vs 8 differ");
  ck.expect(outputs[0] == a, "CLI CSV differs from library CSV");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) cli_path = argv[1];
  scratch = argc > 2 ? std::filesystem::path(argv[2])
                     : std::filesystem::temp_directory_path() / "rslink_acceptance";

  const std::vector<std::pair<std::string, std::function<void(Checker&)>>> criteria = {
      {"appendix golden reproduction", criterion1},
      {"radius formula", criterion2},
      {"beyond-half-distance decoding, virs/mgs agreement", criterion3},
      {"wb equals exhaustive nearest-codeword search on RS(6,2)/GF(7)", criterion4},
      {"GS key equations and degree bound, perturbations rejected", criterion5},
      {"mgs factorization, multiplicities, error-free divisibility", criterion6},
      {"A / Bbar solution-space equivalence", criterion7},
      {"GS (l=s=1) matrix equals WB matrix", criterion8},
      {"Monte-Carlo determinism", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checker ck;
    std::string crash;
    try {
      criteria[i].second(ck);
    } catch (const std::exception& e) {
      crash = e.what();
    }
    const bool pass = crash.empty() && ck.ok() && ck.checks() > 0;
    failed += !pass;
    std::printf("%s criterion %zu: %s", pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str());
    std::printf(" [%zu checks", ck.checks());
    if (!ck.note.empty()) std::printf(", %s", ck.note.c_str());
    std::printf("]");
    if (!crash.empty()) std::printf(" exception: %s", crash.c_str());
    if (!ck.ok()) std::printf(" %s", ck.summary().c_str());
    std::printf("\n");
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
