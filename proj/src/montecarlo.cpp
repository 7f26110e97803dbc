#include "rslink/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <sstream>
#include <thread>

#include "rslink/mgs.hpp"
#include "rslink/virs.hpp"
#include "rslink/wb.hpp"

namespace rslink {

const char* to_string(Method m) noexcept {
  switch (m) {
    case Method::wb: return "wb";
    case Method::virs: return "virs";
    case Method::mgs: return "mgs";
  }
  return "unknown";
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t weight, std::size_t trial) noexcept {
  std::uint64_t state = seed;
  std::uint64_t h = splitmix64(state);
  state = h ^ static_cast<std::uint64_t>(weight);
  h = splitmix64(state);
  state = h ^ static_cast<std::uint64_t>(trial);
  return splitmix64(state);
}

void validate(const ExperimentConfig& cfg) {
  const Field f(cfg.q, cfg.alpha);
  const CodeSpec spec(f, cfg.n, cfg.k);
  if (cfg.methods.empty()) throw Error(Errc::invalid_argument, "no decoding method selected");
  if (cfg.weights.empty()) throw Error(Errc::invalid_argument, "no error weights given");
  if (cfg.threads < 1) throw Error(Errc::invalid_argument, "threads must be >= 1");
  for (auto w : cfg.weights)
    if (w > cfg.n)
      throw Error(Errc::invalid_argument, "error weight " + std::to_string(w) + " exceeds n");
  for (auto m : cfg.methods) {
    if (m == Method::wb) continue;
    virs_radius(cfg.n, cfg.k, cfg.s);
    if (m == Method::mgs && cfg.s % cfg.q == 0)
      throw Error(Errc::invalid_argument, "field characteristic divides s");
  }
}

namespace {

struct Decoded {
  TrialResult result;
  DecodeOutcome outcome;
};

TrialRecord run_one(const ExperimentConfig& cfg, const CodeSpec& spec, std::size_t weight,
                    std::size_t trial) {
  const Field& f = spec.field();
  std::uint64_t state = trial_seed(cfg.seed, weight, trial);
  std::vector<std::uint32_t> coeffs(spec.k());
  for (auto& c : coeffs) c = static_cast<std::uint32_t>(splitmix64(state) % f.q());
  const Word c = encode(spec, UniPoly(f, std::move(coeffs)));
  const Word r = corrupt(c, random_error(spec, weight, splitmix64(state)));

  TrialRecord rec;
  rec.weight = weight;
  rec.trial = trial;
  std::optional<DecodeOutcome> virs, mgs;
  for (auto m : cfg.methods) {
    DecodeOutcome out = m == Method::wb     ? wb_decode(spec, r)
                        : m == Method::virs ? virs_decode(spec, r, cfg.s)
                                            : mgs_decode(spec, r, cfg.s);
    TrialResult res = !out.success                ? TrialResult::failure
                      : out.corrected.symbols == c.symbols ? TrialResult::success
                                                           : TrialResult::miscorrection;
    rec.results.push_back(res);
    if (m == Method::virs) virs = std::move(out);
    if (m == Method::mgs) mgs = std::move(out);
  }
  if (virs && mgs) {
    rec.agreement = virs->success == mgs->success &&
                    (!virs->success || (virs->info == mgs->info && virs->locator == mgs->locator));
  }
  if (mgs)
    rec.nullspace_dim = mgs->nullspace_dim;
  else if (virs)
    rec.nullspace_dim = virs->nullspace_dim;
  return rec;
}

}  // namespace

std::vector<TrialRecord> run_trials(const ExperimentConfig& cfg) {
  validate(cfg);
  const CodeSpec spec(Field(cfg.q, cfg.alpha), cfg.n, cfg.k);
  const std::size_t total = cfg.weights.size() * cfg.trials;
  std::vector<TrialRecord> records(total);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t idx; (idx = next.fetch_add(1)) < total;)
      records[idx] = run_one(cfg, spec, cfg.weights[idx / cfg.trials], idx % cfg.trials);
  };
  const unsigned nthreads = static_cast<unsigned>(std::min<std::size_t>(cfg.threads, std::max<std::size_t>(total, 1)));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return records;
}

std::string summarize_csv(const ExperimentConfig& cfg, const std::vector<TrialRecord>& records) {
  std::ostringstream out;
  out << "weight,method,trials,successes,failures,miscorrections,agreement_rate,mean_nullspace_dim\n";
  char buf[64];
  for (std::size_t wi = 0; wi < cfg.weights.size(); ++wi) {
    const auto first = records.begin() + static_cast<std::ptrdiff_t>(wi * cfg.trials);
    const auto last = first + static_cast<std::ptrdiff_t>(cfg.trials);
    std::size_t agree = 0, agree_n = 0, dims = 0, dims_n = 0;
    for (auto it = first; it != last; ++it) {
      if (it->agreement) {
        ++agree_n;
        agree += *it->agreement;
      }
      if (it->nullspace_dim) {
        ++dims_n;
        dims += *it->nullspace_dim;
      }
    }
    std::string agreement = "NA", dim = "NA";
    if (agree_n) {
      std::snprintf(buf, sizeof buf, "%.6f", static_cast<double>(agree) / static_cast<double>(agree_n));
      agreement = buf;
    }
    if (dims_n) {
      std::snprintf(buf, sizeof buf, "%.4f", static_cast<double>(dims) / static_cast<double>(dims_n));
      dim = buf;
    }
    for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi) {
      std::size_t ok = 0, fail = 0, mis = 0;
      for (auto it = first; it != last; ++it) {
        switch (it->results[mi]) {
          case TrialResult::success: ++ok; break;
          case TrialResult::failure: ++fail; break;
          case TrialResult::miscorrection: ++mis; break;
        }
      }
      out << cfg.weights[wi] << ',' << to_string(cfg.methods[mi]) << ',' << cfg.trials << ','
          << ok << ',' << fail << ',' << mis << ',' << agreement << ',' << dim << '\n';
    }
  }
  return out.str();
}

std::string run_montecarlo(const ExperimentConfig& cfg) {
  return summarize_csv(cfg, run_trials(cfg));
}

}  // namespace rslink
