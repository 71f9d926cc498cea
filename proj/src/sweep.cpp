#include "isodual/sweep.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <sstream>
#include <thread>

#include "isodual/error.hpp"

namespace isodual {

SweepReport run_sweep(const SweepConfig& config) {
  if (config.min_n < 1 || config.max_n < config.min_n)
    throw Error("sweep needs 1 <= min_n <= max_n");
  if (config.workers < 1) throw Error("sweep needs at least one worker");

  auto start = std::chrono::steady_clock::now();

  std::vector<Poset> universe;
  for (int n = config.min_n; n <= config.max_n; ++n)
    for (const Poset& p : generate_posets(n, config.max_n)) universe.push_back(p);

  std::size_t total = universe.size() * universe.size();
  std::vector<PairReport> reports;
  reports.reserve(total);
  for (std::size_t i = 0; i < total; ++i)
    reports.push_back(PairReport{universe[i / universe.size()],
                                 universe[i % universe.size()],
                                 DualityVerdict{}, false, false, false});

  std::atomic<std::size_t> cursor{0};
  std::atomic<bool> failed{false};
  std::string first_error;
  std::mutex error_lock;
  auto work = [&] {
    for (;;) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= total || failed.load()) return;
      try {
        reports[i] = verify_pair(reports[i].p, reports[i].q, config.hom_cap,
                                 config.cover_cap);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> hold(error_lock);
        if (!failed.exchange(true)) first_error = e.what();
        return;
      }
    }
  };

  int workers = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(config.workers), std::max<std::size_t>(total, 1)));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (failed.load()) throw Error("sweep aborted: " + first_error);

  SweepReport report;
  report.pairs_checked = total;
  report.reports = std::move(reports);
  for (const PairReport& r : report.reports) {
    if (r.agree)
      ++report.agreements;
    else
      report.disagreements.push_back(r);
    ++report.clause_tallies[to_string(r.verdict.clause)];
    if (r.verdict.witness) {
      ++report.witnesses_emitted;
      if (r.witness_verified) ++report.witnesses_verified;
    }
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Json to_json(const SweepReport& report) {
  Json j;
  j["pairs_checked"] = report.pairs_checked;
  j["agreements"] = report.agreements;
  Json bad = Json::array();
  for (const PairReport& r : report.disagreements) bad.push_back(to_json(r));
  j["disagreements"] = std::move(bad);
  j["clause_tallies"] = report.clause_tallies;
  j["wall_seconds"] = report.wall_seconds;
  return j;
}

namespace {

std::string covers_field(const Poset& p) {
  std::ostringstream out;
  bool first = true;
  for (auto [a, b] : p.covers()) {
    if (!first) out << ' ';
    out << a << '<' << b;
    first = false;
  }
  return out.str();
}

}  // namespace

std::string to_csv(const SweepReport& report) {
  std::ostringstream out;
  out << "p_n,p_covers,q_n,q_covers,predicted,clause,computed,agree,witness,witness_verified\n";
  for (const PairReport& r : report.reports) {
    out << r.p.size() << ',' << covers_field(r.p) << ',' << r.q.size() << ','
        << covers_field(r.q) << ',' << (r.verdict.holds ? "true" : "false") << ','
        << to_string(r.verdict.clause) << ',' << (r.computed ? "true" : "false") << ','
        << (r.agree ? "true" : "false") << ',';
    if (r.verdict.witness)
      out << (r.verdict.witness->kind == WitnessKind::kHighPrime ? "high-prime"
                                                                 : "disconnected-monomial");
    out << ',' << (r.witness_verified ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace isodual
