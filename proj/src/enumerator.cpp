#include "erdos/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "erdos/assignment.hpp"
#include "erdos/errors.hpp"
#include "erdos/gram.hpp"

namespace erdos {

namespace {

using Clock = std::chrono::steady_clock;
using Flat = std::vector<Rational>;

Flat flatten(const BistochasticMatrix& a) {
  const auto f = a.matrix().flat();
  return {f.begin(), f.end()};
}

// Immutable tables shared by every worker.
struct SearchContext {
  int n = 0;
  std::size_t max_support = 0;
  std::vector<Permutation> perms;              // S_n by rank
  std::vector<std::vector<long>> indicators;   // flattened permutation matrices
  std::vector<std::uint8_t> agreement;         // n! x n! agreement counts
  std::optional<Clock::time_point> deadline;
  bool set_key_filter = false;

  int agree(std::size_t a, std::size_t b) const { return agreement[a * perms.size() + b]; }
};

// Representative choice: smallest support, then smallest rank list. This
// does not depend on which worker found the class.
struct Found {
  BistochasticMatrix canonical;
  std::vector<std::uint32_t> ranks;
  RationalVector weights;
  Rational common_value;
  Rational frob_sq;
  std::uint64_t sources = 0;
};

bool better_support(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

void merge_into(std::map<Flat, Found>& into, Flat key, Found found) {
  auto it = into.find(key);
  if (it == into.end()) {
    into.emplace(std::move(key), std::move(found));
    return;
  }
  it->second.sources += found.sources;
  if (better_support(found.ranks, it->second.ranks)) {
    it->second.ranks = std::move(found.ranks);
    it->second.weights = std::move(found.weights);
  }
}

struct Task {
  std::vector<std::uint32_t> prefix;  // identity plus one or two more ranks
  bool expand = false;                // search below the prefix as well
};

class Worker {
 public:
  Worker(const SearchContext& ctx, const std::atomic<bool>& stop)
      : ctx_(ctx), stop_(stop), basis_(static_cast<std::size_t>(ctx.n * ctx.n)) {}

  // Returns false if the budget interrupted the task.
  bool run(const Task& task) {
    while (basis_.size() > 0) basis_.pop();
    chosen_.clear();
    for (auto r : task.prefix) {
      if (!basis_.push_if_independent(ctx_.indicators[r])) {
        ++rejected_dependent;
        return true;
      }
      chosen_.push_back(r);
    }
    if (out_of_time()) return false;
    visit();
    if (task.expand) return descend(task.prefix.back() + 1);
    return true;
  }

  std::map<Flat, Found> found;
  std::uint64_t sets_visited = 0;
  std::uint64_t rejected_dependent = 0;
  std::uint64_t rejected_negative = 0;
  std::uint64_t rejected_maxtr = 0;
  std::uint64_t skipped_equivalent = 0;

 private:
  bool out_of_time() const {
    if (stop_.load(std::memory_order_relaxed)) return true;
    return ctx_.deadline && Clock::now() > *ctx_.deadline;
  }

  bool descend(std::size_t from) {
    if (chosen_.size() >= ctx_.max_support) return true;
    for (std::size_t r = from; r < ctx_.perms.size(); ++r) {
      if (out_of_time()) return false;
      if (!basis_.push_if_independent(ctx_.indicators[r])) {
        ++rejected_dependent;
        continue;
      }
      chosen_.push_back(static_cast<std::uint32_t>(r));
      visit();
      const bool finished = descend(r + 1);
      chosen_.pop_back();
      basis_.pop();
      if (!finished) return false;
    }
    return true;
  }

  void visit() {
    ++sets_visited;
    GramSystem g;
    const std::size_t m = chosen_.size();
    g.perms.reserve(m);
    for (auto r : chosen_) g.perms.push_back(ctx_.perms[r]);
    if (ctx_.set_key_filter) {
      if (!seen_keys_.insert(set_canonical_key(g.perms)).second) {
        ++skipped_equivalent;
        return;
      }
    }
    g.gram = IntMatrix(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) g.gram(i, j) = ctx_.agree(chosen_[i], chosen_[j]);
    g.independence = Independence::linear;  // maintained by basis_

    auto outcome = pipeline(g);
    if (!outcome.accepted()) {
      if (*outcome.rejection == Rejection::negative_weight) ++rejected_negative;
      if (*outcome.rejection == Rejection::maxtr_exceeded) ++rejected_maxtr;
      if (*outcome.rejection == Rejection::dependent) ++rejected_dependent;
      return;
    }
    Found f{canonical_form(*outcome.matrix), {}, {}, outcome.solution->common_value, outcome.verdict->frob_sq, 1};
    for (std::size_t k = 0; k < m; ++k) {
      if (outcome.solution->x[k].is_zero()) continue;
      f.ranks.push_back(chosen_[k]);
      f.weights.push_back(outcome.solution->x[k]);
    }
    Flat key = flatten(f.canonical);
    merge_into(found, std::move(key), std::move(f));
  }

  const SearchContext& ctx_;
  const std::atomic<bool>& stop_;
  IncrementalBasis basis_;
  std::vector<std::uint32_t> chosen_;
  std::set<SetKey> seen_keys_;
};

}  // namespace

BistochasticMatrix canonical_form(const BistochasticMatrix& a) {
  const std::size_t n = a.n();
  if (n > static_cast<std::size_t>(kMaxCanonicalN)) {
    throw RangeError("canonical_form is capped at n = " + std::to_string(kMaxCanonicalN));
  }
  std::vector<std::size_t> rows(n), best_rows, best_cols;
  std::iota(rows.begin(), rows.end(), 0);
  std::vector<std::size_t> cols(n);
  // For a fixed row order the least column order sorts the columns
  // lexicographically as vectors; minimise that over all row orders.
  do {
    std::iota(cols.begin(), cols.end(), 0);
    std::stable_sort(cols.begin(), cols.end(), [&](std::size_t c1, std::size_t c2) {
      for (std::size_t k = 0; k < n; ++k) {
        const auto cmp = a(rows[k], c1) <=> a(rows[k], c2);
        if (cmp != 0) return cmp < 0;
      }
      return false;
    });
    bool better = best_rows.empty();
    if (!better) {
      for (std::size_t i = 0; i < n && !better; ++i) {
        bool decided = false;
        for (std::size_t j = 0; j < n; ++j) {
          const auto cmp = a(rows[i], cols[j]) <=> a(best_rows[i], best_cols[j]);
          if (cmp != 0) {
            better = cmp < 0;
            decided = true;
            break;
          }
        }
        if (decided) break;
      }
    }
    if (better) {
      best_rows = rows;
      best_cols = cols;
    }
  } while (std::next_permutation(rows.begin(), rows.end()));

  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(best_rows[i], best_cols[j]);
  return BistochasticMatrix::from(std::move(out));
}

SetKey set_canonical_key(std::span<const Permutation> perms) {
  if (perms.empty()) throw RangeError("set_canonical_key needs a non-empty set");
  const std::size_t n = perms.front().size();
  if (n > static_cast<std::size_t>(kMaxCanonicalN)) {
    throw RangeError("set_canonical_key is capped at n = " + std::to_string(kMaxCanonicalN));
  }
  for (const auto& p : perms)
    if (p.size() != n) throw DimensionError("permutations of mixed sizes");
  if (std::none_of(perms.begin(), perms.end(), [](const Permutation& p) { return p.is_identity(); })) {
    throw RangeError("set_canonical_key requires the identity in the set");
  }
  // x o s o y contains the identity iff y = g^{-1} o x^{-1} for some g in
  // the set, so the images are conjugates by x of the right translate by g^{-1}.
  SetKey best;
  SetKey candidate(perms.size());
  for (const auto& x : enumerate_sn(static_cast<int>(n))) {
    const Permutation x_inv = x.inverse();
    for (const auto& g : perms) {
      const Permutation y = compose(g.inverse(), x_inv);
      for (std::size_t k = 0; k < perms.size(); ++k) {
        candidate[k] = static_cast<std::uint32_t>(lex_rank(compose(x, compose(perms[k], y))));
      }
      std::sort(candidate.begin(), candidate.end());
      if (best.empty() || candidate < best) best = candidate;
    }
  }
  return best;
}

EnumerationReport enumerate_erdos(const EnumerationOptions& options) {
  const int n = options.n;
  if (n < 2 || n > kMaxCanonicalN) throw RangeError("enumeration requires 2 <= n <= " + std::to_string(kMaxCanonicalN));
  const int support_cap = (n - 1) * (n - 1) + 1;
  const int max_support = options.max_support == 0 ? support_cap : options.max_support;
  if (max_support < 1 || max_support > support_cap) {
    throw RangeError("max_support must lie in [1, " + std::to_string(support_cap) + "]");
  }
  if (options.workers < 1) throw RangeError("workers must be at least 1");

  const auto start = Clock::now();
  SearchContext ctx;
  ctx.n = n;
  ctx.max_support = static_cast<std::size_t>(max_support);
  ctx.perms = enumerate_sn(n);
  ctx.set_key_filter = options.set_key_filter;
  if (options.budget) ctx.deadline = start + *options.budget;
  const std::size_t order = ctx.perms.size();
  ctx.indicators.reserve(order);
  for (const auto& p : ctx.perms) ctx.indicators.push_back(perm_indicator(p));
  ctx.agreement.resize(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      ctx.agreement[a * order + b] = static_cast<std::uint8_t>(agreement_count(ctx.perms[a], ctx.perms[b]));

  // The top two levels below the identity become independent tasks.
  std::vector<Task> tasks;
  tasks.push_back({{0}, false});
  if (max_support >= 2) {
    for (std::uint32_t p = 1; p < order; ++p) {
      tasks.push_back({{0, p}, false});
      if (max_support >= 3)
        for (std::uint32_t q = p + 1; q < order; ++q) tasks.push_back({{0, p, q}, true});
    }
  }

  std::atomic<bool> stop{false};
  std::atomic<std::size_t> next{0};
  std::vector<char> finished(tasks.size(), 0);
  const int worker_count = std::max(1, std::min<int>(options.workers, static_cast<int>(tasks.size())));
  std::vector<Worker> workers;
  workers.reserve(static_cast<std::size_t>(worker_count));
  for (int w = 0; w < worker_count; ++w) workers.emplace_back(ctx, stop);

  auto work = [&](Worker& worker) {
    while (true) {
      const std::size_t t = next.fetch_add(1);
      if (t >= tasks.size()) return;
      if (stop.load()) return;
      if (worker.run(tasks[t])) {
        finished[t] = 1;
      } else {
        stop.store(true);
        return;
      }
    }
  };
  if (worker_count == 1) {
    work(workers.front());
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(worker_count));
    for (auto& w : workers) threads.emplace_back(work, std::ref(w));
    for (auto& t : threads) t.join();
  }

  EnumerationReport report;
  report.n = n;
  report.max_support = max_support;
  report.workers = worker_count;
  std::map<Flat, Found> merged;
  for (auto& w : workers) {
    report.sets_visited += w.sets_visited;
    report.rejected_dependent += w.rejected_dependent;
    report.rejected_negative += w.rejected_negative;
    report.rejected_maxtr += w.rejected_maxtr;
    report.skipped_equivalent += w.skipped_equivalent;
    for (auto& [key, f] : w.found) merge_into(merged, key, std::move(f));
  }
  report.complete = true;
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    if (finished[t]) continue;
    report.complete = false;
    std::vector<Permutation> root;
    for (auto r : tasks[t].prefix) root.push_back(ctx.perms[r]);
    report.frontier.push_back(std::move(root));
  }

  for (auto& [key, f] : merged) {
    const auto verdict = is_erdos(f.canonical);
    if (!verdict.erdos || verdict.frob_sq != f.frob_sq || verdict.certificate.value != f.common_value) {
      throw InternalError("canonical representative failed re-verification");
    }
    ErdosClass c{f.canonical, {}, std::move(f.weights), f.common_value, f.frob_sq, f.sources};
    for (auto r : f.ranks) c.support.push_back(ctx.perms[r]);
    report.classes.push_back(std::move(c));
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return report;
}

}  // namespace erdos
