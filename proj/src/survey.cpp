#include "togliatti/survey.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>
#include <unordered_map>

#include "togliatti/errors.hpp"
#include "togliatti/lefschetz.hpp"
#include "togliatti/smoothness.hpp"
#include "togliatti/stability.hpp"

namespace togliatti {

std::string to_string(Filter f) {
  switch (f) {
    case Filter::togliatti: return "togliatti";
    case Filter::minimal: return "minimal";
    case Filter::smooth: return "smooth";
    case Filter::trivial: return "trivial";
    case Filter::nontrivial: return "nontrivial";
  }
  return "unknown";
}

std::vector<Filter> parse_filters(std::string_view text) {
  std::vector<Filter> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto item = text.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) {
      bool found = false;
      for (Filter f : {Filter::togliatti, Filter::minimal, Filter::smooth, Filter::trivial, Filter::nontrivial}) {
        if (item == to_string(f)) {
          out.push_back(f);
          found = true;
        }
      }
      if (!found) {
        throw InputError(InputErrorKind::invalid_argument,
                         "unknown filter '" + std::string(item) +
                             "' (expected togliatti, minimal, smooth, trivial or nontrivial)");
      }
    }
    start = end + 1;
  }
  return out;
}

bool passes_filters(const MonomialIdeal& ideal, const std::vector<Filter>& filters) {
  auto has = [&](Filter f) { return std::find(filters.begin(), filters.end(), f) != filters.end(); };
  if (has(Filter::trivial) || has(Filter::nontrivial)) {
    const bool trivial = is_trivial(ideal).has_value();
    if (has(Filter::trivial) && !trivial) return false;
    if (has(Filter::nontrivial) && trivial) return false;
  }
  if (has(Filter::togliatti) || has(Filter::minimal)) {
    if (togliatti_status(ideal) != TogliattiStatus::togliatti) return false;
  }
  if (has(Filter::minimal) && !is_minimal(ideal).is_minimal) return false;
  if (has(Filter::smooth)) {
    if (inverse_system(ideal).size() == 0) return false;
    if (!is_smooth(ideal).is_smooth) return false;
  }
  return true;
}

std::uint64_t raw_subset_count(int n, int d, int extra) {
  if (extra < 0) return 0;
  try {
    const auto points = binomial(static_cast<std::uint64_t>(n + d), static_cast<std::uint64_t>(n));
    const auto pool = points - static_cast<std::uint64_t>(n + 1);
    if (static_cast<std::uint64_t>(extra) > pool) return 0;
    return binomial(pool, static_cast<std::uint64_t>(extra));
  } catch (const std::overflow_error&) {
    return std::numeric_limits<std::uint64_t>::max();
  }
}

std::vector<Monomial> non_vertex_points(int n, int d) {
  std::vector<Monomial> out;
  for (auto& p : simplex_points_list(n, d)) {
    if (!p.is_pure_power()) out.push_back(std::move(p));
  }
  return out;
}

unsigned default_threads() { return std::max(1u, std::min(8u, std::thread::hardware_concurrency())); }

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
  threads = std::max(1u, threads);
  if (threads == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  const unsigned used = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  for (unsigned t = 0; t < used; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

namespace {

using IndexVector = std::vector<std::uint16_t>;

class OrbitSearch {
 public:
  OrbitSearch(int n, int d, int extra, bool prune) : n_(n), d_(d), extra_(extra), prune_(prune) {
    points_ = non_vertex_points(n, d);
    std::unordered_map<Monomial, std::uint16_t, MonomialHash> index;
    for (std::size_t i = 0; i < points_.size(); ++i) index.emplace(points_[i], static_cast<std::uint16_t>(i));
    const auto perms = all_permutations(static_cast<std::size_t>(n) + 1);
    for (std::size_t k = 1; k < perms.size(); ++k) {  // skip the identity
      std::vector<std::uint16_t> table(points_.size());
      for (std::size_t i = 0; i < points_.size(); ++i) table[i] = index.at(points_[i].permuted(perms[k]));
      tables_.push_back(std::move(table));
    }
  }

  std::size_t pool_size() const { return points_.size(); }

  // Canonical prefixes of length min(depth, extra), in lexicographic order.
  std::vector<IndexVector> seeds(int depth) const {
    std::vector<IndexVector> out;
    IndexVector cur;
    collect(cur, 0, std::min(depth, extra_), [&](const IndexVector& v) { out.push_back(v); });
    return out;
  }

  template <class Sink>
  void complete(IndexVector prefix, Sink&& sink) const {
    const int start = prefix.empty() ? 0 : prefix.back() + 1;
    collect(prefix, start, extra_, sink);
  }

  MonomialIdeal ideal_of(const IndexVector& v) const {
    const std::size_t nv = static_cast<std::size_t>(n_) + 1;
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < nv; ++i) gens.push_back(Monomial::pure_power(nv, i, d_));
    for (auto i : v) gens.push_back(points_[i]);
    std::sort(gens.begin(), gens.end(), std::greater<>());
    return make_ideal(n_, d_, std::move(gens));
  }

 private:
  bool is_minimal_prefix(const IndexVector& v) const {
    IndexVector img(v.size());
    for (const auto& t : tables_) {
      for (std::size_t i = 0; i < v.size(); ++i) img[i] = t[v[i]];
      std::sort(img.begin(), img.end());
      if (img < v) return false;
    }
    return true;
  }

  template <class Sink>
  void collect(IndexVector& cur, int start, int target, Sink&& sink) const {
    if (static_cast<int>(cur.size()) == target) {
      sink(cur);
      return;
    }
    const int remaining = extra_ - static_cast<int>(cur.size());
    const int last = static_cast<int>(points_.size()) - remaining;
    for (int i = start; i <= last; ++i) {
      cur.push_back(static_cast<std::uint16_t>(i));
      if (!prune_ || is_minimal_prefix(cur)) collect(cur, i + 1, target, sink);
      cur.pop_back();
    }
  }

  int n_, d_, extra_;
  bool prune_;
  std::vector<Monomial> points_;
  std::vector<std::vector<std::uint16_t>> tables_;
};

}  // namespace

std::vector<MonomialIdeal> enumerate(int n, int d, int extra, const EnumerationOptions& options) {
  if (n < 1 || d < 2) throw InputError(InputErrorKind::invalid_argument, "need n >= 1 and d >= 2");
  if (extra < 0) throw InputError(InputErrorKind::invalid_argument, "mu must be at least n+1");
  const auto needed = raw_subset_count(n, d, extra);
  if (needed > options.budget) throw BudgetError(needed, options.budget);
  OrbitSearch search(n, d, extra, options.up_to_symmetry);
  if (static_cast<std::size_t>(extra) > search.pool_size()) return {};

  const auto seeds = search.seeds(2);
  std::vector<std::vector<MonomialIdeal>> parts(seeds.size());
  parallel_for(seeds.size(), options.threads, [&](std::size_t k) {
    search.complete(seeds[k], [&](const IndexVector& v) {
      auto ideal = search.ideal_of(v);
      if (options.filters.empty() || passes_filters(ideal, options.filters)) parts[k].push_back(std::move(ideal));
    });
  });
  std::vector<MonomialIdeal> out;
  for (auto& p : parts) {
    for (auto& I : p) out.push_back(std::move(I));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<const OrbitRecord*> Census::minimal() const {
  std::vector<const OrbitRecord*> out;
  for (const auto& o : orbits) {
    if (o.minimal) out.push_back(&o);
  }
  return out;
}

std::vector<const OrbitRecord*> Census::minimal_smooth() const {
  std::vector<const OrbitRecord*> out;
  for (const auto& o : orbits) {
    if (o.minimal && o.smooth) out.push_back(&o);
  }
  return out;
}

namespace {

OrbitRecord classify(const MonomialIdeal& ideal, OracleTally& tally) {
  OrbitRecord rec{ideal};
  rec.trivial = is_trivial(ideal).has_value();
  rec.trivial_type_b = is_trivial_type_b(ideal).has_value();
  const std::size_t r = ideal.num_generators();

  if (r > generator_bound(ideal.n(), ideal.d())) {
    rec.status = TogliattiStatus::exceeds_generator_bound;
  } else {
    const bool by_kernel = togliatti_kernel(ideal).dimension() > 0;
    const bool by_wlp = fails_wlp_in_degree(ideal, ideal.d() - 1);
    const bool by_restriction = hyperplane_dependence(ideal).has_value();
    ++tally.three_way_checked;
    if (by_kernel == by_wlp && by_wlp == by_restriction) ++tally.three_way_agree;
    rec.status = by_kernel ? TogliattiStatus::togliatti : TogliattiStatus::not_togliatti;
  }

  if (rec.status == TogliattiStatus::togliatti) {
    rec.minimal = is_minimal(ideal).is_minimal;
    if (r <= 16) {
      ++tally.minimality_checked;
      if (minimality_oracle(ideal) == rec.minimal) ++tally.minimality_agree;
    }
    if (rec.minimal) rec.smooth = is_smooth(ideal).is_smooth;
  }

  if (r >= 3 && r <= 14) {
    const auto fast = stability_class(ideal);
    const auto slow = stability_oracle(ideal);
    ++tally.stability_checked;
    const bool same_min = fast.witness && slow.witness && fast.witness->value == slow.witness->value;
    if (fast.verdict == slow.verdict && same_min) ++tally.stability_agree;
  }
  return rec;
}

void add(OracleTally& into, const OracleTally& t) {
  into.three_way_checked += t.three_way_checked;
  into.three_way_agree += t.three_way_agree;
  into.minimality_checked += t.minimality_checked;
  into.minimality_agree += t.minimality_agree;
  into.stability_checked += t.stability_checked;
  into.stability_agree += t.stability_agree;
}

}  // namespace

const Census& census(int n, int d, int extra, unsigned threads, std::uint64_t budget) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, std::unique_ptr<Census>> memo;
  std::lock_guard lock(mutex);
  auto& slot = memo[{n, d, extra}];
  if (slot) return *slot;

  EnumerationOptions options;
  options.budget = budget;
  options.threads = threads;
  auto ideals = enumerate(n, d, extra, options);

  auto c = std::make_unique<Census>();
  c->n = n;
  c->d = d;
  c->extra = extra;
  c->raw_subsets = raw_subset_count(n, d, extra);
  std::vector<std::optional<OrbitRecord>> records(ideals.size());
  std::vector<OracleTally> tallies(ideals.size());
  parallel_for(ideals.size(), threads, [&](std::size_t i) { records[i] = classify(ideals[i], tallies[i]); });
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    c->orbits.push_back(std::move(*records[i]));
    add(c->tally, tallies[i]);
  }
  slot = std::move(c);
  return *slot;
}

// ---------------------------------------------------------------------------

SurveyRow survey(int n, int d, int mu, const EnumerationOptions& options) {
  const int extra = mu - (n + 1);
  if (extra < 0) throw InputError(InputErrorKind::invalid_argument, "mu must be at least n+1");
  const auto& c = census(n, d, extra, options.threads, options.budget);
  SurveyRow row;
  row.n = n;
  row.d = d;
  row.mu = mu;
  row.raw_subsets = c.raw_subsets;
  row.total = c.orbits.size();
  for (const auto& o : c.orbits) {
    if (o.status == TogliattiStatus::togliatti) ++row.togliatti;
    if (!o.minimal) continue;
    ++row.minimal;
    row.minimal_representatives.push_back(o.ideal);
    if (o.trivial) ++row.trivial;
    if (o.trivial_type_b) ++row.trivial_type_b;
    if (o.smooth) {
      ++row.minimal_smooth;
      row.minimal_smooth_representatives.push_back(o.ideal);
    }
  }
  return row;
}

std::string survey_csv_header() {
  return "n,d,mu,raw_subsets,orbits,togliatti,minimal,minimal_smooth,trivial,trivial_type_b";
}

std::string to_csv(const SurveyRow& row) {
  std::ostringstream os;
  os << row.n << ',' << row.d << ',' << row.mu << ',' << row.raw_subsets << ',' << row.total << ',' << row.togliatti
     << ',' << row.minimal << ',' << row.minimal_smooth << ',' << row.trivial << ',' << row.trivial_type_b;
  return os.str();
}

nlohmann::json to_json(const SurveyRow& row) {
  nlohmann::json minimal = nlohmann::json::array(), smooth = nlohmann::json::array();
  for (const auto& I : row.minimal_representatives) minimal.push_back(I.to_string());
  for (const auto& I : row.minimal_smooth_representatives) smooth.push_back(I.to_string());
  return {{"n", row.n},
          {"d", row.d},
          {"mu", row.mu},
          {"raw_subsets", row.raw_subsets},
          {"orbits", row.total},
          {"togliatti", row.togliatti},
          {"minimal", row.minimal},
          {"minimal_smooth", row.minimal_smooth},
          {"trivial", row.trivial},
          {"trivial_type_b", row.trivial_type_b},
          {"minimal_representatives", minimal},
          {"minimal_smooth_representatives", smooth}};
}

// ---------------------------------------------------------------------------

std::uint64_t closed_form_mu_s(int n, int d) {
  if (d == 2 && n >= 3) {
    const std::uint64_t lambda = static_cast<std::uint64_t>(n / 2);
    return n % 2 == 0 ? lambda * lambda + 2 * lambda + 1 : lambda * lambda + 3 * lambda + 2;
  }
  if (d == 3 && n >= 4) {
    // partitions of n+1 into parts 1..n-1, generated in non-increasing order
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    std::vector<int> parts;
    std::function<void(int, int)> walk = [&](int remaining, int max_part) {
      if (remaining == 0) {
        std::uint64_t total = 0;
        for (int a : parts) total += binomial(static_cast<std::uint64_t>(a + 2), 3);
        // e3 of the parts by the usual recurrence
        std::uint64_t e1 = 0, e2 = 0, e3 = 0;
        for (int a : parts) {
          const auto x = static_cast<std::uint64_t>(a);
          e3 += x * e2;
          e2 += x * e1;
          e1 += x;
        }
        best = std::min(best, total + e3);
        return;
      }
      for (int a = std::min(remaining, max_part); a >= 1; --a) {
        parts.push_back(a);
        walk(remaining - a, a);
        parts.pop_back();
      }
    };
    walk(n + 1, n - 1);
    return best;
  }
  throw InputError(InputErrorKind::invalid_argument,
                   "closed form known only for d=2, n>=3 and d=3, n>=4 (got n=" + std::to_string(n) +
                       ", d=" + std::to_string(d) + ")");
}

namespace {

void assert_value(BoundEntry& e, std::uint64_t v, std::string note) {
  e.value = v;
  e.paper_asserted = true;
  e.note = std::move(note);
}

// Records what the enumeration found for one bound.
void reconcile(BoundEntry& e, std::optional<std::uint64_t> found) {
  if (!found) {
    if (!e.value) {
      e.empty = true;
      e.verified = true;
    } else {
      if (!e.note.empty()) e.note += "; ";
      e.note += "enumeration found no system";
    }
    return;
  }
  if (!e.value) {
    if (e.empty) {
      e.note += "; enumeration found " + std::to_string(*found);
      return;
    }
    e.value = found;
    e.verified = true;
  } else if (*e.value == *found) {
    e.verified = true;
  } else {
    if (!e.note.empty()) e.note += "; ";
    e.note += "enumeration gives " + std::to_string(*found);
  }
}

}  // namespace

MuBounds mu_bounds(int n, int d, std::uint64_t verify_budget) {
  if (n < 1 || d < 2) throw InputError(InputErrorKind::invalid_argument, "need n >= 1 and d >= 2");
  MuBounds b;
  b.n = n;
  b.d = d;
  b.generator_bound = generator_bound(n, d);
  const std::uint64_t N = static_cast<std::uint64_t>(n);

  if (d == 2) {
    if (n >= 3) {
      assert_value(b.mu_s, closed_form_mu_s(n, 2), "smooth quadric classification");
      assert_value(b.rho_s, binomial(N, 2) + 3, "smooth quadric classification");
      if (n == 3) assert_value(b.mu, 6, "");
      if (n >= 4) assert_value(b.mu, 2 * N + 1, "x0*(x1,...,xn) fails WLP");
    } else if (n == 2) {
      b.mu_s.empty = b.rho_s.empty = true;
      b.mu_s.paper_asserted = b.rho_s.paper_asserted = true;
      b.mu_s.note = b.rho_s.note = "no smooth minimal system";
    }
  } else if (d == 3) {
    if (n == 2) {
      assert_value(b.mu_s, 4, "");
      assert_value(b.rho_s, 4, "");
      assert_value(b.mu, 4, "");
    } else if (n == 3) {
      assert_value(b.mu_s, 8, "");
      assert_value(b.rho_s, 8, "");
      assert_value(b.mu, 7, "");
    } else if (n >= 4) {
      assert_value(b.mu_s, closed_form_mu_s(n, 3), "partition minimum");
      assert_value(b.rho_s, binomial(N + 1, 3) + N + 1, "");
      assert_value(b.mu, 2 * N + 1, "");
    }
  } else if (n >= 2) {
    assert_value(b.mu, 2 * N + 1, "");
    assert_value(b.mu_s, 2 * N + 1, "");
    assert_value(b.rho, b.generator_bound, "attained by the rho-max family");
    if (n == 2) assert_value(b.rho_s, static_cast<std::uint64_t>(d) + 1, "attained by the interval family");
  }

  if (verify_budget == 0) return b;

  // Walk extra = 0, 1, ... within the generator bound, spending the budget.
  const int top = static_cast<int>(b.generator_bound) - (n + 1);
  std::uint64_t spent = 0;
  auto affordable = [&](int extra) {
    const auto cost = raw_subset_count(n, d, extra);
    if (cost > verify_budget || spent + cost > verify_budget) return false;
    spent += cost;
    return true;
  };
  std::optional<std::uint64_t> first_any, first_smooth, last_any, last_smooth;
  bool complete = true;
  for (int extra = 0; extra <= top; ++extra) {
    if (first_any && first_smooth) break;
    if (!affordable(extra)) {
      complete = false;
      break;
    }
    const auto& c = census(n, d, extra, default_threads(), verify_budget);
    const auto r = static_cast<std::uint64_t>(n + 1 + extra);
    if (!first_any && !c.minimal().empty()) first_any = r;
    if (!first_smooth && !c.minimal_smooth().empty()) first_smooth = r;
  }
  if (complete) {
    reconcile(b.mu, first_any);
    reconcile(b.mu_s, first_smooth);
  }
  bool complete_top = true;
  for (int extra = top; extra >= 0; --extra) {
    if (last_any && last_smooth) break;
    if (!affordable(extra)) {
      complete_top = false;
      break;
    }
    const auto& c = census(n, d, extra, default_threads(), verify_budget);
    const auto r = static_cast<std::uint64_t>(n + 1 + extra);
    if (!last_any && !c.minimal().empty()) last_any = r;
    if (!last_smooth && !c.minimal_smooth().empty()) last_smooth = r;
  }
  if (complete_top) {
    reconcile(b.rho, last_any);
    reconcile(b.rho_s, last_smooth);
  }
  return b;
}

namespace {

nlohmann::json entry_json(const BoundEntry& e) {
  nlohmann::json j;
  j["value"] = e.value ? nlohmann::json(*e.value) : nlohmann::json(nullptr);
  std::string status = e.verified ? "verified" : e.paper_asserted ? "paper-asserted" : "unknown";
  if (e.verified && e.paper_asserted) status = "paper-asserted, verified";
  j["status"] = status;
  if (e.empty) j["empty"] = true;
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

}  // namespace

nlohmann::json to_json(const MuBounds& b) {
  return {{"n", b.n},
          {"d", b.d},
          {"generator_bound", b.generator_bound},
          {"mu", entry_json(b.mu)},
          {"mu_s", entry_json(b.mu_s)},
          {"rho", entry_json(b.rho)},
          {"rho_s", entry_json(b.rho_s)}};
}

}  // namespace togliatti
