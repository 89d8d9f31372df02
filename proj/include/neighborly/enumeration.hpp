#pragma once

// Exhaustive search over k-neighborly reduced Gale diagrams (center 0),
// one representative per dihedral class, and the minimum of
// cofacets - vertices over them.
//
// Search order: diameters 0, 1, ..., n-1, each assigning the label pair
// (m_j, m_{j+n}). After diameter j is placed, every cofacet among placed
// points is known, and a future point at any position in (j, n) closes
// exactly `alpha` triangles with placed pairs (similarly `beta` on
// (n+j, 2n)). That gives a lower bound on the final cofacet count which
// find_delta3 uses for branch and bound. enumerate_diagrams does not bound
// the objective and visits the whole space.
//
// Symmetry: a branch survives only while its labels, read in assignment
// order (m_0, m_n, m_1, m_{n+1}, ...), can still be the least such key over
// the 4n rotations and reflections. Emitted diagrams are then mapped to
// canonical_form().

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "neighborly/error.hpp"
#include "neighborly/gale_diagram.hpp"
#include "neighborly/json_io.hpp"

namespace neighborly {

enum class PruneLevel {
  /// Reduced, center 0, labels <= k+1, label sum <= 4(k+1), k-neighborly.
  marcus,
  /// marcus, restricted to minimal diagrams.
  minimal,
  /// minimal, plus m_i + m_{i-1} >= 2 everywhere and n <= k+2 (k even) or
  /// k+3 (k odd). These restrictions hold for optimal diagrams only, so this
  /// space is meant for computing the optimum, not for listing diagrams.
  extremal,
};

inline std::string_view to_string(PruneLevel level) {
  switch (level) {
    case PruneLevel::marcus: return "marcus";
    case PruneLevel::minimal: return "minimal";
    case PruneLevel::extremal: return "extremal";
  }
  return "?";
}

inline PruneLevel parse_prune_level(std::string_view s) {
  if (s == "marcus") return PruneLevel::marcus;
  if (s == "minimal") return PruneLevel::minimal;
  if (s == "extremal") return PruneLevel::extremal;
  throw DomainError("unknown prune level '" + std::string(s) + "'");
}

struct SearchConfig {
  unsigned k = 2;
  PruneLevel prune = PruneLevel::marcus;
  /// Keep every optimal witness instead of the canonically least one.
  bool emit_all = false;
  unsigned jobs = 1;
  /// Overrides the label-sum cap 4(k+1). Raising it lets tests look for
  /// minimal diagrams beyond the cap.
  std::optional<Count> label_sum_cap;

  Count sum_cap() const { return label_sum_cap.value_or(Count{4} * (k + 1)); }

  /// Largest n in the space. A reduced diagram has no two adjacent zero
  /// labels, so its label sum is at least n.
  std::size_t max_diameters() const {
    const auto cap = static_cast<std::size_t>(sum_cap());
    if (prune == PruneLevel::extremal) return std::min<std::size_t>(cap, k % 2 == 0 ? k + 2 : k + 3);
    return cap;
  }

  void validate() const {
    if (k < 2) throw DomainError("search requires k >= 2");
    if (jobs < 1) throw DomainError("search requires jobs >= 1");
  }
};

struct SearchStats {
  std::uint64_t nodes = 0;
  /// Diagrams of the space whose objective was computed.
  std::uint64_t evaluated = 0;
  double seconds = 0.0;
};

struct SearchResult {
  unsigned k = 0;
  PruneLevel prune = PruneLevel::marcus;
  /// min over the space of cofacets - vertices
  std::int64_t delta3 = 0;
  /// Canonical, sorted, distinct diagrams attaining delta3.
  std::vector<GaleDiagram> witnesses;
  SearchStats stats;
};

/// Known optimum: (k+2)(k^2+k-3)/3 for k in {2, 3}, else 2(k^2-1).
inline std::int64_t delta3_closed_form(long long k) {
  if (k < 2) throw DomainError("delta3_closed_form requires k >= 2");
  if (k > 3'000'000) throw ArithmeticOverflow("delta3_closed_form: k too large");
  if (k <= 3) return (k + 2) * (k * k + k - 3) / 3;
  return 2 * (k * k - 1);
}

namespace detail {

/// Depth-first search for one fixed n, rooted at a fixed first diameter.
class DiameterSearch {
 public:
  struct Options {
    unsigned k = 2;
    PruneLevel level = PruneLevel::marcus;
    Count sum_cap = 12;
    /// Prune subtrees whose objective lower bound exceeds *best.
    const std::atomic<std::int64_t>* best = nullptr;
  };

  DiameterSearch(const Options& opt, std::size_t n)
      : opt_(opt), n_(n), len_(2 * n), top_(static_cast<Label>(opt.k + 1)), need_(opt.k + 1) {
    m_.assign(len_, 0);
    pref_a_.assign(n_ + 1, 0);
    pref_b_.assign(n_ + 1, 0);
    f_.assign(n_ + 1, 0);
    alpha_.assign(n_ + 1, 0);
    beta_.assign(n_ + 1, 0);
    build_symmetry_tables();
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

  /// Searches every completion of m_0 = a, m_n = b. `leaf(labels, cofacets,
  /// label_sum)` is called once per surviving diagram.
  template <class Leaf>
  void run(Label a, Label b, Leaf&& leaf) {
    if (b < a || a + b == 0 || a > top_ || b > top_) return;
    if (Count{a} + b > opt_.sum_cap) return;
    sym_.assign(group_size_, 0);
    sym_[0] = -1;  // identity
    place(0, a, b, 0, leaf);
  }

 private:
  using Ptr = std::int16_t;

  std::size_t key_pos(std::size_t t) const noexcept { return (t % 2 == 0) ? t / 2 : n_ + t / 2; }
  std::size_t key_index(std::size_t p) const noexcept { return p < n_ ? 2 * p : 2 * (p - n_) + 1; }

  void build_symmetry_tables() {
    group_size_ = 2 * len_;
    img_.assign(group_size_ * len_, 0);
    img_key_.assign(group_size_ * len_, 0);
    for (std::size_t g = 0; g < group_size_; ++g) {
      const std::size_t r = g % len_;
      const bool flip = g >= len_;
      for (std::size_t t = 0; t < len_; ++t) {
        const std::size_t p = key_pos(t);
        const std::size_t q = flip ? (r + len_ - p) % len_ : (p + r) % len_;
        img_[g * len_ + t] = static_cast<std::uint16_t>(q);
        img_key_[g * len_ + t] = static_cast<std::uint16_t>(key_index(q));
      }
    }
  }

  /// Advances every unresolved group element over the key prefix of length
  /// `known`. False if some image of the partial diagram has a smaller key.
  bool symmetry_ok(std::vector<Ptr>& state, std::size_t known) const {
    for (std::size_t g = 1; g < group_size_; ++g) {
      Ptr t = state[g];
      if (t < 0) continue;
      const std::uint16_t* img = &img_[g * len_];
      const std::uint16_t* ik = &img_key_[g * len_];
      while (static_cast<std::size_t>(t) < known) {
        if (ik[t] >= known) break;
        const Label mine = m_[key_pos(static_cast<std::size_t>(t))];
        const Label theirs = m_[img[t]];
        if (theirs < mine) return false;
        if (theirs > mine) {
          t = -1;
          break;
        }
        ++t;
      }
      if (static_cast<std::size_t>(t) == len_) t = -1;
      state[g] = t;
    }
    return true;
  }

  /// Largest shortfall k+1 - (placed mass) over the open semicircles that
  /// start at placed positions and still reach into the unplaced arc on the
  /// given side. With nothing left unplaced these are all 2n semicircles.
  std::int64_t shortfall_a(std::size_t j) const {
    std::int64_t worst = std::numeric_limits<std::int64_t>::min();
    for (std::size_t i = 0; i <= j; ++i) {
      const Count placed = (pref_a_[j + 1] - pref_a_[i + 1]) + pref_b_[i];
      worst = std::max(worst, static_cast<std::int64_t>(need_) - static_cast<std::int64_t>(placed));
    }
    return worst;
  }

  std::int64_t shortfall_b(std::size_t j) const {
    std::int64_t worst = std::numeric_limits<std::int64_t>::min();
    for (std::size_t i = 0; i <= j; ++i) {
      const Count placed = (pref_b_[j + 1] - pref_b_[i + 1]) + pref_a_[i];
      worst = std::max(worst, static_cast<std::int64_t>(need_) - static_cast<std::int64_t>(placed));
    }
    return worst;
  }

  /// min (alpha-1) ra + (beta-1) rb subject to the mass constraints on the
  /// unplaced arcs. nullopt if the constraints are infeasible.
  static std::optional<std::int64_t> future_gap_floor(std::int64_t alpha, std::int64_t beta, std::int64_t low_a,
                                                      std::int64_t low_b, std::int64_t cap_side,
                                                      std::int64_t min_total, std::int64_t budget) {
    if (low_a > cap_side || low_b > cap_side || low_a + low_b > budget || min_total > budget) return std::nullopt;
    const std::int64_t ca = alpha - 1, cb = beta - 1;
    if (ca >= 0 && cb >= 0) {
      const std::int64_t extra = std::max<std::int64_t>(0, min_total - low_a - low_b);
      return ca * low_a + cb * low_b + std::min(ca, cb) * extra;
    }
    std::optional<std::int64_t> best;
    const std::int64_t hi_a = std::min(cap_side, budget - low_b);
    for (std::int64_t ra = low_a; ra <= hi_a; ++ra) {
      const std::int64_t lo_b = std::max(low_b, min_total - ra);
      const std::int64_t hi_b = std::min(cap_side, budget - ra);
      if (lo_b > hi_b) continue;
      const std::int64_t v = ca * ra + cb * (cb >= 0 ? lo_b : hi_b);
      if (!best || v < *best) best = v;
    }
    return best;
  }

  bool adjacent_ok(Label x, Label y) const noexcept {
    return opt_.level == PruneLevel::extremal ? x + y >= 2 : x + y > 0;
  }

  template <class Leaf>
  void place(std::size_t j, Label a, Label b, Count sum, Leaf& leaf) {
    ++nodes_;
    if (j > 0 && (!adjacent_ok(m_[j - 1], a) || !adjacent_ok(m_[n_ + j - 1], b))) return;

    m_[j] = a;
    m_[n_ + j] = b;
    pref_a_[j + 1] = pref_a_[j] + a;
    pref_b_[j + 1] = pref_b_[j] + b;
    const Count new_sum = sum + a + b;
    f_[j + 1] = f_[j] + Count{a} * b + Count{a} * alpha_[j] + Count{b} * beta_[j];
    alpha_[j + 1] = alpha_[j] + Count{b} * pref_a_[j];
    beta_[j + 1] = beta_[j] + Count{a} * pref_b_[j];

    std::vector<Ptr> sym = sym_;
    if (!symmetry_ok(sym, 2 * j + 2)) return;

    const std::int64_t short_a = shortfall_a(j);
    const std::int64_t short_b = shortfall_b(j);
    const std::size_t rest = n_ - 1 - j;

    if (rest == 0) {
      if (short_a > 0 || short_b > 0) return;
      if (!adjacent_ok(m_[n_ - 1], m_[n_]) || !adjacent_ok(m_[len_ - 1], m_[0])) return;
      if (opt_.level != PruneLevel::marcus && !is_minimal(GaleDiagram(m_), opt_.k)) return;
      leaf(std::as_const(m_), f_[n_], new_sum);
      return;
    }

    const auto r = static_cast<std::int64_t>(rest);
    const auto budget = static_cast<std::int64_t>(opt_.sum_cap) - static_cast<std::int64_t>(new_sum);
    const std::int64_t floor_each = static_cast<std::int64_t>(m_[0]) * r;  // m_0 is the least label
    const std::int64_t low_a = std::max({short_a, floor_each, std::int64_t{0}});
    const std::int64_t low_b = std::max({short_b, floor_each, std::int64_t{0}});
    const auto gap_floor = future_gap_floor(static_cast<std::int64_t>(alpha_[j + 1]),
                                        static_cast<std::int64_t>(beta_[j + 1]), low_a, low_b,
                                        static_cast<std::int64_t>(top_) * r, r, budget);
    if (!gap_floor) return;
    if (opt_.best) {
      const std::int64_t lb = static_cast<std::int64_t>(f_[j + 1]) - static_cast<std::int64_t>(new_sum) + *gap_floor;
      if (lb > opt_.best->load(std::memory_order_relaxed)) return;
    }

    std::swap(sym_, sym);
    const Label lo = m_[0];
    for (Label x = lo; x <= top_; ++x) {
      if (new_sum + x > opt_.sum_cap) break;
      for (Label y = lo; y <= top_; ++y) {
        if (new_sum + x + y > opt_.sum_cap) break;
        if (x + y == 0) continue;
        place(j + 1, x, y, new_sum, leaf);
      }
    }
    std::swap(sym_, sym);
  }

  Options opt_;
  std::size_t n_, len_;
  Label top_;
  Count need_;
  std::vector<Label> m_;
  std::vector<Count> pref_a_, pref_b_, f_, alpha_, beta_;
  std::size_t group_size_ = 0;
  std::vector<std::uint16_t> img_, img_key_;
  std::vector<Ptr> sym_;
  std::uint64_t nodes_ = 0;
};

struct RootTask {
  std::size_t n;
  Label a, b;
};

inline std::vector<RootTask> root_tasks(const SearchConfig& cfg) {
  std::vector<RootTask> tasks;
  const auto top = static_cast<Label>(cfg.k + 1);
  for (std::size_t n = 2; n <= cfg.max_diameters(); ++n)
    for (Label a = 0; a <= top; ++a)
      for (Label b = a; b <= top; ++b)
        if (a + b > 0 && Count{a} + b <= cfg.sum_cap()) tasks.push_back({n, a, b});
  return tasks;
}

inline void check_conjecture(const std::vector<Label>& labels, Count cofacets, Count sum) {
  if (cofacets < sum)
    throw VerificationFailure("diagram with fewer cofacets than vertices found",
                              diagram_to_json_text(GaleDiagram(labels)));
}

}  // namespace detail

/// Calls `visit(const GaleDiagram&)` once per dihedral class of the search
/// space, with the diagram in canonical form. Serial and deterministic.
template <class Visitor>
SearchStats enumerate_diagrams(const SearchConfig& cfg, Visitor&& visit) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  SearchStats stats;
  std::size_t current_n = 0;
  std::optional<detail::DiameterSearch> engine;
  for (const auto& task : detail::root_tasks(cfg)) {
    if (task.n != current_n) {
      if (engine) stats.nodes += engine->nodes();
      engine.emplace(detail::DiameterSearch::Options{cfg.k, cfg.prune, cfg.sum_cap(), nullptr}, task.n);
      current_n = task.n;
    }
    engine->run(task.a, task.b, [&](const std::vector<Label>& labels, Count, Count) {
      ++stats.evaluated;
      visit(canonical_form(GaleDiagram(labels)));
    });
  }
  if (engine) stats.nodes += engine->nodes();
  stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return stats;
}

/// Materializes enumerate_diagrams.
inline std::vector<GaleDiagram> collect_diagrams(const SearchConfig& cfg) {
  std::vector<GaleDiagram> out;
  enumerate_diagrams(cfg, [&](const GaleDiagram& d) { out.push_back(d); });
  return out;
}

/// Minimum of cofacets - vertices over the search space, with witnesses.
/// Root branches (n, m_0, m_n) are spread over cfg.jobs threads; pruning
/// only discards subtrees whose lower bound is strictly above the best value
/// seen, so delta3 and the witness set do not depend on the thread count.
/// Throws VerificationFailure if any evaluated diagram has fewer cofacets
/// than vertices.
inline SearchResult find_delta3(const SearchConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  const auto tasks = detail::root_tasks(cfg);

  struct Outcome {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    std::vector<std::vector<Label>> witnesses;
    std::uint64_t nodes = 0, evaluated = 0;
  };
  std::vector<Outcome> outcomes(tasks.size());
  std::atomic<std::int64_t> best{std::numeric_limits<std::int64_t>::max()};
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::optional<VerificationFailure> failure;

  const auto worker = [&] {
    std::size_t current_n = 0;
    std::optional<detail::DiameterSearch> engine;
    std::uint64_t seen_nodes = 0;
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      const auto& task = tasks[t];
      if (task.n != current_n) {
        engine.emplace(detail::DiameterSearch::Options{cfg.k, cfg.prune, cfg.sum_cap(), &best}, task.n);
        current_n = task.n;
        seen_nodes = 0;
      }
      Outcome& out = outcomes[t];
      try {
        engine->run(task.a, task.b, [&](const std::vector<Label>& labels, Count cofacets, Count sum) {
          ++out.evaluated;
          detail::check_conjecture(labels, cofacets, sum);
          const auto gap = static_cast<std::int64_t>(cofacets) - static_cast<std::int64_t>(sum);
          if (gap > out.best) return;
          if (gap < out.best) {
            out.best = gap;
            out.witnesses.clear();
          }
          out.witnesses.push_back(labels);
          std::int64_t seen = best.load();
          while (gap < seen && !best.compare_exchange_weak(seen, gap)) {
          }
        });
      } catch (const VerificationFailure& e) {
        std::lock_guard lock(error_mutex);
        if (!failure) failure = e;
        next = tasks.size();
      }
      out.nodes = engine->nodes() - seen_nodes;
      seen_nodes = engine->nodes();
    }
  };

  if (cfg.jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < cfg.jobs; ++i) pool.emplace_back(worker);
  }
  if (failure) throw *failure;

  SearchResult result;
  result.k = cfg.k;
  result.prune = cfg.prune;
  result.delta3 = best.load();
  for (const auto& out : outcomes) {
    result.stats.nodes += out.nodes;
    result.stats.evaluated += out.evaluated;
    if (out.best != result.delta3) continue;
    for (const auto& w : out.witnesses) result.witnesses.push_back(canonical_form(GaleDiagram(w)));
  }
  if (result.witnesses.empty()) throw VerificationFailure("search space is empty", "");
  const auto by_labels = [](const GaleDiagram& x, const GaleDiagram& y) {
    return std::lexicographical_compare(x.labels().begin(), x.labels().end(), y.labels().begin(), y.labels().end());
  };
  const auto n_then_labels = [&](const GaleDiagram& x, const GaleDiagram& y) {
    if (x.diameters() != y.diameters()) return x.diameters() < y.diameters();
    return by_labels(x, y);
  };
  std::sort(result.witnesses.begin(), result.witnesses.end(), n_then_labels);
  result.witnesses.erase(std::unique(result.witnesses.begin(), result.witnesses.end()), result.witnesses.end());
  if (!cfg.emit_all) result.witnesses.erase(result.witnesses.begin() + 1, result.witnesses.end());
  result.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

struct Theorem1Row {
  unsigned k = 0;
  std::int64_t searched = 0;
  std::int64_t closed_form = 0;
  bool match = false;
  /// delta3 >= 0: no diagram of the space has fewer cofacets than vertices.
  bool facets_at_least_vertices = false;
  SearchResult result;
};

/// Runs find_delta3 for k = 2..k_max and compares with delta3_closed_form.
/// Throws VerificationFailure (with the offending witness) on a mismatch or
/// on a diagram with fewer cofacets than vertices.
inline std::vector<Theorem1Row> verify_theorem1(unsigned k_max, PruneLevel level = PruneLevel::extremal,
                                                unsigned jobs = 1) {
  if (k_max < 2 || k_max > 7) throw DomainError("verify_theorem1: 2 <= k_max <= 7 required");
  std::vector<Theorem1Row> rows;
  for (unsigned k = 2; k <= k_max; ++k) {
    SearchConfig cfg;
    cfg.k = k;
    cfg.prune = level;
    cfg.emit_all = true;
    cfg.jobs = jobs;
    Theorem1Row row;
    row.k = k;
    row.result = find_delta3(cfg);
    row.searched = row.result.delta3;
    row.closed_form = delta3_closed_form(k);
    row.match = row.searched == row.closed_form;
    row.facets_at_least_vertices = row.searched >= 0;
    if (!row.match)
      throw VerificationFailure("k = " + std::to_string(k) + ": search found " + std::to_string(row.searched) +
                                    ", closed form gives " + std::to_string(row.closed_form),
                                diagram_to_json_text(row.result.witnesses.front()));
    if (!row.facets_at_least_vertices)
      throw VerificationFailure("k = " + std::to_string(k) + ": negative facet-vertex gap",
                                diagram_to_json_text(row.result.witnesses.front()));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace neighborly
