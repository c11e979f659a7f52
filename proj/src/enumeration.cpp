#include "hsg/enumeration.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <numeric>
#include <string>
#include <thread>

namespace hsg {

namespace {

constexpr int max_enum_order = 4;  // full alphabet / canonicalization bound

// Carrier permutations of {0..n-1} in lexicographic order, identity first.
std::vector<std::array<int, max_enum_order>> permutations(int n) {
  std::array<int, max_enum_order> p{};
  std::iota(p.begin(), p.begin() + n, 0);
  std::vector<std::array<int, max_enum_order>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.begin() + n));
  return out;
}

std::uint16_t apply_perm_to_mask(const std::array<int, max_enum_order>& p,
                                 std::uint16_t mask) {
  std::uint16_t out = 0;
  while (mask) {
    int e = std::countr_zero(mask);
    mask &= static_cast<std::uint16_t>(mask - 1);
    out |= static_cast<std::uint16_t>(1u << p[e]);
  }
  return out;
}

// True iff the row-major table is lexicographically minimal among its
// relabelings. `perms` excludes nothing; the identity is skipped inside.
bool is_canonical_table(const std::uint16_t* cells, int n,
                        const std::vector<std::array<int, max_enum_order>>&
                            perms) {
  for (const auto& p : perms) {
    bool identity = true;
    for (int i = 0; i < n; ++i) identity &= (p[i] == i);
    if (identity) continue;
    // Build the inverse so relabeled cells can be read in row-major order.
    std::array<int, max_enum_order> inv{};
    for (int i = 0; i < n; ++i) inv[p[i]] = i;
    bool smaller = false;
    for (int a = 0; a < n && !smaller; ++a) {
      for (int b = 0; b < n; ++b) {
        std::uint16_t relabeled =
            apply_perm_to_mask(p, cells[inv[a] * n + inv[b]]);
        std::uint16_t original = cells[a * n + b];
        if (relabeled != original) {
          if (relabeled < original) return false;
          smaller = true;  // relabeling is larger from here on
          break;
        }
      }
    }
  }
  return true;
}

// Associativity instances that are fully determined by cells[0..k] and
// involve cell k. Lexicographic (x, y, z) scan; returns false on a violated
// instance.
bool prune_ok(const std::uint16_t* cells, int n, int k) {
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int ixy = x * n + y;
      if (ixy > k) continue;
      for (int z = 0; z < n; ++z) {
        const int iyz = y * n + z;
        if (iyz > k) continue;
        bool fresh = (ixy == k) || (iyz == k);
        std::uint16_t lhs = 0;
        bool determined = true;
        std::uint16_t rest = cells[iyz];
        while (rest) {
          int w = std::countr_zero(rest);
          rest &= static_cast<std::uint16_t>(rest - 1);
          int i = x * n + w;
          if (i > k) {
            determined = false;
            break;
          }
          fresh |= (i == k);
          lhs |= cells[i];
        }
        if (!determined) continue;
        std::uint16_t rhs = 0;
        rest = cells[ixy];
        while (rest) {
          int v = std::countr_zero(rest);
          rest &= static_cast<std::uint16_t>(rest - 1);
          int i = v * n + z;
          if (i > k) {
            determined = false;
            break;
          }
          fresh |= (i == k);
          rhs |= cells[i];
        }
        if (!determined || !fresh) continue;
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

bool table_associative(const std::uint16_t* cells, int n) {
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        std::uint16_t lhs = 0;
        std::uint16_t rest = cells[y * n + z];
        while (rest) {
          int w = std::countr_zero(rest);
          rest &= static_cast<std::uint16_t>(rest - 1);
          lhs |= cells[x * n + w];
        }
        std::uint16_t rhs = 0;
        rest = cells[x * n + y];
        while (rest) {
          int v = std::countr_zero(rest);
          rest &= static_cast<std::uint16_t>(rest - 1);
          rhs |= cells[v * n + z];
        }
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

bool table_regular(const std::uint16_t* cells, int n) {
  const std::uint16_t full = static_cast<std::uint16_t>((1u << n) - 1u);
  for (int x = 0; x < n; ++x) {
    // {x} * H
    std::uint16_t mid = 0;
    for (int b = 0; b < n; ++b) mid |= cells[x * n + b];
    // (...) * {x}
    std::uint16_t chain = 0;
    std::uint16_t rest = static_cast<std::uint16_t>(mid & full);
    while (rest) {
      int a = std::countr_zero(rest);
      rest &= static_cast<std::uint16_t>(rest - 1);
      chain |= cells[a * n + x];
    }
    if (!((chain >> x) & 1u)) return false;
  }
  return true;
}

std::vector<std::uint16_t> resolve_alphabet(const EnumerationSpec& spec) {
  std::vector<std::uint16_t> alphabet;
  if (spec.cell_alphabet.empty()) {
    const std::uint16_t all =
        static_cast<std::uint16_t>((1u << spec.order) - 1u);
    for (std::uint16_t m = 1; m <= all; ++m) alphabet.push_back(m);
  } else {
    Subset carrier = Subset::full(spec.order);
    for (Subset s : spec.cell_alphabet) {
      if (s.empty()) {
        throw validation_error("cell alphabet contains the empty set");
      }
      if (!s.subset_of(carrier)) {
        throw validation_error(
            "cell alphabet entry exceeds the carrier of order " +
            std::to_string(spec.order));
      }
      alphabet.push_back(s.bits());
    }
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()),
                   alphabet.end());
  }
  return alphabet;
}

void validate_spec(const EnumerationSpec& spec) {
  if (spec.order < 1 || spec.order > order_cap) {
    throw validation_error("enumeration order must be between 1 and " +
                           std::to_string(order_cap));
  }
  if (spec.cell_alphabet.empty() && spec.order > max_enum_order) {
    throw validation_error(
        "full-alphabet enumeration is limited to order <= " +
        std::to_string(max_enum_order));
  }
  if (spec.canonicalize && spec.order > max_enum_order) {
    throw validation_error("canonicalization is limited to order <= " +
                           std::to_string(max_enum_order));
  }
}

struct SearchState {
  int n = 0;
  int ncells = 0;
  bool prune = false;
  bool canonicalize = false;
  std::vector<std::uint16_t> alphabet;
  std::vector<std::array<int, max_enum_order>> perms;
  std::array<std::uint16_t, order_cap * order_cap> cells{};
  EnumerationStats stats;

  void init(const EnumerationSpec& spec) {
    validate_spec(spec);
    n = spec.order;
    ncells = n * n;
    prune = spec.filter == EnumerationFilter::associative_only;
    canonicalize = spec.canonicalize;
    alphabet = resolve_alphabet(spec);
    if (canonicalize) perms = permutations(n);
  }

  Hypergroupoid materialize() const {
    std::vector<Subset> table(ncells);
    for (int i = 0; i < ncells; ++i) table[i] = Subset::from_bits(cells[i]);
    return Hypergroupoid(n, std::move(table));
  }

  // Returns false when the visitor requested a stop.
  template <typename Leaf>
  bool dfs(int k, const Leaf& leaf) {
    if (k == ncells) return leaf();
    for (std::uint16_t v : alphabet) {
      cells[k] = v;
      if (prune && !prune_ok(cells.data(), n, k)) continue;
      if (!dfs(k + 1, leaf)) return false;
    }
    return true;
  }

  // Stats bookkeeping plus the canonical filter; calls `sink` for structures
  // that should reach the visitor.
  template <typename Sink>
  bool handle_leaf(const Sink& sink) {
    if (canonicalize && !is_canonical_table(cells.data(), n, perms)) {
      return true;
    }
    bool assoc = prune ? true : table_associative(cells.data(), n);
    stats.total_tables += 1;
    if (assoc) {
      stats.associative_count += 1;
      if (table_regular(cells.data(), n)) stats.regular_count += 1;
    }
    return sink(materialize());
  }
};

}  // namespace

bool prune_check(const std::vector<Subset>& cells, int order,
                 int newly_filled) {
  std::array<std::uint16_t, order_cap * order_cap> raw{};
  for (int i = 0; i <= newly_filled; ++i) {
    raw[i] = cells[i].bits();
  }
  return prune_ok(raw.data(), order, newly_filled);
}

EnumerationStats enumerate(const EnumerationSpec& spec,
                           const StructureVisitor& visit) {
  auto start = std::chrono::steady_clock::now();
  SearchState st;
  st.init(spec);
  st.dfs(0, [&] { return st.handle_leaf(visit); });
  st.stats.elapsed = std::chrono::steady_clock::now() - start;
  return st.stats;
}

EnumerationStats enumerate_parallel(const EnumerationSpec& spec,
                                    const PartitionedVisitor& visit,
                                    int workers) {
  auto start = std::chrono::steady_clock::now();
  if (workers < 1) {
    throw validation_error("enumerate_parallel needs at least one worker");
  }
  SearchState proto;
  proto.init(spec);

  // Partition by the shortest prefix giving a few tasks per worker.
  int prefix_len = 0;
  std::uint64_t ntasks = 1;
  while (prefix_len < proto.ncells && ntasks < 4ull * workers &&
         ntasks * proto.alphabet.size() <= 65536) {
    ntasks *= proto.alphabet.size();
    prefix_len += 1;
  }

  std::atomic<std::uint64_t> next_task{0};
  std::atomic<std::uint64_t> stop_after{~0ull};  // tasks beyond this skip
  std::vector<EnumerationStats> partial(workers);
  std::vector<std::exception_ptr> errors(workers);

  auto work = [&](int wid) {
    SearchState st;
    st.init(spec);
    const std::uint64_t asize = st.alphabet.size();
    for (;;) {
      std::uint64_t task = next_task.fetch_add(1);
      if (task >= ntasks || task > stop_after.load()) break;
      // Decode the task index into the first prefix_len cells, most
      // significant digit first so task order matches visitation order.
      std::uint64_t t = task;
      bool viable = true;
      for (int i = prefix_len - 1; i >= 0; --i) {
        st.cells[i] = st.alphabet[t % asize];
        t /= asize;
      }
      if (st.prune) {
        for (int i = 0; i < prefix_len && viable; ++i) {
          viable = prune_ok(st.cells.data(), st.n, i);
        }
      }
      if (!viable) continue;
      bool keep_going = st.dfs(prefix_len, [&] {
        return st.handle_leaf(
            [&](const Hypergroupoid& h) { return visit(h, task); });
      });
      if (!keep_going) {
        // Abandon later partitions; earlier ones still complete so the
        // first hit in visitation order can be recovered.
        std::uint64_t cur = stop_after.load();
        while (task < cur && !stop_after.compare_exchange_weak(cur, task)) {
        }
      }
    }
    partial[wid] = st.stats;
  };

  auto guarded = [&](int wid) {
    try {
      work(wid);
    } catch (...) {
      errors[wid] = std::current_exception();
      stop_after.store(0);
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) pool.emplace_back(guarded, w);
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  EnumerationStats total;
  for (const auto& p : partial) total.merge(p);
  total.elapsed = std::chrono::steady_clock::now() - start;
  return total;
}

Hypergroupoid canonical_form(const Hypergroupoid& h) {
  const int n = h.order();
  if (n > max_enum_order) {
    throw precondition_error("canonical_form is limited to order <= " +
                             std::to_string(max_enum_order));
  }
  auto perms = permutations(n);
  std::vector<Subset> best = h.cells();
  std::vector<Subset> candidate(n * n);
  for (const auto& p : perms) {
    std::array<int, max_enum_order> inv{};
    for (int i = 0; i < n; ++i) inv[p[i]] = i;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        candidate[a * n + b] = Subset::from_bits(
            apply_perm_to_mask(p, h.cell(inv[a], inv[b]).bits()));
      }
    }
    auto less = [](const std::vector<Subset>& x,
                   const std::vector<Subset>& y) {
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].bits() != y[i].bits()) return x[i].bits() < y[i].bits();
      }
      return false;
    };
    if (less(candidate, best)) best = candidate;
  }
  return Hypergroupoid(n, std::move(best));
}

}  // namespace hsg
