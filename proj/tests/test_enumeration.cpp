#include <atomic>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "hsg/enumeration.hpp"
#include "hsg/io.hpp"

using namespace hsg;
using namespace hsg::fixtures;

namespace {

std::vector<std::string> collect(const EnumerationSpec& spec,
                                 EnumerationStats* stats = nullptr) {
  std::vector<std::string> out;
  EnumerationStats st = enumerate(spec, [&](const Hypergroupoid& h) {
    out.push_back(structure_to_json(h));
    return true;
  });
  if (stats) *stats = st;
  return out;
}

// Generate-then-filter oracle over an explicit alphabet.
std::vector<std::string> naive_associative(int order,
                                           const std::vector<Subset>& alpha) {
  std::vector<std::string> out;
  const int ncells = order * order;
  std::vector<std::size_t> idx(ncells, 0);
  for (;;) {
    std::vector<Subset> cells(ncells);
    for (int i = 0; i < ncells; ++i) cells[i] = alpha[idx[i]];
    Hypergroupoid h(order, std::move(cells));
    if (is_associative(h)) out.push_back(structure_to_json(h));
    int i = ncells - 1;
    while (i >= 0 && ++idx[i] == alpha.size()) idx[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

std::vector<Subset> full_alphabet(int order) {
  std::vector<Subset> out;
  for (std::uint16_t m = 1; m <= Subset::full(order).bits(); ++m) {
    out.push_back(Subset::from_bits(m));
  }
  return out;
}

}  // namespace

TEST_CASE("spec validation happens before any work") {
  EnumerationSpec spec;
  spec.order = 0;
  CHECK_THROWS_AS(enumerate(spec, [](const Hypergroupoid&) { return true; }),
                  validation_error);
  spec.order = 5;  // full alphabet beyond the bound
  CHECK_THROWS_AS(enumerate(spec, [](const Hypergroupoid&) { return true; }),
                  validation_error);
  spec.order = 5;
  spec.cell_alphabet = {Subset{0}, Subset{0, 1, 2, 3, 4}};
  spec.canonicalize = true;  // canonicalization beyond the bound
  CHECK_THROWS_AS(enumerate(spec, [](const Hypergroupoid&) { return true; }),
                  validation_error);
  spec.canonicalize = false;
  spec.cell_alphabet = {Subset{}};
  CHECK_THROWS_AS(enumerate(spec, [](const Hypergroupoid&) { return true; }),
                  validation_error);
  spec.cell_alphabet = {Subset{3}};  // outside an order-2 carrier
  spec.order = 2;
  CHECK_THROWS_AS(enumerate(spec, [](const Hypergroupoid&) { return true; }),
                  validation_error);
}

TEST_CASE("restricted alphabets reach past the full-alphabet bound") {
  // a one-entry alphabet keeps high-order spaces finite: the only table is
  // the constant one, which is associative
  EnumerationSpec spec;
  spec.order = order_cap;
  spec.cell_alphabet = {Subset{0}};
  spec.filter = EnumerationFilter::associative_only;
  std::uint64_t seen = 0;
  EnumerationStats st = enumerate(spec, [&](const Hypergroupoid& h) {
    ++seen;
    CHECK(h.order() == order_cap);
    CHECK(h.cell(order_cap - 1, order_cap - 1) == Subset{0});
    return true;
  });
  CHECK(seen == 1);
  CHECK(st.associative_count == 1);
}

TEST_CASE("order-1 and order-2 counts") {
  EnumerationSpec spec;
  spec.order = 1;
  EnumerationStats st =
      enumerate(spec, [](const Hypergroupoid&) { return true; });
  CHECK(st.total_tables == 1);
  CHECK(st.associative_count == 1);
  CHECK(st.regular_count == 1);

  spec.order = 2;
  st = enumerate(spec, [](const Hypergroupoid&) { return true; });
  CHECK(st.total_tables == 81);  // (2^2 - 1)^4
  CHECK(st.associative_count == 30);
  CHECK(st.regular_count == 28);
}

TEST_CASE("pruned enumeration equals the generate-then-filter oracle") {
  EnumerationSpec spec;
  spec.order = 2;
  spec.filter = EnumerationFilter::associative_only;
  EnumerationStats st;
  auto pruned = collect(spec, &st);
  auto naive = naive_associative(2, full_alphabet(2));
  CHECK(pruned == naive);  // same structures in the same order
  CHECK(st.total_tables == st.associative_count);
  CHECK(st.associative_count == 30);

  // restricted order-3 alphabet: singletons and the full set, 4^9 tables
  std::vector<Subset> alpha = {{0}, {1}, {2}, {0, 1, 2}};
  spec.order = 3;
  spec.cell_alphabet = alpha;
  auto pruned3 = collect(spec, &st);
  auto naive3 = naive_associative(3, alpha);
  CHECK(pruned3 == naive3);
  CHECK(pruned3.size() == 562);
}

TEST_CASE("visitation is deterministic and lexicographic") {
  EnumerationSpec spec;
  spec.order = 2;
  auto first = collect(spec);
  auto second = collect(spec);
  CHECK(first == second);
  CHECK(first.size() == 81);
  // row-major fill, cell values ascending by mask: first table is all {0},
  // second switches the last cell to {1}
  CHECK(first[0] == "{\"order\":2,\"table\":[[[0],[0]],[[0],[0]]]}");
  CHECK(first[1] == "{\"order\":2,\"table\":[[[0],[0]],[[0],[1]]]}");
  CHECK(first.back() ==
        "{\"order\":2,\"table\":[[[0,1],[0,1]],[[0,1],[0,1]]]}");
}

TEST_CASE("early stop via the visitor") {
  EnumerationSpec spec;
  spec.order = 2;
  int seen = 0;
  EnumerationStats st = enumerate(spec, [&](const Hypergroupoid&) {
    return ++seen < 10;
  });
  CHECK(seen == 10);
  CHECK(st.total_tables == 10);
}

TEST_CASE("prune_check on fixture prefixes") {
  // every prefix of an associative table passes
  auto l = h2l().cells();
  for (int k = 0; k < 4; ++k) {
    CHECK(prune_check(l, 2, k));
  }
  // H2M: fine until the last cell determines violated instances
  auto m = h2m().cells();
  CHECK(prune_check(m, 2, 0));
  CHECK(prune_check(m, 2, 1));
  CHECK(prune_check(m, 2, 2));
  CHECK_FALSE(prune_check(m, 2, 3));
}

TEST_CASE("canonical_form properties") {
  // idempotent
  for (const Hypergroupoid& h : {h2l(), h2f(), h2c(), h2m()}) {
    Hypergroupoid c = canonical_form(h);
    CHECK(canonical_form(c) == c);
  }
  // left-zero is symmetric under the swap, so it is its own canonical form
  CHECK(canonical_form(h2l()) == h2l());
  // order-1 structure maps to itself
  Hypergroupoid one(1, {Subset{0}});
  CHECK(canonical_form(one) == one);
  // swap the two carrier elements: cell'(a,b) = image of cell(1-a, 1-b)
  auto swap_relabel = [](const Hypergroupoid& h) {
    std::vector<Subset> swapped(4);
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        Subset c = h.cell(1 - a, 1 - b);
        Subset image;
        for (int e : c) image |= Subset::single(1 - e);
        swapped[a * 2 + b] = image;
      }
    }
    return Hypergroupoid(2, std::move(swapped));
  };
  // right-zero vs its relabeled copy: identical canonical forms (right-zero
  // is fixed by the swap, so the copy coincides with it)
  Hypergroupoid rz(2, {{0}, {1}, {0}, {1}});
  Hypergroupoid rz_relabeled = swap_relabel(rz);
  CHECK(rz_relabeled == rz);
  CHECK(canonical_form(rz) == canonical_form(rz_relabeled));
  // a structure moved by the swap still lands on the same canonical form
  Hypergroupoid constant1(2, {{1}, {1}, {1}, {1}});
  CHECK(swap_relabel(constant1) != constant1);
  CHECK(canonical_form(constant1) == canonical_form(swap_relabel(constant1)));
  CHECK(canonical_form(constant1) == Hypergroupoid(2, {{0}, {0}, {0}, {0}}));
  // relabeling is an isomorphism invariant across every order-2 table
  EnumerationSpec spec;
  spec.order = 2;
  enumerate(spec, [&](const Hypergroupoid& h) {
    CHECK(canonical_form(h) == canonical_form(swap_relabel(h)));
    return true;
  });
}

TEST_CASE("canonicalize visits one representative per isomorphism class") {
  // group the naive associative list by canonical form
  std::map<std::string, int> classes;
  for (const std::string& line : naive_associative(2, full_alphabet(2))) {
    classes[structure_to_json(canonical_form(structure_from_json(line)))]++;
  }
  CHECK(classes.size() == 17);

  EnumerationSpec spec;
  spec.order = 2;
  spec.filter = EnumerationFilter::associative_only;
  spec.canonicalize = true;
  std::set<std::string> visited;
  EnumerationStats st = enumerate(spec, [&](const Hypergroupoid& h) {
    CHECK(canonical_form(h) == h);
    visited.insert(structure_to_json(h));
    return true;
  });
  CHECK(st.total_tables == 17);
  CHECK(visited.size() == 17);
  for (const auto& [canon, count] : classes) {
    CHECK(visited.count(canon) == 1);
  }

  // over all 81 tables, associative or not: 45 isomorphism classes
  std::set<std::string> all_classes;
  EnumerationSpec all2;
  all2.order = 2;
  enumerate(all2, [&](const Hypergroupoid& h) {
    all_classes.insert(structure_to_json(canonical_form(h)));
    return true;
  });
  all2.canonicalize = true;
  EnumerationStats all_canon =
      enumerate(all2, [](const Hypergroupoid&) { return true; });
  CHECK(all_classes.size() == 45);
  CHECK(all_canon.total_tables == 45);
  CHECK(all_canon.associative_count == 17);
}

TEST_CASE("parallel enumeration merges to the serial stats") {
  EnumerationSpec spec;
  spec.order = 2;
  spec.filter = EnumerationFilter::associative_only;
  EnumerationStats serial =
      enumerate(spec, [](const Hypergroupoid&) { return true; });

  std::atomic<std::uint64_t> visited{0};
  EnumerationStats parallel = enumerate_parallel(
      spec,
      [&](const Hypergroupoid&, std::size_t) {
        visited.fetch_add(1);
        return true;
      },
      4);
  CHECK(parallel.total_tables == serial.total_tables);
  CHECK(parallel.associative_count == serial.associative_count);
  CHECK(parallel.regular_count == serial.regular_count);
  CHECK(visited.load() == serial.total_tables);

  // restricted order-3 run as a heavier cross-check
  spec.order = 3;
  spec.cell_alphabet = {{0}, {1}, {2}, {0, 1, 2}};
  serial = enumerate(spec, [](const Hypergroupoid&) { return true; });
  parallel = enumerate_parallel(
      spec, [](const Hypergroupoid&, std::size_t) { return true; }, 4);
  CHECK(parallel.total_tables == serial.total_tables);
  CHECK(parallel.associative_count == serial.associative_count);
  CHECK(parallel.regular_count == serial.regular_count);
  CHECK(serial.associative_count == 562);
}
