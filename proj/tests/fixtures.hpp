#ifndef HSG_TESTS_FIXTURES_HPP_
#define HSG_TESTS_FIXTURES_HPP_

#include "hsg/hypergroupoid.hpp"

namespace hsg::fixtures {

// Left-zero: a o b = {a}. Associative and regular.
inline Hypergroupoid h2l() {
  return Hypergroupoid(2, {{0}, {0}, {1}, {1}});
}

// Full: a o b = {0,1}. Associative and regular.
inline Hypergroupoid h2f() {
  return Hypergroupoid(2, {{0, 1}, {0, 1}, {0, 1}, {0, 1}});
}

// Constant: a o b = {0}. Associative, not regular.
inline Hypergroupoid h2c() {
  return Hypergroupoid(2, {{0}, {0}, {0}, {0}});
}

// Not associative: 0o0={0}, 0o1={0,1}, 1o0={1}, 1o1={0}.
inline Hypergroupoid h2m() {
  return Hypergroupoid(2, {{0}, {0, 1}, {1}, {0}});
}

}  // namespace hsg::fixtures

#endif  // HSG_TESTS_FIXTURES_HPP_
