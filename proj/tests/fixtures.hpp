#ifndef SCLD_TESTS_FIXTURES_HPP
#define SCLD_TESTS_FIXTURES_HPP

#include "scld/code.hpp"

namespace fixture {

inline scld::Code c1() { return scld::Code::from_rows(2, {{0, 0, 1}, {1, 0, 1}, {1, 1, 0}}); }
inline scld::Code c2() { return scld::Code::from_rows(2, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }
inline scld::Code repetition3() { return scld::Code::from_rows(3, {{0, 0}, {1, 1}, {2, 2}}); }
inline scld::Code cube2() { return scld::Code::from_rows(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}); }

}  // namespace fixture

#endif
