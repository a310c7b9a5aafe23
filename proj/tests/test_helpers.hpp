#pragma once

#include <doctest.h>

#include <set>
#include <string>

#include "ringdef/error.hpp"
#include "ringdef/ring.hpp"

#define CHECK_ERROR(expr, expected_code)                    \
  do {                                                      \
    bool thrown_ = false;                                   \
    try {                                                   \
      (void)(expr);                                         \
    } catch (const ringdef::Error& e_) {                    \
      thrown_ = true;                                       \
      CHECK(e_.code() == (expected_code));                  \
    }                                                       \
    CHECK_MESSAGE(thrown_, "expected an error from " #expr); \
  } while (0)

namespace ringdef::testing {

inline std::set<std::string> encode_all(const RingSpec& ring,
                                        const std::vector<Elem>& es) {
  std::set<std::string> out;
  for (const Elem& e : es) out.insert(ring.encode(e));
  return out;
}

}  // namespace ringdef::testing
