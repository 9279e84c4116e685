#pragma once

// The three (n,k) = (8,2) examples, stored as B = 2A.

#include "afi/core.hpp"
#include "afi/text_format.hpp"

namespace afi::testing {

inline SignMatrix fixture_a1() {
  return from_row_strings({"+++++---", "++---+++", "+++++---", "+++++---",
                           "+++++---", "+++++---", "+++++---", "++---+++"});
}

inline SignMatrix fixture_a2() {
  return from_row_strings({"+++-++--", "+++---++", "+++---++", "+++---++",
                           "+++-++--", "+++---++", "+++---++", "+++---++"});
}

inline SignMatrix fixture_a3() {
  return from_row_strings({"+++++---", "+++++---", "+++++---", "+++++---",
                           "++--+++-", "++-+++--", "+++-+-+-", "+++++---"});
}

inline SignMatrix all_ones(std::size_t n) { return SignMatrix(n); }

}  // namespace afi::testing
