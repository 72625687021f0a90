// Named test groups shared by the unit and acceptance suites.
#pragma once

#include <string>
#include <vector>

#include "motionforge/catalog.hpp"

namespace corpus {

// Orders are all at most 10^4.
inline const std::vector<std::string>& small_group_names() {
  static const std::vector<std::string> names = {
      "S1",        "S2",        "S3",         "S4",         "S5",         "S6",         "S7",
      "A3",        "A4",        "A5",         "A6",         "A7",         "C2",         "C3",
      "C4",        "C5",        "C6",         "C7",         "C8",         "C12",        "D3",
      "D4",        "D5",        "D6",         "D7",         "D8",         "D10",        "S3 x S3",
      "S4 x C2",   "A5 x C2",   "C2 wr C2",   "C2 wr C3",   "C3 wr C2",   "S3 wr C2",   "S4 wr C2",
      "C2 wr S3",  "D4 x C3",   "C5 x C5",    "D5 x D5",    "AGL(1,5)",   "AGL(1,7)",   "AGL(2,2)",
      "AGL(2,3)",  "AGL(3,2)",  "PSL(2,5)",   "PSL(2,7)",   "PSL(3,2)",   "PSL(2,8)",   "PSL(2,11)",
      "M11",       "T(5)",      "T(6)",       "L(3)",       "L(4)",       "C2 wr C2 wr C2", "A4 x C3",
  };
  return names;
}

inline mf::PermGroup group(const std::string& name) { return mf::named_group(name); }

}  // namespace corpus
