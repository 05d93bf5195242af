#include "fsplit/verdict.hpp"

namespace fsplit {

const char* decision_name(Decision d) {
  switch (d) {
    case Decision::Yes: return "yes";
    case Decision::No: return "no";
    case Decision::Unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace fsplit
