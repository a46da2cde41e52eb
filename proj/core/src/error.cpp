#include "pk/error.hpp"

namespace pk {

const char* errc_name(errc c) {
  switch (c) {
    case errc::bad_input: return "BadInput";
    case errc::rank_gap: return "RankGap";
    case errc::dangling_element: return "DanglingElement";
    case errc::no_upward_path: return "NoUpwardPath";
    case errc::duplicate_id: return "DuplicateId";
    case errc::unknown_id: return "UnknownId";
    case errc::not_cyclic: return "NotCyclic";
    case errc::not_pure: return "NotPure";
    case errc::rank_mismatch: return "RankMismatch";
    case errc::empty_argument: return "EmptyArgument";
    case errc::not_level: return "NotLevel";
    case errc::composite_not_zero: return "CompositeNotZero";
    case errc::bound_too_large: return "BoundTooLarge";
    case errc::budget_exceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

} // namespace pk
