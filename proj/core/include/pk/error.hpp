#pragma once

#include <stdexcept>
#include <string>

namespace pk {

enum class errc {
  bad_input,
  rank_gap,
  dangling_element,
  no_upward_path,
  duplicate_id,
  unknown_id,
  not_cyclic,
  not_pure,
  rank_mismatch,
  empty_argument,
  not_level,
  composite_not_zero,
  bound_too_large,
  budget_exceeded,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
  error(errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw error(c, msg); }

inline void check(bool ok, errc c, const std::string& msg) {
  if (!ok) fail(c, msg);
}

} // namespace pk
