#pragma once

#include <stdexcept>
#include <string>

namespace treegap {

enum class Errc {
  parse_error,
  dangling_partner,
  fixed_point_involution,
  non_positive_index,
  disconnected,
  cycle_inconsistent,
  zero_indeg,
  convergence_failure,
  degenerate_function,
  not_bipartite,
  not_regular,
  empty_or_full_set,
  too_large,
  core_too_small,
  core_not_connected,
  ray_structure,
  decay_violated,
  non_integer_index,
  budget_exceeded,
  invalid_argument,
  io_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace treegap
