#pragma once

#include <stdexcept>
#include <string>

namespace coh {

// Failure classes surfaced through the C API as error codes. Everything
// that reaches a user is either bad input or a violated precondition of a
// documented operation; internal invariant breaks abort via assert instead.
enum class errc {
  invalid_input,
  not_self_dual,
  unsupported_split_partition,
  odd_part,
  invalid_direction,
  not_algebraic,
  complex_place_unsupported,
  non_tempered_nonsplit,
  no_unramified_places,
  check_failed,
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_input: return "InvalidInput";
    case errc::not_self_dual: return "NotSelfDual";
    case errc::unsupported_split_partition: return "UnsupportedSplitPartition";
    case errc::odd_part: return "OddPart";
    case errc::invalid_direction: return "InvalidDirection";
    case errc::not_algebraic: return "NotAlgebraic";
    case errc::complex_place_unsupported: return "ComplexPlaceUnsupported";
    case errc::non_tempered_nonsplit: return "NonTemperedNonsplitComponent";
    case errc::no_unramified_places: return "NoUnramifiedPlaces";
    case errc::check_failed: return "CheckFailed";
  }
  return "Unknown";
}

}  // namespace coh
