#pragma once

#include <stdexcept>
#include <string>

namespace braidsurg {

enum class errc {
  letter_out_of_range,
  strand_mismatch,
  index_out_of_range,
  insufficient_twists,
  zero_zero_coefficient,
  not_certified_unknotted,
  not_infinity_framed,
  bad_input,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace braidsurg
