#include "braidsurg/errors.hpp"

namespace braidsurg {

const char* errc_name(errc c) {
  switch (c) {
    case errc::letter_out_of_range: return "LetterOutOfRange";
    case errc::strand_mismatch: return "StrandMismatch";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::insufficient_twists: return "InsufficientTwists";
    case errc::zero_zero_coefficient: return "ZeroZeroCoefficient";
    case errc::not_certified_unknotted: return "NotCertifiedUnknotted";
    case errc::not_infinity_framed: return "NotInfinityFramed";
    case errc::bad_input: return "BadInput";
  }
  return "UnknownError";
}

}  // namespace braidsurg
