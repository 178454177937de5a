#include "etalab/eta/types.hpp"

#include <algorithm>

namespace etalab::eta {

std::string to_string(EvalMethod m) {
  switch (m) {
    case EvalMethod::kDirectSum: return "direct-sum";
    case EvalMethod::kEulerMaclaurin: return "euler-maclaurin";
    case EvalMethod::kAcceleration: return "acceleration";
    case EvalMethod::kHurwitzPair: return "hurwitz-pair";
  }
  return "unknown";
}

std::string to_string(TailMethod m) {
  switch (m) {
    case TailMethod::kHurwitzPair: return "hurwitz-pair";
    case TailMethod::kDirectAccel: return "direct-accel";
    case TailMethod::kBrute: return "brute";
  }
  return "unknown";
}

TailMethod parse_tail_method(const std::string& name) {
  if (name == "hurwitz-pair") return TailMethod::kHurwitzPair;
  if (name == "direct-accel") return TailMethod::kDirectAccel;
  if (name == "brute") return TailMethod::kBrute;
  throw ParseError("unknown tail method '" + name + "'", 1);
}

EMConfig EMConfig::for_precision(Precision prec) {
  EMConfig cfg;
  cfg.shift_target = std::max<long>(2 * prec.decimal_digits(), 16);
  return cfg;
}

void EMConfig::validate(Precision prec) const {
  if (shift_target < 2 * prec.decimal_digits()) {
    throw ConfigError("shift_target must be at least twice the decimal digit target (" +
                      std::to_string(2 * prec.decimal_digits()) + ")");
  }
  if (max_correction_terms < 1 || 2 * max_correction_terms > 10000) {
    throw ConfigError("max_correction_terms must be in [1, 5000]");
  }
  if (guard_bits < 0) throw ConfigError("guard_bits must be non-negative");
}

}  // namespace etalab::eta
