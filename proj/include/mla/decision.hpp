// Tri-state result for semi-decidable checks.
#pragma once

#include <string>
#include <vector>

#include "mla/exactlin.hpp"

namespace mla {

enum class Verdict { Yes, No, Unknown };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    default: return "unknown";
  }
}

struct Decision {
  Verdict verdict = Verdict::Unknown;
  std::string reason;
  std::vector<Vec> vectors;    // witness vectors
  std::vector<Matrix> matrices;  // witness operators

  bool is_yes() const { return verdict == Verdict::Yes; }
  bool is_no() const { return verdict == Verdict::No; }
  bool is_unknown() const { return verdict == Verdict::Unknown; }

  static Decision yes(std::string r = {}) { return {Verdict::Yes, std::move(r), {}, {}}; }
  static Decision no(std::string r = {}) { return {Verdict::No, std::move(r), {}, {}}; }
  static Decision unknown(std::string r = {}) { return {Verdict::Unknown, std::move(r), {}, {}}; }
};

// Conjunction: No dominates, then Unknown.
inline Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::No || b == Verdict::No) return Verdict::No;
  if (a == Verdict::Unknown || b == Verdict::Unknown) return Verdict::Unknown;
  return Verdict::Yes;
}

// Result of a boolean verification with a human-readable location of the first failure.
struct Check {
  bool ok = true;
  std::string violation;
  explicit operator bool() const { return ok; }
  static Check pass() { return {}; }
  static Check fail(std::string v) { return {false, std::move(v)}; }
};

}  // namespace mla
