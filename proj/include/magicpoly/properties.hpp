#pragma once

// Closed-form constants forced on every magic labeling, and the existence
// verdicts that follow from them.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "magicpoly/structure.hpp"

namespace magicpoly {

using Rational = boost::rational<std::int64_t>;

inline bool is_integral(const Rational& r) { return r.denominator() == 1; }

inline std::string to_string(const Rational& r) {
  if (is_integral(r)) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

struct MagicConstants {
  Rational u;  // magic sum
  Rational c;  // center / root value
  // S_1..S_k. For D, S_1 also collects both path endpoints of every ring and
  // therefore differs from S_j, j >= 2.
  std::vector<Rational> layer_sums;
  // D only: (n-2)k*c, the uniform value claimed for every layer including
  // j = 1. Only S_j for j >= 2 actually takes this value.
  std::optional<Rational> stated_uniform_layer_sum;
};

inline MagicConstants constants(const StructureSpec& spec) {
  validate(spec);
  const std::int64_t n = spec.n;
  const std::int64_t k = spec.k;
  MagicConstants mc;
  if (spec.family == Family::MagicP) {
    mc.c = Rational(k * k * n + 4, 4);
    mc.u = Rational(k + 1) * mc.c;
    const Rational s = Rational(k * n * (k * k * n + 4), 8);
    mc.layer_sums.assign(static_cast<std::size_t>(k), s);
  } else {
    mc.c = Rational(k * k * (n - 2) + k + 2, 2);
    mc.u = Rational(k + 1) * mc.c;
    const Rational rest = Rational((n - 2) * k) * mc.c;
    mc.layer_sums.push_back(Rational((n - 1) * k) * mc.c);
    for (std::int64_t j = 2; j <= k; ++j) mc.layer_sums.push_back(rest);
    mc.stated_uniform_layer_sum = rest;
  }
  return mc;
}

enum class Verdict { Exists, NotExists, Unknown };

enum class ExistenceReason {
  ExplicitConstruction,
  OddSideP2,
  ParityD,
  NonIntegerCenter,
  NoKnownResult
};

struct Existence {
  Verdict verdict = Verdict::Unknown;
  ExistenceReason reason = ExistenceReason::NoKnownResult;

  friend bool operator==(const Existence&, const Existence&) = default;
};

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Exists: return "Exists";
    case Verdict::NotExists: return "NotExists";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

inline const char* to_string(ExistenceReason r) {
  switch (r) {
    case ExistenceReason::ExplicitConstruction: return "ExplicitConstruction";
    case ExistenceReason::OddSideP2: return "OddSideP2";
    case ExistenceReason::ParityD: return "ParityD";
    case ExistenceReason::NonIntegerCenter: return "NonIntegerCenter";
    case ExistenceReason::NoKnownResult: return "NoKnownResult";
  }
  return "?";
}

inline Existence exists(const StructureSpec& spec) {
  validate(spec);
  if (spec.family == Family::MagicP) {
    if (spec.k == 2) {
      return spec.n % 2 == 0
                 ? Existence{Verdict::Exists,
                             ExistenceReason::ExplicitConstruction}
                 : Existence{Verdict::NotExists, ExistenceReason::OddSideP2};
    }
  } else {
    if (spec.k % 2 == 1 && spec.n % 2 == 0) {
      return {Verdict::NotExists, ExistenceReason::ParityD};
    }
    if (spec.k == 2) {
      return {Verdict::Exists, ExistenceReason::ExplicitConstruction};
    }
  }
  if (!is_integral(constants(spec).c)) {
    return {Verdict::NotExists, ExistenceReason::NonIntegerCenter};
  }
  return {Verdict::Unknown, ExistenceReason::NoKnownResult};
}

}  // namespace magicpoly
