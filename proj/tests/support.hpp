#pragma once

// Test-side oracles written independently of the engine's reduction code.

#include <map>
#include <optional>
#include <random>
#include <string>

#include "russell/lnd.hpp"
#include "russell/parser.hpp"
#include "russell/quotient.hpp"

namespace russell::testing {

inline Polynomial P(const std::string& src) { return parse(src, xyzt_context()); }
inline RingElement A(const std::string& src) { return nf(ring_a(), src); }
inline RingElement B(const std::string& src) { return nf(ring_b(), src); }
inline std::string S(const RingElement& a) { return to_string(a); }

/// Plain Horner-free evaluation: sum of c * prod v^e over the terms.
Rational evaluate(const Polynomial& f, const std::map<std::string, Rational, std::less<>>& at);

/// x-adic order after y := -(x + z^3 + t^2) / x^2, by binomial expansion.
/// Returns minus that order (the pole order), or nullopt when f vanishes on X.
std::optional<int> pole_order(const Polynomial& f);

/// Point of X (or of W if `graded`) from an integer draw with x != 0.
std::map<std::string, Rational, std::less<>> point_on(bool graded, std::mt19937_64& rng);

/// Derivation images iterated by hand: d^k(g) for k = 0.. until zero.
int order_by_iteration(const Derivation& d, const std::string& gen, int cap = 64);

}  // namespace russell::testing
