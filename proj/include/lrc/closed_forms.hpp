#pragma once

// Closed-form evaluators: cycle/path closeness, the geometric identity
// sum_{j=3..k} j*2^{1-j} = 2 - (k+2)*2^{1-k}, and the piecewise map
// (k, n) -> delta = C(H_{k,n}) - R(H_{k,n}) covering every family of
// Harary graphs together with its small-order regimes.

#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>

#include "lrc/dyadic.hpp"
#include "lrc/errors.hpp"
#include "lrc/harary.hpp"

namespace lrc {

// Stable regime tags; these strings are the CSV/JSON vocabulary.
enum class Regime {
  T1Even,
  T1Odd,
  T2,
  T3_4k,
  T3_4k2,
  T4,
  T4Small05,
  T4Small075,
  T5,
  T5Small05,
  T5Small075,
  T6_4p1,
  T6_4p3,
  T6SmallH35,
  T6SmallH37,
  T7,
  T7Small05,
  T7Small075,
  T7Small1,
  T8,
  T8Small05,
  T8Small075,
  T8Small1,
};

inline std::string_view regime_tag(Regime r) {
  switch (r) {
    case Regime::T1Even: return "T1_even";
    case Regime::T1Odd: return "T1_odd";
    case Regime::T2: return "T2";
    case Regime::T3_4k: return "T3_4k";
    case Regime::T3_4k2: return "T3_4k2";
    case Regime::T4: return "T4";
    case Regime::T4Small05: return "T4_small_05";
    case Regime::T4Small075: return "T4_small_075";
    case Regime::T5: return "T5";
    case Regime::T5Small05: return "T5_small_05";
    case Regime::T5Small075: return "T5_small_075";
    case Regime::T6_4p1: return "T6_4p1";
    case Regime::T6_4p3: return "T6_4p3";
    case Regime::T6SmallH35: return "T6_small_H35";
    case Regime::T6SmallH37: return "T6_small_H37";
    case Regime::T7: return "T7";
    case Regime::T7Small05: return "T7_small_05";
    case Regime::T7Small075: return "T7_small_075";
    case Regime::T7Small1: return "T7_small_1";
    case Regime::T8: return "T8";
    case Regime::T8Small05: return "T8_small_05";
    case Regime::T8Small075: return "T8_small_075";
    case Regime::T8Small1: return "T8_small_1";
  }
  return "?";
}

enum class Family {
  H2,          // k = 2 (cycle)
  H2pEvenK,    // k = 2p even, p > 1
  H3EvenN,     // k = 3, n even
  H5EvenN,     // k = 5, n even
  HOddKEvenN,  // k odd >= 7, n even
  H3OddN,      // k = 3, n odd
  H5OddN,      // k = 5, n odd
  HOddKOddN,   // k odd >= 7, n odd
};

// Exactly one family per valid (k, n).
inline Family family_of(int k, int n) {
  if (k == 2) return Family::H2;
  if (k % 2 == 0) return Family::H2pEvenK;
  bool even_n = n % 2 == 0;
  if (k == 3) return even_n ? Family::H3EvenN : Family::H3OddN;
  if (k == 5) return even_n ? Family::H5EvenN : Family::H5OddN;
  return even_n ? Family::HOddKEvenN : Family::HOddKOddN;
}

struct DeltaResult {
  Dyadic delta;
  Regime regime;
  // Floor-function parameter of the theorem branch; absent for the fixed
  // small-order constants.
  std::optional<int> theorem_param;
};

inline Dyadic closeness_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle closeness needs n >= 3");
  int k = n / 2;
  if (n % 2 == 0)  // C(C_{2k}) = 4k - 6k*2^{-k}
    return Dyadic(4 * k) - Dyadic(6 * k) * Dyadic::pow2(-k);
  // C(C_{2k+1}) = 2(2k+1) - 2(2k+1)*2^{-k}
  return Dyadic(2 * n) - Dyadic(2 * n) * Dyadic::pow2(-k);
}

inline Dyadic closeness_path(int n) {
  if (n < 1) throw std::invalid_argument("path closeness needs n >= 1");
  return Dyadic(2 * n - 4) + Dyadic::pow2(2 - n);
}

// lhs = sum_{j=3..k} j*2^{1-j} summed term by term; rhs = 2 - (k+2)*2^{1-k}.
inline std::pair<Dyadic, Dyadic> geometric_identity(int k) {
  if (k < 3) throw std::invalid_argument("geometric identity needs k >= 3");
  Dyadic lhs;
  for (int j = 3; j <= k; ++j) lhs += Dyadic(j) * Dyadic::pow2(1 - j);
  Dyadic rhs = Dyadic(2) - Dyadic(k + 2) * Dyadic::pow2(1 - k);
  return {lhs, rhs};
}

namespace detail {

inline Dyadic half() { return Dyadic(1, 1); }            // 0.5
inline Dyadic three_quarters() { return Dyadic(3, 2); }  // 0.75

// 2 - (kappa+2)*2^{-kappa}: the even-order theorem shape (T2, T4, T5).
inline Dyadic delta_even_shape(int kappa) {
  return Dyadic(2) - Dyadic(kappa + 2) * Dyadic::pow2(-kappa);
}

// 4 - (3p+4)*2^{-p}: the odd-order theorem shape (T6 n=4p+1, T7, T8).
inline Dyadic delta_odd_shape(int p) {
  return Dyadic(4) - Dyadic(3 * p + 4) * Dyadic::pow2(-p);
}

}  // namespace detail

// delta = C(H_{k,n}) - R(H_{k,n}) for the regime containing (k, n).
inline DeltaResult delta_link(int k, int n) {
  HararyParams::validate(k, n);
  switch (family_of(k, n)) {
    case Family::H2: {
      // Cycle minus path, split by parity of n.
      int kk = n / 2;
      if (n % 2 == 0) {
        Dyadic d = Dyadic(4) - Dyadic::pow2(2 - 2 * kk) -
                   Dyadic(3 * kk) * Dyadic::pow2(1 - kk);
        return {d, Regime::T1Even, kk};
      }
      Dyadic d = Dyadic(4) - Dyadic::pow2(1 - 2 * kk) -
                 Dyadic(2 * kk + 1) * Dyadic::pow2(1 - kk);
      return {d, Regime::T1Odd, kk};
    }
    case Family::H2pEvenK: {
      int p = k / 2;
      int kappa = (n - 1) / (2 * p);
      return {detail::delta_even_shape(kappa), Regime::T2, kappa};
    }
    case Family::H3EvenN: {
      if (n % 4 == 0) {  // 3 - (2k+3)*2^{-k} at n = 4k
        int kk = n / 4;
        Dyadic d = Dyadic(3) - Dyadic(2 * kk + 3) * Dyadic::pow2(-kk);
        return {d, Regime::T3_4k, kk};
      }
      int kk = (n - 2) / 4;  // 3 - 3(k+2)*2^{-1-k} at n = 4k+2
      Dyadic d = Dyadic(3) - Dyadic(3 * (kk + 2)) * Dyadic::pow2(-1 - kk);
      return {d, Regime::T3_4k2, kk};
    }
    case Family::H5EvenN: {
      int m = n / 2;
      if (m <= 4) return {detail::half(), Regime::T4Small05, std::nullopt};
      if (m <= 6)
        return {detail::three_quarters(), Regime::T4Small075, std::nullopt};
      int kappa = (m + 1) / 4;
      return {detail::delta_even_shape(kappa), Regime::T4, kappa};
    }
    case Family::HOddKEvenN: {
      int p = (k - 1) / 2;
      int m = n / 2;
      if (m <= 2 * p) return {detail::half(), Regime::T5Small05, std::nullopt};
      if (m <= 3 * p)
        return {detail::three_quarters(), Regime::T5Small075, std::nullopt};
      int kappa = (m + p - 1) / (2 * p);
      return {detail::delta_even_shape(kappa), Regime::T5, kappa};
    }
    case Family::H3OddN: {
      int m = (n - 1) / 2;
      if (m == 2) return {detail::half(), Regime::T6SmallH35, std::nullopt};
      if (m == 3) return {Dyadic(1), Regime::T6SmallH37, std::nullopt};
      if (m % 2 == 0) {  // n = 4p+1, p > 1
        int p = m / 2;
        return {detail::delta_odd_shape(p), Regime::T6_4p1, p};
      }
      int p = (m - 1) / 2;  // n = 4p+3, p > 1: 4 - (5p+8)*2^{-p-1}
      Dyadic d = Dyadic(4) - Dyadic(5 * p + 8) * Dyadic::pow2(-p - 1);
      return {d, Regime::T6_4p3, p};
    }
    case Family::H5OddN: {
      int m = (n - 1) / 2;
      if (m <= 4) return {detail::half(), Regime::T7Small05, std::nullopt};
      if (m == 5)
        return {detail::three_quarters(), Regime::T7Small075, std::nullopt};
      if (m == 6) return {Dyadic(1), Regime::T7Small1, std::nullopt};
      int p = (m + 1) / 4;
      return {detail::delta_odd_shape(p), Regime::T7, p};
    }
    case Family::HOddKOddN: {
      int q = (k - 1) / 2;
      int m = (n - 1) / 2;
      if (m <= 2 * q) return {detail::half(), Regime::T8Small05, std::nullopt};
      // 0.75 strictly below m = 3q, then the single constant 1 at m = 3q;
      // both boundaries encoded as stated.
      if (m < 3 * q)
        return {detail::three_quarters(), Regime::T8Small075, std::nullopt};
      if (m == 3 * q) return {Dyadic(1), Regime::T8Small1, std::nullopt};
      int p = (m + q - 1) / (2 * q);
      return {detail::delta_odd_shape(p), Regime::T8, p};
    }
  }
  throw UncoveredRegimeError(k, n);
}

// Fully closed-form residual closeness of H_{2,n}; equals closeness_path(n).
inline Dyadic residual_closed_form_h2(int n) {
  if (n < 3) throw std::invalid_argument("H_{2,n} needs n >= 3");
  return closeness_cycle(n) - delta_link(2, n).delta;
}

}  // namespace lrc
